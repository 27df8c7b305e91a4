import pytest

from dawcox import presentation as pr

FAMILIES = [
    "dddotA1", "dddotA2", "dddotA3", "dddotB3", "dddotB4", "dddotC2",
    "dddotC3", "dddotD4", "dddotF4", "dddotG2",
    "ddotB3", "ddotB4", "ddotC3", "ddotC4", "ddotB2", "ddotF4", "ddotG2",
]

STARS = ["dddotC1star", "dddotC2star", "dddotC3star"]


@pytest.mark.parametrize("name", FAMILIES + STARS)
def test_verify_presentation(name):
    report = pr.verify_presentation(name)
    assert report["failures"] == [], report["failures"][:3]
    assert report["relations_checked"] > 0


def test_verify_presentation_e6():
    report = pr.verify_presentation("dddotE6")
    assert report["failures"] == []


def test_elliptic_relations_only_for_ell0_2():
    p1 = pr.build_presentation("dddotC2")
    assert sum(1 for n, _, _ in p1.relations if n.startswith("ellbraid")) == 3
    p2 = pr.build_presentation("dddotB3")
    assert not any(n.startswith("ellbraid") for n, _, _ in p2.relations)
    p3 = pr.build_presentation("dddotA1")  # ell0 = 4: no elliptic relations
    assert not any(n.startswith("ellbraid") for n, _, _ in p3.relations)


def test_central_image_is_tau_delta():
    for name in ["dddotA2", "dddotC2", "ddotB3", "ddotG2"]:
        gd = pr.phi_dictionary(name)
        c = gd.central_image()
        assert c.is_central_power() and c.k == 1


def test_finite_generator_images_are_involutions():
    gd = pr.phi_dictionary("dddotC2")
    for i in (1, 2):
        img = gd.images[f"T{i}"]
        assert (img * img).is_identity()


def test_theta02_image_squares_to_identity_in_cn1():
    # (s_0 tau_{alpha_0^v})^2 = 1 in the C_n^(1) double affine Weyl group
    from dawcox import dagroup

    ctx = dagroup.context("C2(1)")
    g = ctx.s(0) * ctx.tau_alpha0()
    assert (g * g).is_identity()


def test_superfluous_branch_star_relations():
    gd = pr.phi_dictionary("dddotC2star")
    # the square relation in the half-delta quotient
    sq = gd.evaluate((("Theta02", 2),), half=True)
    assert sq.is_identity()
    # the central identification in the plain A_4^(2) quotient
    sq2 = gd.evaluate((("Theta02", 2),), half=False)
    c = gd.central_image(half=False)
    assert sq2 == c and sq2.k == 1


@pytest.mark.parametrize("name", ["ddotB3", "ddotC3", "ddotB2", "ddotF4"])
def test_b2_pattern(name):
    results = pr.b2_pattern_check(name)
    assert all(results.values()), results


@pytest.mark.parametrize("name", ["ddotB3", "ddotC3", "ddotB2", "ddotF4", "ddotG2"])
def test_central_word_rewrites(name):
    out = pr.central_word_rewrites(name)
    assert out and all(out.values()), out


@pytest.mark.parametrize("name", ["dddotA2", "dddotB3", "dddotD4", "dddotF4", "dddotG2"])
def test_theta02_expression(name):
    assert pr.theta02_expression_check(name)


def test_theta02_expression_rejects_bad_input():
    with pytest.raises(ValueError):
        pr.theta02_expression_check("dddotC2")


@pytest.mark.parametrize("name", ["dddotB3", "ddotB3", "ddotG2", "ddotF4"])
def test_distinguished_elements(name):
    els = pr.distinguished_elements(name)
    assert "w0" in els
    if "ThetaPrime" in els:
        assert els["Psi"] == (els["Phi"] * els["Theta"]).inv()


def test_distinguished_simply_laced():
    els = pr.distinguished_elements("dddotA2")
    assert els["Psi"].is_identity()
    assert els["Theta"] == els["Phi"]


def test_psi_untwisted_theta_word():
    # psi(X_{theta^v}) = Theta03 Theta: its image is tau_{theta^v}
    gd = pr.phi_dictionary("dddotB3")
    pres = gd.presentation
    word = pr.wmul((("Theta03", 1),), pres.theta_word)
    ctx = gd.ctx
    assert gd.evaluate(word) == ctx.tau(ctx.rs.coroot(ctx.rs.theta))


def test_psi_twisted_phi_word():
    # psi(X_{phi^v}) = Phi0 Phi
    gd = pr.phi_dictionary("ddotF4")
    pres = gd.presentation
    word = pr.wmul((("Phi0", 1),), pres.phi_word)
    ctx = gd.ctx
    assert gd.evaluate(word) == ctx.tau(ctx.rs.coroot(ctx.rs.phi))
