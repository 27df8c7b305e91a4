"""The double affine Weyl group in the normal form w * lam_mu * tau_beta
* tau_delta^k.

mu lives in the lattice M (spanned by A_i = e_i alpha_i), beta in the
nu-image of the finite coroot lattice, and k is the central tau_delta
exponent (a half-integer only in the central extension used for the
A_{2n}^(2) comparison).  Multiplication moves factors into this order
using the semidirect relations; the commutation of lam and tau picks up
the cocycle tau_delta^{(beta, mu)}.

The defining affine action on the weight space is implemented
independently of the multiplication and serves as its oracle: the linear
action of translation elements of the affine Weyl group follows the
standard formula

    lam_mu(x) = x + (x, delta) mu - ((x, mu) + (mu, mu)/2 (x, delta)) delta

while tau_beta is the honest translation by beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import weyl
from .rootsys import (
    RootSystemData,
    Vec,
    build,
    parse_label,
    vadd,
    vneg,
    vscale,
    vsub,
    vzero,
)
from .weyl import WeylElement, WeylGroup, reflect

_F0 = Fraction(0)
_F1 = Fraction(1)


class DaweylContext:
    """A root system together with its Weyl group caches and the data
    needed for normal forms and alcove walks."""

    def __init__(self, rs: RootSystemData, half_delta: bool = False):
        self.rs = rs
        self.wg = WeylGroup(rs)
        self.half_delta = half_delta
        n = rs.n
        self.nfin = n
        self.zero = vzero(rs.dim)
        self.s_theta = reflect(rs, rs.theta)
        self.nu_theta_v = rs.coroot(rs.theta)  # = a_0^{-1} theta
        # X-side affine reflection data: c = theta for untwisted or
        # A_{2n}^(2), phi otherwise (the root with X_{c^v} Phi^{-1} etc.)
        self.c_root = rs.theta if not rs.is_twisted_proper() else rs.phi
        self.s_c = reflect(rs, self.c_root)
        self.nu_c_v = rs.coroot(self.c_root)

    @property
    def n(self) -> int:
        return self.rs.n

    def identity(self) -> "DaweylElement":
        return DaweylElement(self, self.wg.id, self.zero, self.zero, _F0)

    # -- generators ----------------------------------------------------

    def s(self, i: int) -> "DaweylElement":
        """Simple reflection; i = 0 gives s_theta lam_{-a0^{-1} theta}."""
        if i == 0:
            return DaweylElement(
                self, self.s_theta, vneg(self.nu_theta_v), self.zero, _F0
            )
        return DaweylElement(self, self.wg.simples[i - 1], self.zero, self.zero, _F0)

    def lam(self, mu: Vec) -> "DaweylElement":
        return DaweylElement(self, self.wg.id, mu, self.zero, _F0)

    def tau(self, beta: Vec) -> "DaweylElement":
        return DaweylElement(self, self.wg.id, self.zero, beta, _F0)

    def tau_delta(self, k=1) -> "DaweylElement":
        return DaweylElement(self, self.wg.id, self.zero, self.zero, Fraction(k))

    def tau_alpha0(self) -> "DaweylElement":
        """tau_{alpha_0^v}: nu(alpha_0^v) = delta - a_0 nu(theta^v)."""
        return DaweylElement(
            self,
            self.wg.id,
            self.zero,
            vneg(vscale(self.rs.a0, self.nu_theta_v)),
            _F1,
        )

    def w(self, el: WeylElement) -> "DaweylElement":
        return DaweylElement(self, el, self.zero, self.zero, _F0)

    def generator(self, symbol: str) -> "DaweylElement":
        """Symbols: s0..sn, lam_A1.., tau_a1.., tau_alpha0, tau_delta."""
        if symbol == "tau_delta":
            return self.tau_delta()
        if symbol == "tau_alpha0":
            return self.tau_alpha0()
        if symbol.startswith("s"):
            return self.s(int(symbol[1:]))
        if symbol.startswith("lam_A"):
            i = int(symbol[5:])
            return self.lam(self.rs.m_basis()[i - 1])
        if symbol.startswith("tau_a"):
            i = int(symbol[5:])
            return self.tau(self.rs.simple_coroots()[i - 1])
        raise ValueError(f"unknown generator symbol {symbol!r}")

    # -- linear action of translation elements of W --------------------

    def lam_linear(self, mu: Vec, x: Vec) -> Vec:
        # (x, delta) is the Lambda0-coefficient of x, and mu is finite,
        # so only the finite Gram block enters (x, mu) and (mu, mu).
        rs = self.rs
        n = rs.n
        xd = x[n + 1]
        gram = rs.gram
        xmu = sum(
            (
                x[i] * sum((mu[j] * gram[i][j] for j in range(n) if mu[j]), _F0)
                for i in range(n)
                if x[i]
            ),
            _F0,
        )
        mumu = sum(
            (
                mu[i] * sum((mu[j] * gram[i][j] for j in range(n) if mu[j]), _F0)
                for i in range(n)
                if mu[i]
            ),
            _F0,
        )
        coeff = xmu + mumu / 2 * xd
        out = list(x) if not xd else [a + xd * b for a, b in zip(x, mu)]
        out[n] -= coeff
        return tuple(out)

    def pairing_int(self, beta: Vec, mu: Vec) -> Fraction:
        return self.rs.bilinear(beta, mu)


@dataclass(frozen=True)
class DaweylElement:
    ctx: DaweylContext
    w: WeylElement
    mu: Vec
    beta: Vec
    k: Fraction

    def __mul__(self, other: "DaweylElement") -> "DaweylElement":
        if self.ctx is not other.ctx:
            raise ValueError("mixed root systems")
        w2inv = other.w.inv()
        mu1 = w2inv.act(self.mu)
        beta1 = w2inv.act(self.beta)
        k = self.k + other.k + self.ctx.pairing_int(beta1, other.mu)
        return DaweylElement(
            self.ctx,
            self.w * other.w,
            vadd(mu1, other.mu),
            vadd(beta1, other.beta),
            k,
        )

    def inv(self) -> "DaweylElement":
        winv = self.w.inv()
        mu = vneg(self.w.act(self.mu))
        beta = vneg(self.w.act(self.beta))
        k = -self.k + self.ctx.pairing_int(self.beta, self.mu)
        return DaweylElement(self.ctx, winv, mu, beta, k)

    def __pow__(self, e: int) -> "DaweylElement":
        if e < 0:
            return self.inv() ** (-e)
        out = self.ctx.identity()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DaweylElement)
            and self.w == other.w
            and self.mu == other.mu
            and self.beta == other.beta
            and self.k == other.k
        )

    def __hash__(self) -> int:
        return hash((self.w, self.mu, self.beta, self.k))

    def is_identity(self) -> bool:
        return (
            self.w.is_identity()
            and not any(self.mu)
            and not any(self.beta)
            and self.k == 0
        )

    def is_central_power(self) -> bool:
        """True if the element is tau_delta^k for some k."""
        return self.w.is_identity() and not any(self.mu) and not any(self.beta)

    def act(self, p: Vec) -> Vec:
        """The defining affine action on the weight space."""
        ctx = self.ctx
        rs = ctx.rs
        out = vadd(p, vscale(self.k, rs.delta))
        out = vadd(out, self.beta)
        out = ctx.lam_linear(self.mu, out)
        return self.w.act(out)

    def conj(self, other: "DaweylElement") -> "DaweylElement":
        return self * other * self.inv()

    def describe(self) -> str:
        n = self.ctx.n
        word = self.ctx.wg.reduced_word(self.w)
        mu = ",".join(str(c) for c in self.mu[:n])
        beta = ",".join(str(c) for c in self.beta[:n])
        return f"w=[{' '.join(map(str, word))}] mu=[{mu}] beta=[{beta}] k={self.k}"


def context(label, half_delta: bool = False) -> DaweylContext:
    if isinstance(label, str):
        label = parse_label(label)
    return DaweylContext(build(label), half_delta=half_delta)


def evaluate(ctx: DaweylContext, word) -> DaweylElement:
    """Evaluate a word of (generator symbol, exponent) pairs."""
    out = ctx.identity()
    for sym, e in word:
        g = ctx.generator(sym) if isinstance(sym, str) else sym
        out = out * g**e
    return out


# ---------------------------------------------------------------------
# Alcove walks: decompositions of lattice translations over the two
# affine Coxeter subgroups of the double affine Weyl group.
# ---------------------------------------------------------------------


class AffineWalk:
    """Reduced-word extraction in an affine Coxeter group given by the
    finite simple reflections plus one affine reflection.

    The affine group acts on the finite weight space by x -> s_c(x) +
    nu(c^v) for the affine generator; the walls of the fundamental
    alcove are (x, alpha_i^v) = 0 and (x, c^v) = kappa.
    """

    def __init__(self, ctx: DaweylContext, kind: str):
        # kind "lam": the subgroup <s_0..s_n> = W, decomposing lam_mu.
        # kind "tau": the subgroup <t_0, s_1..s_n>, decomposing tau_beta,
        #             with t_0 = tau_{c^v} s_c.
        self.ctx = ctx
        self.kind = kind
        rs = ctx.rs
        if kind == "lam":
            self.c_root = rs.theta
            self.aff_gen = ctx.s(0)
        elif kind == "tau":
            self.c_root = ctx.c_root
            self.aff_gen = ctx.tau(ctx.nu_c_v) * ctx.w(ctx.s_c)
        else:
            raise ValueError(kind)
        self.c_coroot = rs.coroot(self.c_root)
        self.kappa = Fraction(2) / rs.bilinear(self.c_root, self.c_root)
        self.simple_coroots = rs.simple_coroots()
        self.base = self._base_point()

    def _wall_values(self, x: Vec):
        rs = self.ctx.rs
        vals = [rs.bilinear(x, av) for av in self.simple_coroots]
        vals.append(self.kappa - rs.bilinear(x, self.c_coroot))
        return vals

    def _base_point(self) -> Vec:
        # A generic interior point of the fundamental alcove: prescribe
        # small unequal positive values for (x, alpha_i^v) and shrink
        # until the affine wall value is positive too.
        from .rootsys import _solve

        rs = self.ctx.rs
        n = rs.n
        basis = [
            tuple(_F1 if j == i else _F0 for j in range(n)) + (_F0, _F0)
            for i in range(n)
        ]
        pairing = [
            [rs.bilinear(basis[j], self.simple_coroots[i]) for j in range(n)]
            for i in range(n)
        ]
        for attempt in range(1, 40):
            denom = 1 << attempt
            rhs = [Fraction(i + 2, (i + 3) * denom) for i in range(n)]
            sol = _solve(pairing, rhs)
            x = tuple(sol) + (_F0, _F0)
            vals = self._wall_values(x)
            if all(v > 0 for v in vals):
                return x
        raise RuntimeError("no interior base point found")

    def _apply(self, i: int, x: Vec) -> Vec:
        """Apply generator i (0 = affine) to a point of the finite space."""
        rs = self.ctx.rs
        if i == 0:
            y = vsub(x, vscale(rs.bilinear(x, self.c_coroot) - self.kappa, self.c_root))
            return y
        a = rs.simple_roots[i - 1]
        return vsub(x, vscale(rs.bilinear(x, rs.coroot(a)), a))

    def word_for(self, g: DaweylElement):
        """A reduced word (tuple of indices, 0 = affine generator) with
        g = prod of generators, valid when g lies in the subgroup."""
        target = self._point_of(g)
        word = []
        x = target
        guard = 0
        while True:
            vals = self._wall_values(x)
            neg = [i for i, v in enumerate(vals) if v < 0]
            if not neg:
                break
            # wall index n is the affine wall -> generator 0
            wall = neg[0]
            gen = 0 if wall == self.ctx.rs.n else wall + 1
            x = self._apply(gen, x)
            word.append(gen)
            guard += 1
            if guard > 100000:
                raise RuntimeError("alcove walk did not terminate")
        assert x == self.base, "element is not in this affine subgroup"
        return tuple(word)

    def _point_of(self, g: DaweylElement) -> Vec:
        """Image of the base point under g through the subgroup action."""
        # For "lam": g = w lam_mu acts on the level-one slice: the finite
        # image of the base point under the defining action with
        # Lambda0-coefficient 1.  For "tau": g = w tau_beta acts by
        # w(x) + w(beta) on the finite space.
        rs = self.ctx.rs
        if self.kind == "lam":
            p = self.base[: rs.n] + (_F0, _F1)
            q = g.act(p)
            return q[: rs.n] + (_F0, _F0)
        q = g.w.act(vadd(self.base, g.beta))
        return q

    def evaluate(self, word) -> DaweylElement:
        out = self.ctx.identity()
        for i in word:
            out = out * (self.aff_gen if i == 0 else self.ctx.s(i))
        return out


def lam_word(ctx: DaweylContext, mu: Vec):
    """Word in s_0..s_n for lam_mu (indices, 0 = affine node)."""
    walk = _walk(ctx, "lam")
    g = ctx.lam(mu)
    word = walk.word_for(g)
    assert walk.evaluate(word) == g
    return word


def tau_word(ctx: DaweylContext, beta: Vec):
    """Word in t_0, s_1..s_n for tau_beta (0 denotes t_0)."""
    walk = _walk(ctx, "tau")
    g = ctx.tau(beta)
    word = walk.word_for(g)
    assert walk.evaluate(word) == g
    return word


def _walk(ctx: DaweylContext, kind: str) -> AffineWalk:
    cache = getattr(ctx, "_walks", None)
    if cache is None:
        cache = {}
        ctx._walks = cache
    if kind not in cache:
        cache[kind] = AffineWalk(ctx, kind)
    return cache[kind]


# ---------------------------------------------------------------------
# Bernstein-type relation verification in the Weyl quotient
# ---------------------------------------------------------------------


def verify_bernstein_relations(label) -> dict:
    """Project the Bernstein-presentation relations to the double affine
    Weyl group and check each as a normal-form equality."""
    ctx = context(label)
    rs = ctx.rs
    n = rs.n
    checks = []
    failures = []

    def record(name, lhs, rhs):
        ok = lhs == rhs
        checks.append((name, ok))
        if not ok:
            failures.append(
                {"relation": name, "lhs_nf": lhs.describe(), "rhs_nf": rhs.describe()}
            )

    simple_cor = rs.simple_coroots()
    s = [ctx.s(i) for i in range(n + 1)]
    t0 = s[0]

    # Finite commutation/conjugation relations for representative
    # beta with the required pairings.
    betas = list(simple_cor) + [vneg(b) for b in simple_cor]
    betas += [vadd(a, b) for a in simple_cor for b in simple_cor]
    for i in range(1, n + 1):
        ai = rs.simple_roots[i - 1]
        for b in betas:
            pair = rs.bilinear(b, ai)
            tb = ctx.tau(b)
            if pair == 0:
                record(f"xcomm i={i}", s[i] * tb, tb * s[i])
            elif pair == -1:
                sb = ctx.tau(ctx.wg.simples[i - 1].act(b))
                record(f"xconj i={i}", s[i] * tb * s[i], sb)

    # X_delta central against every generator.
    td = ctx.tau_delta()
    gens = s + [ctx.lam(m) for m in rs.m_basis()] + [ctx.tau(b) for b in simple_cor]
    for j, g in enumerate(gens):
        record(f"center gen={j}", g * td, td * g)

    # Type (0,j) relations, split by the pairing with theta.
    theta = rs.theta
    nu_theta_v = ctx.nu_theta_v
    saw_eq42 = False
    for j in range(1, n + 1):
        ajv = simple_cor[j - 1]
        pair = rs.bilinear(ajv, theta)
        if pair == 0:
            record(f"t0-comm j={j}", t0 * ctx.tau(ajv), ctx.tau(ajv) * t0)
        elif pair == 1:
            lhs = t0 * ctx.tau(ajv) * t0
            a0v = ctx.tau_alpha0()
            record(f"t0-conj j={j}", lhs, ctx.tau(ajv) * a0v)
        elif pair == 2:
            b = vsub(ajv, rs.coroot(theta))
            if any(b):  # at rank one the vector vanishes and the relation is empty
                saw_eq42 = True
                record(f"t0-comm-long j={j}", t0 * ctx.tau(b), ctx.tau(b) * t0)
        else:  # pragma: no cover - excluded by the classification
            raise AssertionError("unexpected pairing")
    # The classification "pairing 2 happens only for C_n^(1), n >= 2" is
    # stated under the standing A != A_{2n}^(2) assumption; the relations
    # themselves are checked for A_{2n}^(2) above all the same.
    lab = rs.label
    even_a2 = lab.letter == "A" and lab.twist == 2 and lab.N % 2 == 0
    if not even_a2:
        expect_eq42 = lab.letter == "C" and lab.twist == 1 and lab.N >= 2
        checks.append(("pairing-2 relation present iff C-family", saw_eq42 == expect_eq42))
        if saw_eq42 != expect_eq42:
            failures.append(
                {"relation": "pairing-2 relation presence", "lhs_nf": "", "rhs_nf": ""}
            )

    # The single reduction relation that regenerates the rest.
    i_th = rs.i_theta()
    aiv = simple_cor[i_th - 1]
    if not rs.is_twisted_proper():
        ell0 = rs.ell0()
        if ell0 == 1:
            rhs = ctx.tau(aiv) * ctx.tau_alpha0()
            record("reduction-conj", t0 * ctx.tau(aiv) * t0, rhs)
        elif ell0 == 2:
            b = vsub(aiv, rs.coroot(theta))
            record("reduction-comm", t0 * ctx.tau(b), ctx.tau(b) * t0)
        # ell0 = 4 (A_1^(1)): no reduction relation of this shape.
    else:
        phiv = rs.coroot(rs.phi)
        rhs = ctx.tau(phiv) * ctx.tau_alpha0()
        record("reduction-twisted", t0 * ctx.tau(phiv) * t0, rhs)

    return {
        "label": str(rs.label),
        "relations_checked": len(checks),
        "failures": failures,
    }


# ---------------------------------------------------------------------
# Centrality of tau_delta
# ---------------------------------------------------------------------


def center_contains_tau_delta(label) -> bool:
    ctx = context(label)
    rs = ctx.rs
    td = ctx.tau_delta()
    gens = [ctx.s(i) for i in range(rs.n + 1)]
    gens += [ctx.lam(m) for m in rs.m_basis()]
    gens += [ctx.tau(b) for b in rs.simple_coroots()]
    for g in gens:
        if g * td != td * g:
            return False
    for k in range(1, 11):
        if (td**k).is_identity():
            return False
    return True


# ---------------------------------------------------------------------
# The A_{2n}^(2) comparison morphisms
# ---------------------------------------------------------------------


def _epsilon_matrix_c(ctx: DaweylContext):
    """Coordinates of scaled-epsilon basis vectors (sqrt2 * eps_i) of the
    C_n^(1) realization in terms of the simple-root basis."""
    n = ctx.n
    # sqrt2 eps_i = sum_{j>=i} 2 alpha_j - alpha_n  (alpha_j = (e_j - e_{j+1})/sqrt2,
    # alpha_n = sqrt2 e_n): sqrt2 eps_i = 2(alpha_i + ... + alpha_{n-1}) + alpha_n.
    cols = []
    for i in range(1, n + 1):
        v = [_F0] * (n + 2)
        for j in range(i, n):
            v[j - 1] = Fraction(2)
        v[n - 1] = _F1
        cols.append(tuple(v))
    return cols


def _epsilon_matrix_a(ctx: DaweylContext):
    """Coordinates of eps_i of the A_{2n}^(2) realization in the
    simple-root basis: alpha_i = eps_i - eps_{i+1}, alpha_n = 2 eps_n."""
    n = ctx.n
    cols = []
    for i in range(1, n + 1):
        v = [_F0] * (n + 2)
        for j in range(i, n):
            v[j - 1] = _F1
        v[n - 1] = Fraction(1, 2)
        cols.append(tuple(v))
    return cols


class A2n2Comparison:
    """Weyl-level shadows of the two comparison morphisms from the
    C_n^(1) group to the A_{2n}^(2) group (and its half-delta central
    extension)."""

    def __init__(self, n: int):
        self.n = n
        src_label = "A1(1)" if n == 1 else f"C{n}(1)"
        self.src = context(src_label)
        self.dst = context(f"A{2 * n}(2)")
        self.dst_c = context(f"A{2 * n}(2)", half_delta=True)
        self.eps_c = _epsilon_matrix_c(self.src)
        self.eps_a = _epsilon_matrix_a(self.dst)
        # Consistency of the epsilon dictionaries.
        rs_c, rs_a = self.src.rs, self.dst.rs
        for i, v in enumerate(self.eps_c):
            for j, w in enumerate(self.eps_a):
                assert rs_c.bilinear(v, self.eps_c[j]) == 2 * (i == j) * _F1
                assert rs_a.bilinear(self.eps_a[i], w) == (i == j) * _F1

    def finite_map(self, v: Vec) -> Vec:
        """sqrt2 eps_i -> eps_i on the finite parts (delta forbidden)."""
        n = self.n
        assert not any(v[n:]), "finite vectors only"
        coeffs = self._eps_coords_c(v)
        out = vzero(self.dst.rs.dim)
        for c, w in zip(coeffs, self.eps_a):
            out = vadd(out, vscale(c, w))
        return out

    def _eps_coords_c(self, v: Vec):
        from .rootsys import _solve

        n = self.n
        mat = [[self.eps_c[j][i] for j in range(n)] for i in range(n)]
        return _solve(mat, list(v[:n]))

    def map_weyl(self, w: WeylElement) -> WeylElement:
        """Transport a finite Weyl element through the epsilon dictionary:
        T w T^{-1} where T is the linear map sqrt2 eps_i -> eps_i."""
        from .weyl import Matrix, mat_inv, mat_mul

        n = self.n
        tmat: Matrix = tuple(
            tuple(self.finite_map(
                tuple(_F1 if t == j else _F0 for t in range(n)) + (_F0, _F0)
            )[i] for j in range(n))
            for i in range(n)
        )
        m = mat_mul(mat_mul(tmat, w.matrix), mat_inv(tmat))
        return WeylElement(self.dst.rs, m)

    def _map_element(self, g: DaweylElement, to_c: bool) -> DaweylElement:
        """The coordinate morphism: defined on normal forms; lands in the
        half-delta extension when to_c is True (X_delta -> X_{delta/2}),
        otherwise keeps k and is only a morphism modulo the kernel."""
        ctx = self.dst_c if to_c else self.dst
        # The finite map conjugates w; mu and beta map linearly.
        wt = self.map_weyl(g.w)
        # Transport in the *source* coordinates needs v expressed without
        # T-conjugation: mu, beta are finite vectors.
        mu = self.finite_map(g.mu)
        beta = self.finite_map(g.beta)
        k = g.k / 2 if to_c else g.k
        return DaweylElement(ctx, WeylElement(ctx.rs, wt.matrix), mu, beta, k)

    def map_ii(self, g: DaweylElement) -> DaweylElement:
        """The morphism into the half-delta extension (a homomorphism on
        normal forms)."""
        return self._map_element(g, to_c=True)

    def images_i(self) -> dict:
        """Generator images of the first comparison morphism, as elements
        of the plain A_{2n}^(2) group: T_i -> T_i, X_{sqrt2 eps_1} ->
        X_{eps_1}, X_delta -> X_delta."""
        out = {}
        for i in range(self.n + 1):
            out[f"s{i}"] = self.dst.s(i)
        out["tau_eps1"] = self.dst.tau(self.eps_a[0])
        out["tau_delta"] = self.dst.tau_delta()
        return out

    def kernel_image_i(self) -> DaweylElement:
        """Image of the kernel generator X_delta (T_0^{-1} X_{-sqrt2
        eps1})^2 under the generator images of morphism i."""
        im = self.images_i()
        t0 = im["s0"]
        x = im["tau_eps1"].inv()
        w = t0.inv() * x
        return im["tau_delta"] * w * w

    def kernel_image_ii(self) -> DaweylElement:
        """Image of (T_0^{-1} X_{alpha_0^v})^2 in the half-delta
        extension: X_{alpha_0^v} -> X_{delta/2} X_{-eps_1}."""
        ctx = self.dst_c
        half = ctx.tau_delta(Fraction(1, 2))
        x = half * ctx.tau(vneg(self.eps_a[0]))
        w = ctx.s(0).inv() * x
        return w * w

    def report(self) -> dict:
        checks = {}
        # T_i -> T_i: the transported simple reflections agree.
        for i in range(1, self.n + 1):
            checks[f"s{i} maps to s{i}"] = (
                self.map_weyl(self.src.wg.simples[i - 1]) == self.dst.wg.simples[i - 1]
            )
        # s0 transports to s0 under the coordinate morphism.
        checks["s0 maps to s0"] = self.map_ii(self.src.s(0)) == self.dst_c.s(0)
        # Affine braid relations hold between the images of morphism i.
        im = self.images_i()
        a = self.src.rs.cartan.cartan
        for i in range(self.n + 1):
            for j in range(i + 1, self.n + 1):
                lace = a[i][j] * a[j][i]
                x, y = im[f"s{i}"], im[f"s{j}"]
                if lace == 0:
                    checks[f"braid {i},{j}"] = x * y == y * x
                elif lace in (1, 2, 3):
                    factors = {1: 3, 2: 4, 3: 6}[lace]
                    lhs = rhs = self.dst.identity()
                    for t in range(factors):
                        lhs = lhs * (x if t % 2 == 0 else y)
                        rhs = rhs * (y if t % 2 == 0 else x)
                    checks[f"braid {i},{j}"] = lhs == rhs
        checks["kernel generator i trivial"] = self.kernel_image_i().is_identity()
        checks["kernel generator ii trivial"] = self.kernel_image_ii().is_identity()
        # The tau_delta^{-1} shift: without the central half-delta factor
        # the square is exactly tau_delta^{-1}.
        ctx = self.dst_c
        w = ctx.s(0).inv() * ctx.tau(vneg(self.eps_a[0]))
        checks["square is tau_delta^{-1}"] = (w * w) == ctx.tau_delta(-1)
        return checks
