import json

from dawcox.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_diagram_json_deterministic(capsys):
    code1, out1, _ = run(capsys, "diagram", "--family", "ddotG2", "--json")
    code2, out2, _ = run(capsys, "diagram", "--family", "ddotG2", "--json")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["family"] == "ddotG2"


def test_diagram_dot(capsys):
    code, out, _ = run(capsys, "diagram", "--family", "ddotG2", "--dot")
    assert code == 0 and out.startswith("graph")


def test_diagram_bad_family(capsys):
    code, _, err = run(capsys, "diagram", "--family", "dddotB", "--rank", "2")
    assert code == 2 and "error" in err


def test_params_cncn(capsys):
    code, out, _ = run(capsys, "params", "--system", "(Cn^,Cn)", "--n", "2")
    assert code == 0
    payload = json.loads(out)
    assert payload["final_count"] == 5


def test_params_table4_row(capsys):
    code, out, _ = run(capsys, "params", "--system", "A2n(2)", "--n", "2")
    payload = json.loads(out)
    assert code == 0 and payload["final_count"] == 3


def test_params_unknown(capsys):
    code, _, err = run(capsys, "params", "--system", "X9(9)")
    assert code == 2


def test_nf_central_word(capsys):
    code, out, _ = run(capsys, "nf", "--family", "dddotA1", "--word", "C")
    assert code == 0
    assert out.strip() == "w=[] mu=[0] beta=[0] k=1"


def test_nf_generator(capsys):
    code, out, _ = run(capsys, "nf", "--family", "dddotA2", "--word", "T1 T1")
    assert code == 0
    assert out.strip() == "w=[] mu=[0,0] beta=[0,0] k=0"


def test_nf_bad_word(capsys):
    code, _, err = run(capsys, "nf", "--family", "dddotA2", "--word", "Q7")
    assert code == 2


def test_decompose_identity(capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", "1,0;0,1", "--level", "1")
    assert code == 0 and "(empty word)" in out


def test_decompose_s_matrix(capsys):
    code, out, _ = run(capsys, "decompose", "--matrix", "0,-1;1,0", "--level", "1")
    assert code == 0
    assert out.splitlines()[0] == "A B A"
    assert "round-trip: ok" in out


def test_decompose_nonmember(capsys):
    code, _, err = run(capsys, "decompose", "--matrix", "1,0;1,1", "--level", "2")
    assert code == 1


def test_involution_identity(capsys):
    code, out, _ = run(
        capsys, "involution", "--matrix", "1,0;0,1", "--family", "dddotA1"
    )
    assert code == 0
    assert "member: yes, involution: yes" in out


def test_involution_negative(capsys):
    code, out, _ = run(
        capsys, "involution", "--matrix", "1,0;2,1", "--family", "dddotA1"
    )
    assert code == 0
    assert "member: no, involution: no" in out


def test_verify_single_family(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "dddotC2", "--suite", "presentation", "--json"
    )
    assert code == 0
    payload = json.loads(out)
    assert all(c["status"] == "pass" for c in payload["checks"])


def test_verify_appendix_skips_simply_laced(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "dddotA2", "--suite", "appendixA"
    )
    assert code == 0
    assert "skipped (simply-laced)" in out


def test_verify_unknown_family(capsys):
    code, _, err = run(capsys, "verify", "--family", "dddotZ", "--rank", "1")
    assert code == 2


def test_verify_bernstein_instance(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "ddotG2", "--suite", "bernstein", "--json"
    )
    assert code == 0
