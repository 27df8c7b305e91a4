import pytest

from dawcox import heckeparams as hp
from dawcox.rootsys import UnknownTypeError

TABLE1 = [
    ("dddotA1", None, 4),
    ("dddotA1star", None, 3),
    ("dddotA2", None, 1),
    ("dddotA3", None, 1),
    ("dddotB3", None, 2),
    ("dddotB4", None, 2),
    ("dddotC2", None, 5),
    ("dddotC3", None, 5),
    ("dddotC2star", None, 4),
    ("dddotC3star", None, 4),
    ("dddotD4", None, 1),
    ("dddotD5", None, 1),
    ("dddotE6", None, 1),
    ("dddotE7", None, 1),
    ("dddotE8", None, 1),
    ("dddotF4", None, 2),
    ("dddotG2", None, 2),
    ("ddotB3", None, 3),
    ("ddotB4", None, 3),
    ("ddotC3", None, 3),
    ("ddotC4", None, 3),
    ("ddotB2", None, 4),
    ("ddotF4", None, 2),
    ("ddotG2", None, 2),
]


@pytest.mark.parametrize("name,_,count", TABLE1)
def test_generic_param_counts(name, _, count):
    assert hp.generic_param_count(name) == count


def test_param_symbols_shared_on_one_connected():
    pa = hp.param_assignment("dddotB3")
    # Theta01, Theta02, Theta03, T1, T2 are all one-connected
    assert pa.symbol_of["Theta01"] == pa.symbol_of["T1"] == pa.symbol_of["T2"]
    assert pa.symbol_of["T3"] != pa.symbol_of["T1"]


SPECIALIZATIONS = [
    ("A1(1)", 1, 1),
    ("Cn(1)", 2, 3),
    ("Cn(1)", 3, 3),
    ("(BCn,Cn)", 2, 4),
    ("(BCn,Cn)", 3, 4),
    ("(Cn^,Cn)", 2, 5),
    ("(Cn^,Cn)", 3, 5),
    ("(Cn^,Cn)", 1, 4),     # the rank-one collapse noted in the text
    ("A2n(2)", 2, 3),
    ("A2n(2)", 1, 2),
    ("(Cn^,BCn)", 2, 4),
    ("(Cn^,BCn)", 1, 3),
    ("A3(2)", None, 3),
    ("(C2,C2^)", None, 4),
    ("Dn+1(2)", 3, 2),
    ("Dn+1(2)", 4, 2),
    ("A2n-1(2)", 3, 2),
    ("A2n-1(2)", 4, 2),
    ("(Bn,Bn^)", 3, 3),
    ("(Bn,Bn^)", 4, 3),
]


@pytest.mark.parametrize("system,n,count", SPECIALIZATIONS)
def test_specializations(system, n, count):
    rule = hp.specialize(system, n)
    assert rule.final_count == count
    assert rule.final_count <= rule.generic_count


TABLE5 = [
    ("(BCn,Cn)", 2, 4),
    ("(Cn^,BCn)", 2, 4),
    ("(Bn,Bn^)", 3, 3),
    ("(Cn^,Cn)", 2, 5),
    ("(C2,C2^)", None, 4),
]


@pytest.mark.parametrize("system,n,count", TABLE5)
def test_table5_via_nonreduced(system, n, count):
    reduced = hp.nonreduced_to_reduced(system)
    rule = hp.specialize(system, n)
    assert rule.final_count == count
    # the nonreduced system's double affine group matches the reduced one
    rule2 = hp.specialize(reduced, n)
    assert rule2.algebra == rule.algebra


def test_nonreduced_table():
    assert hp.nonreduced_to_reduced("(Cn^,BCn)") == "A2n(2)"
    assert hp.nonreduced_to_reduced("(Bn,Bn^)") == "A2n-1(2)"
    assert hp.nonreduced_to_reduced("(C2,C2^)") == "A3(2)"
    assert hp.nonreduced_to_reduced("(BCn,Cn)") == "Cn(1)"
    assert hp.nonreduced_to_reduced("(Cn^,Cn)") == "Cn(1)"
    with pytest.raises(UnknownTypeError):
        hp.nonreduced_to_reduced("Cn(1)")


def test_empty_rules():
    assert hp.specialize("Bn(1)", 3).identifications == []
    assert hp.specialize("G2(1)").final_count == 2
    assert hp.specialize("E6(2)").final_count == 2
    assert hp.specialize("D4(3)").final_count == 2
    with pytest.raises(UnknownTypeError):
        hp.specialize("H3(1)")
    with pytest.raises(UnknownTypeError):
        hp.specialize("Cn(1)")  # missing rank


def test_quadratic_relations():
    rels = hp.quadratic_relations("dddotC2")
    assert len(rels) == 5  # one record per node
    assert len({r.symbol for r in rels}) == 5  # 5 distinct records
    star = hp.quadratic_relations("dddotC2star")
    t02 = next(r for r in star if r.node == "Theta02")
    assert t02.symbol == "1"
    assert t02.render() == "Theta02^2 = 1"
    # two one-connected nodes share a record symbol
    pa = hp.param_assignment("dddotB3")
    assert (
        hp.quadratic_relation("dddotB3", "T1").symbol
        == hp.quadratic_relation("dddotB3", "T2").symbol
    )
