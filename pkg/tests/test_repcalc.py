from collections import Counter
from fractions import Fraction

import pytest

from figure_data import FIGURE_EDGES
from oskein.combinatorics import EMPTY, Bipartition, bipartitions_upto
from oskein.repcalc import (Color, blocks, character_coeffs, check_linkage_invariant, dim_standard,
                            edges_from, flag_multiplicities, graph_edges, is_semisimple, k0_class,
                            linkage_failures, paths_to, pieri_check, weight_leq, wt)
from oskein.ring import DEFAULT, SYMBOLIC, DegenerateParameterError, ParamProfile, Specialized

B = Bipartition.make


def as_triples(edges):
    return sorted((tuple(e.src), tuple(e.dst), str(e.color)) for e in edges)


def test_figure_edges():
    assert as_triples(graph_edges(3)) == sorted(FIGURE_EDGES)


def test_edges_from_empty():
    assert as_triples(edges_from(EMPTY)) == sorted([
        ((( ), ()), ((1,), ()), "1"), (((), (1,)), ((), ()), "t^-2")])


def test_edges_specialized_colors():
    dom = Specialized(ParamProfile(2, 3))
    vals = sorted(Color(*e.color).value(dom) for e in edges_from(B((1,), (1,))))
    # (1),(1) gains up-nodes q^2, q^-2 and down-nodes t^-2 q^-2, t^-2 q^2
    assert vals == sorted([Fraction(4), Fraction(1, 4), Fraction(1, 36), Fraction(4, 9)])


def test_paths_and_characters():
    assert len(paths_to(B((1,), ()), "u")) == 1
    assert character_coeffs(EMPTY, "") == {(): 1}
    ch = character_coeffs(B((1,), ()), "udu")
    assert sum(ch.values()) == dim_standard(B((1,), ()), "udu") == 2
    assert ch == {
        (("u", Color("up", 0)), ("d", Color("up", 0)), ("u", Color("up", 0))): 1,
        (("u", Color("up", 0)), ("d", Color("down", 0)), ("u", Color("down", 0))): 1,
    }


def test_dimension_formula_matches_path_counts():
    from oskein.skein import words_upto
    for lam in bipartitions_upto(2):
        for a in words_upto(5):
            assert sum(character_coeffs(lam, a).values()) == dim_standard(lam, a)
    assert dim_standard(EMPTY, "du") == 1
    assert dim_standard(B((1,), (1,)), "du") == 1


def test_weights():
    up, down, total = wt(EMPTY)
    assert str(up) == "-1*Lambda[1]"
    up, _, _ = wt(B((1,), ()))
    assert dict(up.alpha) == {Color("up", 0): 1}
    assert weight_leq(EMPTY, B((1,), (1,)), DEFAULT) is False
    assert weight_leq(B((1,), (1,)), B((1,), (1,)))


def test_linkage_is_non_vacuous_at_a_collision():
    dom = Specialized(ParamProfile(2, 1))
    assert check_linkage_invariant(4, dom)
    # at t = 1 the colours 1 and t^-2 coincide and the two weights become comparable
    assert weight_leq(B((1,), (1,)), EMPTY, dom)
    assert not weight_leq(EMPTY, B((1,), (1,)), dom)
    assert not weight_leq(B((1,), (1,)), EMPTY, DEFAULT)


@pytest.mark.parametrize("t0", [None, 1, 2, 4])
def test_linkage(t0):
    dom = SYMBOLIC if t0 is None else Specialized(ParamProfile(2, t0))
    assert linkage_failures(4, dom) == []


def test_blocks():
    assert all(len(b) == 1 for b in blocks(3, SYMBOLIC))
    merged = [b for b in blocks(2, Specialized(ParamProfile(2, 1))) if len(b) > 1]
    assert [EMPTY, B((1,), (1,))] in merged


def test_semisimple_reports():
    assert is_semisimple(2, 4) == (False, "t = q^2")
    assert is_semisimple(2, 3)[0]
    assert is_semisimple(1, 3) == (False, "q = 1 is a root of unity")
    assert is_semisimple(DEFAULT)[0]
    with pytest.raises(DegenerateParameterError):
        is_semisimple(0, 2)


def test_k0_and_flags():
    lam = B((1,), (1,))
    assert k0_class(lam).coeffs == {lam: 1, EMPTY: -1}
    assert flag_multiplicities(lam) == [{lam: 1}, {EMPTY: 1}]


def test_pieri():
    for lam in bipartitions_upto(3):
        assert pieri_check(lam)
