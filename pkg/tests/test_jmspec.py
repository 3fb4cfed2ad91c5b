from fractions import Fraction

import pytest

from oskein import linalg
from oskein.combinatorics import EMPTY, Bipartition
from oskein.diagram import Morphism, compose
from oskein.hecke import HeckeElement, from_endomorphism, iota, jm_L
from oskein.jmspec import (SpectrumError, candidate_colors, jm_matrices, jm_morphism, realize_standard,
                           simultaneous_spaces, spectrum, shortest_word_expected, shortest_word_scalar, weight_idempotents)
from oskein.repcalc import character_coeffs, dim_standard
from oskein.ring import DEFAULT, SYMBOLIC
from oskein.skein import normal_form

B = Bipartition.make


def test_base_cases():
    assert jm_matrices("u") == [[[Fraction(1)]]]
    assert jm_matrices("d") == [[[Fraction(1, 9)]]]


def test_jm_on_up_strands_is_hecke_jm():
    for r in (2, 3):
        for i in range(1, r + 1):
            h = from_endomorphism(normal_form(jm_morphism("u" * r, i, SYMBOLIC)))
            expected = jm_L(i, SYMBOLIC)
            # L_i lives on the rightmost i strands
            from oskein.hecke import embed
            assert h == (embed(expected, r) if i < r else expected)


def test_commuting_and_spectrum():
    for a in ("ud", "uu", "du", "udu"):
        mats = jm_matrices(a)
        for A in mats:
            for Bm in mats:
                assert linalg.matmul(A, Bm) == linalg.matmul(Bm, A)
        values = [v for _, v in candidate_colors(len(a), DEFAULT)]
        for A in mats:
            assert sum(spectrum(A, values).values()) == len(A)


def test_weight_idempotents_uu():
    P = weight_idempotents("uu")
    assert sorted(P) == [(Fraction(1), Fraction(1, 4)), (Fraction(1), Fraction(4))]
    assert all(linalg.rank(p) == 1 for p in P.values())
    total = linalg.zeros(2, 2)
    for p in P.values():
        total = linalg.add(total, p)
    assert total == linalg.identity(2)


def test_spectrum_error_when_candidates_miss():
    with pytest.raises(SpectrumError):
        simultaneous_spaces(jm_matrices("uu"), [Fraction(1)], 2)


def test_realize_standard_small():
    m = realize_standard(EMPTY, "")
    assert m.dim == 1 and m.jm_matrices() == []
    m = realize_standard(B((1,), ()), "u")
    assert m.jm_matrices() == [[[Fraction(1)]]]


@pytest.mark.parametrize("lam", [B((1,), ()), B((), (1,)), B((1,), (1,)), B((2,), ()), B((1, 1), ())])
@pytest.mark.parametrize("a", ["u", "ud", "du", "uud", "udu"])
def test_refined_characters(lam, a):
    m = realize_standard(lam, a)
    assert m.dim == dim_standard(lam, a)
    if m.dim:
        # letters are fixed by the word, so compare colour vectors only
        expected = {tuple(c for _, c in k): v for k, v in character_coeffs(lam, a, DEFAULT).items()}
        assert m.eigenspace_ranks() == expected


def test_shortest_word_table():
    for i in range(3):
        for j in range(3):
            assert shortest_word_scalar(i, j, 2) == shortest_word_expected(i, j, 2)
    F = Fraction
    assert [[shortest_word_scalar(i, j, 2) for j in range(3)] for i in range(3)] == [
        [F(5, 2), F(4), F(-2)], [F(1, 4), F(5, 2), F(4)], [F(-1, 2), F(1, 4), F(5, 2)]]


def test_shortest_word_combination_is_killed():
    # sum_i (-q)^i a_i b_j vanishes for every j
    for n, q in ((2, Fraction(2)), (3, Fraction(3, 2))):
        for j in range(n + 1):
            total = sum(((-q) ** i * shortest_word_scalar(i, j, n, q) for i in range(n + 1)), Fraction(0))
            assert total == 0
