from hypothesis import given, settings, strategies as st

from oskein.combinatorics import (EMPTY, Bipartition, SymTensor, bigM, bigN, bipartitions, chi, conjugate,
                                  contents, lr_coefficient, num_syt, partitions, standard_young_tableaux,
                                  verify_nm_inverse)

small = st.integers(0, 4).flatmap(lambda n: st.sampled_from(partitions(n)))


def test_partition_counts():
    assert [len(partitions(n)) for n in range(7)] == [1, 1, 2, 3, 5, 7, 11]
    assert len(bipartitions(1, 1)) == 1
    assert len(bipartitions(2, 1)) == 2


def test_hook_length_agrees_with_enumeration():
    for n in range(6):
        for p in partitions(n):
            assert num_syt(p) == len(standard_young_tableaux(p))


def test_contents_and_conjugate():
    assert contents((2, 1)) == [0, 1, -1]
    assert conjugate((3, 1)) == (2, 1, 1)


@settings(max_examples=50)
@given(small, small)
def test_lr_symmetry(mu, nu):
    n = sum(mu) + sum(nu)
    for lam in partitions(n):
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(lam, nu, mu)
        assert lr_coefficient(lam, mu, nu) == lr_coefficient(conjugate(lam), conjugate(mu), conjugate(nu))


def test_lr_known_values():
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((3, 2, 1), (2, 1), (2, 1)) == 2
    assert lr_coefficient((2, 2), (1,), (1,)) == 0


def test_pieri_dimension_count():
    # sum_lam LR * f^lam = C(n, k) f^mu f^nu
    from math import comb
    for mu in partitions(2):
        for nu in partitions(2):
            total = sum(lr_coefficient(lam, mu, nu) * num_syt(lam) for lam in partitions(4))
            assert total == comb(4, 2) * num_syt(mu) * num_syt(nu)


def test_transition_matrices():
    assert verify_nm_inverse(3, 3)
    lam = Bipartition((1,), (1,))
    assert bigN(lam, EMPTY) == -1 and bigM(lam, EMPTY) == 1
    assert chi(lam) == SymTensor({lam: 1, EMPTY: -1})


def test_symtensor_json_round_trip():
    x = chi(Bipartition((2, 1), (1, 1)))
    assert SymTensor.from_json(x.to_json()) == x
