import random
from fractions import Fraction

import pytest

from oskein.diagram import Diagram, Morphism
from oskein.glnrep import (GENERATORS, OracleConfig, kernel_witness, lifts_independent, oracle_check,
                           psi_T_closed_form, psi_evaluate, random_diagram, relation_residuals, rep_generator)
from oskein.ring import DomainError, SYMBOLIC


@pytest.mark.parametrize("n", [1, 2, 3])
@pytest.mark.parametrize("q0", [Fraction(2), Fraction(3, 2)])
def test_relations(n, q0):
    res = relation_residuals(OracleConfig(n, q0))
    assert all(res.values()), res


def test_generator_shapes():
    cfg = OracleConfig(2)
    assert len(rep_generator("S", cfg)) == 4
    assert len(rep_generator("C", cfg)) == 4 and len(rep_generator("C", cfg)[0]) == 1
    assert rep_generator("T", cfg) == psi_T_closed_form(cfg)
    assert set(GENERATORS) >= {"S", "T", "C", "D", "C'", "D'"}


def test_bubble_is_quantum_dimension():
    cfg = OracleConfig(3, Fraction(2))
    bubble = Morphism.from_diagram(Diagram("", (("cupr", 1), ("capl", 1))), cfg.domain)
    q = cfg.q0
    assert psi_evaluate(bubble, cfg) == [[q ** 2 + 1 + q ** -2]]


def test_domain_must_match():
    cfg = OracleConfig(2)
    with pytest.raises(DomainError):
        psi_evaluate(Morphism.from_diagram(Diagram("u"), SYMBOLIC), cfg)


def test_random_oracle_checks():
    rng = random.Random(11)
    cfg = OracleConfig(3)
    for _ in range(40):
        b = rng.choice(["", "u", "ud", "uu", "du"])
        d = random_diagram(rng, b, rng.randint(1, 6), 5)
        assert oracle_check(Morphism.from_diagram(d, cfg.domain), cfg)


def test_kernel_witness_and_faithfulness():
    assert kernel_witness(OracleConfig(2))
    assert kernel_witness(OracleConfig(3))
    # the antisymmetrizer on n strands survives
    from oskein import linalg
    from oskein.hecke import iota, young_idempotent
    cfg = OracleConfig(3)
    assert not linalg.is_zero(psi_evaluate(iota(young_idempotent((1, 1, 1), cfg.domain)), cfg))
    assert lifts_independent("uu", "uu", OracleConfig(2))
    assert lifts_independent("ud", "ud", OracleConfig(2))
    # three up strands need n >= 3 for the lifts to stay independent
    assert not lifts_independent("uuu", "uuu", OracleConfig(2))
    assert lifts_independent("uuu", "uuu", OracleConfig(3))
