"""Exact computations in the oriented skein category OS(z, t) and its
representation theory: normal forms, HOMFLY-PT, Hecke algebras, a GL(n)
representation oracle, bipartition combinatorics and Jucys-Murphy spectra."""

from .ring import (DEFAULT, SYMBOLIC, DegenerateParameterError, DomainError, LaurentPoly,
                   ParamProfile, RationalFunction, Specialized)
from .combinatorics import Bipartition, SymTensor, chi, lr_coefficient, verify_nm_inverse
from .diagram import Diagram, DiagramError, Morphism, compose, from_braid, from_pd, parse_dsl, tensor
from .skein import BasisExpansion, Matching, canonical_lift, dim_hom, gram_matrix, gram_rank, homfly, normal_form
from .hecke import HeckeElement, from_endomorphism, iota, jm_L, symmetrizers, young_idempotent
from .glnrep import OracleConfig, kernel_witness, oracle_check, psi_evaluate, relation_residuals
from .repcalc import (character_coeffs, check_linkage_invariant, dim_standard, edges_from, is_semisimple,
                      k0_class, wt)
from .jmspec import jm_matrices, jm_morphism, realize_standard, weight_idempotents
from .pdoracle import homfly_pd

__version__ = "0.1.0"
