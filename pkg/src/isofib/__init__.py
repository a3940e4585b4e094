"""Exact computations for standard isotrivial fibrations S -> (C1 x C2)/G:
continued fractions, cyclic quotient singularities, finite groups and
generating vectors, surface invariants, fibre contraction and the
classification of (-1)-fibres."""
from .actions import GeneratingVector, covering_genus, parse_vector
from .contfrac import HJExpansion, hj_eval, hj_expand, inverse_residue, riemenschneider_dual
from .fibres import (ReducibleFibre, bound_check, classify_minus_one_fibres, contract, delta,
                     is_minus_one_fibre, minimal_model_invariants)
from .groups import FiniteGroup, parse_group_spec
from .quotient import StandardIsotrivialFibration, fibres_of, invariants, construct_cyclic_fibration
from .singularities import (CQS, B_invariant, CyclicQuotientSingularity, SingularLocus,
                            singularity_table, e_invariant, h_invariant, table_row)

__version__ = "0.1.0"

__all__ = [
    "B_invariant", "CQS", "CyclicQuotientSingularity", "FiniteGroup", "GeneratingVector",
    "HJExpansion", "ReducibleFibre", "SingularLocus", "StandardIsotrivialFibration",
    "singularity_table", "bound_check", "classify_minus_one_fibres", "contract", "covering_genus",
    "delta", "e_invariant", "fibres_of", "h_invariant", "hj_eval", "hj_expand", "inverse_residue",
    "invariants", "is_minus_one_fibre", "minimal_model_invariants", "parse_group_spec",
    "parse_vector", "riemenschneider_dual", "table_row", "construct_cyclic_fibration",
]
