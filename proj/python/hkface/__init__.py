"""Exact generalized Hilbert-Kunz computations on face rings of simplicial complexes."""

from ._hkface import (
    BudgetExceeded,
    Graph,
    Poly,
    SimplicialComplex,
    ValidationError,
    audit,
    count_standard_monomials,
    cross_validate,
    dim2_closed_forms,
    edge_ideal_complex,
    ehk_of_powers,
    face_ideal_decomposition,
    family,
    ghk,
    hilbert_coefficients,
    is_shellable,
    limit_L_i,
    minimal_vertex_covers,
    multiplicity_e0,
    predicted_ehk,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "Poly",
    "SimplicialComplex",
    "ValidationError",
    "audit",
    "count_standard_monomials",
    "cross_validate",
    "dim2_closed_forms",
    "edge_ideal_complex",
    "ehk_of_powers",
    "face_ideal_decomposition",
    "family",
    "ghk",
    "hilbert_coefficients",
    "is_shellable",
    "limit_L_i",
    "minimal_vertex_covers",
    "multiplicity_e0",
    "predicted_ehk",
]
