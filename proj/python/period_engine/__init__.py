"""Exact-arithmetic engine for Picard-Fuchs operators: Frobenius bases,
mirror maps, Yukawa couplings, monodromy, and toric mirror data."""

from ._core import (
    MathError,
    SchemaError,
    Series,
    ThetaOperator,
    anticanonical_monomials,
    builtin_operator,
    cayley,
    fricke_residual,
    frobenius_basis_json,
    hypergeometric,
    identity_names,
    lattice_point_count,
    mirror_map,
    polar_dual,
    prepotential_instantons,
    run_identity,
    yukawa,
)

__all__ = [
    "MathError",
    "SchemaError",
    "Series",
    "ThetaOperator",
    "anticanonical_monomials",
    "builtin_operator",
    "cayley",
    "fricke_residual",
    "frobenius_basis_json",
    "hypergeometric",
    "identity_names",
    "lattice_point_count",
    "mirror_map",
    "polar_dual",
    "prepotential_instantons",
    "run_identity",
    "yukawa",
]

__version__ = "0.1.0"
