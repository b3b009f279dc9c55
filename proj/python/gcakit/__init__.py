"""Matrix representations of generalized Clifford algebras."""

from ._core import (
    GcakitError,
    bloch_phase,
    build_representation,
    canonical,
    catalog,
    catalog_names,
    clifford_generators,
    decompose,
    diagonalize_l,
    l_matrix,
    magnetic,
    ordered_generators,
    projective_rep,
    run_cli,
    skew_normal_form,
    wigner_forward,
    wigner_inverse,
)

__all__ = [
    "GcakitError",
    "bloch_phase",
    "build_representation",
    "canonical",
    "catalog",
    "catalog_names",
    "clifford_generators",
    "decompose",
    "diagonalize_l",
    "l_matrix",
    "magnetic",
    "ordered_generators",
    "projective_rep",
    "run_cli",
    "skew_normal_form",
    "wigner_forward",
    "wigner_inverse",
]
