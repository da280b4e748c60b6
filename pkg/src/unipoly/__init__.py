"""Universality experiments for polynomials over finite fields.

The toolkit decides and witnesses d-universality (every degree up to
deg(f) appears as an irreducible factor degree of some f - t0 with t0 in
the degree-d extension), gathers Frobenius cycle-type statistics as
empirical monodromy evidence, verifies the critical-value (Turnwald)
criterion for full symmetric Galois groups, and searches small (h1, h2)
pairs for the field-representation map h1*X^q + h2.
"""

from .errors import UnipolyError
from .field import (
    Embedding,
    FieldElement,
    FieldSpec,
    embed_field,
    field_create,
    field_from_canonical,
    find_roots,
)
from .poly import (
    BivarPoly,
    FactorDegreeProfile,
    Polynomial,
    ProfileEntry,
    degree_profile,
    distinct_degree_factorization,
    is_irreducible,
    poly_gen,
    resultant,
    resultant_in_y,
    squarefree_decomposition,
)

__version__ = "1.0.0"

__all__ = [
    "UnipolyError",
    "FieldSpec",
    "FieldElement",
    "Embedding",
    "field_create",
    "field_from_canonical",
    "embed_field",
    "find_roots",
    "Polynomial",
    "BivarPoly",
    "FactorDegreeProfile",
    "ProfileEntry",
    "poly_gen",
    "degree_profile",
    "squarefree_decomposition",
    "distinct_degree_factorization",
    "is_irreducible",
    "resultant",
    "resultant_in_y",
    "__version__",
]
