"""Exact computations with Leonard pairs over the rationals and prime fields.

Covers parameter arrays, TD/D sequences, brute-force verification, flat parts,
bipartite contractions, the four fundamental types with their primary data, and
the near-bipartite classification with contractions and expansions.
"""

from .exactfield import FieldDescriptor, FieldScalar, PrimeField, Rationals, parse_field
from .matrixcore import ExactMatrix, MatrixPair, verify_leonard_pair
from .params import ParameterArray, TddSequence, validate_parameter_array
from .primary import TypeI, TypeII, TypeIIIPlus
from .nearbip import classify_near_bipartite

__all__ = [
    "FieldDescriptor", "FieldScalar", "PrimeField", "Rationals", "parse_field",
    "ExactMatrix", "MatrixPair", "verify_leonard_pair",
    "ParameterArray", "TddSequence", "validate_parameter_array",
    "TypeI", "TypeII", "TypeIIIPlus", "classify_near_bipartite",
]

__version__ = "0.1.0"
