"""Reed-Solomon list decoding with Groebner-basis interpolation."""
from .decoder import Candidate, DecodeResult, error_locator_check, list_decode, unique_decode
from .errors import NoCodewordInRange, RSListError
from .gf import FieldCtx, FieldElement, field_new, parse_field
from .groebner import GeneratorSet, minimal_element, reduce
from .interp import InterpParams, build_generators, choose_params, interpolate_Q
from .poly import UniPoly, interpolate, lagrange_basis, node_poly
from .rootfind import y_roots
from .rs import RSCode, hamming_distance, hamming_weight
from .wpoly import BiPoly, Monomial, WeightedOrder, multiplicity

__all__ = [
    "BiPoly", "Candidate", "DecodeResult", "FieldCtx", "FieldElement", "GeneratorSet",
    "InterpParams", "Monomial", "NoCodewordInRange", "RSCode", "RSListError", "UniPoly",
    "WeightedOrder", "build_generators", "choose_params", "error_locator_check",
    "field_new", "hamming_distance", "hamming_weight", "interpolate", "interpolate_Q",
    "lagrange_basis", "list_decode", "minimal_element", "multiplicity", "node_poly",
    "parse_field", "reduce", "unique_decode", "y_roots",
]
