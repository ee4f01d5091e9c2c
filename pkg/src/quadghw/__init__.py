"""Weight hierarchies of defining-set codes from non-degenerate quadratic forms over F_{p^m}."""

from .code import (
    DefiningSetCode,
    DimensionError,
    UnusableCodeError,
    WeightHierarchy,
    build_code,
    code_dimension,
    encode,
    ghw_lemma1,
    ghw_wei,
    hierarchy,
    weight_distribution,
)
from .field import FieldElement, FieldSpec, default_modulus, quadratic_character, trace
from .formulas import HierarchyPrediction, ghw_closed_form, predicted_length, prop1_count, v_func
from .quadform import QuadraticForm, classify, form_from_gram, form_from_trace_scale, parse_form
from .search import find_totally_isotropic, self_dual_subspace
from .subspace import Subspace, canonicalize, enumerate_subspaces, gaussian_binomial

__version__ = "0.1.0"
