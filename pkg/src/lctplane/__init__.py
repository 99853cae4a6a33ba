"""Exact log canonical thresholds of reduced plane curves.

Three independent routes to the lct of a curve germ, all in exact
rational arithmetic:

* a closed-form fast path at points of multiplicity d-1 on degree-d
  curves (``analyze_high_mult``),
* an embedded-resolution oracle via iterated point blowups
  (``resolve_over_origin`` / ``lct_from_tree``),
* a complete classifier and table lookup for curves of degree at most 5
  (``classify_singularity`` / ``lct_low_degree``).

See the ``lctplane`` CLI for the command-line front end.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .classify import (
    SingularityClass,
    all_symbols,
    allowed_types,
    class_info,
    classify_singularity,
    lct_low_degree,
    sample_normal_form,
    table1_values,
)
from .errors import LctError
from .extended import INF, NEG_INF
from .highmult import (
    HighMultAnalysis,
    analyze_high_mult,
    construct_witness,
    lambda_set,
    reducibility_hint,
)
from .localinv import (
    intersection_multiplicity_origin,
    is_square_free,
    milnor_number_origin,
    tangent_cone_pattern,
    weighted_lct_upper_bound,
)
from .parse import parse_poly
from .poly import (
    BinaryForm,
    BPoly,
    Factorization,
    gcd_bivariate,
    squarefree_decomposition,
)
from .resolution import (
    ResolutionTree,
    blowup_transform,
    export_tree,
    lct_from_tree,
    log_pullback_coefficients,
    resolve_over_origin,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BPoly",
    "BinaryForm",
    "Factorization",
    "HighMultAnalysis",
    "INF",
    "KERNEL_BACKEND",
    "LctError",
    "NEG_INF",
    "ResolutionTree",
    "SingularityClass",
    "all_symbols",
    "allowed_types",
    "analyze_high_mult",
    "blowup_transform",
    "class_info",
    "classify_singularity",
    "construct_witness",
    "export_tree",
    "gcd_bivariate",
    "intersection_multiplicity_origin",
    "is_square_free",
    "lambda_set",
    "lct_from_tree",
    "lct_low_degree",
    "log_pullback_coefficients",
    "milnor_number_origin",
    "parse_poly",
    "reducibility_hint",
    "resolve_over_origin",
    "sample_normal_form",
    "squarefree_decomposition",
    "table1_values",
    "tangent_cone_pattern",
    "weighted_lct_upper_bound",
]
