"""Biregular incidence configurations, their constructions and arithmetic.

The package builds, composes and verifies (v, b, r, k)-configurations,
describes the numerical semigroup of configurable scale factors for
fixed degrees, and ships an independent exhaustive search oracle used to
cross-check every constructive route.
"""

from .errors import (
    AnchorNotFound,
    BudgetExhausted,
    InfeasibleParameters,
    NotConnected,
    NotExpressible,
    NotMember,
    NotNumerical,
    NotRegular,
    ParameterMismatch,
)
from .incidence import (
    AnchoredConfiguration,
    ConfigTuple,
    Configuration,
    VerificationReport,
    Violation,
    find_anchors,
    girth,
    outer_lower_bound,
    tuple_of,
    verify,
)
from .graphs import (
    RegularGraph,
    ScaffoldOptions,
    circulant_regular,
    regular_graph_with_girth,
)
from .constructions import (
    amalgamate,
    construct_for_d,
    degree_two_configuration,
    dual,
    minimal_nontrivial,
    sm_plus_one,
    subdivision_configuration,
)
from .search import (
    EXISTS,
    NOT_EXISTS,
    UNKNOWN,
    MinimalScan,
    SearchProblem,
    SearchVerdict,
    decide,
    minimal_element,
)
from .semigroup import (
    DescribeEffort,
    DrkDescription,
    NumericalSemigroup,
    d2k,
    drk_describe,
)

__all__ = [
    "AnchorNotFound",
    "AnchoredConfiguration",
    "BudgetExhausted",
    "ConfigTuple",
    "Configuration",
    "DescribeEffort",
    "DrkDescription",
    "EXISTS",
    "InfeasibleParameters",
    "MinimalScan",
    "NOT_EXISTS",
    "NotConnected",
    "NotExpressible",
    "NotMember",
    "NotNumerical",
    "NotRegular",
    "NumericalSemigroup",
    "ParameterMismatch",
    "RegularGraph",
    "ScaffoldOptions",
    "SearchProblem",
    "SearchVerdict",
    "UNKNOWN",
    "VerificationReport",
    "Violation",
    "amalgamate",
    "circulant_regular",
    "construct_for_d",
    "d2k",
    "decide",
    "degree_two_configuration",
    "drk_describe",
    "dual",
    "find_anchors",
    "girth",
    "minimal_element",
    "minimal_nontrivial",
    "outer_lower_bound",
    "regular_graph_with_girth",
    "sm_plus_one",
    "subdivision_configuration",
    "tuple_of",
    "verify",
]
