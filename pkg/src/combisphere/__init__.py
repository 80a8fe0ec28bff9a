"""Exact combinatorial spheres and balls.

Pure simplicial complexes with integer vertex labels, recognition of
spheres, balls, stacked and flag complexes, completion constructions that
embed a given complex into a sphere on the same vertex set, and exact
rational convex hulls.
"""

from .catalog import NamedExample, available, get
from .constructions import (
    CompletionResult,
    complete_ball_degree_d,
    complete_degree_d,
    complete_disc,
    complete_flag,
    complete_join,
    complete_stacked_ball,
    complete_stacked_sphere,
    sphere_chain,
)
from .core import (
    Complex,
    DualGraph,
    PseudomanifoldReport,
    Simplex,
    anti_star,
    bistellar_move,
    boundary,
    complement,
    dual_graph,
    euler_characteristic,
    from_facets,
    generalized_bistellar_move,
    is_subcomplex,
    join,
    link,
    one_point_suspension,
    pseudomanifold_check,
)
from .errors import ComplexError, GeometryError, UnknownName
from .polytopal import (
    HullFacet,
    HullResult,
    PointConfiguration,
    convex_hull,
    general_position_check,
    perturb_to_general_position,
    polytopal_complete,
)
from .recognition import (
    StackedBallReport,
    StackingSequence,
    Verdict,
    certify_ball,
    certify_sphere,
    collapse_stacked_sphere_to_ball,
    degree,
    is_flag,
    is_stacked_ball,
    is_standard,
)

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "CompletionResult",
    "ComplexError",
    "DualGraph",
    "GeometryError",
    "HullFacet",
    "HullResult",
    "NamedExample",
    "PointConfiguration",
    "PseudomanifoldReport",
    "Simplex",
    "StackedBallReport",
    "StackingSequence",
    "UnknownName",
    "Verdict",
    "anti_star",
    "available",
    "bistellar_move",
    "boundary",
    "certify_ball",
    "certify_sphere",
    "collapse_stacked_sphere_to_ball",
    "complement",
    "complete_ball_degree_d",
    "complete_degree_d",
    "complete_disc",
    "complete_flag",
    "complete_join",
    "complete_stacked_ball",
    "complete_stacked_sphere",
    "convex_hull",
    "degree",
    "dual_graph",
    "euler_characteristic",
    "from_facets",
    "general_position_check",
    "generalized_bistellar_move",
    "get",
    "is_flag",
    "is_stacked_ball",
    "is_standard",
    "is_subcomplex",
    "join",
    "link",
    "one_point_suspension",
    "perturb_to_general_position",
    "polytopal_complete",
    "pseudomanifold_check",
    "sphere_chain",
]
