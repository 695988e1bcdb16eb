"""N-graphs: constructors, cycles, mutations, annular gluing, moves and symmetries."""

from .braid import BraidWord, linear_word, tripod_word
from .graph import (
    Edge,
    Face,
    MapBuilder,
    NGraph,
    Vertex,
    VertexKind,
    euler_characteristic,
    validate,
)
from .cycles import (
    CycleKind,
    CycleSpec,
    CycleTuple,
    check_cycle,
    intersection_matrix,
    quiver_of,
)
from .constructors import build_linear, build_theta, build_tripod, color_swap, standard_graph
from .annulus import (
    AnnularNGraph,
    braid_movie,
    concat,
    concat_with_cycles,
    coxeter_padding,
    identity_annulus,
    tripod_stack,
)
from .symmetry import (
    AdmissibleSetting,
    canonical_form,
    is_G_admissible,
    is_ray_symmetric,
    is_rotation_symmetric,
    partial_rotation,
    rotate,
    setting_action,
    setting_relabeling,
)
from .mutation import legendrian_coxeter_mutation, legendrian_coxeter_power, legendrian_mutate
from .moves import Move, apply_move, move_sites
from .export import draw_png, draw_svg, layout, ngraph_from_json, ngraph_to_dot, ngraph_to_json

__all__ = [
    "BraidWord",
    "linear_word",
    "tripod_word",
    "Edge",
    "Face",
    "MapBuilder",
    "NGraph",
    "Vertex",
    "VertexKind",
    "euler_characteristic",
    "validate",
    "CycleKind",
    "CycleSpec",
    "CycleTuple",
    "check_cycle",
    "intersection_matrix",
    "quiver_of",
    "build_linear",
    "build_theta",
    "build_tripod",
    "color_swap",
    "standard_graph",
    "AnnularNGraph",
    "braid_movie",
    "concat",
    "concat_with_cycles",
    "coxeter_padding",
    "identity_annulus",
    "tripod_stack",
    "AdmissibleSetting",
    "canonical_form",
    "is_G_admissible",
    "is_ray_symmetric",
    "is_rotation_symmetric",
    "partial_rotation",
    "rotate",
    "setting_action",
    "setting_relabeling",
    "legendrian_coxeter_mutation",
    "legendrian_coxeter_power",
    "legendrian_mutate",
    "Move",
    "apply_move",
    "move_sites",
    "draw_png",
    "draw_svg",
    "layout",
    "ngraph_from_json",
    "ngraph_to_dot",
    "ngraph_to_json",
]
