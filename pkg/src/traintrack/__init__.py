"""Train tracks, growth rates, and foliation data for once-punctured surfaces.

The package decides whether a composition of Dehn twists on a once-punctured
orientable surface is pseudo-Anosov, reducible, or of growth one; for the
pseudo-Anosov case it computes the dilatation, the singularity structure of
the invariant foliations, and a hyperbolic picture of the resulting train
track.  See the ``traintrack`` command line tool for the packaged pipeline.
"""

from .errors import (
    CurveNotRealizable,
    GraphStructureError,
    InternalInvariantError,
    IterationLimitExceeded,
    MapCompatibilityError,
    PackingDidNotConverge,
)
from .graphs import (
    EmbeddedGraph,
    GraphSelfMap,
    compose,
    cyclic_tighten,
    genus_of,
    identity_map,
    is_cyclic_rotation,
    reverse_path,
    tighten,
)
from .growth import is_irreducible, is_permutation_matrix, spectral_radius
from .twist import (
    CurveOnGraph,
    compose_word,
    dehn_twist,
    standard_generators,
    standard_rose,
)
from .bh import (
    GrowthOne,
    Reducible,
    TrainTrack,
    bestvina_handel,
    collapse_invariant_forest,
    fold,
    gate_map,
    gates,
    is_train_track,
    pull_tight,
    remove_valence_one,
    remove_valence_two,
    subdivide,
)
from .analysis import (
    InfinitesimalPolygon,
    SingularityReport,
    full_report,
    infinitesimal_edges,
    orbit_permutation,
    polygons,
    puncture_index,
)
from .hyplayout import (
    ConeTriangulation,
    DiskLayout,
    PackingRadii,
    circle_pack,
    cone_triangulation,
    develop,
    emit_svg,
)

__version__ = "0.1.0"

__all__ = [
    "ConeTriangulation",
    "CurveNotRealizable",
    "CurveOnGraph",
    "DiskLayout",
    "EmbeddedGraph",
    "GraphSelfMap",
    "GraphStructureError",
    "GrowthOne",
    "InfinitesimalPolygon",
    "InternalInvariantError",
    "IterationLimitExceeded",
    "MapCompatibilityError",
    "PackingDidNotConverge",
    "PackingRadii",
    "Reducible",
    "SingularityReport",
    "TrainTrack",
    "bestvina_handel",
    "circle_pack",
    "collapse_invariant_forest",
    "compose",
    "compose_word",
    "cone_triangulation",
    "cyclic_tighten",
    "dehn_twist",
    "develop",
    "emit_svg",
    "fold",
    "full_report",
    "gate_map",
    "gates",
    "genus_of",
    "identity_map",
    "infinitesimal_edges",
    "is_cyclic_rotation",
    "is_irreducible",
    "is_permutation_matrix",
    "is_train_track",
    "orbit_permutation",
    "polygons",
    "pull_tight",
    "puncture_index",
    "remove_valence_one",
    "remove_valence_two",
    "spectral_radius",
    "standard_generators",
    "standard_rose",
    "subdivide",
    "tighten",
]
