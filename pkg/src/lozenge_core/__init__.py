# src/lozenge_core/__init__.py
"""
lozenge_core: headless library for lozenge tilings of triangular-grid domains
(tileability, height functions, the lattice of tilings, exactly-once enumeration).

This package is designed to be called from the lozenge-forge CLI or from scripts.
"""

from .io import (
    LozengeError,
    InputError,
    Untileable,
    InconsistentHeights,
)
from .grid import (
    Direction,
    Vertex,
    Triangle,
    Lozenge,
    U,
    D,
    step,
    inverse,
    lozenge_cells,
    hexagon_ring,
)
from .domain import (
    ContourWord,
    Domain,
    parse_contour,
    trace,
    enclose,
    l_label_is_trivial,
    hexagon,
    pseudo_hexagon,
    contour_of,
)
from .heights import (
    HeightFunction,
    evaluate,
    boundary_heights,
    height_from_tiling,
    tiling_from_height,
    is_height_function,
    compare,
    pointwise_min,
    pointwise_max,
    distance,
)
from .tiling import (
    Tiling,
    validate,
    thurston,
    minimal_tiling,
    maximal_tiling,
    local_extrema,
    flip,
    oracle_all_tilings,
    recursive_tilings,
)
from .lattice import (
    TilingLattice,
    build_lattice,
    inf,
    sup,
    interval,
    product,
    stitch,
    sup_irreducibles,
    to_dot,
)
from .fracture import Zone, ZoneDecomposition, solid_vertices, fracture_zones
from .partitions import (
    limited_partitions,
    limited_plane_partitions,
    all_limited_plane_partitions,
    conjugate,
    as_partition,
    as_plane_partition,
    weight,
    meet,
)
from .seeds import (
    Cube,
    Pile,
    Seed,
    SeedRecord,
    Generation,
    find_seeds,
    maximal_filling,
    proper_seeds,
    seed_generations,
    dk_chain,
    min_with_cubes,
    filling_columns,
    tiling_of_pile,
    c_minimal_tilings,
    fundamental_intervals,
    pile_of,
)
from .enumerator import (
    EnumerateOptions,
    EnumerationStats,
    EnumerationResult,
    enumerate_zone,
    enumerate_domain,
    stream_tilings,
)

__all__ = [
    # errors
    "LozengeError",
    "InputError",
    "Untileable",
    "InconsistentHeights",
    # grid
    "Direction",
    "Vertex",
    "Triangle",
    "Lozenge",
    "U",
    "D",
    "step",
    "inverse",
    "lozenge_cells",
    "hexagon_ring",
    # domain
    "ContourWord",
    "Domain",
    "parse_contour",
    "trace",
    "enclose",
    "l_label_is_trivial",
    "hexagon",
    "pseudo_hexagon",
    "contour_of",
    # heights
    "HeightFunction",
    "evaluate",
    "boundary_heights",
    "height_from_tiling",
    "tiling_from_height",
    "is_height_function",
    "compare",
    "pointwise_min",
    "pointwise_max",
    "distance",
    # tiling
    "Tiling",
    "validate",
    "thurston",
    "minimal_tiling",
    "maximal_tiling",
    "local_extrema",
    "flip",
    "oracle_all_tilings",
    "recursive_tilings",
    # lattice
    "TilingLattice",
    "build_lattice",
    "inf",
    "sup",
    "interval",
    "product",
    "stitch",
    "sup_irreducibles",
    "to_dot",
    # fracture
    "Zone",
    "ZoneDecomposition",
    "solid_vertices",
    "fracture_zones",
    # partitions
    "limited_partitions",
    "limited_plane_partitions",
    "all_limited_plane_partitions",
    "conjugate",
    "as_partition",
    "as_plane_partition",
    "weight",
    "meet",
    # seeds
    "Cube",
    "Pile",
    "Seed",
    "SeedRecord",
    "Generation",
    "find_seeds",
    "maximal_filling",
    "proper_seeds",
    "seed_generations",
    "dk_chain",
    "min_with_cubes",
    "filling_columns",
    "tiling_of_pile",
    "c_minimal_tilings",
    "fundamental_intervals",
    "pile_of",
    # enumerator
    "EnumerateOptions",
    "EnumerationStats",
    "EnumerationResult",
    "enumerate_zone",
    "enumerate_domain",
    "stream_tilings",
]

__version__ = "0.1.0"
