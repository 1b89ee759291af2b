"""Planar map four-coloring engine.

Spiral-chain face coloring of cubic bridgeless maps, the Kempe-chain
machinery with its classical bad examples, and exact oracles that verify
every heuristic result.
"""

from .coloring import (
    BROWN,
    COLOR_NAMES,
    DARK_BLUE,
    GREEN,
    LIGHT_BLUE,
    WHITE,
    compute_spots,
    detect_islands,
    is_proper,
)
from .contraction import contract_small_faces, expand_small_faces
from .corpus import builtin_corpus, corpus_instance, load_map
from .embedding import PlanarEmbedding, build_embedding
from .kempe import (
    MaximalPlanarGraph,
    build_generator_graph,
    color_triangulated_ring,
    derive_twin_bad_examples,
    is_impasse,
    kempe_chain,
    kempe_four_color,
    kempe_switch,
    resolve_impasse,
    verify_two_path_decomposition,
)
from .kernels import BACKEND
from .mapgen import random_normal_map
from .normal_map import EulerStats, NormalMap, euler_polygon_check, validate_normal_map
from .oracle import (
    backtrack_four_color,
    bipartite_decomposition,
    equitable_claim_search,
    is_hamiltonian,
    strong_coloring_search,
    three_colorable_by_heawood,
    verify_proper,
)
from .rings import ring_parity_by_labels, white_rings
from .spiral import SpiralOrder, spiral_order
from .steps import (
    RunReport,
    block_odd_ring,
    four_color,
    kempe_switch_faces,
    step1_monochromatic,
    step2_dichromatic,
    step3_complete,
)

__version__ = "0.1.0"
