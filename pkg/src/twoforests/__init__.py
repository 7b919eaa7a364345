"""Two-forest vertex partitions of 4-cycle-free toroidal graphs, with an
exact-rational discharging auditor for embedded instances."""

from .graph import (
    BlockDecomposition,
    Graph,
    TwoColoring,
    block_decomposition,
    build_graph,
    find_four_cycle,
    find_monochromatic_cycle,
    girth,
    triangles,
)
from .embedding import (
    EmbeddingReport,
    FaceSet,
    RotationSystem,
    check_preconditions,
    genus,
    trace_faces,
)
from .triangles import (
    AuxGraph,
    DegreeCensus,
    TriangularCycleConfig,
    bad_vertices,
    build_aux_graph,
    classify_components,
    degree_census,
    find_triangular_cycle_config,
)
from .partition import (
    ExtensionContext,
    ExtensionOutcome,
    PartitionResult,
    extend_low_degree,
    extend_over_cycle,
    extend_triangular_config,
    merge_block_colorings,
    partition,
)
from .discharging import (
    AuditReport,
    ChargeLedger,
    apply_R1,
    apply_R2,
    apply_R3,
    audit,
    initial_charges,
    run_discharging,
)
from .oracle import arboricity_at_most, vertex_arboricity
from .generate import GenParams, gen_config_instance, gen_instance

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "AuxGraph",
    "BlockDecomposition",
    "ChargeLedger",
    "DegreeCensus",
    "EmbeddingReport",
    "ExtensionContext",
    "ExtensionOutcome",
    "FaceSet",
    "GenParams",
    "Graph",
    "PartitionResult",
    "RotationSystem",
    "TriangularCycleConfig",
    "TwoColoring",
    "apply_R1",
    "apply_R2",
    "apply_R3",
    "arboricity_at_most",
    "audit",
    "bad_vertices",
    "block_decomposition",
    "build_aux_graph",
    "build_graph",
    "check_preconditions",
    "classify_components",
    "degree_census",
    "extend_low_degree",
    "extend_over_cycle",
    "extend_triangular_config",
    "find_four_cycle",
    "find_monochromatic_cycle",
    "find_triangular_cycle_config",
    "gen_config_instance",
    "gen_instance",
    "genus",
    "girth",
    "initial_charges",
    "merge_block_colorings",
    "partition",
    "run_discharging",
    "trace_faces",
    "triangles",
    "vertex_arboricity",
]
