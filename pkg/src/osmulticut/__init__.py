"""Minimum multicut on Okamura-Seymour instances via Steiner forest in a modified planar dual."""

from .dual import DualEdge, DualGraph, DualVertex, EdgeKind, VertexKind, build_dual, dual_edges_of, primal_of
from .errors import (
    BudgetExceeded,
    ExtractionNotSeparating,
    InvariantViolation,
    OSMulticutError,
    ValidationError,
)
from .instance import BoundarySplit, OSInstance, TerminalPair, boundary_split, validate_os_instance
from .io import InstanceFile, load_instance_file, parse_instance, serialize_instance
from .multicut import (
    MulticutSolution,
    cut_dual_connectivity,
    extract_multicut,
    minimalize,
    verify_multicut,
)
from .oracle import (
    OracleBudget,
    check_cut_condition,
    check_euler_condition,
    exact_min_multicut,
    exact_min_steiner_forest,
)
from .pipeline import RunReport, run_batch, run_pipeline
from .planar import (
    Dart,
    EdgeRecord,
    EmbeddedGraph,
    Face,
    build_graph,
    check_biconnected,
    enumerate_faces,
    outer_face,
)
from .steiner import ForestSolution, gw_steiner_forest, reverse_delete, verify_forest

__version__ = "0.1.0"
