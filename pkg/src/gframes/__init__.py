"""Finite g-frames: frame operators, bounds, duals and operator representations."""
from .errors import *  # noqa: F401,F403  (re-export)
from .linalg import DEFAULT_TOL, Tolerance
from .frames import (
    Classification,
    FrameBounds,
    GFrame,
    analysis_matrix,
    classify,
    flatten,
    frame_bounds,
    frame_operator,
    is_frame_bounds,
    lift,
    synthesis_matrix,
)
from .representation import (
    Certificate,
    IsometryReport,
    RepresentationResult,
    certify_theorem_MT,
    check_representation,
    cyclic_closure_residual,
    find_representation,
    find_representation_bilateral,
    isometry_report,
    kernel_shift_invariance,
    similarity_transport,
)
from .duality import (
    CanonicalDualRepresentation,
    DualReport,
    canonical_dual,
    canonical_dual_representation,
    dual_defect,
    dual_representation_condition,
    dualrep_gap,
    dualrep_relation,
    representation_from_dual,
    verify_dual_pair,
)
from .generators import GenSpec, generate, random_spec
from .catalog import CATALOG_IDS, paper_catalog
from .io import InstanceFile, emit_instance, fingerprint, load_instance, parse_instance

__version__ = "0.1.0"
