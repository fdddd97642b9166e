"""Oriented unit discs in the plane: bond graphs, exact energy bookkeeping,
diamond ground states, and executable checkers for the supporting lemmas."""

from .config import (
    Configuration,
    Particle,
    Tolerances,
    DEFAULT_TOL,
    apply_rigid_motion,
    is_admissible,
    rhombic_perturb,
)
from .lattice import LatticeCoord, embed, lattice_patch
from .fileio import read_config, write_config, loads_config, dumps_config
from .bondgraph import (
    BondGraph,
    EdgeClassification,
    Face,
    FaceSet,
    build_edges,
    boundary_particles,
    classify_edges,
    connected_components,
    euler_characteristics,
    extract_faces,
    graph_perimeter,
)
from .triangulation import TriangulationResult, triangulate_face
from .energy import SQRT3_2, EnergyReport, decompose, energy, hr_energy, n_gamma
from .canonical import (
    CanonicalSpec,
    ShellDecomposition,
    canonical,
    canonical_perimeter,
    shell_decompose,
)
from .boundary import (
    BoundaryProfile,
    boundary_profile,
    check_increase,
    check_puntidibordo,
)
from .search import (
    SearchConfig,
    SearchResult,
    anneal,
    check_asymptotic_bounds,
    enumerate_lattice_oracle,
    reference_minimizer,
)
from .measures import MeasureDiagnostics, density_profile, diagnose
from .errors import OclError

__version__ = "0.1.0"

__all__ = [
    "Configuration",
    "Particle",
    "Tolerances",
    "DEFAULT_TOL",
    "apply_rigid_motion",
    "is_admissible",
    "rhombic_perturb",
    "LatticeCoord",
    "embed",
    "lattice_patch",
    "read_config",
    "write_config",
    "loads_config",
    "dumps_config",
    "BondGraph",
    "EdgeClassification",
    "Face",
    "FaceSet",
    "build_edges",
    "boundary_particles",
    "classify_edges",
    "connected_components",
    "euler_characteristics",
    "extract_faces",
    "graph_perimeter",
    "TriangulationResult",
    "triangulate_face",
    "SQRT3_2",
    "EnergyReport",
    "decompose",
    "energy",
    "hr_energy",
    "n_gamma",
    "CanonicalSpec",
    "ShellDecomposition",
    "canonical",
    "canonical_perimeter",
    "shell_decompose",
    "BoundaryProfile",
    "boundary_profile",
    "check_increase",
    "check_puntidibordo",
    "SearchConfig",
    "SearchResult",
    "anneal",
    "check_asymptotic_bounds",
    "enumerate_lattice_oracle",
    "reference_minimizer",
    "MeasureDiagnostics",
    "density_profile",
    "diagnose",
    "OclError",
]
