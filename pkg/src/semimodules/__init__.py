"""Exact computations for semimodules over two-generator numerical semigroups."""
from .dual import DualSet, conductor_dual, dual_bruteforce, dual_from_syzygy
from .lattice_path import (
    LatticePath,
    enumerate_paths,
    enumerate_semimodules,
    lean_to_path,
    path_from_steps,
    path_from_vertices,
    path_to_semimodule,
    render,
)
from .semigroup import (
    LatticePoint,
    Order,
    SemigroupPair,
    conductor_semigroup,
    contains,
    gap_to_point,
    gaps_semigroup,
    make_semigroup,
    point_to_value,
    precede,
    value_to_point,
)
from .semimodule import (
    AperySet,
    Semimodule,
    apery,
    conductor_bruteforce,
    conductor_via_apery,
    contains_semimodule,
    gaps_semimodule,
    is_lean,
    make_semimodule,
    minimalize,
    normalize,
)
from .syzygy import (
    DegenerateSemimoduleError,
    InconsistencyError,
    SyzygySet,
    check_lemma_aux,
    check_syzygy_congruences,
    conductor_syzygy,
    syzygy_bruteforce,
    syzygy_generators,
)
from .verify import AnalysisReport, SweepReport, analyze, sweep_verify

__version__ = "0.1.0"
