"""Quadratic-form optimization on the {-1,+1} hypercube with Hopfield dynamics."""

from .core import (
    BudgetError,
    InvalidInput,
    NumericalFailure,
    PreconditionError,
    canonicalize,
    cauchy_schwarz_bound,
    energy,
    quadratic_form,
    sign_map,
    volterra_form,
)
from .dynamics import FixedPoint, FullyParallel, HopfieldNetwork, Serial, StepLimit, Trajectory, TwoCycle
from .dynamics import is_stable_state, local_field, run, step
from .mincut import (
    CutPartition,
    WeightedGraph,
    brute_force_mincut,
    cut_weight,
    graph_to_network,
    mincut_heuristic,
    state_to_partition,
)
from .oracle import OracleResult, brute_force_energy, brute_force_optimum, enumerate_stable_vectors
from .spectral import (
    HeuristicIncomplete,
    Spectrum,
    corner_value_bound,
    eigen_decompose,
    expectation_view,
    lemma2_decompose,
    spectral_heuristic,
)
from .stability import (
    EigenClass,
    PatternSet,
    StabilityReport,
    all_ones_check,
    eigencorner_stability,
    is_anti_stable_vector,
    is_stable_vector,
    synthesize_memory,
)

__all__ = [
    "all_ones_check",
    "brute_force_energy",
    "brute_force_mincut",
    "brute_force_optimum",
    "BudgetError",
    "canonicalize",
    "cauchy_schwarz_bound",
    "corner_value_bound",
    "cut_weight",
    "CutPartition",
    "eigen_decompose",
    "EigenClass",
    "eigencorner_stability",
    "energy",
    "enumerate_stable_vectors",
    "expectation_view",
    "FixedPoint",
    "FullyParallel",
    "graph_to_network",
    "HeuristicIncomplete",
    "HopfieldNetwork",
    "InvalidInput",
    "is_anti_stable_vector",
    "is_stable_state",
    "is_stable_vector",
    "lemma2_decompose",
    "local_field",
    "mincut_heuristic",
    "NumericalFailure",
    "OracleResult",
    "PatternSet",
    "PreconditionError",
    "quadratic_form",
    "run",
    "Serial",
    "sign_map",
    "spectral_heuristic",
    "Spectrum",
    "StabilityReport",
    "state_to_partition",
    "step",
    "StepLimit",
    "synthesize_memory",
    "Trajectory",
    "TwoCycle",
    "volterra_form",
    "WeightedGraph",
]

__version__ = "0.1.0"
