"""saf: an initial-set based solver and explainer for abstract argumentation.

The package enumerates and classifies initial sets (non-empty minimal
admissible sets), builds extensions of six semantics as step-wise
commitments over reducts, answers the associated decision problems, and
exposes the step-wise construction interactively over HTTP.
"""

from .core import (
    ArgSet,
    ContractError,
    Framework,
    Projection,
    characteristic,
    defends,
    is_admissible,
    is_conflict_free,
    minus_set,
    plus_set,
    project,
    reduct,
    sccs,
)
from .initial import (
    InitialClass,
    InitialSetInfo,
    enumerate_initial_sets,
    has_admissible_subset_containing,
    is_initial,
    maximal_admissible_subset,
)
from .serial import (
    PRESETS,
    InvalidStep,
    Selection,
    SemanticsSpec,
    SerialisationSequence,
    SerialisationState,
    Termination,
    choices,
    decompose,
    enumerate_extensions,
    init_state,
    is_terminal,
    preset,
    step,
)

__all__ = [
    "ArgSet",
    "ContractError",
    "Framework",
    "InitialClass",
    "InitialSetInfo",
    "InvalidStep",
    "PRESETS",
    "Projection",
    "Selection",
    "SemanticsSpec",
    "SerialisationSequence",
    "SerialisationState",
    "Termination",
    "characteristic",
    "choices",
    "decompose",
    "defends",
    "enumerate_extensions",
    "enumerate_initial_sets",
    "has_admissible_subset_containing",
    "init_state",
    "is_admissible",
    "is_conflict_free",
    "is_initial",
    "is_terminal",
    "maximal_admissible_subset",
    "minus_set",
    "plus_set",
    "preset",
    "project",
    "reduct",
    "sccs",
    "step",
]

__version__ = "0.1.0"
