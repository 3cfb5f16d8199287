"""Domain types, entropy evaluation, validation and file I/O."""

from mec.core.entropy import (
    coupling_cost,
    coupling_entropy,
    cost,
    entropy,
    masses_cost,
    masses_entropy,
)
from mec.core.io import load_coupling, load_instance, save_coupling, save_instance
from mec.core.models import (
    EPS,
    HALF_ONE_PLUS_LG_E,
    LG_E,
    LG_E_OVER_E,
    LN2,
    SHANNON,
    Coupling,
    CouplingEntry,
    CostFn,
    Dist,
    InstanceSet,
)
from mec.core.validation import (
    CouplingReport,
    MarginalViolation,
    support_limit,
    validate_coupling,
)

__all__ = [
    "EPS",
    "HALF_ONE_PLUS_LG_E",
    "LG_E",
    "LG_E_OVER_E",
    "LN2",
    "SHANNON",
    "Coupling",
    "CouplingEntry",
    "CouplingReport",
    "CostFn",
    "Dist",
    "InstanceSet",
    "MarginalViolation",
    "coupling_cost",
    "coupling_entropy",
    "cost",
    "entropy",
    "load_coupling",
    "load_instance",
    "masses_cost",
    "masses_entropy",
    "save_coupling",
    "save_instance",
    "support_limit",
    "validate_coupling",
]
