"""Computable lower bounds and greedy remaining-mass certificates."""

from mec.bounds.meet import majorization_meet, majorizes, meet_masses
from mec.bounds.profile import (
    ProfileCurve,
    major_profile,
    major_profile_masses,
    profile_cost,
    profile_curve,
    profile_entropy,
    profile_transpose_entropy,
    profile_value,
    sketch_points,
)
from mec.bounds.registry import (
    BOUND_KINDS,
    BoundKind,
    bound_value,
    lower_bound,
    parse_bound_kind,
)
from mec.bounds.rem_mass import rem_mass_advanced, rem_mass_simple

__all__ = [
    "BOUND_KINDS",
    "BoundKind",
    "ProfileCurve",
    "bound_value",
    "lower_bound",
    "major_profile",
    "major_profile_masses",
    "majorization_meet",
    "majorizes",
    "meet_masses",
    "parse_bound_kind",
    "profile_cost",
    "profile_curve",
    "profile_entropy",
    "profile_transpose_entropy",
    "profile_value",
    "rem_mass_advanced",
    "rem_mass_simple",
    "sketch_points",
]
