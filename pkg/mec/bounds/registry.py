"""Lower bounds on the optimal coupling entropy, selectable by name."""

from collections.abc import Callable, Sequence
from typing import Literal, get_args

import numpy.typing as npt

from mec.bounds.meet import meet_masses
from mec.bounds.profile import curve_entropy, major_profile_masses, profile_points
from mec.core.entropy import masses_entropy
from mec.core.models import InstanceSet
from mec.utils.errors import InvalidInputError

BoundKind = Literal["zero", "meet", "profile", "major-profile"]
BOUND_KINDS: tuple[BoundKind, ...] = get_args(BoundKind)

Arrays = Sequence[npt.ArrayLike]


def _zero(arrays: Arrays) -> float:
    return 0.0


def _meet(arrays: Arrays) -> float:
    return max(0.0, masses_entropy(meet_masses(arrays)))


def _profile(arrays: Arrays) -> float:
    xs, ys = profile_points(arrays)
    return max(0.0, curve_entropy(xs, ys))


def _major_profile(arrays: Arrays) -> float:
    xs, ys = profile_points(arrays)
    major = masses_entropy(major_profile_masses(xs.tolist(), ys.tolist()))
    # at least both others in exact arithmetic; rounding can break the tie
    return max(major, curve_entropy(xs, ys), masses_entropy(meet_masses(arrays)))


BOUNDS: dict[BoundKind, Callable[[Arrays], float]] = {
    "zero": _zero,
    "meet": _meet,
    "profile": _profile,
    "major-profile": _major_profile,
}


def parse_bound_kind(name: str) -> BoundKind:
    key = name.strip().lower().replace("_", "-")
    if key == "majorprofile":
        key = "major-profile"
    if key not in BOUNDS:
        raise InvalidInputError(f"unknown bound {name!r}; choose from {', '.join(BOUND_KINDS)}")
    return key  # type: ignore[return-value]


def bound_value(kind: BoundKind, arrays: Arrays) -> float:
    """Bound on raw (possibly partial, unsorted) mass arrays."""
    return BOUNDS[kind](arrays)


def lower_bound(s: InstanceSet, kind: BoundKind) -> float:
    return bound_value(kind, s.arrays)
