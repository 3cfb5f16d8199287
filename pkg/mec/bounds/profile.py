"""Sketches, the profile curve and the Major-Profile distribution.

A sketch draws each state of a distribution as a box of width and height equal
to its mass, smallest states leftmost. The profile is the pointwise minimum of
all sketches; its entropy integral lower-bounds the optimal coupling entropy.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from mec.bounds.meet import _sorted_positive
from mec.core.models import EPS, CostFn, Dist, FloatArray, InstanceSet


@dataclass(frozen=True)
class ProfileCurve:
    """Reduced breakpoints (x, y), starting at (0, 0).

    The curve takes value ys[i] on (xs[i-1], xs[i]].
    """

    xs: tuple[float, ...]
    ys: tuple[float, ...]

    @cached_property
    def x_array(self) -> FloatArray:
        return np.array(self.xs, dtype=np.float64)

    @cached_property
    def y_array(self) -> FloatArray:
        return np.array(self.ys, dtype=np.float64)

    @property
    def mass(self) -> float:
        return self.xs[-1]

    @property
    def points(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.ys, strict=True))


def profile_points(arrays: Sequence[npt.ArrayLike]) -> tuple[FloatArray, FloatArray]:
    """Suffix-sum/height pairs of every sketch, reduced to the lower envelope."""
    xs_parts = [np.zeros(1)]
    ys_parts = [np.zeros(1)]
    for a in arrays:
        sorted_a = _sorted_positive(a)
        if sorted_a.size:
            xs_parts.append(np.cumsum(sorted_a[::-1])[::-1])
            ys_parts.append(sorted_a)
    xs = np.concatenate(xs_parts)
    ys = np.concatenate(ys_parts)

    # decreasing x, ties by increasing y
    order = np.lexsort((ys, -xs))
    xs, ys = xs[order], ys[order]
    running_min = np.minimum.accumulate(ys)
    keep = np.ones(xs.size, dtype=bool)
    keep[1:] = ys[1:] < running_min[:-1]
    return xs[keep][::-1], ys[keep][::-1]


def sketch_points(d: Dist) -> ProfileCurve:
    """Sketch of a single distribution as a curve."""
    return profile_curve(InstanceSet((d,)))


def profile_curve(s: InstanceSet) -> ProfileCurve:
    xs, ys = profile_points(s.arrays)
    return ProfileCurve(tuple(xs.tolist()), tuple(ys.tolist()))


def profile_value(pc: ProfileCurve, x: float) -> float:
    """Curve height at x (0 at or left of the origin, last height past the end)."""
    if x <= 0.0:
        return 0.0
    idx = int(np.searchsorted(pc.x_array, x, side="left"))
    return pc.ys[min(idx, len(pc.ys) - 1)]


def curve_entropy(xs: FloatArray, ys: FloatArray) -> float:
    if xs.size < 2:
        return 0.0
    return float(np.sum(np.diff(xs) * -np.log2(ys[1:])))


def profile_entropy(pc: ProfileCurve) -> float:
    """Sum of (x2 - x1) * lg(1 / y2) over adjacent breakpoints."""
    return curve_entropy(pc.x_array, pc.y_array)


def profile_transpose_entropy(pc: ProfileCurve) -> float:
    """Entropy through the inverse view h(y) = x_i on [y_i, y_{i+1})."""
    xs, ys = pc.x_array[1:], pc.y_array[1:]
    if xs.size == 0:
        return 0.0
    upper = np.append(ys[1:], 1.0)
    return float(np.sum(xs * np.log2(upper / ys)))


def curve_cost(xs: FloatArray, ys: FloatArray, f: CostFn) -> float:
    if xs.size < 2:
        return 0.0
    return float(np.sum(np.diff(xs) * f.f_unit(ys[1:])))


def profile_cost(pc: ProfileCurve, f: CostFn) -> float:
    """Concave-cost lower bound: sum of (x2 - x1) * f_unit(y2)."""
    return curve_cost(pc.x_array, pc.y_array, f)


def major_profile_masses(xs: Sequence[float], ys: Sequence[float]) -> list[float]:
    """Grow squares under the curve from the right.

    With t the remaining extent, the next mass is min over breakpoints of
    max(y, t - x). j tracks the first breakpoint with x + y > t, which only
    moves left as t shrinks.
    """
    if len(xs) < 2:
        return []
    t = xs[-1]
    j = len(xs) - 1
    out = []
    while t > EPS:
        while j > 1 and xs[j - 1] + ys[j - 1] > t:
            j -= 1
        r = min(t - xs[j - 1], ys[j])
        if r <= EPS:
            break
        out.append(r)
        t -= r
    return out


def major_profile(pc: ProfileCurve) -> Dist:
    return Dist.from_masses(major_profile_masses(pc.xs, pc.ys))
