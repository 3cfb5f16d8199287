"""Majorization meet of an instance set."""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from mec.core.models import EPS, Dist, FloatArray, InstanceSet


def _sorted_positive(a: npt.ArrayLike) -> FloatArray:
    arr = np.asarray(a, dtype=np.float64)
    return np.sort(arr[arr > EPS])[::-1]


def meet_masses(arrays: Sequence[npt.ArrayLike]) -> FloatArray:
    """Differences of the pointwise minimum of prefix sums."""
    sorted_arrays = [_sorted_positive(a) for a in arrays]
    n = max((a.size for a in sorted_arrays), default=0)
    if n == 0:
        return np.zeros(0)
    prefix = np.zeros((len(sorted_arrays), n))
    for row, a in zip(prefix, sorted_arrays, strict=True):
        if a.size:
            sums = np.cumsum(a)
            row[: a.size] = sums
            row[a.size :] = sums[-1]
    return np.diff(prefix.min(axis=0), prepend=0.0)


def majorization_meet(s: InstanceSet) -> Dist:
    """The largest distribution majorized by every member of `s`."""
    masses = meet_masses(s.arrays)
    assert np.all(np.diff(masses) <= EPS), "meet must be non-increasing"
    return Dist.from_masses(masses)


def majorizes(p: npt.ArrayLike, q: npt.ArrayLike, tol: float = 1e-9) -> bool:
    """True when every prefix sum of sorted `p` is at least that of sorted `q`."""
    a, b = _sorted_positive(p), _sorted_positive(q)
    n = max(a.size, b.size)
    pa = np.cumsum(np.pad(a, (0, n - a.size)))
    pb = np.cumsum(np.pad(b, (0, n - b.size)))
    return bool(np.all(pa >= pb - tol))
