"""Upper bounds on the mass a greedy run still has to place."""

import numpy as np

from mec.core.models import InstanceSet


def rem_mass_simple(s: InstanceSet, y: float) -> float:
    """max over p of sum_j min(p(j), y)."""
    return max(float(np.minimum(a, y).sum()) for a in s.arrays)


def rem_mass_advanced(s: InstanceSet, y: float) -> float:
    """max over p of the piecewise sum: y below p/2, p/2 up to p, p from p on."""
    best = 0.0
    for a in s.arrays:
        terms = np.where(y <= a / 2, y, np.where(y < a, a / 2, a))
        best = max(best, float(terms.sum()))
    return best
