"""Entropy and concave-cost evaluation."""

import numpy as np
import numpy.typing as npt
from scipy.special import entr

from mec.core.models import LN2, SHANNON, Coupling, CostFn, Dist


def masses_entropy(masses: npt.ArrayLike) -> float:
    """Shannon entropy in bits of a raw mass list; zeros contribute 0."""
    arr = np.clip(np.asarray(masses, dtype=np.float64), 0.0, None)
    return float(entr(arr).sum() / LN2)


def masses_cost(masses: npt.ArrayLike, f: CostFn) -> float:
    return float(np.sum(f.f_cost(masses)))


def entropy(d: Dist) -> float:
    return masses_entropy(d.array)


def cost(d: Dist, f: CostFn) -> float:
    if f == SHANNON:
        return entropy(d)
    return masses_cost(d.array, f)


def coupling_entropy(c: Coupling) -> float:
    return masses_entropy(c.masses)


def coupling_cost(c: Coupling, f: CostFn) -> float:
    if f == SHANNON:
        return coupling_entropy(c)
    return masses_cost(c.masses, f)
