"""Domain types: distributions, instance sets, couplings and cost functions."""

import math
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Literal

import numpy as np
import numpy.typing as npt
from scipy.special import entr

from mec.utils.errors import InvalidInputError

EPS = 1e-12
LN2 = math.log(2.0)
LG_E = math.log2(math.e)
# additive guarantees over the profile: m = 2, and any m
LG_E_OVER_E = LG_E / math.e
HALF_ONE_PLUS_LG_E = (1.0 + LG_E) / 2.0

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True)
class Dist:
    """A possibly-partial distribution, masses sorted non-increasing."""

    masses: tuple[float, ...]

    def __post_init__(self) -> None:
        for a, b in zip(self.masses, self.masses[1:], strict=False):
            if b > a:
                raise InvalidInputError(f"masses not sorted non-increasing: {b} after {a}")
        if self.masses and self.masses[-1] < EPS:
            raise InvalidInputError(f"stored mass below EPS: {self.masses[-1]}")
        if self.total > 1.0 + EPS:
            raise InvalidInputError(f"total mass {self.total} exceeds 1")

    @classmethod
    def from_masses(cls, values: Iterable[float], normalize: bool = False) -> "Dist":
        """Sort, trim sub-EPS dust and optionally renormalize raw masses."""
        arr = np.asarray(list(values), dtype=np.float64).ravel()
        if arr.size == 0:
            raise InvalidInputError("empty distribution")
        if not np.all(np.isfinite(arr)):
            raise InvalidInputError("non-finite mass")
        if np.any(arr < -EPS):
            raise InvalidInputError(f"negative mass: {float(arr.min())}")
        arr = np.clip(arr, 0.0, None)
        if normalize:
            total = math.fsum(arr)
            if total <= 0.0:
                raise InvalidInputError("cannot normalize a zero distribution")
            arr = arr / total
        arr = np.sort(arr[arr >= EPS])[::-1]
        return cls(tuple(float(x) for x in arr))

    @cached_property
    def total(self) -> float:
        return math.fsum(self.masses)

    @cached_property
    def array(self) -> FloatArray:
        arr = np.array(self.masses, dtype=np.float64)
        arr.setflags(write=False)
        return arr

    def __len__(self) -> int:
        return len(self.masses)


@dataclass(frozen=True)
class InstanceSet:
    """The coupling input: m distributions of equal total mass."""

    dists: tuple[Dist, ...]

    def __post_init__(self) -> None:
        if not self.dists:
            raise InvalidInputError("an instance needs at least one distribution")
        totals = [d.total for d in self.dists]
        # trimming drops up to one EPS per state
        tol = max(self.n, 1) * EPS
        if max(totals) - min(totals) > tol:
            raise InvalidInputError(
                f"mismatched totals: {min(totals):.12g} vs {max(totals):.12g}"
            )

    @classmethod
    def from_lists(
        cls, lists: Sequence[Iterable[float]], normalize: bool = False
    ) -> "InstanceSet":
        return cls(tuple(Dist.from_masses(values, normalize=normalize) for values in lists))

    @property
    def m(self) -> int:
        return len(self.dists)

    @property
    def n(self) -> int:
        return max(len(d) for d in self.dists)

    @property
    def total(self) -> float:
        return max(d.total for d in self.dists)

    @property
    def arrays(self) -> tuple[FloatArray, ...]:
        return tuple(d.array for d in self.dists)


@dataclass(frozen=True)
class CouplingEntry:
    indices: tuple[int, ...]
    mass: float


@dataclass(frozen=True)
class Coupling:
    """Sparse joint distribution: one entry per positive cell."""

    entries: tuple[CouplingEntry, ...]

    def __post_init__(self) -> None:
        arities = {len(e.indices) for e in self.entries}
        if len(arities) > 1:
            raise InvalidInputError(f"entries of mixed arity: {sorted(arities)}")
        for e in self.entries:
            if not e.mass > 0.0:
                raise InvalidInputError(f"non-positive entry mass {e.mass} at {e.indices}")
            if any(i < 0 for i in e.indices):
                raise InvalidInputError(f"negative state index in {e.indices}")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[Sequence[int], float]]) -> "Coupling":
        """Build from (indices, mass) pairs, skipping zero cells."""
        return cls(
            tuple(
                CouplingEntry(tuple(int(i) for i in idx), float(mass))
                for idx, mass in pairs
                if mass > 0.0
            )
        )

    @property
    def m(self) -> int:
        return len(self.entries[0].indices) if self.entries else 0

    @property
    def support_size(self) -> int:
        return len(self.entries)

    @property
    def masses(self) -> FloatArray:
        return np.array([e.mass for e in self.entries], dtype=np.float64)


@dataclass(frozen=True)
class CostFn:
    """Concave nonnegative cost with f(0) = 0: Shannon or x**c."""

    kind: Literal["shannon", "power"] = "shannon"
    exponent: float | None = None

    def __post_init__(self) -> None:
        if self.kind == "power":
            if self.exponent is None or not 0.0 < self.exponent < 1.0:
                raise InvalidInputError(f"power exponent must lie in (0, 1), got {self.exponent}")
        elif self.exponent is not None:
            raise InvalidInputError("shannon cost takes no exponent")

    @classmethod
    def shannon(cls) -> "CostFn":
        return cls("shannon")

    @classmethod
    def power(cls, c: float) -> "CostFn":
        return cls("power", float(c))

    @classmethod
    def parse(cls, text: str) -> "CostFn":
        """Parse "shannon" or "power:<c>"."""
        name, _, arg = text.strip().lower().partition(":")
        if name == "shannon" and not arg:
            return cls.shannon()
        if name == "power" and arg:
            try:
                return cls.power(float(arg))
            except ValueError as e:
                raise InvalidInputError(f"bad power exponent: {arg}") from e
        raise InvalidInputError(f"unknown cost: {text!r} (use shannon or power:<c>)")

    @property
    def name(self) -> str:
        return "shannon" if self.kind == "shannon" else f"power({self.exponent:g})"

    def f_cost(self, x: npt.ArrayLike) -> FloatArray:
        """Elementwise f_cost; 0 maps to 0."""
        arr = np.clip(np.asarray(x, dtype=np.float64), 0.0, None)
        if self.kind == "shannon":
            return np.asarray(entr(arr) / LN2, dtype=np.float64)
        return np.power(arr, self.exponent)

    def f_unit(self, x: npt.ArrayLike) -> FloatArray:
        """Elementwise f_cost(x) / x; infinite at 0."""
        arr = np.clip(np.asarray(x, dtype=np.float64), 0.0, None)
        with np.errstate(divide="ignore"):
            if self.kind == "shannon":
                return np.asarray(-np.log2(arr), dtype=np.float64)
            assert self.exponent is not None
            return np.power(arr, self.exponent - 1.0)

    def is_concave_on_grid(self, points: int = 1001) -> bool:
        """f(0) = 0, f >= 0 and non-positive second differences on [0, 1]."""
        grid = np.linspace(0.0, 1.0, points)
        values = self.f_cost(grid)
        if values[0] != 0.0 or np.any(values < 0.0):
            return False
        return bool(np.all(np.diff(values, n=2) <= 1e-12))


SHANNON = CostFn.shannon()
