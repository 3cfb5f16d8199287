"""Instance generators: random simplex draws and the structured gap families."""

import logging
from dataclasses import dataclass

import numpy as np

from mec.core.models import Coupling, CouplingEntry, Dist, FloatArray, InstanceSet
from mec.utils.errors import InvalidInputError

logger = logging.getLogger(__name__)

MAX_FIB_INDEX = 40
GEOMETRIC_PERIOD = 2


def make_rng(*seed: int) -> np.random.Generator:
    """PCG64 generator; several ints are mixed into one seed sequence."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(list(seed))))


def sample_simplex(rng: np.random.Generator, n: int) -> FloatArray:
    """Dirichlet(1, ..., 1) draw via normalized unit-rate exponentials, unsorted."""
    draws = rng.standard_exponential(n)
    return draws / draws.sum()


def gen_dirichlet(n: int, m: int, seed: int) -> InstanceSet:
    if n < 1 or m < 1:
        raise InvalidInputError(f"n and m must be positive, got n={n}, m={m}")
    rng = make_rng(seed)
    return InstanceSet.from_lists([sample_simplex(rng, n) for _ in range(m)])


def dirichlet_pairs(n1: int, n2: int, count: int, seed: int) -> list[InstanceSet]:
    """`count` two-distribution instances, reproducible per (seed, n1, n2)."""
    rng = make_rng(seed, n1, n2)
    return [
        InstanceSet.from_lists([sample_simplex(rng, n1), sample_simplex(rng, n2)])
        for _ in range(count)
    ]


def uniform(n: int) -> Dist:
    return Dist((1.0 / n,) * n)


def fibonacci(t: int) -> int:
    a, b = 0, 1
    for _ in range(t):
        a, b = b, a + b
    return a


def lucas(t: int) -> int:
    a, b = 2, 1
    for _ in range(t):
        a, b = b, a + b
    return a


def gen_fib_lucas(t: int) -> InstanceSet:
    """Uniform distributions on F_t and L_{t-1} states."""
    if t < 3:
        raise InvalidInputError(f"t must be at least 3, got {t}")
    if t > MAX_FIB_INDEX:
        raise InvalidInputError(f"t={t} exceeds {MAX_FIB_INDEX}: state counts overflow memory")
    return InstanceSet((uniform(fibonacci(t)), uniform(lucas(t - 1))))


def gen_uniform_family(n_max: int) -> InstanceSet:
    """U_1, ..., U_{n_max}."""
    if n_max < 1:
        raise InvalidInputError(f"n_max must be positive, got {n_max}")
    return InstanceSet(tuple(uniform(n) for n in range(1, n_max + 1)))


def gen_geometric_gap(k: int = 40) -> InstanceSet:
    """Two distributions with ratio-1/2 tails truncated after k terms.

    Greedy consumes the tails two terms at a time, so an odd k is rounded down
    to the nearest even length (at least 2); the gap then approaches its limit
    without oscillating. The last tail term is doubled so both sum to one. The
    second distribution refines the first, so it is itself the optimal coupling.
    """
    if k < 1:
        raise InvalidInputError(f"tail length must be positive, got {k}")
    length = max(GEOMETRIC_PERIOD, k - k % GEOMETRIC_PERIOD)

    def tail(start: float) -> list[float]:
        terms = [start * 0.5**i for i in range(length)]
        terms[-1] *= 2.0
        return terms

    return InstanceSet.from_lists([[0.4, *tail(0.3)], [0.3, 0.2, 0.2, *tail(0.15)]])


@dataclass(frozen=True)
class CoarseningFamily:
    """A base distribution, random coarsenings of it, and the base as a coupling."""

    instance: InstanceSet
    base: Dist
    witness: Coupling


def gen_coarsening_family(base_n: int, m: int, seed: int) -> CoarseningFamily:
    """Base Dirichlet distribution followed by m - 1 random merges of its states.

    Every member is a coarsening of the base, so the base couples them all and
    no coupling can have lower entropy.
    """
    if base_n < 1 or m < 1:
        raise InvalidInputError(f"base_n and m must be positive, got {base_n}, {m}")
    rng = make_rng(seed, base_n, m)
    base = Dist.from_masses(sample_simplex(rng, base_n))
    masses = base.array
    members = [base]
    rank_of_state = [np.arange(len(base))]
    for _ in range(m - 1):
        labels = rng.integers(0, len(base), size=len(base))
        blocks, block_of_state = np.unique(labels, return_inverse=True)
        block_mass = np.bincount(block_of_state, weights=masses, minlength=blocks.size)
        order = np.argsort(-block_mass, kind="stable")
        rank = np.empty(blocks.size, dtype=np.int64)
        rank[order] = np.arange(blocks.size)
        members.append(Dist(tuple(float(x) for x in block_mass[order])))
        rank_of_state.append(rank[block_of_state])
    witness = Coupling(
        tuple(
            CouplingEntry(tuple(int(r[j]) for r in rank_of_state), float(masses[j]))
            for j in range(len(base))
        )
    )
    return CoarseningFamily(InstanceSet(tuple(members)), base, witness)
