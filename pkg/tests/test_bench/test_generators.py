"""Tests for the instance generators."""

import math

import numpy as np
import pytest

from mec.bench.generators import (
    dirichlet_pairs,
    fibonacci,
    gen_coarsening_family,
    gen_dirichlet,
    gen_fib_lucas,
    gen_geometric_gap,
    gen_uniform_family,
    lucas,
    make_rng,
    sample_simplex,
)
from mec.core.entropy import coupling_entropy, entropy
from mec.core.validation import validate_coupling
from mec.greedy.coupler import greedy_sizes
from mec.utils.errors import InvalidInputError


class TestDirichlet:
    """Random simplex draws."""

    def test_sorted_and_normalized(self):
        s = gen_dirichlet(6, 3, seed=11)
        assert s.m == 3
        for d in s.dists:
            assert len(d) == 6
            assert math.fsum(d.masses) == pytest.approx(1.0, abs=1e-12)
            assert list(d.masses) == sorted(d.masses, reverse=True)

    def test_single_state(self):
        s = gen_dirichlet(1, 4, seed=0)
        assert all(d.masses == (1.0,) for d in s.dists)

    def test_reproducible(self):
        assert gen_dirichlet(5, 2, seed=3) == gen_dirichlet(5, 2, seed=3)
        assert gen_dirichlet(5, 2, seed=3) != gen_dirichlet(5, 2, seed=4)

    def test_flat_mean(self):
        rng = make_rng(7)
        draws = np.array([sample_simplex(rng, 4) for _ in range(4000)])
        assert draws.mean(axis=0) == pytest.approx([0.25] * 4, abs=0.02)

    def test_pairs_keyed_by_shape(self):
        pairs = dirichlet_pairs(3, 5, count=4, seed=1)
        assert len(pairs) == 4
        assert all(len(p) == 3 and len(q) == 5 for p, q in (s.dists for s in pairs))
        assert dirichlet_pairs(3, 5, count=4, seed=1) == pairs

    def test_rejects_empty(self):
        with pytest.raises(InvalidInputError):
            gen_dirichlet(0, 2, seed=0)


class TestStructuredFamilies:
    """Fibonacci/Lucas, uniform and geometric families."""

    def test_fib_lucas_numbers(self):
        assert [fibonacci(t) for t in range(1, 8)] == [1, 1, 2, 3, 5, 8, 13]
        assert [lucas(t) for t in range(0, 6)] == [2, 1, 3, 4, 7, 11]

    def test_fib_lucas_sizes(self):
        s = gen_fib_lucas(5)
        assert [len(d) for d in s.dists] == [5, 7]
        assert s.dists[0].masses[0] == pytest.approx(0.2)

    @pytest.mark.parametrize("t", [2, 41])
    def test_fib_lucas_range(self, t):
        with pytest.raises(InvalidInputError):
            gen_fib_lucas(t)

    def test_uniform_family(self):
        s = gen_uniform_family(4)
        assert [len(d) for d in s.dists] == [1, 2, 3, 4]

    def test_geometric_short_tail(self):
        s = gen_geometric_gap(4)
        p, q = s.dists
        assert p.masses == pytest.approx((0.4, 0.3, 0.15, 0.075, 0.075))
        assert q.masses == pytest.approx((0.3, 0.2, 0.2, 0.15, 0.075, 0.0375, 0.0375))

    def test_geometric_odd_length_rounds_down(self):
        assert gen_geometric_gap(5) == gen_geometric_gap(4)
        p, q = gen_geometric_gap(1).dists
        assert p.masses == pytest.approx((0.4, 0.3, 0.3))
        assert q.masses == pytest.approx((0.3, 0.2, 0.2, 0.15, 0.15))

    def test_geometric_gap_limit(self):
        s = gen_geometric_gap(40)
        gap = entropy(greedy_sizes(s)) - entropy(s.dists[1])
        assert gap == pytest.approx(0.4, abs=1e-6)

    def test_geometric_gap_converges_monotonically(self):
        errors = {}
        for k in range(9, 46):
            s = gen_geometric_gap(k)
            errors[k] = abs(entropy(greedy_sizes(s)) - entropy(s.dists[1]) - 0.4)
        for k in range(10, 46):
            assert errors[k] <= errors[k - 1] + 1e-14, (k, errors[k - 1], errors[k])
        assert errors[45] < errors[10]


class TestCoarsening:
    """Random coarsenings of one base distribution."""

    @pytest.mark.parametrize("seed", [0, 1, 2])
    def test_witness_is_a_coupling(self, seed):
        family = gen_coarsening_family(base_n=7, m=4, seed=seed)
        assert family.instance.m == 4
        assert family.instance.dists[0] == family.base
        assert validate_coupling(family.instance, family.witness).ok
        assert coupling_entropy(family.witness) == pytest.approx(entropy(family.base))

    def test_greedy_not_below_base(self):
        family = gen_coarsening_family(base_n=6, m=3, seed=5)
        assert entropy(greedy_sizes(family.instance)) >= entropy(family.base) - 1e-9
