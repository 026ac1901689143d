"""Seeded random instances for property testing.

Every generator is a pure function of its parameters and seed: the same call
returns the same table on every run and platform (numpy's PCG64 stream). Nested
generators draw their child seeds from the parent stream.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Literal

import numpy as np

from polyconn._types import ConnectivitySource
from polyconn.config import get_settings
from polyconn.constructors.graph import Graph, cycle_matroid, graph_connectivity, graph_rank
from polyconn.constructors.matroids import (
    SubsetFamily,
    default_labels,
    free_matroid,
    matroid_connectivity,
    polymatroid_from_subsets,
    uniform_matroid,
)
from polyconn.core.ground import GroundSet
from polyconn.core.setfunction import SetFunction
from polyconn.exceptions import DomainError
from polyconn.ops.transforms import connectivity_of

PolymatroidSource = Literal["coverage", "weighted-coverage", "graph-rank", "matroid"]
POLYMATROID_SOURCES: tuple[PolymatroidSource, ...] = (
    "coverage",
    "weighted-coverage",
    "graph-rank",
    "matroid",
)


def instance_seed(root: int, index: int) -> int:
    """Seed of instance ``index`` in a batch rooted at ``root``."""
    return root + index


def _rng(seed: int) -> np.random.Generator:
    if seed < 0:
        raise DomainError(f"seed must be nonnegative, got {seed}")
    return np.random.default_rng(seed)


def _child_seed(rng: np.random.Generator) -> int:
    return int(rng.integers(1 << 32))


def _check_size(n: int, what: str = "n") -> None:
    cap = get_settings().generator_cap
    if n < 0 or n > cap:
        raise DomainError(f"{what} must be between 0 and {cap}, got {n}")


def _universe(size: int) -> list[str]:
    return [f"u{j}" for j in range(size)]


def _random_members(
    rng: np.random.Generator, n: int, universe_size: int, max_member_size: int | None
) -> list[np.ndarray]:
    members = []
    for _ in range(n):
        if max_member_size is None:
            chosen = np.flatnonzero(rng.random(universe_size) < 0.5)
        else:
            size = int(rng.integers(0, min(max_member_size, universe_size) + 1))
            chosen = np.sort(rng.choice(universe_size, size=size, replace=False))
        members.append(chosen)
    return members


def random_coverage_polymatroid(
    n: int, universe_size: int, seed: int, *, max_member_size: int | None = None
) -> SetFunction:
    """r(X) = |union of the universe subsets assigned to X|.

    Each element gets a uniformly random subset of ``u0 .. u{universe_size-1}``, or
    one of uniformly random size at most ``max_member_size`` when that is given.
    """
    _check_size(n)
    _check_size(universe_size, "universe_size")
    rng = _rng(seed)
    base = _universe(universe_size)
    members = _random_members(rng, n, universe_size, max_member_size)
    assigned = {
        label: [base[j] for j in chosen] for label, chosen in zip(default_labels(n), members)
    }
    family = SubsetFamily.of(base, assigned)
    return polymatroid_from_subsets(free_matroid(base), family, enforce=False)


def random_weighted_coverage_polymatroid(n: int, universe_size: int, seed: int) -> SetFunction:
    """Coverage where each universe item carries a random positive rational weight p/q."""
    _check_size(n)
    _check_size(universe_size, "universe_size")
    rng = _rng(seed)
    weights = [
        Fraction(int(p), int(q))
        for p, q in zip(rng.integers(1, 5, universe_size), rng.integers(1, 4, universe_size))
    ]
    denominator = math.lcm(1, *(w.denominator for w in weights))
    item_values = np.array(
        [w.numerator * (denominator // w.denominator) for w in weights], dtype=np.int64
    )
    unions = np.zeros(1, dtype=np.int64)
    for chosen in _random_members(rng, n, universe_size, None):
        mask = int(sum(1 << int(j) for j in chosen))
        unions = np.concatenate([unions, unions | mask])
    covered = (unions[:, None] >> np.arange(universe_size)) & 1
    return SetFunction(GroundSet(default_labels(n)), covered @ item_values, denominator)


def random_k_polymatroid(n: int, k: int, seed: int) -> SetFunction:
    """Integer k-polymatroid: coverage with member subsets of size at most k."""
    if k < 1:
        raise DomainError(f"k must be a positive integer, got {k}")
    universe_size = min(get_settings().generator_cap, k + n)
    return random_coverage_polymatroid(n, universe_size, seed, max_member_size=k)


def random_graph(
    n_edges: int, seed: int, *, loops: bool = True, parallel: bool = True
) -> Graph:
    """Random multigraph with edges ``e1 .. en`` and no isolated vertices."""
    _check_size(n_edges, "n_edges")
    if n_edges == 0:
        return Graph(vertices=(), edges=())
    rng = _rng(seed)
    n_vertices = int(rng.integers(1 if loops else 2, n_edges + 2))

    def candidates(k: int) -> list[tuple[int, int]]:
        return [(i, j) for i in range(k) for j in range(i if loops else i + 1, k)]

    pairs = candidates(n_vertices)
    while not parallel and len(pairs) < n_edges:
        n_vertices += 1
        pairs = candidates(n_vertices)
    picks = rng.choice(len(pairs), size=n_edges, replace=parallel)
    chosen = [pairs[int(p)] for p in picks]
    used = sorted({end for pair in chosen for end in pair})
    return Graph.from_edges(
        [(label, f"v{u}", f"v{v}") for label, (u, v) in zip(default_labels(n_edges), chosen)],
        vertices=[f"v{i}" for i in used],
    )


def random_connected_leafless_graph(n_edges: int, seed: int) -> Graph:
    """Random loopless bridgeless connected multigraph, built by an ear decomposition.

    Bridgeless implies leafless; it also makes the cycle matroid coloop-free.
    """
    _check_size(n_edges, "n_edges")
    if n_edges == 0:
        return Graph(vertices=(), edges=())
    if n_edges == 1:
        raise DomainError("a loopless bridgeless graph needs at least two edges")
    rng = _rng(seed)
    cycle_length = int(rng.integers(2, n_edges + 1))
    n_vertices = cycle_length
    ends = [(i, (i + 1) % cycle_length) for i in range(cycle_length)]
    while len(ends) < n_edges:
        ear_length = int(rng.integers(1, n_edges - len(ends) + 1))
        start, stop = (int(v) for v in rng.integers(0, n_vertices, size=2))
        if ear_length == 1 and start == stop:
            stop = (start + 1) % n_vertices
        path = [start, *range(n_vertices, n_vertices + ear_length - 1), stop]
        n_vertices += ear_length - 1
        ends.extend(zip(path, path[1:]))
    return Graph.from_edges(
        [(label, f"v{u}", f"v{v}") for label, (u, v) in zip(default_labels(n_edges), ends)],
        vertices=[f"v{i}" for i in range(n_vertices)],
    )


def random_matroid(n: int, seed: int, *, loopless: bool = False) -> SetFunction:
    """A uniform matroid of random rank, or the cycle matroid of a random graph."""
    _check_size(n)
    rng = _rng(seed)
    if n == 0 or rng.random() < 0.5:
        rank = int(rng.integers(1 if loopless and n else 0, n + 1))
        return uniform_matroid(rank, n)
    return cycle_matroid(random_graph(n, _child_seed(rng), loops=not loopless))


def random_polymatroid(
    n: int, seed: int, source: PolymatroidSource | None = None
) -> SetFunction:
    """A polymatroid from one of the structured sources, picked by the seed unless given."""
    _check_size(n)
    rng = _rng(seed)
    if source is None:
        source = POLYMATROID_SOURCES[int(rng.integers(len(POLYMATROID_SOURCES)))]
    child = _child_seed(rng)
    cap = get_settings().generator_cap
    if source == "coverage":
        return random_coverage_polymatroid(n, int(rng.integers(1, cap + 1)), child)
    if source == "weighted-coverage":
        return random_weighted_coverage_polymatroid(n, int(rng.integers(1, cap + 1)), child)
    if source == "graph-rank":
        return graph_rank(random_graph(n, child))
    return random_matroid(n, child)


def random_connectivity(
    n: int, seed: int, source: ConnectivitySource = "coverage"
) -> SetFunction:
    """A connectivity function: λ of a random polymatroid, of a random graph or of a matroid."""
    _check_size(n)
    if source == "coverage":
        return connectivity_of(random_polymatroid(n, seed), enforce=False)
    if source == "graph":
        return graph_connectivity(random_graph(n, seed))
    return matroid_connectivity(random_matroid(n, seed), enforce=False)


def random_set_function(n: int, seed: int, *, perturb: bool = True) -> SetFunction:
    """Integer set function for oracle comparisons.

    Without ``perturb`` this is a coverage polymatroid. With it, the seed also
    picks between a coverage polymatroid with one entry moved by at most 2 and
    a table of independent values in ``[0, n]``; both are usually not submodular.
    """
    _check_size(n)
    rng = _rng(seed)
    cap = get_settings().generator_cap
    f = random_coverage_polymatroid(n, int(rng.integers(1, cap + 1)), _child_seed(rng))
    mode = int(rng.integers(3)) if perturb else 0
    if mode == 0:
        return f
    if mode == 1:
        table = np.array(f.numerators, dtype=np.int64)
        table[int(rng.integers(f.ground.table_size))] += int(rng.choice([-2, -1, 1, 2]))
        return SetFunction(f.ground, table)
    return SetFunction(f.ground, rng.integers(0, n + 1, f.ground.table_size))
