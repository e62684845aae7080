"""Brute-force deciders and seeded generators for the property suites.

The deciders deliberately avoid the polynomial machinery in the rest of
the package:

* :func:`brute_force_rp_exists` searches every weak ordering of the
  universe.  This is complete: if ``u`` is any representation, replacing
  each value by its rank among the distinct values of ``u`` gives another
  representation (ranks preserve ``=`` and ``>``), and that one maps onto
  ``{0, ..., k-1}`` for some ``k <= n``.  So a representation exists iff
  one exists among maps from X onto an initial segment of ``{0..n-1}``.
* :func:`brute_force_strong_acyclicity` walks every simple cycle and
  tests the definition directly.  A closed walk containing a strict step
  splits into simple cycles, one of which keeps that step, so simple
  cycles suffice.

Generators are deterministic in ``(n, seed, kind)``; the bit stream is
numpy's PCG64 seeded through ``SeedSequence([seed, n, kind_index])``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .errors import TooLarge
from .relation import Relation, default_labels
from .representation import Utility
from .stratification import Stratification, is_pseudo_stratification

__all__ = [
    "KINDS",
    "BRUTE_FORCE_LIMIT",
    "EXHAUSTIVE_LIMIT",
    "GeneratorConfig",
    "make_rng",
    "brute_force_rp_exists",
    "brute_force_strong_acyclicity",
    "enumerate_all_relations",
    "random_relation",
    "random_pseudo_stratification",
    "random_candidate_utility",
]

KINDS = ("arbitrary", "preorder", "strongly-acyclic", "complete-transitive")
BRUTE_FORCE_LIMIT = 6
EXHAUSTIVE_LIMIT = 3


@dataclass(frozen=True)
class GeneratorConfig:
    n: int
    seed: int
    kind: str = "arbitrary"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")

    def describe(self) -> str:
        return f"n={self.n} seed={self.seed} kind={self.kind}"


def make_rng(cfg: GeneratorConfig) -> np.random.Generator:
    seq = np.random.SeedSequence([cfg.seed, cfg.n, KINDS.index(cfg.kind)])
    return np.random.Generator(np.random.PCG64(seq))


# -- brute-force deciders ---------------------------------------------------


@lru_cache(maxsize=None)
def _weak_orders(n: int) -> np.ndarray:
    """Every map from n points onto ``{0..k-1}`` for some k, one per row."""
    grid = np.array(list(itertools.product(range(n), repeat=n)), dtype=np.int8).reshape(-1, n)
    ordered = np.sort(grid, axis=1)
    distinct = 1 + (np.diff(ordered, axis=1) != 0).sum(axis=1)
    keep = grid[ordered[:, -1] == distinct - 1]
    keep.flags.writeable = False
    return keep


def _guard(rel: Relation, limit: int) -> None:
    if rel.n > limit:
        raise TooLarge(f"brute force is limited to n <= {limit}, got n = {rel.n}")


def brute_force_rp_exists(rel: Relation) -> tuple[bool, Utility | None]:
    """Search all weak orderings for a representation; return a witness if found."""
    _guard(rel, BRUTE_FORCE_LIMIT)
    m = rel.matrix
    n = rel.n
    strict = [(i, j) for i in range(n) for j in range(n) if m[i, j] and not m[j, i]]
    indiff = [(i, j) for i in range(n) for j in range(i + 1, n) if m[i, j] and m[j, i]]
    grid = _weak_orders(n)
    ok = np.ones(len(grid), dtype=bool)
    if strict:
        hi, lo = np.array(strict).T
        ok &= (grid[:, hi] > grid[:, lo]).all(axis=1)
    if indiff:
        a, b = np.array(indiff).T
        ok &= (grid[:, a] == grid[:, b]).all(axis=1)
    hits = np.flatnonzero(ok)
    if not hits.size:
        return False, None
    row = grid[hits[0]]
    return True, Utility({x: int(v) for x, v in zip(rel.labels, row)})


def brute_force_strong_acyclicity(rel: Relation) -> bool:
    """Every cycle ``x1 >= ... >= xk >= x1`` consists of indifferences."""
    _guard(rel, BRUTE_FORCE_LIMIT)
    m = rel.matrix.tolist()
    n = len(m)

    # each simple cycle is walked once, from its smallest vertex
    def clean(start: int, v: int, visited: int, strict_seen: bool) -> bool:
        for w in range(start, n):
            if not m[v][w]:
                continue
            strict = strict_seen or not m[w][v]
            if w == start:
                if strict:
                    return False
            elif not visited >> w & 1:
                if not clean(start, w, visited | 1 << w, strict):
                    return False
        return True

    return all(clean(s, s, 1 << s, False) for s in range(n))


# -- generators -------------------------------------------------------------


def enumerate_all_relations(n: int, labels=None) -> Iterator[Relation]:
    """Every relation on an n-element universe, once each, in bit order."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > EXHAUSTIVE_LIMIT:
        raise TooLarge(f"exhaustive enumeration is limited to n <= {EXHAUSTIVE_LIMIT}")
    labels = tuple(labels or default_labels(n))
    cells = n * n
    shifts = np.arange(cells)
    for code in range(1 << cells):
        matrix = ((code >> shifts) & 1).astype(bool).reshape(n, n)
        yield Relation(labels, matrix)


def _reach(adj: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure by repeated squaring (independent of the packed Warshall)."""
    r = adj | np.eye(len(adj), dtype=bool)
    while True:
        nxt = r | ((r.astype(np.int64) @ r.astype(np.int64)) > 0)
        if np.array_equal(nxt, r):
            return r
        r = nxt


def _preorder_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    k = int(rng.integers(1, n + 1))
    _, cls = np.unique(rng.integers(0, k, size=n), return_inverse=True)
    classes = int(cls.max()) + 1
    position = rng.permutation(classes)
    density = rng.uniform()
    upper = position[:, None] < position[None, :]
    dag = upper & (rng.random((classes, classes)) < density)
    reach = _reach(dag)
    return reach[np.ix_(cls, cls)]


def _thin_preorder(rng: np.random.Generator, m: np.ndarray) -> np.ndarray:
    # Deleting edges never adds reachability; deleting both halves of an
    # indifference creates no strict pair; so strong acyclicity survives.
    n = len(m)
    m = m.copy()
    p_sym, p_strict, p_diag = rng.uniform(0, 0.6, size=3)
    for i in range(n):
        if rng.random() < p_diag:
            m[i, i] = False
        for j in range(i + 1, n):
            if m[i, j] and m[j, i]:
                if rng.random() < p_sym:
                    m[i, j] = m[j, i] = False
            elif m[i, j] or m[j, i]:
                if rng.random() < p_strict:
                    m[i, j] = m[j, i] = False
    return m


def random_relation(cfg: GeneratorConfig, labels=None) -> Relation:
    rng = make_rng(cfg)
    n = cfg.n
    labels = tuple(labels or default_labels(n))
    if cfg.kind == "arbitrary":
        density = rng.uniform()
        m = rng.random((n, n)) < density
    elif cfg.kind == "preorder":
        m = _preorder_matrix(rng, n)
    elif cfg.kind == "strongly-acyclic":
        m = _thin_preorder(rng, _preorder_matrix(rng, n))
    else:
        k = int(rng.integers(1, n + 1))
        rank = rng.integers(0, k, size=n)
        m = rank[:, None] >= rank[None, :]
    return Relation(labels, m)


def random_pseudo_stratification(
    rel: Relation, rng: np.random.Generator, proposals: int | None = None
) -> Stratification:
    """Random separating pseudo-stratification of a preorder.

    Random small subsets are accepted greedily while the collection stays
    a pseudo-stratification; every strict pair ``x > y`` still lacking a
    witness then gets the singleton ``{y}`` (``x >= y`` and never
    ``y > y``).  The result is shuffled, so weights are random too.
    """
    labels = rel.labels
    n = rel.n
    strata: list[tuple[str, ...]] = []
    for _ in range(proposals if proposals is not None else 2 * n):
        size = int(rng.integers(1, min(n, 3) + 1))
        pick = tuple(labels[i] for i in sorted(rng.choice(n, size=size, replace=False)))
        trial = Stratification(tuple(strata) + (pick,))
        if is_pseudo_stratification(rel, trial):
            strata.append(pick)
    # On a preorder a singleton never reverses against a valid stratum:
    # y > x' and y' > y with x', y' in A' would give y' > x' inside A'.
    m = rel.matrix
    strict = m & ~m.T
    covered = np.zeros(n, dtype=bool)
    for s in strata:
        covered[rel.indices(s)] = True
    for x, y in zip(*np.nonzero(strict)):
        if not (m[x] & ~strict[y] & covered).any():
            strata.append((labels[y],))
            covered[y] = True
    if not strata:
        strata.append((labels[int(rng.integers(n))],))
    order = rng.permutation(len(strata))
    return Stratification(tuple(strata[i] for i in order))


def random_candidate_utility(rel: Relation, rng: np.random.Generator) -> Utility:
    """Arbitrary small-integer utility; a representation only by chance."""
    top = int(rng.integers(1, rel.n + 1))
    return Utility({x: int(v) for x, v in zip(rel.labels, rng.integers(0, top + 1, size=rel.n))})
