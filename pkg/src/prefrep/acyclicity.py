"""Acyclicity and strong acyclicity, with certificates.

A relation is strongly acyclic when every weak-preference cycle is made
of indifferences only.  Equivalently, no strict pair ``x > y`` has its
endpoints in the same strongly connected component of the digraph, and
that is how it is decided here.  On failure the caller gets a
:class:`CycleWitness` that can be replayed against the relation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import ParseError
from .relation import Relation, asymmetric_part, condensation

__all__ = [
    "CycleWitness",
    "is_acyclic",
    "is_strongly_acyclic",
    "find_strong_cycle",
    "implies_acyclic_check",
]


@dataclass(frozen=True)
class CycleWitness:
    """Cycle ``x1 >= x2 >= ... >= xn >= x1`` with one strict step.

    The strict step goes from ``cycle[violation_index]`` to the next
    element (wrapping around).
    """

    cycle: tuple[str, ...]
    violation_index: int

    @property
    def strict_pair(self) -> tuple[str, str]:
        k = self.violation_index
        return self.cycle[k], self.cycle[(k + 1) % len(self.cycle)]

    def holds_in(self, rel: Relation) -> bool:
        """Replay the witness: every step is related and the marked step is strict."""
        n = len(self.cycle)
        if n < 2 or not 0 <= self.violation_index < n:
            return False
        if any(label not in rel for label in self.cycle):
            return False
        for k in range(n):
            if not rel.holds(self.cycle[k], self.cycle[(k + 1) % n]):
                return False
        return rel.strictly(*self.strict_pair)

    def format(self) -> str:
        x, y = self.strict_pair
        return f"cycle: {' '.join(self.cycle)} ; strict: {x}>{y}"

    @classmethod
    def parse(cls, line: str) -> CycleWitness:
        try:
            head, tail = line.split(";")
            key, body = head.split(":", 1)
            skey, sbody = tail.split(":", 1)
            if key.strip() != "cycle" or skey.strip() != "strict":
                raise ValueError
            cycle = tuple(body.split())
            x, y = (s.strip() for s in sbody.split(">"))
        except ValueError:
            raise ParseError(f"malformed witness {line!r}") from None
        n = len(cycle)
        for k in range(n):
            if cycle[k] == x and cycle[(k + 1) % n] == y:
                return cls(cycle, k)
        raise ParseError(f"strict pair {x}>{y} is not a step of the cycle")


def is_acyclic(rel: Relation) -> bool:
    """True iff the strict part has no directed cycle."""
    dag = condensation(asymmetric_part(rel))
    return len(dag.components) == rel.n


def _shortest_path(m: np.ndarray, allowed: np.ndarray, src: int, dst: int) -> list[int]:
    parent = {src: None}
    queue = deque([src])
    while queue:
        v = queue.popleft()
        if v == dst:
            break
        for w in np.flatnonzero(m[v] & allowed).tolist():
            if w not in parent:
                parent[w] = v
                queue.append(w)
    path = [dst]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    return path


def find_strong_cycle(rel: Relation) -> CycleWitness | None:
    """A cycle violating strong acyclicity, or ``None`` if there is none.

    Takes the first strict pair ``x > y`` (row-major) whose endpoints
    share a component and closes it with a shortest path ``y ~> x``.
    """
    comp = np.asarray(condensation(rel).component_of)
    m = rel.matrix
    same = comp[:, None] == comp[None, :]
    bad = m & ~m.T & same
    if not bad.any():
        return None
    x, y = (int(v) for v in np.argwhere(bad)[0])
    path = _shortest_path(m, comp == comp[x], y, x)
    return CycleWitness(tuple(rel.labels[i] for i in path), len(path) - 1)


def is_strongly_acyclic(rel: Relation) -> bool:
    return find_strong_cycle(rel) is None


def implies_acyclic_check(rel: Relation) -> bool:
    """Strong acyclicity implies acyclicity; evaluated on ``rel``."""
    return not is_strongly_acyclic(rel) or is_acyclic(rel)
