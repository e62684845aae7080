"""Finite binary relations over a labelled universe.

A :class:`Relation` is an immutable pair ``(labels, adjacency)`` where
``adjacency[i, j]`` is true iff ``labels[i] >= labels[j]`` (weak
preference).  Rows are kept packed into 64-bit words so that closure
computations run on whole words at a time; a dense boolean view is
derived lazily for the vectorised predicates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import DuplicateLabel, UnknownLabel

__all__ = [
    "Relation",
    "CondensationDag",
    "make_relation",
    "default_labels",
    "symmetric_part",
    "asymmetric_part",
    "comparable_part",
    "incomparable_part",
    "is_reflexive",
    "is_complete",
    "is_transitive",
    "is_preorder",
    "reflexive_closure",
    "transitive_closure",
    "lower_weak",
    "lower_strict",
    "condensation",
]

WORD_BITS = 64


def _pack(matrix: np.ndarray) -> np.ndarray:
    rows, n = matrix.shape
    words = max(1, -(-n // WORD_BITS))
    padded = np.zeros((rows, words * WORD_BITS), dtype=bool)
    padded[:, :n] = matrix
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8")


def _unpack(bits: np.ndarray, n: int) -> np.ndarray:
    as_bytes = np.ascontiguousarray(bits).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, count=n, bitorder="little").astype(bool)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


def default_labels(n: int) -> list[str]:
    """``a, b, c, ...`` for small universes, ``x0, x1, ...`` otherwise."""
    if n <= 26:
        return [chr(ord("a") + i) for i in range(n)]
    return [f"x{i}" for i in range(n)]


class Relation:
    """Immutable binary relation on a finite, nonempty, ordered universe."""

    __slots__ = ("_labels", "_index", "_matrix", "_bits")

    def __init__(self, labels: Iterable[str], matrix) -> None:
        labels = tuple(labels)
        if not labels:
            raise ValueError("universe must be nonempty")
        index = {}
        for i, label in enumerate(labels):
            if not isinstance(label, str) or not label:
                raise ValueError(f"labels must be nonempty strings, got {label!r}")
            if label in index:
                raise DuplicateLabel(f"duplicate label {label!r}")
            index[label] = i
        m = np.array(matrix, dtype=bool, copy=True)
        n = len(labels)
        if m.shape != (n, n):
            raise ValueError(f"adjacency must be {n}x{n}, got shape {m.shape}")
        self._labels = labels
        self._index = index
        self._matrix = _frozen(m)
        self._bits = None

    @classmethod
    def _from_bits(cls, labels: tuple[str, ...], index: dict, bits: np.ndarray) -> Relation:
        rel = object.__new__(cls)
        rel._labels = labels
        rel._index = index
        rel._bits = _frozen(bits)
        rel._matrix = None
        return rel

    def _derive(self, matrix: np.ndarray) -> Relation:
        """Relation on the same universe with a new adjacency (no validation)."""
        rel = object.__new__(Relation)
        rel._labels = self._labels
        rel._index = self._index
        rel._matrix = _frozen(np.ascontiguousarray(matrix, dtype=bool))
        rel._bits = None
        return rel

    @property
    def labels(self) -> tuple[str, ...]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._labels)

    def __len__(self) -> int:
        return len(self._labels)

    @property
    def matrix(self) -> np.ndarray:
        """Read-only ``n x n`` boolean adjacency."""
        if self._matrix is None:
            self._matrix = _frozen(_unpack(self._bits, self.n))
        return self._matrix

    @property
    def bits(self) -> np.ndarray:
        """Read-only packed rows, shape ``(n, ceil(n/64))``, little-endian bit order."""
        if self._bits is None:
            self._bits = _frozen(_pack(self._matrix))
        return self._bits

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element {label!r}") from None

    def indices(self, labels: Iterable[str]) -> list[int]:
        return [self.index(label) for label in labels]

    def __contains__(self, label: object) -> bool:
        return label in self._index

    def holds(self, x: str, y: str) -> bool:
        """True iff ``x >= y``."""
        return bool(self.matrix[self.index(x), self.index(y)])

    def strictly(self, x: str, y: str) -> bool:
        """True iff ``x > y`` (asymmetric part)."""
        i, j = self.index(x), self.index(y)
        m = self.matrix
        return bool(m[i, j] and not m[j, i])

    def indifferent(self, x: str, y: str) -> bool:
        i, j = self.index(x), self.index(y)
        m = self.matrix
        return bool(m[i, j] and m[j, i])

    def pairs(self) -> list[tuple[str, str]]:
        """Related pairs in row-major index order."""
        rows, cols = np.nonzero(self.matrix)
        return [(self._labels[i], self._labels[j]) for i, j in zip(rows.tolist(), cols.tolist())]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Relation):
            return NotImplemented
        return self._labels == other._labels and np.array_equal(self.matrix, other.matrix)

    def __hash__(self) -> int:
        return hash((self._labels, self.bits.tobytes()))

    def __repr__(self) -> str:
        shown = ", ".join(f"{x}>={y}" for x, y in self.pairs()[:8])
        more = "" if int(self.matrix.sum()) <= 8 else ", ..."
        return f"Relation({list(self._labels)!r}, {{{shown}{more}}})"


def make_relation(labels: Sequence[str], pairs: Iterable[tuple[str, str]]) -> Relation:
    """Build a relation from a label list and ``(x, y)`` pairs meaning ``x >= y``."""
    labels = tuple(labels)
    n = len(labels)
    m = np.zeros((n, n), dtype=bool)
    rel = Relation(labels, m)
    for x, y in pairs:
        m[rel.index(x), rel.index(y)] = True
    return rel._derive(m)


# -- parts -----------------------------------------------------------------


def symmetric_part(rel: Relation) -> Relation:
    m = rel.matrix
    return rel._derive(m & m.T)


def asymmetric_part(rel: Relation) -> Relation:
    m = rel.matrix
    return rel._derive(m & ~m.T)


def comparable_part(rel: Relation) -> Relation:
    m = rel.matrix
    return rel._derive(m | m.T)


def incomparable_part(rel: Relation) -> Relation:
    m = rel.matrix
    return rel._derive(~(m | m.T))


# -- predicates ------------------------------------------------------------


def is_reflexive(rel: Relation) -> bool:
    return bool(rel.matrix.diagonal().all())


def is_complete(rel: Relation) -> bool:
    m = rel.matrix
    return bool((m | m.T).all())


def is_transitive(rel: Relation) -> bool:
    return np.array_equal(_closure_bits(rel.bits, rel.n), rel.bits)


def is_preorder(rel: Relation) -> bool:
    return is_reflexive(rel) and is_transitive(rel)


# -- closures --------------------------------------------------------------


def reflexive_closure(rel: Relation) -> Relation:
    m = rel.matrix.copy()
    np.fill_diagonal(m, True)
    return rel._derive(m)


def _closure_bits(bits: np.ndarray, n: int) -> np.ndarray:
    # Warshall over packed rows: every row that reaches k absorbs row k.
    rows = np.array(bits, copy=True)
    one = np.uint64(1)
    for k in range(n):
        word, bit = divmod(k, WORD_BITS)
        hit = np.flatnonzero((rows[:, word] >> np.uint64(bit)) & one)
        if hit.size:
            rows[hit] |= rows[k]
    return rows


def transitive_closure(rel: Relation) -> Relation:
    """Smallest transitive relation containing ``rel``."""
    return Relation._from_bits(rel._labels, rel._index, _closure_bits(rel.bits, rel.n))


def lower_weak(rel: Relation, x: str) -> frozenset[str]:
    """``{z | x >= z}``."""
    row = rel.matrix[rel.index(x)]
    return frozenset(rel.labels[j] for j in np.flatnonzero(row))


def lower_strict(rel: Relation, x: str) -> frozenset[str]:
    """``{z | x > z}``."""
    i = rel.index(x)
    m = rel.matrix
    row = m[i] & ~m[:, i]
    return frozenset(rel.labels[j] for j in np.flatnonzero(row))


# -- strongly connected components -----------------------------------------


@dataclass(frozen=True)
class CondensationDag:
    """Quotient of a relation's digraph by its strongly connected components.

    ``components`` is listed in topological order: every dag edge
    ``(c, d)`` has ``c < d``.
    """

    components: tuple[tuple[int, ...], ...]
    dag_edges: frozenset[tuple[int, int]]
    component_of: tuple[int, ...]

    def successors(self) -> list[list[int]]:
        succ: list[list[int]] = [[] for _ in self.components]
        for c, d in sorted(self.dag_edges):
            succ[c].append(d)
        return succ


def _tarjan(succ: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan; components come out sinks first."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    components: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        work = [(root, 0)]
        while work:
            v, i = work[-1]
            nbrs = succ[v]
            if i < len(nbrs):
                work[-1] = (v, i + 1)
                w = nbrs[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comp.sort()
                components.append(comp)
    return components


def condensation(rel: Relation) -> CondensationDag:
    m = rel.matrix
    succ = [np.flatnonzero(row).tolist() for row in m]
    comps = _tarjan(succ)
    comps.reverse()
    component_of = np.empty(rel.n, dtype=np.intp)
    for c, members in enumerate(comps):
        component_of[members] = c
    # OR rows, then columns, within each component to get the quotient matrix.
    order = np.concatenate([np.asarray(c, dtype=np.intp) for c in comps])
    starts = np.cumsum([0] + [len(c) for c in comps[:-1]])
    quotient = np.logical_or.reduceat(m[order], starts, axis=0)
    quotient = np.logical_or.reduceat(quotient[:, order], starts, axis=1)
    np.fill_diagonal(quotient, False)
    src, dst = np.nonzero(quotient)
    return CondensationDag(
        components=tuple(tuple(c) for c in comps),
        dag_edges=frozenset(zip(src.tolist(), dst.tolist())),
        component_of=tuple(component_of.tolist()),
    )
