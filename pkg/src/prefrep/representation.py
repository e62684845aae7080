"""Richter-Peleg representations: verification and two constructions.

A utility ``u`` represents a relation when indifference maps to equal
values and strict preference to strictly larger values.  All values are
:class:`fractions.Fraction`; nothing here touches floating point.

Two independent constructors are provided:

* :func:`synthesize` levels the condensation of the reflexive-transitive
  closure and assigns each indifference class its height (longest path
  to a sink).  Works for any strongly acyclic relation.
* :func:`utility_from_stratification` evaluates the dyadic series
  ``sum_i 2**-i * ([A_i meets LW(x)] + [A_i meets LS(x)])`` for a preorder
  and a separating pseudo-stratification ``A_0, A_1, ...``.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .acyclicity import find_strong_cycle
from .errors import MissingValue, NotPreorder, NotSeparating, NotStronglyAcyclic
from .relation import (
    Relation,
    condensation,
    is_preorder,
    reflexive_closure,
    transitive_closure,
)
from .stratification import Stratification, _membership, is_separating

__all__ = [
    "Utility",
    "Violation",
    "INDIFFERENCE_BROKEN",
    "STRICT_NOT_INCREASED",
    "representation_violations",
    "verify_representation",
    "synthesize",
    "utility_from_stratification",
    "normalize_to_unit_interval",
    "closure_transfer_check",
]

INDIFFERENCE_BROKEN = "indifference-broken"
STRICT_NOT_INCREASED = "strict-not-increased"


def _exact(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (Rational, str)):
        raise TypeError(f"utility values must be exact rationals, got {value!r}")
    return Fraction(value)


class Utility(Mapping[str, Fraction]):
    """Immutable map from element labels to exact rationals."""

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[str, object] | Iterable[tuple[str, object]] = ()):
        items = values.items() if isinstance(values, Mapping) else values
        self._values = {str(k): _exact(v) for k, v in items}

    def __getitem__(self, label: str) -> Fraction:
        return self._values[label]

    def __iter__(self):
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __hash__(self) -> int:
        return hash(frozenset(self._values.items()))

    def __repr__(self) -> str:
        body = ", ".join(f"{k!r}: {v}" for k, v in self._values.items())
        return f"Utility({{{body}}})"

    def ranks(self, labels: Iterable[str]) -> np.ndarray:
        """Dense ranks of the values on ``labels``; order-isomorphic to the values."""
        labels = list(labels)
        missing = [x for x in labels if x not in self._values]
        if missing:
            raise MissingValue(f"utility has no value for {missing[0]!r}")
        values = [self._values[x] for x in labels]
        rank = {v: r for r, v in enumerate(sorted(set(values)))}
        return np.fromiter((rank[v] for v in values), dtype=np.int64, count=len(values))


class Violation(NamedTuple):
    kind: str
    x: str
    y: str


def _violation_masks(rel: Relation, u: Utility) -> tuple[np.ndarray, np.ndarray]:
    r = u.ranks(rel.labels)
    m = rel.matrix
    strict_bad = m & ~m.T & (r[:, None] <= r[None, :])
    indiff_bad = np.triu(m & m.T & (r[:, None] != r[None, :]))
    return indiff_bad, strict_bad


def representation_violations(rel: Relation, u: Utility) -> list[Violation]:
    """All pairs where ``u`` fails to represent ``rel``.

    Indifferences are reported once per unordered pair; strict pairs
    once per ordered pair ``x > y``.
    """
    indiff_bad, strict_bad = _violation_masks(rel, u)
    labels = rel.labels
    found = [Violation(INDIFFERENCE_BROKEN, labels[i], labels[j]) for i, j in np.argwhere(indiff_bad)]
    found += [Violation(STRICT_NOT_INCREASED, labels[i], labels[j]) for i, j in np.argwhere(strict_bad)]
    return found


def verify_representation(rel: Relation, u: Utility) -> bool:
    indiff_bad, strict_bad = _violation_masks(rel, u)
    return not (indiff_bad.any() or strict_bad.any())


def _heights(succ: list[list[int]]) -> list[int]:
    # components are topologically sorted, so sinks are settled first in reverse
    height = [0] * len(succ)
    for c in range(len(succ) - 1, -1, -1):
        if succ[c]:
            height[c] = 1 + max(height[d] for d in succ[c])
    return height


def synthesize(rel: Relation) -> Utility:
    """Integer-valued representation of a strongly acyclic relation.

    Each element gets the length of the longest chain of strictly worse
    indifference classes below it in the reflexive-transitive closure.
    Raises :class:`NotStronglyAcyclic` (carrying a witness) otherwise.
    """
    witness = find_strong_cycle(rel)
    if witness is not None:
        raise NotStronglyAcyclic(witness)
    closed = transitive_closure(reflexive_closure(rel))
    dag = condensation(closed)
    height = _heights(dag.successors())
    return Utility({x: height[c] for x, c in zip(rel.labels, dag.component_of)})


def utility_from_stratification(rel: Relation, strat: Stratification) -> Utility:
    """Dyadic series utility for a preorder and a separating pseudo-stratification.

    The value of ``x`` adds ``2**-i`` for every stratum ``A_i`` that meets
    ``LW(x) = {z | x >= z}`` and another ``2**-i`` if it meets
    ``LS(x) = {z | x > z}``.  Denominators divide ``2**(len(strat) - 1)``.
    """
    if not is_preorder(rel):
        raise NotPreorder("series construction needs a preorder")
    if not is_separating(rel, strat):
        raise NotSeparating("stratification is not separating")
    m = rel.matrix
    member = _membership(rel, strat).astype(np.int64)
    meets_weak = (member @ m.T.astype(np.int64)) > 0
    meets_strict = (member @ (m & ~m.T).T.astype(np.int64)) > 0
    hits = meets_weak.astype(np.int64) + meets_strict
    k = len(strat)
    denom = 1 << (k - 1)
    values = {}
    for j, x in enumerate(rel.labels):
        numer = sum(int(h) << (k - 1 - i) for i, h in enumerate(hits[:, j]) if h)
        values[x] = Fraction(numer, denom)
    return Utility(values)


def normalize_to_unit_interval(u: Utility) -> Utility:
    """Order-isomorphic copy of ``u`` with values in ``(0, 1)``.

    The ``j``-th smallest distinct value (``j = 1..k``) becomes ``j/(k+1)``.
    """
    distinct = sorted(set(u.values()))
    k = len(distinct)
    rank = {v: Fraction(j + 1, k + 1) for j, v in enumerate(distinct)}
    return Utility({x: rank[v] for x, v in u.items()})


def closure_transfer_check(rel: Relation, u: Utility) -> bool:
    """A representation of ``rel`` also represents its transitive closure."""
    return not verify_representation(rel, u) or verify_representation(transitive_closure(rel), u)
