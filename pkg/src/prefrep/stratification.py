"""Stratifications, separating collections, embeddings, finite separability."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import NotPseudoStratification, UnknownElement
from .relation import Relation, is_preorder

__all__ = [
    "Stratification",
    "EmbeddingMap",
    "is_pseudo_stratification",
    "is_stratification",
    "is_separating",
    "disjointify",
    "verify_embedding",
    "is_separable_finite",
]


@dataclass(frozen=True)
class Stratification:
    """Ordered collection of nonempty strata; position ``i`` carries weight ``2**-i``.

    ``origin[i]`` is the position stratum ``i`` had before
    :func:`disjointify` dropped empty strata.
    """

    strata: tuple[tuple[str, ...], ...]
    origin: tuple[int, ...] = field(default=None)

    def __post_init__(self):
        strata = tuple(tuple(dict.fromkeys(s)) for s in self.strata)
        for i, s in enumerate(strata):
            if not s:
                raise ValueError(f"stratum {i} is empty")
        origin = tuple(range(len(strata))) if self.origin is None else tuple(self.origin)
        if len(origin) != len(strata):
            raise ValueError("origin must have one entry per stratum")
        object.__setattr__(self, "strata", strata)
        object.__setattr__(self, "origin", origin)

    @classmethod
    def of(cls, strata: Iterable[Iterable[str]]) -> Stratification:
        return cls(tuple(tuple(s) for s in strata))

    @classmethod
    def singletons(cls, rel: Relation) -> Stratification:
        return cls(tuple((x,) for x in rel.labels))

    def __len__(self) -> int:
        return len(self.strata)

    def __iter__(self):
        return iter(self.strata)


def _membership(rel: Relation, strat: Stratification) -> np.ndarray:
    member = np.zeros((len(strat), rel.n), dtype=bool)
    for i, stratum in enumerate(strat.strata):
        member[i, rel.indices(stratum)] = True
    return member


def _strict(rel: Relation) -> np.ndarray:
    m = rel.matrix
    return m & ~m.T


def is_pseudo_stratification(rel: Relation, strat: Stratification) -> bool:
    """No strict preference between two strata is ever reversed.

    ``above[a, b]`` records some ``x in A_a``, ``x' in A_b`` with
    ``x > x'``; a reversal is ``above[a, b] and above[b, a]``, which
    includes strict pairs inside a single stratum (``a == b``).
    """
    member = _membership(rel, strat).astype(np.int64)
    above = (member @ _strict(rel).astype(np.int64) @ member.T) > 0
    return not bool((above & above.T).any())


def is_stratification(rel: Relation, strat: Stratification) -> bool:
    """Pseudo-stratification whose distinct strata are pairwise disjoint.

    Strata are compared as sets, so a stratum listed twice is one member
    of the collection and does not break disjointness.
    """
    if not is_pseudo_stratification(rel, strat):
        return False
    sets = list({frozenset(s) for s in strat.strata})
    seen: set[str] = set()
    for s in sets:
        if seen & s:
            return False
        seen |= s
    return True


def is_separating(rel: Relation, strat: Stratification) -> bool:
    """Every ``x > y`` has a stratum element ``z`` with ``x >= z`` and not ``y > z``."""
    if not is_pseudo_stratification(rel, strat):
        raise NotPseudoStratification("collection is not a pseudo-stratification")
    m = rel.matrix
    strict = _strict(rel)
    covered = _membership(rel, strat).any(axis=0)
    reach = (m & covered).astype(np.int64)
    not_below = (~strict & covered).astype(np.int64)
    witnessed = (reach @ not_below.T) > 0
    return not bool((strict & ~witnessed).any())


def disjointify(strat: Stratification) -> Stratification:
    """Remove from each stratum everything listed in an earlier one; drop empties."""
    seen: set[str] = set()
    kept, origin = [], []
    for stratum, where in zip(strat.strata, strat.origin):
        rest = tuple(x for x in stratum if x not in seen)
        seen.update(stratum)
        if rest:
            kept.append(rest)
            origin.append(where)
    return Stratification(tuple(kept), tuple(origin))


@dataclass(frozen=True)
class EmbeddingMap:
    source: Relation
    target: Relation
    mapping: Mapping[str, str]


def verify_embedding(emb: EmbeddingMap) -> bool:
    """``x >= y`` iff ``f(x) >=* f(y)`` for every pair of source elements."""
    idx = []
    for x in emb.source.labels:
        if x not in emb.mapping:
            raise UnknownElement(f"map is undefined on source element {x!r}")
        idx.append(emb.target.index(emb.mapping[x]))
    for x in emb.mapping:
        emb.source.index(x)
    image = emb.target.matrix[np.ix_(idx, idx)]
    return np.array_equal(image, emb.source.matrix)


def is_separable_finite(rel: Relation) -> bool:
    """Separability for a finite relation.

    Anything that embeds into a preorder is itself a preorder, so
    separability requires ``rel`` to be a preorder.  Conversely a finite
    preorder embeds into itself through the identity, and its singletons
    form a finite separating stratification.  Hence the test reduces to
    :func:`is_preorder`.
    """
    return is_preorder(rel)
