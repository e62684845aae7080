"""Maximal elements and their recovery by maximising a single utility.

For a preorder with a representation ``v`` (valued in ``(0, 1)``):

* :func:`prop1_utility` builds, for a fixed menu ``A``, a representation
  whose argmax over ``A`` is exactly the maximal set of ``A``.
* :func:`prop2_utility` builds, for a fixed element ``x``, a
  representation that ``x`` maximises on every menu where ``x`` is
  maximal.

Without transitivity neither guarantee survives; see
:func:`scalarization_counterexample_check`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from .acyclicity import is_strongly_acyclic
from .errors import NotPreorder, NotRepresentation
from .relation import Relation, is_preorder, is_transitive, make_relation
from .representation import Utility, normalize_to_unit_interval, verify_representation

__all__ = [
    "ChoiceProblem",
    "maximal_elements",
    "argmax",
    "prop1_utility",
    "prop2_utility",
    "counterexample_relation",
    "scalarization_counterexample_check",
]


@dataclass(frozen=True)
class ChoiceProblem:
    relation: Relation
    menu: frozenset[str]

    def __post_init__(self):
        menu = frozenset(self.menu)
        self.relation.indices(menu)
        object.__setattr__(self, "menu", menu)

    def maximal(self) -> frozenset[str]:
        return maximal_elements(self.relation, self.menu)


def maximal_elements(rel: Relation, menu: Iterable[str]) -> frozenset[str]:
    """``{x in A | for all y in A: y >= x implies x >= y}``."""
    idx = sorted(set(rel.indices(menu)))
    if not idx:
        return frozenset()
    sub = rel.matrix[np.ix_(idx, idx)]
    dominated = (sub.T & ~sub).any(axis=1)
    return frozenset(rel.labels[i] for i, d in zip(idx, dominated) if not d)


def argmax(u: Utility, menu: Iterable[str]) -> frozenset[str]:
    menu = list(menu)
    if not menu:
        return frozenset()
    ranks = u.ranks(menu)
    top = ranks.max()
    return frozenset(x for x, r in zip(menu, ranks) if r == top)


def _checked_base(rel: Relation, v: Utility) -> Utility:
    if not is_preorder(rel):
        raise NotPreorder("scalarisation needs a preorder")
    if not verify_representation(rel, v):
        raise NotRepresentation("base utility does not represent the relation")
    if all(0 < value < 1 for value in v.values()):
        return v
    return normalize_to_unit_interval(v)


def prop1_utility(rel: Relation, v: Utility, menu: Iterable[str]) -> Utility:
    """Representation whose argmax over ``menu`` equals the maximal set of ``menu``.

    Elements indifferent to a maximal element of the menu get 1;
    elements strictly beaten inside the menu keep ``v``; all others get
    ``1 + v``.  ``v`` is rescaled into ``(0, 1)`` first if needed.
    """
    menu = frozenset(menu)
    if not menu:
        _checked_base(rel, v)
        return v
    base = _checked_base(rel, v)
    m = rel.matrix
    strict = m & ~m.T
    indiff = m & m.T
    best = np.zeros(rel.n, dtype=bool)
    best[rel.indices(maximal_elements(rel, menu))] = True
    in_menu = np.zeros(rel.n, dtype=bool)
    in_menu[rel.indices(menu)] = True
    tied_with_best = (indiff & best[None, :]).any(axis=1)
    beaten_in_menu = (strict.T & in_menu[None, :]).any(axis=1)
    # exclusive on preorders: x ~ y maximal and z > x in the menu gives z > y
    assert not (tied_with_best & beaten_in_menu).any(), "prop1 cases overlap"
    values = {}
    for i, x in enumerate(rel.labels):
        if tied_with_best[i]:
            values[x] = Fraction(1)
        elif beaten_in_menu[i]:
            values[x] = base[x]
        else:
            values[x] = 1 + base[x]
    u = Utility(values)
    assert verify_representation(rel, u)
    assert argmax(u, menu) == maximal_elements(rel, menu)
    return u


def prop2_utility(rel: Relation, v: Utility, x: str) -> Utility:
    """Representation that ``x`` maximises on every menu where ``x`` is maximal.

    ``1`` on the indifference class of ``x``, ``1 + v`` strictly above
    ``x``, ``v`` elsewhere.
    """
    i = rel.index(x)
    base = _checked_base(rel, v)
    m = rel.matrix
    values = {}
    for j, y in enumerate(rel.labels):
        if m[j, i] and m[i, j]:
            values[y] = Fraction(1)
        elif m[j, i]:
            values[y] = 1 + base[y]
        else:
            values[y] = base[y]
    u = Utility(values)
    assert verify_representation(rel, u)
    return u


def counterexample_relation() -> Relation:
    """Strongly acyclic, intransitive: ``a > b``, ``b ~ c``, ``a`` and ``c`` unrelated."""
    return make_relation(
        "abc", [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("c", "b")]
    )


def scalarization_counterexample_check() -> bool:
    """Confirm that scalarisation fails for the intransitive relation above.

    ``c`` is maximal in ``{a, c}`` yet every representation ranks ``a``
    above ``c``.  "Every" is checked over all maps into ``{0, 1, 2}``:
    any representation composed with the rank of its image is another
    representation taking at most three values, and that composition
    preserves the ordering of ``a`` and ``c``.
    """
    rel = counterexample_relation()
    stated = Utility({"a": 1, "b": 0, "c": 0})
    sanity = (
        verify_representation(rel, stated)
        and is_strongly_acyclic(rel)
        and not is_transitive(rel)
    )
    menu_maximal = maximal_elements(rel, {"a", "c"}) == {"a", "c"}
    every_rep_prefers_a = True
    found = 0
    for values in itertools.product(range(3), repeat=3):
        candidate = Utility(dict(zip(rel.labels, values)))
        if verify_representation(rel, candidate):
            found += 1
            if not candidate["a"] > candidate["c"]:
                every_rep_prefers_a = False
    return sanity and menu_maximal and every_rep_prefers_a and found > 0
