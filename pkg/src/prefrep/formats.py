"""Text formats: ``.rel`` relations, ``.strat`` stratifications, utilities, embedding maps.

``.rel``::

    # comment
    elements: a b c
    a >= b
    b >= c

The first non-comment line declares the universe in order; every other
non-blank line is one pair.  Canonical output lists the pairs sorted by
``(left label, right label)``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path
from typing import Iterable

import numpy as np

from .errors import ParseError
from .relation import Relation
from .representation import Utility
from .stratification import Stratification

__all__ = [
    "parse_relation",
    "format_relation",
    "read_relation",
    "parse_stratification",
    "format_stratification",
    "read_stratification",
    "parse_utility",
    "format_utility",
    "parse_embedding_map",
    "format_embedding_map",
    "read_embedding_map",
]

LABEL = re.compile(r"[A-Za-z0-9_]+\Z")
_PAIR = re.compile(r"\s*([A-Za-z0-9_]+)\s*>=\s*([A-Za-z0-9_]+)\s*\Z")
_ARROW = re.compile(r"\s*([A-Za-z0-9_]+)\s*->\s*([A-Za-z0-9_]+)\s*\Z")
_VALUE = re.compile(r"\s*([A-Za-z0-9_]+)\s*=\s*(-?\d+)\s*/\s*(\d+)\s*\Z")


def _content_lines(text: str) -> Iterable[tuple[int, str]]:
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line


def _check_label(label: str, line: int) -> str:
    if not LABEL.match(label):
        raise ParseError(f"invalid label {label!r}", line)
    return label


def parse_relation(text: str) -> Relation:
    lines = _content_lines(text)
    header = next(lines, None)
    if header is None:
        raise ParseError("missing 'elements:' line", 1)
    number, line = header
    key, sep, rest = line.partition(":")
    if not sep or key.strip() != "elements":
        raise ParseError("first line must be 'elements: <label> ...'", number)
    labels = [_check_label(x, number) for x in rest.split()]
    if not labels:
        raise ParseError("universe must be nonempty", number)
    index: dict[str, int] = {}
    for label in labels:
        if label in index:
            raise ParseError(f"duplicate label {label!r}", number)
        index[label] = len(index)
    n = len(labels)
    m = np.zeros((n, n), dtype=bool)
    for number, line in lines:
        match = _PAIR.match(line)
        if not match:
            raise ParseError(f"expected '<label> >= <label>', got {line!r}", number)
        x, y = match.groups()
        for label in (x, y):
            if label not in index:
                raise ParseError(f"unknown label {label!r}", number)
        m[index[x], index[y]] = True
    return Relation(labels, m)


def format_relation(rel: Relation) -> str:
    out = ["elements: " + " ".join(rel.labels)]
    out += [f"{x} >= {y}" for x, y in sorted(rel.pairs())]
    return "\n".join(out) + "\n"


def read_relation(path) -> Relation:
    return parse_relation(Path(path).read_text())


def parse_stratification(text: str, rel: Relation | None = None) -> Stratification:
    """One stratum per non-blank line; line order gives the weight index."""
    strata = []
    for number, line in _content_lines(text):
        labels = [_check_label(x, number) for x in line.split()]
        if rel is not None:
            for label in labels:
                if label not in rel:
                    raise ParseError(f"unknown label {label!r}", number)
        strata.append(tuple(labels))
    if not strata:
        raise ParseError("stratification has no strata", 1)
    return Stratification(tuple(strata))


def format_stratification(strat: Stratification) -> str:
    return "".join(" ".join(s) + "\n" for s in strat.strata)


def read_stratification(path, rel: Relation | None = None) -> Stratification:
    return parse_stratification(Path(path).read_text(), rel)


def parse_utility(text: str) -> Utility:
    values = {}
    for number, line in _content_lines(text):
        match = _VALUE.match(line)
        if not match:
            raise ParseError(f"expected '<label> = <num>/<den>', got {line!r}", number)
        label, num, den = match.groups()
        if int(den) == 0:
            raise ParseError("zero denominator", number)
        if label in values:
            raise ParseError(f"duplicate label {label!r}", number)
        values[label] = Fraction(int(num), int(den))
    return Utility(values)


def format_utility(u: Utility, order: Iterable[str] | None = None) -> str:
    keys = list(order) if order is not None else list(u)
    return "".join(f"{x} = {u[x].numerator}/{u[x].denominator}\n" for x in keys)


def parse_embedding_map(text: str) -> dict[str, str]:
    mapping: dict[str, str] = {}
    for number, line in _content_lines(text):
        match = _ARROW.match(line)
        if not match:
            raise ParseError(f"expected '<source> -> <target>', got {line!r}", number)
        src, dst = match.groups()
        if src in mapping and mapping[src] != dst:
            raise ParseError(f"{src!r} is mapped twice", number)
        mapping[src] = dst
    return mapping


def format_embedding_map(mapping: dict[str, str]) -> str:
    return "".join(f"{x} -> {y}\n" for x, y in mapping.items())


def read_embedding_map(path) -> dict[str, str]:
    return parse_embedding_map(Path(path).read_text())
