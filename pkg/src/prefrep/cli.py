"""``prefrep`` command line.

Output is line-oriented ``KEY value`` pairs (``--json`` mirrors the same
content as one JSON object).  Exit codes: 0 success, 1 parse or usage
error, 2 mathematical refusal, 3 suite failure.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

import numpy as np

from .acyclicity import find_strong_cycle, is_acyclic
from .errors import NotPreorder, ParseError, PrefrepError, Refusal, TooLarge, UnknownElement
from .formats import (
    format_relation,
    format_stratification,
    format_utility,
    parse_relation,
    read_embedding_map,
    read_stratification,
)
from .oracle import KINDS
from .optimality import (
    argmax,
    maximal_elements,
    prop1_utility,
    scalarization_counterexample_check,
)
from .relation import (
    Relation,
    is_complete,
    is_preorder,
    is_reflexive,
    is_transitive,
    reflexive_closure,
    transitive_closure,
)
from .representation import (
    normalize_to_unit_interval,
    representation_violations,
    synthesize,
    utility_from_stratification,
)
from .stratification import (
    EmbeddingMap,
    Stratification,
    disjointify,
    is_pseudo_stratification,
    is_separable_finite,
    is_separating,
    is_stratification,
    verify_embedding,
)
from .suites import run_fuzz

EXIT_OK, EXIT_USAGE, EXIT_REFUSED, EXIT_SUITE = 0, 1, 2, 3


class Report:
    """Collects verdicts and free-form lines in output order."""

    def __init__(self, argv: list[str]):
        self.command = " ".join(["prefrep", *argv])
        self.inputs: list[tuple[str, str]] = []
        self.lines: list[tuple[str | None, str]] = []
        self.verdicts: dict[str, object] = {}
        self.witnesses: list[str] = []
        self.started = time.perf_counter()

    def digest(self, path: str, data: bytes) -> None:
        self.inputs.append((path, "sha256:" + hashlib.sha256(data).hexdigest()))

    def verdict(self, key: str, value) -> None:
        self.verdicts[key] = value
        self.lines.append((key, _render(value)))

    def witness(self, key: str, text: str) -> None:
        self.witnesses.append(f"{key} {text}")
        self.lines.append((key, text))

    def raw(self, text: str) -> None:
        for line in text.splitlines():
            self.lines.append((None, line))

    def elapsed_ms(self) -> float:
        return round(1000 * (time.perf_counter() - self.started), 3)

    def text(self) -> str:
        out = [f"COMMAND {self.command}"]
        out += [f"INPUT {path} {digest}" for path, digest in self.inputs]
        out += [line if key is None else f"{key} {line}" for key, line in self.lines]
        out.append(f"TIME_MS {self.elapsed_ms()}")
        return "\n".join(out) + "\n"

    def json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "inputs": [{"path": p, "digest": d} for p, d in self.inputs],
                "verdicts": self.verdicts,
                "witnesses": self.witnesses,
                "lines": [line for key, line in self.lines if key is None],
                "time_ms": self.elapsed_ms(),
            },
            indent=2,
        )


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, set, frozenset)):
        return " ".join(str(v) for v in value)
    return str(value)


def _load_relation(report: Report, path: str) -> Relation:
    data = Path(path).read_bytes()
    report.digest(path, data)
    return parse_relation(data.decode())


def _sorted_labels(labels) -> list[str]:
    return sorted(labels)


# -- subcommands ------------------------------------------------------------


def cmd_check(args, report: Report) -> int:
    rel = _load_relation(report, args.path)
    m = rel.matrix
    report.verdict("ELEMENTS", rel.n)
    reflexive = is_reflexive(rel)
    report.verdict("REFLEXIVE", reflexive)
    if not reflexive:
        i = int(np.flatnonzero(~m.diagonal())[0])
        report.witness("IRREFLEXIVE_AT", rel.labels[i])
    complete = is_complete(rel)
    report.verdict("COMPLETE", complete)
    if not complete:
        i, j = np.argwhere(~(m | m.T))[0]
        report.witness("INCOMPARABLE", f"{rel.labels[i]} {rel.labels[j]}")
    transitive = is_transitive(rel)
    report.verdict("TRANSITIVE", transitive)
    if not transitive:
        mf = m.astype(np.float32)
        gap = ((mf @ mf) > 0) & ~m
        x, z = np.argwhere(gap)[0]
        y = int(np.flatnonzero(m[x] & m[:, z])[0])
        report.witness("INTRANSITIVE", f"{rel.labels[x]} {rel.labels[y]} {rel.labels[z]}")
    report.verdict("PREORDER", reflexive and transitive)
    report.verdict("ACYCLIC", is_acyclic(rel))
    witness = find_strong_cycle(rel)
    report.verdict("STRONGLY_ACYCLIC", witness is None)
    if witness is not None:
        report.witness("WITNESS", witness.format())
    report.verdict("SEPARABLE_FINITE", reflexive and transitive)
    return EXIT_OK


def cmd_closure(args, report: Report) -> int:
    rel = _load_relation(report, args.path)
    base = reflexive_closure(rel) if args.reflexive else rel
    closed = transitive_closure(base)
    report.verdict("ADDED_PAIRS", int(closed.matrix.sum() - rel.matrix.sum()))
    report.raw(format_relation(closed))
    return EXIT_OK


def _report_utility(report: Report, rel: Relation, u) -> bool:
    report.raw(format_utility(u, rel.labels))
    violations = representation_violations(rel, u)
    for v in violations:
        report.witness("VIOLATION", f"{v.kind} {v.x} {v.y}")
    report.verdict("VERIFIED", not violations)
    return not violations


def cmd_represent(args, report: Report) -> int:
    rel = _load_relation(report, args.path)
    if args.method == "level":
        u = synthesize(rel)
    else:
        if args.strat == "singletons":
            strat = Stratification.singletons(rel)
        else:
            data = Path(args.strat).read_bytes()
            report.digest(args.strat, data)
            strat = read_stratification(args.strat, rel)
        u = utility_from_stratification(rel, strat)
    report.verdict("METHOD", args.method)
    ok = _report_utility(report, rel, u)
    return EXIT_OK if ok else EXIT_SUITE


def _menu(rel: Relation, menu_args) -> list[str]:
    if menu_args is None:
        return list(rel.labels)
    labels = [x for arg in menu_args for x in arg.replace(",", " ").split()]
    rel.indices(labels)
    return labels


def cmd_maximal(args, report: Report) -> int:
    rel = _load_relation(report, args.path)
    menu = _menu(rel, args.menu)
    best = maximal_elements(rel, menu)
    report.verdict("MENU", _sorted_labels(set(menu)))
    report.verdict("MAXIMAL", _sorted_labels(best))
    if args.scalarize:
        if not is_preorder(rel):
            raise NotPreorder("--scalarize needs a preorder")
        v = normalize_to_unit_interval(synthesize(rel))
        u = prop1_utility(rel, v, menu)
        report.raw(format_utility(u, rel.labels))
        top = argmax(u, menu)
        report.verdict("ARGMAX", _sorted_labels(top))
        report.verdict("ARGMAX_EQUALS_MAXIMAL", top == best)
    return EXIT_OK


def cmd_stratify(args, report: Report) -> int:
    rel = _load_relation(report, args.rel)
    report.digest(args.strat, Path(args.strat).read_bytes())
    strat = read_stratification(args.strat, rel)
    pseudo = is_pseudo_stratification(rel, strat)
    report.verdict("STRATA", len(strat))
    report.verdict("PSEUDO_STRATIFICATION", pseudo)
    report.verdict("STRATIFICATION", is_stratification(rel, strat))
    if pseudo:
        report.verdict("SEPARATING", is_separating(rel, strat))
    if args.disjointify:
        fixed = disjointify(strat)
        for origin, line in zip(fixed.origin, format_stratification(fixed).splitlines()):
            report.witness("STRATUM", f"{origin} {line}")
        report.verdict("DISJOINT_STRATIFICATION", is_stratification(rel, fixed))
        if pseudo:
            report.verdict("DISJOINT_SEPARATING", is_separating(rel, fixed))
    return EXIT_OK


def cmd_embed(args, report: Report) -> int:
    source = _load_relation(report, args.source)
    target = _load_relation(report, args.target)
    report.digest(args.map, Path(args.map).read_bytes())
    mapping = read_embedding_map(args.map)
    report.verdict("EMBEDDING", verify_embedding(EmbeddingMap(source, target, mapping)))
    report.verdict("TARGET_PREORDER", is_preorder(target))
    report.verdict("SOURCE_PREORDER", is_preorder(source))
    report.verdict("SOURCE_SEPARABLE_FINITE", is_separable_finite(source))
    return EXIT_OK


def cmd_counterexample(args, report: Report) -> int:
    confirmed = scalarization_counterexample_check()
    report.verdict("COUNTEREXAMPLE_CONFIRMED", confirmed)
    return EXIT_OK if confirmed else EXIT_SUITE


def cmd_fuzz(args, report: Report) -> int:
    results = run_fuzz(args.n, args.seeds, args.kind, args.exhaustive, args.first_seed)
    failed = False
    for result in results:
        passed = result.checked - result.failed
        report.verdict(f"SUITE_{result.name.upper()}", f"{passed}/{result.checked}")
        for line in result.failures[:20]:
            report.witness("FAIL", line)
        failed |= not result.ok
    report.verdict("AGREEMENT", not failed)
    return EXIT_SUITE if failed else EXIT_OK


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="prefrep", description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true", help="emit a JSON report instead of KEY value lines")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="report relation properties with witnesses")
    p.add_argument("path")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("closure", help="print the transitive closure")
    p.add_argument("path")
    p.add_argument("--reflexive", action="store_true", help="close reflexively as well")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("represent", help="construct and verify a utility representation")
    p.add_argument("path")
    p.add_argument("--method", choices=("level", "series"), default="level")
    p.add_argument("--strat", default="singletons", help="'.strat' file or 'singletons' (series method)")
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("maximal", help="maximal elements of a menu")
    p.add_argument("path")
    p.add_argument("--menu", nargs="+", help="labels, space or comma separated (default: whole universe)")
    p.add_argument("--scalarize", action="store_true", help="also build a utility whose argmax is the maximal set")
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("stratify", help="validate a '.strat' file against a relation")
    p.add_argument("rel")
    p.add_argument("strat")
    p.add_argument("--disjointify", action="store_true")
    p.set_defaults(func=cmd_stratify)

    p = sub.add_parser("embed", help="verify an embedding map between two relations")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("map")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("counterexample", help="confirm scalarisation fails without transitivity")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("fuzz", help="run the randomized property suites")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seeds", type=int, default=100)
    p.add_argument("--first-seed", type=int, default=0)
    p.add_argument("--kind", choices=KINDS, default="arbitrary")
    p.add_argument("--exhaustive", action="store_true", help="enumerate every relation on n elements")
    p.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    report = Report([a for a in argv if a != "--json"])
    try:
        code = args.func(args, report)
    except Refusal as exc:
        report.verdict("ERROR", type(exc).__name__)
        witness = getattr(exc, "witness", None)
        if witness is not None:
            report.witness("WITNESS", witness.format())
        report.raw(f"MESSAGE {exc}")
        code = EXIT_REFUSED
    except (ParseError, UnknownElement, TooLarge, OSError, UnicodeDecodeError) as exc:
        report.verdict("ERROR", type(exc).__name__)
        if isinstance(exc, ParseError) and exc.line is not None:
            report.verdict("LINE", exc.line)
        report.raw(f"MESSAGE {exc}")
        code = EXIT_USAGE
    except PrefrepError as exc:
        report.verdict("ERROR", type(exc).__name__)
        report.raw(f"MESSAGE {exc}")
        code = EXIT_USAGE
    sys.stdout.write(report.json() + "\n" if args.json else report.text())
    return code


if __name__ == "__main__":
    sys.exit(main())
