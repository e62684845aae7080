"""Property suites run by ``prefrep fuzz``.

Each check takes one relation and returns a list of failure notes
(empty on success).  :func:`run_fuzz` drives them over generated
inputs and collects per-suite tallies plus reproduction lines.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .acyclicity import find_strong_cycle, is_acyclic, is_strongly_acyclic
from .errors import NotStronglyAcyclic, TooLarge
from .oracle import (
    BRUTE_FORCE_LIMIT,
    EXHAUSTIVE_LIMIT,
    GeneratorConfig,
    brute_force_rp_exists,
    brute_force_strong_acyclicity,
    enumerate_all_relations,
    make_rng,
    random_candidate_utility,
    random_pseudo_stratification,
    random_relation,
)
from .optimality import argmax, maximal_elements, prop1_utility, prop2_utility
from .relation import (
    Relation,
    asymmetric_part,
    is_preorder,
    reflexive_closure,
    transitive_closure,
)
from .representation import (
    closure_transfer_check,
    normalize_to_unit_interval,
    synthesize,
    utility_from_stratification,
    verify_representation,
)
from .stratification import (
    Stratification,
    disjointify,
    is_separating,
    is_stratification,
)

MENU_LIMIT = 10


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_existence(rel: Relation) -> list[str]:
    """The four deciders of representability agree."""
    try:
        synthesize(rel)
        synthesized = True
    except NotStronglyAcyclic:
        synthesized = False
    verdicts = {
        "synthesize": synthesized,
        "scc": is_strongly_acyclic(rel),
        "brute_rp": brute_force_rp_exists(rel)[0],
        "brute_cycles": brute_force_strong_acyclicity(rel),
    }
    if len(set(verdicts.values())) != 1:
        return [" ".join(f"{k}={v}" for k, v in verdicts.items())]
    return []


def check_lemmas(rel: Relation, seed: int = 0) -> list[str]:
    notes = []
    rng = make_rng(GeneratorConfig(rel.n, seed))
    candidate = random_candidate_utility(rel, rng)
    if verify_representation(rel, candidate) != verify_representation(reflexive_closure(rel), candidate):
        notes.append("reflexive closure changed the representation set")
    if not closure_transfer_check(rel, candidate):
        notes.append("candidate representation lost on the transitive closure")
    witness = find_strong_cycle(rel)
    if witness is None:
        u = synthesize(rel)
        if not verify_representation(rel, u):
            notes.append("synthesized utility fails on the relation")
        if not closure_transfer_check(rel, u):
            notes.append("synthesized utility fails on the closure")
        closed = asymmetric_part(transitive_closure(rel)).matrix
        if (asymmetric_part(rel).matrix & ~closed).any():
            notes.append("strict pair lost under transitive closure")
        if not is_acyclic(rel):
            notes.append("strongly acyclic but not acyclic")
    elif not witness.holds_in(rel):
        notes.append("witness does not replay")
    return notes


def _menus(rel: Relation) -> Iterable[frozenset[str]]:
    for r in range(rel.n + 1):
        for menu in itertools.combinations(rel.labels, r):
            yield frozenset(menu)


def check_prop1(rel: Relation) -> list[str]:
    v = normalize_to_unit_interval(synthesize(rel))
    return [
        f"menu={sorted(menu)}"
        for menu in _menus(rel)
        if argmax(prop1_utility(rel, v, menu), menu) != maximal_elements(rel, menu)
    ]


def check_prop2(rel: Relation) -> list[str]:
    v = normalize_to_unit_interval(synthesize(rel))
    notes = []
    for x in rel.labels:
        u = prop2_utility(rel, v, x)
        for menu in _menus(rel):
            if x in maximal_elements(rel, menu) and x not in argmax(u, menu):
                notes.append(f"x={x} menu={sorted(menu)}")
    return notes


def check_series(rel: Relation, seed: int = 0) -> list[str]:
    notes = []
    rng = make_rng(GeneratorConfig(rel.n, seed, "preorder"))
    for strat in (Stratification.singletons(rel), random_pseudo_stratification(rel, rng)):
        u = utility_from_stratification(rel, strat)
        if not verify_representation(rel, u):
            notes.append(f"series utility fails for {strat.strata}")
        bound = 1 << (len(strat) - 1)
        if any(bound % value.denominator for value in u.values()):
            notes.append(f"denominator exceeds {bound}")
        fixed = disjointify(strat)
        if not (is_stratification(rel, fixed) and is_separating(rel, fixed)):
            notes.append(f"disjointify broke {strat.strata}")
    return notes


Check = Callable[[Relation], list]


def _run(result: SuiteResult, check: Check, rel: Relation, where: str) -> None:
    result.checked += 1
    notes = check(rel)
    result.failed += bool(notes)
    for note in notes:
        result.failures.append(f"REPRO {where} suite={result.name} {note}")


def run_fuzz(n: int, seeds: int = 100, kind: str = "arbitrary", exhaustive: bool = False,
             first_seed: int = 0) -> list[SuiteResult]:
    if exhaustive:
        if n > EXHAUSTIVE_LIMIT:
            raise TooLarge(f"exhaustive mode is limited to n <= {EXHAUSTIVE_LIMIT}")
        existence = SuiteResult("existence")
        lemmas = SuiteResult("lemmas")
        for code, rel in enumerate(enumerate_all_relations(n)):
            _run(existence, check_existence, rel, f"n={n} code={code} exhaustive")
            _run(lemmas, lambda r: check_lemmas(r, code), rel, f"n={n} code={code} exhaustive")
        return [existence, lemmas]

    results = {name: SuiteResult(name) for name in ("existence", "lemmas", "prop1", "prop2", "series")}
    for seed in range(first_seed, first_seed + seeds):
        cfg = GeneratorConfig(n, seed, kind)
        rel = random_relation(cfg)
        where = cfg.describe()
        if n <= BRUTE_FORCE_LIMIT:
            _run(results["existence"], check_existence, rel, where)
        _run(results["lemmas"], lambda r: check_lemmas(r, seed), rel, where)
        if is_preorder(rel):
            if n <= MENU_LIMIT:
                _run(results["prop1"], check_prop1, rel, where)
                _run(results["prop2"], check_prop2, rel, where)
            _run(results["series"], lambda r: check_series(r, seed), rel, where)
    return [r for r in results.values() if r.checked]
