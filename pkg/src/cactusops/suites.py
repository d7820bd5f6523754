"""Seeded verification suites behind the ``verify`` command.

Each suite is a pure function from a SuiteConfig to a list of reports;
random checks derive their generator from the seed and the check name, so
identical configurations reproduce identical output byte for byte.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from typing import Callable

from .ainfty import (
    a_infinity_boundary_image,
    a_infinity_image,
    all_words,
    check_insertion_composition,
    check_top_insertion_identities,
    check_word_boundary_compat,
    word_boundary_image,
    word_image,
)
from .cacti import (
    enumerate_basis,
    is_cactus,
    prime_cacti,
    prime_cacti_count,
    prime_cacti_filtered,
)
from .elements import Element
from .operad import boundary, boundary_basis, compose
from .reports import VerificationReport
from .surjections import Surjection

__all__ = ["SuiteConfig", "SUITE_NAMES", "default_max_arity", "run_suite", "run_suites"]


@dataclass(frozen=True)
class SuiteConfig:
    max_arity: int = 6
    samples: int = 1000
    seed: int = 0
    fail_fast: bool = False

    def __post_init__(self):
        if self.max_arity < 2:
            raise ValueError("max_arity must be at least 2")
        if self.samples < 0:
            raise ValueError("samples must be non-negative")


def default_max_arity(suite: str) -> int:
    # The support/count suite reaches one arity further by default; the
    # identity suites stay at 6 to keep a full run under a minute.
    return 7 if suite == "cprime-count" else 6


def _rng(cfg: SuiteConfig, label: str) -> random.Random:
    return random.Random(f"{cfg.seed}:{label}")


def _random_surjection(rng: random.Random, n: int, length: int) -> Surjection:
    for _ in range(100_000):
        seq = [rng.randint(1, n)]
        while len(seq) < length:
            v = rng.randint(1, n - 1)
            if v >= seq[-1]:
                v += 1
            seq.append(v)
        if len(set(seq)) == n:
            return Surjection._unchecked(tuple(seq), n, length - n)
    raise RuntimeError(f"could not sample a surjection with n={n}, length={length}")


def _cactus_pool(max_arity: int) -> list[Surjection]:
    pool = []
    for n in range(2, max_arity + 1):
        for k in range(0, n):
            pool.extend(enumerate_basis(n, k, level=2))
    return pool


def _report(check: str, failures: list, detail: str) -> VerificationReport:
    return VerificationReport(
        check=check,
        passed=not failures,
        witness=failures[0] if failures else None,
        notes=(detail,),
    )


def run_dsq(cfg: SuiteConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, min(cfg.max_arity, 5) + 1):
        failures = []
        count = 0
        for k in range(0, (3 if n <= 4 else 2) + 1):
            for u in enumerate_basis(n, k, level=None):
                count += 1
                dd = boundary(boundary_basis(u))
                if dd:
                    failures.append({"element": str(u), "d_squared": str(dd)})
        reports.append(_report(f"dsq.exhaustive-arity-{n}", failures, f"{count} elements"))
    rng = _rng(cfg, "dsq")
    failures = []
    for _ in range(cfg.samples):
        n = rng.randint(2, 6)
        u = _random_surjection(rng, n, rng.randint(n, 12))
        dd = boundary(boundary_basis(u))
        if dd:
            failures.append({"element": str(u), "d_squared": str(dd)})
    reports.append(_report("dsq.random", failures, f"{cfg.samples} samples, length <= 12"))
    return reports


def run_axioms(cfg: SuiteConfig) -> list[VerificationReport]:
    from .operad import check_operad_axioms

    rng = _rng(cfg, "axioms")
    pool = _cactus_pool(min(cfg.max_arity, 4))
    failures = []
    rel1 = rel2 = 0
    for _ in range(cfg.samples):
        a, b, c = rng.choice(pool), rng.choice(pool), rng.choice(pool)
        i = rng.randint(1, a.arity)
        j = rng.randint(1, a.arity + b.arity - 1)
        rep = check_operad_axioms(a, i, b, j, c)
        if "relation1: not applicable" not in rep.notes:
            rel1 += 1
        if "relation2: not applicable" not in rep.notes:
            rel2 += 1
        if not rep.passed:
            failures.append({"case": rep.check, "witness": rep.witness})
    detail = f"{cfg.samples} triples (relation1: {rel1}, relation2: {rel2})"
    return [_report("axioms.random", failures, detail)]


def run_derivation(cfg: SuiteConfig) -> list[VerificationReport]:
    from .operad import check_derivation

    rng = _rng(cfg, "derivation")
    pool = _cactus_pool(min(cfg.max_arity, 4))
    failures = []
    for _ in range(cfg.samples):
        a, b = rng.choice(pool), rng.choice(pool)
        rep = check_derivation(a, rng.randint(1, a.arity), b)
        if not rep.passed:
            failures.append({"case": rep.check, "witness": rep.witness})
    return [_report("derivation.random", failures, f"{cfg.samples} pairs")]


def run_f2_closure(cfg: SuiteConfig) -> list[VerificationReport]:
    rng = _rng(cfg, "f2-closure")
    pool = _cactus_pool(min(cfg.max_arity, 4))
    compose_failures = []
    boundary_failures = []
    for _ in range(cfg.samples):
        v, u = rng.choice(pool), rng.choice(pool)
        t = rng.randint(1, v.arity)
        for w, _coeff in compose(v, t, u).terms():
            if not is_cactus(w):
                compose_failures.append({"compose": f"{v} o_{t} {u}", "term": str(w)})
        for w, _coeff in boundary_basis(u).terms():
            if not is_cactus(w):
                boundary_failures.append({"boundary": str(u), "term": str(w)})
    return [
        _report("f2-closure.compose", compose_failures, f"{cfg.samples} compositions"),
        _report("f2-closure.boundary", boundary_failures, f"{cfg.samples} boundaries"),
    ]


def run_bncomp(cfg: SuiteConfig) -> list[VerificationReport]:
    reports = []
    for n in range(2, min(cfg.max_arity, 6) + 1):
        failures = []
        elements = prime_cacti(n)
        for u in elements:
            rep = check_top_insertion_identities(u)
            if not rep.passed:
                failures.append({"case": rep.check, "witness": rep.witness})
        reports.append(
            _report(f"bncomp.prime-arity-{n}", failures, f"{len(elements)} elements")
        )
    return reports


def run_bncomp2(cfg: SuiteConfig) -> list[VerificationReport]:
    rng = _rng(cfg, "bncomp2")
    pool = [u for u in _cactus_pool(min(cfg.max_arity, 4)) if u.seq.count(u.arity) == 1]
    failures = []
    for _ in range(cfg.samples):
        u1, u2 = rng.choice(pool), rng.choice(pool)
        i = rng.randint(1, u1.arity)
        rep = check_insertion_composition(u1, i, u2)
        if not rep.passed:
            failures.append({"case": rep.check, "witness": rep.witness})
    return [_report("bncomp2.random", failures, f"{cfg.samples} eligible pairs")]


def run_mupartial(cfg: SuiteConfig) -> list[VerificationReport]:
    failures = []
    count = 0
    for length in range(1, cfg.max_arity):
        for word in all_words(length + 1):
            count += 1
            rep = check_word_boundary_compat(word)
            if not rep.passed:
                failures.append({"word": word, "witness": rep.witness})
    return [_report("mupartial.words", failures, f"{count} words")]


def run_a2inf(cfg: SuiteConfig) -> list[VerificationReport]:
    failures = []
    count = 0
    for length in range(1, cfg.max_arity):
        for word in all_words(length + 1):
            count += 1
            lhs = boundary(word_image(word))
            rhs = word_boundary_image(word)
            if lhs != rhs:
                failures.append({"word": word, "lhs": str(lhs), "rhs": str(rhs)})
    return [_report("a2inf.morphism", failures, f"{count} words")]


def run_ainf(cfg: SuiteConfig) -> list[VerificationReport]:
    failures = []
    for n in range(3, cfg.max_arity + 1):
        lhs = boundary(a_infinity_image(n))
        rhs = a_infinity_boundary_image(n)
        if lhs != rhs:
            failures.append({"arity": n, "lhs": str(lhs), "rhs": str(rhs)})
    return [_report("ainf.morphism", failures, f"arity 3..{cfg.max_arity}")]


def run_cprime_count(cfg: SuiteConfig) -> list[VerificationReport]:
    reports = []
    counts = []
    failures = []
    for n in range(2, cfg.max_arity + 1):
        got = len(prime_cacti(n))
        want = prime_cacti_count(n)
        counts.append(got)
        if got != want:
            failures.append({"arity": n, "count": got, "expected": want})
    detail = "counts " + ",".join(str(c) for c in counts)
    reports.append(_report("cprime.count", failures, detail))

    failures = []
    top = min(cfg.max_arity, 6)
    for n in range(2, top + 1):
        if prime_cacti(n) != sorted(prime_cacti_filtered(n), key=lambda u: u.seq):
            failures.append({"arity": n})
    reports.append(_report("cprime.filter-oracle", failures, f"arity 2..{top}"))

    failures = []
    for n in range(2, cfg.max_arity + 1):
        image = a_infinity_image(n)
        if image.support() != prime_cacti(n):
            failures.append({"arity": n, "reason": "support mismatch"})
        elif any(c not in (1, -1) for _, c in image.terms()):
            failures.append({"arity": n, "reason": "coefficient not +-1"})
    reports.append(
        _report("cprime.structure-support", failures, f"arity 2..{cfg.max_arity}")
    )
    return reports


def load_golden_table() -> list[tuple[str, Element]]:
    doc = json.loads(
        resources.files("cactusops.data").joinpath("golden_table.json").read_text()
    )
    rows = []
    for row in doc["rows"]:
        element = Element(
            [(Surjection(tuple(t["seq"])), t["coeff"]) for t in row["terms"]]
        )
        rows.append((row["word"], element))
    return rows


def run_golden_table(cfg: SuiteConfig) -> list[VerificationReport]:
    failures = []
    rows = load_golden_table()
    for word, expected in rows:
        got = word_image(word)
        if got != expected:
            failures.append({"word": word, "got": str(got), "expected": str(expected)})
    return [_report("golden-table.rows", failures, f"{len(rows)} rows")]


SUITES: dict[str, Callable[[SuiteConfig], list[VerificationReport]]] = {
    "dsq": run_dsq,
    "axioms": run_axioms,
    "derivation": run_derivation,
    "f2-closure": run_f2_closure,
    "bncomp": run_bncomp,
    "bncomp2": run_bncomp2,
    "mupartial": run_mupartial,
    "a2inf": run_a2inf,
    "ainf": run_ainf,
    "cprime-count": run_cprime_count,
    "golden-table": run_golden_table,
}

SUITE_NAMES = list(SUITES)


def run_suite(name: str, cfg: SuiteConfig) -> list[VerificationReport]:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; valid: {', '.join(SUITE_NAMES)}")
    return SUITES[name](cfg)


def run_suites(names: list[str], cfg_for: Callable[[str], SuiteConfig]) -> list[tuple[str, SuiteConfig, list[VerificationReport]]]:
    """Run several suites, honoring fail_fast across suite boundaries."""
    results = []
    for name in names:
        cfg = cfg_for(name)
        reports = run_suite(name, cfg)
        results.append((name, cfg, reports))
        if cfg.fail_fast and any(not r.passed for r in reports):
            break
    return results
