"""Cross-checks of every conductor/syzygy/dual identity, per semimodule and in sweeps."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from math import gcd

from .dual import conductor_dual, dual_bruteforce, dual_from_syzygy
from .lattice_path import enumerate_semimodules
from .semigroup import SemigroupPair, conductor_semigroup, contains
from .semimodule import (
    Semimodule,
    apery,
    conductor_bruteforce,
    conductor_via_apery,
    gaps_semimodule,
    make_semimodule,
)
from .syzygy import (
    InconsistencyError,
    check_lemma_aux,
    check_syzygy_congruences,
    conductor_syzygy,
    syzygy_bruteforce,
    syzygy_generators,
)

# Names of the checks, in report order.
CHECKS = (
    "theorem-conductor",        # M - alpha - beta + 1 equals the brute-force conductor
    "theorem-forms-agree",      # ... and equals c(Gamma) - m1*alpha - m2*beta
    "apery-conductor",          # max Ap(D, s) - s + 1 for s in {alpha, beta, alpha+beta}
    "apery-max-syzygy",         # M = max Ap(D, alpha+beta)
    "corollary-membership",     # c(Gamma) - c(D) lies in Gamma
    "lemma-aux",                # h - alpha - beta not in D
    "congruences",
    "syzygy-vs-bruteforce",
    "dual-bijection",
    "dual-conductor",
)


def check_semimodule(D: Semimodule) -> dict[str, bool]:
    S = D.semigroup
    alpha, beta = S.alpha, S.beta
    c = conductor_bruteforce(D)
    J = syzygy_generators(D)
    out = dict.fromkeys(CHECKS, False)

    try:
        res = conductor_syzygy(D)
        out["theorem-forms-agree"] = True
        out["theorem-conductor"] = res.conductor == c
    except InconsistencyError:
        res = None
    out["apery-conductor"] = all(conductor_via_apery(D, s) == c for s in (alpha, beta, alpha + beta))
    out["apery-max-syzygy"] = apery(D, alpha + beta).max == J.max_value
    out["corollary-membership"] = res is not None and contains(S, conductor_semigroup(S) - res.conductor)
    out["lemma-aux"] = check_lemma_aux(D, J)
    out["congruences"] = check_syzygy_congruences(D, J)
    if D.is_principal:
        # pairwise intersections are empty; the convention is h_0 = alpha*beta
        out["syzygy-vs-bruteforce"] = J.generators == (S.product,)
    else:
        out["syzygy-vs-bruteforce"] = syzygy_bruteforce(D).generators == J.generators
    brute = dual_bruteforce(D)
    out["dual-bijection"] = set(brute.generators) == set(dual_from_syzygy(D).generators)
    out["dual-conductor"] = conductor_dual(D, brute) == c
    return out


@dataclass
class AnalysisReport:
    semigroup: dict
    semimodule: dict
    syzygy: dict
    dual: dict
    consistency: dict[str, bool]

    @property
    def ok(self) -> bool:
        return all(self.consistency.values())

    def to_dict(self) -> dict:
        return {
            "semigroup": self.semigroup,
            "semimodule": self.semimodule,
            "syzygy": self.syzygy,
            "dual": self.dual,
            "consistency": self.consistency,
        }

    def to_json(self) -> str:
        return dumps(self.to_dict())

    def to_text(self) -> str:
        sg, sm, sz, du = self.semigroup, self.semimodule, self.syzygy, self.dual
        lines = [
            f"semigroup   <{sg['alpha']},{sg['beta']}>  conductor {sg['conductor']}",
            f"generators  {_bracket(sm['generators'])}",
            f"gaps        {_bracket(sm['gaps'])}",
            f"conductor   {sm['conductor']}",
            f"syzygies    {_bracket(sz['generators'])}  max {sz['max']} at {tuple(sz['max_point'])}",
            f"dual        {_bracket(du['generators'])}  min {du['min']}",
            "checks",
        ]
        lines += [f"  {'ok  ' if v else 'FAIL'} {k}" for k, v in self.consistency.items()]
        return "\n".join(lines) + "\n"


def _bracket(xs) -> str:
    return "[" + ",".join(map(str, xs)) + "]"


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def analyze(alpha: int, beta: int, gens) -> AnalysisReport:
    S = SemigroupPair(alpha, beta)
    D = make_semimodule(S, gens)
    J = syzygy_generators(D)
    dual = dual_from_syzygy(D)
    return AnalysisReport(
        semigroup={"alpha": alpha, "beta": beta, "conductor": conductor_semigroup(S)},
        semimodule={
            "generators": list(D.generators),
            "gaps": gaps_semimodule(D),
            "conductor": conductor_bruteforce(D),
        },
        syzygy={"generators": list(J.generators), "max": J.max_value, "max_point": list(J.max_point)},
        dual={"generators": list(dual.generators), "min": dual.min_value},
        consistency=check_semimodule(D),
    )


@dataclass
class SweepReport:
    alpha: int
    beta: int
    semimodule_count: int = 0
    violations: list[dict] = field(default_factory=list)
    elapsed_ms: int = 0

    def to_dict(self) -> dict:
        return {
            "semigroup": {"alpha": self.alpha, "beta": self.beta},
            "semimodule_count": self.semimodule_count,
            "violations": self.violations,
            "elapsed_ms": self.elapsed_ms,
        }


def coprime_pairs(max_sum: int):
    for total in range(5, max_sum + 1):
        for alpha in range(2, (total + 1) // 2):
            beta = total - alpha
            if gcd(alpha, beta) == 1:
                yield alpha, beta


def verify_pair(S: SemigroupPair) -> SweepReport:
    t0 = time.perf_counter()
    report = SweepReport(S.alpha, S.beta)
    for lean in enumerate_semimodules(S):
        report.semimodule_count += 1
        D = make_semimodule(S, lean)
        if list(D.generators) != lean:
            report.violations.append({"lean_set": lean, "check": "enumeration-roundtrip"})
        for name, passed in check_semimodule(D).items():
            if not passed:
                report.violations.append({"lean_set": lean, "check": name})
    report.elapsed_ms = round((time.perf_counter() - t0) * 1000)
    return report


def sweep_verify(max_sum: int) -> list[SweepReport]:
    if max_sum < 5:
        raise ValueError("max_sum must be at least 5")
    return [verify_pair(SemigroupPair(a, b)) for a, b in coprime_pairs(max_sum)]
