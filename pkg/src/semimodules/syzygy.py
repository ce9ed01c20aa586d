"""Syzygies of a semimodule and the conductor formula they give.

For generators at points ``(a_0, b_0) = (0, alpha), (a_1, b_1), ..., (a_n, b_n)``
the minimal syzygies sit at the inner corners ``(a_k, b_{k+1})`` of the
staircase, with ``b_{n+1} = 0``.  The largest of them, ``M``, determines the
conductor: ``c = M - alpha - beta + 1``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .semigroup import (
    LatticePoint,
    SemigroupPair,
    conductor_semigroup,
    contains,
    is_gap,
    point_to_value,
    staircase_key,
    value_to_point,
)
from .semimodule import Semimodule, contains_semimodule, membership_table


class DegenerateSemimoduleError(ValueError):
    """The pairwise-intersection definition is empty for a principal semimodule."""


class InconsistencyError(RuntimeError):
    """Two routes that must agree produced different answers."""


@dataclass(frozen=True)
class SyzygySet:
    generators: tuple[int, ...]
    points: tuple[LatticePoint, ...]

    @property
    def max_value(self) -> int:
        return max(self.generators)

    @property
    def max_point(self) -> LatticePoint:
        return self.points[self.generators.index(self.max_value)]

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


@dataclass(frozen=True)
class ConductorResult:
    conductor: int
    M: int
    point: LatticePoint


def corner_points(S: SemigroupPair, points: list[LatticePoint]) -> list[LatticePoint]:
    """Inner (SE) corners of the staircase through the given ES corners."""
    a = [p.a for p in points]
    b = [p.b for p in points[1:]] + [0]
    return [LatticePoint(a[k], b[k]) for k in range(len(points))]


def _syzygy_set(S: SemigroupPair, values) -> SyzygySet:
    pts = sorted((value_to_point(S, h) for h in values), key=staircase_key)
    return SyzygySet(tuple(point_to_value(S, p) for p in pts), tuple(pts))


def syzygy_generators(D: Semimodule) -> SyzygySet:
    S = D.semigroup
    corners = corner_points(S, D.points)
    return SyzygySet(tuple(point_to_value(S, p) for p in corners), tuple(corners))


def minimal_elements(S: SemigroupPair, member: bytearray | bytes) -> list[int]:
    """Minimal generators of a semimodule given as a membership table.

    The table must be long enough that every minimal generator lies inside it.
    """
    alpha, beta = S.alpha, S.beta
    return [
        n for n in range(len(member))
        if member[n]
        and not (n >= alpha and member[n - alpha])
        and not (n >= beta and member[n - beta])
    ]


def syzygy_bruteforce(D: Semimodule) -> SyzygySet:
    """Materialize the union of pairwise intersections of ``g_i + Gamma``."""
    S = D.semigroup
    if D.is_principal:
        raise DegenerateSemimoduleError("a principal semimodule has no pairwise syzygies")
    limit = D.bound + S.product
    shifted = [membership_table(S, [g], limit) for g in D.generators]
    union = bytearray(limit)
    for i in range(len(shifted)):
        for j in range(i + 1, len(shifted)):
            ti, tj = shifted[i], shifted[j]
            for n in range(limit):
                if ti[n] and tj[n]:
                    union[n] = 1
    return _syzygy_set(S, minimal_elements(S, union))


def check_syzygy_congruences(D: Semimodule, J: SyzygySet) -> bool:
    S = D.semigroup
    alpha, beta = S.alpha, S.beta
    g, h = D.generators, J.generators
    n = len(g) - 1
    if len(h) != len(g):
        return False
    for k in range(n + 1):
        if (h[k] - g[k]) % beta or h[k] <= g[k]:
            return False
    for k in range(n):
        if (h[k] - g[k + 1]) % alpha or h[k] <= g[k + 1]:
            return False
    if h[n] % alpha or h[n] < 0:
        return False
    if h[0] > S.product or h[n] > S.product:
        return False
    return all(is_gap(S, x) for x in h[1:n])


def check_lemma_aux(D: Semimodule, J: SyzygySet) -> bool:
    """Every syzygy generator ``h`` has ``h - alpha - beta`` outside the semimodule."""
    s = D.semigroup.alpha + D.semigroup.beta
    return all(not contains_semimodule(D, h - s) for h in J)


def conductor_syzygy(D: Semimodule) -> ConductorResult:
    S = D.semigroup
    J = syzygy_generators(D)
    M, (m1, m2) = J.max_value, J.max_point
    from_max = M - S.alpha - S.beta + 1
    from_point = conductor_semigroup(S) - m1 * S.alpha - m2 * S.beta
    if from_max != from_point:
        raise InconsistencyError(f"conductor forms disagree: {from_max} != {from_point}")
    return ConductorResult(from_max, M, J.max_point)


def corollary_membership(D: Semimodule) -> bool:
    """c(Gamma) - c(Delta) is an element of Gamma."""
    return contains(D.semigroup, conductor_semigroup(D.semigroup) - conductor_syzygy(D).conductor)
