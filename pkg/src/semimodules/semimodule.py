"""Normalized semimodules over <alpha, beta>: generators, membership, gaps, Apery sets."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .semigroup import (
    LatticePoint,
    SemigroupPair,
    conductor_semigroup,
    contains,
    gap_to_point,
    staircase_key,
    value_to_point,
)


def normalize(gens: Iterable[int]) -> list[int]:
    """Shift a generating list so that its minimum becomes 0."""
    gens = list(gens)
    if not gens:
        raise ValueError("a semimodule needs at least one generator")
    if any(g < 0 for g in gens):
        raise ValueError("generators must be nonnegative")
    m = min(gens)
    return [g - m for g in gens]


def generator_points(S: SemigroupPair, gens: Iterable[int]) -> list[LatticePoint]:
    """Lattice points of a normalized generator list; 0 sits at ``(0, alpha)``."""
    return [value_to_point(S, 0) if g == 0 else gap_to_point(S, g) for g in gens]


def sort_generators(S: SemigroupPair, gens: Iterable[int]) -> list[int]:
    return sorted(gens, key=lambda g: staircase_key(value_to_point(S, g) if g == 0 else gap_to_point(S, g)))


def minimalize(S: SemigroupPair, gens: Iterable[int]) -> list[int]:
    """Drop every generator lying in ``g' + Gamma`` for another generator ``g'``.

    The survivors come back sorted along the staircase: 0 first, then the
    gaps by increasing ``a`` (equivalently decreasing ``b``).
    """
    distinct = sorted(set(gens))
    if not distinct or distinct[0] != 0:
        raise ValueError("generators must be normalized (contain 0)")
    kept = [
        g for g in distinct
        if not any(h != g and contains(S, g - h) for h in distinct)
    ]
    return sort_generators(S, kept)


def is_lean(S: SemigroupPair, values: Iterable[int]) -> bool:
    xs = list(values)
    return all(
        not contains(S, abs(xs[i] - xs[j]))
        for i in range(len(xs))
        for j in range(i + 1, len(xs))
    )


@dataclass(frozen=True)
class AperySet:
    modulus: int
    representatives: tuple[int, ...]

    def __len__(self):
        return len(self.representatives)

    def __iter__(self):
        return iter(self.representatives)

    @property
    def max(self) -> int:
        return max(self.representatives)


@dataclass(frozen=True)
class Semimodule:
    """A normalized semimodule given by its minimal generators.

    ``table[n]`` is 1 iff ``n`` belongs to the semimodule, for ``0 <= n < bound``;
    every ``n >= bound`` belongs.
    """

    semigroup: SemigroupPair
    generators: tuple[int, ...]
    bound: int
    table: bytes = field(repr=False)

    def __contains__(self, n: int) -> bool:
        return contains_semimodule(self, n)

    @property
    def points(self) -> list[LatticePoint]:
        return generator_points(self.semigroup, self.generators)

    @property
    def is_principal(self) -> bool:
        return len(self.generators) == 1


def membership_table(S: SemigroupPair, gens: Iterable[int], bound: int) -> bytearray:
    gens = set(gens)
    alpha, beta = S.alpha, S.beta
    table = bytearray(bound)
    for n in range(bound):
        if n in gens or (n >= alpha and table[n - alpha]) or (n >= beta and table[n - beta]):
            table[n] = 1
    return table


def make_semimodule(S: SemigroupPair, gens: Iterable[int]) -> Semimodule:
    mins = minimalize(S, normalize(gens))
    bound = conductor_semigroup(S) + max(mins) + 1
    return Semimodule(S, tuple(mins), bound, bytes(membership_table(S, mins, bound)))


def contains_semimodule(D: Semimodule, n: int) -> bool:
    if n < 0:
        return False
    if n >= D.bound:
        return True
    return bool(D.table[n])


def gaps_semimodule(D: Semimodule) -> list[int]:
    return [n for n in range(D.bound) if not D.table[n]]


def conductor_bruteforce(D: Semimodule) -> int:
    gaps = gaps_semimodule(D)
    return gaps[-1] + 1 if gaps else 0


def apery(D: Semimodule, s: int) -> AperySet:
    """Least element of the semimodule in each residue class modulo ``s``."""
    if s <= 0 or not contains(D.semigroup, s):
        raise ValueError(f"modulus {s} is not a nonzero element of {D.semigroup}")
    reps: list[int | None] = [None] * s
    missing = s
    # every class has a member below bound + s
    for n in range(D.bound + s):
        r = n % s
        if reps[r] is None and contains_semimodule(D, n):
            reps[r] = n
            missing -= 1
            if not missing:
                break
    return AperySet(s, tuple(reps))


def conductor_via_apery(D: Semimodule, s: int) -> int:
    return apery(D, s).max - s + 1
