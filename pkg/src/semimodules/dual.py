"""The dual semimodule {z : z + Delta in Gamma} and its conductor formula.

Generators are listed in the reverse of the staircase order of the syzygies
they correspond to under ``x -> alpha*beta - x``.  Values are not normalized.
"""
from __future__ import annotations

from dataclasses import dataclass

from .semigroup import SemigroupPair, conductor_semigroup, contains, staircase_key, value_to_point
from .semimodule import Semimodule
from .syzygy import minimal_elements, syzygy_generators


@dataclass(frozen=True)
class DualSet:
    generators: tuple[int, ...]

    @property
    def min_value(self) -> int:
        return min(self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def _dual_order(S: SemigroupPair, xs) -> tuple[int, ...]:
    ab = S.product
    return tuple(sorted(xs, key=lambda x: staircase_key(value_to_point(S, ab - x)), reverse=True))


def dual_bruteforce(D: Semimodule) -> DualSet:
    S = D.semigroup
    c = conductor_semigroup(S)
    below = [d for d in range(min(c, D.bound)) if D.table[d]]
    member = bytearray(S.product + 1)
    for z in range(S.product + 1):
        if all(contains(S, z + d) for d in below):
            member[z] = 1
    return DualSet(_dual_order(S, minimal_elements(S, member)))


def dual_from_syzygy(D: Semimodule) -> DualSet:
    ab = D.semigroup.product
    return DualSet(tuple(ab - h for h in reversed(syzygy_generators(D).generators)))


def conductor_dual(D: Semimodule, dual: DualSet | None = None) -> int:
    S = D.semigroup
    if dual is None:
        dual = dual_from_syzygy(D)
    return S.product - dual.min_value - S.alpha - S.beta + 1
