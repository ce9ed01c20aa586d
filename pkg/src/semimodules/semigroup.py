"""Two-generator numerical semigroups <alpha, beta> and the lattice coding of gaps.

Every gap ``e`` of ``<alpha, beta>`` has a unique writing
``e = alpha*beta - a*alpha - b*beta`` with ``1 <= a <= beta-1`` and
``1 <= b <= alpha-1``.  We also allow the axes (``a == 0`` or ``b == 0``) so
that syzygy generators such as ``h_0`` and ``h_n`` get coordinates too.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

UINT64_MAX = 2**64 - 1


class Order(enum.Enum):
    """Outcome of comparing two lattice points under the staircase order."""

    STRICTLY_LESS = "strictly-less"
    WEAKLY_LESS = "weakly-less"
    EQUAL = "equal"
    STRICTLY_GREATER = "strictly-greater"
    WEAKLY_GREATER = "weakly-greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True, order=True)
class LatticePoint:
    a: int
    b: int

    def __iter__(self):
        yield self.a
        yield self.b

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)


@dataclass(frozen=True)
class SemigroupPair:
    """The semigroup alpha*N + beta*N with coprime ``2 <= alpha < beta``."""

    alpha: int
    beta: int

    def __post_init__(self):
        alpha, beta = self.alpha, self.beta
        if isinstance(alpha, bool) or isinstance(beta, bool):
            raise TypeError("alpha and beta must be integers")
        if not isinstance(alpha, int) or not isinstance(beta, int):
            raise TypeError("alpha and beta must be integers")
        if alpha < 2:
            raise ValueError(f"alpha must be at least 2, got {alpha}")
        if alpha >= beta:
            raise ValueError(f"alpha must be smaller than beta, got {alpha} >= {beta}")
        g = gcd(alpha, beta)
        if g != 1:
            raise ValueError(f"alpha and beta must be coprime, gcd={g}")
        if alpha * beta > UINT64_MAX:
            raise ValueError("alpha*beta does not fit in 64 bits")
        # beta^{-1} mod alpha, used by the O(1) membership test and gap coding
        object.__setattr__(self, "_beta_inv", pow(beta, -1, alpha))

    @property
    def product(self) -> int:
        return self.alpha * self.beta

    def __contains__(self, n: int) -> bool:
        return contains(self, n)

    def __str__(self):
        return f"<{self.alpha},{self.beta}>"


def make_semigroup(alpha: int, beta: int) -> SemigroupPair:
    return SemigroupPair(alpha, beta)


def contains(S: SemigroupPair, n: int) -> bool:
    """Return True iff ``n = x*alpha + y*beta`` for some ``x, y >= 0``.

    The least ``y`` with ``n - y*beta`` divisible by alpha is
    ``n * beta^{-1} mod alpha``; ``n`` is representable iff that multiple of
    beta does not exceed ``n``.
    """
    if n < 0:
        return False
    y = (n * S._beta_inv) % S.alpha
    return y * S.beta <= n


def conductor_semigroup(S: SemigroupPair) -> int:
    return (S.alpha - 1) * (S.beta - 1)


def frobenius_number(S: SemigroupPair) -> int:
    return conductor_semigroup(S) - 1


def gaps_semigroup(S: SemigroupPair) -> list[int]:
    return [n for n in range(1, conductor_semigroup(S)) if not contains(S, n)]


def is_gap(S: SemigroupPair, n: int) -> bool:
    return n > 0 and not contains(S, n)


def gap_to_point(S: SemigroupPair, e: int) -> LatticePoint:
    """Return the strict lattice coordinates ``(a, b)`` of the gap ``e``."""
    if e < 0 or contains(S, e):
        raise ValueError(f"{e} is not a gap of {S}")
    alpha, beta = S.alpha, S.beta
    # e = -b*beta (mod alpha)
    b = (-e * S._beta_inv) % alpha
    a, rem = divmod(alpha * beta - e - b * beta, alpha)
    assert rem == 0 and 1 <= b <= alpha - 1 and 1 <= a <= beta - 1, (e, a, b)
    return LatticePoint(a, b)


def value_to_point(S: SemigroupPair, v: int) -> LatticePoint:
    """Extended coding: the ``(a, b)`` with ``0 <= a <= beta``, ``0 <= b <= alpha``.

    Defined for ``0 <= v <= alpha*beta`` whenever ``alpha*beta - v`` lies in
    the semigroup.  The value 0 is ambiguous; it is placed at ``(0, alpha)``,
    the start of every lattice path.
    """
    alpha, beta = S.alpha, S.beta
    if v < 0 or v > alpha * beta:
        raise ValueError(f"{v} has no lattice coding in {S}")
    if v == 0:
        return LatticePoint(0, alpha)
    rest = alpha * beta - v
    b = (rest * S._beta_inv) % alpha
    a, rem = divmod(rest - b * beta, alpha)
    if a < 0 or rem:
        raise ValueError(f"{v} has no lattice coding in {S}")
    return LatticePoint(a, b)


def point_to_value(S: SemigroupPair, p: LatticePoint | tuple[int, int]) -> int:
    a, b = p
    if not (0 <= a <= S.beta and 0 <= b <= S.alpha):
        raise ValueError(f"point {(a, b)} outside [0,{S.beta}]x[0,{S.alpha}]")
    return S.alpha * S.beta - a * S.alpha - b * S.beta


def is_strict_gap_point(S: SemigroupPair, p: LatticePoint) -> bool:
    return 1 <= p.a <= S.beta - 1 and 1 <= p.b <= S.alpha - 1 and point_to_value(S, p) > 0


def _coords(S, e):
    if isinstance(e, LatticePoint):
        return e
    if isinstance(e, tuple):
        return LatticePoint(*e)
    return gap_to_point(S, e)


def precede(S: SemigroupPair, e1, e2) -> Order:
    """Compare two gaps (or lattice points) under the staircase order.

    ``e1 <= e2`` iff ``a1 <= a2`` and ``b1 >= b2``; strictly when both
    inequalities are strict.
    """
    p, q = _coords(S, e1), _coords(S, e2)
    if p == q:
        return Order.EQUAL
    if p.a <= q.a and p.b >= q.b:
        return Order.STRICTLY_LESS if p.a < q.a and p.b > q.b else Order.WEAKLY_LESS
    if p.a >= q.a and p.b <= q.b:
        return Order.STRICTLY_GREATER if p.a > q.a and p.b < q.b else Order.WEAKLY_GREATER
    return Order.INCOMPARABLE


def staircase_key(p: LatticePoint) -> tuple[int, int]:
    """Sort key realizing the staircase order on a chain of points."""
    return (p.a, -p.b)
