import pytest

from conftest import SMALL_PAIRS
from oracles import dual_generators, lean_subsets
from semimodules import (
    SemigroupPair,
    conductor_bruteforce,
    conductor_dual,
    conductor_syzygy,
    contains,
    contains_semimodule,
    dual_bruteforce,
    dual_from_syzygy,
    make_semimodule,
)


def test_fig1_dual(fig1):
    brute = dual_bruteforce(fig1)
    assert brute.generators == (20, 17, 19, 21)
    assert brute.min_value == 17
    via = dual_from_syzygy(fig1)
    assert via.generators == (20, 17, 19, 21)
    assert conductor_dual(fig1) == 35 - 17 - 12 + 1 == 7


def test_principal_dual(s57):
    gamma = make_semimodule(s57, [0])
    assert dual_bruteforce(gamma).generators == (0,)
    assert dual_from_syzygy(gamma).generators == (0,)
    assert conductor_dual(gamma) == 24


def test_small_dual(s34):
    D = make_semimodule(s34, [0, 5])
    assert set(dual_bruteforce(D)) == {3, 4}
    assert set(dual_from_syzygy(D)) == {3, 4}
    assert dual_from_syzygy(D).min_value == 3
    assert conductor_dual(D) == 3


@pytest.mark.parametrize("alpha,beta", SMALL_PAIRS)
def test_dual_against_oracle(alpha, beta):
    S = SemigroupPair(alpha, beta)
    for lean in lean_subsets(alpha, beta):
        D = make_semimodule(S, lean)
        brute = dual_bruteforce(D)
        expected = dual_generators(alpha, beta, sorted(lean))
        assert sorted(brute.generators) == expected
        assert set(dual_from_syzygy(D)) == set(expected)
        assert brute.generators == dual_from_syzygy(D).generators
        assert conductor_dual(D) == conductor_dual(D, brute) == conductor_syzygy(D).conductor == conductor_bruteforce(D)
        for x in brute:
            assert all(contains(S, x + d) for d in range(D.bound) if contains_semimodule(D, d))
            assert not any(y != x and contains(S, x - y) for y in brute)
