import pytest
from hypothesis import given, strategies as st

from gibgcd.pisano import ModulusError, fib_pisano, lucas_pisano, pisano_period
from gibgcd.sequences import GibonacciSpec, gib_term, lucas


def period_by_listing(g0, g1, m):
    """Oracle: write out residues and look for the first repeat of the seed pair."""
    res = [g0 % m, g1 % m]
    for _ in range(12 * m + 12):
        res.append((res[-1] + res[-2]) % m)
    for r in range(1, len(res) - 1):
        if res[r] == res[0] and res[r + 1] == res[1]:
            return r
    raise AssertionError("no period")


@pytest.mark.parametrize("seed, m, expected", [((2, 1), 5, 4), ((0, 1), 2, 3), ((0, 1), 10, 60)])
def test_examples(seed, m, expected):
    res = pisano_period(GibonacciSpec(*seed), m)
    assert res.period == expected
    assert res.modulus == m
    assert res.residue_seed == (seed[0] % m, seed[1] % m)


def test_wrappers():
    assert fib_pisano(2) == 3
    assert fib_pisano(5) == 20
    assert lucas_pisano(5) == 4


def test_bad_modulus():
    with pytest.raises(ModulusError):
        pisano_period(GibonacciSpec(0, 1), 1)


@given(st.integers(-50, 50), st.integers(-50, 50), st.integers(2, 60))
def test_matches_listing_and_divides_fib_period(g0, g1, m):
    r = pisano_period(GibonacciSpec(g0, g1), m).period
    assert r == period_by_listing(g0, g1, m)
    assert fib_pisano(m) % r == 0


@given(st.integers(-20, 20), st.integers(-20, 20), st.integers(2, 30))
def test_periodicity_of_terms(g0, g1, m):
    spec = GibonacciSpec(g0, g1)
    r = pisano_period(spec, m).period
    for n in range(2 * r + 1):
        assert (gib_term(spec, n + r) - gib_term(spec, n)) % m == 0


def test_lucas_squares_mod_5():
    assert [lucas(n) % 5 for n in range(4)] == [2, 1, 3, 4]
    for n in range(40):
        assert (lucas(n) ** 2 % 5 == 4) == (n % 2 == 0)
        assert lucas(n) ** 2 % 5 in (1, 4)


def test_known_fibonacci_periods():
    # OEIS A001175
    known = [1, 3, 8, 6, 20, 24, 16, 12, 24, 60, 10, 24, 28, 48, 40, 24]
    assert [fib_pisano(m) for m in range(2, 17)] == known[1:]
