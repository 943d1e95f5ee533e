"""GCD of all sums of k consecutive p-th powers of a Gibonacci sequence.

Two independent routes are provided: a brute-force oracle that sums windows
term by term and folds them with ``gcd``, and the closed forms (three-term
formula, parity split, even-k classification with the d^2 scaling).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from math import gcd
from typing import Optional, Tuple

from .sequences import (
    FIBONACCI,
    LUCAS,
    GibonacciSpec,
    PreconditionError,
    characteristic,
    fib,
    gib_term,
    gib_terms,
)

DEFAULT_ORACLE_WINDOWS = 10


class DegenerateSpecError(ValueError):
    """The all-zero seed (0, 0) has no meaningful window GCD."""


class CaseTag(str, enum.Enum):
    EVEN_FIVE_NOT_DIVIDES_MU = "EvenFiveNotDividesMu"
    EVEN_FIVE_DIVIDES_MU = "EvenFiveDividesMu"
    ODD_GENERAL = "OddGeneral"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GcdClassification:
    value: int
    case_tag: CaseTag
    k: int
    spec: GibonacciSpec
    scale_factor: int = 1
    oracle_agrees: Optional[bool] = None


@dataclass(frozen=True)
class OracleReport:
    """Truncated window GCD with a heuristic stability flag.

    ``stable`` means the running gcd did not change over the last
    ``ceil(windows / 2)`` windows.  It is exact only for powers 1 and 2.
    """

    value: int
    windows: int
    stable: bool


@dataclass(frozen=True)
class OddKReport:
    k: int
    ell_k: int
    two_mu: int
    hypothesis_holds: bool
    predicted_value: Optional[int] = None


def _check_spec(spec: GibonacciSpec) -> None:
    if spec.is_degenerate:
        raise DegenerateSpecError("seed (0, 0) generates the zero sequence")


def _check_k(k: int) -> None:
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")


def gcd_all(*values: int) -> int:
    """Non-negative gcd of any number of integers; 0 for no arguments."""
    return reduce(gcd, values, 0)


# ---------------------------------------------------------------------------
# Oracle
# ---------------------------------------------------------------------------

def window_sums(spec: GibonacciSpec, k: int, power: int, count: int) -> list:
    """``S_0 .. S_{count-1}`` with ``S_n = sum(G(n+i)**power for i in 1..k)``."""
    powers = [t ** power for t in gib_terms(spec, 1, count + k)]
    s = sum(powers[:k])
    out = [s]
    for n in range(1, count):
        s += powers[n + k - 1] - powers[n - 1]
        out.append(s)
    return out


def gcd_power_oracle(spec: GibonacciSpec, k: int, power: int,
                     windows: int = DEFAULT_ORACLE_WINDOWS) -> OracleReport:
    _check_spec(spec)
    _check_k(k)
    if power < 1:
        raise PreconditionError(f"power must be >= 1, got {power}")
    if windows < 3:
        raise PreconditionError(f"need at least 3 windows, got {windows}")
    sums = window_sums(spec, k, power, windows)
    settled = windows - (windows + 1) // 2
    head = gcd_all(*sums[:settled])
    value = gcd_all(head, *sums[settled:])
    return OracleReport(value=value, windows=windows, stable=head == value)


def gcd_power_bruteforce(spec: GibonacciSpec, k: int, power: int = 2,
                         windows: int = DEFAULT_ORACLE_WINDOWS) -> int:
    return gcd_power_oracle(spec, k, power, windows).value


# ---------------------------------------------------------------------------
# Closed forms
# ---------------------------------------------------------------------------

def _square_diffs(spec: GibonacciSpec, k: int) -> Tuple[int, int]:
    g1, g2 = spec.g1, spec.g0 + spec.g1
    return gib_term(spec, k + 1) ** 2 - g1 * g1, gib_term(spec, k + 2) ** 2 - g2 * g2


def gcd_squares_closed(spec: GibonacciSpec, k: int) -> int:
    """gcd(G_k G_{k+1} - G_0 G_1, G_{k+1}^2 - G_1^2, G_{k+2}^2 - G_2^2)."""
    _check_spec(spec)
    _check_k(k)
    m1, m2 = _square_diffs(spec, k)
    s0 = gib_term(spec, k) * gib_term(spec, k + 1) - spec.g0 * spec.g1
    return gcd_all(s0, m1, m2)


def g_k(spec: GibonacciSpec, k: int) -> int:
    return gcd_all(*_square_diffs(spec, k))


def gcd_squares_parity(spec: GibonacciSpec, k: int) -> int:
    _check_spec(spec)
    _check_k(k)
    if k % 2 == 0:
        return g_k(spec, k)
    return gcd(2 * characteristic(spec), g_k(spec, k))


def reduce_to_primitive(spec: GibonacciSpec) -> Tuple[int, GibonacciSpec]:
    _check_spec(spec)
    d = gcd(spec.g0, spec.g1)
    return d, GibonacciSpec(spec.g0 // d, spec.g1 // d)


def gcd_squares_classified(spec: GibonacciSpec, k: int,
                           cross_check: bool = False,
                           windows: int = DEFAULT_ORACLE_WINDOWS) -> GcdClassification:
    """Classify the window-of-squares GCD by case.

    Non-primitive seeds are divided by ``d = gcd(G0, G1)`` and the result is
    multiplied back by ``d**2``.  Even ``k`` gives ``F_k`` or ``5 F_k``
    depending on whether 5 divides mu; odd ``k`` gives ``gcd(2 mu, g_k)``.
    With ``cross_check`` the brute-force oracle is consulted as well.
    """
    _check_k(k)
    d, prim = reduce_to_primitive(spec)
    mu = characteristic(prim)
    if k % 2 == 0:
        if mu % 5 == 0:
            tag, base = CaseTag.EVEN_FIVE_DIVIDES_MU, 5 * fib(k)
        else:
            tag, base = CaseTag.EVEN_FIVE_NOT_DIVIDES_MU, fib(k)
    else:
        tag, base = CaseTag.ODD_GENERAL, gcd(2 * mu, g_k(prim, k))
    scale = d * d
    value = scale * base
    agrees = None
    if cross_check:
        agrees = gcd_power_bruteforce(spec, k, 2, windows) == value
    return GcdClassification(value, tag, k, spec, scale, agrees)


def fib_closed(k: int) -> int:
    _check_k(k)
    if k % 2 == 0:
        return fib(k)
    return 2 if k % 6 == 3 else 1


def lucas_closed(k: int) -> int:
    _check_k(k)
    if k % 2 == 0:
        return 5 * fib(k)
    return 2 if k % 6 == 3 else 1


def gcd_firstpower_closed(spec: GibonacciSpec, k: int) -> int:
    """gcd(G_{k+1} - G_1, G_{k+2} - G_2): the window GCD for plain sums."""
    _check_spec(spec)
    _check_k(k)
    g2 = spec.g0 + spec.g1
    return gcd(gib_term(spec, k + 1) - spec.g1, gib_term(spec, k + 2) - g2)


def odd_k_maximality(spec: GibonacciSpec, k: int) -> OddKReport:
    """Test whether ``2 mu`` divides ``ell_k``; if so every odd multiple of k hits ``|2 mu|``."""
    _check_spec(spec)
    _check_k(k)
    if k % 2 == 0:
        raise PreconditionError(f"k must be odd, got {k}")
    if not spec.is_primitive:
        raise PreconditionError(f"spec {spec} is not primitive; reduce it first")
    ell = gcd_firstpower_closed(spec, k)
    two_mu = 2 * characteristic(spec)
    holds = ell % two_mu == 0
    return OddKReport(k, ell, two_mu, holds, abs(two_mu) if holds else None)


def fibonacci_squares_gcd(k: int) -> GcdClassification:
    return gcd_squares_classified(FIBONACCI, k)


def lucas_squares_gcd(k: int) -> GcdClassification:
    return gcd_squares_classified(LUCAS, k)
