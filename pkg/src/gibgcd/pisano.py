"""Periods of Gibonacci sequences reduced modulo m."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

from .sequences import FIBONACCI, LUCAS, GibonacciSpec


class ModulusError(ValueError):
    pass


@dataclass(frozen=True)
class PisanoResult:
    modulus: int
    period: int
    residue_seed: Tuple[int, int]


def pisano_period(spec: GibonacciSpec, m: int) -> PisanoResult:
    """Smallest ``r >= 1`` with ``(G_r, G_{r+1}) == (G_0, G_1) mod m``.

    The pair map ``(a, b) -> (b, a + b)`` is invertible mod m, so the orbit is
    purely periodic and the first return found by the scan is minimal.
    """
    if m < 2:
        raise ModulusError(f"modulus must be >= 2, got {m}")
    seed = (spec.g0 % m, spec.g1 % m)
    a, b = seed
    # pi_F(m) <= 6m and every generalized period divides it
    limit = 6 * m + 6
    for r in range(1, limit + 1):
        a, b = b, (a + b) % m
        if (a, b) == seed:
            return PisanoResult(m, r, seed)
    raise RuntimeError(f"no period found for {spec} mod {m} within {limit} steps")


def fib_pisano(m: int) -> int:
    return pisano_period(FIBONACCI, m).period


def lucas_pisano(m: int) -> int:
    return pisano_period(LUCAS, m).period
