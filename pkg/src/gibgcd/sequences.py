"""Gibonacci, Fibonacci and Lucas terms, window sums and identity evaluators.

Every value is a plain Python ``int`` (exact, unbounded).  Negative indices are
defined by running the recurrence backwards, ``G(n-2) = G(n) - G(n-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Callable, Dict, Iterator, List, NamedTuple, Tuple


class PreconditionError(ValueError):
    """Raised when arguments fall outside an operation's domain."""


@dataclass(frozen=True)
class GibonacciSpec:
    """Seed pair ``(G0, G1)`` of a sequence obeying ``G(n) = G(n-1) + G(n-2)``."""

    g0: int
    g1: int

    @property
    def characteristic(self) -> int:
        return characteristic(self)

    @property
    def is_primitive(self) -> bool:
        return gcd(self.g0, self.g1) == 1

    @property
    def is_degenerate(self) -> bool:
        return self.g0 == 0 and self.g1 == 0

    def __str__(self) -> str:
        return f"({self.g0},{self.g1})"


FIBONACCI = GibonacciSpec(0, 1)
LUCAS = GibonacciSpec(2, 1)


@dataclass(frozen=True)
class WindowSpec:
    """A window of ``k`` consecutive terms ``G(start+1) .. G(start+k)`` raised to ``power``."""

    k: int
    power: int = 2
    start: int = 0

    def __post_init__(self) -> None:
        if self.k < 1:
            raise PreconditionError(f"window length must be >= 1, got {self.k}")
        if self.power < 1:
            raise PreconditionError(f"power must be >= 1, got {self.power}")
        if self.start < 0:
            raise PreconditionError(f"window start must be >= 0, got {self.start}")


# ---------------------------------------------------------------------------
# Fast doubling
# ---------------------------------------------------------------------------

def _fib_pair_nonneg(n: int) -> Tuple[int, int]:
    a, b = 0, 1  # F(0), F(1)
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib_pair(n: int) -> Tuple[int, int]:
    """Return ``(F(n), F(n+1))`` for any integer ``n`` in O(log |n|) multiplications."""
    if n >= 0:
        return _fib_pair_nonneg(n)
    # F(-m) = (-1)^(m+1) F(m)
    m = -n
    fm, fm1 = _fib_pair_nonneg(m)
    f_n = fm if m % 2 else -fm
    fm_minus_1 = fm1 - fm
    f_n1 = fm_minus_1 if (m - 1) % 2 else -fm_minus_1
    return f_n, f_n1


def fib(n: int) -> int:
    return fib_pair(n)[0]


def lucas(n: int) -> int:
    f, f1 = fib_pair(n)
    return 2 * f1 - f


def gib_term(spec: GibonacciSpec, n: int) -> int:
    """``G(n) = G0*F(n-1) + G1*F(n)``, valid for every integer ``n``."""
    f_prev, f_n = fib_pair(n - 1)
    return spec.g0 * f_prev + spec.g1 * f_n


def gib_terms(spec: GibonacciSpec, start: int, stop: int) -> List[int]:
    """Terms ``G(start) .. G(stop-1)`` by plain iteration of the recurrence.

    This never touches the fast-doubling code and serves as the oracle path.
    """
    if stop <= start:
        return []
    a, b = spec.g0, spec.g1  # G(i), G(i+1) with i = 0
    i = 0
    while i > start:
        a, b = b - a, a
        i -= 1
    while i < start:
        a, b = b, a + b
        i += 1
    out = []
    for _ in range(stop - start):
        out.append(a)
        a, b = b, a + b
    return out


def iter_gib(spec: GibonacciSpec) -> Iterator[int]:
    a, b = spec.g0, spec.g1
    while True:
        yield a
        a, b = b, a + b


def characteristic(spec: GibonacciSpec) -> int:
    """``mu = G1^2 - G0*G1 - G0^2``; may be negative."""
    g0, g1 = spec.g0, spec.g1
    return g1 * g1 - g0 * g1 - g0 * g0


# ---------------------------------------------------------------------------
# Window sums
# ---------------------------------------------------------------------------

def window_sum(spec: GibonacciSpec, w: WindowSpec) -> int:
    """Direct sum of ``G(start+i)**power`` for ``i = 1..k``."""
    terms = gib_terms(spec, w.start + 1, w.start + w.k + 1)
    return sum(t ** w.power for t in terms)


def window_sum_squares_closed(spec: GibonacciSpec, k: int, n: int = 0) -> int:
    if k < 1 or n < 0:
        raise PreconditionError(f"need k >= 1 and n >= 0, got k={k}, n={n}")
    return (gib_term(spec, n + k) * gib_term(spec, n + k + 1)
            - gib_term(spec, n) * gib_term(spec, n + 1))


def d_function(spec: GibonacciSpec, n: int) -> int:
    """``G(n+1)^2 - G(n)G(n+1) - G(n)^2``; equals ``(-1)^n * mu``."""
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    a, b = gib_term(spec, n), gib_term(spec, n + 1)
    return b * b - a * b - a * a


def beta_term(spec: GibonacciSpec, n: int) -> int:
    if n < 0:
        raise PreconditionError(f"n must be >= 0, got {n}")
    g0, g1 = spec.g0, spec.g1
    f_n, f_n1 = fib_pair(n)
    return g0 * g0 * f_n + 2 * g0 * g1 * f_n1 + g1 * g1 * (f_n + f_n1)


def gamma_term(spec: GibonacciSpec, k: int, ell: int) -> int:
    if k < 0 or ell < 0:
        raise PreconditionError(f"need k, ell >= 0, got k={k}, ell={ell}")
    g0, g1 = spec.g0, spec.g1
    m = k + 2 * ell
    return g0 * g0 * fib(m - 2) + 2 * g0 * g1 * fib(m - 1) + g1 * g1 * fib(m)


# ---------------------------------------------------------------------------
# Identity evaluators
# ---------------------------------------------------------------------------

class IdentityResult(NamedTuple):
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def _cassini(spec: GibonacciSpec, n: int) -> IdentityResult:
    _require(n >= 1, "cassini needs n >= 1")
    lhs = gib_term(spec, n + 1) * gib_term(spec, n - 1) - gib_term(spec, n) ** 2
    return IdentityResult(lhs, _sign(n) * characteristic(spec))


def _catalan(n: int, r: int) -> IdentityResult:
    _require(n >= r, "catalan needs n >= r")
    lhs = fib(n) ** 2 - fib(n - r) * fib(n + r)
    return IdentityResult(lhs, _sign(n - r) * fib(r) ** 2)


def _vajda8(spec: GibonacciSpec, m: int, n: int) -> IdentityResult:
    rhs = gib_term(spec, m + 1) * fib(n) + gib_term(spec, m) * fib(n - 1)
    return IdentityResult(gib_term(spec, m + n), rhs)


def _vajda20a(a: int, b: int, c: int) -> IdentityResult:
    _require(a >= 0 and b >= 0 and c >= 0, "vajda20a needs a, b, c >= 0")
    lhs = fib(a + b) * fib(a + c) - _sign(a) * fib(b) * fib(c)
    return IdentityResult(lhs, fib(a) * fib(a + b + c))


def _sum_squares(spec: GibonacciSpec, k: int) -> IdentityResult:
    _require(k >= 1, "sum_squares needs k >= 1")
    lhs = sum(t * t for t in gib_terms(spec, 1, k + 1))
    rhs = gib_term(spec, k) * gib_term(spec, k + 1) - spec.g0 * spec.g1
    return IdentityResult(lhs, rhs)


def _fib_diff_squares(k: int, ell: int) -> IdentityResult:
    _require(k >= 0 and k % 2 == 0, "fib_diff_squares needs k even and >= 0")
    return IdentityResult(fib(k + ell) ** 2 - fib(ell) ** 2, fib(k) * fib(k + 2 * ell))


def _gib_diff_squares(spec: GibonacciSpec, k: int, ell: int) -> IdentityResult:
    _require(k >= 0 and k % 2 == 0, "gib_diff_squares needs k even and >= 0")
    _require(ell >= 0, "gib_diff_squares needs ell >= 0")
    lhs = gib_term(spec, k + ell) ** 2 - gib_term(spec, ell) ** 2
    return IdentityResult(lhs, fib(k) * gamma_term(spec, k, ell))


def _zero_vs_4mu(spec: GibonacciSpec, k: int) -> IdentityResult:
    _require(k >= 1, "zero_vs_4mu needs k >= 1")
    m = [gib_term(spec, k + i) ** 2 - gib_term(spec, i) ** 2 for i in range(3)]
    lhs = m[0] - 3 * m[1] + m[2]
    return IdentityResult(lhs, 4 * characteristic(spec) if k % 2 else 0)


IDENTITIES: Dict[str, Callable[..., IdentityResult]] = {
    "cassini": _cassini,
    "catalan": _catalan,
    "vajda8": _vajda8,
    "vajda20a": _vajda20a,
    "sum_squares": _sum_squares,
    "fib_diff_squares": _fib_diff_squares,
    "gib_diff_squares": _gib_diff_squares,
    "zero_vs_4mu": _zero_vs_4mu,
}


def identity_check(name: str, **params) -> IdentityResult:
    """Evaluate both sides of a named identity.

    Parameters by name: ``cassini(spec, n)``, ``catalan(n, r)``,
    ``vajda8(spec, m, n)``, ``vajda20a(a, b, c)``, ``sum_squares(spec, k)``,
    ``fib_diff_squares(k, ell)``, ``gib_diff_squares(spec, k, ell)``,
    ``zero_vs_4mu(spec, k)``.  Out-of-domain arguments raise
    :class:`PreconditionError` instead of returning a false result.
    """
    try:
        fn = IDENTITIES[name]
    except KeyError:
        raise PreconditionError(f"unknown identity {name!r}") from None
    return fn(**params)
