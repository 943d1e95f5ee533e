"""Tables, conjecture probes, periodicity search and the verification grid.

Everything here is built on :mod:`gibgcd.gcd_engine`; the CLI in
:mod:`gibgcd.cli` is a thin formatter around these functions.
"""
from __future__ import annotations

import csv
import io
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

from . import gcd_engine as ge
from .pisano import fib_pisano, pisano_period
from .sequences import (
    FIBONACCI,
    LUCAS,
    GibonacciSpec,
    PreconditionError,
    beta_term,
    characteristic,
    d_function,
    gib_term,
    gib_terms,
    identity_check,
    window_sum,
    window_sum_squares_closed,
    WindowSpec,
)

CSV_HEADER = ("k", "case", "fib", "lucas", "gib")


# ---------------------------------------------------------------------------
# Closed-form table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    k: int
    fib_value: int
    lucas_value: int
    gib_value: Optional[int] = None
    case_label: str = ""


def case_label(k: int, spec: Optional[GibonacciSpec] = None) -> str:
    if k % 2 == 0:
        if spec is None:
            return "k even"
        _, prim = ge.reduce_to_primitive(spec)
        return "k even, 5|mu" if characteristic(prim) % 5 == 0 else "k even, 5!|mu"
    return "k = 3 mod 6" if k % 6 == 3 else "k = 1,5 mod 6"


def table_row(k: int, spec: Optional[GibonacciSpec] = None,
              windows: int = ge.DEFAULT_ORACLE_WINDOWS) -> Tuple[TableRow, bool]:
    """Build one row and report whether every entry matched the oracle."""
    f = ge.gcd_squares_classified(FIBONACCI, k, cross_check=True, windows=windows)
    l = ge.gcd_squares_classified(LUCAS, k, cross_check=True, windows=windows)
    ok = bool(f.oracle_agrees and l.oracle_agrees)
    gib_value = None
    if spec is not None:
        g = ge.gcd_squares_classified(spec, k, cross_check=True, windows=windows)
        ok = ok and bool(g.oracle_agrees)
        gib_value = g.value
    return TableRow(k, f.value, l.value, gib_value, case_label(k, spec)), ok


def build_table(k_min: int, k_max: int, spec: Optional[GibonacciSpec] = None,
                windows: int = ge.DEFAULT_ORACLE_WINDOWS) -> Tuple[List[TableRow], List[int]]:
    """Rows for ``k_min..k_max`` plus the list of k values that failed the cross-check."""
    if not 1 <= k_min <= k_max:
        raise PreconditionError(f"need 1 <= k_min <= k_max, got {k_min}, {k_max}")
    rows, bad = [], []
    for k in range(k_min, k_max + 1):
        row, ok = table_row(k, spec, windows)
        rows.append(row)
        if not ok:
            bad.append(k)
    return rows, bad


def rows_to_csv(rows: Iterable[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow([r.k, r.case_label, r.fib_value, r.lucas_value,
                    "" if r.gib_value is None else r.gib_value])
    return buf.getvalue()


def rows_from_csv(text: str) -> List[TableRow]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    return [TableRow(int(d["k"]), int(d["fib"]), int(d["lucas"]),
                     int(d["gib"]) if d["gib"] else None, d["case"])
            for d in reader]


def rows_to_json(rows: Iterable[TableRow], spec: Optional[GibonacciSpec] = None) -> str:
    # integers travel as decimal strings so no consumer ever rounds them
    out = []
    for r in rows:
        out.append({
            "k": str(r.k),
            "case_tag": r.case_label,
            "fib": str(r.fib_value),
            "lucas": str(r.lucas_value),
            "gib": None if r.gib_value is None else str(r.gib_value),
            "provenance": {
                "method": "closed-form classification, oracle cross-checked",
                "spec": None if spec is None else [str(spec.g0), str(spec.g1)],
            },
        })
    return json.dumps(out, indent=2)


def rows_from_json(text: str) -> List[TableRow]:
    return [TableRow(int(d["k"]), int(d["fib"]), int(d["lucas"]),
                     None if d["gib"] is None else int(d["gib"]), d["case_tag"])
            for d in json.loads(text)]


# ---------------------------------------------------------------------------
# Cube conjectures
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ConjectureReport:
    setting: str
    k: int
    oracle_value: int
    conjectured_value: Fraction
    factor_used: Fraction
    agrees: bool
    oracle_stable: bool


_CUBE_SETTINGS = {
    # (spec, subtrahend for G_{k+1}^3, subtrahend for G_{k+2}^3)
    "fibonacci": (FIBONACCI, 1, 1),
    "lucas": (LUCAS, 1, 9),
}


def conjectured_cube_gcd(setting: str, k: int) -> Tuple[Fraction, Fraction]:
    """Return ``(conjectured value, factor)`` for the cube conjecture at even k.

    The value is a Fraction because the halved branch need not be integral.
    """
    spec, c1, c2 = _CUBE_SETTINGS[setting]
    base = gcd(gib_term(spec, k + 1) ** 3 - c1, gib_term(spec, k + 2) ** 3 - c2)
    factor = Fraction(1) if k % 6 == 0 else Fraction(1, 2)
    return base * factor, factor


def conjecture_cubes(setting: str, k_max: int, windows: int = 40) -> List[ConjectureReport]:
    if setting not in _CUBE_SETTINGS:
        raise PreconditionError(f"setting must be one of {sorted(_CUBE_SETTINGS)}")
    if k_max < 2 or k_max % 2:
        raise PreconditionError(f"k_max must be even and >= 2, got {k_max}")
    spec = _CUBE_SETTINGS[setting][0]
    reports = []
    for k in range(2, k_max + 1, 2):
        oracle = ge.gcd_power_oracle(spec, k, 3, windows)
        value, factor = conjectured_cube_gcd(setting, k)
        reports.append(ConjectureReport(setting, k, oracle.value, value, factor,
                                        oracle.value == value, oracle.stable))
    return reports


# ---------------------------------------------------------------------------
# Periodicity on odd k
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PeriodicityReport:
    spec: GibonacciSpec
    power: int
    k_max: int
    candidate_period: Optional[int]
    verified_through: int
    residue_classes: Dict[int, int] = field(default_factory=dict)
    heuristic: bool = True


def odd_k_values(spec: GibonacciSpec, power: int, k_max: int) -> Dict[int, int]:
    if power == 1:
        fn = ge.gcd_firstpower_closed
    elif power == 2:
        fn = ge.gcd_squares_closed
    else:
        raise PreconditionError(f"power must be 1 or 2, got {power}")
    return {k: fn(spec, k) for k in range(1, k_max + 1, 2)}


def find_periodicity(spec: GibonacciSpec, power: int, k_max: int) -> PeriodicityReport:
    """Smallest even P with value(k + P) == value(k) for every odd k <= k_max - P.

    This is a finite search: a reported period is evidence, not a proof.
    """
    if not spec.is_primitive:
        raise PreconditionError(f"spec {spec} is not primitive; divide by gcd(g0, g1) first")
    if k_max < 31 or k_max % 2 == 0:
        raise PreconditionError(f"k_max must be odd and >= 31, got {k_max}")
    values = odd_k_values(spec, power, k_max)
    for p in range(2, k_max // 2 + 1, 2):
        if all(values[k + p] == v for k, v in values.items() if k + p <= k_max):
            classes = {k % p: values[k] for k in range(1, p + 1, 2) if k in values}
            return PeriodicityReport(spec, power, k_max, p, k_max, dict(sorted(classes.items())))
    return PeriodicityReport(spec, power, k_max, None, k_max)


# ---------------------------------------------------------------------------
# Verification grid
# ---------------------------------------------------------------------------

@dataclass
class FamilyResult:
    name: str
    checked: int = 0
    failed: int = 0
    first_counterexample: Optional[str] = None

    def record(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok:
            self.failed += 1
            if self.first_counterexample is None:
                self.first_counterexample = str(detail)

    def merge(self, other: "FamilyResult") -> None:
        self.checked += other.checked
        self.failed += other.failed
        if self.first_counterexample is None:
            self.first_counterexample = other.first_counterexample

    @property
    def passed(self) -> bool:
        return self.failed == 0


FAMILIES = (
    "recurrence", "fast_vs_naive", "d_invariance", "window_identity",
    "consecutive_gcd", "beta_recurrence", "oracle_vs_closed_squares",
    "truncation_stability", "scaling", "odd_k_divisor", "fib_lucas_closed",
    "first_power", "maximality", "identities", "pisano",
)


def primitive_grid(max_seed: int) -> List[GibonacciSpec]:
    return [GibonacciSpec(a, b)
            for a in range(-max_seed, max_seed + 1)
            for b in range(-max_seed, max_seed + 1)
            if gcd(a, b) == 1]


def _check_spec(spec: GibonacciSpec, max_k: int, windows: int,
                max_modulus: int) -> Dict[str, FamilyResult]:
    res = {name: FamilyResult(name) for name in FAMILIES}
    mu = characteristic(spec)

    lo, hi = -20, max(max_k, 10) + 5
    naive = gib_terms(spec, lo, hi + 3)
    for i, n in enumerate(range(lo, hi + 1)):
        res["recurrence"].record(naive[i + 2] == naive[i + 1] + naive[i], (spec, n))
        res["fast_vs_naive"].record(gib_term(spec, n) == naive[i], (spec, n))
        if n >= 1:
            a, b = naive[i], naive[i + 1]
            res["consecutive_gcd"].record(gcd(a, b) == 1, (spec, n))
        if n >= 0:
            d = d_function(spec, n)
            res["d_invariance"].record(d == (-1) ** n * mu, (spec, n, d))
            res["beta_recurrence"].record(
                beta_term(spec, n + 2) == beta_term(spec, n + 1) + beta_term(spec, n), (spec, n))

    kw = min(max_k, 30)
    for k in range(1, kw + 1):
        for n in range(0, kw + 1, 3):
            direct = window_sum(spec, WindowSpec(k, 2, n))
            res["window_identity"].record(
                direct == window_sum_squares_closed(spec, k, n), (spec, k, n))

    sample_ns = (3, 5, windows) if windows > 5 else (3, 5)
    two_mu = abs(2 * mu)
    for k in range(1, max_k + 1):
        sums2 = ge.window_sums(spec, k, 2, max(sample_ns))
        oracle = {n: ge.gcd_all(*sums2[:n]) for n in sample_ns}
        closed = ge.gcd_squares_closed(spec, k)
        parity = ge.gcd_squares_parity(spec, k)
        cls = ge.gcd_squares_classified(spec, k).value
        ok = closed == parity == cls and all(v == closed for v in oracle.values())
        res["oracle_vs_closed_squares"].record(ok, (spec, k, oracle, closed, parity, cls))
        res["truncation_stability"].record(len(set(oracle.values())) == 1, (spec, k, oracle))
        if k % 2:
            res["odd_k_divisor"].record(two_mu % cls == 0, (spec, k, cls, two_mu))
        for d in range(2, 6):
            scaled = ge.gcd_squares_closed(GibonacciSpec(d * spec.g0, d * spec.g1), k)
            res["scaling"].record(scaled == d * d * closed, (spec, d, k, scaled, closed))
        sums1 = ge.window_sums(spec, k, 1, max(sample_ns))
        o1 = {n: ge.gcd_all(*sums1[:n]) for n in sample_ns}
        c1 = ge.gcd_firstpower_closed(spec, k)
        res["first_power"].record(all(v == c1 for v in o1.values()), (spec, k, o1, c1))
        if k % 2:
            rep = ge.odd_k_maximality(spec, k)
            if rep.hypothesis_holds:
                for ell in (1, 3, 5, 7):
                    v = ge.gcd_squares_closed(spec, k * ell)
                    res["maximality"].record(v == rep.predicted_value, (spec, k, ell, v))

    for m in range(2, max_modulus + 1):
        r = pisano_period(spec, m).period
        res["pisano"].record(fib_pisano(m) % r == 0, (spec, m, r))
    return res


def _spec_task(args) -> Dict[str, FamilyResult]:
    return _check_spec(*args)


def _random_identity_params(rng: random.Random, name: str) -> dict:
    def spec() -> GibonacciSpec:
        while True:
            s = GibonacciSpec(rng.randint(-30, 30), rng.randint(-30, 30))
            if not s.is_degenerate:
                return s
    if name == "cassini":
        return {"spec": spec(), "n": rng.randint(1, 150)}
    if name == "catalan":
        r = rng.randint(-60, 60)
        return {"n": r + rng.randint(0, 120), "r": r}
    if name == "vajda8":
        return {"spec": spec(), "m": rng.randint(-80, 80), "n": rng.randint(-80, 80)}
    if name == "vajda20a":
        return {"a": rng.randint(0, 80), "b": rng.randint(0, 80), "c": rng.randint(0, 80)}
    if name == "sum_squares":
        return {"spec": spec(), "k": rng.randint(1, 80)}
    if name == "fib_diff_squares":
        return {"k": 2 * rng.randint(0, 40), "ell": rng.randint(-80, 80)}
    if name == "gib_diff_squares":
        return {"spec": spec(), "k": 2 * rng.randint(0, 40), "ell": rng.randint(0, 80)}
    if name == "zero_vs_4mu":
        return {"spec": spec(), "k": rng.randint(1, 120)}
    raise KeyError(name)


IDENTITY_NAMES = ("cassini", "catalan", "vajda8", "vajda20a", "sum_squares",
                  "fib_diff_squares", "gib_diff_squares", "zero_vs_4mu")


def check_identities(samples: int = 1000, seed: int = 0) -> Dict[str, FamilyResult]:
    rng = random.Random(seed)
    out = {}
    for name in IDENTITY_NAMES:
        fam = FamilyResult(name)
        for _ in range(samples):
            params = _random_identity_params(rng, name)
            fam.record(identity_check(name, **params).holds, (name, params))
        out[name] = fam
    return out


def run_verification(max_seed: int = 10, max_k: int = 60, windows: int = 10,
                     max_modulus: int = 50, identity_samples: int = 1000,
                     jobs: int = 1) -> List[FamilyResult]:
    """Run every invariant family over the grid and return merged results in a fixed order."""
    if max_seed < 1 or max_k < 1 or windows < 3 or max_modulus < 2:
        raise PreconditionError("grid bounds must be positive (windows >= 3, modulus >= 2)")
    specs = primitive_grid(max_seed)
    tasks = [(s, max_k, windows, max_modulus) for s in specs]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            per_spec = list(pool.map(_spec_task, tasks, chunksize=8))
    else:
        per_spec = [_spec_task(t) for t in tasks]

    merged = {name: FamilyResult(name) for name in FAMILIES}
    for res in per_spec:
        for name, fam in res.items():
            merged[name].merge(fam)

    # Fibonacci/Lucas closed forms against the general classifier
    for k in range(1, 2 * max_k + 1):
        f = ge.fibonacci_squares_gcd(k).value
        l = ge.lucas_squares_gcd(k).value
        ok = f == ge.fib_closed(k) and l == ge.lucas_closed(k)
        merged["fib_lucas_closed"].record(ok, (k, f, l))

    # worked example anchor: (2, 7) at k = 15 reaches 62 on every odd multiple
    anchor = GibonacciSpec(2, 7)
    rep = ge.odd_k_maximality(anchor, 15)
    for ell in (1, 3, 5, 7):
        v = ge.gcd_squares_closed(anchor, 15 * ell)
        merged["maximality"].record(rep.hypothesis_holds and v == 62, (anchor, 15, ell, v))

    for fam in check_identities(identity_samples).values():
        merged["identities"].merge(fam)
    return [merged[name] for name in FAMILIES]


def report_to_dict(report) -> dict:
    d = asdict(report)
    for key, value in list(d.items()):
        if isinstance(value, Fraction):
            d[key] = str(value)
        elif isinstance(value, int) and not isinstance(value, bool):
            d[key] = str(value)
        elif isinstance(value, dict) and key == "spec":
            d[key] = [str(value["g0"]), str(value["g1"])]
        elif isinstance(value, dict):
            d[key] = {str(a): str(b) for a, b in value.items()}
    return d

