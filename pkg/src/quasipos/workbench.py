"""Word families, the runtime recurrence, and the strategy benchmark."""
from __future__ import annotations

import csv
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Iterable, List, Optional, Sequence, Tuple

from .oracle import BudgetExceeded, brute_force_search
from .rbs import rbs_search
from .recognizer import test_qp
from .words import Word, free_reduce, parse_word

ALGORITHMS = ("naive", "pruned", "rbs", "brute")
FAMILIES = ("uk", "commutator", "truncated")
CSV_COLUMNS = ("family", "k", "n", "strategy", "calls", "wall_micros", "verdict")
BENCH_BUDGET = 10 ** 6


def make_uk(k: int) -> Word:
    """``ab[a,b]^k b^(k-1)`` with ``[a,b] = a^-1 b^-1 a b``; length ``5k + 1``."""
    if k < 1:
        raise ValueError("u_k needs k >= 1")
    return free_reduce(parse_word("ab" + "ABab" * k + "b" * (k - 1)))


def make_nonqp(family: str, k: int, j: int = 0) -> Word:
    """Never-quasi-positive families.

    ``commutator_power``: ``[a,b]^k b^j`` (k >= 1, j >= 0).
    ``truncated_uk``: ``ab[a,b]^k b^(k-2)`` (k >= 2).
    """
    if family == "commutator_power":
        if k < 1 or j < 0:
            raise ValueError("commutator_power needs k >= 1 and j >= 0")
        text = "ABab" * k + "b" * j
    elif family == "truncated_uk":
        if k < 2:
            raise ValueError("truncated_uk needs k >= 2")
        text = "ab" + "ABab" * k + "b" * (k - 2)
    else:
        raise ValueError(f"unknown family {family!r}")
    return free_reduce(parse_word(text))


def family_word(family: str, k: int, j: int = 0) -> Word:
    if family == "uk":
        return make_uk(k)
    if family == "commutator":
        return make_nonqp("commutator_power", k, j)
    if family == "truncated":
        return make_nonqp("truncated_uk", k)
    raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")


@dataclass(frozen=True)
class RuntimeModel:
    C: Fraction = Fraction(1)

    def __post_init__(self):
        c = Fraction(self.C)
        if c <= 0:
            raise ValueError("C must be positive")
        object.__setattr__(self, "C", c)


def predicted_runtime(n: int, m: RuntimeModel = RuntimeModel()) -> Fraction:
    """Closed form of ``f(n+1) = f(n) + 2 f(n-1) + C`` with ``f(0) = 0``, ``f(1) = C``."""
    C = m.C
    return Fraction(2, 3) * C * 2 ** n - Fraction(1, 6) * C * (-1) ** n - C / 2


def iterate_runtime(n: int, m: RuntimeModel = RuntimeModel()) -> List[Fraction]:
    """``f(0..n)`` by direct iteration of the recurrence."""
    f = [Fraction(0), m.C]
    while len(f) <= n:
        f.append(f[-1] + 2 * f[-2] + m.C)
    return f[:n + 1]


@dataclass(frozen=True)
class BenchRecord:
    family: str
    k: int
    n: int
    strategy: str
    calls: int
    wall_micros: int
    verdict: Optional[bool]
    error: Optional[str] = None

    def csv_row(self) -> Tuple:
        verdict = "error" if self.error else str(self.verdict).lower()
        return (self.family, self.k, self.n, self.strategy, self.calls, self.wall_micros, verdict)


def run_strategy(w: Word, strategy: str, budget: int = BENCH_BUDGET) -> Tuple[bool, int]:
    """Verdict and deterministic work count for one strategy.

    The count is recursive calls for naive/pruned, candidate updates for the
    RBS search, and candidate checks for brute force.
    """
    if strategy in ("naive", "pruned"):
        v = test_qp(w, strategy)
        return v.is_qp, v.calls
    if strategy == "rbs":
        r, updates = rbs_search(w)
        return r is not None, updates
    if strategy == "brute":
        f, checks = brute_force_search(w, budget)
        return f is not None, checks
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {ALGORITHMS}")


def _bench_one(args) -> BenchRecord:
    family, k, j, strategy, budget = args
    w = family_word(family, k, j)
    start = time.perf_counter()
    try:
        verdict, calls = run_strategy(w, strategy, budget)
        error = None
    except BudgetExceeded as exc:
        verdict, calls, error = None, exc.checks, str(exc)
    micros = int((time.perf_counter() - start) * 1e6)
    return BenchRecord(family, k, len(w), strategy, calls, micros, verdict, error)


def run_bench(
    families: Iterable[str],
    ks: Iterable[int],
    strategies: Iterable[str],
    j: int = 0,
    budget: int = BENCH_BUDGET,
    jobs: int = 1,
) -> List[BenchRecord]:
    """One record per (family, k, strategy), in that nesting order."""
    families, ks, strategies = list(families), list(ks), list(strategies)
    for s in strategies:
        if s not in ALGORITHMS:
            raise ValueError(f"unknown strategy {s!r}; expected one of {ALGORITHMS}")
    for fam in families:
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {fam!r}; expected one of {FAMILIES}")
    tasks = [(fam, k, j, s, budget) for fam in families for k in ks for s in strategies]
    for fam, k, j_, _, _ in tasks:
        family_word(fam, k, j_)  # validate parameters before running anything
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_bench_one, tasks))
    return [_bench_one(t) for t in tasks]


def write_csv(records: Sequence[BenchRecord], fh: IO[str]) -> None:
    writer = csv.writer(fh, lineterminator="\r\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(r.csv_row())


def parse_k_range(text: str) -> List[int]:
    """``"3"`` or ``"1..6"`` (inclusive)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo_i, hi_i = int(lo), int(hi)
        if hi_i < lo_i:
            raise ValueError(f"empty range {text!r}")
        return list(range(lo_i, hi_i + 1))
    return [int(text)]
