"""Brute-force ground truth: search bounded conjugators for a factorization.

If ``w`` is quasi-positive then ``w = x_1^c_1 ... x_k^c_k`` where the base
letters are fixed as a multiset by the exponent sums of ``w`` and every
conjugator has length at most ``(|w| - k) / 2``. The search enumerates base
orderings and conjugator tuples from the free-group ball of that radius.
"""
from __future__ import annotations

from itertools import permutations
from typing import Dict, List, Optional, Tuple

from .factorizer import Factor, Factorization
from .words import Letter, Word, abelianize, cyclic_trim, reduce_letters

DEFAULT_BUDGET = 10 ** 8


class BudgetExceeded(RuntimeError):
    """The search hit its candidate cap before reaching a verdict."""

    def __init__(self, checks: int, budget: int):
        super().__init__(f"brute force exceeded its budget of {budget} checks")
        self.checks = checks
        self.budget = budget


def ball_size(rank: int, r: int) -> int:
    """Number of reduced words of length at most ``r``."""
    if rank < 1:
        raise ValueError("rank must be positive")
    if r < 0:
        return 0
    if rank == 1:
        return 1 + 2 * r
    # 1 + 2n * sum_{i<r} (2n-1)^i
    q = 2 * rank - 1
    return 1 + 2 * rank * (q ** r - 1) // (q - 1)


def _alphabet(rank: int) -> List[Letter]:
    return [Letter(g, 1) for g in range(rank)] + [Letter(g, -1) for g in range(rank)]


def _ball(rank: int, r: int) -> List[tuple]:
    alphabet = _alphabet(rank)
    words: List[tuple] = [()]
    layer: List[tuple] = [()]
    for _ in range(r):
        nxt = []
        for w in layer:
            for x in alphabet:
                if w and w[-1] == x.inverse():
                    continue
                nxt.append(w + (x,))
        words.extend(nxt)
        layer = nxt
    return words


def enumerate_ball(rank: int, r: int) -> List[Word]:
    """All reduced words of length at most ``r``, ordered by length then letters
    (``a < b < ... < A < B < ...``)."""
    if rank < 1:
        raise ValueError("rank must be positive")
    return [Word(w, rank) for w in _ball(rank, r)]


def _inv(w: tuple) -> tuple:
    return tuple(x.inverse() for x in reversed(w))


def brute_force_search(w: Word, budget: int = DEFAULT_BUDGET) -> Tuple[Optional[Factorization], int]:
    """Run the search; returns ``(factorization or None, checks performed)``.

    Raises :class:`BudgetExceeded` once more than ``budget`` candidate
    checks would be needed.
    """
    rank = w.rank
    target = reduce_letters(w.letters)
    theta = abelianize(w)
    if not theta.is_nonnegative():
        return None, 0
    k = theta.total
    if k == 0:
        return (Factorization((), rank) if not target else None), 1
    radius = (len(target) - k) // 2
    ball = _ball(rank, radius)
    order: Dict[tuple, int] = {c: i for i, c in enumerate(ball)}
    bases = []
    for g, c in enumerate(theta):
        bases.extend([g] * c)
    checks = 0
    reach = 2 * radius + 1

    def tick():
        nonlocal checks
        checks += 1
        if checks > budget:
            raise BudgetExceeded(checks, budget)

    def last_conjugator(rest: tuple, x: Letter) -> Optional[tuple]:
        # rest must be c^-1 x c; every such c is x^m v for the trim v
        h = cyclic_trim(rest)
        if len(rest) != 2 * h + 1 or rest[h] != x:
            return None
        v = rest[len(rest) - h:]
        best = None
        for m in range(-radius, radius + 1):
            power = (x if m > 0 else x.inverse(),) * abs(m)
            c = reduce_letters(power + v)
            i = order.get(c)
            if i is not None and (best is None or i < order[best]):
                best = c
        return best

    def search(seq: tuple, d: int, prefix: tuple, chosen: list) -> Optional[list]:
        rest = reduce_letters(_inv(prefix) + target)
        tick()
        if len(rest) > (len(seq) - d) * reach:
            return None
        x = Letter(seq[d], 1)
        if d == len(seq) - 1:
            c = last_conjugator(rest, x)
            return None if c is None else chosen + [c]
        for c in ball:
            value = _inv(c) + (x,) + c
            found = search(seq, d + 1, reduce_letters(prefix + value), chosen + [c])
            if found is not None:
                return found
        return None

    for seq in sorted(set(permutations(bases))):
        conj = search(seq, 0, (), [])
        if conj is not None:
            factors = tuple(Factor(Letter(g, 1), Word(c, rank)) for g, c in zip(seq, conj))
            return Factorization(factors, rank), checks
    return None, checks


def brute_force_qp(w: Word, budget: int = DEFAULT_BUDGET) -> Optional[Factorization]:
    return brute_force_search(w, budget)[0]
