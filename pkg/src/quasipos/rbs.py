"""Regular bracket structures and an interval-DP search for them.

An RBS is a well-nested word over ``[``, ``*``, ``]``. It agrees with a
word when every star sits on a positive letter and every matching bracket
pair sits on a pair of inverse letters. A word is quasi-positive exactly
when some RBS agrees with it.
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .recognizer import Leaf, Node, WitnessTree
from .words import Letter, Word

OPEN, STAR, CLOSE = "[", "*", "]"


def _matching(symbols: str) -> Optional[Dict[int, int]]:
    stack: List[int] = []
    pairs: Dict[int, int] = {}
    for i, s in enumerate(symbols):
        if s == OPEN:
            stack.append(i)
        elif s == CLOSE:
            if not stack:
                return None
            pairs[stack.pop()] = i
        elif s != STAR:
            return None
    return None if stack else pairs


def is_rbs(symbols: Sequence[str]) -> bool:
    return _matching("".join(symbols)) is not None


@dataclass(frozen=True)
class RBS:
    symbols: str
    matching: Dict[int, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        symbols = "".join(self.symbols)
        pairs = _matching(symbols)
        if pairs is None:
            raise ValueError(f"{symbols!r} is not a regular bracket structure")
        object.__setattr__(self, "symbols", symbols)
        object.__setattr__(self, "matching", pairs)

    def __len__(self) -> int:
        return len(self.symbols)

    def __str__(self) -> str:
        return self.symbols

    def closing(self) -> Dict[int, int]:
        return {q: p for p, q in self.matching.items()}

    def stars(self) -> List[int]:
        return [i for i, s in enumerate(self.symbols) if s == STAR]


def _as_rbs(r) -> RBS:
    return r if isinstance(r, RBS) else RBS(r)


def agrees(r, w: Word) -> bool:
    r = _as_rbs(r)
    if len(r) != len(w):
        raise ValueError(f"RBS of length {len(r)} cannot agree with a word of length {len(w)}")
    letters = w.letters
    for i, s in enumerate(r.symbols):
        if s == STAR and letters[i].sign < 0:
            return False
    return all(letters[q] == letters[p].inverse() for p, q in r.matching.items())


def rotate_rbs(r, w: Word) -> RBS:
    """RBS agreeing with ``w[-1] + w[:-1]``, given one agreeing with ``w``."""
    r = _as_rbs(r)
    if not agrees(r, w):
        raise ValueError(f"{r} does not agree with {w}")
    s = r.symbols
    n = len(s)
    if n == 0 or s[-1] == STAR:
        return RBS(s[-1:] + s[:-1])
    i = r.closing()[n - 1]
    return RBS(OPEN + s[:i] + CLOSE + s[i + 1:n - 1])


def rbs_search(w: Word) -> Tuple[Optional[RBS], int]:
    """Find an agreeing RBS for the word exactly as written.

    ``reach[i]`` is a bitmask of the ends ``j`` such that ``w[i:j]`` admits
    an agreeing RBS: the empty interval, a star on a positive ``w[i]``
    followed by ``w[i+1:j]``, or a bracket from ``w[i]`` to an inverse
    letter ``w[m]`` around ``w[i+1:m]`` followed by ``w[m+1:j]``. Returns
    the reconstructed RBS (stars first, then the nearest partner) and the
    number of candidate updates examined.
    """
    letters = w.letters
    n = len(letters)
    where: Dict[Letter, List[int]] = {}
    for i, x in enumerate(letters):
        where.setdefault(x, []).append(i)

    reach = [0] * (n + 1)
    reach[n] = 1 << n
    updates = 0
    for i in range(n - 1, -1, -1):
        x = letters[i]
        mask = 1 << i
        inner = reach[i + 1]
        if x.sign > 0:
            mask |= inner
            updates += 1
        partners = where.get(x.inverse(), ())
        for m in partners[bisect_right(partners, i):]:
            updates += 1
            if (inner >> m) & 1:
                mask |= reach[m + 1]
        reach[i] = mask

    if not (reach[0] >> n) & 1:
        return None, updates

    symbols = [STAR] * n
    stack = [(0, n)]
    while stack:
        i, j = stack.pop()
        if i == j:
            continue
        x = letters[i]
        if x.sign > 0 and (reach[i + 1] >> j) & 1:
            stack.append((i + 1, j))
            continue
        partners = where.get(x.inverse(), ())
        for m in partners[bisect_right(partners, i):]:
            if m >= j:
                break
            if (reach[i + 1] >> m) & 1 and (reach[m + 1] >> j) & 1:
                symbols[i], symbols[m] = OPEN, CLOSE
                stack.append((m + 1, j))
                stack.append((i + 1, m))
                break
        else:  # pragma: no cover - reach[] guarantees a decomposition
            raise AssertionError("inconsistent reachability table")
    return RBS("".join(symbols)), updates


def find_rbs(w: Word) -> Optional[RBS]:
    return rbs_search(w)[0]


def rbs_to_witness(w: Word, r) -> WitnessTree:
    """Witness tree for ``w`` read off an agreeing RBS.

    Each node cuts along the first bracket pair, oriented so that its
    negative letter leads.
    """
    r = _as_rbs(r)
    if not agrees(r, w):
        raise ValueError(f"{r} does not agree with {w}")
    return _witness(w.letters, r.symbols, w.rank)


def _witness(letters: tuple, symbols: str, rank: int) -> WitnessTree:
    word = Word(letters, rank)
    p = symbols.find(OPEN)
    if p < 0:
        return Leaf(word)
    q = _matching(symbols)[p]
    n = len(letters)
    inside = (letters[p + 1:q], symbols[p + 1:q])
    outside = (letters[q + 1:] + letters[:p], symbols[q + 1:] + symbols[:p])
    if letters[p].sign < 0:
        neg, match = p, q
        left, right = inside, outside
    else:
        neg, match = q, p
        left, right = outside, inside
    offset = (match - neg) % n
    return Node(
        word,
        letters[neg].inverse(),
        neg + 1,
        neg + 1 + offset,
        _witness(left[0], left[1], rank),
        _witness(right[0], right[1], rank),
    )
