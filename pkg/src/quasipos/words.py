"""Words over a free-group basis.

Letters are written in a compact alphabet: ``a``..``z`` are the generators
x_1..x_26 and the matching uppercase character is the inverse. Words are
immutable; every operation returns a new word.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Optional, Sequence, Tuple

MAX_RANK = 26


class Letter(NamedTuple):
    generator: int
    sign: int

    @property
    def positive(self) -> bool:
        return self.sign > 0

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)

    def __str__(self) -> str:
        ch = chr(ord("a") + self.generator)
        return ch if self.sign > 0 else ch.upper()


def _check_rank(rank: int) -> None:
    if not isinstance(rank, int) or rank < 1 or rank > MAX_RANK:
        raise ValueError(f"rank must be an integer in 1..{MAX_RANK}, got {rank!r}")


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters over a basis of ``rank`` generators.

    The word is stored exactly as written; use :func:`free_reduce` to get
    the reduced representative of the group element.
    """

    letters: Tuple[Letter, ...]
    rank: int = 2

    def __post_init__(self):
        _check_rank(self.rank)
        letters = tuple(self.letters)
        for x in letters:
            if not (0 <= x.generator < self.rank) or x.sign not in (1, -1):
                raise ValueError(f"letter {x!r} is not valid for rank {self.rank}")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return Word(self.letters[idx], self.rank)
        return self.letters[idx]

    def __mul__(self, other: "Word") -> "Word":
        """Concatenation (no reduction)."""
        if not isinstance(other, Word):
            return NotImplemented
        return Word(self.letters + other.letters, max(self.rank, other.rank))

    def inverse(self) -> "Word":
        return Word(tuple(x.inverse() for x in reversed(self.letters)), self.rank)

    def is_positive(self) -> bool:
        """True if no letter is an inverse generator (the empty word counts)."""
        return all(x.sign > 0 for x in self.letters)

    def __str__(self) -> str:
        return format_word(self)

    def __repr__(self) -> str:
        return f"Word({format_word(self)!r}, rank={self.rank})"


@dataclass(frozen=True)
class AbelianImage:
    """Exponent sums of a word, one coordinate per generator."""

    counts: Tuple[int, ...]

    def __len__(self) -> int:
        return len(self.counts)

    def __getitem__(self, g: int) -> int:
        return self.counts[g]

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __add__(self, other: "AbelianImage") -> "AbelianImage":
        if len(other) != len(self):
            raise ValueError("abelian images of different rank")
        return AbelianImage(tuple(a + b for a, b in zip(self.counts, other.counts)))

    @property
    def total(self) -> int:
        return sum(self.counts)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.counts)


def parse_word(text: str, rank: int = 2) -> Word:
    """Parse the compact alphabet; whitespace is ignored, nothing is reduced."""
    _check_rank(rank)
    letters = []
    for ch in text:
        if ch.isspace():
            continue
        if not ch.isascii() or not ch.isalpha():
            raise ValueError(f"invalid character {ch!r} in word {text!r}")
        g = ord(ch.lower()) - ord("a")
        if g >= rank:
            raise ValueError(f"letter {ch!r} is outside the basis of rank {rank}")
        letters.append(Letter(g, 1 if ch.islower() else -1))
    return Word(tuple(letters), rank)


def format_word(w: Word) -> str:
    return "".join(str(x) for x in w.letters)


def infer_rank(text: str, minimum: int = 2) -> int:
    """Smallest rank (at least ``minimum``) whose alphabet covers ``text``."""
    rank = minimum
    for ch in text:
        if ch.isascii() and ch.isalpha():
            rank = max(rank, ord(ch.lower()) - ord("a") + 1)
    return rank


def reduce_letters(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list = []
    for x in letters:
        if stack and stack[-1].generator == x.generator and stack[-1].sign == -x.sign:
            stack.pop()
        else:
            stack.append(x)
    return tuple(stack)


def free_reduce(w: Word) -> Word:
    return Word(reduce_letters(w.letters), w.rank)


def cyclic_trim(letters: Sequence[Letter]) -> int:
    """Number of inverse pairs peeled off the two ends of a reduced sequence."""
    n = len(letters)
    h = 0
    while n - 2 * h > 1 and letters[h] == letters[n - 1 - h].inverse():
        h += 1
    return h


def cyclic_reduce(w: Word) -> Tuple[Word, Word]:
    """Split ``w`` as ``v^-1 * core * v`` with ``core`` cyclically reduced.

    Returns ``(v, core)``. The input is freely reduced first.
    """
    letters = reduce_letters(w.letters)
    n = len(letters)
    h = cyclic_trim(letters)
    return Word(letters[n - h:], w.rank), Word(letters[h:n - h], w.rank)


def conjugate(a: Word, b: Word) -> Word:
    """``a^b = b^-1 a b``, freely reduced."""
    return free_reduce(b.inverse() * a * b)


def product(*words: Word, rank: Optional[int] = None) -> Word:
    """Freely reduced product of any number of words."""
    if rank is None:
        rank = max((w.rank for w in words), default=2)
    letters: list = []
    for w in words:
        letters.extend(w.letters)
    return Word(reduce_letters(letters), rank)


def abelianize(w: Word) -> AbelianImage:
    counts = [0] * w.rank
    for x in w.letters:
        counts[x.generator] += x.sign
    return AbelianImage(tuple(counts))


def prefix_function(pattern: Sequence) -> list:
    """KMP failure table: ``pi[i]`` is the length of the longest proper
    border of ``pattern[:i + 1]``."""
    pi = [0] * len(pattern)
    k = 0
    for i in range(1, len(pattern)):
        while k and pattern[i] != pattern[k]:
            k = pi[k - 1]
        if pattern[i] == pattern[k]:
            k += 1
        pi[i] = k
    return pi


def kmp_find(text: Sequence, pattern: Sequence) -> int:
    """Index of the first occurrence of ``pattern`` in ``text``, or -1."""
    m = len(pattern)
    if m == 0:
        return 0
    pi = prefix_function(pattern)
    k = 0
    for i, x in enumerate(text):
        while k and x != pattern[k]:
            k = pi[k - 1]
        if x == pattern[k]:
            k += 1
            if k == m:
                return i - m + 1
    return -1


def rotation_shift(target: Sequence, source: Sequence) -> int:
    """Smallest ``t >= 0`` with ``source[t:] + source[:t] == target``, or -1."""
    if len(target) != len(source):
        return -1
    if not source:
        return 0
    return kmp_find(tuple(source) + tuple(source), tuple(target))


def find_cyclic_conjugator(target_core: Word, source: Word) -> Optional[Word]:
    """Find ``u`` with ``target_core == u^-1 * source * u`` in the group.

    ``source`` is freely and cyclically reduced to ``p^-1 z p``; if ``z`` is
    a rotation ``z[t:] + z[:t]`` of ``target_core`` (smallest ``t``), the
    prefix ``z[:t]`` conjugates ``z`` onto the target and
    ``u = p^-1 * z[:t]``. Returns None when no rotation matches.
    """
    p, z = cyclic_reduce(source)
    t = rotation_shift(target_core.letters, z.letters)
    if t < 0:
        return None
    rank = max(target_core.rank, source.rank)
    return product(p.inverse(), z[:t], rank=rank)


def least_rotation(letters: Sequence) -> Tuple:
    """Lexicographically least rotation (Booth's algorithm)."""
    s = tuple(letters)
    n = len(s)
    if n == 0:
        return s
    ss = s + s
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = ss[j]
        i = f[j - k - 1]
        while i != -1 and sj != ss[k + i + 1]:
            if sj < ss[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != ss[k + i + 1]:
            if sj < ss[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return ss[k:k + n]
