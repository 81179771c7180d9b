"""Products of conjugates of positive letters, built from witness trees."""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Tuple

from .recognizer import Leaf, Node, WitnessTree, split_at_pair
from .words import (
    Letter,
    Word,
    abelianize,
    cyclic_reduce,
    find_cyclic_conjugator,
    free_reduce,
    parse_word,
    product,
)


class Factor(NamedTuple):
    """``base^conjugator = conjugator^-1 * base * conjugator``."""

    base: Letter
    conjugator: Word

    def value(self) -> Word:
        c = self.conjugator
        return product(c.inverse(), Word((self.base,), c.rank), c)

    def conjugated(self, d: Word) -> "Factor":
        # (x^c)^d = x^(cd)
        return Factor(self.base, product(self.conjugator, d, rank=max(d.rank, self.conjugator.rank)))

    def __str__(self) -> str:
        if len(self.conjugator) == 0:
            return str(self.base)
        return f"{self.base}^({self.conjugator})"


@dataclass(frozen=True)
class Factorization:
    factors: Tuple[Factor, ...]
    rank: int = 2

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def __len__(self) -> int:
        return len(self.factors)

    def __iter__(self):
        return iter(self.factors)

    def value(self) -> Word:
        letters: list = []
        for f in self.factors:
            letters.extend(f.value().letters)
        return free_reduce(Word(tuple(letters), self.rank))

    def base_counts(self) -> Tuple[int, ...]:
        counts = Counter(f.base.generator for f in self.factors)
        return tuple(counts.get(g, 0) for g in range(self.rank))

    def conjugated(self, d: Word) -> "Factorization":
        return Factorization(tuple(f.conjugated(d) for f in self.factors), self.rank)

    def __add__(self, other: "Factorization") -> "Factorization":
        return Factorization(self.factors + other.factors, max(self.rank, other.rank))

    def __str__(self) -> str:
        return format_factorization(self)


def _factor(base: str, conjugator: str = "", rank: int = 2) -> Factor:
    b = parse_word(base, rank)
    if len(b) != 1:
        raise ValueError(f"base must be a single letter, got {base!r}")
    return Factor(b[0], parse_word(conjugator, rank))


def make_factorization(pairs: Iterable[Tuple[str, str]], rank: int = 2) -> Factorization:
    """Build from ``(base, conjugator)`` strings, e.g. ``[("b", ""), ("b", "A")]``."""
    return Factorization(tuple(_factor(b, c, rank) for b, c in pairs), rank)


def format_factorization(f: Factorization) -> str:
    if not f.factors:
        return "1"
    return " * ".join(str(x) for x in f.factors)


_FACTOR_RE = re.compile(r"^([A-Za-z])(?:\^\(([A-Za-z]*)\))?$")


def parse_factorization(text: str, rank: int = 2) -> Factorization:
    """Inverse of :func:`format_factorization`."""
    text = text.strip()
    if text in ("", "1"):
        return Factorization((), rank)
    factors = []
    for part in text.split("*"):
        m = _FACTOR_RE.match(part.strip())
        if not m:
            raise ValueError(f"cannot parse factor {part.strip()!r}")
        factors.append(_factor(m.group(1), m.group(2) or "", rank))
    return Factorization(tuple(factors), rank)


def cycling_factor(w: Word, a: Letter, f_left: Factorization, f_right: Factorization) -> Factorization:
    """Factor ``w`` given factorizations of ``w_L`` and ``w_R``.

    ``w`` must be conjugate to the cyclic word ``a^-1 w_L a w_R``. With
    ``w = v^-1 core v`` the cyclic reduction, a conjugator ``u`` with
    ``core = s^u`` is found for the product ``s``, and ``w = s^(uv)``.

    The product may be read from either block boundary of the cyclic word
    (``s = w_L^a * w_R`` or ``s = w_R * w_L^a``), and ``s^m u`` conjugates
    ``s`` onto ``core`` as well as ``u`` does. Over these readings and
    ``m in (0, -1, 1)`` the candidate with the shortest longest conjugator
    (then the shortest total) is returned; earlier candidates win ties.
    """
    if a.sign < 0:
        raise ValueError("base letter must be positive")
    rank = max(w.rank, f_left.rank, f_right.rank)
    v, core = cyclic_reduce(w)
    x, x_inv = Word((a,), rank), Word((a.inverse(),), rank)
    left_block = product(x_inv, f_left.value(), x, rank=rank)
    right_block = f_right.value()
    best, best_key = None, None
    for order, source in ((0, product(left_block, right_block, rank=rank)),
                          (1, product(right_block, left_block, rank=rank))):
        u0 = find_cyclic_conjugator(core, source)
        if u0 is None:
            continue
        for u in (u0, product(source.inverse(), u0), product(source, u0)):
            uv = product(u, v, rank=rank)
            lhs = [f.conjugated(product(x, uv, rank=rank)) for f in f_left.factors]
            rhs = [f.conjugated(uv) for f in f_right.factors]
            factors = tuple(lhs + rhs if order == 0 else rhs + lhs)
            lengths = [len(f.conjugator) for f in factors]
            key = (max(lengths, default=0), sum(lengths))
            if best_key is None or key < best_key:
                best, best_key = factors, key
    if best is None:
        raise ValueError(f"{w} is not conjugate to {a}^-1 w_L {a} w_R; corrupt witness")
    return Factorization(best, rank)


def _leaf_factorization(t: Leaf) -> Factorization:
    rank = t.word.rank
    core = t.core
    f = Factorization(tuple(Factor(x, Word((), rank)) for x in core), rank)
    if t.trim:
        f = f.conjugated(t.word[len(t.word) - t.trim:])
    return f


def factor_qp(t: WitnessTree) -> Factorization:
    """Factor the root word of a witness tree, children before parents."""
    # subtrees may be shared (memoized search), so results live on a stack
    results: List[Factorization] = []
    stack: List[Tuple[WitnessTree, bool]] = [(t, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Leaf):
            results.append(_leaf_factorization(node))
        elif not expanded:
            _check_node(node)
            stack.append((node, True))
            stack.append((node.right, False))
            stack.append((node.left, False))
        else:
            f_right = results.pop()
            f_left = results.pop()
            results.append(cycling_factor(node.word, node.base, f_left, f_right))
    return results.pop()


def _check_node(node: Node) -> None:
    left, right = split_at_pair(node.core, node.neg_pos, node.offset)
    if left.letters != node.left.word.letters or right.letters != node.right.word.letters:
        raise ValueError(f"children of node {node.word} do not match its good pair")


def verify_factorization(w: Word, f: Factorization) -> bool:
    """True iff ``f`` multiplies out to ``w`` and its bases match the exponent sums."""
    if any(x.base.sign < 0 for x in f.factors):
        return False
    rank = max(w.rank, f.rank)
    if f.value().letters != free_reduce(w).letters:
        return False
    theta = abelianize(Word(w.letters, rank))
    counts = Counter(x.base.generator for x in f.factors)
    return all(counts.get(g, 0) == theta[g] for g in range(rank))


def conjugator_bound(w: Word, f: Factorization) -> int:
    """Longest conjugator length any factorization of ``w`` needs."""
    return (len(free_reduce(w)) - len(f)) // 2


def within_bound(w: Word, f: Factorization) -> bool:
    limit = conjugator_bound(w, f)
    return all(len(x.conjugator) <= limit for x in f.factors)
