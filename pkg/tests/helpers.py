"""Shared test utilities and independent oracles."""
from __future__ import annotations

from itertools import product as cartesian

from quasipos.words import Word, parse_word

LETTERS = "abAB"


def W(text: str, rank: int = 2) -> Word:
    return parse_word(text, rank)


def is_reduced_text(s: str) -> bool:
    return all(not (x != y and x.lower() == y.lower()) for x, y in zip(s, s[1:]))


def reduced_strings(max_len: int, alphabet: str = LETTERS):
    """Reduced words by brute filtering of every string (independent of the ball code)."""
    out = []
    for n in range(max_len + 1):
        for t in cartesian(alphabet, repeat=n):
            s = "".join(t)
            if is_reduced_text(s):
                out.append(s)
    return out


def all_strings(max_len: int, alphabet: str = LETTERS):
    for n in range(max_len + 1):
        for t in cartesian(alphabet, repeat=n):
            yield "".join(t)


# Sanov's faithful representation of F(a, b) in SL(2, Z)
_GEN = {
    "a": ((1, 2), (0, 1)),
    "A": ((1, -2), (0, 1)),
    "b": ((1, 0), (2, 1)),
    "B": ((1, 0), (-2, 1)),
}


def _mul(m, n):
    return (
        (m[0][0] * n[0][0] + m[0][1] * n[1][0], m[0][0] * n[0][1] + m[0][1] * n[1][1]),
        (m[1][0] * n[0][0] + m[1][1] * n[1][0], m[1][0] * n[0][1] + m[1][1] * n[1][1]),
    )


def sanov(w) -> tuple:
    m = ((1, 0), (0, 1))
    for ch in str(w):
        m = _mul(m, _GEN[ch])
    return m


def rotations(s: str):
    return [s[i:] + s[:i] for i in range(max(len(s), 1))]
