"""Spherical cancellation diagrams for quasi-positive words.

The outer boundary carries the word; every positive letter that is not
cancelled against the boundary is joined to its own one-vertex inner
circle labelled by the inverse letter. Arcs between outer vertices are
chords of the outer circle, and for diagrams built here the disjointness of
all arcs amounts to the chords being non-crossing.

Vertices are numbered ``0..n-1`` along the outer word, then ``n..n+k-1``
for the inner circles.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple
from xml.sax.saxutils import escape

from .factorizer import Factor, Factorization
from .rbs import _as_rbs, agrees
from .recognizer import Leaf, WitnessTree, check_witness
from .words import Letter, Word, abelianize, product

Arc = Tuple[int, int]


@dataclass(frozen=True)
class CancellationDiagram:
    outer: Word
    inner: Tuple[Letter, ...]
    arcs: Tuple[Arc, ...]

    def __post_init__(self):
        object.__setattr__(self, "inner", tuple(self.inner))
        object.__setattr__(self, "arcs", tuple(tuple(sorted(a)) for a in self.arcs))

    @property
    def n_vertices(self) -> int:
        return len(self.outer) + len(self.inner)

    def label(self, v: int) -> Letter:
        n = len(self.outer)
        return self.outer[v] if v < n else self.inner[v - n]

    def chords(self) -> List[Arc]:
        n = len(self.outer)
        return sorted(a for a in self.arcs if a[1] < n)

    def mates(self) -> Dict[int, int]:
        """Inner circle index -> outer vertex it is joined to."""
        n = len(self.outer)
        return {q - n: p for p, q in self.arcs if p < n <= q}

    def nesting(self) -> Dict[int, Optional[Arc]]:
        """Innermost chord enclosing each inner circle's mate (None: outermost face)."""
        chords = self.chords()
        faces = {}
        for c, s in self.mates().items():
            around = [(p, q) for p, q in chords if p < s < q]
            faces[c] = max(around) if around else None
        return faces


def _noncrossing(chords: List[Arc]) -> bool:
    ends = {}
    for p, q in chords:
        ends[p] = ("open", q)
        ends[q] = ("close", p)
    stack: List[int] = []
    for v in sorted(ends):
        kind, other = ends[v]
        if kind == "open":
            stack.append(v)
        elif not stack or stack.pop() != other:
            return False
    return not stack


def validate_diagram(d: CancellationDiagram) -> bool:
    n, total = len(d.outer), d.n_vertices
    seen = [0] * total
    for p, q in d.arcs:
        if not (0 <= p < q < total):
            return False
        seen[p] += 1
        seen[q] += 1
        if d.label(p) != d.label(q).inverse():
            return False
    if any(c != 1 for c in seen):
        return False
    if any(x.sign > 0 for x in d.inner):
        return False
    if any(q >= n and p >= n for p, q in d.arcs):
        return False
    if not _noncrossing(d.chords()):
        return False
    return len(d.inner) == abelianize(d.outer).total


def _assemble(w: Word, chords: List[Arc], stars: List[int]) -> CancellationDiagram:
    n = len(w)
    stars = sorted(stars)
    inner = tuple(w[s].inverse() for s in stars)
    arcs = list(chords) + [(s, n + k) for k, s in enumerate(stars)]
    return CancellationDiagram(w, inner, tuple(sorted(arcs)))


def diagram_from_rbs(w: Word, r) -> CancellationDiagram:
    r = _as_rbs(r)
    if not agrees(r, w):
        raise ValueError(f"{r} does not agree with {w}")
    return _assemble(w, sorted(r.matching.items()), r.stars())


def diagram_from_witness(t: WitnessTree) -> CancellationDiagram:
    """Glue the good-pair chords of every node into one diagram of the root word."""
    if not check_witness(t):
        raise ValueError("invalid witness tree")
    chords: List[Arc] = []
    stars: List[int] = []
    stack = [(t, list(range(len(t.word))))]
    while stack:
        node, pos = stack.pop()
        n, h = len(node.word), node.trim
        for k in range(h):
            chords.append((pos[k], pos[n - 1 - k]))
        core = pos[h:n - h]
        if isinstance(node, Leaf):
            stars.extend(core)
            continue
        m = len(core)
        i, j = node.neg_pos - 1, node.offset
        a, b = core[i], core[(i + j) % m]
        chords.append((min(a, b), max(a, b)))
        stack.append((node.left, [core[(i + 1 + s) % m] for s in range(j - 1)]))
        stack.append((node.right, [core[(i + j + 1 + s) % m] for s in range(m - j - 1)]))
    return _assemble(t.word, sorted(chords), stars)


def cut_diagram(d: CancellationDiagram, chord: Arc) -> Tuple[CancellationDiagram, CancellationDiagram]:
    """Cut along an outer chord, returning the diagrams of ``(w_L, w_R)``.

    ``w_L`` follows the chord's negative letter, as in the recognizer.
    """
    p, q = sorted(chord)
    if (p, q) not in d.chords():
        raise ValueError(f"{chord} is not a chord of the diagram")
    n = len(d.outer)
    inside = list(range(p + 1, q))
    outside = list(range(q + 1, n)) + list(range(p))
    mates = {s: c for c, s in d.mates().items()}

    def piece(vertices):
        index = {v: k for k, v in enumerate(vertices)}
        word = Word(tuple(d.outer[v] for v in vertices), d.outer.rank)
        sub_chords = [(index[a], index[b]) for a, b in d.chords() if a in index and b in index]
        sub_chords = [tuple(sorted(c)) for c in sub_chords]
        return _assemble(word, sub_chords, [index[v] for v in vertices if v in mates])

    if d.outer[p].sign < 0:
        return piece(inside), piece(outside)
    return piece(outside), piece(inside)


def read_factorization(d: CancellationDiagram) -> Factorization:
    """Read conjugators along paths from each inner circle to the base point.

    The base point sits on the edge between the last and first letters. The
    path from a star's vertex runs forward just inside the boundary; each
    chord it crosses is crossed once, at its closing end, and contributes the
    letter there. Chords lying entirely ahead of the vertex are crossed twice
    and cancel.
    """
    if not validate_diagram(d):
        raise ValueError("invalid diagram")
    rank = d.outer.rank
    chords = d.chords()
    factors = []
    for s in sorted(d.mates().values()):
        ends = sorted(q for p, q in chords if p < s < q)
        c = product(Word(tuple(d.outer[q] for q in ends), rank), rank=rank)
        factors.append(Factor(d.outer[s], c))
    return Factorization(tuple(factors), rank)


SIZE = 400.0
RADIUS = 150.0


def _point(theta: float, r: float) -> Tuple[float, float]:
    c = SIZE / 2
    return c + r * math.cos(theta), c + r * math.sin(theta)


def _segment_distance(pt, a, b) -> float:
    (px, py), (ax, ay), (bx, by) = pt, a, b
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    t = 0.0 if L2 == 0 else max(0.0, min(1.0, ((px - ax) * dx + (py - ay) * dy) / L2))
    return math.hypot(px - ax - t * dx, py - ay - t * dy)


def render_svg(d: CancellationDiagram) -> str:
    """SVG 1.1 drawing: outer circle, vertex markers, straight chords, inner circles."""
    if not validate_diagram(d):
        raise ValueError("invalid diagram")
    n = len(d.outer)
    c = SIZE / 2
    theta = [-math.pi / 2 + 2 * math.pi * s / max(n, 1) for s in range(n)]
    vertex = [_point(th, RADIUS) for th in theta]
    chords = d.chords()

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE:g}" height="{SIZE:g}" '
        f'viewBox="0 0 {SIZE:g} {SIZE:g}">',
        f'<title>{escape(str(d.outer) or "1")}</title>',
        f'<circle cx="{c:g}" cy="{c:g}" r="{RADIUS:g}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for s, (x, y) in enumerate(vertex):
        out.append(f'<rect x="{x - 3:.2f}" y="{y - 3:.2f}" width="6" height="6" fill="black"/>')
        lx, ly = _point(theta[s], RADIUS + 16)
        out.append(f'<text x="{lx:.2f}" y="{ly:.2f}" font-size="14" text-anchor="middle" '
                   f'dominant-baseline="middle">{d.outer[s]}</text>')
    for p, q in chords:
        (x1, y1), (x2, y2) = vertex[p], vertex[q]
        out.append(f'<path d="M {x1:.2f} {y1:.2f} L {x2:.2f} {y2:.2f}" fill="none" stroke="red" stroke-width="1.5"/>')
    for k, s in sorted(d.mates().items()):
        if n > 1 or chords:
            gap = min((_segment_distance(vertex[s], vertex[p], vertex[q]) for p, q in chords), default=RADIUS)
        else:
            gap = RADIUS
        gap = min(gap, 0.5 * RADIUS, 2 * math.pi * RADIUS / max(n, 1))
        rad = max(min(gap / 3, 16.0), 1.0)
        cx, cy = _point(theta[s], RADIUS - gap / 2)
        ax, ay = _point(theta[s], RADIUS - gap / 2 + rad)
        (vx, vy) = vertex[s]
        out.append(f'<path d="M {vx:.2f} {vy:.2f} L {ax:.2f} {ay:.2f}" fill="none" stroke="red" stroke-width="1.5"/>')
        out.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{rad:.2f}" fill="none" stroke="blue" stroke-width="1.5"/>')
        out.append(f'<text x="{cx:.2f}" y="{cy:.2f}" font-size="{max(rad, 6):.1f}" text-anchor="middle" '
                   f'dominant-baseline="middle">{d.inner[k]}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
