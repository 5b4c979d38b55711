"""Permutations on {0, ..., n-1} stored as image tuples.

A permutation is a tuple ``p`` with ``p[i]`` the image of point ``i``.
Products compose left-to-right: ``(a * b)[i] == b[a[i]]`` (apply ``a``
first), so groups act on the right and ``x.conjugate(g)`` is ``g⁻¹xg``.
All algorithms in this package rely on that convention.
"""

from __future__ import annotations

import math
import re


class Perm(tuple):
    """An immutable permutation; subclasses tuple, so it hashes and sorts."""

    __slots__ = ()

    def __new__(cls, images):
        p = super().__new__(cls, images)
        if sorted(p) != list(range(len(p))):
            raise ValueError("images are not a bijection on 0..n-1")
        return p

    @classmethod
    def identity(cls, degree: int) -> Perm:
        return tuple.__new__(cls, range(degree))

    @classmethod
    def from_cycles(cls, degree: int, cycles) -> Perm:
        """Build a permutation from disjoint cycles of 0-based points."""
        images = list(range(degree))
        seen = set()
        for cycle in cycles:
            for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
                if a in seen or not 0 <= a < degree:
                    raise ValueError(f"bad cycle point {a}")
                seen.add(a)
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def __mul__(self, other):  # apply self, then other
        return tuple.__new__(Perm, map(other.__getitem__, self))

    def inverse(self) -> Perm:
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return tuple.__new__(Perm, inv)

    def __pow__(self, k: int) -> Perm:
        n = len(self)
        if k < 0:
            return self.inverse() ** (-k)
        r = Perm.identity(n)
        b = self
        while k:
            if k & 1:
                r = r * b
            b = b * b
            k >>= 1
        return r

    def conjugate(self, g) -> Perm:
        """Return g⁻¹ * self * g."""
        out = [0] * len(self)
        for i, gi in enumerate(g):
            out[gi] = g[self[i]]
        return tuple.__new__(Perm, out)

    def cycles(self):
        """Nontrivial cycles, each rotated to start at its least point."""
        seen = [False] * len(self)
        out = []
        for i in range(len(self)):
            if seen[i] or self[i] == i:
                continue
            cyc = [i]
            j = self[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple:
        """Sorted lengths of nontrivial cycles; a conjugacy invariant."""
        return tuple(sorted(len(c) for c in self.cycles()))

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if not self.is_identity() else 1

    def moved_points(self):
        return [i for i, j in enumerate(self) if i != j]

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Perm[{self.degree}]{self}"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int) -> Perm:
    """Parse cycle notation like ``(0 1 2)(3 4)``; whitespace or commas split."""
    stripped = text.replace(",", " ").strip()
    if stripped in ("", "()"):
        return Perm.identity(degree)
    consumed = _CYCLE_RE.sub("", stripped).strip()
    if consumed:
        raise ValueError(f"could not parse permutation {text!r}")
    cycles = []
    for body in _CYCLE_RE.findall(stripped):
        pts = [int(tok) for tok in body.split()]
        if pts:
            cycles.append(pts)
    return Perm.from_cycles(degree, cycles)
