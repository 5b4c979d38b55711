"""Root systems of types A-G in standard integer coordinates.

Every system is generated by reflection closure from its fundamental
roots, never written out by hand.  Realizations follow the usual
orthonormal models (A_n in the sum-zero hyperplane of R^{n+1}; B/C/D in
R^n; E/F in R^8 / R^4 scaled by 2 so half-integer coordinates become
integers; G2 in R^3).  Scaling leaves every Cartan pairing unchanged.

The pairing <s, r> = 2(s,r)/(r,r) pairs s against the coroot of r; the
torus/reflection formulas use it with care about argument order, since
conjugating the root element of r by h_s(-1) scales its coordinate by
(-1)^<r, s>.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

SUPPORTED = {
    "A": range(1, 8),
    "B": range(2, 8),
    "C": range(2, 8),
    "D": range(3, 8),
    "E": range(6, 9),
    "F": range(4, 5),
    "G": range(2, 3),
}


def _dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v))


def _sub(u, v) -> tuple:
    return tuple(a - b for a, b in zip(u, v))


def _scale(c, v) -> tuple:
    return tuple(c * a for a in v)


def _simple_roots(type_label: str, rank: int) -> list[tuple]:
    t = type_label
    if t == "A":
        dim = rank + 1
        return [tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(dim))
                for i in range(rank)]
    if t in ("B", "C", "D"):
        def e(i, c=1):
            return tuple(c if j == i else 0 for j in range(rank))
        chain = [tuple(1 if j == i else -1 if j == i + 1 else 0 for j in range(rank))
                 for i in range(rank - 1)]
        if t == "B":
            return chain + [e(rank - 1)]
        if t == "C":
            return chain + [e(rank - 1, 2)]
        last = tuple(1 if j in (rank - 2, rank - 1) else 0 for j in range(rank))
        return chain + [last]
    if t == "E":
        e8 = [
            (1, -1, -1, -1, -1, -1, -1, 1),
            (2, 2, 0, 0, 0, 0, 0, 0),
            (-2, 2, 0, 0, 0, 0, 0, 0),
            (0, -2, 2, 0, 0, 0, 0, 0),
            (0, 0, -2, 2, 0, 0, 0, 0),
            (0, 0, 0, -2, 2, 0, 0, 0),
            (0, 0, 0, 0, -2, 2, 0, 0),
            (0, 0, 0, 0, 0, -2, 2, 0),
        ]
        return e8[:rank]
    if t == "F":
        return [(0, 2, -2, 0), (0, 0, 2, -2), (0, 0, 0, 2), (1, -1, -1, -1)]
    if t == "G":
        return [(1, -1, 0), (-2, 1, 1)]
    raise ValueError(f"unknown type {t}")


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    roots: tuple              # all roots, sorted
    simples: tuple            # fundamental roots, in diagram order
    index: dict               # root -> position in roots
    simple_coords: dict       # root -> integer coordinates over the simples

    @property
    def dimension(self) -> int:
        return len(self.roots[0])

    def positive_roots(self) -> list[tuple]:
        return [r for r in self.roots if self.height(r) > 0]

    def height(self, r: tuple) -> int:
        return sum(self.simple_coords[r])

    def norms(self) -> set[int]:
        return {_dot(r, r) for r in self.roots}

    def is_long(self, r: tuple) -> bool:
        return _dot(r, r) == max(self.norms())

    def long_roots(self) -> list[tuple]:
        m = max(self.norms())
        return [r for r in self.roots if _dot(r, r) == m]

    def reflect(self, x: tuple, r: tuple) -> tuple:
        """s_r(x) = x - <x,r> r."""
        return _sub(x, _scale(pairing(x, r), r))

    def __repr__(self):
        return f"RootSystem({self.type_label}{self.rank}, {len(self.roots)} roots)"


def pairing(s: tuple, r: tuple) -> int:
    """The Cartan integer <s, r> = 2(s,r)/(r,r)."""
    num = 2 * _dot(s, r)
    den = _dot(r, r)
    if num % den:
        raise ValueError(f"{s} and {r} do not pair integrally")
    return num // den


@functools.lru_cache(maxsize=None)
def root_system(type_label: str, rank: int) -> RootSystem:
    """Build (and memoize; systems are immutable) the root system."""
    if type_label not in SUPPORTED or rank not in SUPPORTED[type_label]:
        raise ValueError(f"unsupported root system {type_label}{rank}")
    simples = _simple_roots(type_label, rank)
    roots = reflection_closure(simples, simples)
    coords = {r: _coords_over(simples, r) for r in roots}
    ordered = tuple(sorted(roots))
    return RootSystem(
        type_label=type_label,
        rank=rank,
        roots=ordered,
        simples=tuple(simples),
        index={r: i for i, r in enumerate(ordered)},
        simple_coords=coords,
    )


def reflection_closure(seed_roots, reflecting_roots) -> set[tuple]:
    """Close seed_roots under the reflections of reflecting_roots."""
    roots = set(seed_roots)
    frontier = list(roots)
    while frontier:
        new = []
        for x in frontier:
            for r in reflecting_roots:
                y = _sub(x, _scale(pairing(x, r), r))
                if y not in roots:
                    roots.add(y)
                    new.append(y)
        frontier = new
    return roots


def _coords_over(basis, target) -> tuple:
    """Integer coordinates of target over the basis (exact, or raises)."""
    coords = _rational_coords(basis, target)
    if coords is None or any(c.denominator != 1 for c in coords):
        raise ValueError(f"{target} is not an integer combination of the basis")
    return tuple(int(c) for c in coords)


def _rational_coords(basis, target):
    """Solve sum c_i basis_i = target over Q; None if inconsistent."""
    rows = [list(col) for col in zip(*basis)]  # ambient_dim x len(basis)
    m = len(rows)
    k = len(basis)
    aug = [[Fraction(rows[i][j]) for j in range(k)] + [Fraction(target[i])]
           for i in range(m)]
    pivot_cols = []
    r = 0
    for c in range(k):
        pr = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pr is None:
            continue
        aug[r], aug[pr] = aug[pr], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [a * inv for a in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivot_cols.append(c)
        r += 1
        if r == m:
            break
    # consistency
    for i in range(r, m):
        if aug[i][k] != 0:
            return None
    coords = [Fraction(0)] * k
    for row_idx, c in enumerate(pivot_cols):
        coords[c] = aug[row_idx][k]
    return coords


def coords_in_basis(basis, target):
    """Rational coordinates of target over an independent basis, or None."""
    return _rational_coords(basis, target)


def highest_root(system: RootSystem) -> tuple[tuple, tuple]:
    """The highest root and its coefficient vector over the fundamentals."""
    best = max(system.roots, key=system.height)
    return best, system.simple_coords[best]


def levi_subsystem(system: RootSystem, subset) -> list[tuple]:
    """The roots supported on a subset of the fundamental roots.

    ``subset`` holds indices into the fundamental list.  Raises if an
    index is out of range.
    """
    subset = sorted(set(subset))
    if any(not 0 <= j < system.rank for j in subset):
        raise ValueError("subset must index fundamental roots")
    chosen = set(subset)
    out = []
    for r in system.roots:
        coords = system.simple_coords[r]
        if all(c == 0 or i in chosen for i, c in enumerate(coords)):
            out.append(r)
    return out


def omega_fixed_roots(system: RootSystem) -> list[tuple]:
    """Positive roots whose coordinate survives conjugation by every h_s(-1).

    That conjugation scales the root element of r by (-1)^<r, s>, so the
    fixed set is { r in Phi+ : <r, s> even for all s in Phi }.
    """
    out = []
    for r in system.positive_roots():
        if all(pairing(r, s) % 2 == 0 for s in system.roots):
            out.append(r)
    return sorted(out)


def is_closed_abelian(system: RootSystem, subset) -> bool:
    """Whether no sum of two members (repeats allowed) is again a root."""
    chosen = list(subset)
    root_set = set(system.roots)
    for r in chosen:
        if r not in root_set:
            raise ValueError(f"{r} is not a root")
    for i, r in enumerate(chosen):
        for s in chosen[i:]:
            if tuple(a + b for a, b in zip(r, s)) in root_set:
                return False
    return True
