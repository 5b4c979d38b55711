"""Permutation groups with a base and strong generating set.

The chain is built by the deterministic Schreier-Sims procedure: no
randomisation, so a fixed generator list always yields the same base,
the same transversals and therefore bit-identical downstream reports.
Base points are chosen as the first point moved by the first generator,
then the first point moved by the current stabilizer (an optional
``base_hint`` is consulted first, which lets callers rebase a group or
cross-check orders from independent bases).

Transversals are stored as explicit permutations together with their
inverses; at desk scale (degree <= a few hundred) this is cheaper than
Schreier vectors and makes sifting allocation-free.
"""

from __future__ import annotations

from .perm import Perm


class DegreeMismatchError(ValueError):
    pass


class _Level:
    __slots__ = ("beta", "gens", "transversal", "inverse")

    def __init__(self, beta: int, degree: int):
        self.beta = beta
        self.gens: list[Perm] = []
        ident = Perm.identity(degree)
        self.transversal = {beta: ident}
        self.inverse = {beta: ident}

    def extend_orbit(self):
        """Grow the orbit/transversal after new generators were added."""
        frontier = list(self.transversal)
        while frontier:
            new_frontier = []
            for p in frontier:
                u = self.transversal[p]
                for s in self.gens:
                    q = s[p]
                    if q not in self.transversal:
                        v = u * s
                        self.transversal[q] = v
                        self.inverse[q] = v.inverse()
                        new_frontier.append(q)
            frontier = new_frontier


class PermGroup:
    """Immutable permutation group; safe to share across threads."""

    def __init__(self, generators, degree: int, base_hint=None):
        gens = []
        for g in generators:
            if len(g) != degree:
                raise DegreeMismatchError(
                    f"generator degree {len(g)} != group degree {degree}")
            g = g if isinstance(g, Perm) else Perm(g)
            if not g.is_identity() and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._levels: list[_Level] = []
        self._base_hint = tuple(base_hint) if base_hint is not None else ()
        self._order = None
        self._schreier_sims()

    # -- construction ------------------------------------------------

    @classmethod
    def trivial(cls, degree: int) -> PermGroup:
        return cls((), degree)

    @classmethod
    def symmetric(cls, n: int) -> PermGroup:
        if n <= 1:
            return cls.trivial(max(n, 1))
        gens = [Perm.from_cycles(n, [tuple(range(n))]), Perm.from_cycles(n, [(0, 1)])]
        return cls(gens, n)

    @classmethod
    def alternating(cls, n: int) -> PermGroup:
        if n <= 2:
            return cls.trivial(max(n, 1))
        gens = [Perm.from_cycles(n, [(0, 1, 2)])]
        if n > 3:
            long = tuple(range(n)) if n % 2 else tuple(range(1, n))
            gens.append(Perm.from_cycles(n, [long]))
        return cls(gens, n)

    @classmethod
    def cyclic(cls, g: Perm) -> PermGroup:
        return cls((g,), len(g))

    def _pick_base_point(self, g: Perm) -> int:
        used = {lv.beta for lv in self._levels}
        for b in self._base_hint:
            if g[b] != b and b not in used:
                return b
        for i, j in enumerate(g):
            if i != j and i not in used:
                return i
        raise AssertionError("generator fixes every available point")

    def _insert_generator(self, g: Perm) -> int:
        """Register g at every level whose base-point prefix it fixes.

        Returns the deepest level that received g (the first level whose
        base point g moves, extending the base when g fixes all of it).
        """
        m = 0
        while m < len(self._levels) and g[self._levels[m].beta] == self._levels[m].beta:
            m += 1
        if m == len(self._levels):
            self._levels.append(_Level(self._pick_base_point(g), self.degree))
        for i in range(m + 1):
            self._levels[i].gens.append(g)
            self._levels[i].extend_orbit()
        return m

    def _strip(self, g: Perm, start: int = 0):
        """Sift g through levels >= start; return (residue, stop level)."""
        for i in range(start, len(self._levels)):
            lv = self._levels[i]
            p = g[lv.beta]
            if p not in lv.transversal:
                return g, i
            g = g * lv.inverse[p]
        return g, len(self._levels)

    def _schreier_sims(self):
        for g in self.generators:
            self._insert_generator(g)
        i = len(self._levels) - 1
        while i >= 0:
            lv = self._levels[i]
            complete = True
            for p in sorted(lv.transversal):
                u = lv.transversal[p]
                for s in lv.gens:
                    q = s[p]
                    schreier = u * s * lv.inverse[q]
                    if schreier.is_identity():
                        continue
                    residue, _ = self._strip(schreier, i + 1)
                    if not residue.is_identity():
                        i = self._insert_generator(residue)
                        complete = False
                        break
                if not complete:
                    break
            if complete:
                i -= 1

    # -- queries -----------------------------------------------------

    def order(self) -> int:
        if self._order is None:
            n = 1
            for lv in self._levels:
                n *= len(lv.transversal)
            self._order = n
        return self._order

    @property
    def base(self) -> tuple:
        return tuple(lv.beta for lv in self._levels)

    @property
    def strong_generators(self) -> tuple:
        seen = []
        for lv in self._levels:
            for g in lv.gens:
                if g not in seen:
                    seen.append(g)
        return tuple(seen)

    def basic_orbits(self) -> list[list[int]]:
        return [sorted(lv.transversal) for lv in self._levels]

    def sift(self, g: Perm) -> Perm:
        if len(g) != self.degree:
            raise DegreeMismatchError(f"degree {len(g)} != {self.degree}")
        residue, _ = self._strip(g if isinstance(g, Perm) else Perm(g))
        return residue

    def __contains__(self, g) -> bool:
        return self.sift(g).is_identity()

    def contains(self, g) -> bool:
        return g in self

    def is_subgroup_of(self, other: PermGroup) -> bool:
        return self.degree == other.degree and all(g in other for g in self.generators)

    def same_group_as(self, other: PermGroup) -> bool:
        return self.order() == other.order() and self.is_subgroup_of(other)

    def is_trivial(self) -> bool:
        return not self.generators

    def identity(self) -> Perm:
        return Perm.identity(self.degree)

    def elements(self):
        """Iterate all elements, deterministically, via transversal products.

        Every element factors uniquely as u_(k-1) * ... * u_1 * u_0 with
        u_i drawn from the level-i transversal (deeper factors first, so
        the level-0 representative acts last).
        """
        def rec(i):
            if i == len(self._levels):
                yield Perm.identity(self.degree)
                return
            lv = self._levels[i]
            points = sorted(lv.transversal)
            for h in rec(i + 1):
                for p in points:
                    yield h * lv.transversal[p]
        return rec(0)

    def random_element(self, rng) -> Perm:
        """Uniformly random element: one transversal representative per level."""
        g = Perm.identity(self.degree)
        for lv in reversed(self._levels):
            points = sorted(lv.transversal)
            g = g * lv.transversal[points[rng.randrange(len(points))]]
        return g

    def natural_orbits(self) -> list[list[int]]:
        """Orbits of the group on its domain (an invariant under conjugation)."""
        seen = [False] * self.degree
        orbits = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = [start]
            seen[start] = True
            queue = [start]
            while queue:
                p = queue.pop()
                for s in self.generators:
                    q = s[p]
                    if not seen[q]:
                        seen[q] = True
                        orbit.append(q)
                        queue.append(q)
            orbits.append(sorted(orbit))
        return orbits

    def orbit_signature(self) -> tuple:
        return tuple(sorted(len(o) for o in self.natural_orbits()))

    def rebase(self, base) -> PermGroup:
        return PermGroup(self.generators, self.degree, base_hint=base)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order()})"


def group_from_generators(gens, degree: int) -> PermGroup:
    return PermGroup(gens, degree)
