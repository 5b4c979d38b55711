"""Quotient groups realized as permutations of right cosets.

For a normal N in G, the cosets Ng are labelled by their minimal
representative (the lexicographically least image tuple in the coset),
the domain is those labels sorted, and G acts by right multiplication.
Normality makes the action's kernel exactly N, so the image is a
faithful copy of G/N.
"""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Perm
from .group import PermGroup


class NotNormalError(ValueError):
    pass


class IndexCapExceeded(RuntimeError):
    pass


INDEX_CAP = 100_000


def is_normal(G: PermGroup, N: PermGroup) -> bool:
    return N.is_subgroup_of(G) and all(
        n.conjugate(g) in N for n in N.generators for g in G.generators)


@dataclass(frozen=True)
class QuotientProjection:
    """Maps elements/subgroups of G onto the coset realization of G/N."""

    G: PermGroup
    N: PermGroup
    quotient: PermGroup
    _keys: tuple          # coset labels, in domain order
    _coset_index: dict    # label -> domain point
    _N_elements: tuple

    def _coset_key(self, g: Perm) -> Perm:
        return min(n * g for n in self._N_elements)

    def element(self, g: Perm) -> Perm:
        if g not in self.G:
            raise ValueError("element not in G")
        return Perm(self._coset_index[self._coset_key(key * g)] for key in self._keys)

    def subgroup(self, H: PermGroup) -> PermGroup:
        return PermGroup([self.element(h) for h in H.generators], len(self._keys))

    def __call__(self, g: Perm) -> Perm:
        return self.element(g)


def quotient_group(G: PermGroup, N: PermGroup,
                   index_cap: int = INDEX_CAP) -> tuple[PermGroup, QuotientProjection]:
    """The quotient G/N as a faithful PermGroup, plus its projection map."""
    if not is_normal(G, N):
        raise NotNormalError("N is not a normal subgroup of G")
    index = G.order() // N.order()
    if index > index_cap:
        raise IndexCapExceeded(f"index {index} exceeds cap {index_cap}")
    n_elements = tuple(sorted(N.elements()))

    def coset_key(g: Perm) -> Perm:
        return min(n * g for n in n_elements)

    ident_key = coset_key(Perm.identity(G.degree))
    keys = {ident_key}
    frontier = [ident_key]
    while frontier:
        new = []
        for key in frontier:
            for s in G.generators:
                k2 = coset_key(key * s)
                if k2 not in keys:
                    keys.add(k2)
                    new.append(k2)
        frontier = new
    assert len(keys) == index
    ordered = tuple(sorted(keys))
    coset_index = {key: i for i, key in enumerate(ordered)}

    def act(g: Perm) -> Perm:
        return Perm(coset_index[coset_key(key * g)] for key in ordered)

    quotient = PermGroup([act(g) for g in G.generators], max(index, 1))
    assert quotient.order() == index
    projection = QuotientProjection(G, N, quotient, ordered, coset_index, n_elements)
    return quotient, projection
