"""Normalizers, centralizers and conjugacy via orbit-stabilizer runs.

Everything here rides the same mechanism: act by conjugation on a
hashable object (an element, a tuple of elements, or the full element
fingerprint of a subgroup), walk the orbit with transversal bookkeeping,
and harvest stabilizer generators through Schreier's lemma.  Schreier
generators are sifted into a growing subgroup and discarded when
redundant, which keeps generating sets small; when the stabilizer's
order is known in advance the harvest stops early.

Orbits are walked breadth-first with generators in a fixed order, so
every result (including returned conjugators) is deterministic.
"""

from __future__ import annotations

import math

from .perm import Perm
from .group import PermGroup


class SearchCapExceeded(RuntimeError):
    pass


SUBGROUP_FINGERPRINT_CAP = 10_000
CLASS_ENUMERATION_CAP = 1_000_000


class _StabilizerBuilder:
    """Accumulates Schreier generators, skipping ones already generated."""

    def __init__(self, degree: int, seed_gens=(), target_order: int | None = None):
        self.degree = degree
        self.gens = [g for g in seed_gens if not g.is_identity()]
        self.group = PermGroup(self.gens, degree)
        self.target = target_order

    def done(self) -> bool:
        return self.target is not None and self.group.order() >= self.target

    def add(self, g: Perm):
        if not g.is_identity() and g not in self.group:
            self.gens.append(g)
            self.group = PermGroup(self.gens, self.degree)


def _orbit_stabilizer(G: PermGroup, start, act, seed_gens=(),
                      target_order=None, stop_at=None, collect=True):
    """Generic conjugation-orbit walk.

    ``act(point, g)`` applies generator g; returns ``(stabilizer,
    orbit_transversal, hit)`` where ``hit`` is the transversal element
    reaching ``stop_at`` (if given; the walk stops there).  With
    ``collect=False`` no stabilizer is accumulated (pure orbit search).
    """
    gens = G.generators
    ident = Perm.identity(G.degree)
    transversal = {start: ident}
    queue = [start]
    builder = _StabilizerBuilder(G.degree, seed_gens, target_order) if collect else None
    while queue:
        next_queue = []
        for point in queue:
            u = transversal[point]
            for s in gens:
                image = act(point, s)
                known = transversal.get(image)
                if known is None:
                    v = u * s
                    if image == stop_at:
                        return None, transversal, v
                    transversal[image] = v
                    next_queue.append(image)
                elif collect and not builder.done():
                    builder.add(u * s * known.inverse())
        queue = next_queue
    if collect and builder.target is not None and not builder.done():
        # rare: deterministic Schreier order missed the target; rescan fully
        for point, u in list(transversal.items()):
            for s in gens:
                builder.add(u * s * transversal[act(point, s)].inverse())
                if builder.done():
                    break
            if builder.done():
                break
    return (builder.group if collect else None), transversal, None


def element_centralizer(G: PermGroup, x: Perm) -> PermGroup:
    """C_G(x); x need not lie in G (it must share G's degree)."""
    if len(x) != G.degree:
        raise ValueError("degree mismatch")
    stab, _, _ = _orbit_stabilizer(G, x, Perm.conjugate)
    return stab


def subgroup_centralizer(G: PermGroup, H) -> PermGroup:
    """C_G(H), by intersecting element centralizers of H's generators.

    Accepts a PermGroup or a single Perm.  Each step shrinks the acting
    group, so later orbits are cheap.
    """
    if isinstance(H, Perm):
        return element_centralizer(G, H)
    current = G
    for h in H.generators:
        current = element_centralizer(current, h)
    return current


def _fingerprint(H: PermGroup) -> frozenset:
    if H.order() > SUBGROUP_FINGERPRINT_CAP:
        raise SearchCapExceeded(
            f"subgroup order {H.order()} exceeds fingerprint cap "
            f"{SUBGROUP_FINGERPRINT_CAP}")
    return frozenset(H.elements())


def _conj_fingerprint(fp: frozenset, g: Perm) -> frozenset:
    return frozenset(x.conjugate(g) for x in fp)


def subgroup_normalizer(G: PermGroup, H: PermGroup) -> PermGroup:
    """N_G(H) by orbit-stabilizer on H's element fingerprint."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    if H.order() == G.order() or H.is_trivial():
        return G
    fp = _fingerprint(H)
    stab, _, _ = _orbit_stabilizer(G, fp, _conj_fingerprint,
                                   seed_gens=H.generators)
    return stab


def are_conjugate_elements(G: PermGroup, x: Perm, y: Perm):
    """A g in G with x^g = y, or None.  Prunes by cycle type."""
    if x not in G or y not in G:
        raise ValueError("elements must lie in G")
    if x == y:
        return Perm.identity(G.degree)
    if x.cycle_type() != y.cycle_type():
        return None
    _, _, hit = _orbit_stabilizer(G, x, Perm.conjugate, stop_at=y, collect=False)
    return hit


def are_conjugate_subgroups(G: PermGroup, H1: PermGroup, H2: PermGroup):
    """A g in G with H1^g = H2, or None.

    Prunes by order, natural-orbit signature and element-order multiset
    before walking the fingerprint orbit; pruning never changes answers.
    """
    for H in (H1, H2):
        if not H.is_subgroup_of(G):
            raise ValueError("not a subgroup of G")
    if H1.order() != H2.order():
        return None
    if H1.orbit_signature() != H2.orbit_signature():
        return None
    fp1, fp2 = _fingerprint(H1), _fingerprint(H2)
    if fp1 == fp2:
        return Perm.identity(G.degree)
    if sorted(x.order() for x in fp1) != sorted(x.order() for x in fp2):
        return None
    _, _, hit = _orbit_stabilizer(G, fp1, _conj_fingerprint, stop_at=fp2,
                                  collect=False)
    return hit


def conjugacy_classes(G: PermGroup):
    """All conjugacy classes as (representative, size), deterministically.

    Enumerates the group and partitions it by conjugation orbits; class
    sizes therefore certify completeness by summing to |G|.  The
    representative is the lexicographically least element of its class.
    Classes are sorted by (size, representative).
    """
    if G.order() > CLASS_ENUMERATION_CAP:
        raise SearchCapExceeded(
            f"|G| = {G.order()} exceeds class enumeration cap")
    unassigned = set(G.elements())
    gens = G.generators
    classes = []
    while unassigned:
        x = min(unassigned)
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for s in gens:
                z = y.conjugate(s)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        unassigned -= orbit
        classes.append((min(orbit), len(orbit)))
    classes.sort(key=lambda c: (c[1], c[0]))
    assert sum(size for _, size in classes) == G.order()
    return classes


def conjugacy_class_with_transversal(G: PermGroup, x: Perm):
    """The class of x as a dict element -> conjugating transversal perm."""
    _, transversal, _ = _orbit_stabilizer(G, x, Perm.conjugate, collect=False)
    return transversal


def element_centralizer_with_known_index(G: PermGroup, x: Perm,
                                         class_size: int) -> PermGroup:
    """C_G(x) when |x^G| is already known; stops harvesting early."""
    target = G.order() // class_size
    stab, _, _ = _orbit_stabilizer(G, x, Perm.conjugate, target_order=target)
    return stab


def centralizer_in_sym(n: int, cycle_type) -> tuple[list[Perm], int]:
    """Generators and order of C_Sym(n)(y) for the canonical y of a type.

    The canonical y lays its cycles out consecutively from point 0,
    shortest first, with fixed points at the end.  The centralizer is a
    direct product over distinct lengths l of Z_l wreath Sym(m_l), with
    the fixed points contributing Sym(m_0):  order = prod l^m_l * m_l!.
    """
    lengths = sorted(cycle_type)
    if any(l < 1 for l in lengths):
        raise ValueError("cycle lengths must be positive")
    if sum(lengths) > n:
        raise ValueError("cycle lengths exceed the degree")
    blocks = {}
    start = 0
    for l in lengths:
        blocks.setdefault(l, []).append(list(range(start, start + l)))
        start += l
    fixed = list(range(start, n))
    if fixed:
        blocks.setdefault(1, []).extend([[p] for p in fixed])

    gens = []
    order = 1
    for l, blist in sorted(blocks.items()):
        m = len(blist)
        order *= l ** m * math.factorial(m)
        if l > 1:
            gens.append(Perm.from_cycles(n, [tuple(blist[0])]))
        if m >= 2:
            gens.append(Perm.from_cycles(
                n, [tuple(pair) for pair in zip(blist[0], blist[1])]))
        if m >= 3:
            cycles = [tuple(blist[j][i] for j in range(m)) for i in range(l)]
            gens.append(Perm.from_cycles(n, cycles))
    return gens, order


def canonical_of_cycle_type(n: int, cycle_type) -> Perm:
    """The canonical permutation whose centralizer centralizer_in_sym builds."""
    lengths = sorted(cycle_type)
    if sum(lengths) > n:
        raise ValueError("cycle lengths exceed the degree")
    cycles = []
    start = 0
    for l in lengths:
        cycles.append(tuple(range(start, start + l)))
        start += l
    return Perm.from_cycles(n, cycles)
