"""Sylow subgroups by p-subgroup ascent, and nilpotency tests.

The ascent uses the standard fact that a p-subgroup H with |H| < |G|_p
has p dividing |N_G(H) : H|, so some p-element of the normalizer grows
H.  Candidate elements are drawn uniformly from the normalizer with a
seeded generator (results are seed-independent: any run returns a
Sylow p-subgroup; only which one may differ), with a deterministic
full-enumeration fallback should sampling ever stall.
"""

from __future__ import annotations

import random

from .perm import Perm
from .group import PermGroup
from .search import subgroup_normalizer

DEFAULT_SEED = 0
_SAMPLE_TRIES = 4096
_ELEMENT_COUNT_CAP = 60_000


def set_default_seed(seed: int):
    """Override the module default used by seeded internals (CLI --seed)."""
    global DEFAULT_SEED
    DEFAULT_SEED = seed


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def _p_element_part(g: Perm, p: int) -> Perm:
    """The p-part of g: g raised to the p'-part of its order."""
    o = g.order()
    return g ** (o // p_part(o, p))


def sylow_subgroup(G: PermGroup, p: int, seed: int | None = None) -> PermGroup:
    """A Sylow p-subgroup of G (trivial if p does not divide |G|)."""
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order(), p)
    if target == 1:
        return PermGroup.trivial(G.degree)
    rng = random.Random(DEFAULT_SEED if seed is None else seed)
    H = PermGroup.trivial(G.degree)
    while H.order() < target:
        N = G if H.is_trivial() else subgroup_normalizer(G, H)
        grown = _grow_by_p_element(N, H, p, rng)
        if grown is None:
            raise AssertionError("p-ascent stalled below the Sylow order")
        H = grown
    assert H.order() == target
    return H


def _grow_by_p_element(N: PermGroup, H: PermGroup, p: int, rng):
    """Some <H, z> with z a p-element of N outside H, or None if p | |N:H| fails."""
    for _ in range(_SAMPLE_TRIES):
        z = _p_element_part(N.random_element(rng), p)
        if not z.is_identity() and z not in H:
            return PermGroup(H.generators + (z,), N.degree)
    for y in N.elements():  # deterministic fallback
        z = _p_element_part(y, p)
        if not z.is_identity() and z not in H:
            return PermGroup(H.generators + (z,), N.degree)
    return None


def is_nilpotent(H: PermGroup, cross_validate: bool = False) -> bool:
    """Whether H is nilpotent.

    Default route: H is nilpotent iff every Sylow subgroup is normal,
    tested by counting p-elements (the count equals |H|_p exactly when
    the Sylow p-subgroup is unique).  With ``cross_validate`` the lower
    central series is computed as well and the two answers must agree.
    """
    by_counts = _nilpotent_by_element_counts(H)
    if cross_validate:
        by_lcs = lower_central_series(H)[-1].order() == 1
        if by_counts != by_lcs:
            raise AssertionError("nilpotency characterizations disagree")
    return by_counts


def _nilpotent_by_element_counts(H: PermGroup) -> bool:
    n = H.order()
    if n == 1:
        return True
    if n > _ELEMENT_COUNT_CAP:
        return _nilpotent_by_normal_sylows(H)
    counts = {p: 0 for p in prime_factors(n)}
    for g in H.elements():
        o = g.order()
        for p in counts:
            if p_part(o, p) == o:
                counts[p] += 1
    return all(counts[p] == p_part(n, p) for p in counts)


def _nilpotent_by_normal_sylows(H: PermGroup) -> bool:
    for p in prime_factors(H.order()):
        S = sylow_subgroup(H, p)
        for g in H.generators:
            if any(s.conjugate(g) not in S for s in S.generators):
                return False
    return True


def normal_closure(G: PermGroup, seed_gens) -> PermGroup:
    """The normal closure of <seed_gens> in G."""
    gens = [g for g in seed_gens if not g.is_identity()]
    closure = PermGroup(gens, G.degree)
    frontier = list(gens)
    while frontier:
        new = []
        for h in frontier:
            for s in G.generators:
                c = h.conjugate(s)
                if c not in closure:
                    gens.append(c)
                    closure = PermGroup(gens, G.degree)
                    new.append(c)
        frontier = new
    return closure


def commutator_subgroup(G: PermGroup, A: PermGroup, B: PermGroup) -> PermGroup:
    """[A, B] as a subgroup of G (normal closure of generator commutators)."""
    comms = []
    for a in A.generators:
        a_inv = a.inverse()
        for b in B.generators:
            c = a_inv * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def lower_central_series(G: PermGroup) -> list[PermGroup]:
    """G = gamma_1 >= gamma_2 = [G, gamma_1] >= ... until it stabilizes."""
    series = [G]
    while True:
        nxt = commutator_subgroup(G, G, series[-1])
        if nxt.order() == series[-1].order():
            break
        series.append(nxt)
        if nxt.order() == 1:
            break
    return series
