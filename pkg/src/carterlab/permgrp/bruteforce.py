"""Exhaustive oracles: closure counts and full-group scans.

These are the reference implementations the fast engine is tested
against. They enumerate whole groups (or whole subgroup lattices), so
they are only usable on small inputs; every function takes a hard cap
and refuses to run past it rather than silently grinding.
"""

from __future__ import annotations

from .perm import Perm
from .group import PermGroup


class OracleCapExceeded(RuntimeError):
    pass


def closure(gens, degree: int, cap: int = 200_000) -> set:
    """All elements of <gens> by breadth-first multiplication."""
    seen = {Perm.identity(degree)}
    frontier = list(seen)
    while frontier:
        new = []
        for g in frontier:
            for s in gens:
                h = g * s
                if h not in seen:
                    seen.add(h)
                    new.append(h)
                    if len(seen) > cap:
                        raise OracleCapExceeded(f"closure larger than {cap}")
        frontier = new
    return seen


def closure_order(gens, degree: int, cap: int = 200_000) -> int:
    return len(closure(gens, degree, cap))


def brute_normalizer(G: PermGroup, H: PermGroup, cap: int = 20_000) -> PermGroup:
    """N_G(H) by scanning every element of G."""
    if G.order() > cap:
        raise OracleCapExceeded(f"|G| = {G.order()} > {cap}")
    gens = []
    for g in G.elements():
        if all(h.conjugate(g) in H for h in H.generators):
            gens.append(g)
    return PermGroup(gens, G.degree)


def brute_centralizer(G: PermGroup, xs, cap: int = 20_000) -> PermGroup:
    """C_G(xs) by scanning every element of G; xs is a Perm or iterable."""
    if isinstance(xs, Perm):
        xs = [xs]
    xs = list(xs)
    if G.order() > cap:
        raise OracleCapExceeded(f"|G| = {G.order()} > {cap}")
    gens = [g for g in G.elements() if all(x * g == g * x for x in xs)]
    return PermGroup(gens, G.degree)


def brute_conjugator(G: PermGroup, x: Perm, y: Perm, cap: int = 20_000):
    """Some g in G with x^g = y, or None."""
    if G.order() > cap:
        raise OracleCapExceeded(f"|G| = {G.order()} > {cap}")
    for g in G.elements():
        if x.conjugate(g) == y:
            return g
    return None


def brute_subgroup_conjugator(G: PermGroup, H1: PermGroup, H2: PermGroup,
                              cap: int = 20_000):
    if G.order() > cap:
        raise OracleCapExceeded(f"|G| = {G.order()} > {cap}")
    if H1.order() != H2.order():
        return None
    for g in G.elements():
        if all(h.conjugate(g) in H2 for h in H1.generators):
            return g
    return None


def all_subgroups(G: PermGroup, cap: int = 400):
    """Every subgroup of G as a frozenset of elements (G small)."""
    if G.order() > cap:
        raise OracleCapExceeded(f"|G| = {G.order()} > {cap}")
    elements = sorted(G.elements())
    ident = Perm.identity(G.degree)
    found = {frozenset([ident])}
    frontier = [frozenset([ident])]
    while frontier:
        new = []
        for sub in frontier:
            for x in elements:
                if x in sub:
                    continue
                bigger = frozenset(closure(list(sub) + [x], G.degree))
                if bigger not in found:
                    found.add(bigger)
                    new.append(bigger)
        frontier = new
    return found


def brute_carter_classes(G: PermGroup, cap: int = 400):
    """Carter subgroups of a small G by full subgroup-lattice scan.

    Returns conjugacy-class representatives (each a PermGroup).
    """
    subs = all_subgroups(G, cap)
    elements = list(G.elements())
    carter = []
    for sub in subs:
        H = PermGroup([g for g in sub if not g.is_identity()], G.degree)
        if not _brute_nilpotent(sub, G.degree):
            continue
        norm = sum(1 for g in elements
                   if all(h.conjugate(g) in sub for h in sub))
        if norm == len(sub):
            carter.append((sub, H))
    reps = []
    classed = set()
    for sub, H in sorted(carter, key=lambda t: sorted(t[0])):
        if sub in classed:
            continue
        reps.append(H)
        for g in elements:
            classed.add(frozenset(h.conjugate(g) for h in sub))
    return reps


def _brute_nilpotent(element_set, degree: int) -> bool:
    """Nilpotent iff, for each prime p, the p-elements number exactly |H|_p."""
    n = len(element_set)
    orders = [g.order() for g in element_set]
    for p in _prime_factors(n):
        p_part = 1
        m = n
        while m % p == 0:
            p_part *= p
            m //= p
        count = sum(1 for o in orders if _is_power_of(o, p))
        if count != p_part:
            return False
    return True


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def _prime_factors(n: int) -> list[int]:
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
