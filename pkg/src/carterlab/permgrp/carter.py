"""Carter subgroups: exhaustive search, witness checks, Sylow-2 criterion.

A Carter subgroup is a nilpotent self-normalizing subgroup.  The search
enumerates nilpotent subgroups up to conjugacy by breadth-first cyclic
extension: starting from the trivial subgroup, a class representative H
is extended by every element x of prime order modulo H drawn from
N_G(H) with <H, x> still nilpotent.  This reaches every Carter subgroup
because a proper subgroup of a nilpotent K never equals its normalizer
in K, so K grows from the trivial subgroup through such prime steps.
Self-normalizing nodes are exactly the Carter classes.

Two economies keep this desk-sized: extension candidates are taken up
to N_G(H)-conjugacy (conjugate candidates give G-conjugate extensions,
since they fix H), and class deduplication buckets subgroups by
(order, element-order multiset) before running a conjugacy search.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .group import PermGroup
from .search import (are_conjugate_subgroups, conjugacy_classes,
                     subgroup_centralizer, subgroup_normalizer)
from .sylow import is_nilpotent, p_part, sylow_subgroup

FULL_SEARCH_CAP = 100_000
_CANDIDATE_ENUM_CAP = 120_000


class SearchCapError(RuntimeError):
    """Raised when a full Carter search would exceed the configured cap."""


@dataclass
class SubgroupClassSet:
    """Conjugacy classes of subgroups of a common parent."""

    parent: PermGroup
    representatives: list[PermGroup] = field(default_factory=list)

    @property
    def class_count(self) -> int:
        return len(self.representatives)


def is_carter_witness(G: PermGroup, K: PermGroup) -> bool:
    """Whether K is nilpotent and self-normalizing in G.

    Usable far beyond the full-search cap: only one normalizer run.
    """
    if not K.is_subgroup_of(G):
        raise ValueError("K is not a subgroup of G")
    if not is_nilpotent(K):
        return False
    return subgroup_normalizer(G, K).order() == K.order()


def _order_multiset(H: PermGroup) -> tuple:
    return tuple(sorted(g.order() for g in H.elements()))


class _ClassLedger:
    """Subgroup classes bucketed by cheap invariants, decided by conjugacy."""

    def __init__(self, G: PermGroup):
        self.G = G
        self.buckets: dict[tuple, list[PermGroup]] = {}

    def register(self, H: PermGroup) -> bool:
        """Record H's class; True if it was new."""
        key = (H.order(), H.orbit_signature(), _order_multiset(H))
        bucket = self.buckets.setdefault(key, [])
        for rep in bucket:
            if are_conjugate_subgroups(self.G, rep, H) is not None:
                return False
        bucket.append(H)
        return True


def _prime_order_candidates(N: PermGroup, H: PermGroup):
    """Elements of N of prime order modulo H, up to N-conjugacy.

    Deterministic: candidates are collected in enumeration order and
    orbit representatives are the least element of each N-class.
    """
    h_order = H.order()
    candidates = set()
    for y in N.elements():
        if y in H:
            continue
        o = y.order()
        step = None
        for m in sorted(_divisors(o)):
            if m > 1 and (y ** m) in H:
                step = m
                break
        if step is not None and _is_prime(step):
            candidates.add(y)
    # orbit-partition the candidate set under conjugation by N
    reps = []
    remaining = set(candidates)
    gens = N.generators
    while remaining:
        x = min(remaining)
        orbit = {x}
        queue = [x]
        while queue:
            z = queue.pop()
            for s in gens:
                w = z.conjugate(s)
                if w in remaining and w not in orbit:
                    orbit.add(w)
                    queue.append(w)
        remaining -= orbit
        reps.append(x)
    return reps


def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    out += [n // d for d in reversed(out) if d * d != n]
    return out


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


def carter_subgroups(G: PermGroup, cap: int = FULL_SEARCH_CAP) -> SubgroupClassSet:
    """All conjugacy classes of Carter subgroups of G, by exhaustive search."""
    if G.order() > cap:
        raise SearchCapError(
            f"|G| = {G.order()} exceeds the full-search cap {cap}; "
            "use is_carter_witness for single candidates")
    ledger = _ClassLedger(G)
    trivial = PermGroup.trivial(G.degree)
    ledger.register(trivial)
    queue = deque([trivial])
    carter_reps = []
    while queue:
        H = queue.popleft()
        N = G if H.is_trivial() else subgroup_normalizer(G, H)
        if N.order() == H.order():
            carter_reps.append(H)     # nilpotent and self-normalizing
            continue
        if H.is_trivial():
            # first layer: prime-order class representatives of G itself
            reps = [rep for rep, _ in conjugacy_classes(G) if _is_prime(rep.order())]
        else:
            if N.order() > _CANDIDATE_ENUM_CAP:
                raise SearchCapError(
                    f"normalizer order {N.order()} exceeds enumeration cap")
            reps = _prime_order_candidates(N, H)
        for x in reps:
            K = PermGroup(H.generators + (x,), G.degree)
            if not is_nilpotent(K):
                continue
            if ledger.register(K):
                queue.append(K)
    result = SubgroupClassSet(G)
    for rep in sorted(carter_reps, key=lambda R: (R.order(), _order_multiset(R))):
        result.representatives.append(rep)
    return result


def check_syl2_criterion(G: PermGroup, seed: int | None = None) -> bool:
    """Whether N_G(S) = S * C_G(S) for S a Sylow 2-subgroup of G.

    S*C is a subgroup (C centralizes S), so the test compares orders of
    N_G(S) and <S, C_G(S)>.
    """
    S = sylow_subgroup(G, 2, seed=seed)
    if S.is_trivial():
        # odd-order G: N(1) = G = 1*C(1); the criterion is vacuously true
        return True
    N = subgroup_normalizer(G, S)
    C = subgroup_centralizer(G, S)
    SC = PermGroup(S.generators + C.generators, G.degree)
    return SC.order() == N.order()


def carter_class_containing_sylow2(classes: SubgroupClassSet) -> PermGroup | None:
    """The Carter representative holding a full Sylow 2-subgroup, if any."""
    g2 = p_part(classes.parent.order(), 2)
    for rep in classes.representatives:
        if p_part(rep.order(), 2) == g2:
            return rep
    return None
