"""Weyl groups on roots, diagram twists, twisted conjugacy, torus orders.

A Weyl element lives in two coordinated forms: a permutation of the
sorted root list, and an integer matrix over the fundamental-root
lattice basis.  Twists are lattice automorphisms given by a Dynkin
diagram symmetry; twisted conjugacy w2 ~ w^-1 w2 w^tau is computed
exhaustively over the whole group (capped at |W(E6)| = 51840), so class
sizes certify completeness by summing to |W|.

A finite torus obtained by twisting with tau*w has order
|det(q*M - I)| with M the lattice matrix of tau*w; the determinant is
basis-independent, so the fundamental-root basis is as good as any.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..permgrp.perm import Perm
from ..permgrp.group import PermGroup
from .roots import RootSystem, pairing

F_CLASS_CAP = 51_840


@dataclass(frozen=True)
class WeylGroupRep:
    system: RootSystem
    simple_reflections: tuple      # Perm on the root list, one per fundamental
    perm_group: PermGroup

    def order(self) -> int:
        return self.perm_group.order()

    def root_image(self, w: Perm, r: tuple) -> tuple:
        return self.system.roots[w[self.system.index[r]]]

    def lattice_matrix(self, w: Perm) -> list[list[int]]:
        """Columns are the fundamental-basis coordinates of w(alpha_i)."""
        cols = []
        for alpha in self.system.simples:
            image = self.root_image(w, alpha)
            cols.append(self.system.simple_coords[image])
        return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


_WEYL_CACHE: dict = {}


def weyl_group(system: RootSystem) -> WeylGroupRep:
    key = (system.type_label, system.rank)
    if key not in _WEYL_CACHE:
        refs = []
        for alpha in system.simples:
            images = [system.index[system.reflect(r, alpha)] for r in system.roots]
            refs.append(Perm(images))
        _WEYL_CACHE[key] = WeylGroupRep(system, tuple(refs),
                                        PermGroup(refs, len(system.roots)))
    return _WEYL_CACHE[key]


@dataclass(frozen=True)
class Twist:
    """A lattice automorphism permuting the fundamental roots."""

    label: str
    system: RootSystem
    simple_map: tuple          # i -> image index among the fundamentals
    root_perm: Perm            # induced permutation of the root list
    order: int

    def matrix(self) -> list[list[int]]:
        rank = self.system.rank
        m = [[0] * rank for _ in range(rank)]
        for i, j in enumerate(self.simple_map):
            m[j][i] = 1
        return m

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.simple_map))


def _twist_from_simple_map(system: RootSystem, label: str, mapping) -> Twist:
    mapping = tuple(mapping)
    rank = system.rank
    # pairing preservation over the fundamentals
    for i in range(rank):
        for j in range(rank):
            a, b = system.simples[i], system.simples[j]
            ai, bj = system.simples[mapping[i]], system.simples[mapping[j]]
            if pairing(a, b) != pairing(ai, bj):
                raise ValueError(f"{label} does not preserve the Cartan pairing")
    images = []
    for r in system.roots:
        coords = system.simple_coords[r]
        out = None
        for i, c in enumerate(coords):
            term = tuple(c * a for a in system.simples[mapping[i]])
            out = term if out is None else tuple(x + y for x, y in zip(out, term))
        if out not in system.index:
            raise ValueError(f"{label} does not permute the roots")
        images.append(system.index[out])
    perm = Perm(images)
    order = 1
    cur = mapping
    ident = tuple(range(rank))
    while cur != ident:
        cur = tuple(mapping[i] for i in cur)
        order += 1
    return Twist(label, system, mapping, perm, order)


def identity_twist(system: RootSystem) -> Twist:
    return _twist_from_simple_map(system, "id", range(system.rank))


def flip_twist(system: RootSystem) -> Twist:
    """The order-2 diagram symmetry (A_n reversal, D_n leg swap, E6 flip)."""
    t, n = system.type_label, system.rank
    if t == "A" and n >= 2:
        mapping = tuple(n - 1 - i for i in range(n))
    elif t == "D":
        mapping = tuple(range(n - 2)) + (n - 1, n - 2)
    elif t == "E" and n == 6:
        mapping = (5, 1, 4, 3, 2, 0)
    else:
        raise ValueError(f"no order-2 diagram symmetry for {t}{n}")
    return _twist_from_simple_map(system, "flip", mapping)


def triality_twist(system: RootSystem) -> Twist:
    """The order-3 symmetry of the D4 diagram (diagram-level only)."""
    if (system.type_label, system.rank) != ("D", 4):
        raise ValueError("triality lives on D4")
    # chain is a1-a2-a3 with a4 on the center a2; rotate a1 -> a3 -> a4 -> a1
    return _twist_from_simple_map(system, "triality", (2, 1, 3, 0))


def twist_by_name(system: RootSystem, name: str) -> Twist:
    if name == "id":
        return identity_twist(system)
    if name == "flip":
        return flip_twist(system)
    if name == "triality":
        return triality_twist(system)
    raise ValueError(f"unknown twist {name!r}")


@dataclass(frozen=True)
class TorusClass:
    rep: Perm                 # class representative in the root permutation
    rep_word: tuple           # indices of simple reflections, shortest-first
    size: int                 # twisted-conjugacy class size
    order_poly: tuple         # integer coefficients, low degree first

    def order_at(self, q: int) -> int:
        return abs(sum(c * q ** i for i, c in enumerate(self.order_poly)))


def element_words(W: WeylGroupRep) -> dict:
    """Shortest (then lexicographically least) words for every element."""
    ident = W.perm_group.identity()
    words = {ident: ()}
    frontier = [ident]
    while frontier:
        new = []
        for w in frontier:
            base = words[w]
            for i, s in enumerate(W.simple_reflections):
                nxt = w * s
                if nxt not in words:
                    words[nxt] = base + (i,)
                    new.append(nxt)
        frontier = new
    return words


def f_conjugacy_classes(W: WeylGroupRep, tau: Twist) -> list[TorusClass]:
    """Orbits of w2 -> w^-1 w2 w^tau over all of W, with order polynomials."""
    if tau.system is not W.system and tau.system != W.system:
        raise ValueError("twist belongs to a different root system")
    if W.order() > F_CLASS_CAP:
        raise ValueError(f"|W| = {W.order()} beyond the exhaustive cap {F_CLASS_CAP}")
    t = tau.root_perm
    t_inv = t.inverse()
    twisted_gens = [(s.inverse(), t_inv * s * t) for s in W.simple_reflections]
    words = element_words(W)
    unassigned = set(words)
    classes = []
    while unassigned:
        x = min(unassigned)
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for s_inv, s_tau in twisted_gens:
                z = s_inv * y * s_tau
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        unassigned -= orbit
        rep = min(orbit, key=lambda e: (len(words[e]), words[e]))
        classes.append(TorusClass(
            rep=rep,
            rep_word=words[rep],
            size=len(orbit),
            order_poly=order_polynomial(W, rep, tau),
        ))
    classes.sort(key=lambda c: (c.size, c.rep_word))
    assert sum(c.size for c in classes) == W.order()
    return classes


def order_polynomial(W: WeylGroupRep, w: Perm, tau: Twist) -> tuple:
    """Coefficients of det(q*M(tau w) - I), sign-normalized positive at q >> 0."""
    Mw = W.lattice_matrix(w)
    Mt = tau.matrix()
    rank = len(Mw)
    M = [[sum(Mt[i][k] * Mw[k][j] for k in range(rank)) for j in range(rank)]
         for i in range(rank)]
    # det(qM - I) = det(M) * charpoly_{M^-1}(q); M^-1 is the matrix of (tau w)^-1
    w_inv = w.inverse()
    Mw_inv = W.lattice_matrix(w_inv)
    Mt_inv = tau_inverse_matrix(tau)
    Minv = [[sum(Mw_inv[i][k] * Mt_inv[k][j] for k in range(rank)) for j in range(rank)]
            for i in range(rank)]
    det_m = _int_det(M)
    coeffs = _charpoly(Minv)        # monic, low degree first
    poly = tuple(det_m * c for c in coeffs)
    if poly[-1] < 0:
        poly = tuple(-c for c in poly)
    return poly


def tau_inverse_matrix(tau: Twist) -> list[list[int]]:
    rank = tau.system.rank
    inv_map = [0] * rank
    for i, j in enumerate(tau.simple_map):
        inv_map[j] = i
    m = [[0] * rank for _ in range(rank)]
    for i, j in enumerate(inv_map):
        m[j][i] = 1
    return m


def torus_order(W: WeylGroupRep, w: Perm, tau: Twist, q: int) -> int:
    """|det(q*M(tau w) - I)| evaluated at an integer q >= 2."""
    if q < 2:
        raise ValueError("q must be at least 2")
    poly = order_polynomial(W, w, tau)
    return abs(sum(c * q ** i for i, c in enumerate(poly)))


def _int_det(m) -> int:
    from fractions import Fraction
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for c in range(n):
        pr = next((r for r in range(c, n) if a[r][c] != 0), None)
        if pr is None:
            return 0
        if pr != c:
            a[c], a[pr] = a[pr], a[c]
            det = -det
        det *= a[c][c]
        inv = 1 / a[c][c]
        for r in range(c + 1, n):
            if a[r][c] != 0:
                f = a[r][c] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    assert det.denominator == 1
    return int(det)


def _charpoly(m) -> tuple:
    """Monic characteristic polynomial det(qI - m), low degree first
    (Faddeev-LeVerrier; exact for integer matrices)."""
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for i in range(n):
        Mk[i][i] = 1
    a = m
    prev = Mk
    for k in range(1, n + 1):
        AM = [[sum(a[i][t] * prev[t][j] for t in range(n)) for j in range(n)]
              for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        assert tr % k == 0
        c = -(tr // k)
        coeffs[n - k] = c
        prev = [[AM[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return tuple(coeffs)
