"""The W(E6) centralizer scan for self-normalizing order-3 subgroups.

For every conjugacy class representative y of W(E6), the scan checks
that the centralizer C = C_W(y) contains no self-normalizing subgroup
of order 3.  Since N_C(<x>)/C_C(x) embeds in Aut(Z_3), the subgroup
<x> is self-normalizing exactly when C_C(x) = <x> and x is not
conjugate to x^2 within C; both facts fall out of the conjugation
orbits of the order-3 elements of C, so no subgroup-normalizer
machinery is needed per element.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..permgrp.group import PermGroup
from ..permgrp.perm import Perm
from ..permgrp.search import (conjugacy_classes,
                              element_centralizer_with_known_index)
from .roots import root_system
from .weyl import weyl_group


@dataclass
class ClassScanResult:
    class_rep: Perm
    class_size: int
    centralizer_order: int
    order3_subgroup_classes: int
    self_normalizing: list        # offending generators, empty on pass

    @property
    def passed(self) -> bool:
        return not self.self_normalizing


def scan_order3_self_normalizers(C: PermGroup) -> tuple[int, list[Perm]]:
    """(number of order-3 subgroup classes, offending generators) in C."""
    if C.order() % 3:
        return 0, []
    order3 = sorted(g for g in C.elements() if g.order() == 3)
    gens = C.generators
    remaining = set(order3)
    offenders = []
    n_classes = 0
    while remaining:
        x = min(remaining)
        orbit = {x}
        queue = [x]
        while queue:
            y = queue.pop()
            for s in gens:
                z = y.conjugate(s)
                if z not in orbit:
                    orbit.add(z)
                    queue.append(z)
        x_sq = x * x
        # <x> and <x^2> are the same subgroup; retire both element classes
        retired = set(orbit)
        if x_sq not in orbit:
            sq_orbit = {z * z for z in orbit}
            retired |= sq_orbit
        remaining -= retired
        n_classes += 1
        centralizer_order = C.order() // len(orbit)
        if centralizer_order == 3 and x_sq not in orbit:
            offenders.append(x)
    return n_classes, offenders


def e6_centralizer_scan() -> list[ClassScanResult]:
    """Run the scan over all conjugacy classes of W(E6)."""
    W = weyl_group(root_system("E", 6)).perm_group
    results = []
    for rep, size in conjugacy_classes(W):
        if size == 1:
            C = W
        else:
            C = element_centralizer_with_known_index(W, rep, size)
        assert C.order() == W.order() // size
        n_classes, offenders = scan_order3_self_normalizers(C)
        results.append(ClassScanResult(
            class_rep=rep,
            class_size=size,
            centralizer_order=C.order(),
            order3_subgroup_classes=n_classes,
            self_normalizing=offenders,
        ))
    return results
