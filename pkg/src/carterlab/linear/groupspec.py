"""The group-spec mini-language.

Grammar (case-sensitive names, whitespace ignored):

    Sym(n) | Alt(n)
    SL(n,q) | GL(n,q) | Sp(n,q) | SU(3,q) | GU(3,q)      -- on nonzero vectors
    PSL(n,q) | PGL(n,q) | PSp(n,q) | PSU(3,q)            -- on projective points
    PGammaL(n,q)                                          -- PGL extended by Frobenius
    Ext(<spec>, frob[^j])                                 -- extend by a Frobenius power
    Ext(<spec>, graph)                                    -- extend by the duality
    W(<type><rank>)                                       -- Weyl group on roots, e.g. W(E6)
    File(<path>)                                          -- JSON generator file

``Ext(..., graph)`` realizes the inner group on points plus hyperplanes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..permgrp.group import PermGroup
from ..permgrp.io import load_group
from .classical import ClassicalGroupSpec
from .projective import (ProjectiveAction, extend_by_autos, frobenius_perm,
                         graph_auto_perm, linear_rep, projective_rep)


class GroupSpecError(ValueError):
    """Malformed group spec; the message names the offending production."""


@dataclass
class RealizedGroup:
    label: str
    group: PermGroup
    action: ProjectiveAction | None = None   # set for matrix realizations
    inner: PermGroup | None = None           # the unextended group, for Ext/PGammaL
    auto: object = None                       # the extending permutation


_CALL_RE = re.compile(r"^\s*([A-Za-z]+)\s*\((.*)\)\s*$", re.S)


def _split_args(body: str) -> list[str]:
    args, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GroupSpecError("unbalanced parentheses in group spec")
        if ch == "," and depth == 0:
            args.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur or args:
        args.append("".join(cur))
    if depth != 0:
        raise GroupSpecError("unbalanced parentheses in group spec")
    return [a.strip() for a in args]


def _int_arg(text: str, production: str) -> int:
    if not re.fullmatch(r"\d+", text):
        raise GroupSpecError(f"expected an integer in {production}, got {text!r}")
    return int(text)


def realize(spec_text: str, need_hyperplanes: bool = False) -> RealizedGroup:
    """Parse and build a group spec; raises GroupSpecError on bad syntax."""
    m = _CALL_RE.match(spec_text)
    if not m:
        raise GroupSpecError(
            f"group spec must look like Name(args): {spec_text!r}")
    name, body = m.group(1), m.group(2)
    args = _split_args(body)

    if name in ("Sym", "Alt"):
        n = _int_arg(_only(args, name), name)
        G = PermGroup.symmetric(n) if name == "Sym" else PermGroup.alternating(n)
        return RealizedGroup(f"{name}({n})", G)

    if name in ("SL", "GL", "Sp", "SU", "GU", "PSL", "PGL", "PSp", "PSU", "PGU"):
        if len(args) != 2:
            raise GroupSpecError(f"{name}(n,q) takes two arguments")
        n, q = _int_arg(args[0], name), _int_arg(args[1], name)
        projective = name.startswith("P")
        family = name[1:] if projective else name
        family = {"SL": "SL", "GL": "GL", "Sp": "Sp", "SU": "SU", "GU": "GU"}[family]
        try:
            cspec = ClassicalGroupSpec(family, n, q)
            action = (projective_rep(cspec, include_hyperplanes=need_hyperplanes)
                      if projective else linear_rep(cspec))
        except ValueError as exc:
            raise GroupSpecError(f"{name}({n},{q}): {exc}") from exc
        return RealizedGroup(f"{name}({n},{q})", action.group(), action=action)

    if name == "PGammaL":
        if len(args) != 2:
            raise GroupSpecError("PGammaL(n,q) takes two arguments")
        n, q = _int_arg(args[0], name), _int_arg(args[1], name)
        inner = realize(f"PGL({n},{q})", need_hyperplanes=need_hyperplanes)
        frob = frobenius_perm(inner.action)
        G = extend_by_autos(inner.group, [frob])
        return RealizedGroup(f"PGammaL({n},{q})", G, action=inner.action,
                             inner=inner.group, auto=frob)

    if name == "Ext":
        if len(args) != 2:
            raise GroupSpecError("Ext(<spec>, frob[^j] | graph) takes two arguments")
        mode = args[1].strip()
        graph = mode == "graph"
        inner = realize(args[0], need_hyperplanes=need_hyperplanes or graph)
        if inner.action is None:
            raise GroupSpecError("Ext requires a matrix-realized inner group")
        if graph:
            auto = graph_auto_perm(inner.action)
        else:
            fm = re.fullmatch(r"frob(?:\^(\d+))?", mode)
            if not fm:
                raise GroupSpecError(f"unknown Ext automorphism {mode!r}")
            j = int(fm.group(1) or 1)
            auto = frobenius_perm(inner.action) ** j
        G = extend_by_autos(inner.group, [auto])
        return RealizedGroup(f"Ext({inner.label}, {mode})", G,
                             action=inner.action, inner=inner.group, auto=auto)

    if name == "W":
        text = _only(args, "W").replace(" ", "")
        wm = re.fullmatch(r"([A-G])(\d+)", text)
        if not wm:
            raise GroupSpecError(f"W(<type><rank>) expects e.g. W(E6), got {text!r}")
        from ..rootsys import root_system, weyl_group
        Phi = root_system(wm.group(1), int(wm.group(2)))
        return RealizedGroup(f"W({text})", weyl_group(Phi).perm_group)

    if name == "File":
        path = _only(args, "File").strip()
        return RealizedGroup(f"File({path})", load_group(path))

    raise GroupSpecError(f"unknown group constructor {name!r}")


def _only(args: list[str], production: str) -> str:
    if len(args) != 1:
        raise GroupSpecError(f"{production}(...) takes one argument")
    return args[0]


def realize_group(spec_text: str) -> PermGroup:
    return realize(spec_text).group
