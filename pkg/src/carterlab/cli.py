"""Command-line front end.

    carter-lab check run <id|all> [--tier quick|full] [--format json] [-j N]
    carter-lab carter <group-spec> [--cap N]
    carter-lab roots subsystems <type>
    carter-lab roots omega <type>
    carter-lab torus <type> [--twist id|flip|triality] --q <n>
    carter-lab group info <group-spec>

Exit codes: 0 all pass, 1 at least one fail, 2 usage or parse error,
3 search cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .linear.groupspec import GroupSpecError, realize
from .permgrp.carter import SearchCapError, carter_subgroups
from .permgrp.search import SearchCapExceeded
from .rootsys.roots import omega_fixed_roots, root_system
from .rootsys.subsystems import borel_de_siebenthal
from .rootsys.weyl import f_conjugacy_classes, twist_by_name, weyl_group
from .verify import REGISTRY, render_reports

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _default_parallelism() -> int:
    env = os.environ.get("CARTERLAB_THREADS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="carter-lab",
        description="desk-scale checks for Carter-subgroup criteria")
    parser.add_argument("--seed", type=int, default=0,
                        help="seed for the seeded internals (results are "
                             "seed-independent)")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run registered claim checks")
    check_sub = check.add_subparsers(dest="check_command", required=True)
    run = check_sub.add_parser("run", help="run one case or all")
    run.add_argument("case_id", help="a case id, or 'all'")
    run.add_argument("--tier", choices=("quick", "full"), default=None)
    run.add_argument("--format", choices=("text", "json"), default="text")
    run.add_argument("-j", "--parallelism", type=int, default=_default_parallelism())
    lst = check_sub.add_parser("list", help="list registered cases")
    lst.add_argument("--tier", choices=("quick", "full"), default=None)
    lst.add_argument("--format", choices=("text", "json"), default="text")

    carter = sub.add_parser("carter", help="full Carter-class search")
    carter.add_argument("group_spec")
    carter.add_argument("--cap", type=int, default=100_000,
                        help="full-search order cap")
    carter.add_argument("--format", choices=("text", "json"), default="text")

    roots = sub.add_parser("roots", help="root-system queries")
    roots_sub = roots.add_subparsers(dest="roots_command", required=True)
    subsys = roots_sub.add_parser("subsystems")
    subsys.add_argument("type_label", metavar="type", help="e.g. G2, C2, E6")
    subsys.add_argument("--format", choices=("text", "json"), default="text")
    omega = roots_sub.add_parser("omega")
    omega.add_argument("type_label", metavar="type")
    omega.add_argument("--format", choices=("text", "json"), default="text")

    torus = sub.add_parser("torus", help="maximal-torus classes and orders")
    torus.add_argument("type_label", metavar="type")
    torus.add_argument("--twist", choices=("id", "flip", "triality"), default="id")
    torus.add_argument("--q", type=int, required=True)
    torus.add_argument("--format", choices=("text", "json"), default="text")

    group = sub.add_parser("group", help="group realization queries")
    group_sub = group.add_subparsers(dest="group_command", required=True)
    info = group_sub.add_parser("info")
    info.add_argument("group_spec")
    info.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _parse_type(text: str):
    text = text.strip()
    if len(text) < 2 or not text[0].isalpha():
        raise GroupSpecError(f"root-system type must look like C3, got {text!r}")
    return text[0].upper(), int(text[1:])


def _cmd_check(args) -> int:
    if args.check_command == "list":
        cases = REGISTRY.list_cases(args.tier)
        if args.format == "json":
            print(json.dumps([{"id": c.id, "tier": c.tier,
                               "description": c.description,
                               "anchor": c.anchor} for c in cases], indent=2))
        else:
            for c in cases:
                print(f"{c.id:36s} [{c.tier}] {c.description}")
        return EXIT_PASS
    if args.case_id == "all":
        reports = REGISTRY.run_all(args.tier, args.parallelism)
    else:
        reports = [REGISTRY.run_case(args.case_id)]
    print(render_reports(reports, args.format))
    return EXIT_FAIL if any(r.status == "fail" for r in reports) else EXIT_PASS


def _cmd_carter(args) -> int:
    G = realize(args.group_spec).group
    try:
        classes = carter_subgroups(G, cap=args.cap)
    except (SearchCapError, SearchCapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    if args.format == "json":
        print(json.dumps({
            "group": args.group_spec,
            "order": G.order(),
            "classes": classes.class_count,
            "representative_orders": [r.order() for r in classes.representatives],
        }, indent=2))
    else:
        print(f"{args.group_spec}: order {G.order()}, "
              f"{classes.class_count} Carter class(es)")
        for rep in classes.representatives:
            gens = ", ".join(str(g) for g in rep.generators) or "()"
            print(f"  order {rep.order()}: <{gens}>")
    return EXIT_PASS


def _cmd_roots(args) -> int:
    t, rank = _parse_type(args.type_label)
    system = root_system(t, rank)
    if args.roots_command == "subsystems":
        subs = borel_de_siebenthal(system)
        if args.format == "json":
            print(json.dumps({
                "type": f"{t}{rank}",
                "subsystems": [{"label": s.label, "roots": len(s.roots),
                                "basis": [list(r) for r in s.basis]}
                               for s in subs]}, indent=2))
        else:
            print(f"{t}{rank}: {len(subs)} subsystem classes")
            for s in subs:
                print(f"  {s.label:12s} ({len(s.roots)} roots)  "
                      f"basis {[list(r) for r in s.basis]}")
        return EXIT_PASS
    fixed = omega_fixed_roots(system)
    if args.format == "json":
        print(json.dumps({"type": f"{t}{rank}",
                          "omega_fixed_roots": [list(r) for r in fixed]}, indent=2))
    else:
        print(f"{t}{rank}: {len(fixed)} involution-fixed positive root(s)")
        for r in fixed:
            print(f"  {list(r)}")
    return EXIT_PASS


def _cmd_torus(args) -> int:
    t, rank = _parse_type(args.type_label)
    system = root_system(t, rank)
    W = weyl_group(system)
    tau = twist_by_name(system, args.twist)
    classes = f_conjugacy_classes(W, tau)
    payload = {
        "type": f"{t}{rank}",
        "twist": args.twist,
        "q": args.q,
        "classes": [{"rep_word": list(c.rep_word), "size": c.size,
                     "order_poly": list(c.order_poly),
                     "order": c.order_at(args.q)} for c in classes],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{t}{rank} twist={args.twist} q={args.q}: "
              f"{len(classes)} torus classes (sizes sum to {W.order()})")
        for c in classes:
            word = "".join(f"s{i}" for i in c.rep_word) or "e"
            print(f"  size {c.size:5d}  |T| = {c.order_at(args.q):8d}  "
                  f"poly {list(c.order_poly)}  rep {word}")
    return EXIT_PASS


def _cmd_group(args) -> int:
    rg = realize(args.group_spec)
    G = rg.group
    payload = {
        "spec": args.group_spec,
        "label": rg.label,
        "degree": G.degree,
        "order": G.order(),
        "generators": len(G.generators),
        "base": list(G.base),
        "orbit_lengths": [len(o) for o in G.natural_orbits()],
    }
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(f"{rg.label}: degree {G.degree}, order {G.order()}, "
              f"{len(G.generators)} generators")
        print(f"  base {payload['base']}, orbit lengths {payload['orbit_lengths']}")
    return EXIT_PASS


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.seed:
        from .permgrp.sylow import set_default_seed
        set_default_seed(args.seed)
    try:
        if args.command == "check":
            return _cmd_check(args)
        if args.command == "carter":
            return _cmd_carter(args)
        if args.command == "roots":
            return _cmd_roots(args)
        if args.command == "torus":
            return _cmd_torus(args)
        if args.command == "group":
            return _cmd_group(args)
    except GroupSpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SearchCapError, SearchCapExceeded) as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
