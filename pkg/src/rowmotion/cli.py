"""Command-line entry point.

Subcommands: poset (build/inspect/serialize), orbit, verify, scan,
homomesy.  Exit codes: 0 all-pass, 1 check failure, 2 usage error,
3 genericity failure after the retry budget.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import harness, polytopes, subsets
from .backends import parse_backend
from .dynamics import detect_order
from .errors import GenericityFailure, RowmotionError
from .harness import THEOREMS, CheckSpec, build_poset, emit_report

REALM_BACKENDS = {"birational": "rational", "nc": "matrix:2", "tropical": "tropical"}


def _default_seed():
    env = os.environ.get("ROWMOTION_SEED")
    return int(env) if env else 0


def _add_common(sp):
    sp.add_argument("--poset", required=True,
                    help="poset spec: 'chain AxB', 'rootA M', 'random N SEED', or a file path")
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--out", help="write the report here instead of stdout")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rowmotion",
        description="Exact rowmotion and toggle dynamics on finite posets.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("poset", help="build, inspect, and serialize posets")
    _add_common(sp)
    sp.add_argument("--serialize", metavar="PATH",
                    help="write the poset text format ('-' for stdout)")

    sp = sub.add_parser("orbit", help="orbit structure of a rowmotion map")
    _add_common(sp)
    sp.add_argument("--realm", choices=["comb", "pl", "birational", "nc", "tropical"],
                    default="comb")
    sp.add_argument("--map", dest="map_id",
                    help="comb: rowA|rowJ|rowF; pl: order|antichain; else: bar|bor")
    sp.add_argument("--backend", help="rational | matrix:d | tropical")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--const-c", dest="const_c", help="central constant C as p/q")
    sp.add_argument("--max-iter", type=int, default=harness.DEFAULT_MAX_ITER)
    sp.add_argument("--labeling", help="JSON array of rational strings 'p/q' (pl realm)")

    sp = sub.add_parser("verify", help="run theorem checks from the registry")
    sp.add_argument("--all", action="store_true", help="run every registered theorem")
    sp.add_argument("--theorem", action="append", default=[],
                    help="theorem id (repeatable); see --list")
    sp.add_argument("--list", action="store_true", help="list theorem ids and exit")
    sp.add_argument("--poset", action="append", default=[],
                    help="poset spec (repeatable; default: chain 2x3 and rootA 3)")
    sp.add_argument("--backend", help="override the theorem's default backends")
    sp.add_argument("--const-c", dest="const_c", help="central constant C as p/q")
    sp.add_argument("--points", type=int, default=harness.DEFAULT_POINTS)
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--out")
    sp.add_argument("-v", "--verbose", action="store_true",
                    help="progress lines on stderr while checks run")

    sp = sub.add_parser("scan", help="observed rowmotion orders on chain products")
    sp.add_argument("--family", choices=["chain-product"], default="chain-product")
    sp.add_argument("--max", dest="max_ab", default="3x3", help="scan up to AxB")
    sp.add_argument("--backend", default="matrix:2")
    sp.add_argument("--map", dest="map_id", choices=["bor", "bar"], default="bor")
    sp.add_argument("--seeds", type=int, default=3, help="number of seeds per poset")
    sp.add_argument("--seed", type=int, default=None, help="base seed")
    sp.add_argument("--max-iter", type=int, default=harness.DEFAULT_MAX_ITER)
    sp.add_argument("--format", choices=["text", "json", "csv"], default="text")
    sp.add_argument("--out")

    sp = sub.add_parser("homomesy", help="orbit statistic averages, combinatorial realm")
    _add_common(sp)
    sp.add_argument("--map", dest="map_id", choices=["rowA", "rowJ", "rowF"],
                    default="rowA")
    return parser


def _emit(rows, fmt, out):
    data = emit_report(rows, format=fmt)
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.write(data.decode())


_COMB_MAPS = {
    "rowA": (subsets.rowmotion_antichain, subsets.all_antichains),
    "rowJ": (subsets.rowmotion_ideal, subsets.all_ideals),
    "rowF": (subsets.rowmotion_filter, subsets.all_filters),
}


def _comb_orbit_rows(p, map_id):
    step, states_of = _COMB_MAPS[map_id]
    states = states_of(p)
    rows = []
    order = 1
    for i, orb in enumerate(subsets.orbit_partition(p, step, states)):
        avg = sum(len(s.members) for s in orb)
        rows.append({
            "map": map_id, "orbit": i, "size": len(orb),
            "cardinality_average": str(Fraction(avg, len(orb))),
            "states": " ".join("{" + ",".join(p.element_names[v] for v in sorted(s.members)) + "}"
                               for s in orb),
        })
        order = math.lcm(order, len(orb))
    return rows, order


def cmd_poset(args):
    p = build_poset(args.poset)
    if args.serialize:
        text = p.serialize()
        if args.serialize == "-":
            sys.stdout.write(text)
        else:
            with open(args.serialize, "w", encoding="utf-8") as fh:
                fh.write(text)
            print(f"wrote {args.serialize}")
        return 0
    info = {
        "elements": p.n,
        "names": list(p.element_names),
        "covers": sorted([u, v] for (u, v) in p.covers),
        "graded": p.is_graded,
        "ranks": list(p.rank) if p.rank else None,
        "linear_extension": list(p.default_linear_extension),
        "maximal_chains": len(p.maximal_chains()),
    }
    if args.format == "json":
        out = json.dumps(info, indent=2, sort_keys=True) + "\n"
    else:
        out = "\n".join(f"{k}: {v}" for k, v in info.items()) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def _parse_labeling(text, n):
    values = [Fraction(s) for s in json.loads(text)]
    if len(values) != n:
        raise ValueError(f"labeling needs {n} entries")
    return tuple(values)


def cmd_orbit(args):
    p = build_poset(args.poset)
    seed = args.seed if args.seed is not None else _default_seed()
    realm = args.realm
    if realm == "comb":
        map_id = args.map_id or "rowA"
        if map_id not in _COMB_MAPS:
            raise ValueError(f"--map for combinatorial orbits must be one of {sorted(_COMB_MAPS)}")
        rows, order = _comb_orbit_rows(p, map_id)
        _emit(rows, args.format, args.out)
        print(f"order {order}")
        return 0
    if realm == "pl":
        map_id = args.map_id or "antichain"
        if map_id == "antichain":
            start = (_parse_labeling(args.labeling, p.n) if args.labeling
                     else polytopes.random_chain_polytope_point(p, seed))
            step = lambda f: polytopes.pl_antichain_rowmotion(p, f)
        elif map_id == "order":
            start = (_parse_labeling(args.labeling, p.n) if args.labeling
                     else polytopes.random_order_polytope_point(p, seed))
            step = lambda f: polytopes.pl_order_rowmotion(p, f)
        else:
            raise ValueError("--map for the pl realm must be 'order' or 'antichain'")
        order = detect_order(step, start, lambda a, b: a == b, max_iter=args.max_iter)
        report = {"map": f"pl-{map_id}", "poset": args.poset, "seed": seed,
                  "order": order if order is not None else "exceeded"}
        _emit([report], args.format, args.out)
        return 0
    backend_spec = args.backend or REALM_BACKENDS[realm]
    expected_family = REALM_BACKENDS[realm].split(":")[0]
    if backend_spec.split(":")[0] != expected_family:
        raise ValueError(f"--backend {backend_spec} is inconsistent with --realm {realm}")
    backend = parse_backend(backend_spec, const_c=args.const_c)
    map_id = args.map_id or "bar"
    if map_id not in ("bar", "bor"):
        raise ValueError("--map for algebraic realms must be 'bar' or 'bor'")
    rep = harness.labeling_orbit_report(p, backend, map_id, seed,
                                        poset_name=args.poset, max_iter=args.max_iter)
    _emit([rep.to_dict()], args.format, args.out)
    return 0


def cmd_verify(args):
    if args.list:
        for tid in sorted(THEOREMS):
            print(f"{tid}: {THEOREMS[tid].description}")
        return 0
    theorems = sorted(THEOREMS) if args.all or not args.theorem else args.theorem
    poset_specs = args.poset or ["chain 2x3", "rootA 3"]
    seed = args.seed if args.seed is not None else _default_seed()
    reports = []
    for tid in theorems:
        if tid not in THEOREMS:
            raise ValueError(f"unknown theorem {tid!r}; try --list")
        backends = (args.backend,) if args.backend else THEOREMS[tid].default_backends
        for ps in poset_specs:
            for bs in backends:
                if args.verbose:
                    print(f"checking {tid} on {ps} over {bs}: "
                          f"{THEOREMS[tid].description}", file=sys.stderr)
                backend = parse_backend(bs, const_c=args.const_c) if args.const_c else None
                reports.append(harness.run_check(
                    CheckSpec(tid, ps, bs, points=args.points, seed=seed),
                    backend=backend))
    reports.sort(key=lambda r: (r["theorem"], r["poset"], r["backend"], r["seed"]))
    _emit(reports, args.format, args.out)
    failed = sum(r["failures"] for r in reports)
    return 1 if failed else 0


def cmd_scan(args):
    a_max, b_max = (int(x) for x in args.max_ab.split("x", 1))
    base = args.seed if args.seed is not None else _default_seed()
    seeds = [base + i for i in range(args.seeds)]
    rows = harness.scan_conjecture(a_max, b_max, args.backend, seeds=seeds,
                                   map_id=args.map_id, max_iter=args.max_iter)
    _emit(rows, args.format, args.out)
    return 0


def cmd_homomesy(args):
    p = build_poset(args.poset)
    rows, order = _comb_orbit_rows(p, args.map_id)
    averages = {r["cardinality_average"] for r in rows}
    for r in rows:
        r.pop("states")
    rows.append({"map": args.map_id, "orbit": "ALL", "size": sum(r["size"] for r in rows),
                 "cardinality_average": "homomesic" if len(averages) == 1 else "NOT homomesic"})
    _emit(rows, args.format, args.out)
    return 0


_COMMANDS = {
    "poset": cmd_poset,
    "orbit": cmd_orbit,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "homomesy": cmd_homomesy,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except GenericityFailure as exc:
        print(f"genericity failure: {exc}", file=sys.stderr)
        return 3
    except FileNotFoundError as exc:
        print(f"file not found: {exc}", file=sys.stderr)
        return 2
    except (ValueError, KeyError, RowmotionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
