"""Command-line entry point: ``ramseykern <command> ...``.

Graph outputs are DIMACS plus a JSON sidecar.  With ``--out PREFIX`` they go
to ``PREFIX.dimacs`` and ``PREFIX.json``; otherwise the DIMACS text goes to
stdout with the sidecar embedded as a ``c json {...}`` comment line.
Vertices are 1-indexed everywhere on the command line.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import BACKEND
from .bundle import bundle_to_dict, load_bundle
from .compose import STRATEGIES, compose, make_host
from .constructions import embed
from .dimacs import format_dimacs, read_dimacs
from .harness import BLOWUP_FIELDS, blowup_report, gen_refinement_instance, verify_composition
from .host import HostGraph, host_violations
from .ramsey import (
    compute_ramsey_exhaustive,
    default_table,
    find_gap,
    lemma5_ell,
    verify_ramsey_witness,
)
from .reductions import clique_to_ramsey, ramsey_to_refinement
from .solvers import has_homogeneous


def _one_based(vs):
    return [v + 1 for v in vs]


def _emit_graph(g, sidecar: dict, out: str | None) -> None:
    if out:
        with open(out + ".dimacs", "w") as f:
            f.write(format_dimacs(g))
        with open(out + ".json", "w") as f:
            json.dump(sidecar, f, indent=2, sort_keys=True)
            f.write("\n")
        print(f"wrote {out}.dimacs and {out}.json", file=sys.stderr)
    else:
        sys.stdout.write(format_dimacs(g, [f"json {json.dumps(sidecar, sort_keys=True)}"]))


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def cmd_solve(args) -> int:
    g = read_dimacs(args.graph)
    w = has_homogeneous(g, args.k, args.mode)
    if w is None:
        print("no")
    else:
        print(f"yes {w.kind}")
        print(" ".join(map(str, _one_based(w.members))))
    return 0


def cmd_ramsey(args) -> int:
    table = default_table()
    if args.compute is not None:
        print(compute_ramsey_exhaustive(args.compute, args.cap))
    elif args.witness is not None:
        if args.k is None:
            raise SystemExit("--witness needs --k")
        g = read_dimacs(args.witness)
        ok = verify_ramsey_witness(g, args.k)
        print(f"valid: R({args.k}) > {g.n}" if ok else f"invalid: has a homogeneous {args.k}-set")
        return 0 if ok else 1
    elif args.gap is not None:
        res = lemma5_ell(args.gap, table) if args.gap > 3 else find_gap(args.gap, table)
        print(json.dumps({"t": args.gap, "ell": res.ell, "T": res.T}))
    else:
        print(table.to_json())
    return 0


def cmd_embed(args) -> int:
    instances = load_bundle(args.bundle)
    h = read_dimacs(args.host)
    cover = ()
    if args.cover:
        with open(args.cover) as f:
            cover = tuple(tuple(v - 1 for v in s) for s in json.load(f)["cover"])
    host = HostGraph(h, args.ell, cover)
    problems = host_violations(host)
    if not args.cover:
        problems = [p for p in problems if not p.startswith("vertices not covered")]
    if problems:
        raise SystemExit("invalid host: " + "; ".join(problems))
    res = embed(host, instances[0].k, instances)
    _emit_graph(res.g_prime, {
        "k_prime": res.k_prime, "ell": res.ell, "assignment": list(res.assignment),
        "block_ranges": [[a + 1, b] for a, b in res.block_ranges]}, args.out)
    return 0


def cmd_reduce(args) -> int:
    g = read_dimacs(args.graph)
    inst = clique_to_ramsey(g, args.k) if args.source == "clique" else ramsey_to_refinement(g, args.k)
    side = {"k": inst.k, "witnesses": None}
    if inst.has_witnesses:
        side["witnesses"] = {"clique": _one_based(inst.clique_witness),
                             "indep": _one_based(inst.indep_witness)}
    _emit_graph(inst.g, side, args.out)
    return 0


def cmd_host(args) -> int:
    host = make_host(args.t, args.strategy, seed=args.seed, max_trials=args.trials, ell=args.ell)
    _emit_graph(host.h, {"ell": host.ell, "strategy": host.strategy,
                         "cover": [_one_based(s) for s in host.cover]}, args.out)
    return 0


def cmd_compose(args) -> int:
    instances = load_bundle(args.bundle)
    out = compose(instances, args.strategy, seed=args.seed, max_trials=args.trials)
    if out.is_direct:
        print(json.dumps({"direct_answer": "yes" if out.direct_answer else "no",
                          "strategy": out.strategy}))
        return 0
    res = out.result
    _emit_graph(res.g_prime, {
        "k_prime": res.k_prime, "ell": res.ell, "strategy": out.strategy, "seed": out.seed,
        "assignment": list(res.assignment),
        "block_ranges": [[a + 1, b] for a, b in res.block_ranges],
        "host_cover": [_one_based(s) for s in out.host.cover]}, args.out)
    return 0


def cmd_verify(args) -> int:
    rep = verify_composition(args.t, args.k, args.strategy, args.trials, args.seed,
                             max_vertices=args.max_vertices)
    text = rep.to_json(timings=args.timings)
    if args.report:
        with open(args.report, "w") as f:
            f.write(text)
    print(f"{rep.passed}/{len(rep.records)} trials agree "
          f"(t={args.t}, k={args.k}, strategy={args.strategy}, backend={BACKEND})")
    return 0 if rep.ok else 1


def cmd_gen(args) -> int:
    inst = gen_refinement_instance(args.n, args.k, args.target, args.seed)
    text = json.dumps(bundle_to_dict([inst]), indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_report(args) -> int:
    if not args.blowup:
        raise SystemExit("report: only --blowup is available")
    rows = blowup_report(_int_list(args.t), _int_list(args.k), args.strategies.split(","), n=args.n)
    w = csv.DictWriter(sys.stdout, fieldnames=BLOWUP_FIELDS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ramseykern", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="decide whether a graph has a homogeneous k-set")
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--mode", choices=["clique", "indep", "either"], default="either")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("ramsey", help="small Ramsey numbers, witnesses and gaps")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--compute", type=int, metavar="K")
    g.add_argument("--witness", metavar="DIMACS")
    g.add_argument("--gap", type=int, metavar="T")
    g.add_argument("--table", action="store_true", help="print the exact table (default)")
    s.add_argument("--cap", type=int, default=7)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_ramsey)

    s = sub.add_parser("embed", help="embed a bundle of instances into a host graph")
    s.add_argument("--bundle", required=True)
    s.add_argument("--host", required=True)
    s.add_argument("--ell", type=int, required=True)
    s.add_argument("--cover", help="host JSON sidecar with a 'cover' list")
    s.add_argument("--out")
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("reduce", help="clique -> Ramsey or Ramsey -> refinement Ramsey")
    s.add_argument("--from", dest="source", choices=["clique", "ramsey"], required=True)
    s.add_argument("--graph", required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--out")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("host", help="build a host graph")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default="turan")
    s.add_argument("--ell", type=int)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_host)

    s = sub.add_parser("compose", help="compose a bundle into one instance")
    s.add_argument("--bundle", required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default="turan")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=1000)
    s.add_argument("--out")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("verify", help="end-to-end equivalence check of the composition")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--strategy", choices=STRATEGIES, default="turan")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--report")
    s.add_argument("--max-vertices", type=int, default=80)
    s.add_argument("--timings", action="store_true", help="include wall times in the report")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate a certified refinement instance (bundle JSON)")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--target", choices=["yes", "no"], required=True)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("report", help="parameter blow-up table (CSV)")
    s.add_argument("--blowup", action="store_true")
    s.add_argument("--t", default="1,2,4,8,11")
    s.add_argument("--k", default="3,4")
    s.add_argument("--strategies", default="turan,witness")
    s.add_argument("--n", type=int)
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
