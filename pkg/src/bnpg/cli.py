"""Command-line front end.

Exit codes for ``solve``: 0 PSNE found, 1 certified no PSNE, 2 approximate
only, 3 unreadable or invalid input, 4 method precondition not met.
"""
from __future__ import annotations

import argparse
import sys

from . import io as gameio
from .dispatch import METHODS, choose_method, solve
from .errors import BnpgError, PreconditionError
from .experiment import ExperimentConfig, run_experiment, write_results
from .game import (Status, as_profile, deviation_gains, is_psne, max_epsilon, profile_str,
                   social_welfare)
from .generators import (ALPHA_POOL, BETA_POOL, GRAPH_KINDS, GraphSpec, UtilityFamilyParams,
                         gen_graph, gen_utilities)
from .heuristic import HeuristicParams
from .oracle import DEFAULT_LIMIT

EXIT = {Status.PSNE: 0, Status.NO_PSNE: 1, Status.APPROX: 2}
EXIT_INPUT = 3
EXIT_PRECONDITION = 4


def _floats(s):
    return tuple(float(v) for v in s.split(","))


def _fmt(v):
    return repr(float(v))


KIND_ALIASES = {"tree": "random_tree", "ba": "barabasi_albert", "sw": "watts_strogatz",
                "er": "erdos_renyi"}


def cmd_gen(args) -> int:
    kind = KIND_ALIASES.get(args.kind, args.kind)
    spec = GraphSpec(kind, args.n, m=args.m, k=args.k, p=args.p,
                     exponent=args.exponent, seed=args.seed)
    params = UtilityFamilyParams(args.gamma, args.alpha_pool, args.beta_pool)
    inst = gen_utilities(gen_graph(spec), params, seed=args.seed)
    prov = {"graph": spec.to_dict(), "utilities": params.to_dict(), "seed": args.seed}
    text = gameio.dumps(inst, prov)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w") as fh:
            fh.write(text)
    return 0


def cmd_validate(args) -> int:
    inst = gameio.load(args.game)
    print(f"valid: n={inst.n} edges={inst.graph.num_edges} homogeneity={inst.homogeneity}")
    return 0


def cmd_solve(args) -> int:
    inst = gameio.load(args.game)
    params = HeuristicParams(K=args.K, B=args.B, delta=args.delta, p=args.p, seed=args.seed,
                             normalized=not args.raw)
    method = args.method
    if method == "auto":
        method = choose_method(inst, args.oracle_limit)
    report = solve(inst, method, params, args.oracle_limit, args.forest)
    print(f"method: {report.method}")
    print(f"status: {report.status.value}")
    if report.profile is not None:
        eps = report.epsilon if report.epsilon is not None else 0.0
        print(f"profile: {profile_str(report.profile)}")
        print(f"epsilon: {_fmt(eps)}")
        print(f"welfare: {_fmt(social_welfare(inst, report.profile))}")
        print(f"invest_ratio: {_fmt(report.profile.sum() / inst.n)}")
    for key in sorted(report.diagnostics):
        print(f"{key}: {report.diagnostics[key]}")
    return EXIT[report.status]


def cmd_check(args) -> int:
    inst = gameio.load(args.game)
    x = as_profile(inst, args.profile)
    ok = is_psne(inst, x)
    raw = deviation_gains(inst, x)
    norm = deviation_gains(inst, x, normalized=True)
    print(f"psne: {'yes' if ok else 'no'}")
    print("player gain gain_normalized")
    for i in range(inst.n):
        print(f"{i + 1} {_fmt(raw[i])} {_fmt(norm[i])}")
    print(f"max_epsilon: {_fmt(max_epsilon(inst, x))}")
    print(f"max_epsilon_normalized: {_fmt(max_epsilon(inst, x, normalized=True))}")
    print(f"welfare: {_fmt(social_welfare(inst, x))}")
    return 0 if ok else 1


def cmd_experiment(args) -> int:
    cfg = ExperimentConfig.load(args.config)
    if args.output:
        cfg.output = args.output
    if args.workers:
        cfg.workers = args.workers
    rows = run_experiment(cfg)
    raw, summary = write_results(cfg, rows)
    print(f"rows: {len(rows)}")
    print(f"raw: {raw}")
    print(f"summary: {summary}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="bnpg", description="Binary networked public goods games")
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a random game file")
    g.add_argument("--kind", choices=GRAPH_KINDS + tuple(KIND_ALIASES), required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, default=3, help="BA edges per new node")
    g.add_argument("--k", type=int, default=4, help="WS lattice degree")
    g.add_argument("--p", type=float, default=0.1, help="WS rewiring / ER edge probability")
    g.add_argument("--exponent", type=float, default=None, help="target BA degree exponent")
    g.add_argument("--gamma", type=float, default=0.5)
    g.add_argument("--alpha-pool", type=_floats, default=ALPHA_POOL)
    g.add_argument("--beta-pool", type=_floats, default=BETA_POOL)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("validate", help="check a game file")
    v.add_argument("game")
    v.set_defaults(func=cmd_validate)

    s = sub.add_parser("solve", help="compute a PSNE")
    s.add_argument("game")
    s.add_argument("--method", choices=METHODS, default="auto")
    s.add_argument("--K", type=int, default=10, help="best-response sweeps per evolve call")
    s.add_argument("--B", type=int, default=100, help="maximum evolve rounds")
    s.add_argument("--delta", type=float, default=1.0, help="stop distance between rounds")
    s.add_argument("--p", type=float, default=1.0, help="norm used for the stop distance")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--raw", action="store_true", help="use unnormalized epsilon")
    s.add_argument("--forest", action="store_true", help="tree solver accepts forests")
    s.add_argument("--oracle-limit", type=int, default=DEFAULT_LIMIT)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="test a profile for equilibrium")
    c.add_argument("game")
    c.add_argument("profile", help="0/1 string, player 1 first")
    c.set_defaults(func=cmd_check)

    e = sub.add_parser("experiment", help="run a sweep from a JSON config")
    e.add_argument("config")
    e.add_argument("-o", "--output", default=None)
    e.add_argument("--workers", type=int, default=None)
    e.set_defaults(func=cmd_experiment)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (BnpgError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
