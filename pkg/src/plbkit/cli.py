"""Command-line front end: ``plbkit <subcommand> [options]``.

Every report is JSON with sorted keys and a ``schema_version`` field, so two
identical invocations produce byte-identical output.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .bounds import (
    const_a,
    const_a_exact,
    const_b,
    const_b_exact,
    guarantee_bundle,
    hardness_factor,
    lemma22_bound,
    mis_plbl_lower,
    pvl_bound,
    zeta,
)
from .embed import embed_multigraph, embed_simple
from .errors import GraphError
from .exact import exact
from .graph import format_edge_list, load_graph, save_graph
from .harness import MODELS, SCHEMA_VERSION, default_beta, generate, ratio_study, run_experiment
from .plb import PlbParams, check_plb, plb_report
from .solvers import solve

__all__ = ["main", "build_parser"]


def _dump(obj) -> str:
    if isinstance(obj, dict) and "schema_version" not in obj:
        obj = {"schema_version": SCHEMA_VERSION, **obj}
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def _emit(args, obj, path=None):
    text = _dump(obj)
    path = path if path is not None else args.out
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _exact_str(q):
    return None if q is None else f"{q.numerator}/{q.denominator}"


def _model_params(args) -> dict:
    m = args.model
    if m in ("chung-lu", "girg"):
        if args.n is None or args.beta_prime is None:
            raise ValueError(f"--model {m} needs --n and --beta-prime")
        p = {"n": args.n, "beta_prime": args.beta_prime, "w_min": args.wmin}
        if m == "girg":
            p.update(dim=args.dim, alpha=args.alpha)
        return p
    if m == "hyperbolic":
        if args.n is None or args.alpha_h is None:
            raise ValueError("--model hyperbolic needs --n and --alpha-h")
        return {"n": args.n, "alpha_h": args.alpha_h, "c_h": args.c_h, "t_h": args.t_h}
    if args.e_alpha is None or args.beta is None:
        raise ValueError("--model abplg needs --e-alpha and --beta")
    return {"e_alpha": args.e_alpha, "beta": args.beta, "simple": bool(args.simple)}


# -- subcommands ---------------------------------------------------------------------


def cmd_gen(args):
    params = _model_params(args)
    g = generate(args.model, params, args.seed)
    if args.out:
        save_graph(g, args.out)
    if args.json:
        rep = {"command": "gen", "model": args.model, "params": params, "seed": args.seed,
               "n": g.n, "m": g.m, "max_degree": g.max_degree}
        if not args.out:
            rep["edges"] = [[a, b, k] for (a, b), k in g.edges.items()]
        sys.stdout.write(_dump(rep))
    elif not args.out:
        sys.stdout.write(format_edge_list(g))


def cmd_check(args):
    g = load_graph(args.inp)
    if args.c1 is None and args.c2 is None and args.c3 is None:
        rep = plb_report(g, args.beta, args.t)
        out = rep.to_dict()
    else:
        rep = check_plb(g, PlbParams(args.beta, args.t, args.c1, args.c2, args.c3))
        out = rep.to_dict()
        out["passed"] = rep.passed
    out["command"] = "check"
    _emit(args, out)


def cmd_solve(args):
    g = load_graph(args.inp)
    res = solve(g, args.problem, args.algo)
    out = res.to_dict(with_trace=args.trace)
    out["witness"] = list(res.witness) if isinstance(res.witness, tuple) else res.witness
    out["command"] = "solve"
    _emit(args, out)


def cmd_exact(args):
    g = load_graph(args.inp)
    res = exact(g, args.problem, args.budget)
    out = res.to_dict()
    out["command"] = "exact"
    _emit(args, out)


def _kv(pairs):
    out = {}
    for item in pairs or []:
        if "=" not in item:
            raise ValueError(f"--params entries must look like key=value, got {item!r}")
        k, v = item.split("=", 1)
        k = k.strip().replace("-", "_")
        v = v.strip()
        if v.lower() in ("true", "false"):
            out[k] = v.lower() == "true"
        else:
            try:
                out[k] = int(v)
            except ValueError:
                try:
                    out[k] = float(v)
                except ValueError:
                    out[k] = v
        if isinstance(out[k], int) and not isinstance(out[k], bool) and k not in ("a", "b", "d_min", "N"):
            out[k] = float(out[k])
    return out


def _need(p, *keys):
    missing = [k for k in keys if k not in p]
    if missing:
        raise ValueError(f"missing --params {', '.join(missing)}")


def cmd_bound(args):
    p = _kv(args.params)
    w = args.which
    t = p.get("t", 0.0)
    if w == "a":
        _need(p, "beta")
        out = {"value": const_a(p["beta"], t), "exact": _exact_str(const_a_exact(p["beta"], t))}
    elif w == "b":
        _need(p, "c1", "beta")
        out = {"value": const_b(p["c1"], p["beta"], t), "exact": _exact_str(const_b_exact(p["c1"], p["beta"], t))}
    elif w == "bundle":
        _need(p, "c1", "beta")
        out = guarantee_bundle(p["c1"], p["beta"], t).to_dict()
    elif w == "pvl":
        _need(p, "g_kind", "c", "C", "c1", "beta", "n", "M")
        v, ex = pvl_bound(p["g_kind"], p["c"], p["C"], p["c1"], p["beta"], t, p["n"], p["M"], exact=True)
        out = {"value": v, "exact": _exact_str(ex)}
    elif w == "mis-lb":
        _need(p, "c2", "beta", "d_min")
        v, ex = mis_plbl_lower(p["c2"], p["beta"], t, int(p["d_min"]), bool(p.get("connected", False)), exact=True)
        out = {"value": v, "exact": _exact_str(ex)}
    elif w == "hardness":
        _need(p, "problem", "mode", "c2", "beta")
        mode = {"multi": "multigraph"}.get(p["mode"], p["mode"])
        out = hardness_factor(p["problem"], mode, p.get("c1"), p["c2"], p["beta"], t, p.get("gamma", 0.0)).to_dict()
    elif w == "lemma22":
        _need(p, "a", "b", "c")
        (lhs, rhs), ex = lemma22_bound(p["a"], p["b"], p["c"], exact=True)
        out = {"lhs": lhs, "rhs": rhs, "holds": lhs <= rhs,
               "exact": None if ex is None else {"lhs": _exact_str(ex[0]), "rhs": _exact_str(ex[1])}}
    else:
        _need(p, "s")
        out = {"value": zeta(p["s"])}
    out.update(command="bound", which=w, params=p)
    _emit(args, out)


def cmd_embed(args):
    g = load_graph(args.inp)
    fn = embed_multigraph if args.mode == "multi" else embed_simple
    e = fn(g, args.beta, args.t, args.c2)
    if args.out:
        save_graph(e.graph, args.out)
    out = e.to_dict()
    out["command"] = "embed"
    if args.report:
        _emit(args, out, args.report)
    else:
        sys.stdout.write(_dump(out))


def cmd_experiment(args):
    params = _model_params(args)
    beta = args.fit_beta if args.fit_beta is not None else default_beta(args.model, params, args.eta)
    seeds = list(range(args.seed, args.seed + args.trials))
    rep = run_experiment(args.model, params, beta, args.t, seeds, jobs=args.jobs)
    out = rep.to_dict()
    out.update(command="experiment", eta=args.eta)
    _emit(args, out)


def cmd_ratio_study(args):
    rep = ratio_study(args.family, args.count, args.size, args.beta, args.t, args.seed, jobs=args.jobs)
    out = rep.to_dict()
    rows = rep.ratio_study
    out.update(command="ratio-study",
               all_respected=all(r.get("bound_respected", True) for r in rows),
               skipped=sum(1 for r in rows if r.get("skipped")))
    _emit(args, out)


# -- parser --------------------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--seed", type=int, default=0, help="base random seed (default 0)")
    c.add_argument("--jobs", type=int, default=1, help="worker processes for batch commands")
    c.add_argument("--out", default=None, help="output file (default: stdout)")
    c.add_argument("--json", action="store_true", help="emit a JSON report (always on for report commands)")
    c.add_argument("--eta", type=float, default=0.5, help="exponent slack for fitting generated graphs")
    return c


def _model_flags(p):
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--beta-prime", type=float)
    p.add_argument("--wmin", type=float, default=1.0)
    p.add_argument("--dim", type=int, default=1)
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--alpha-h", type=float)
    p.add_argument("--c-h", type=float, default=0.0)
    p.add_argument("--t-h", type=float, default=0.1)
    p.add_argument("--e-alpha", type=float)
    p.add_argument("--beta", type=float, help="degree exponent of the (alpha, beta) model")
    p.add_argument("--simple", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="plbkit", description="Power-law bounded graph toolkit.")
    ap.add_argument("--version", action="version", version=f"plbkit {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="generate a random graph")
    _model_flags(p)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("check", parents=[common], help="fit or check the bucket properties")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--c1", type=float)
    p.add_argument("--c2", type=float)
    p.add_argument("--c3", type=float)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", parents=[common], help="run a greedy algorithm")
    p.add_argument("--problem", choices=("mds", "cds", "mis", "mvc"), required=True)
    p.add_argument("--algo", choices=("greedy", "matching"), default="greedy")
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("exact", parents=[common], help="exact optimum on a small graph")
    p.add_argument("--problem", choices=("mds", "mis", "mvc", "cds"), required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("bound", parents=[common], help="evaluate a closed-form bound")
    p.add_argument("--which", choices=("a", "b", "bundle", "pvl", "mis-lb", "hardness", "lemma22", "zeta"),
                   required=True)
    p.add_argument("--params", nargs="*", default=[], metavar="KEY=VALUE")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("embed", parents=[common], help="embed a cubic graph")
    p.add_argument("--mode", choices=("multi", "simple"), required=True)
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    p.add_argument("--c2", type=float, required=True)
    p.add_argument("--report", default=None, help="JSON report file (default: stdout)")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("experiment", parents=[common], help="fitted constants across seeds")
    _model_flags(p)
    p.add_argument("--trials", type=int, default=10, help="number of seeds, starting at --seed")
    p.add_argument("--fit-beta", type=float, help="fitting exponent (default: generating exponent minus eta)")
    p.add_argument("--t", type=float, default=0.0)
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("ratio-study", parents=[common], help="greedy vs exact on small instances")
    p.add_argument("--family", choices=("random-plb", "embedded"), default="random-plb")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--size", type=int, default=20)
    p.add_argument("--beta", type=float, default=3.0)
    p.add_argument("--t", type=float, default=0.0)
    p.set_defaults(func=cmd_ratio_study)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        args.func(args)
    except (GraphError, ValueError, OSError, RuntimeError) as ex:
        sys.stderr.write(f"plbkit {args.command}: error: {ex}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
