"""Command-line interface.

Exit codes: 0 success, 1 verification or evaluation failure, 2 usage or
input-parse errors. All file outputs (config text, JSON reports, SVG, CSV)
are byte-deterministic for identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

from .bondgraph import build_edges, euler_characteristics, extract_faces, graph_perimeter
from .canonical import canonical
from .energy import SQRT3_2, _GAMMA_MATCH, decompose
from .errors import GammaError, OclError, OrientationError, ParseError, RegionError
from .fileio import dumps_config, read_config, write_config
from .measures import diagnose, diagnostics_csv
from .render import render_svg
from .reporting import report_json
from .search import SearchConfig, anneal
from .verify import SUITES, run_all, run_suite


def _parse_gamma(text: str) -> float:
    t = text.strip().lower()
    if t in ("sqrt3/2", "sqrt(3)/2", "diamond"):
        return SQRT3_2
    try:
        g = float(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a threshold: {text!r}") from None
    if not (0.0 <= g <= 1.0):
        raise argparse.ArgumentTypeError(f"gamma must lie in [0, 1], got {g}")
    return g


def _parse_n_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer list: {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="ocl",
        description="Oriented unit discs: bond graphs, exact energy "
        "decomposition, diamond ground states, lemma checkers.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen-canonical", help="write the n-particle diamond")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--out", default=None, help="output file (default stdout)")
    g.set_defaults(func=_cmd_gen_canonical)

    e = sub.add_parser("energy", help="evaluate a configuration file")
    e.add_argument("--in", dest="infile", required=True)
    e.add_argument("--gamma", type=_parse_gamma, required=True)
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=_cmd_energy)

    s = sub.add_parser("search", help="annealing ground-state search")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--gamma", type=_parse_gamma, required=True)
    s.add_argument("--seeds", type=int, default=16)
    s.add_argument("--iters", type=int, default=200_000)
    s.add_argument("--sigma", type=float, default=0.15)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--out", default=None, help="write the best configuration")
    s.set_defaults(func=_cmd_search)

    v = sub.add_parser("verify", help="run checker suites")
    v.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=_cmd_verify)

    r = sub.add_parser("render", help="SVG picture of a configuration")
    r.add_argument("--in", dest="infile", required=True)
    r.add_argument("--gamma", type=_parse_gamma, required=True)
    r.add_argument("--out", required=True)
    r.set_defaults(func=_cmd_render)

    d = sub.add_parser("diagnose", help="compactness diagnostics CSV")
    d.add_argument("--n-list", type=_parse_n_list, required=True)
    d.set_defaults(func=_cmd_diagnose)
    return p


def _cmd_gen_canonical(args) -> int:
    text = dumps_config(canonical(args.n))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_energy(args) -> int:
    cfg = read_config(args.infile)
    graph = build_edges(cfg, args.gamma)
    diamond = abs(args.gamma - SQRT3_2) <= _GAMMA_MATCH
    if diamond:
        rep = decompose(graph)
        payload = dataclasses.asdict(rep)
        if args.json:
            payload["faces"] = [
                dataclasses.asdict(f) for f in extract_faces(graph).faces
            ]
            sys.stdout.write(report_json("energy", payload))
        else:
            print(f"n={rep.n} gamma={rep.gamma!r} energy={rep.energy}")
            print(
                f"edges={rep.edge_count} per={rep.per} per_gr={rep.per_gr} "
                f"def={rep.def_gr} chi={rep.chi} chi_euler={rep.chi_euler}"
            )
            print(f"f_surface={rep.f_surface} residual={rep.residual}")
    else:
        per = graph_perimeter(graph)
        euler = euler_characteristics(graph)
        payload = {
            "n": graph.n,
            "gamma": graph.gamma,
            "energy": graph.energy,
            "edge_count": graph.m,
            "per": per.per,
            "per_gr": per.per_gr,
            "chi": euler.chi,
            "chi_euler": euler.chi_euler,
        }
        if args.json:
            sys.stdout.write(report_json("energy", payload))
        else:
            print(f"n={graph.n} gamma={graph.gamma!r} energy={graph.energy}")
            print(
                f"edges={graph.m} per={per.per} per_gr={per.per_gr} "
                f"chi={euler.chi} chi_euler={euler.chi_euler}"
            )
    return 0


def _cmd_search(args) -> int:
    cfg = SearchConfig(
        n=args.n,
        gamma=args.gamma,
        iters=args.iters,
        seeds=args.seeds,
        seed=args.seed,
        sigma=args.sigma,
    )
    res = anneal(cfg)
    payload = {
        "n": args.n,
        "gamma": args.gamma,
        "seeds": args.seeds,
        "iters": args.iters,
        "seed": args.seed,
        "best_energy": res.best_energy,
        "best_seed_index": res.best_seed_index,
        "per_seed": list(res.per_seed),
        "trace": [list(t) for t in res.energy_trace],
    }
    sys.stdout.write(report_json("search", payload))
    if args.out:
        write_config(args.out, res.best)
    return 0


def _cmd_verify(args) -> int:
    reports = (
        run_all(args.trials, args.seed)
        if args.suite == "all"
        else [run_suite(args.suite, args.trials, args.seed)]
    )
    bad = 0
    for rep in reports:
        status = "ok" if rep.ok else "FAIL"
        print(
            f"suite={rep.suite} trials={rep.trials} checked={rep.checked} "
            f"failures={len(rep.failures)} elapsed={rep.elapsed:.2f}s {status}"
        )
        for f in rep.failures[:20]:
            print(f"  {f}")
        bad += len(rep.failures)
    return 1 if bad else 0


def _cmd_render(args) -> int:
    cfg = read_config(args.infile)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(render_svg(cfg, args.gamma))
    return 0


def _cmd_diagnose(args) -> int:
    rows = [diagnose(canonical(n)) for n in args.n_list]
    sys.stdout.write(diagnostics_csv(rows))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, OrientationError, GammaError, RegionError) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except OclError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
