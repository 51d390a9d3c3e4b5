"""``hyperspec`` command line.

Every command writes one JSON document ``{schema, manifest, results}``.
Exit codes: 0 success, 1 usage or input error, 2 solver did not converge,
3 an experiment check failed.
"""

from __future__ import annotations

import argparse
import csv
import io
import math
import os
import sys
from datetime import datetime, timezone
from typing import Optional, Sequence

from . import __version__, lab
from .errors import HyperspecError, NoConvergence, TooLarge
from .hgf import format_hgf, parse_hgf, read_hgf
from .hypergraph import (
    Hypergraph,
    build_gst,
    coalesce,
    complete_hypergraph,
    hyperpath,
    hyperstar,
    power_hypertree,
)
from .parity import brute_force_odd_bipartite, find_odd_bipartition
from .report import SCHEMA, dumps
from .solver import SolverConfig, solve_least_eigen

EXIT_OK, EXIT_INPUT, EXIT_NOCONV, EXIT_FAIL = 0, 1, 2, 3

EXPERIMENTS = ("relocate", "gst-scan", "minimize-class", "bounds", "limit-scan", "verify-eigvec")
FAMILIES = ("hyperpath", "hyperstar", "power-tree", "k5_4", "gst")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _timestamp() -> Optional[str]:
    # only a pinned build date makes it into reports, so reruns stay byte-identical
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if not epoch:
        return None
    return datetime.fromtimestamp(int(epoch), tz=timezone.utc).isoformat()


def _config(args) -> SolverConfig:
    kw = {"rng_seed": args.seed, "workers": args.workers}
    if args.restarts is not None:
        kw["restarts"] = args.restarts
    if args.tol is not None:
        kw["grad_tol"] = args.tol
    return SolverConfig(**kw)


def _document(args, argv, inputs, cfg, results) -> dict:
    manifest = {
        "command": ["hyperspec", *argv],
        "inputs": list(inputs),
        "config": cfg.to_dict() if cfg else None,
        "version": __version__,
        "seed": args.seed,
        "timestamps": {"started": _timestamp(), "finished": _timestamp()},
    }
    return {"schema": SCHEMA, "manifest": manifest, "results": results}


def _emit(args, doc) -> None:
    text = dumps(doc)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(args, line: str) -> None:
    # keep stdout clean for the JSON document unless it goes to a file
    print(line, file=sys.stdout if args.out else sys.stderr)


def _load(spec: str) -> tuple[Hypergraph, str]:
    if spec == "k5_4":
        return complete_hypergraph(5, 4), "k5_4"
    return read_hgf(spec), spec


def _branch(spec: str, k: int) -> tuple[Hypergraph, Optional[str]]:
    """``path:M``, ``star:M`` or an HGF path."""
    name, _, count = spec.partition(":")
    if name in ("path", "star") and count:
        try:
            m = int(count)
        except ValueError:
            raise HyperspecError(f"bad branch size in {spec!r}") from None
        if m < 0:
            raise HyperspecError("branch size must be nonnegative")
        return (hyperpath if name == "path" else hyperstar)(m, k), None
    return read_hgf(spec), spec


# ------------------------------------------------------------------ commands


def cmd_lambda_min(args, argv) -> int:
    G = read_hgf(args.input)
    cfg = _config(args)
    r = solve_least_eigen(G, cfg)
    _emit(args, _document(args, argv, [args.input], cfg, [r.to_dict()]))
    for c in r.certificate:
        _say(args, c.line())
    if not r.converged:
        raise NoConvergence(f"no run reached residual {cfg.grad_tol:g}; best {r.residual:.3e}", r)
    return EXIT_OK


def cmd_odd_bipartite(args, argv) -> int:
    G = read_hgf(args.input)
    b = find_odd_bipartition(G)
    res = {"odd_bipartite": b is not None}
    if b is not None:
        res["bipartition"] = b.to_string()
    code = EXIT_OK
    if args.brute:
        try:
            brute = brute_force_odd_bipartite(G)
        except TooLarge as exc:
            print(f"warning: {exc}; reporting the GF(2) result only", file=sys.stderr)
            res["brute_force"] = None
        else:
            res["brute_force"] = brute
            if brute != res["odd_bipartite"]:
                code = EXIT_FAIL
            _say(args, f"{'PASS' if code == EXIT_OK else 'FAIL'} brute_force_agrees")
    _emit(args, _document(args, argv, [args.input], None, [res]))
    return code


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v) if math.isfinite(v) else ""
    return str(v)


def _write_csv(path: str, rows: list[dict]) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["param", "lambda", "bound", "margin"])
    for row in rows:
        w.writerow([row["param"], *(_cell(row[c]) for c in ("lambda", "bound", "margin"))])
    with open(path, "w") as fh:
        fh.write(buf.getvalue())


def cmd_experiment(args, argv) -> int:
    base, base_src = _load(args.base)
    inputs = [base_src]
    cfg = _config(args)
    name = args.name
    csv_rows = None
    u = args.vertex if args.vertex is not None else 0
    if name == "relocate":
        src = args.from_ if args.from_ is not None else u
        if args.to is None:
            raise HyperspecError("relocate needs --to")
        H, path = _branch(args.branch or "path:1", base.k)
        if path:
            inputs.append(path)
        rep = lab.relocation_experiment(coalesce(base, src, H, args.branch_root), args.to, cfg)
    elif name == "gst-scan":
        if args.total is None or args.total < 1:
            raise HyperspecError("gst-scan needs --total >= 1")
        rep = lab.gst_scan(base, u, args.total, cfg)
        csv_rows = [
            {"param": f"{r['s']}/{r['t']}", "lambda": r["lambda"], "bound": "", "margin": ""}
            for r in rep.data["rows"]
        ]
    elif name == "minimize-class":
        if args.m is None:
            raise HyperspecError("minimize-class needs --m")
        rep = lab.minimize_class(base, args.m, cfg)
    elif name in ("bounds", "verify-eigvec"):
        spec = args.branch or f"path:{args.m if args.m is not None else 1}"
        H, path = _branch(spec, base.k)
        if path:
            inputs.append(path)
        P = coalesce(base, u, H, args.branch_root)
        rep = lab.bounds_report(P, cfg) if name == "bounds" else lab.verify_eigvec(P, cfg)
    else:  # limit-scan
        if args.mmax is None or args.mmax < 0:
            raise HyperspecError("limit-scan needs --mmax >= 0")
        rep = lab.limit_scan(base, u, args.mmax, args.family, cfg)
        csv_rows = [
            {"param": r["m"], "lambda": r["lambda"], "bound": r["bound"], "margin": r["margin"]}
            for r in rep.data["rows"]
        ]
    _emit(args, _document(args, argv, inputs, cfg, [rep.to_dict()]))
    for line in rep.summary_lines():
        _say(args, line)
    if args.csv:
        if csv_rows is None:
            raise HyperspecError(f"--csv is only available for scans, not {name}")
        _write_csv(args.csv, csv_rows)
    return EXIT_OK if rep.passed else EXIT_FAIL


def _tree_edges(spec: str) -> list[tuple[int, int]]:
    edges = []
    for part in filter(None, spec.split(",")):
        a, sep, b = part.partition("-")
        try:
            edges.append((int(a), int(b)))
        except ValueError:
            raise HyperspecError(f"bad tree edge {part!r}; expected A-B") from None
    return edges


def cmd_generate(args, argv) -> int:
    fam, k = args.family, args.k
    if fam == "k5_4":
        G = complete_hypergraph(5, 4)
    elif fam in ("hyperpath", "hyperstar"):
        if args.m is None or args.m < 0:
            raise HyperspecError(f"{fam} needs --m >= 0")
        G = (hyperpath if fam == "hyperpath" else hyperstar)(args.m, k)
    elif fam == "power-tree":
        if not args.tree:
            raise HyperspecError("power-tree needs --tree A-B,B-C,...")
        G = power_hypertree(_tree_edges(args.tree), k)
    else:  # gst
        if args.s is None or args.t is None:
            raise HyperspecError("gst needs --s and --t")
        base, _ = _load(args.base)
        G = build_gst(base, args.vertex if args.vertex is not None else 0, args.s, args.t)
    text = format_hgf(G)
    parse_hgf(text)  # generated files must read back
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -------------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--seed", type=int, default=42, help="master RNG seed (default 42)")
    common.add_argument("--restarts", type=int, help="solver restarts")
    common.add_argument("--tol", type=float, help="solver residual tolerance")
    common.add_argument("--workers", type=int, default=1, help="worker processes")
    common.add_argument("--out", help="write output here instead of stdout")

    p = _Parser(prog="hyperspec", description="Least signless Laplacian H-eigenvalues of uniform hypergraphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("lambda-min", parents=[common], help="least H-eigenvalue of an HGF file")
    s.add_argument("input")
    s.set_defaults(func=cmd_lambda_min)

    s = sub.add_parser("odd-bipartite", parents=[common], help="odd-bipartition test")
    s.add_argument("input")
    s.add_argument("--brute", action="store_true", help="cross-check by exhaustive search")
    s.set_defaults(func=cmd_odd_bipartite)

    s = sub.add_parser("experiment", parents=[common], help="run a structure experiment")
    s.add_argument("name", choices=EXPERIMENTS)
    s.add_argument("--base", default="k5_4", help="HGF path or k5_4 (default)")
    s.add_argument("--vertex", type=int, help="base vertex carrying the branch (default 0)")
    s.add_argument("--m", type=int, help="edges in the attached part")
    s.add_argument("--mmax", type=int, help="largest m for limit-scan")
    s.add_argument("--total", type=int, help="s + t for gst-scan")
    s.add_argument("--branch", help="path:M, star:M or an HGF path")
    s.add_argument("--branch-root", type=int, default=0, help="branch vertex glued to the base")
    s.add_argument("--from", dest="from_", type=int, help="relocate: current cut vertex")
    s.add_argument("--to", type=int, help="relocate: target base vertex")
    s.add_argument("--family", choices=("path", "star"), default="path")
    s.add_argument("--csv", help="scan table as CSV (param, lambda, bound, margin)")
    s.set_defaults(func=cmd_experiment)

    s = sub.add_parser("generate", parents=[common], help="write a standard hypergraph as HGF")
    s.add_argument("family", choices=FAMILIES)
    s.add_argument("--k", type=int, default=4)
    s.add_argument("--m", type=int)
    s.add_argument("--tree", help="power-tree edges, e.g. 0-1,1-2")
    s.add_argument("--s", type=int)
    s.add_argument("--t", type=int)
    s.add_argument("--base", default="k5_4")
    s.add_argument("--vertex", type=int)
    s.set_defaults(func=cmd_generate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, argv)
    except NoConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOCONV
    except (HyperspecError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
