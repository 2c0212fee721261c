"""Command-line front end."""
from __future__ import annotations

import argparse
import sys
from importlib import resources
from pathlib import Path
from typing import Optional, Sequence

from .config import ConfigError, load_config, parse_config
from .linalg import DEFAULT_PRIME
from .modules import serialize_module
from .tilting import ContextError
from .workspace import CHECKS, CheckNotApplicable, UnknownModule, Workspace


def shipped_configs() -> list[str]:
    base = resources.files("taumut").joinpath("data/configs")
    return sorted(p.name[:-4] for p in base.iterdir() if p.name.endswith(".ini"))


def load_run_config(arg: str):
    """Load a config from a path, or by the name of a shipped config such as ``a3_t2``."""
    if Path(arg).exists():
        return load_config(arg)
    stem = arg[:-4] if arg.endswith(".ini") else arg
    if stem in shipped_configs():
        text = resources.files("taumut").joinpath(f"data/configs/{stem}.ini").read_text()
        return parse_config(text, f"{stem}.ini")
    raise ConfigError(f"no config file '{arg}' (shipped: {', '.join(shipped_configs())})")


def _bare_prime(argv: list) -> list:
    # a bare --prime before the subcommand would otherwise swallow its name
    out = []
    for k, a in enumerate(argv):
        out.append(a)
        if a == "--prime" and not (k + 1 < len(argv) and argv[k + 1].isdigit()):
            out[-1] = f"--prime={DEFAULT_PRIME}"
    return out


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="taumut", description="Mutation of tau-exceptional sequences over R(x)kQ.")
    p.add_argument("--config", required=True,
                   help="config file, or the name of a shipped config such as a3_t2")
    p.add_argument("--prime", type=int, nargs="?", const=DEFAULT_PRIME, default=None,
                   help=f"cross-check Hom dimensions modulo a prime (default {DEFAULT_PRIME})")
    p.add_argument("--threads", type=int, default=4, help="workers for graph construction")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("catalog", help="indecomposable kQ-modules by knitting")
    sub.add_parser("taurigid", help="indecomposable tau-rigid modules over the ambient algebra")
    sub.add_parser("sequences", help="complete tau-exceptional sequences")
    m = sub.add_parser("mutate", help="mutate one sequence")
    m.add_argument("--seq", required=True, help='sequence literal, e.g. "(P3,P2,P1)"')
    m.add_argument("--i", type=int, required=True, help="1-based index of the mutated pair")
    m.add_argument("--right", action="store_true", help="right mutation (inverse of left)")
    g = sub.add_parser("graph", help="mutation graph")
    g.add_argument("--dot", required=True, help="output path for the DOT file")
    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("--checks", required=True, help=f"comma list from: all, {', '.join(CHECKS)}")
    d = sub.add_parser("module", help="print a module in text form")
    d.add_argument("--dump", required=True, metavar="NAME")
    return p


def _dims(X) -> str:
    return "(" + ",".join(str(x) for x in X.dims) + ")"


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(_bare_prime(list(sys.argv[1:] if argv is None else argv)))
    try:
        cfg = load_run_config(args.config)
        ws = Workspace.from_config(cfg, threads=args.threads, prime=args.prime)
    except (ConfigError, UnknownModule, ValueError) as exc:
        parser.error(str(exc))
    try:
        return _dispatch(ws, args, parser, out)
    except UnknownModule as exc:
        parser.error(str(exc))
    except CheckNotApplicable as exc:
        parser.error(str(exc))


def _dispatch(ws: Workspace, args, parser, out) -> int:
    cmd = args.command
    if cmd == "catalog":
        for e in ws.catalog.entries:
            print(f"{e.name} dims={_dims(e.module)} tau={e.tau or '-'} tau_inv={e.tau_inv or '-'}", file=out)
        return 0
    if cmd == "taurigid":
        for x in ws.tau_rigid():
            alias = ws.display(x)
            extra = f" alias={alias}" if alias != x else ""
            print(f"{x} dims={_dims(ws.ctx.rep(x))}{extra}", file=out)
        return 0
    if cmd == "sequences":
        for s in ws.sequences():
            print(ws.display_seq(s), file=out)
        return 0
    if cmd == "mutate":
        try:
            seq = ws.parse_seq(args.seq)
        except ValueError as exc:
            parser.error(str(exc))
        if not 1 <= args.i < len(seq):
            parser.error(f"--i must lie in 1..{len(seq) - 1}")
        try:
            res = ws.mutate(seq, args.i, right=args.right)
        except (ValueError, ContextError) as exc:
            parser.error(str(exc))
        print(ws.display_seq(res), file=out)
        return 0
    if cmd == "graph":
        text = ws.dot()
        try:
            Path(args.dot).write_text(text)
        except OSError as exc:
            parser.error(f"cannot write {args.dot}: {exc}")
        g = ws.graph()
        print(f"{len(g.vertices)} vertices, {len(g.edges)} edges -> {args.dot}", file=out)
        return 0
    if cmd == "verify":
        names = [c.strip() for c in args.checks.split(",") if c.strip()]
        if not names:
            parser.error("--checks needs at least one check name")
        if names == ["all"]:
            names = [c for c in CHECKS if _applicable(ws, c)]
        elif args.prime and "prime" not in names:
            names.append("prime")
        unknown = [c for c in names if c not in CHECKS]
        if unknown:
            parser.error(f"unknown check(s) {', '.join(unknown)}; available: {', '.join(CHECKS)}")
        lines = ws.verify(names)
        for line in lines:
            print(line, file=out)
        return 0 if all(" PASS " in ln for ln in lines) else 1
    if cmd == "module":
        name = ws.resolve(args.dump)
        print(serialize_module(ws.ctx.rep(name).renamed(name), ws.algebra.name), end="", file=out)
        return 0
    parser.error(f"unknown command {cmd}")


def _applicable(ws: Workspace, check: str) -> bool:
    if check in ("tau-induction", "r-exceptional"):
        return not ws.is_hereditary
    if check == "prime":
        return bool(ws.prime)
    if check == "figure1":
        try:
            ws._check_figure1_applicable()
        except CheckNotApplicable:
            return False
    return True


def main() -> None:
    sys.exit(run())
