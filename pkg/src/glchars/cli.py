"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from collections.abc import Sequence
from dataclasses import dataclass

from . import sums
from .abelian import BudgetExceeded
from .chars import standard_psi
from .context import LevelError, get_context
from .group import DEFAULT_BUDGET, class_count, class_reps, class_sizes, group_order
from .irreps import character_table, dimension, enumerate_irreps, family_counts
from .ring import KINDS, MIXED, Ring, RingError, make_ring

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

SUM_NAMES = ("gauss", "kloosterman", "salie", "T", "rho", "quad_diff", "scaled_unit", "identity1", "chi2")


@dataclass(frozen=True)
class RunConfig:
    command: str
    p: int = 3
    f: int = 1
    r: int = 2
    char_kind: str = MIXED
    budget: int = DEFAULT_BUDGET
    fmt: str = "csv"
    level: str = "fast"

    def ring(self) -> Ring:
        return make_ring(self.p, self.f, self.r, self.char_kind)

    def ring_params(self) -> dict:
        return {"p": self.p, "f": self.f, "r": self.r, "char_kind": self.char_kind}


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue()


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ------------------------------------------------------------------ commands
def cmd_info(cfg: RunConfig) -> str:
    R = cfg.ring()
    q, r = R.q, R.r
    n_r = class_count(R)
    n_prev = class_count(make_ring(R.p, R.f, r - 1, R.kind)) if r > 1 else 1
    info = {
        **cfg.ring_params(),
        "q": q,
        "group_order": group_order(R),
        "class_count": n_r,
        "strongly_primitive": n_r - q * n_prev if r > 1 else None,
    }
    if r >= 2 and r % 2 == 0:
        info["family_counts"] = family_counts(q, r)
    if cfg.fmt == "json":
        return _json(info)
    return _csv([[k, json.dumps(v) if isinstance(v, dict) else ("" if v is None else v)] for k, v in info.items()])


def cmd_classes(cfg: RunConfig) -> str:
    R = cfg.ring()
    reps = class_reps(R)
    sizes = class_sizes(R, cfg.budget)
    if cfg.fmt == "json":
        return _json({"ring": cfg.ring_params(), "classes": [
            {"label": c.name(R), **c.to_json(R), "size": s} for c, s in zip(reps, sizes)]})
    return _csv([["label", "kind", "i", "size"]] + [[c.name(R), c.kind, c.i, s] for c, s in zip(reps, sizes)])


def cmd_irreps(cfg: RunConfig) -> str:
    ctx = get_context(cfg.p, cfg.f, cfg.r, cfg.char_kind, cfg.budget)
    R = ctx.ring
    labels = enumerate_irreps(ctx)
    got = {fam: sum(L.family == fam for L in labels) for fam in ("PS", "C", "NPS")}
    want = family_counts(ctx.q, ctx.r)
    if cfg.fmt == "json":
        return _json({
            "ring": cfg.ring_params(),
            "counts": {fam: {"enumerated": got[fam], "formula": want[fam]} for fam in got},
            "irreps": [{"label": L.name(R), "dimension": dimension(L, R), **L.to_json(R)} for L in labels],
        })
    rows = [["label", "family", "dimension"]] + [[L.name(R), L.family, dimension(L, R)] for L in labels]
    rows += [[f"count:{fam}", got[fam], want[fam]] for fam in got]
    return _csv(rows)


def cmd_table(cfg: RunConfig) -> str:
    ctx = get_context(cfg.p, cfg.f, cfg.r, cfg.char_kind, cfg.budget)
    R = ctx.ring
    labels = enumerate_irreps(ctx)
    table = character_table(ctx, labels)
    cols = [c.name(R) for c in ctx.classes]
    if cfg.fmt == "json":
        return _json({
            "ring": cfg.ring_params(),
            "m": ctx.m,
            "classes": cols,
            "irreps": [L.name(R) for L in labels],
            "table": [[v.to_json()["terms"] for v in row] for row in table],
        })
    return _csv([["irrep"] + cols] + [[L.name(R)] + [v.render() for v in row] for L, row in zip(labels, table)])


def cmd_sums(cfg: RunConfig, args: argparse.Namespace) -> tuple[str, bool]:
    k = args.k if args.k is not None else cfg.r
    R = make_ring(cfg.p, cfg.f, k, cfg.char_kind)
    psi = standard_psi(R)
    el = lambda s, default=None: default if s is None else R.parse(s)  # noqa: E731
    a, b = el(args.a, R.one), el(args.b, 0)
    eta = el(args.eta, R.nonsquare)
    name = args.name
    if name == "gauss":
        closed, direct = None, sums.gauss(a, psi)
    elif name in ("kloosterman", "salie"):
        closed, direct = None, (sums.kloosterman if name == "kloosterman" else sums.salie)(a, b, psi)
    elif name == "T":
        closed, direct = sums.T_sum(b, eta, psi), sums.T_sum_direct(b, eta, psi)
    elif name == "rho":
        y = el(args.y, 0)
        closed, direct = sums.rho_count(y, eta, R), sums.rho_count_direct(y, eta, R)
    elif name == "quad_diff":
        closed, direct = sums.quad_diff_sum(eta, psi), sums.quad_diff_sum_direct(eta, psi)
    elif name == "scaled_unit":
        j = args.j if args.j is not None else 0
        closed, direct = sums.scaled_unit_sum(j, psi), sums.scaled_unit_sum_direct(j, psi)
    elif name == "identity1":
        from .verify import primitive_one_plus_characters

        lam = primitive_one_plus_characters(R)[0]
        i = args.i if args.i is not None else 0
        closed, direct = sums.identity1_sum(i, a, lam, R), sums.identity1_sum_direct(i, a, lam, R)
    else:
        l = k // 2
        i = args.i if args.i is not None else l
        j = args.j if args.j is not None else 0
        kk = args.kk if args.kk is not None else 1
        beta1, delta1 = el(args.b, R.one), el(args.delta, R.one)
        res = sums.chi2(i, j, kk, a, beta1, delta1, psi)
        closed, direct = res.value, sums.chi2_direct(i, j, kk, a, beta1, delta1, psi)
    ok = closed is None or closed == direct
    fmt = lambda v: v if isinstance(v, int) or v is None else v.render()  # noqa: E731
    row = {"sum": name, "k": k, "closed": fmt(closed), "direct": fmt(direct),
           "equal": None if closed is None else ok}
    if cfg.fmt == "json":
        return _json(row), ok
    return _csv([list(row), ["" if v is None else v for v in row.values()]]), ok


def cmd_verify(cfg: RunConfig) -> tuple[str, bool]:
    from .verify import run_all

    table_cfg = RunConfig("table", cfg.p, cfg.f, cfg.r, cfg.char_kind, cfg.budget, "csv")
    crits = run_all(cfg.level, cfg.p, cfg.f, cfg.r, cfg.char_kind, render=lambda: cmd_table(table_cfg))
    ok = all(c.ok or c.skipped for c in crits)
    if cfg.fmt == "json":
        return _json({
            "ring": cfg.ring_params(),
            "level": cfg.level,
            "passed": ok,
            "criteria": [
                {"criterion": c.number, "title": c.title,
                 "status": "skip" if c.skipped else ("pass" if c.ok else "fail"),
                 "checks": [x.to_json() for x in c.checks]}
                for c in crits
            ],
        }), ok
    lines = []
    for c in crits:
        lines.append(c.line())
        lines += [f"    {'ok  ' if x.ok else 'FAIL'} {x.name}" for x in c.checks]
    return "\n".join(lines) + "\n", ok


# ---------------------------------------------------------------- argparse
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, default=3, help="residue characteristic (default: 3)")
    common.add_argument("--f", type=int, default=1, help="residue degree, q = p^f (default: 1)")
    common.add_argument("--r", type=int, default=2, help="level, GL(2, O_r) (default: 2)")
    common.add_argument("--char-kind", choices=KINDS, default=MIXED,
                        help="mixed: Galois ring GR(p^r, f); equal: F_q[t]/t^r (default: mixed)")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                        help=f"cap on |G| for brute-force group work (default: {DEFAULT_BUDGET})")
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv",
                        help="output format (default: csv)")

    ap = argparse.ArgumentParser(prog="glchars", description="Characters of GL(2, O_r) at even level.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="group order, class count and irrep counts")
    sub.add_parser("classes", parents=[common], help="conjugacy class representatives with sizes")
    sub.add_parser("irreps", parents=[common], help="strongly primitive irreducibles with dimensions")
    sub.add_parser("table", parents=[common], help="character table (irreps x classes)")
    s = sub.add_parser("sums", parents=[common], help="evaluate an exponential sum, closed form and brute force")
    s.add_argument("name", choices=SUM_NAMES)
    s.add_argument("--k", type=int, default=None, help="sum over O_k (default: --r)")
    for flag, what in (("a", "first argument / α"), ("b", "second argument / β'"),
                       ("eta", "non-square unit η"), ("y", "target of rho"), ("delta", "Δ̂' for chi2")):
        s.add_argument(f"--{flag}", default=None, help=f"{what}, as digits '1:2' or an integer")
    s.add_argument("--i", type=int, default=None)
    s.add_argument("--j", type=int, default=None)
    s.add_argument("--kk", type=int, default=None, help="the k parameter of chi2")
    v = sub.add_parser("verify", parents=[common], help="run the exact verification suite")
    v.add_argument("--level", choices=("fast", "full"), default="fast",
                   help="fast caps brute force at |G| <= 10^4; full allows 10^6 (default: fast)")
    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    cfg = RunConfig(args.command, args.p, args.f, args.r, args.char_kind, args.budget, args.fmt,
                    getattr(args, "level", "fast"))
    if cfg.command == "verify":
        from .verify import FAST_BUDGET, FULL_BUDGET

        cfg = RunConfig(cfg.command, cfg.p, cfg.f, cfg.r, cfg.char_kind,
                        min(cfg.budget, FAST_BUDGET if cfg.level == "fast" else FULL_BUDGET), cfg.fmt, cfg.level)
    try:
        cfg.ring()
        ok = True
        if cfg.command == "info":
            out = cmd_info(cfg)
        elif cfg.command == "classes":
            out = cmd_classes(cfg)
        elif cfg.command == "irreps":
            out = cmd_irreps(cfg)
        elif cfg.command == "table":
            out = cmd_table(cfg)
        elif cfg.command == "sums":
            out, ok = cmd_sums(cfg, args)
        else:
            out, ok = cmd_verify(cfg)
    except BudgetExceeded as exc:
        print(f"glchars: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (RingError, LevelError, ValueError) as exc:
        print(f"glchars: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(out)
    sys.stdout.flush()
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
