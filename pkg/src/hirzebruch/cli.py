"""Command-line front end.

Every subcommand is turned into a request dict (the same shape ``batch``
reads) and answered by :func:`handle`, so single runs and batch runs share
one code path.  Rationals are serialized as strings such as ``"-3/2"``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import ampleness, gaeta, global_generation as gg
from .betti import betti, is_special
from .chern import ChernCharacter, chi, discriminant, validate
from .construction import build_model, predicted_betti
from .errors import (
    AmbiguousModification,
    HirzebruchError,
    Infeasible,
    InvalidCharacter,
    UnsupportedCase,
)
from .grid import characters
from .line_cohomology import cohomology
from .surface import DivisorClass, Surface

CHARACTER_COMMANDS = ("betti", "special", "gaeta", "gg", "ample")
P2_COMMANDS = ("gg", "ample")

GRIDS = {
    "small": {"e": 2, "r": 3, "c": 3, "delta": 2},
    "full": {"e": 3, "r": 4, "c": 6, "delta": 4},
}


class UsageError(InvalidCharacter):
    pass


def _q(x) -> str:
    return str(Fraction(x))


def _rational(s) -> Fraction:
    try:
        return Fraction(str(s).strip().replace("−", "-"))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"not a rational number: {s!r}") from exc


def _int(x, what) -> int:
    if isinstance(x, bool):
        raise UsageError(f"{what} must be an integer")
    try:
        return int(str(x).strip())
    except ValueError as exc:
        raise UsageError(f"{what} must be an integer, got {x!r}") from exc


# -- requests ---------------------------------------------------------------


def _surface(req):
    s = req.get("surface")
    if not isinstance(s, dict) or s.get("type") not in ("fe", "p2"):
        raise UsageError('surface must be {"type": "fe", "e": int} or {"type": "p2"}')
    if s["type"] == "p2":
        return None
    e = _int(s.get("e"), "e")
    if e < 0:
        raise UsageError(f"e must be nonnegative, got {e}")
    return Surface(e)


def _c1_pair(c1):
    if not isinstance(c1, (list, tuple)) or len(c1) != 2:
        raise UsageError(f"c1 must be a pair [k, l] on F_e, got {c1!r}")
    return DivisorClass(_int(c1[0], "k"), _int(c1[1], "l"))


def _character(req, X):
    rank = _int(req.get("rank"), "rank")
    ch2 = _rational(req.get("ch2", "0"))
    if X is None:
        c1 = req.get("c1")
        if isinstance(c1, (list, tuple)):
            raise UsageError("c1 on P^2 is a single integer")
        return gg.validate_p2(gg.P2Character(rank, _int(c1, "d"), ch2))
    return validate(X, ChernCharacter(rank, _c1_pair(req.get("c1")), ch2))


def _betti_json(t):
    return {"h0": t.h0, "h1": t.h1, "h2": t.h2}


def _cmd_lb(req):
    X = _surface(req)
    if X is None:
        raise UsageError("lb is only defined on F_e")
    D = _c1_pair(req.get("c1"))
    t = cohomology(X, D)
    return {**_betti_json(t), "chi": X.chi_line(D), "trace": list(t.trace)}


def _cmd_betti(req):
    X = _surface(req)
    if X is None:
        raise UsageError("betti is only defined on F_e")
    v = _character(req, X)
    res = betti(X, v)
    return {**_betti_json(res.triple), "chi": chi(X, v), "delta": _q(discriminant(X, v)),
            "trace": list(res.case_trace), "m": res.m}


def _cmd_special(req):
    X = _surface(req)
    if X is None:
        raise UsageError("special is only defined on F_e")
    v = _character(req, X)
    s = is_special(X, v)
    out = {"verdict": s.verdict, "clause": s.clause, "m": s.m}
    if s.via_serre_dual:
        out["convention"] = "nu.F < -1: verdict of the Serre dual character"
    return out


def _cmd_gaeta(req):
    X = _surface(req)
    if X is None:
        raise UsageError("gaeta is only defined on F_e")
    v = _character(req, X)
    out = {}
    try:
        res = gaeta.find_L(X, v)
    except Infeasible as exc:
        out = {"verdict": "Infeasible", "guaranteed": exc.guaranteed, "certified": exc.certified,
               "x_range": list(exc.region.x_range),
               "y_range": list(exc.region.y_range) if exc.region.y_range else None}
    else:
        out = {"verdict": "Feasible", "L": [res.L.a, res.L.b],
               "exponents": dict(zip(("alpha", "beta", "gamma", "delta"), res.exponents)),
               "guaranteed": res.guaranteed, "resolution": res.render(X)}
    if req.get("all"):
        out["twists"] = [[L.a, L.b] for L in gaeta.feasible_twists(X, v)]
    return out


def _gg_json(verdict):
    return {"verdict": verdict.verdict, "clause": verdict.clause,
            "witness": list(verdict.witness) if verdict.witness else None,
            "ruling": verdict.ruling, "reason": verdict.reason}


def _cmd_gg(req):
    X = _surface(req)
    v = _character(req, X)
    lenient = bool(req.get("lenient"))
    if X is None:
        return _gg_json(gg.gg_p2(v, lenient=lenient))
    return _gg_json(gg.gg_hirzebruch(X, v, lenient=lenient))


def _cmd_ample(req):
    X = _surface(req)
    v = _character(req, X)
    st = ampleness.ample_status_p2(v) if X is None else ampleness.ample_status(X, v)
    return {"status": st.status, "clause": st.clause, "extended": st.extended, "reason": st.reason,
            "star_lhs": _q(st.star_lhs), "star_rhs": _q(st.star_rhs)}


HANDLERS = {
    "lb": _cmd_lb,
    "betti": _cmd_betti,
    "special": _cmd_special,
    "gaeta": _cmd_gaeta,
    "gg": _cmd_gg,
    "ample": _cmd_ample,
}


def handle(req: dict) -> dict:
    """Answer one request; errors are reported in the response, never raised."""
    resp = dict(req)
    try:
        cmd = req.get("cmd")
        if cmd not in HANDLERS:
            raise UsageError(f"unknown cmd {cmd!r}")
        resp["result"] = HANDLERS[cmd](req)
        resp["exit"] = 0
    except UnsupportedCase as exc:
        resp["error"] = {"type": type(exc).__name__, "message": str(exc), "clause": exc.clause}
        resp["exit"] = 2
    except (InvalidCharacter, HirzebruchError) as exc:
        resp["error"] = {"type": type(exc).__name__, "message": str(exc)}
        resp["exit"] = 1
    return resp


# -- verification sweep -------------------------------------------------------


def grid_bounds(name: str) -> dict:
    bounds = dict(GRIDS[name])
    override = os.environ.get("HIRZ_GRID")
    if override:
        for item in override.split(","):
            key, _, val = item.partition("=")
            key = key.strip()
            if key not in bounds:
                raise UsageError(f"HIRZ_GRID: unknown key {key!r}; use e, r, c, delta")
            bounds[key] = _int(val, key) if key != "delta" else _rational(val)
    return bounds


def verify(bounds: dict) -> dict:
    """Compare :func:`predicted_betti` with :func:`betti` over a grid of characters."""
    stats = {"grid": 0, "matches": 0, "abstentions": 0, "unsupported": 0, "failures": 0}
    failures = []
    for e in range(bounds["e"] + 1):
        X = Surface(e)
        for v in characters(X, bounds["r"], bounds["c"], bounds["delta"]):
            stats["grid"] += 1
            try:
                expected = betti(X, v).triple
            except UnsupportedCase:
                stats["unsupported"] += 1
                continue
            try:
                got = predicted_betti(X, build_model(X, v))
            except AmbiguousModification:
                stats["abstentions"] += 1
                continue
            if got == expected:
                stats["matches"] += 1
            else:
                stats["failures"] += 1
                failures.append(f"F_{e} {v}: betti {expected.as_tuple()} model {got.as_tuple()}")
    checked = stats["grid"] - stats["unsupported"]
    stats["abstention_rate"] = _q(Fraction(stats["abstentions"], checked)) if checked else "0"
    stats["failure_examples"] = failures[:10]
    return stats


# -- output -------------------------------------------------------------------


def _fmt(x):
    if isinstance(x, list):
        return " > ".join(map(str, x)) if all(isinstance(i, str) for i in x) else ",".join(map(str, x))
    if isinstance(x, dict):
        return " ".join(f"{k}={v}" for k, v in x.items())
    return "-" if x is None else str(x)


def render_table(resp: dict) -> str:
    if "error" in resp:
        err = resp["error"]
        tail = f" ({err['clause']})" if err.get("clause") else ""
        return f"error: {err['type']}: {err['message']}{tail}"
    surface = resp["surface"]
    cols = [("surface", "P2" if surface["type"] == "p2" else f"F_{surface['e']}")]
    if resp["cmd"] != "lb":
        cols += [("rank", resp.get("rank")), ("c1", resp.get("c1")), ("ch2", resp.get("ch2"))]
    else:
        cols += [("D", resp.get("c1"))]
    result = resp["result"]
    cols += [(k, v) for k, v in result.items() if k not in ("resolution", "twists")]
    cells = [(k, _fmt(v)) for k, v in cols]
    widths = [max(len(k), len(v)) for k, v in cells]
    lines = ["  ".join(k.ljust(w) for (k, _), w in zip(cells, widths)).rstrip(),
             "  ".join(v.ljust(w) for (_, v), w in zip(cells, widths)).rstrip()]
    if "resolution" in result:
        lines.append(result["resolution"])
    if "twists" in result:
        lines.append("feasible twists in box: " + " ".join(f"({a},{b})" for a, b in result["twists"]))
    return "\n".join(lines)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


# -- argument parsing ------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


_VALUE_FLAGS = {"--c1", "--ch2", "--a", "--b", "--e", "--r"}


def _glue_negative_values(argv):
    """Turn ``--c1 -2,3`` into ``--c1=-2,3`` so argparse does not read a flag."""
    out, it = [], iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hirz", description="Exact invariants of sheaves on Hirzebruch surfaces.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    lb = sub.add_parser("lb", help="cohomology of the line bundle O(aE+bF)")
    lb.add_argument("--e", type=int, required=True)
    lb.add_argument("--a", type=int, required=True)
    lb.add_argument("--b", type=int, required=True)
    lb.add_argument("--json", action="store_true")

    for name in CHARACTER_COMMANDS:
        sp = sub.add_parser(name)
        if name in P2_COMMANDS:
            sp.add_argument("--surface", choices=("fe", "p2"), default="fe")
        sp.add_argument("--e", type=int)
        sp.add_argument("--r", required=True)
        sp.add_argument("--c1", required=True, help="K,L on F_e (c1 = KE + LF); D on P^2")
        sp.add_argument("--ch2", default="0", help='exact rational, e.g. "-3/2"')
        sp.add_argument("--json", action="store_true")
        if name == "gaeta":
            sp.add_argument("--all", action="store_true", help="list every feasible twist in the search box")
        if name == "gg":
            sp.add_argument("--lenient", action="store_true",
                            help="report a non-nef slope as NotGloballyGenerated instead of failing")

    b = sub.add_parser("batch", help="answer a JSON array of requests")
    b.add_argument("--in", dest="inp", required=True)
    b.add_argument("--out", required=True)
    b.add_argument("--jobs", type=int, default=os.cpu_count() or 1)

    v = sub.add_parser("verify", help="cross-check Betti numbers against explicit models")
    v.add_argument("--grid", choices=tuple(GRIDS), default="small")
    v.add_argument("--json", action="store_true")
    return p


def request_from_args(args) -> dict:
    if args.cmd == "lb":
        return {"cmd": "lb", "surface": {"type": "fe", "e": args.e}, "c1": [args.a, args.b]}
    on_p2 = getattr(args, "surface", "fe") == "p2"
    if on_p2:
        surface = {"type": "p2"}
        c1 = _int(args.c1, "c1")
    else:
        if args.e is None:
            raise UsageError("--e is required on F_e")
        surface = {"type": "fe", "e": args.e}
        parts = args.c1.split(",")
        if len(parts) != 2:
            raise UsageError(f"--c1 must be K,L, got {args.c1!r}")
        c1 = [_int(parts[0], "K"), _int(parts[1], "L")]
    req = {"cmd": args.cmd, "surface": surface, "rank": _int(args.r, "rank"), "c1": c1,
           "ch2": str(_rational(args.ch2))}
    if getattr(args, "all", False):
        req["all"] = True
    if getattr(args, "lenient", False):
        req["lenient"] = True
    return req


def run_batch(requests, jobs: int = 1) -> list:
    if not isinstance(requests, list):
        raise UsageError("batch input must be a JSON array")
    with ThreadPoolExecutor(max_workers=max(1, jobs)) as pool:
        return list(pool.map(handle, requests))


def run(argv=None) -> int:
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "batch":
            with open(args.inp) as fh:
                requests = json.load(fh)
            responses = run_batch(requests, args.jobs)
            with open(args.out, "w") as fh:
                fh.write(json.dumps(responses, sort_keys=True, indent=1) + "\n")
            return 0
        if args.cmd == "verify":
            stats = verify(grid_bounds(args.grid))
            if args.json:
                print(dumps(stats))
            else:
                for key in ("grid", "matches", "abstentions", "abstention_rate", "unsupported", "failures"):
                    print(f"{key:16s} {stats[key]}")
                for line in stats["failure_examples"]:
                    print("  " + line)
            return 1 if stats["failures"] else 0
        req = request_from_args(args)
    except (UsageError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    resp = handle(req)
    if args.json:
        print(dumps(resp))
    else:
        text = render_table(resp)
        print(text, file=sys.stderr if "error" in resp else sys.stdout)
    return resp["exit"]


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
