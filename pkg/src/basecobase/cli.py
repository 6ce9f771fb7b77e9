"""Command-line front end.

Exit codes: 0 every requested verification passed, 1 one failed, 2 a result
is Unknown (budget), 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from collections.abc import Callable, Sequence
from concurrent.futures import ProcessPoolExecutor

from . import bcg
from .description import DescriptionError, load_description, parse_matroid
from .masks import from_bitstring
from .matroid import DEFAULT_BUDGET, BudgetExceeded, MatroidError, base_cobases

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_UNKNOWN = 2
EXIT_USAGE = 64

BUDGET_ENV = "BASECOBASE_BUDGET"
PROPERTIES = ("con", "circ", "scirc", "diam", "poly", "ham", "mat")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _positive(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if val <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return val


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        val = int(raw)
    except ValueError:
        raise UsageError(f"{BUDGET_ENV}={raw!r} is not an integer") from None
    if val <= 0:
        raise UsageError(f"{BUDGET_ENV} must be positive")
    return val


# ---------------------------------------------------------------------------
# output


def _verdict_code(verdicts: Sequence[str]) -> int:
    if any(v == bcg.FAILS for v in verdicts):
        return EXIT_FAIL
    if any(v == bcg.UNKNOWN for v in verdicts):
        return EXIT_UNKNOWN
    return EXIT_PASS


def _emit(args, payload, text: str | None = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, default=str))
    elif args.format == "text":
        print(text if text is not None else _as_text(payload))
    else:
        print(payload if isinstance(payload, str) else json.dumps(payload, sort_keys=True, default=str))


def _as_text(payload) -> str:
    if isinstance(payload, list):
        return "\n".join(_as_text(p) for p in payload)
    if isinstance(payload, dict):
        head = payload.get("property") or payload.get("check") or ""
        parts = [f"{k}={v}" for k, v in sorted(payload.items()) if k not in ("witness", "certificate", "log")]
        return f"{head}: " + " ".join(parts)
    return str(payload)


# ---------------------------------------------------------------------------
# check


def _run_property(M, prop: str, graph: str, budget: int, node_limit: int) -> dict:
    if prop == "mat":
        return bcg.check_mat(base_cobases(M, budget)).to_json()
    G = bcg.build_bc_graph(M, budget) if graph == "bc" else bcg.build_base_graph(M, budget)
    if prop == "con":
        rep = bcg.check_con(G)
    elif prop == "circ":
        rep = bcg.check_circ(M, G)
    elif prop == "scirc":
        rep = bcg.check_scirc(M, G)
    elif prop == "diam":
        rep = bcg.check_diam(M, G)
    elif prop == "poly":
        rep = bcg.check_poly(G)
    else:
        rep = bcg.check_ham(G, budget=node_limit)
    return rep.to_json()


def cmd_check(args) -> int:
    desc = load_description(args.matroid)
    M = parse_matroid(desc)
    props = PROPERTIES if "all" in args.property else args.property
    out = []
    for p in props:
        res = _run_property(M, p, args.graph, args.budget, args.node_limit)
        res["graph"] = "bc" if p == "mat" else args.graph
        out.append(res)
    _emit(args, {"matroid": desc, "reports": out}, "\n".join(_as_text(r) for r in out))
    return _verdict_code([r["verdict"] for r in out])


# ---------------------------------------------------------------------------
# verify


def _timed(fn: Callable[[], dict]) -> dict:
    t0 = time.perf_counter()
    res = fn()
    res["elapsed_ms"] = round((time.perf_counter() - t0) * 1e3, 3)
    return res


def cmd_verify(args) -> int:
    from . import lpm, polytope, wheels

    what = args.what

    def need(*names):
        for name in names:
            if getattr(args, name) is None:
                raise UsageError(f"verify {what} needs --{name.replace('_', '-')}")

    if what in ("structure", "bijection", "lower-bound"):
        need("n")
        kind = args.kind
        if what == "structure":
            res = _timed(lambda: {"passed": wheels.verify_structure(args.n, kind, budget=args.budget)})
        elif what == "bijection":
            res = _timed(lambda: {"passed": wheels.verify_bijection(args.n, kind, args.budget)})
        else:
            def lb():
                rep = wheels.verify_lower_bound(args.n, kind)
                return {
                    "passed": rep.matches_formula,
                    "distance": rep.distance,
                    "formula": rep.formula,
                    "pair": [str(v) for v in rep.pair],
                }
            res = _timed(lb)
        res.update(check=what, kind=kind, n=args.n)
    elif what == "necklace":
        need("n")
        res = _timed(lambda: {"passed": wheels.verify_necklace_iso(args.n, budget=args.budget)})
        res.update(check=what, n=args.n)
    elif what == "codim":
        need("matroid")
        M = parse_matroid(args.matroid)

        def codim():
            rep = polytope.verify_codim_equivalence(M, args.budget)
            return {"passed": rep.agree, **rep.to_json()}
        res = _timed(codim)
        res.update(check=what)
    elif what == "lpm":
        need("upper", "lower")
        pair = lpm.LatticePathPair.from_paths(args.upper, args.lower)

        def env():
            env_pair = lpm.bc_envelope(pair)
            direct = base_cobases(lpm.lpm_matroid(pair), args.budget)
            fam = lpm.envelope_family(pair)
            mat = bcg.check_mat(direct).verdict if direct.masks else None
            return {
                "passed": tuple(direct.masks) == tuple(fam) and mat in (None, bcg.HOLDS),
                "envelope": None if env_pair is None else [env_pair.U, env_pair.L],
                "bc_size": len(direct),
                "mat": mat,
            }
        res = _timed(env)
        res.update(check=what, upper=args.upper, lower=args.lower)
    elif what == "spex":
        rng = random.Random(args.seed)

        def spex():
            bad = []
            for i in range(args.count):
                tower = lpm.random_tower(rng)
                rep = lpm.verify_spex_preservation(tower, args.budget)
                if not rep.ok:
                    bad.append(i)
            return {"passed": not bad, "count": args.count, "failures": bad}
        res = _timed(spex)
        res.update(check=what, seed=args.seed)
    elif what == "primitives":
        from .hamengine import primitive, random_instance
        from .hamengine.verify import cover_is_valid

        rng = random.Random(args.seed)
        orders = [args.n] if args.n else [4, 5, 6, 7]

        def prims():
            bad = []
            for i in range(args.count):
                letter = "abcdefgh"[i % 8]
                n = orders[i % len(orders)]
                if letter == "h" and n < 6:
                    n = 6
                anchors = random_instance(letter, n, rng)
                pc = primitive(letter, n, *anchors, node_limit=args.node_limit)
                if not cover_is_valid(n, pc):
                    bad.append([letter, n, list(anchors)])
            return {"passed": not bad, "count": args.count, "failures": bad}
        res = _timed(prims)
        res.update(check=what, seed=args.seed)
    else:  # pragma: no cover - argparse restricts the choices
        raise UsageError(f"unknown verification {what!r}")
    _emit(args, res)
    return EXIT_PASS if res["passed"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# ham


def parse_vertex(text: str, n: int, kind: str):
    from .wheels import MINUS, PLUS, CubeVertex

    sign = PLUS
    body = text
    if text and text[-1] in "+-":
        sign = PLUS if text[-1] == "+" else MINUS
        body = text[:-1]
    if len(body) != n or set(body) - {"0", "1"}:
        raise UsageError(f"vertex {text!r} must be {n} bits followed by + or -")
    bits = from_bitstring(body)
    full = (1 << n) - 1
    if bits in (0, full):
        if kind == "wheel":
            raise UsageError(f"{text!r} is not a base-cobase of the wheel")
        sign = PLUS
    elif text[-1:] not in ("+", "-"):
        raise UsageError(f"vertex {text!r} needs a sign")
    return CubeVertex(bits, sign, n)


def cmd_ham(args) -> int:
    from .hamengine import ham_path
    from .hamengine.cube import PrimitiveFailure
    from .wheels import StitchedModel

    if args.random_pairs:
        verts = StitchedModel(args.n, args.kind).vertices
        rng = random.Random(args.seed)
        fails = []
        cases: dict[str, int] = {}
        t0 = time.perf_counter()
        for _ in range(args.random_pairs):
            u, v = rng.sample(verts, 2)
            try:
                pc = ham_path(args.kind, args.n, u, v, method=args.method, node_limit=args.node_limit)
                cases[pc.meta["case"]] = cases.get(pc.meta["case"], 0) + 1
            except (PrimitiveFailure, AssertionError) as exc:
                fails.append({"from": str(u), "to": str(v), "error": str(exc)})
        res = {
            "kind": args.kind,
            "n": args.n,
            "pairs": args.random_pairs,
            "seed": args.seed,
            "failures": fails,
            "cases": cases,
            "elapsed_ms": round((time.perf_counter() - t0) * 1e3, 3),
        }
        _emit(args, res)
        return EXIT_FAIL if fails else EXIT_PASS
    if args.source is None or args.target is None:
        raise UsageError("ham needs --from and --to, or --random-pairs")
    u = parse_vertex(args.source, args.n, args.kind)
    v = parse_vertex(args.target, args.n, args.kind)
    if u == v:
        raise UsageError("--from and --to must differ")
    try:
        pc = ham_path(args.kind, args.n, u, v, method=args.method, node_limit=args.node_limit)
    except PrimitiveFailure as exc:
        _emit(args, {"kind": args.kind, "n": args.n, "error": str(exc)})
        return EXIT_UNKNOWN if "budget" in str(exc) else EXIT_FAIL
    path = [str(x) for x in pc.paths[0]]
    res = {
        "kind": args.kind,
        "n": args.n,
        "from": str(u),
        "to": str(v),
        "case": pc.meta["case"],
        "method": pc.meta["method"],
        "verified": pc.meta.get("verified", False),
        "certificate": path,
        "log": pc.meta["log"],
    }
    _emit(args, res, f"{res['case']}: " + " ".join(path))
    return EXIT_PASS


# ---------------------------------------------------------------------------
# r10


def cmd_r10(args) -> int:
    from . import r10

    out = {}
    codes = []
    if args.verify_description or not args.laceable:
        rep = r10.describe_r10()
        out["description"] = rep.to_json()
        codes.append(EXIT_PASS if rep.passed else EXIT_FAIL)
    if args.laceable:
        lac = r10.verify_laceability(args.node_limit, long=args.long, jobs=args.jobs)
        out["laceability"] = lac.to_json()
        codes.append(EXIT_PASS if lac.status == r10.VERIFIED else EXIT_UNKNOWN)
    if args.classes:
        out["classes"] = [str(c) for c in r10.all_classes()]
    _emit(args, out)
    return max(codes, key=lambda c: (c == EXIT_FAIL, c == EXIT_UNKNOWN))


# ---------------------------------------------------------------------------
# export-dot


def cmd_export_dot(args) -> int:
    if args.graph == "model":
        from .wheels import StitchedModel

        if args.kind is None or args.n is None:
            raise UsageError("export-dot --graph model needs --kind and --n")
        dot = StitchedModel(args.n, args.kind).export_dot()
    else:
        if args.matroid is None:
            raise UsageError("export-dot needs --matroid")
        M = parse_matroid(args.matroid)
        G = bcg.build_bc_graph(M, args.budget) if args.graph == "bc" else bcg.build_base_graph(M, args.budget)
        dot = G.to_dot("BCGraph" if args.graph == "bc" else "BaseGraph")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(dot)
    else:
        sys.stdout.write(dot)
    return EXIT_PASS


# ---------------------------------------------------------------------------
# sweep


def _sweep_one(job: tuple) -> dict:
    family, n, prop, graph, budget, node_limit = job
    desc = {"type": family, "n": n}
    if family == "uniform":
        desc["r"] = n // 2
    M = parse_matroid(desc)
    try:
        res = _run_property(M, prop, graph, budget, node_limit)
    except BudgetExceeded as exc:
        res = {"property": prop, "verdict": bcg.UNKNOWN, "reason": str(exc)}
    res["matroid"] = desc
    return res


def cmd_sweep(args) -> int:
    if args.n_min > args.n_max:
        raise UsageError("--n-min exceeds --n-max")
    props = PROPERTIES if "all" in args.property else args.property
    jobs = [
        (args.family, n, p, args.graph, args.budget, args.node_limit)
        for n in range(args.n_min, args.n_max + 1)
        for p in props
    ]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(args.jobs) as ex:
            out = list(ex.map(_sweep_one, jobs))
    else:
        out = [_sweep_one(j) for j in jobs]
    _emit(args, out)
    return _verdict_code([r["verdict"] for r in out])


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--budget", type=_positive, default=None, help=f"enumeration budget (env {BUDGET_ENV})")
    common.add_argument("--node-limit", type=_positive, default=10**7, help="search node cap")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--format", choices=("json", "text", "dot"), default="json")
    common.add_argument("--jobs", type=_positive, default=os.cpu_count() or 1)

    p = _Parser(prog="basecobase", description="Base-cobase graphs of matroids.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("check", parents=[common], help="check graph properties of a matroid")
    c.add_argument("--matroid", required=True, help="JSON description or a path to one")
    c.add_argument("--property", action="append", choices=PROPERTIES + ("all",), required=True)
    c.add_argument("--graph", choices=("bc", "base"), default="bc")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", parents=[common], help="run a structural verification")
    v.add_argument(
        "what", choices=("structure", "bijection", "lower-bound", "necklace", "codim", "lpm", "spex", "primitives")
    )
    v.add_argument("--kind", choices=("wheel", "whirl"), default="wheel")
    v.add_argument("--n", type=_positive)
    v.add_argument("--matroid")
    v.add_argument("--upper")
    v.add_argument("--lower")
    v.add_argument("--count", type=_positive, default=20)
    v.set_defaults(func=cmd_verify)

    h = sub.add_parser("ham", parents=[common], help="Hamiltonian path in a wheel or whirl")
    h.add_argument("--kind", choices=("wheel", "whirl"), required=True)
    h.add_argument("--n", type=_positive, required=True)
    h.add_argument("--from", dest="source", help="start vertex, bits then + or -")
    h.add_argument("--to", dest="target", help="end vertex, bits then + or -")
    h.add_argument("--method", choices=("auto", "construct", "search"), default="auto")
    h.add_argument("--random-pairs", type=_positive, help="verify this many seeded random pairs")
    h.set_defaults(func=cmd_ham)

    r = sub.add_parser("r10", parents=[common], help="the matroid R10")
    r.add_argument("--verify-description", action="store_true")
    r.add_argument("--laceable", action="store_true")
    r.add_argument("--long", action="store_true", help="search all 1296 cross pairs")
    r.add_argument("--classes", action="store_true", help="list the 72 class labels")
    r.set_defaults(func=cmd_r10)

    d = sub.add_parser("export-dot", parents=[common], help="write a graph in DOT format")
    d.add_argument("--matroid")
    d.add_argument("--graph", choices=("bc", "base", "model"), default="bc")
    d.add_argument("--kind", choices=("wheel", "whirl"))
    d.add_argument("--n", type=_positive)
    d.add_argument("--out")
    d.set_defaults(func=cmd_export_dot)

    s = sub.add_parser("sweep", parents=[common], help="check properties over a family range")
    s.add_argument("--family", choices=("wheel", "whirl", "necklace", "uniform"), required=True)
    s.add_argument("--n-min", type=_positive, required=True)
    s.add_argument("--n-max", type=_positive, required=True)
    s.add_argument("--property", action="append", choices=PROPERTIES + ("all",), required=True)
    s.add_argument("--graph", choices=("bc", "base"), default="bc")
    s.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) if exc.code in (0, None) else EXIT_USAGE
    try:
        if args.budget is None:
            args.budget = default_budget()
        return args.func(args)
    except (UsageError, DescriptionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (MatroidError, ValueError) as exc:
        # out-of-range parameters surface here
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
