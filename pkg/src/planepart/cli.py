"""Command-line interface: ``python -m planepart <command> ...``.

Exit codes: 0 success, 1 verification failure or invalid object, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from . import closedform as cf
from . import cspp as _cspp
from . import domino as _domino
from . import tspp as _tspp
from . import verify as _verify
from .catalog import CLASSES, collect, count, parse_object
from .exact import determinant
from .tspp import SizeLimitError

EXHAUSTIVE_LIMIT = 7
MAX_LIMIT = 9
MAPS = ("gamma_bij", "tbk", "pi", "rho", "gamma", "theta", "delta", "phi")
MATRICES = ("R_o", "R_e", "C_o", "C_e", "Rprime", "Cprime", "Rprime_sum", "Cprime_sum")


class UsageError(Exception):
    pass


def _emit(line=""):
    sys.stdout.write(line + "\n")


def _warn(msg):
    sys.stderr.write(f"warning: {msg}\n")


def _limit(args, default=EXHAUSTIVE_LIMIT):
    limit = args.limit if args.limit is not None else default
    if limit > MAX_LIMIT:
        raise UsageError(f"--limit {limit} exceeds the maximum {MAX_LIMIT}")
    if args.limit is not None and limit > EXHAUSTIVE_LIMIT:
        _warn(f"limit {limit} is above the desk-scale bound {EXHAUSTIVE_LIMIT}; this may be slow")
    return limit


# -- enumerate --------------------------------------------------------------


def _write_objects(objs, fmt):
    if fmt == "json":
        for x in objs:
            _emit(json.dumps(x.to_json(), sort_keys=True))
    elif fmt == "ascii":
        for idx, x in enumerate(objs):
            if idx:
                _emit()
            _emit(x.to_ascii())
    else:
        w = csv.writer(sys.stdout, lineterminator="\n")
        w.writerow(["index", "object"])
        for idx, x in enumerate(objs):
            w.writerow([idx, json.dumps(x.to_json(), sort_keys=True)])


def cmd_enumerate(args):
    # count-only runs may go to the count bound without asking
    limit = _limit(args, MAX_LIMIT if args.count else EXHAUSTIVE_LIMIT)
    try:
        if args.count:
            _emit(str(count(args.cls, args.n, args.m, args.filter, limit=limit, jobs=args.jobs)))
            return 0
        objs = collect(args.cls, args.n, args.m, args.filter, limit=limit, jobs=args.jobs)
    except SizeLimitError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None
    _write_objects(objs, args.format)
    return 0


# -- map --------------------------------------------------------------------


def _parse_map(spec):
    name, _, arg = spec.partition(":")
    if name not in MAPS:
        raise UsageError(f"unknown map {spec!r}; choose from {', '.join(MAPS)}")
    if name in ("tbk", "pi"):
        if not arg.isdigit():
            raise UsageError(f"map {name} needs an index, e.g. {name}:2")
        return name, int(arg)
    if arg:
        raise UsageError(f"map {name} takes no index")
    return name, None


def _apply(name, r, x):
    """Image of x and a function inverting it."""
    if name == "gamma_bij":
        if isinstance(x, _cspp.Cspp):
            return _cspp.gamma_bij(x), _cspp.gamma_bij_inv
        if isinstance(x, _tspp.Tspp):
            return _cspp.gamma_bij_inv(x), _cspp.gamma_bij
    elif name == "tbk" and isinstance(x, _cspp.Cspp):
        return _cspp.tbk(x, r), lambda y: _cspp.tbk(y, r)
    elif name == "pi" and isinstance(x, _tspp.Tspp):
        return _tspp.pi_r(x, r), lambda y: _tspp.pi_r(y, r)
    elif name in ("rho", "gamma"):
        if isinstance(x, _tspp.Tspp):
            f = _tspp.rho if name == "rho" else _tspp.gamma
            return f(x), f
        if isinstance(x, _cspp.Cspp):
            f = _cspp.rho_tilde if name == "rho" else _cspp.gamma_tilde
            return f(x), f
    elif name == "theta":
        if isinstance(x, _cspp.Cspp):
            return _domino.theta(x), _domino.theta_inv
        if isinstance(x, _domino.DominoTableau):
            return _domino.theta_inv(x), _domino.theta
    elif name == "delta":
        if isinstance(x, _cspp.Cspp):
            return _domino.delta(x), _domino.delta_inv
        if isinstance(x, _domino.DominoTableau):
            return _domino.delta_inv(x), _domino.delta
    elif name == "phi":
        if isinstance(x, _domino.DominoTableau):
            fam = x.family
            return _domino.phi(x), lambda p: _domino.phi_inv(p, fam)
        if isinstance(x, _domino.PairedPP):
            return _domino.phi_inv(x), _domino.phi
    raise ValueError(f"map {name} does not accept a {type(x).__name__}")


def cmd_map(args):
    name, r = _parse_map(args.map)
    status = 0
    lines = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
    if not lines:
        raise UsageError("no input on stdin")
    for ln in lines:
        try:
            x = parse_object(json.loads(ln))
            y, back = _apply(name, r, x)
        except json.JSONDecodeError as e:
            sys.stderr.write(f"error: bad JSON: {e}\n")
            return 1
        except ValueError as e:
            sys.stderr.write(f"error: {e}\n")
            return 1
        if args.format == "ascii":
            _emit(y.to_ascii())
        else:
            _emit(json.dumps(y.to_json(), sort_keys=True))
        if args.roundtrip:
            z = back(y)
            if z.to_json() != x.to_json():
                sys.stderr.write(f"error: roundtrip mismatch for {name}: {json.dumps(z.to_json())}\n")
                status = 1
    return status


# -- genpoly ----------------------------------------------------------------


def _stat_for(cls, k):
    if cls == "tspp":
        return lambda b: _tspp.stat_Ubar(b, k)
    if cls == "cspp":
        return lambda c: _cspp.stat_Ubar(c, k)
    if cls in ("hpcspp", "vpcspp"):
        return lambda p: _domino.stat_Ubar_pair(p, k)
    return lambda d: _domino.stat_Ubar_domino(d, k)


def cmd_genpoly(args):
    limit = _limit(args)
    N = args.n + args.m
    if not 1 <= args.k <= N:
        raise UsageError(f"--k must lie in [1, {N}]")
    try:
        objs = collect(args.cls, args.n, args.m, args.filter, limit=limit, jobs=args.jobs)
    except SizeLimitError:
        raise
    except ValueError as e:
        raise UsageError(str(e)) from None
    poly = _domino.genpoly(objs, _stat_for(args.cls, args.k))
    _emit(str(poly) if args.format == "ascii" else json.dumps(poly.to_json()))
    return 0


# -- det --------------------------------------------------------------------


def _matrix(name, params):
    if name in ("R_o", "R_e", "C_o", "C_e"):
        if len(params) != 1:
            raise UsageError(f"{name} takes one size argument")
        return getattr(cf, f"matrix_{name}")(params[0])
    if len(params) not in (1, 2):
        raise UsageError(f"{name} takes n and optionally m")
    fn = {
        "Rprime": cf.matrix_Rprime,
        "Cprime": cf.matrix_Cprime,
        "Rprime_sum": cf.matrix_Rprime_sum,
        "Cprime_sum": cf.matrix_Cprime_sum,
    }[name]
    return fn(*params)


def cmd_det(args):
    if args.name in ("andrews-burge", "mrr"):
        want = 3 if args.name == "andrews-burge" else 2
        if len(args.params) != want:
            raise UsageError(f"{args.name} takes {want} integer arguments")
        if args.name == "andrews-burge":
            d, p = cf.andrews_burge_det(*args.params), cf.andrews_burge_product(*args.params)
        else:
            d, p = cf.mrr_det(*args.params), cf.mrr_product(*args.params)
        out = {"det": str(d), "product": str(p), "equal": d == p}
        _emit(json.dumps(out) if args.format == "json" else f"det = {d}\nproduct = {p}")
        return 0 if d == p else 1
    if args.name not in MATRICES:
        raise UsageError(f"unknown matrix {args.name!r}")
    try:
        M = _matrix(args.name, args.params)
    except ValueError as e:
        raise UsageError(str(e)) from None
    d = determinant(M)
    if args.format == "json":
        _emit(json.dumps({"matrix": M.to_json(), "det": d.to_json()}))
    else:
        for row in M.entries:
            _emit(" | ".join(str(e) for e in row))
        _emit(f"det = {d}")
    return 0


# -- verify / conjecture / refvalues ----------------------------------------


def _write_report(rep, fmt):
    if fmt == "json":
        _emit(_verify.report_json(rep))
    else:
        _emit(rep.to_table())


def cmd_verify(args):
    limit = _limit(args)
    rep = _verify.run_suite(args.suite, limit)
    _write_report(rep, args.format)
    return 0 if rep.ok else 1


def cmd_conjecture(args):
    limit = _limit(args)
    rep = _verify.run_conjecture(args.which, limit)
    _write_report(rep, args.format)
    return 0


def cmd_refvalues(args):
    limit = args.limit if args.limit is not None else MAX_LIMIT
    if limit < 1:
        raise UsageError("--limit must be positive")
    rows = cf.reference_table(limit)
    if args.format == "json":
        _emit(cf.table_to_json(rows))
    elif args.format == "csv":
        sys.stdout.write(cf.table_to_csv(rows))
    else:
        for r in rows:
            parts = [f"n={r['n']}", f"A={r['A']}", f"A_HTS={r['A_HTS']}"]
            if r["A_VS"] is not None:
                parts.append(f"A_VS={r['A_VS']}")
            _emit("  ".join(parts))
    return 0


# -- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser():
    p = _Parser(prog="planepart", description="Plane partitions, ASMs and domino tableaux.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    def common(sp, fmt_default="json", limit=True, jobs=False):
        sp.add_argument("--format", choices=("json", "ascii", "csv"), default=fmt_default)
        if limit:
            sp.add_argument("--limit", type=int, default=None, help="bound on n+m (max %d)" % MAX_LIMIT)
        if jobs:
            sp.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")

    e = sub.add_parser("enumerate", help="list or count a class")
    e.add_argument("cls", choices=CLASSES)
    e.add_argument("n", type=int)
    e.add_argument("m", type=int, nargs="?", default=0)
    e.add_argument("--filter", choices=("rho", "gamma", "rho_tilde", "gamma_tilde"))
    e.add_argument("--count", action="store_true")
    common(e, jobs=True)
    e.set_defaults(func=cmd_enumerate)

    mp = sub.add_parser("map", help="apply a map to JSON objects read from stdin")
    mp.add_argument("map", help="one of " + ", ".join(MAPS) + " (tbk and pi take :r)")
    mp.add_argument("--roundtrip", action="store_true")
    common(mp, limit=False)
    mp.set_defaults(func=cmd_map)

    g = sub.add_parser("genpoly", help="generating polynomial of Ubar_k over a class")
    g.add_argument("cls", choices=CLASSES)
    g.add_argument("n", type=int)
    g.add_argument("m", type=int, nargs="?", default=0)
    g.add_argument("--k", type=int, default=1)
    g.add_argument("--filter", choices=("rho", "gamma", "rho_tilde", "gamma_tilde"))
    common(g, jobs=True)
    g.set_defaults(func=cmd_genpoly)

    d = sub.add_parser("det", help="determinant matrices and the Andrews-Burge identity")
    d.add_argument("name", help="R_o, R_e, C_o, C_e, Rprime, Cprime, Rprime_sum, Cprime_sum, andrews-burge, mrr")
    d.add_argument("params", type=int, nargs="*")
    common(d, fmt_default="ascii", limit=False)
    d.set_defaults(func=cmd_det)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=_verify.SUITES + ("all",))
    common(v, fmt_default="ascii")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("conjecture", help="conjecture comparison reports")
    c.add_argument("which", choices=_verify.CONJECTURES)
    common(c, fmt_default="ascii")
    c.set_defaults(func=cmd_conjecture)

    r = sub.add_parser("refvalues", help="tables of A_n, A^HTS_n, A^VS_n and their polynomials")
    common(r, fmt_default="ascii")
    r.set_defaults(func=cmd_refvalues)
    return p


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be at least 1")
        return args.func(args)
    except UsageError as e:
        sys.stderr.write(f"usage error: {e}\n")
        return 2
    except SizeLimitError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1
    except ValueError as e:
        sys.stderr.write(f"error: {e}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
