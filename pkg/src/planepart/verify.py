"""Verification suites and conjecture reports.

Theorem-level checks end as ``pass`` or ``fail``.  Comparisons against
statements that are only conjectured are recorded as ``reported`` with both
sides in the witness; a mismatch there is a finding, not a failure.
"""

from __future__ import annotations

import json
import random
from dataclasses import asdict, dataclass, field

from . import closedform as cf
from . import cspp as _cspp
from . import domino as _domino
from . import tspp as _tspp
from .catalog import collect
from .exact import (
    T,
    TPoly,
    cauchy_binet_lhs_i,
    cauchy_binet_lhs_ii,
    cauchy_binet_rhs_i,
    cauchy_binet_rhs_ii,
    cofactor_determinant,
    determinant,
)
from .partition import conjugate, partitions_in_box

STATUSES = ("pass", "fail", "reported")
SUITES = ("bijections", "statistics", "determinants", "theorem-results")
CONJECTURES = ("mrr4", "mrr6", "detforms", "gcspp-cdpp")

# published catalog sizes, indexed by n (m = 0)
CATALOG = {
    "cspp_rho_tilde": [1, 2, 3, 10, 25, 140],
    "gcspp": [1, 2, 3, 10, 25, 140],
    "rdpp": [1, 1, 3, 4, 26, 50, 646],
    "cdpp": [1, 2, 3, 10, 25, 140, 588],
}


@dataclass
class Check:
    id: str
    statement: str
    status: str
    witness: dict = field(default_factory=dict)


@dataclass
class VerificationReport:
    suite: str
    checks: list = field(default_factory=list)

    def add(self, cid, statement, ok, witness=None, reported=False):
        status = "reported" if reported else ("pass" if ok else "fail")
        self.checks.append(Check(cid, statement, status, witness or {}))
        return ok

    def extend(self, other):
        self.checks += other.checks
        return self

    @property
    def ok(self):
        return all(c.status != "fail" for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.status == "fail"]

    def summary(self):
        counts = {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}
        return counts

    def to_json(self):
        return {"suite": self.suite, "ok": self.ok, "summary": self.summary(), "checks": [asdict(c) for c in self.checks]}

    def to_table(self):
        width = max((len(c.id) for c in self.checks), default=2)
        lines = [f"{'id'.ljust(width)}  status    statement"]
        for c in self.checks:
            lines.append(f"{c.id.ljust(width)}  {c.status.ljust(8)}  {c.statement}")
        s = self.summary()
        lines.append(f"{self.suite}: {s['pass']} pass, {s['fail']} fail, {s['reported']} reported")
        return "\n".join(lines)


def _sizes(limit, low=1):
    """(n, m) with low <= n+m <= limit, n >= 1."""
    return [(n, N - n) for N in range(low, limit + 1) for n in range(1, N + 1)]


def _first(items, pred):
    for x in items:
        if not pred(x):
            return x
    return None


def _js(x):
    return x.to_json() if hasattr(x, "to_json") else x


# -- bijections -------------------------------------------------------------


def suite_bijections(limit=7):
    rep = VerificationReport("bijections")
    small = min(limit, 6)
    for n, m in _sizes(small):
        allc = collect("cspp", n, m, limit=limit)
        images = [_cspp.gamma_bij(c) for c in allc]
        bad = _first(zip(allc, images), lambda p: _cspp.gamma_bij_inv(p[1]) == p[0])
        onto = len(set(images)) == len(allc) == len(collect("tspp", n, m, limit=limit))
        rep.add(f"gamma_bij.roundtrip[{n},{m}]", f"Gamma is a bijection CSPP_{{{n},{m}}} -> TSPP_{{{n},{m}}}",
                bad is None and onto, {"count": len(allc), "witness": _js(bad[0]) if bad else None})

        rs = [r for r in range(1, n + m + 1) if r > 1 or m in (0, 1)]
        bad = None
        for c, b in zip(allc, images):
            for r in rs:
                if _cspp.gamma_bij(_cspp.tbk(c, r)) != _tspp.pi_r(b, r):
                    bad = {"c": c.to_json(), "r": r}
                    break
                if _cspp.tbk(c, r) != _cspp.tbk_border(c, r) or _cspp.tbk(_cspp.tbk(c, r), r) != c:
                    bad = {"c": c.to_json(), "r": r, "route": "tbk"}
                    break
            if bad:
                break
        rep.add(f"tbk.commutes[{n},{m}]", "Gamma tbk_r = pi_r Gamma, tbk_r is an involution, both tbk routes agree",
                bad is None, {"witness": bad})

    for n, m in _sizes(limit):
        inv = _cspp.invariants_of(n, m, "rho_tilde", limit=limit)
        imgs = [_domino.theta(c) for c in inv]
        gc = collect("gcspp", n, m, limit=limit)
        bad = _first(zip(inv, imgs), lambda p: _domino.theta_inv(p[1]) == p[0])
        same = sorted(imgs, key=_domino.sort_key) == gc
        rep.add(f"theta[{n},{m}]", f"Theta maps CSPP^rho~_{{{n},{m}}} onto GCSPP_{{{n},{m}}} and inverts",
                bad is None and same, {"count": len(inv), "gcspp": len(gc), "witness": _js(bad[0]) if bad else None})

    for N in range(3, limit + 1, 2):
        inv = _cspp.invariants_of(N, 0, "gamma_tilde", limit=limit)
        imgs = [_domino.delta(c) for c in inv]
        rd = collect("rdpp", N - 2, 0, limit=limit)
        bad = _first(zip(inv, imgs), lambda p: _domino.delta_inv(p[1]) == p[0])
        same = sorted(imgs, key=_domino.sort_key) == rd
        rep.add(f"delta[{N}]", f"Delta maps CSPP^gamma~_{N} onto RDPP_{N - 2} and inverts",
                bad is None and same, {"count": len(inv), "rdpp": len(rd), "witness": _js(bad[0]) if bad else None})

    for n, m in _sizes(limit):
        ds = collect("dpp", n, m, limit=limit)
        bad = None
        imgs = []
        for d in ds:
            p = _domino.phi(d)
            imgs.append(p)
            if p != _domino.phi_diagonal(d) or _domino.phi_inv(p, "dpp") != d:
                bad = d
                break
            if not _domino.check_strip_characterization(d)["ok"]:
                bad = d
                break
        pairs = list(_domino.enumerate_pcspp(n, m, limit=limit))
        onto = bad is None and set(imgs) == set(pairs) and len(imgs) == len(pairs)
        rep.add(f"phi[{n},{m}]", f"Phi: DPP_{{{n},{m}}} -> PCSPP_{{{n},{m}}} is a bijection, both routes agree, strip rules hold",
                bad is None and onto, {"count": len(ds), "pairs": len(pairs), "witness": _js(bad)})
    return rep


# -- statistics -------------------------------------------------------------


def suite_statistics(limit=7):
    rep = VerificationReport("statistics")
    for n, m in _sizes(min(limit, 6)):
        N = n + m
        bad = None
        for c in collect("cspp", n, m, limit=limit):
            b = _cspp.gamma_bij(c)
            for r in range(1, N + 1):
                if _cspp.stat_Ubar(c, r) != _tspp.stat_Ubar(b, r):
                    bad = {"c": c.to_json(), "r": r}
                    break
                if r >= 2 and _cspp.stat_Ubar(_cspp.tbk(c, r), r) != _cspp.stat_Ubar(c, r - 1):
                    bad = {"c": c.to_json(), "r": r, "rule": "tbk swaps Ubar_r and Ubar_r-1"}
                    break
            if bad:
                break
        rep.add(f"ubar.gamma_bij[{n},{m}]", "Ubar_r(Gamma c) = Ubar_r(c); Ubar_r(tbk_r c) = Ubar_r-1(c)", bad is None, {"witness": bad})

    for n, m in _sizes(limit):
        N = n + m
        bad = _first(
            ((d, r) for d in collect("dpp", n, m, limit=limit) for r in range(1, N + 1)),
            lambda p: _domino.stat_Ubar_pair(_domino.phi(p[0]), p[1]) == _domino.stat_Ubar_domino(p[0], p[1]),
        )
        rep.add(f"ubar.phi[{n},{m}]", "Ubar_r(Phi d) = Ubar_r(d)", bad is None,
                {"witness": {"d": bad[0].to_json(), "r": bad[1]} if bad else None})

    for N in range(3, limit + 1, 2):
        bad = _first(
            _cspp.invariants_of(N, 0, "gamma_tilde", limit=limit),
            lambda c: _domino.stat_Ubar_domino(_domino.delta(c), 1) == _cspp.stat_Ubar(c, 2),
        )
        rep.add(f"ubar.delta[{N}]", "Ubar_1(Delta c) = Ubar_2(c)", bad is None, {"witness": _js(bad)})
    return rep


# -- determinants -----------------------------------------------------------


def random_matrix_pairs(count=200, seed=0):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 3)
        N = rng.randint(n, 6)
        A = [[rng.randint(-3, 3) for _ in range(N)] for _ in range(n)]
        B = [[rng.randint(-3, 3) for _ in range(N)] for _ in range(n)]
        out.append((A, B))
    return out


def suite_determinants(limit=7, samples=200, seed=0):
    rep = VerificationReport("determinants")
    for n, m in _sizes(limit):
        N = n + m
        for fam, build, build_sum in (
            ("rdpp", cf.matrix_Rprime, cf.matrix_Rprime_sum),
            ("cdpp", cf.matrix_Cprime, cf.matrix_Cprime_sum),
        ):
            M = build(n, m)
            d = determinant(M)
            objs = collect(fam, n, m, limit=limit)
            polys = {k: _domino.genpoly(objs, lambda x: _domino.stat_Ubar_domino(x, k)) for k in range(1, N + 1)}
            bad = [k for k, p in polys.items() if p != d]
            same_sum = build_sum(n, m) == M
            rep.add(f"det.{fam}[{n},{m}]", f"det of the {fam.upper()} matrix = sum t^Ubar_k over {fam.upper()}_{{{n},{m}}}, every k",
                    not bad and same_sum, {"det": d.to_json(), "bad_k": bad, "sum_route_agrees": same_sum})

    for r in range(1, 7):
        checks = {
            "R_o": cf.matrix_R_o(r) == cf.matrix_Rprime(2 * r - 1, 0),
            "R_e": cf.matrix_R_e(r) == cf.matrix_Rprime(2 * r, 0),
            "C_o": cf.matrix_C_o(r) == cf.row_op_matrix(r, True) @ cf.matrix_Cprime(2 * r - 1, 0),
            "C_e": cf.matrix_C_e(r) == cf.row_op_matrix(r, False) @ cf.matrix_Cprime(2 * r, 0),
        }
        rep.add(f"specialize[{r}]", "m = 0 matrices come from the general-m matrices", all(checks.values()), checks)
        for name, M in (("R_o", cf.matrix_R_o(r)), ("C_e", cf.matrix_C_e(r))):
            if r <= 5:
                rep.add(f"bareiss.{name}[{r}]", "Bareiss determinant = cofactor expansion",
                        determinant(M) == cofactor_determinant(M))

    for n, m in _sizes(min(limit, 6)):
        N = n + m
        allc = collect("cspp", n, m, limit=limit)
        bad = None
        for k in (1, N):
            by = {}
            for c in allc:
                lam = conjugate(c.shape())
                by[lam] = by.get(lam, TPoly()) + T ** _cspp.stat_Ubar(c, k)
            for lam in partitions_in_box(n, N):
                if cf.genpoly_cspp_shape(n, m, lam, k) != by.get(lam, TPoly()):
                    bad = {"lambda": list(lam), "k": k}
                    break
        rep.add(f"shape_genpoly[{n},{m}]", "shape determinant = sum t^Ubar_k over CSPP of that shape", bad is None, {"witness": bad})

    bad = None
    for n in range(1, 7):
        for x in range(5):
            if cf.mrr_det(n, x) != cf.mrr_product(n, x):
                bad = {"n": n, "x": x, "case": "mrr"}
            for y in range(5):
                if cf.andrews_burge_det(n, x, y) != cf.andrews_burge_product(n, x, y):
                    bad = {"n": n, "x": x, "y": y}
    rep.add("andrews_burge", "binomial determinant = Delta product, n <= 6, x, y in 0..4 (and the x = y case)",
            bad is None, {"witness": bad})

    bad = None
    for idx, (A, B) in enumerate(random_matrix_pairs(samples, seed)):
        if cauchy_binet_lhs_i(A, B) != cauchy_binet_rhs_i(A, B) or cauchy_binet_lhs_ii(A, B) != cauchy_binet_rhs_ii(A, B):
            bad = {"index": idx, "A": A, "B": B}
            break
    rep.add("cauchy_binet", f"both summation lemmas on {samples} random integer matrices", bad is None, {"witness": bad, "seed": seed})
    return rep


# -- theorem results --------------------------------------------------------


def tspp_gamma_poly(N, bar=True):
    """Sum over TSPP_N^gamma of t^Ubar_2 (or t^U_2 with ``bar=False``)."""
    stat = _tspp.stat_Ubar if bar else _tspp.stat_U
    inv = _tspp.enumerate_invariants(N, 0, "gamma", limit=max(N, _tspp.DEFAULT_LIMIT))
    return _domino.genpoly(inv, lambda b: stat(b, 2))


def tspp_rho_poly(n, bar=False):
    stat = _tspp.stat_Ubar if bar else _tspp.stat_U
    inv = _tspp.enumerate_invariants(n, 0, "rho", limit=max(n, _tspp.DEFAULT_LIMIT))
    return _domino.genpoly(inv, lambda b: stat(b, 1))


def suite_theorem_results(limit=7, max_r=6, tspp_max=9):
    rep = VerificationReport("theorem-results")
    for r in range(1, max_r + 1):
        for c in cf.verify_thm_result(r):
            rep.add(c["id"], c["statement"], c["ok"], {"lhs": c["lhs"], "rhs": c["rhs"]})

    for N in range(3, tspp_max + 1, 2):
        n = (N - 1) // 2
        lhs = tspp_gamma_poly(N)
        rhs = determinant(cf.matrix_R_o(n))
        literal = tspp_gamma_poly(N, bar=False)
        rep.add(f"tspp_gamma[{N}]", f"sum over TSPP_{N}^gamma of t^Ubar_2 = det R_o_{n}(t)", lhs == rhs,
                {"tspp": lhs.to_json(), "det": rhs.to_json()})
        rep.add(f"tspp_gamma.U[{N}]", f"with the unbarred U_2 the sum is t^2 det R_o_{n}(t)", literal == T**2 * rhs,
                {"tspp_U": literal.to_json()})

    for n in range(1, min(limit, 7) + 1):
        sizes = {fam: values[n - 1] for fam, values in CATALOG.items() if n <= len(values)}
        for fam, want in sizes.items():
            if fam == "cspp_rho_tilde":
                got = len(_cspp.invariants_of(n, 0, "rho_tilde", limit=limit))
            else:
                got = len(collect(fam, n, 0, limit=limit))
            rep.add(f"catalog.{fam}[{n}]", f"|{fam}_{n}| = {want}", got == want, {"computed": got})
    return rep


def run_suite(name, limit=7):
    if name == "bijections":
        return suite_bijections(limit)
    if name == "statistics":
        return suite_statistics(limit)
    if name == "determinants":
        return suite_determinants(limit)
    if name == "theorem-results":
        return suite_theorem_results(limit, max_r=min(6, max(limit, 1)), tspp_max=min(max(limit, 3), 9))
    if name == "all":
        rep = VerificationReport("all")
        for s in SUITES:
            rep.extend(run_suite(s, limit))
        return rep
    raise ValueError(f"unknown suite {name!r}")


# -- conjecture reports -----------------------------------------------------


def conjecture_mrr4(limit=7):
    rep = VerificationReport("mrr4")
    for n in range(2, limit + 1):
        got = tspp_rho_poly(n)
        ref = cf.hts_poly(n)
        rep.add(f"mrr4[{n}]", f"sum over TSPP_{n}^rho of t^U_1 vs A^HTS_{n}(t)", got == ref,
                {"tspp": got.to_json(), "A_HTS": ref.to_json(), "equal": got == ref,
                 "tspp_Ubar": tspp_rho_poly(n, bar=True).to_json()}, reported=True)
    return rep


def conjecture_mrr6(limit=9):
    rep = VerificationReport("mrr6")
    for N in range(3, min(limit, 9) + 1, 2):
        n = (N - 1) // 2
        got = tspp_gamma_poly(N)
        det = determinant(cf.matrix_R_o(n))
        ref = cf.vs_poly(N)
        rep.add(f"mrr6[{N}]", f"sum over TSPP_{N}^gamma of t^Ubar_2 vs det R_o_{n}(t) vs A^VS_{N}(t)",
                got == det == ref,
                {"tspp": got.to_json(), "det": det.to_json(), "A_VS": ref.to_json(), "all_equal": got == det == ref,
                 "tspp_U": tspp_gamma_poly(N, bar=False).to_json()}, reported=True)
    return rep


def conjecture_detforms(max_r=6):
    rep = VerificationReport("detforms")
    for r in range(1, max_r + 1):
        pairs = [
            ("R_o", determinant(cf.matrix_R_o(r)), cf.vs_poly(2 * r + 1), f"A^VS_{2 * r + 1}(t)"),
            ("C_e", determinant(cf.matrix_C_e(r)), cf.hts_poly(2 * r), f"A^HTS_{2 * r}(t)"),
        ]
        if r >= 2:
            pairs.append(("C_o", determinant(cf.matrix_C_o(r)), cf.hts_poly(2 * r - 1), f"A^HTS_{2 * r - 1}(t)"))
        for name, d, ref, label in pairs:
            rep.add(f"{name}[{r}]", f"det {name}_{r}(t) vs {label}", d == ref,
                    {"det": d.to_json(), "ref": ref.to_json(), "equal": d == ref}, reported=True)
    return rep


def conjecture_gcspp_cdpp(limit=7):
    rep = VerificationReport("gcspp-cdpp")
    for n, m in _sizes(limit):
        res = _domino.compare_gcspp_cdpp(n, m, limit=limit)
        rep.add(f"gcspp_cdpp[{n},{m}]", f"|GCSPP_{{{n},{m}}}| and Ubar_1 distribution vs CDPP", res["equal"], res, reported=True)
    return rep


def run_conjecture(name, limit=7):
    if name == "mrr4":
        return conjecture_mrr4(limit)
    if name == "mrr6":
        return conjecture_mrr6(limit)
    if name == "detforms":
        return conjecture_detforms(min(limit, 6))
    if name == "gcspp-cdpp":
        return conjecture_gcspp_cdpp(limit)
    raise ValueError(f"unknown conjecture {name!r}")


def report_json(rep):
    return json.dumps(rep.to_json(), sort_keys=True)
