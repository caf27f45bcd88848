"""Closed-form ASM counts and polynomials, the determinant matrices for the
domino classes, and the Andrews-Burge evaluation.

Every product formula is evaluated over :class:`fractions.Fraction` and then
checked for integrality, so a mistyped factor shows up as an error instead of
a silently wrong number.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction

from .exact import (
    PolyMatrix,
    T,
    TPoly,
    binomial,
    determinant,
    factorial,
    int_det,
    pochhammer,
)

ONE_PLUS_T2 = TPoly((1, 0, 1))


def _as_int(x, what):
    x = Fraction(x)
    if x.denominator != 1:
        raise ArithmeticError(f"{what} is not an integer: {x}")
    return x.numerator


def _as_poly(coeffs, what):
    out = []
    for k, c in enumerate(coeffs):
        c = Fraction(c)
        if c.denominator != 1:
            raise ArithmeticError(f"{what}: coefficient of t^{k} is {c}")
        out.append(c.numerator)
    return TPoly(out)


def _f(n):
    return Fraction(factorial(n))


# -- alternating sign matrices ----------------------------------------------


def asm_count(n):
    if n < 1:
        raise ValueError("asm_count needs n >= 1")
    out = Fraction(1)
    for i in range(n):
        out *= _f(3 * i + 1) / _f(n + i)
    return _as_int(out, f"A_{n}")


def asm_poly(n):
    """Refined ASM distribution by the position of the 1 in the first row."""
    if n < 1:
        raise ValueError("asm_poly needs n >= 1")
    scale = Fraction(asm_count(n), binomial(3 * n - 2, n - 1))
    coeffs = [
        scale * binomial(n + r - 2, n - 1) * binomial(2 * n - 1 - r, n - 1)
        for r in range(1, n + 1)
    ]
    return _as_poly(coeffs, f"A_{n}(t)")


# -- half-turn symmetric ASMs -----------------------------------------------


def _hts_even(k):
    out = Fraction(1)
    for i in range(k):
        out *= _f(3 * i) * _f(3 * i + 2) / _f(k + i) ** 2
    return out


def hts_count(n):
    if n < 1:
        raise ValueError("hts_count needs n >= 1")
    k = n // 2
    out = _hts_even(k)
    if n % 2:
        out *= _f(k) * _f(3 * k) / _f(2 * k) ** 2
    return _as_int(out, f"A^HTS_{n}")


def hts_tilde_count(n):
    """The normalising constant of the auxiliary polynomial, n even."""
    if n < 2 or n % 2:
        raise ValueError("hts_tilde_count needs an even n >= 2")
    k = n // 2
    out = Fraction(1)
    for i in range(k):
        out *= _f(3 * i) * _f(3 * i + 2) / (_f(3 * i + 1) * _f(k + i))
    return _as_int(out, f"tilde A^HTS_{n}")


def hts_tilde_poly(n):
    """Auxiliary polynomial for the even HTS refinement.

    At n = 2 the sum over r hits (-1)! with a zero coefficient, so the value
    1 + t is used directly; it is the one that makes A^HTS_2(t) = 1 + t.
    """
    if n < 2 or n % 2:
        raise ValueError("hts_tilde_poly needs an even n >= 2")
    k = n // 2
    if k == 1:
        return TPoly((1, 1))
    scale = Fraction(hts_tilde_count(n)) * (3 * k - 2) * _f(2 * k - 1) / (_f(k - 1) * _f(3 * k - 1))
    coeffs = [
        scale
        * (k * (k - 1) - k * r + r * r)
        * _f(k + r - 2)
        * _f(2 * k - r - 2)
        / (_f(r) * _f(k - r))
        for r in range(k + 1)
    ]
    return _as_poly(coeffs, f"tilde A^HTS_{n}(t)")


def hts_poly(n):
    if n < 2:
        raise ValueError("hts_poly needs n >= 2")
    k = n // 2
    if n % 2 == 0:
        return hts_tilde_poly(n) * asm_poly(k)
    total = asm_poly(k + 1) * hts_tilde_poly(2 * k) + asm_poly(k) * hts_tilde_poly(2 * k + 2)
    return _as_poly([Fraction(c, 3) for c in total.coeffs], f"A^HTS_{n}(t)")


# -- vertically symmetric ASMs ----------------------------------------------


def _vs_half(n):
    if n < 1 or n % 2 == 0:
        raise ValueError(f"vertically symmetric ASMs need odd size, got {n}")
    return (n - 1) // 2


def vs_count_signed(n):
    """The (-3)-power form of the VS count."""
    k = _vs_half(n)
    out = Fraction((-3) ** (k * k))
    for i in range(1, n + 1):
        for j in range(2, n + 1, 2):
            out *= Fraction(3 * (j - i) + 1, j - i + n)
    return _as_int(out, f"A^VS_{n} (signed form)")


def vs_count_factorial(n):
    k = _vs_half(n)
    out = Fraction(1, 2**k)
    for s in range(1, k + 1):
        out *= _f(6 * s - 2) * _f(2 * s - 1) / (_f(4 * s - 2) * _f(4 * s - 1))
    return _as_int(out, f"A^VS_{n} (factorial form)")


def vs_count(n):
    a, b = vs_count_factorial(n), vs_count_signed(n)
    if a != b:
        raise ArithmeticError(f"the two forms of A^VS_{n} disagree: {a} vs {b}")
    return a


def vs_poly(n):
    """Refined VS count by the position of the 1 in the first column."""
    k = _vs_half(n)
    if k < 1:
        raise ValueError("vs_poly needs n >= 3")
    scale = Fraction(vs_count(n - 2)) / _f(4 * k - 2)
    coeffs = []
    for r in range(1, 2 * k + 1):
        inner = sum(
            (-1) ** (r + s) * _f(2 * k + s - 2) * _f(4 * k - s - 1) / (_f(s - 1) * _f(2 * k - s))
            for s in range(1, r + 1)
        )
        coeffs.append(scale * inner)
    return _as_poly(coeffs, f"A^VS_{n}(t)")


class RefValues:
    """Named access to the reference sequences, cached per instance."""

    def __init__(self):
        self._cache = {}

    def _get(self, name, fn, n):
        key = (name, n)
        if key not in self._cache:
            self._cache[key] = fn(n)
        return self._cache[key]

    def A(self, n):
        return self._get("A", asm_count, n)

    def A_poly(self, n):
        return self._get("A(t)", asm_poly, n)

    def hts(self, n):
        return self._get("HTS", hts_count, n)

    def hts_tilde_poly(self, n):
        return self._get("tHTS(t)", hts_tilde_poly, n)

    def hts_poly(self, n):
        return self._get("HTS(t)", hts_poly, n)

    def vs(self, n):
        return self._get("VS", vs_count, n)

    def vs_poly(self, n):
        return self._get("VS(t)", vs_poly, n)


def reference_table(limit=9):
    """Rows (n, A_n, A_n(t), A^HTS_n, A^HTS_n(t), A^VS_n, A^VS_n(t)) up to ``limit``.

    Cells that are undefined for that n are None.
    """
    ref = RefValues()
    rows = []
    for n in range(1, limit + 1):
        odd3 = n % 2 == 1 and n >= 3
        rows.append(
            {
                "n": n,
                "A": ref.A(n),
                "A(t)": ref.A_poly(n).to_json(),
                "A_HTS": ref.hts(n),
                "A_HTS(t)": ref.hts_poly(n).to_json() if n >= 2 else None,
                "A_VS": ref.vs(n) if n % 2 else None,
                "A_VS(t)": ref.vs_poly(n).to_json() if odd3 else None,
            }
        )
    return rows


def table_to_json(rows):
    return "\n".join(json.dumps(r, sort_keys=True) for r in rows)


def table_to_csv(rows):
    buf = io.StringIO()
    fields = list(rows[0]) if rows else []
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow({k: "" if v is None else (" ".join(map(str, v)) if isinstance(v, list) else v) for k, v in r.items()})
    return buf.getvalue()


# -- the m = 0 determinant matrices -----------------------------------------


def _binom_t(a, b):
    """C(a, b)(1 + t^2) + (C(a, b-1) + C(a, b+1)) t."""
    return binomial(a, b) * ONE_PLUS_T2 + (binomial(a, b - 1) + binomial(a, b + 1)) * T


def _build(r, entry, overrides):
    if r < 1:
        raise ValueError("matrix size must be >= 1")
    return PolyMatrix(
        [[overrides.get((i, j)) if (i, j) in overrides else entry(i, j) for j in range(r)] for i in range(r)]
    )


def matrix_R_o(r):
    one = TPoly(1)
    return _build(r, lambda i, j: _binom_t(i + j - 1, 2 * i - j), {(0, 0): one, (0, 1): one})


def matrix_R_e(r):
    return _build(r, lambda i, j: _binom_t(i + j, 2 * i - j + 1), {(0, 0): TPoly(1)})


def matrix_C_e(r):
    def entry(i, j):
        a, b = i + j - 2, 2 * i - j
        return (2 * binomial(a, b - 1) + binomial(a, b)) * ONE_PLUS_T2 + (
            2 * binomial(a, b - 2) + binomial(a, b - 1) + 2 * binomial(a, b) + binomial(a, b + 1)
        ) * T

    return _build(r, entry, {(0, 0): 1 + T, (0, 1): T, (1, 0): TPoly()})


def matrix_C_o(r):
    def entry(i, j):
        a, b = i + j - 3, 2 * i - j
        return (2 * binomial(a, b - 2) + binomial(a, b - 1)) * ONE_PLUS_T2 + (
            2 * binomial(a, b - 3) + binomial(a, b - 2) + 2 * binomial(a, b - 1) + binomial(a, b)
        ) * T

    zero = TPoly()
    overrides = {
        (0, 0): TPoly(1),
        (0, 1): zero,
        (0, 2): zero,
        (2, 0): zero,
        (1, 0): 1 + T,
        (1, 1): TPoly((1, 1, 1)),
    }
    return _build(r, entry, overrides)


# -- general m --------------------------------------------------------------


def pair_params(n, m):
    """(n0, m0, n1, m1) for the split of a domino class into two colours."""
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1, m >= 0, got n={n}, m={m}")
    N1 = n + m + 1
    n0, n1 = (n + 1) // 2, n // 2
    return n0, (N1 + 1) // 2 - n0, n1, N1 // 2 - n1


def _rprime_entry(n, m, i, j):
    n0, m0, n1, m1 = pair_params(n, m)
    a = m0 + m1 + i + j - 1
    even = n % 2 == 0
    if m0 + i > 0 and m1 + j > 0:
        b = m0 + 2 * i - j if even else m0 + 2 * i - j - 1
        return _binom_t(a, b)
    if even:
        if m0 == 0 and m1 + j > 0:
            return binomial(m1 + j, 1 - j) + binomial(m1 + j, -j) * T
        return TPoly(1 if i == 0 else 0)
    if m0 + i > 0 and m1 == 0:
        return binomial(m0 + i, 1 - i) + binomial(m0 + i, -i) * T
    return TPoly(1 if j == 0 else 0)


def _cprime_sum(a, upper):
    # sum over all integers k <= upper; terms with k < -1 vanish
    total = TPoly()
    for k in range(-2, upper + 1):
        total = total + binomial(a, k) * ONE_PLUS_T2 + (binomial(a, k - 1) + binomial(a, k + 1)) * T
    return total


def _cprime_entry(n, m, i, j):
    n0, m0, n1, m1 = pair_params(n, m)
    even = n % 2 == 0
    if m0 + i > 0 and m1 + j > 0:
        a = m0 + m1 + i + j - 2
        upper = m0 + 2 * i - j - 1
        return _cprime_sum(a, upper if even else upper - 1)
    if m0 + i > 0:
        if even:
            return 2 ** (m0 + i - 1) * (1 + T)
        return 2 ** (m0 + i - 1) * (1 + T) - (1 if i == 0 else 0)
    if even:
        return TPoly(1 if j == 0 else 0)
    return TPoly()


def _cprime_vector(m0, i):
    return TPoly(1) if m0 == 0 and i == 0 else 2 ** (m0 + i - 1) * (1 + T)


def _assemble(n, m, entry, vector):
    n0, m0, n1, m1 = pair_params(n, m)
    rows = []
    for i in range(n0):
        row = [entry(i, j) for j in range(n1)]
        if n % 2:
            row = [vector(m0, i)] + row
        rows.append(row)
    return PolyMatrix(rows)


def matrix_Rprime(n, m=0):
    """n0 x n0 matrix whose determinant is the RDPP_{n,m} generating polynomial.

    For odd n the first column is the adjoined vector (1, 0, ..., 0).
    """
    return _assemble(
        n, m, lambda i, j: _rprime_entry(n, m, i, j), lambda m0, i: TPoly(1 if i == 0 else 0)
    )


def matrix_Cprime(n, m=0):
    """Same for CDPP_{n,m}; odd n adjoins the column c'."""
    return _assemble(n, m, lambda i, j: _cprime_entry(n, m, i, j), _cprime_vector)


# Second route: the unsimplified sums over specialised elementary symmetric
# functions, before the binomial identities are applied.


def _e(a, s):
    """e_s of a variables of which one is t (none when a = 0)."""
    if a == 0:
        return TPoly(1 if s == 0 else 0)
    return binomial(a - 1, s) + binomial(a - 1, s - 1) * T


def _e1(a, s):
    # one extra variable equal to 1
    return _e(a, s) + _e(a, s - 1)


def matrix_Rprime_sum(n, m=0):
    n0, m0, n1, m1 = pair_params(n, m)
    shift = n % 2
    K = m0 + 2 * n0 + m1 + 4

    def entry(i, j):
        return sum(
            (_e1(m0 + i, k - i) * _e(m1 + j, k - j - shift) for k in range(K)), TPoly()
        )

    return _assemble(n, m, entry, lambda m0_, i: TPoly(1 if i == 0 else 0))


def matrix_Cprime_sum(n, m=0):
    n0, m0, n1, m1 = pair_params(n, m)
    shift = n % 2
    K = m0 + 2 * n0 + m1 + 4

    def entry(i, j):
        total = TPoly()
        for k in range(K):
            left = _e(m0 + i, k - i)
            if left:
                total = total + left * sum(
                    (_e(m1 + j, v - j) for v in range(k + 1 - shift)), TPoly()
                )
        return total

    def vector(m0_, i):
        return sum((_e(m0 + i, k - i) for k in range(K)), TPoly())

    return _assemble(n, m, entry, vector)


def row_op_matrix(r, odd):
    """The unimodular U with C_e = U C' (even) and C_o = U (c' | C') (odd).

    U subtracts twice the previous row from each row; in the odd case row 1
    is left alone.  (The transpose, which acts on the next row, does not
    reproduce the displayed matrices.)
    """
    rows = [[TPoly(1 if i == j else (-2 if i == j + 1 else 0)) for j in range(r)] for i in range(r)]
    if odd and r > 1:
        rows[1][0] = rows[1][0] + 2
    return PolyMatrix(rows)


def genpoly_rdpp(n, m=0):
    return determinant(matrix_Rprime(n, m))


def genpoly_cdpp(n, m=0):
    return determinant(matrix_Cprime(n, m))


# -- CSPP by shape ------------------------------------------------------------


def genpoly_cspp_shape(n, m, lam, k=1):
    """Sum of t^(Ubar_k(c)) over c in CSPP_{n,m} whose shape is the conjugate of lam.

    The statistic index k does not change the specialisation (each e-block
    carries exactly one variable t), so it is only range-checked.
    """
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"partition {lam} has more than {n} parts")
    N = n + m
    if not 1 <= k <= N:
        raise ValueError(f"k={k} outside [1, {N}]")

    def part(j):
        return lam[j - 1] if j <= len(lam) else 0

    M = [[_e(N - i, part(j) - j + i) for j in range(1, n + 1)] for i in range(1, n + 1)]
    return determinant(PolyMatrix(M))


# -- Andrews-Burge ----------------------------------------------------------


def andrews_burge_det(n, x, y):
    return int_det(
        [[binomial(i + j + x, 2 * i - j) + binomial(i + j + y, 2 * i - j) for j in range(n)] for i in range(n)]
    )


def delta_factor(j, u):
    """Delta_{2j}(u)."""
    if j == 0:
        return Fraction(2)
    u = Fraction(u)
    num = pochhammer(u + 2 * j + 2, j) * pochhammer(u / 2 + 2 * j + Fraction(3, 2), j - 1)
    den = pochhammer(j, j) * pochhammer(u / 2 + j + Fraction(3, 2), j - 1)
    return num / den


def andrews_burge_product(n, x, y):
    out = Fraction(1)
    for k in range(n):
        out *= delta_factor(k, x + y)
    return out


def mrr_det(n, x):
    return int_det([[binomial(i + j + x, 2 * i - j) for j in range(n)] for i in range(n)])


def mrr_product(n, x):
    return andrews_burge_product(n, x, x) / 2**n


def binomial_det(n, a, b):
    """det C(i+j+a, 2i-j+b) for 0 <= i, j < n."""
    return int_det([[binomial(i + j + a, 2 * i - j + b) for j in range(n)] for i in range(n)])


def _tail_product(r, u):
    out = Fraction(1)
    for k in range(1, r):
        out *= delta_factor(k, u)
    return out


def rdpp_even_factor(r):
    """The ratio |RDPP_{2r}| / A^VS_{2r+1}."""
    return Fraction(
        factorial(3 * r + 2) * factorial(2 * r + 1) * factorial(2 * r),
        factorial(4 * r + 2) * factorial(r + 1) * factorial(r) ** 2,
    )


def verify_thm_result(r):
    """Exact t = 1 evaluations of the four matrices against the closed forms.

    Returns a list of check dicts (id, statement, lhs, rhs, ok).  Each count
    is reached two ways: the matrix itself at t = 1, and the binomial
    determinant it reduces to together with its Andrews-Burge product.
    """
    if r < 1:
        raise ValueError("r must be >= 1")

    def at1(M):
        return int_det(M.evaluate(1))

    vs = vs_count(2 * r + 1)
    checks = []

    def add(cid, statement, lhs, rhs):
        checks.append({"id": cid, "statement": statement, "lhs": str(lhs), "rhs": str(rhs), "ok": lhs == rhs})

    add(f"R_o[{r}]", f"det R_o_{r}(1) = A^VS_{2 * r + 1}", at1(matrix_R_o(r)), vs)
    add(f"R_o[{r}].binom", f"det R_o_{r}(1) = det C(i+j+1, 2i-j+1)", at1(matrix_R_o(r)), binomial_det(r, 1, 1))
    add(f"R_o[{r}].product", "det C(i+j+1, 2i-j+1) = Delta product at u=2",
        binomial_det(r, 1, 1), _tail_product(r, 2) / 2 ** (r - 1))

    even = rdpp_even_factor(r) * vs
    add(f"R_e[{r}]", f"det R_e_{r}(1) = factor * A^VS_{2 * r + 1}", at1(matrix_R_e(r)), even)
    add(f"R_e[{r}].binom", f"det R_e_{r}(1) = det C(i+j+2, 2i-j+2)", at1(matrix_R_e(r)), binomial_det(r, 2, 2))
    add(f"R_e[{r}].product", "det C(i+j+2, 2i-j+2) = Delta product at u=4",
        binomial_det(r, 2, 2), _tail_product(r, 4) / 2 ** (r - 1))

    c_o = int_det(
        [[binomial(i + j, 2 * i - j) + binomial(i + j - 1, 2 * i - j - 1) for j in range(r)] for i in range(r)]
    )
    add(f"C_o[{r}]", f"det C_o_{r}(1) = A^HTS_{2 * r - 1}", at1(matrix_C_o(r)), hts_count(2 * r - 1))
    add(f"C_o[{r}].binom", f"det C_o_{r}(1) = binomial determinant", at1(matrix_C_o(r)), c_o)
    add(f"C_o[{r}].product", "binomial determinant = Delta product at u=-1", c_o, _tail_product(r, -1))

    c_e = int_det(
        [[binomial(i + j, 2 * i - j) + binomial(i + j + 1, 2 * i - j + 1) for j in range(r)] for i in range(r)]
    )
    add(f"C_e[{r}]", f"det C_e_{r}(1) = A^HTS_{2 * r}", at1(matrix_C_e(r)), hts_count(2 * r))
    add(f"C_e[{r}].binom", f"det C_e_{r}(1) = binomial determinant", at1(matrix_C_e(r)), c_e)
    add(f"C_e[{r}].product", "binomial determinant = 2 * Delta product at u=1", c_e, 2 * _tail_product(r, 1))
    return checks
