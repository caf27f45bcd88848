"""Exact integer polynomials in one variable ``t`` and their determinants.

Rationals are plain :class:`fractions.Fraction`; nothing here touches floats.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from numbers import Integral, Rational

QScalar = Fraction


class TPoly:
    """Polynomial in ``t`` with integer coefficients, lowest degree first.

    >>> (1 + T) * (1 + T)
    TPoly(1 + 2t + t^2)
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, Integral):
            coeffs = (coeffs,)
        cs = []
        for c in coeffs:
            if isinstance(c, Rational) and not isinstance(c, Integral):
                if c.denominator != 1:
                    raise ValueError(f"non-integral coefficient {c}")
                c = c.numerator
            cs.append(int(c))
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def coerce(cls, x):
        return x if isinstance(x, TPoly) else cls(x)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (TPoly, Integral)):
            return self.coeffs == TPoly.coerce(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if not isinstance(other, (TPoly, Integral)):
            return NotImplemented
        a, b = self.coeffs, TPoly.coerce(other).coeffs
        n = max(len(a), len(b))
        return TPoly(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, (TPoly, Integral)):
            return NotImplemented
        return self + (-TPoly.coerce(other))

    def __rsub__(self, other):
        return TPoly.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, (TPoly, Integral)):
            return NotImplemented
        a, b = self.coeffs, TPoly.coerce(other).coeffs
        if not a or not b:
            return TPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        out = TPoly(1)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, other):
        """Quotient in Z[t]; raises if ``other`` does not divide ``self``."""
        other = TPoly.coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.coeffs
        lead = d[-1]
        q = [0] * max(len(rem) - len(d) + 1, 0)
        for k in range(len(q) - 1, -1, -1):
            c = rem[k + len(d) - 1]
            if c % lead:
                raise ArithmeticError(f"{other} does not divide {self} over Z")
            c //= lead
            q[k] = c
            if c:
                for i, y in enumerate(d):
                    rem[k + i] -= c * y
        if any(rem):
            raise ArithmeticError(f"{other} does not divide {self}")
        return TPoly(q)

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def is_palindromic(self):
        return self.coeffs == self.coeffs[::-1]

    def to_json(self):
        return list(self.coeffs)

    @classmethod
    def from_json(cls, data):
        return cls(data)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        return head + "".join(f" {s} {b}" for s, b in terms[1:])

    def __repr__(self):
        return f"TPoly({self})"


T = TPoly((0, 1))


class PolyMatrix:
    """Rectangular matrix of :class:`TPoly` entries."""

    def __init__(self, rows):
        rows = [[TPoly.coerce(x) for x in row] for row in rows]
        widths = {len(r) for r in rows}
        if len(widths) > 1:
            raise ValueError("ragged matrix")
        self.entries = tuple(tuple(r) for r in rows)
        self.nrows = len(rows)
        self.ncols = widths.pop() if widths else 0

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        return PolyMatrix(
            [
                [
                    sum((self[i, k] * other[k, j] for k in range(self.ncols)), TPoly())
                    for j in range(other.ncols)
                ]
                for i in range(self.nrows)
            ]
        )

    def evaluate(self, t):
        return [[e(t) for e in row] for row in self.entries]

    def det(self):
        return determinant(self)

    def to_json(self):
        return [[e.to_json() for e in row] for row in self.entries]

    @classmethod
    def from_json(cls, data):
        return cls([[TPoly(e) for e in row] for row in data])

    def __repr__(self):
        return "PolyMatrix(%s)" % [[str(e) for e in row] for row in self.entries]


def _as_square(M):
    if not isinstance(M, PolyMatrix):
        M = PolyMatrix(M)
    if M.nrows != M.ncols:
        raise ValueError(f"determinant of a non-square {M.nrows}x{M.ncols} matrix")
    return M


def determinant(M):
    """Fraction-free Bareiss elimination over Z[t]."""
    M = _as_square(M)
    n = M.nrows
    if n == 0:
        return TPoly(1)
    a = [list(row) for row in M.entries]
    sign = 1
    prev = TPoly(1)
    for k in range(n - 1):
        if not a[k][k]:
            for p in range(k + 1, n):
                if a[p][k]:
                    a[k], a[p] = a[p], a[k]
                    sign = -sign
                    break
            else:
                return TPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign


def cofactor_determinant(M):
    """Laplace expansion along the first row; the slow cross-check."""
    M = _as_square(M)
    rows = [list(r) for r in M.entries]

    def rec(rows):
        if not rows:
            return TPoly(1)
        total = TPoly()
        for j, x in enumerate(rows[0]):
            if not x:
                continue
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            term = x * rec(minor)
            total = total + (term if j % 2 == 0 else -term)
        return total

    return rec(rows)


def int_det(rows):
    """Exact determinant of an integer or rational matrix."""
    rows = [[Fraction(x) for x in r] for r in rows]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    det = Fraction(1)
    for k in range(n):
        piv = next((p for p in range(k, n) if rows[p][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        det *= rows[k][k]
        for i in range(k + 1, n):
            f = rows[i][k] / rows[k][k]
            if f:
                for j in range(k, n):
                    rows[i][j] -= f * rows[k][j]
    return det


def binomial(n, k):
    """``n choose k`` for any integer ``n``; zero when ``k < 0``."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= n - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


def pochhammer(a, j):
    """Rising factorial a (a+1) ... (a+j-1)."""
    if j < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = Fraction(1)
    a = Fraction(a)
    for i in range(j):
        out *= a + i
    return out


def factorial(n):
    if n < 0:
        raise ValueError(f"factorial of negative {n}")
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def elem_sym_specialized(n, r):
    """e_r of n variables specialised to (t, 1, ..., 1)."""
    if n == 0:
        return TPoly(1 if r == 0 else 0)
    if r < 0 or r > n:
        return TPoly()
    return TPoly((binomial(n - 1, r), binomial(n - 1, r - 1)))


# Cauchy-Binet variants.  The brute-force sides enumerate index tuples; the
# determinant sides only build one n x n product matrix.


def _check_dims(A, B):
    n = len(A)
    if len(B) != n:
        raise ValueError("A and B must have the same number of rows")
    N = len(A[0]) if n else 0
    if any(len(r) != N for r in A) or any(len(r) != N for r in B):
        raise ValueError("A and B must be n x N")
    if n > N:
        raise ValueError(f"need n <= N, got n={n}, N={N}")
    return n, N


def _minor(M, cols):
    return int_det([[row[c - 1] for c in cols] for row in M])


def _product_det(A, C):
    n = len(A)
    return int_det(
        [[sum(A[i][k] * C[j][k] for k in range(len(A[0]))) for j in range(n)] for i in range(n)]
    )


def cauchy_binet_lhs_i(A, B):
    """Sum over 1 <= k1 <= j1 < k2 <= j2 < ... < kn <= jn <= N."""
    n, N = _check_dims(A, B)
    total = Fraction(0)
    for js in itertools.combinations(range(1, N + 1), n):
        aminor = _minor(A, js)
        if not aminor:
            continue
        lows = [1] + [j + 1 for j in js[:-1]]
        for ks in itertools.product(*(range(lo, j + 1) for lo, j in zip(lows, js))):
            total += aminor * _minor(B, ks)
    return int(total)


def cauchy_binet_rhs_i(A, B):
    _check_dims(A, B)
    C = [list(itertools.accumulate(row)) for row in B]
    return int(_product_det(A, C))


def cauchy_binet_lhs_ii(A, B):
    """Sum over j1 < ... < jn and k_v in {j_v - 1, j_v} with k strictly increasing.

    Bounding k_v below by j_{v-1} + 1 instead drops terms such as
    j = (2, 3), k = (1, 2) and breaks the identity.
    """
    n, N = _check_dims(A, B)
    total = Fraction(0)

    def ks_for(js, v, prev_k):
        if v == len(js):
            yield ()
            return
        j = js[v]
        for k in range(max(prev_k + 1, j - 1, 1), j + 1):
            for rest in ks_for(js, v + 1, k):
                yield (k,) + rest

    for js in itertools.combinations(range(1, N + 1), n):
        aminor = _minor(A, js)
        if not aminor:
            continue
        for ks in ks_for(js, 0, 0):
            total += aminor * _minor(B, ks)
    return int(total)


def cauchy_binet_rhs_ii(A, B):
    _check_dims(A, B)
    C = [[row[j] + (row[j - 1] if j >= 1 else 0) for j in range(len(row))] for row in B]
    return int(_product_det(A, C))
