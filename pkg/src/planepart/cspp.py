"""Restricted column-strict plane partitions, the bijection with TSPP and the
twisted Bender-Knuth involutions."""

from __future__ import annotations

from dataclasses import dataclass

from . import tspp as _tspp
from .tspp import DEFAULT_LIMIT, Tspp, check_limit


@dataclass(frozen=True)
class Cspp:
    n: int
    m: int
    rows: tuple

    def __post_init__(self):
        rows = [tuple(int(x) for x in r) for r in self.rows]
        while rows and not rows[-1]:
            rows.pop()
        object.__setattr__(self, "rows", tuple(rows))
        problem = self.violation()
        if problem:
            raise ValueError(f"not in CSPP_{{{self.n},{self.m}}}: {problem}")

    @property
    def N(self):
        return self.n + self.m

    def entry(self, i, j):
        """c_ij, or 0 outside the diagram."""
        if 1 <= i <= len(self.rows) and 1 <= j <= len(self.rows[i - 1]):
            return self.rows[i - 1][j - 1]
        return 0

    def entry_row(self, i):
        return self.rows[i - 1] if 1 <= i <= len(self.rows) else ()

    def shape(self):
        return tuple(len(r) for r in self.rows)

    def is_saturated(self, i, j):
        return self.entry(i, j) == self.N - j

    def violation(self):
        n, N = self.n, self.N
        if n < 1 or self.m < 0:
            return "need n >= 1, m >= 0"
        for i, row in enumerate(self.rows, start=1):
            if not row:
                return f"empty row {i} before a nonempty one"
            if len(row) > n:
                return f"row {i} has more than {n} columns"
            if i > 1 and len(row) > len(self.rows[i - 2]):
                return f"row {i} longer than row {i - 1}"
            for j, v in enumerate(row, start=1):
                if v < 1:
                    return f"nonpositive part at ({i}, {j})"
                if v > N - j:
                    return f"part {v} at ({i}, {j}) exceeds {N - j}"
                if j > 1 and v > row[j - 2]:
                    return f"row {i} increases at column {j}"
                if i > 1 and v >= self.rows[i - 2][j - 1]:
                    return f"column {j} not strict at row {i}"
        return None

    def to_json(self):
        return {"kind": "cspp", "n": self.n, "m": self.m, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        if data.get("kind", "cspp") != "cspp":
            raise ValueError(f"expected kind 'cspp', got {data.get('kind')!r}")
        return cls(int(data["n"]), int(data["m"]), tuple(tuple(r) for r in data["rows"]))

    def to_ascii(self):
        if not self.rows:
            return "(empty)"
        w = max(len(str(x)) for r in self.rows for x in r) + 1
        lines = []
        for i, row in enumerate(self.rows, start=1):
            cells = [
                (str(v) + ("*" if self.is_saturated(i, j) else "")).ljust(w)
                for j, v in enumerate(row, start=1)
            ]
            lines.append(" ".join(cells).rstrip())
        return "\n".join(lines)


def sort_key(c):
    return c.rows


# -- enumeration ------------------------------------------------------------


def _rows_under(above, N, n):
    """Nonempty rows that may sit below ``above`` (None for the first row), in lex order."""
    width = n if above is None else len(above)

    def rec(prefix):
        if prefix:
            yield tuple(prefix)
        j = len(prefix) + 1
        if j > width:
            return
        hi = N - j
        if prefix:
            hi = min(hi, prefix[-1])
        if above is not None:
            hi = min(hi, above[j - 1] - 1)
        for v in range(1, hi + 1):
            prefix.append(v)
            yield from rec(prefix)
            prefix.pop()

    return rec([])


def enumerate_cspp(n, m=0, *, limit=DEFAULT_LIMIT, shard=None):
    """Yield CSPP_{n,m} in lexicographic order of the row tuple."""
    check_limit(n, m, limit)
    N = n + m

    def rec(rows):
        yield Cspp(n, m, tuple(rows))
        above = rows[-1] if rows else None
        for row in _rows_under(above, N, n):
            rows.append(row)
            yield from rec(rows)
            rows.pop()

    if shard is None:
        yield from rec([])
        return
    k, J = shard
    # branch 0 is the empty partition, branch t the t-th possible first row
    if k == 0:
        yield Cspp(n, m, ())
    for idx, row in enumerate(_rows_under(None, N, n), start=1):
        if idx % J == k:
            yield from rec([row])


# -- statistics -------------------------------------------------------------


def border(c, i, k):
    """mu_i^(k): number of parts >= k in row i."""
    if i < 1 or k < 1:
        raise ValueError("border needs i >= 1 and k >= 1")
    if i > len(c.rows):
        return 0
    return sum(1 for v in c.rows[i - 1] if v >= k)


def stat_Ubar(c, r):
    N = c.N
    if not 1 <= r <= N:
        raise ValueError(f"r={r} outside [1, {N}]")
    count = sum(1 for row in c.rows for v in row if v == r)
    count += sum(1 for k in range(1, r) if c.entry(1, N - k) == k)
    return count


# -- the bijection with TSPP ------------------------------------------------


def gamma_bij(c):
    """CSPP_{n,m} -> TSPP_{n,m}: n - b_ij = mu_{N-j}^{(1-i+j)}(c)."""
    n, N = c.n, c.N
    rows = tuple(
        tuple(n - border(c, N - j, 1 - i + j) for j in range(i, N)) for i in range(1, N)
    )
    return Tspp(n, c.m, rows)


def gamma_bij_inv(b):
    n, m, N = b.n, b.m, b.N
    rows = []
    for p in range(1, N):
        # mu_p^(k) for k = 1 .. N-p read off column N-p of b
        mus = [n - b.b(N + 1 - p - k, N - p) for k in range(1, N - p + 1)]
        length = mus[0] if mus else 0
        rows.append(tuple(sum(1 for mu in mus if mu >= l) for l in range(1, length + 1)))
    return Cspp(n, m, tuple(rows))


# -- twisted Bender-Knuth involutions ---------------------------------------


def _check_tbk(c, r):
    if not 1 <= r <= c.N:
        raise ValueError(f"r={r} outside [1, {c.N}]")
    if r == 1 and c.m not in (0, 1):
        raise ValueError(f"tau_1 needs m in (0, 1), got m={c.m}")


def _tbk_high(c, r):
    N = c.N
    rows = [list(row) for row in c.rows]
    for i, row in enumerate(c.rows, start=1):
        free = []
        for j, v in enumerate(row, start=1):
            if v == r and c.entry(i + 1, j) != r - 1:
                free.append(j)
            elif v == r - 1 and c.entry(i - 1, j) != r and not (i == 1 and j == N - r + 1):
                free.append(j)
        if not free:
            continue
        assert free == list(range(free[0], free[-1] + 1)), "free block not contiguous"
        k = sum(1 for j in free if row[j - 1] == r)
        l = len(free) - k
        for idx, j in enumerate(free):
            rows[i - 1][j - 1] = r if idx < l else r - 1
    return Cspp(c.n, c.m, tuple(tuple(x) for x in rows))


def _tbk_one(c):
    N = c.N
    lam = {i: border(c, i, 2) for i in range(1, N + 1)}
    rows = []
    for i in range(1, N):
        k = border(c, i, 1) - lam[i]
        slots = N - 1 - lam[1] if i == 1 else lam[i - 1] - lam[i]
        high = tuple(v for v in c.entry_row(i) if v >= 2)
        rows.append(high + (1,) * (slots - k))
    return Cspp(c.n, c.m, tuple(rows))


def tbk(c, r):
    """The twisted Bender-Knuth involution swapping r and r-1."""
    _check_tbk(c, r)
    return _tbk_one(c) if r == 1 else _tbk_high(c, r)


def tbk_border(c, r):
    """Same map computed from the row-length update rules on mu_i^(r).

    Kept as an independent route to :func:`tbk`.
    """
    _check_tbk(c, r)
    N = c.N
    mu = {(i, k): border(c, i, k) for i in range(1, N + 2) for k in range(1, N + 2)}
    new = dict(mu)
    if r == 1:
        for i in range(1, N):
            other = N - 1 if i == 1 else mu[i - 1, 2]
            new[i, 1] = mu[i, 2] + other - mu[i, 1]
    else:
        for i in range(1, N - r + 1):
            bound = N - r if i == 1 else mu[i - 1, r + 1]
            new[i, r] = max(mu[i, r + 1], mu[i + 1, r - 1]) + min(bound, mu[i, r - 1]) - mu[i, r]
    rows = []
    for i in range(1, N + 1):
        length = new[i, 1]
        rows.append(tuple(sum(1 for k in range(1, N + 1) if new[i, k] >= l) for l in range(1, length + 1)))
    return Cspp(c.n, c.m, tuple(rows))


def compose(c, factors, op=tbk):
    for r in factors:
        c = op(c, r)
    return c


def rho_tilde(c):
    return compose(c, _tspp.rho_factors(c.n, c.m))


def gamma_tilde(c):
    return compose(c, _tspp.gamma_factors(c.n, c.m))


def invariants_of(n, m, which, *, limit=DEFAULT_LIMIT, method="auto"):
    """Elements of CSPP_{n,m} fixed by ``rho_tilde`` or ``gamma_tilde``.

    ``method="filter"`` tests every element; ``"tspp"`` runs the pruned
    fixed-diagonal search on the TSPP side and pulls the result back through
    the bijection.  ``"auto"`` filters up to n+m = 6.
    """
    check_limit(n, m, limit)
    if which in ("rho_tilde", "rho"):
        op, side = rho_tilde, "rho"
    elif which in ("gamma_tilde", "gamma"):
        op, side = gamma_tilde, "gamma"
        _tspp.gamma_factors(n, m)
    else:
        raise ValueError(f"unknown involution {which!r}")
    if method == "auto":
        method = "filter" if n + m <= 6 else "tspp"
    if method == "filter":
        return [c for c in enumerate_cspp(n, m, limit=limit) if op(c) == c]
    if method == "tspp":
        found = [gamma_bij_inv(b) for b in _tspp.enumerate_invariants(n, m, side, limit=limit)]
        return sorted(found, key=sort_key)
    raise ValueError(f"unknown method {method!r}")
