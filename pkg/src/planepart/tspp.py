"""Triangular shifted plane partitions, the diagonal flips and rho / gamma.

An element of ``TSPP_{n,m}`` is stored row by row: ``rows[i-1]`` holds
``b[i][i], ..., b[i][N-1]`` with ``N = n + m``.  Outside the staircase the
array is extended by ``b[0][j] = n`` and ``b[i][N] = n - i``; every formula
below reads those boundary values through :meth:`Tspp.b`.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_LIMIT = 9


class SizeLimitError(ValueError):
    """Requested class is larger than the configured enumeration limit."""


def check_limit(n, m, limit):
    if n < 1 or m < 0:
        raise ValueError(f"need n >= 1 and m >= 0, got n={n}, m={m}")
    if limit is not None and n + m > limit:
        raise SizeLimitError(f"n+m={n + m} exceeds the limit {limit}")


@dataclass(frozen=True)
class Tspp:
    n: int
    m: int
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))
        problem = self.violation()
        if problem:
            raise ValueError(f"not in TSPP_{{{self.n},{self.m}}}: {problem}")

    @property
    def N(self):
        return self.n + self.m

    def b(self, i, j):
        """Entry b_ij with the boundary conventions applied."""
        if i == 0:
            return self.n
        if j == self.N:
            return self.n - i
        return self.rows[i - 1][j - i]

    def cells(self):
        N = self.N
        return [(i, j) for i in range(1, N) for j in range(i, N)]

    def flat(self):
        return tuple(x for r in self.rows for x in r)

    def violation(self):
        n, N = self.n, self.N
        if n < 1 or self.m < 0:
            return "need n >= 1, m >= 0"
        if len(self.rows) != N - 1:
            return f"expected {N - 1} rows"
        for i, row in enumerate(self.rows, start=1):
            if len(row) != N - i:
                return f"row {i} should have {N - i} entries"
            for j in range(i, N):
                v = self.b(i, j)
                if not max(n - i, 0) <= v <= n:
                    return f"b[{i}][{j}]={v} outside [{max(n - i, 0)}, {n}]"
                if j > i and v > self.b(i, j - 1):
                    return f"row {i} increases at column {j}"
                if i > 1 and v > self.b(i - 1, j):
                    return f"column {j} increases at row {i}"
        return None

    def replace(self, updates):
        rows = [list(r) for r in self.rows]
        for (i, j), v in updates.items():
            rows[i - 1][j - i] = v
        return Tspp(self.n, self.m, tuple(tuple(r) for r in rows))

    def to_json(self):
        return {"kind": "tspp", "n": self.n, "m": self.m, "rows": [list(r) for r in self.rows]}

    @classmethod
    def from_json(cls, data):
        if data.get("kind", "tspp") != "tspp":
            raise ValueError(f"expected kind 'tspp', got {data.get('kind')!r}")
        return cls(int(data["n"]), int(data["m"]), tuple(tuple(r) for r in data["rows"]))

    def to_ascii(self):
        if not self.rows:
            return "(empty)"
        w = max(len(str(x)) for x in self.flat())
        lines = []
        for i, row in enumerate(self.rows):
            lines.append(" " * ((w + 1) * i) + " ".join(str(x).rjust(w) for x in row))
        return "\n".join(lines)


# -- statistics -------------------------------------------------------------


def _check_r(b, r):
    if not 1 <= r <= b.N:
        raise ValueError(f"r={r} outside [1, {b.N}]")


def stat_U(b, r):
    """The diagonal statistic U_r."""
    _check_r(b, r)
    n, N = b.n, b.N
    total = sum(b.b(t, t + r - 1) - b.b(t, t + r) for t in range(1, N - r + 1))
    total += sum(1 for t in range(N - r + 1, N) if b.b(t, N - 1) > n - t)
    return total


def stat_Ubar(b, r):
    return b.N - 1 - stat_U(b, r)


# -- flips ------------------------------------------------------------------


def _flipped_value(b, i, j):
    if i == j:
        return b.b(i - 1, i) + b.b(i, i + 1) - b.b(i, i)
    return (
        min(b.b(i - 1, j), b.b(i, j - 1))
        + max(b.b(i, j + 1), b.b(i + 1, j))
        - b.b(i, j)
    )


def _check_diagonal_allowed(b, r):
    if r == 1 and b.m not in (0, 1):
        raise ValueError(f"diagonal flips need m in (0, 1), got m={b.m}")


def flip_part(b, i, j):
    N = b.N
    if not 1 <= i <= j <= N - 1:
        raise ValueError(f"({i}, {j}) is not a cell of the staircase")
    _check_diagonal_allowed(b, j - i + 1)
    return b.replace({(i, j): _flipped_value(b, i, j)})


def pi_r(b, r):
    """Flip every part on the r-th diagonal b[i][i+r-1]."""
    _check_r(b, r)
    _check_diagonal_allowed(b, r)
    updates = {(i, i + r - 1): _flipped_value(b, i, i + r - 1) for i in range(1, b.N - r + 1)}
    return b.replace(updates) if updates else b


def rho_factors(n, m):
    """Even diagonals making up rho.

    Diagonals n < r < n + m are included so that rho corresponds to the
    ``tau_2 tau_4 ...`` product that the domino map needs when m >= 2; for
    m <= 1 the extra factor is the identity anyway.
    """
    return list(range(2, n + m + 1, 2))


def gamma_factors(n, m):
    if m not in (0, 1):
        raise ValueError(f"gamma needs m in (0, 1), got m={m}")
    return list(range(1, n + 1, 2))


def compose(b, factors, op=None):
    op = op or pi_r
    for r in factors:
        b = op(b, r)
    return b


def rho(b):
    return compose(b, rho_factors(b.n, b.m))


def gamma(b):
    return compose(b, gamma_factors(b.n, b.m))


# -- enumeration ------------------------------------------------------------


def enumerate_tspp(n, m=0, *, limit=DEFAULT_LIMIT, fixed_diagonals=(), shard=None):
    """Yield TSPP_{n,m} in lexicographic order of the row-major cell list.

    ``fixed_diagonals`` restricts the search to elements fixed by every
    ``pi_r`` with r in the set; since flips on distinct diagonals of equal
    parity never touch each other, this is how the rho and gamma invariants
    are found without walking the whole class.  ``shard=(k, J)`` keeps only
    the branches whose first choice has index congruent to k mod J.
    """
    check_limit(n, m, limit)
    N = n + m
    fixed = {r for r in fixed_diagonals if 1 <= r <= N - 1}
    if 1 in fixed and m not in (0, 1):
        raise ValueError("diagonal flips need m in (0, 1)")
    cells = [(i, j) for i in range(1, N) for j in range(i, N)]
    if not cells:
        if shard is None or shard[0] == 0:
            yield Tspp(n, m, ())
        return

    # b[i][j] with row 0 and column N holding the boundary values
    b = [[0] * (N + 1) for _ in range(N)]
    for j in range(N + 1):
        b[0][j] = n
    for i in range(1, N):
        b[i][N] = n - i

    # constraints attached to the cell whose assignment completes them
    hooks = {c: [] for c in cells}
    for (i, j) in cells:
        if j - i + 1 not in fixed:
            continue
        hooks[(i, j)].append(("self", i, j))
        if j + 1 < N:
            hooks[(i, j + 1)].append(("right", i, j))
        if i < j:
            hooks[(i + 1, j)].append(("below", i, j))

    def target(i, j):
        # value that max(right, below) (or right alone on the main diagonal) must reach
        if i == j:
            return 2 * b[i][j] - b[i - 1][j]
        return 2 * b[i][j] - min(b[i - 1][j], b[i][j - 1])

    def admissible(i, j, v):
        b[i][j] = v
        for kind, x, y in hooks[(i, j)]:
            tgt = target(x, y)
            if kind == "self":
                if x == y:
                    if y + 1 == N and b[x][N] != tgt:
                        return False
                elif y + 1 == N:
                    if b[x][N] > tgt:
                        return False
                elif tgt < max(n - x, 0):
                    # the right neighbour alone is at least n - x
                    return False
            elif kind == "right":
                if (x == y and v != tgt) or (x < y and v > tgt):
                    return False
            else:
                if v > tgt or max(v, b[x][y + 1]) != tgt:
                    return False
        return True

    def rec(p):
        if p == len(cells):
            yield Tspp(n, m, tuple(tuple(b[i][i:N]) for i in range(1, N)))
            return
        i, j = cells[p]
        hi = min(b[i - 1][j], b[i][j - 1] if j > i else n)
        lo = max(n - i, 0)
        choices = range(lo, hi + 1)
        if p == 0 and shard is not None:
            k, J = shard
            choices = [v for idx, v in enumerate(choices) if idx % J == k]
        for v in choices:
            if admissible(i, j, v):
                yield from rec(p + 1)

    yield from rec(0)


def enumerate_invariants(n, m, which, *, limit=DEFAULT_LIMIT, shard=None):
    """Elements fixed by ``rho`` or ``gamma``."""
    if which == "rho":
        fixed = rho_factors(n, m)
    elif which == "gamma":
        fixed = gamma_factors(n, m)
    else:
        raise ValueError(f"unknown involution {which!r}")
    return enumerate_tspp(n, m, limit=limit, fixed_diagonals=fixed, shard=shard)


def sort_key(b):
    return b.flat()
