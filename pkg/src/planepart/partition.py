"""Integer partitions, strips and the 2-quotient."""

from __future__ import annotations


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros are dropped on construction so two partitions compare
    equal exactly when they have the same diagram.

    >>> Partition([6, 4, 4, 0, 0])
    Partition(6, 4, 4)
    """

    def __new__(cls, parts=()):
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return "Partition(%s)" % ", ".join(map(str, self))

    def part(self, i):
        """1-indexed part, zero beyond the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    @property
    def size(self):
        return sum(self)

    def conjugate(self):
        return conjugate(self)

    def cells(self):
        """Cells (i, j) of the diagram, 1-indexed, row-major."""
        return [(i + 1, j + 1) for i, row in enumerate(self) for j in range(row)]

    def to_json(self):
        return list(self)

    @classmethod
    def from_json(cls, data):
        return cls(data)


def conjugate(lam):
    lam = Partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def contains(mu, lam):
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    mu, lam = Partition(mu), Partition(lam)
    return len(mu) <= len(lam) and all(m <= l for m, l in zip(mu, lam))


def _require_contained(mu, lam):
    if not contains(mu, lam):
        raise ValueError(f"{tuple(mu)} is not contained in {tuple(lam)}")


def is_horizontal_strip(mu, lam):
    """At most one cell of ``lam / mu`` in each column."""
    mu, lam = Partition(mu), Partition(lam)
    _require_contained(mu, lam)
    return all(lam.part(i + 1) <= mu.part(i) for i in range(1, len(lam)))


def is_vertical_strip(mu, lam):
    """At most one cell of ``lam / mu`` in each row."""
    mu, lam = Partition(mu), Partition(lam)
    _require_contained(mu, lam)
    return all(lam.part(i) - mu.part(i) <= 1 for i in range(1, len(lam) + 1))


def beta_numbers(lam, length=None):
    """``lam + delta`` for ``lam`` padded with zeros to ``length`` parts."""
    lam = Partition(lam)
    if length is None:
        length = len(lam) + len(lam) % 2
    if length < len(lam):
        raise ValueError("length shorter than the partition")
    return [lam.part(j) + length - j for j in range(1, length + 1)]


def _from_beta(ks):
    # ks strictly decreasing; subtract the staircase r-1, r-2, ..., 0
    r = len(ks)
    return Partition(k - (r - 1 - idx) for idx, k in enumerate(ks))


def two_quotient(lam, length=None):
    """The pair (lam0, lam1) read off the even and odd beta numbers.

    ``lam`` is padded to ``length`` parts, which must be even; by default the
    smallest even length is used.  The result does not depend on the choice.
    """
    if length is not None and length % 2:
        raise ValueError("padding length must be even")
    ell = beta_numbers(lam, length)
    evens = [x // 2 for x in ell if x % 2 == 0]
    odds = [(x - 1) // 2 for x in ell if x % 2 == 1]
    return _from_beta(evens), _from_beta(odds)


def from_two_quotient(lam0, lam1):
    """Inverse of :func:`two_quotient` on partitions with empty 2-core."""
    lam0, lam1 = Partition(lam0), Partition(lam1)
    r = max(len(lam0), len(lam1))
    ell = [2 * (lam0.part(i) + r - i) for i in range(1, r + 1)]
    ell += [2 * (lam1.part(i) + r - i) + 1 for i in range(1, r + 1)]
    ell.sort(reverse=True)
    return Partition(x - (2 * r - j) for j, x in enumerate(ell, start=1))


def partitions(total, max_part=None):
    """All partitions of ``total`` with parts at most ``max_part``."""
    if max_part is None:
        max_part = total
    if total == 0:
        yield Partition()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield Partition((first,) + tuple(rest))


def partitions_in_box(rows, cols):
    """All partitions fitting inside a ``rows`` x ``cols`` rectangle."""

    def rec(prefix, bound, left):
        yield Partition(prefix)
        if left == 0:
            return
        for p in range(1, bound + 1):
            yield from rec(prefix + [p], p, left - 1)

    yield from rec([], cols, rows)
