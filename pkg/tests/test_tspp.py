import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planepart import closedform as cf
from planepart.catalog import collect
from planepart.domino import genpoly
from planepart.tspp import (
    SizeLimitError,
    Tspp,
    enumerate_invariants,
    enumerate_tspp,
    gamma,
    pi_r,
    rho,
    stat_U,
    stat_Ubar,
)

# the TSPP_6 used for the flip examples
B6 = Tspp(6, 0, [[6, 6, 6, 6, 5], [6, 5, 5, 5], [4, 4, 4], [4, 4], [1]])

RHO8 = Tspp(8, 0, [
    [8, 8, 8, 8, 7, 7, 7],
    [8, 8, 8, 7, 7, 7],
    [7, 7, 7, 7, 7],
    [6, 6, 6, 5],
    [6, 5, 4],
    [4, 3],
    [1],
])

GAMMA7 = Tspp(7, 0, [
    [7, 7, 7, 7, 7, 7],
    [6, 5, 5, 5, 5],
    [5, 5, 5, 5],
    [5, 5, 4],
    [4, 3],
    [2],
])


def brute_tspp(n, m):
    """Every array in the box, filtered by the validator."""
    N = n + m
    cells = [(i, j) for i in range(1, N) for j in range(i, N)]
    out = []
    for vals in itertools.product(*[range(max(n - i, 0), n + 1) for i, _ in cells]):
        rows = [[] for _ in range(N - 1)]
        for (i, _), v in zip(cells, vals):
            rows[i - 1].append(v)
        try:
            out.append(Tspp(n, m, rows))
        except ValueError:
            pass
    return out


small_tspp = st.sampled_from([(n, m) for n in range(1, 5) for m in range(0, 5 - n)]).flatmap(
    lambda nm: st.sampled_from(collect("tspp", *nm))
)


def test_validator_rejects():
    with pytest.raises(ValueError):
        Tspp(3, 0, [[3, 2], [3]])  # column increases
    with pytest.raises(ValueError):
        Tspp(3, 0, [[2, 3], [1]])  # row increases
    with pytest.raises(ValueError):
        Tspp(3, 0, [[3, 3], [0]])  # below n - i
    with pytest.raises(ValueError):
        Tspp(3, 0, [[3, 3]])


def test_boundary_conventions():
    assert B6.b(0, 4) == 6
    assert B6.b(2, 6) == 4
    assert B6.b(3, 4) == 4


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 4) for m in range(0, 5 - n)])
def test_enumeration_matches_brute_force(n, m):
    assert collect("tspp", n, m) == sorted(brute_tspp(n, m), key=lambda b: b.rows)


def test_counts_are_asm_numbers():
    assert [sum(1 for _ in enumerate_tspp(n)) for n in range(1, 7)] == [cf.asm_count(n) for n in range(1, 7)]


def test_size_limit():
    with pytest.raises(SizeLimitError):
        list(enumerate_tspp(8, 2))
    with pytest.raises(SizeLimitError):
        list(enumerate_tspp(5, 0, limit=4))


def test_flip_examples():
    assert pi_r(B6, 2) == Tspp(6, 0, [[6, 6, 6, 6, 5], [6, 6, 5, 5], [4, 4, 4], [4, 2], [1]])
    # the diagonal of b is 6,6,4,4,1; pi_1 changes only that diagonal
    p1 = pi_r(B6, 1)
    assert [p1.b(i, i) for i in range(1, 6)] == [6, 5, 5, 4, 4]
    assert all(p1.b(i, j) == B6.b(i, j) for i, j in B6.cells() if i != j)


def test_invariant_examples():
    assert rho(RHO8) == RHO8
    assert gamma(GAMMA7) == GAMMA7
    assert RHO8 in enumerate_invariants(8, 0, "rho")
    assert GAMMA7 in enumerate_invariants(7, 0, "gamma")


@settings(max_examples=150, deadline=None)
@given(small_tspp, st.data())
def test_flips_are_involutions(b, data):
    rs = [r for r in range(1, b.N) if r > 1 or b.m in (0, 1)]
    if not rs:
        return
    r = data.draw(st.sampled_from(rs))
    f = pi_r(b, r)
    assert f.violation() is None
    assert pi_r(f, r) == b
    # only diagonal j - i = r - 1 may change
    assert all(f.b(i, j) == b.b(i, j) for i, j in b.cells() if j - i != r - 1)


@settings(max_examples=100, deadline=None)
@given(small_tspp)
def test_rho_gamma_involutions(b):
    assert rho(rho(b)) == b
    if b.m in (0, 1):
        assert gamma(gamma(b)) == b


@settings(max_examples=100, deadline=None)
@given(small_tspp, st.data())
def test_ubar_range(b, data):
    r = data.draw(st.integers(1, b.N))
    assert 0 <= stat_U(b, r) <= b.N - 1
    assert stat_U(b, r) + stat_Ubar(b, r) == b.N - 1


@pytest.mark.parametrize("n", range(1, 6))
def test_refined_distribution_every_diagonal(n):
    # the Ubar_r generating function over TSPP_n is the refined ASM polynomial for each r
    objs = collect("tspp", n)
    for r in range(1, n + 1):
        assert genpoly(objs, lambda b: stat_Ubar(b, r)) == cf.asm_poly(n)


@pytest.mark.parametrize("n,m", [(n, m) for n in range(1, 5) for m in (0, 1)])
def test_pruned_invariants_match_filtering(n, m):
    allb = collect("tspp", n, m)
    for which, f in (("rho", rho), ("gamma", gamma)):
        want = [b for b in allb if f(b) == b]
        assert sorted(enumerate_invariants(n, m, which), key=lambda b: b.rows) == want


def test_invariant_counts():
    assert [len(list(enumerate_invariants(n, 0, "rho"))) for n in range(1, 9)] == [1, 2, 3, 10, 25, 140, 588, 5544]
    assert [len(list(enumerate_invariants(n, 0, "gamma"))) for n in (1, 3, 5, 7, 9)] == [1, 1, 3, 26, 646]
    assert list(enumerate_invariants(4, 0, "gamma")) == []


def test_sharding_partitions_the_set():
    whole = set(enumerate_tspp(4, 1))
    parts = [set(enumerate_tspp(4, 1, shard=(k, 3))) for k in range(3)]
    assert sum(len(p) for p in parts) == len(whole)
    assert set().union(*parts) == whole


@settings(max_examples=50, deadline=None)
@given(small_tspp)
def test_json_roundtrip(b):
    assert Tspp.from_json(b.to_json()) == b
    assert b.to_ascii()
