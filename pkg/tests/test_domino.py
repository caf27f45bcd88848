import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planepart import closedform as cf
from planepart.catalog import collect
from planepart.cspp import Cspp, invariants_of
from planepart.cspp import stat_Ubar as cspp_Ubar
from planepart.domino import (
    DominoTableau,
    PairedPP,
    Tile,
    cap,
    check_strip_characterization,
    compare_gcspp_cdpp,
    delta,
    delta_inv,
    enumerate_pcspp,
    genpoly,
    pair_params,
    phi,
    phi_diagonal,
    phi_inv,
    stat_Ubar_domino,
    stat_Ubar_pair,
    theta,
    theta_inv,
)
from planepart.exact import TPoly
from planepart.partition import Partition

RHO8 = Cspp(8, 0, [[7, 4, 4, 3, 2, 1, 1], [6, 3, 2, 1], [5, 2], [2, 1], [1]])
THETA8 = DominoTableau(8, 0, [
    Tile(1, 1, "S", 4), Tile(1, 2, "V", 2), Tile(1, 3, "H", 2), Tile(1, 5, "H", 1), Tile(1, 7, "S", 1),
    Tile(2, 1, "V", 3), Tile(2, 3, "H", 1), Tile(3, 2, "V", 1), Tile(4, 1, "V", 1),
], "gcspp")

G11 = Cspp(11, 0, [[7, 7, 6, 6, 3, 2, 1, 1], [5, 5, 4, 3, 1], [4, 3, 2, 2], [1, 1]])
DELTA11 = DominoTableau(9, 0, [
    Tile(1, 1, "H", 3), Tile(1, 3, "H", 3), Tile(1, 5, "H", 1), Tile(2, 1, "V", 2),
    Tile(2, 2, "H", 2), Tile(2, 4, "V", 1), Tile(3, 2, "H", 1),
], "rdpp")


def sizes(limit):
    return [(n, N - n) for N in range(1, limit + 1) for n in range(1, N + 1)]


def objects(family, limit=5):
    return st.sampled_from(sizes(limit)).flatmap(lambda nm: st.sampled_from(collect(family, *nm) or [None]))


def test_caps():
    assert [cap(7, j) for j in range(1, 7)] == [3, 3, 2, 2, 1, 1]


def test_validator():
    with pytest.raises(ValueError):
        DominoTableau(2, 0, [Tile(1, 1, "S", 1)], "dpp")  # singles are not allowed in DPP
    with pytest.raises(ValueError):
        DominoTableau(3, 0, [Tile(1, 1, "H", 1), Tile(1, 2, "H", 1)], "dpp")  # overlap
    with pytest.raises(ValueError):
        DominoTableau(4, 0, [Tile(1, 1, "V", 1)], "rdpp")  # odd row lengths


def test_theta_example():
    assert theta(RHO8) == THETA8
    assert theta_inv(THETA8) == RHO8


def test_delta_example():
    assert delta(G11) == DELTA11
    assert delta_inv(DELTA11) == G11
    assert stat_Ubar_domino(DELTA11, 1) == cspp_Ubar(G11, 2)


def test_phi_example():
    p = phi(DELTA11)
    assert p == PairedPP(9, 0, ((1, 1),), ((3, 3, 1), (2, 2)))
    assert phi_diagonal(DELTA11) == p
    assert phi_inv(p, "rdpp") == DELTA11
    assert p.is_hpcspp()
    assert check_strip_characterization(DELTA11)["ok"]


def test_layer_shapes_example():
    from planepart.domino import _layer_shapes

    assert _layer_shapes(DELTA11) == [Partition((6, 4, 4)), Partition((4, 3, 1)), Partition((4,))]


def test_pair_params():
    assert pair_params(9, 0) == ((5, 0), (4, 1))
    for n in range(1, 8):
        for m in range(0, 4):
            (n0, m0), (n1, m1) = pair_params(n, m)
            assert n0 + n1 == n


def test_catalog_counts():
    assert [len(collect("gcspp", n)) for n in range(1, 7)] == [1, 2, 3, 10, 25, 140]
    assert [len(collect("rdpp", n)) for n in range(1, 7)] == [1, 1, 3, 4, 26, 50]
    assert [len(collect("cdpp", n)) for n in range(1, 7)] == [1, 2, 3, 10, 25, 140]
    assert len(collect("vpcspp", 4)) == 10


@pytest.mark.parametrize("n,m", sizes(5))
def test_counts_match_pairs_and_determinants(n, m):
    # Phi gives |DPP| = |PCSPP|; the determinants at t = 1 give |RDPP| and |CDPP|
    assert len(collect("dpp", n, m)) == len(list(enumerate_pcspp(n, m)))
    assert len(collect("rdpp", n, m)) == len(collect("hpcspp", n, m)) == cf.genpoly_rdpp(n, m)(1)
    assert len(collect("cdpp", n, m)) == len(collect("vpcspp", n, m)) == cf.genpoly_cdpp(n, m)(1)


def test_gcspp_polys():
    polys = [genpoly(collect("gcspp", n), lambda d: stat_Ubar_domino(d, 1)) for n in range(1, 7)]
    assert polys[:3] == [TPoly((1,)), TPoly((1, 1)), TPoly((1, 1, 1))]
    assert polys[3] == TPoly((1, 1)) * TPoly((2, 1, 2))
    assert polys[4] == TPoly((3, 6, 7, 6, 3))
    assert polys[5] == 5 * TPoly((1, 1)) * TPoly((1, 0, 1)) * TPoly((2, 3, 2))


@settings(max_examples=150, deadline=None)
@given(objects("dpp"))
def test_phi_properties(d):
    if d is None:
        return
    p = phi(d)
    assert p == phi_diagonal(d)
    assert phi_inv(p, "dpp") == d
    assert check_strip_characterization(d)["ok"]
    for r in range(1, d.N + 1):
        assert stat_Ubar_pair(p, r) == stat_Ubar_domino(d, r)


@settings(max_examples=80, deadline=None)
@given(objects("rdpp"), objects("cdpp"))
def test_phi_lands_in_strip_pairs(rd, cd):
    if rd is not None:
        assert phi(rd).is_hpcspp()
    if cd is not None:
        assert phi(cd).is_vpcspp()


@pytest.mark.parametrize("n,m", sizes(6))
def test_theta_onto_gcspp(n, m):
    inv = invariants_of(n, m, "rho_tilde")
    imgs = [theta(c) for c in inv]
    assert all(theta_inv(d) == c for c, d in zip(inv, imgs))
    assert set(imgs) == set(collect("gcspp", n, m))
    assert len(imgs) == len(set(imgs))


@pytest.mark.parametrize("N", [3, 5, 7])
def test_delta_onto_rdpp(N):
    inv = invariants_of(N, 0, "gamma_tilde")
    imgs = [delta(c) for c in inv]
    assert all(delta_inv(d) == c for c, d in zip(inv, imgs))
    assert set(imgs) == set(collect("rdpp", N - 2))
    assert all(stat_Ubar_domino(d, 1) == cspp_Ubar(c, 2) for c, d in zip(inv, imgs))


@pytest.mark.parametrize("n,m", sizes(5))
def test_gcspp_cdpp_comparison(n, m):
    assert compare_gcspp_cdpp(n, m)["equal"]


@settings(max_examples=60, deadline=None)
@given(objects("gcspp"), objects("dpp"))
def test_json_roundtrip(a, b):
    for d in (a, b):
        if d is not None:
            assert DominoTableau.from_json(d.to_json()) == d
            assert d.to_ascii()
    if b is not None:
        assert PairedPP.from_json(phi(b).to_json()) == phi(b)
