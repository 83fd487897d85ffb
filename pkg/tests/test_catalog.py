from itertools import combinations

import pytest

from vgcalc import catalog
from vgcalc.motive import HGPoly, MotiveClass, betti, betti_eval, tate_twist, t_reverse

L = HGPoly.const(MotiveClass.scalar(1, 1))
T = HGPoly.monomial(MotiveClass.scalar(1), 1)
ONE = HGPoly.unit()
S2 = HGPoly.const(MotiveClass.schur((2,)))
S11 = HGPoly.const(MotiveClass.schur((1, 1)))


def schubert_counts(k, N):
    """Betti numbers of Gr(k, C^N) by listing k-subsets of {0..N-1} (Schubert cells)."""
    counts = {}
    for cell in combinations(range(N), k):
        dim = sum(c - i for i, c in enumerate(cell))
        counts[2 * dim] = counts.get(2 * dim, 0) + 1
    return counts


def test_coh_examples():
    assert catalog.coh_poly(catalog.projective(2)) == ONE + L * T**2 + L**2 * T**4
    assert catalog.coh_poly(catalog.gl3()) == (ONE + L * T) * (ONE + L**2 * T**3) * (ONE + L**3 * T**5)
    expected = S2 + (S2 + S11) * L * T**2 + (S2 + S11) * L**2 * T**4 + S11 * L**3 * T**6
    assert catalog.coh_poly(catalog.f2_projective_plane()) == expected


def test_bm_examples():
    Li = HGPoly.const(MotiveClass.scalar(1, -1))
    assert catalog.bm_poly(catalog.torus()) == T + Li * T**2
    assert catalog.bm_poly(catalog.point()) == ONE
    pgl3 = sum(
        (HGPoly.monomial(MotiveClass.scalar(1, k), d) for k, d in ((-8, 16), (-6, 13), (-5, 11), (-3, 8))),
        HGPoly.zero(),
    )
    assert catalog.bm_poly(catalog.pgl3()) == pgl3


def test_f2p1_markings():
    Li = HGPoly.const(MotiveClass.scalar(1, -1))
    assert catalog.bm_poly(catalog.f2_projective_line("trivial")) == S2 * (Li * T**2 + Li**2 * T**4)
    assert catalog.bm_poly(catalog.f2_projective_line("swap")) == S11 * Li * T**2 + S2 * Li**2 * T**4


def test_twisted_config_examples():
    assert catalog.twisted_config_bm(2, 1, "affine") == HGPoly.zero()
    assert catalog.twisted_config_bm(3, 1, "projective") == HGPoly.zero()
    # G(1, P^1) is a point; the degree shift is k(k-1) = 2 with the matching weight
    assert catalog.twisted_config_bm(2, 1, "projective") == HGPoly.monomial(MotiveClass.scalar(1, -1), 2)
    assert catalog.twisted_config_bm(1, 3, "projective") == catalog.bm_poly(catalog.projective(3))


@pytest.mark.parametrize("N", range(1, 7))
def test_affine_vanishing(N):
    for k in range(2, 7):
        assert catalog.twisted_config_bm(k, N, "affine") == HGPoly.zero()
    assert catalog.twisted_config_bm(1, N, "affine") == catalog.bm_poly(catalog.affine(N))


@pytest.mark.parametrize("N", range(1, 7))
def test_projective_vanishing_bound(N):
    for k in range(1, 7):
        zero = catalog.twisted_config_bm(k, N, "projective") == HGPoly.zero()
        assert zero == (k >= N + 2)


def test_projective_twisted_betti_matches_grassmannian():
    for N in range(1, 6):
        for k in range(1, N + 2):
            got = betti(catalog.twisted_config_bm(k, N, "projective"))
            want = {d + k * (k - 1): c for d, c in schubert_counts(k, N + 1).items()}
            assert got == want


@pytest.mark.parametrize("N", range(1, 7))
def test_grassmannian_against_schubert_cells(N):
    for k in range(0, N + 1):
        assert betti(catalog.coh_poly(catalog.grassmannian(k, N))) == schubert_counts(k, N)


def test_projective_total_betti():
    for n in range(0, 8):
        assert betti_eval(catalog.coh_poly(catalog.projective(n)), 1) == n + 1


def test_bm_coh_round_trip():
    spaces = [
        catalog.point(), catalog.affine(3), catalog.torus(), catalog.projective(4),
        catalog.grassmannian(2, 5), catalog.f2_projective_line("swap"),
        catalog.f2_projective_plane(), catalog.gl3(), catalog.pgl3(),
    ]
    for sp in spaces:
        bm = catalog.bm_poly(sp)
        back = tate_twist(t_reverse(bm), sp.dim).shift(2 * sp.dim)
        expected = catalog.coh_poly(sp)
        assert back == expected
        assert bm.max_degree() == 2 * sp.dim
        assert bm[2 * sp.dim].by_tate().keys() == {-sp.dim}


def test_gl3_is_torus_times_pgl3():
    assert catalog.coh_poly(catalog.gl3()) == catalog.coh_poly(catalog.torus()) * catalog.coh_poly(catalog.pgl3())
    assert catalog.bm_poly(catalog.gl3()) == catalog.bm_poly(catalog.torus()) * catalog.bm_poly(catalog.pgl3())


def test_gaussian_binomial():
    assert catalog.gaussian_binomial(4, 2) == [1, 1, 2, 1, 1]
    assert catalog.gaussian_binomial(3, 0) == [1]
    assert catalog.gaussian_binomial(3, 4) == []


@pytest.mark.parametrize(
    "make",
    [
        lambda: catalog.SpaceId("sphere"),
        lambda: catalog.SpaceId("affine", ()),
        lambda: catalog.SpaceId("grassmannian", (3, 2)),
        lambda: catalog.SpaceId("projective", (9,)),
        lambda: catalog.SpaceId("gl3", (), "swap"),
    ],
)
def test_invalid_ids(make):
    with pytest.raises(catalog.UnknownSpace):
        make()


def test_twisted_config_rejects_bad_input():
    with pytest.raises(ValueError):
        catalog.twisted_config_bm(0, 2, "projective")
    with pytest.raises(ValueError):
        catalog.twisted_config_bm(2, 2, "torus")
