from hypothesis import given, settings
from hypothesis import strategies as st

from strategies import hg_polys
from vgcalc.motive import HGPoly, MotiveClass
from vgcalc.strata import StratumDescriptor, cone_bm, stratum_bm, vector_bundle_factor

import pytest


def cls(a, b, k):
    return MotiveClass.schur((2,), k, a) + MotiveClass.schur((1, 1), k, b) if a or b else MotiveClass.zero(2)


def mono(a, b, k, d):
    return HGPoly.monomial(cls(a, b, k), d)


def test_table_rows():
    s1 = StratumDescriptor("1", mono(1, 1, 0, 0), 0, 11)
    assert stratum_bm(s1) == mono(1, 1, -11, 22)
    s3 = StratumDescriptor("3", mono(0, 1, 0, 0), 1, 9)
    assert stratum_bm(s3) == mono(0, 1, -9, 19)
    base2 = mono(1, 0, -2, 4) + mono(1, 0, -1, 2) + mono(0, 1, 0, 1)
    s2 = StratumDescriptor("2", base2, 0, 10)
    assert stratum_bm(s2) == mono(1, 0, -12, 24) + mono(1, 0, -11, 22) + mono(0, 1, -10, 21)


def test_cone_examples():
    assert cone_bm(HGPoly.zero()) == HGPoly.zero()
    assert cone_bm(mono(0, 1, 0, 3)) == mono(0, 1, 0, 4)
    # two points: reduced base is one class in degree 0, the cone is an interval
    assert cone_bm(HGPoly.unit()) == HGPoly.monomial(MotiveClass.scalar(1), 1)


def test_descriptor_validation():
    with pytest.raises(ValueError):
        StratumDescriptor("bad", HGPoly.unit(), -1, 0)


@settings(max_examples=500)
@given(hg_polys(degrees=(0, 6)), st.integers(0, 5), st.integers(0, 6), st.integers(0, 6))
def test_bundle_rank_splits(base, simplex, r1, r2):
    whole = stratum_bm(StratumDescriptor("x", base, simplex, r1 + r2))
    inner = stratum_bm(StratumDescriptor("x", base, simplex, r1))
    assert whole == inner * vector_bundle_factor(r2)
    if base:
        lo = simplex + 2 * (r1 + r2)
        assert whole.min_degree() >= lo + base.min_degree()
        assert whole.max_degree() <= lo + base.max_degree()
