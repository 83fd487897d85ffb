"""Shared Hypothesis strategies for representations and HG polynomials."""
from __future__ import annotations

from hypothesis import strategies as st

from vgcalc.motive import HGPoly, MotiveClass
from vgcalc.sym_char import RepVector, partitions_of

small_ints = st.integers(min_value=-3, max_value=3)


def rep_vectors(n: int, genuine: bool = False):
    coeff = st.integers(min_value=0, max_value=3) if genuine else small_ints
    parts = partitions_of(n)
    return st.lists(coeff, min_size=len(parts), max_size=len(parts)).map(
        lambda cs: RepVector(dict(zip(parts, cs)), n=n)
    )


def motive_classes(n: int = 2, tates=(-3, 3), max_terms: int = 3):
    lo, hi = tates
    term = st.tuples(st.integers(lo, hi), rep_vectors(n))
    return st.lists(term, max_size=max_terms).map(lambda ts: _sum_class(ts, n))


def _sum_class(terms, n):
    out = MotiveClass.zero(n)
    for k, rep in terms:
        out = out + MotiveClass({k: rep}, n=n)
    return out


def hg_polys(n: int = 2, degrees=(-4, 6), max_terms: int = 4):
    lo, hi = degrees
    term = st.tuples(st.integers(lo, hi), motive_classes(n, max_terms=2))
    return st.lists(term, max_size=max_terms).map(lambda ts: _sum_poly(ts, n))


def _sum_poly(terms, n):
    out = HGPoly.zero(n)
    for d, c in terms:
        out = out + HGPoly.monomial(c, d)
    return out


def unit_leading_divisors(n: int = 2):
    """Polynomials whose lowest term is +-L^k times the trivial class."""

    def build(args):
        sign, k, low, rest = args
        lead = HGPoly.monomial(MotiveClass.scalar(sign, k).promote(n), low)
        return lead + rest.shift(low + 1 - (rest.min_degree() if rest else 0))

    return st.tuples(st.sampled_from([1, -1]), st.integers(-2, 2), st.integers(-2, 2), hg_polys(n, (0, 3), 3)).map(
        build
    )
