"""Borel-Moore polynomials of the strata of a geometric resolution.

A stratum is a complex vector bundle over a bundle of open simplices over a
configuration family.  The descriptor stores the configuration family's
Borel-Moore polynomial with the sign-twisted coefficients already applied, so
the simplex bundle contributes only a degree shift.
"""
from __future__ import annotations

from dataclasses import dataclass

from .motive import HGPoly, MotiveClass


@dataclass(frozen=True)
class StratumDescriptor:
    label: str
    base_bm: HGPoly
    simplex_dim: int
    bundle_rank: int

    def __post_init__(self):
        if self.simplex_dim < 0 or self.bundle_rank < 0:
            raise ValueError(
                f"stratum {self.label!r}: simplex_dim and bundle_rank must be >= 0, "
                f"got {self.simplex_dim}, {self.bundle_rank}"
            )


def vector_bundle_factor(rank: int) -> HGPoly:
    """BM polynomial of C^rank: L^-rank t^(2 rank)."""
    return HGPoly.monomial(MotiveClass.scalar(1, -rank), 2 * rank)


def stratum_bm(d: StratumDescriptor) -> HGPoly:
    return (d.base_bm * vector_bundle_factor(d.bundle_rank)).shift(d.simplex_dim)


def cone_bm(reduced_base: HGPoly) -> HGPoly:
    """Open cone over a space whose reduced BM polynomial is ``reduced_base``."""
    return reduced_base.shift(1)
