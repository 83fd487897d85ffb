"""HG polynomials of the recurring spaces, and twisted configuration spaces.

Every entry stores its complex dimension, so Borel-Moore polynomials are
obtained by Poincare duality without the caller supplying a dimension.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .motive import HGPoly, MotiveClass, poincare_dual_bm

KINDS = (
    "point",
    "affine",
    "torus",
    "projective",
    "grassmannian",
    "f2_projective_line",
    "f2_projective_plane",
    "gl3",
    "pgl3",
)
MARKINGS = (None, "trivial", "swap")
MAX_PARAM = 8


class UnknownSpace(KeyError):
    pass


@dataclass(frozen=True)
class SpaceId:
    """A catalog space.  ``grassmannian`` is Gr(k, C^N), the k-planes in C^N.

    ``marking`` only applies to the two-point configuration spaces: ``"swap"``
    lets S_2 act by exchanging the points, ``"trivial"`` declares the whole
    cohomology S_2-invariant.
    """

    kind: str
    params: tuple[int, ...] = ()
    marking: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise UnknownSpace(f"unknown space kind {self.kind!r}")
        if self.marking not in MARKINGS:
            raise UnknownSpace(f"unknown marking {self.marking!r}")
        arity = {"affine": 1, "projective": 1, "grassmannian": 2}.get(self.kind, 0)
        if len(self.params) != arity:
            raise UnknownSpace(f"{self.kind} takes {arity} parameter(s), got {self.params}")
        if any(not 0 <= p <= MAX_PARAM for p in self.params):
            raise UnknownSpace(f"parameters out of range 0..{MAX_PARAM}: {self.params}")
        if self.kind == "grassmannian" and self.params[0] > self.params[1]:
            raise UnknownSpace(f"Gr(k, N) needs k <= N, got {self.params}")
        if self.marking and not self.kind.startswith("f2_"):
            raise UnknownSpace(f"{self.kind} carries no S_2-marking")

    @property
    def dim(self) -> int:
        if self.kind == "point":
            return 0
        if self.kind in ("affine", "projective"):
            return self.params[0]
        if self.kind == "torus":
            return 1
        if self.kind == "grassmannian":
            k, N = self.params
            return k * (N - k)
        if self.kind == "f2_projective_line":
            return 2
        if self.kind == "f2_projective_plane":
            return 4
        return 9 if self.kind == "gl3" else 8


def point():
    return SpaceId("point")


def affine(n):
    return SpaceId("affine", (n,))


def torus():
    return SpaceId("torus")


def projective(n):
    return SpaceId("projective", (n,))


def grassmannian(k, N):
    return SpaceId("grassmannian", (k, N))


def f2_projective_line(marking="trivial"):
    return SpaceId("f2_projective_line", (), marking)


def f2_projective_plane(marking="swap"):
    return SpaceId("f2_projective_plane", (), marking)


def gl3():
    return SpaceId("gl3")


def pgl3():
    return SpaceId("pgl3")


def _L(k: int, lam=None) -> MotiveClass:
    return MotiveClass.scalar(1, k) if lam is None else MotiveClass.schur(lam, k)


def _lt(k: int, d: int, lam=None) -> HGPoly:
    """The monomial S_lam L^k t^d."""
    return HGPoly.monomial(_L(k, lam), d)


def gaussian_binomial(m: int, k: int) -> list[int]:
    """Coefficients of the q-binomial [m choose k]_q, lowest power first."""
    if k < 0 or k > m:
        return []

    @lru_cache(maxsize=None)
    def rec(m, k):
        if k == 0 or k == m:
            return (1,)
        a = rec(m - 1, k - 1)
        b = rec(m - 1, k)
        out = [0] * (k * (m - k) + 1)
        for i, c in enumerate(a):
            out[i] += c
        for i, c in enumerate(b):
            out[i + k] += c
        return tuple(out)

    return list(rec(m, k))


def coh_poly(space: SpaceId) -> HGPoly:
    one = HGPoly.unit()
    kind = space.kind
    if kind in ("point", "affine"):
        return one
    if kind == "torus":
        return one + _lt(1, 1)
    if kind == "projective":
        return sum((_lt(i, 2 * i) for i in range(space.params[0] + 1)), HGPoly.zero())
    if kind == "grassmannian":
        k, N = space.params
        coeffs = gaussian_binomial(N, k)
        return sum((_lt(i, 2 * i) * c for i, c in enumerate(coeffs)), HGPoly.zero())
    if kind == "gl3":
        return (one + _lt(1, 1)) * (one + _lt(2, 3)) * (one + _lt(3, 5))
    if kind == "pgl3":
        return (one + _lt(2, 3)) * (one + _lt(3, 5))
    s2, s11 = (2,), (1, 1)
    if kind == "f2_projective_line":
        if space.marking is None:
            return one + _lt(1, 2)
        if space.marking == "trivial":
            return _lt(0, 0, s2) + _lt(1, 2, s2)
        return _lt(0, 0, s2) + _lt(1, 2, s11)
    if kind == "f2_projective_plane":
        if space.marking is None:
            return (one + _lt(1, 2)) * coh_poly(projective(2))
        if space.marking == "trivial":
            return HGPoly.const(MotiveClass.schur(s2)) * coh_poly(f2_projective_plane(None))
        # only even degrees: F(2, P^2) is simply connected with a cell structure
        return (_lt(0, 0, s2) + _lt(1, 2, s11)) * coh_poly(projective(2))
    raise UnknownSpace(kind)


def bm_poly(space: SpaceId) -> HGPoly:
    return poincare_dual_bm(coh_poly(space), space.dim)


def twisted_config_bm(k: int, N: int, ambient: str) -> HGPoly:
    """Borel-Moore polynomial of B(k, Z) with sign-twisted coefficients,
    for Z = C^N (``ambient="affine"``) or P^N (``"projective"``)."""
    if k < 1:
        raise ValueError(f"need at least one point, got k={k}")
    if N < 1:
        raise ValueError(f"need N >= 1, got N={N}")
    if ambient == "affine":
        return bm_poly(affine(N)) if k == 1 else HGPoly.zero()
    if ambient != "projective":
        raise ValueError(f"ambient must be 'affine' or 'projective', got {ambient!r}")
    if k >= N + 2:
        return HGPoly.zero()
    # projective (k-1)-planes of P^N are k-planes of C^(N+1)
    shift = k * (k - 1)
    return _lt(-shift // 2, shift) * bm_poly(grassmannian(k, N + 1))
