"""Tate-type classes in the equivariant Grothendieck group and HG polynomials.

A ``MotiveClass`` is a finite integer combination of ``S_lam * L^k``.  ``L`` is
the class of Q(-1), so the Tate structure Q(m) sits at ``tate_exp == -m``.
An ``HGPoly`` is a Laurent polynomial in ``t`` with ``MotiveClass``
coefficients; it is the container for every Hodge-Grothendieck polynomial in
the computation.  Both types are immutable and compare by canonical form.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping

from .sym_char import Partition, RepVector, kronecker, trivial


class MotiveClass:
    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, terms: Mapping[int, RepVector] | Iterable = (), n: int | None = None):
        """``terms`` maps tate exponent -> RepVector, or is an iterable of
        ``((partition, tate_exp), coefficient)`` pairs."""
        reps: dict[int, RepVector] = {}
        if isinstance(terms, Mapping):
            for k, rep in terms.items():
                reps[int(k)] = rep
        else:
            flat: dict[int, list] = {}
            for (lam, k), c in terms:
                flat.setdefault(int(k), []).append((Partition(lam), c))
            for k, items in flat.items():
                reps[k] = RepVector(items)
        if n is None:
            ns = {r.n for r in reps.values() if r}
            nonzero = ns - {0}
            if len(nonzero) > 1:
                raise ValueError(f"mixed symmetric groups in one class: {sorted(nonzero)}")
            n = nonzero.pop() if nonzero else 0
        clean = {}
        for k in sorted(reps):
            rep = reps[k]
            if rep:
                clean[k] = rep.promote(n) if rep.n != n else rep
        self.n = n
        self._terms = clean
        self._hash = None

    # constructors

    @classmethod
    def zero(cls, n: int = 0) -> "MotiveClass":
        return cls({}, n=n)

    @classmethod
    def scalar(cls, c: int, tate_exp: int = 0) -> "MotiveClass":
        return cls({tate_exp: RepVector.scalar(c)}, n=0)

    @classmethod
    def schur(cls, lam: Iterable[int], tate_exp: int = 0, coeff: int = 1) -> "MotiveClass":
        lam = Partition(lam)
        return cls({tate_exp: RepVector({lam: coeff}, n=lam.n)}, n=lam.n)

    @classmethod
    def unit(cls, n: int = 0) -> "MotiveClass":
        return cls({0: RepVector({trivial(n): 1}, n=n)}, n=n)

    # mapping-ish access

    def items(self):
        """Flat ``((partition, tate_exp), coefficient)`` pairs in canonical order."""
        for k, rep in self._terms.items():
            for lam, c in rep.items():
                yield (lam, k), c

    def by_tate(self) -> dict[int, RepVector]:
        return dict(self._terms)

    def coefficient(self, lam, tate_exp: int) -> int:
        rep = self._terms.get(tate_exp)
        if rep is None:
            return 0
        return rep[Partition(lam)] if rep.n == Partition(lam).n else 0

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = MotiveClass.scalar(other)
        if not isinstance(other, MotiveClass):
            return NotImplemented
        if self._terms.keys() != other._terms.keys():
            return False
        return all(self._terms[k] == other._terms[k] for k in self._terms)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple((k, hash(v)) for k, v in self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"MotiveClass({render_class(self)})"

    def promote(self, n: int) -> "MotiveClass":
        if n == self.n:
            return self
        if not self._terms:
            return MotiveClass({}, n=n)
        return MotiveClass({k: r.promote(n) for k, r in self._terms.items()}, n=n)

    # arithmetic

    def __add__(self, other: "MotiveClass") -> "MotiveClass":
        a, b = common_n(self, other)
        out = dict(a._terms)
        for k, rep in b._terms.items():
            out[k] = out[k] + rep if k in out else rep
        return MotiveClass(out, n=a.n)

    def __neg__(self):
        return MotiveClass({k: -r for k, r in self._terms.items()}, n=self.n)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MotiveClass({k: r.scale(other) for k, r in self._terms.items()}, n=self.n)
        a, b = common_n(self, other)
        out: dict[int, RepVector] = {}
        for i, x in a._terms.items():
            for j, y in b._terms.items():
                prod = kronecker(x, y)
                out[i + j] = out[i + j] + prod if i + j in out else prod
        return MotiveClass(out, n=a.n)

    __rmul__ = __mul__

    def twist(self, m: int) -> "MotiveClass":
        return MotiveClass({k + m: r for k, r in self._terms.items()}, n=self.n)

    # order and inspection

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for _, c in self.items())

    def le(self, other: "MotiveClass") -> bool:
        """Constituent-wise ``self <= other``."""
        return (other - self).is_nonnegative()

    def meet(self, other: "MotiveClass") -> "MotiveClass":
        """Constituent-wise minimum (of the nonnegative parts)."""
        a, b = common_n(self, other)
        out = []
        for key, c in a.items():
            m = min(c, b.coefficient(*key))
            if m > 0:
                out.append((key, m))
        return MotiveClass(out, n=a.n)

    def dimension(self) -> int:
        return sum(r.dimension() for r in self._terms.values())

    def is_unit(self) -> bool:
        """``+-L^k`` times the trivial representation."""
        if len(self._terms) != 1:
            return False
        (rep,) = self._terms.values()
        return len(rep) == 1 and abs(rep[trivial(self.n)]) == 1

    def inverse_unit(self) -> "MotiveClass":
        if not self.is_unit():
            raise ArithmeticError(f"{render_class(self)} is not invertible")
        (k, rep), = self._terms.items()
        return MotiveClass({-k: rep}, n=self.n)


def common_n(a, b):
    if a.n == b.n:
        return a, b
    if a.n == 0:
        return a.promote(b.n), b
    if b.n == 0:
        return a, b.promote(a.n)
    raise ValueError(f"mismatched symmetric groups: S_{a.n} vs S_{b.n}")


class HGPoly:
    """Laurent polynomial in t with MotiveClass coefficients."""

    __slots__ = ("n", "_coeffs", "_hash")

    def __init__(self, coeffs: Mapping[int, MotiveClass] = (), n: int | None = None):
        coeffs = dict(coeffs)
        if n is None:
            nonzero = {c.n for c in coeffs.values() if c} - {0}
            if len(nonzero) > 1:
                raise ValueError(f"mixed symmetric groups in one polynomial: {sorted(nonzero)}")
            n = nonzero.pop() if nonzero else 0
        self.n = n
        self._coeffs = {int(d): coeffs[d].promote(n) for d in sorted(coeffs) if coeffs[d]}
        self._hash = None

    @classmethod
    def zero(cls, n: int = 0) -> "HGPoly":
        return cls({}, n=n)

    @classmethod
    def const(cls, c: MotiveClass) -> "HGPoly":
        return cls({0: c}, n=c.n)

    @classmethod
    def monomial(cls, c: MotiveClass, degree: int) -> "HGPoly":
        return cls({degree: c}, n=c.n)

    @classmethod
    def unit(cls, n: int = 0) -> "HGPoly":
        return cls({0: MotiveClass.unit(n)}, n=n)

    def __getitem__(self, degree: int) -> MotiveClass:
        return self._coeffs.get(degree, MotiveClass.zero(self.n))

    def items(self):
        return self._coeffs.items()

    def degrees(self) -> list[int]:
        return list(self._coeffs)

    def __bool__(self):
        return bool(self._coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, MotiveClass)):
            other = as_poly(other)
        if not isinstance(other, HGPoly):
            return NotImplemented
        return self._coeffs.keys() == other._coeffs.keys() and all(
            self._coeffs[d] == other._coeffs[d] for d in self._coeffs
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple((d, hash(c)) for d, c in self._coeffs.items()))
        return self._hash

    def __repr__(self):
        return f"HGPoly({render_poly(self)})"

    def __str__(self):
        return render_poly(self)

    def promote(self, n: int) -> "HGPoly":
        if n == self.n:
            return self
        if self.n != 0 and self._coeffs:
            raise ValueError(f"cannot coerce S_{self.n} polynomial to S_{n}")
        return HGPoly({d: c.promote(n) for d, c in self._coeffs.items()}, n=n)

    def __add__(self, other):
        return poly_add(self, as_poly(other))

    __radd__ = __add__

    def __neg__(self):
        return HGPoly({d: -c for d, c in self._coeffs.items()}, n=self.n)

    def __sub__(self, other):
        return poly_add(self, -as_poly(other))

    def __rsub__(self, other):
        return poly_add(as_poly(other), -self)

    def __mul__(self, other):
        return poly_mul(self, as_poly(other))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return monomial_inverse(self) ** (-k)
        out = HGPoly.unit(self.n)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "HGPoly":
        return HGPoly({d + k: c for d, c in self._coeffs.items()}, n=self.n)

    def min_degree(self) -> int:
        return min(self._coeffs)

    def max_degree(self) -> int:
        return max(self._coeffs)


def as_poly(x) -> HGPoly:
    if isinstance(x, HGPoly):
        return x
    if isinstance(x, MotiveClass):
        return HGPoly.const(x)
    if isinstance(x, int):
        return HGPoly.const(MotiveClass.scalar(x))
    raise TypeError(f"cannot interpret {x!r} as an HG polynomial")


def _pair(P: HGPoly, Q: HGPoly) -> tuple[HGPoly, HGPoly]:
    if P.n == Q.n:
        return P, Q
    if not P:
        return HGPoly.zero(Q.n), Q
    if not Q:
        return P, HGPoly.zero(P.n)
    if P.n == 0:
        return P.promote(Q.n), Q
    if Q.n == 0:
        return P, Q.promote(P.n)
    raise ValueError(f"mismatched symmetric groups: S_{P.n} vs S_{Q.n}")


def poly_add(P: HGPoly, Q: HGPoly) -> HGPoly:
    P, Q = _pair(P, Q)
    out = dict(P._coeffs)
    for d, c in Q._coeffs.items():
        out[d] = out[d] + c if d in out else c
    return HGPoly(out, n=P.n)


def poly_mul(P: HGPoly, Q: HGPoly) -> HGPoly:
    """Cauchy product in t; coefficients multiply by Kronecker product and add Tate exponents."""
    P, Q = _pair(P, Q)
    out: dict[int, MotiveClass] = {}
    for i, a in P._coeffs.items():
        for j, b in Q._coeffs.items():
            prod = a * b
            out[i + j] = out[i + j] + prod if i + j in out else prod
    return HGPoly(out, n=P.n)


def monomial_inverse(P: HGPoly) -> HGPoly:
    if len(P._coeffs) != 1:
        raise ArithmeticError(f"only monomials can be inverted, got {render_poly(P)}")
    (d, c), = P._coeffs.items()
    return HGPoly({-d: c.inverse_unit()}, n=P.n)


def tate_twist(P: HGPoly, m: int) -> HGPoly:
    return HGPoly({d: c.twist(m) for d, c in P._coeffs.items()}, n=P.n)


def t_reverse(P: HGPoly) -> HGPoly:
    return HGPoly({-d: c for d, c in P._coeffs.items()}, n=P.n)


def poincare_dual_bm(P_coh: HGPoly, n_dim: int) -> HGPoly:
    """Borel-Moore polynomial of a smooth variety of complex dimension ``n_dim``
    from its cohomology polynomial: ``L^-n t^2n P(1/t)``."""
    return tate_twist(t_reverse(P_coh), -n_dim).shift(2 * n_dim)


def alexander_dual(P_bm: HGPoly, M: int, unreduced: bool = False) -> HGPoly:
    """Reduced cohomology of the complement of a closed subset of C^M from the
    subset's Borel-Moore polynomial: degree k <- degree 2M-1-k, twisted by L^M."""
    if M < 1:
        raise ValueError(f"ambient dimension must be positive, got {M}")
    out = tate_twist(t_reverse(P_bm), M).shift(2 * M - 1)
    return with_unit(out) if unreduced else out


def alexander_inverse(P_coh: HGPoly, M: int) -> HGPoly:
    """Inverse of :func:`alexander_dual` on reduced polynomials."""
    if M < 1:
        raise ValueError(f"ambient dimension must be positive, got {M}")
    return tate_twist(t_reverse(P_coh), -M).shift(2 * M - 1)


def with_unit(P: HGPoly) -> HGPoly:
    return P + HGPoly.unit(P.n)


class NotDivisible(ArithmeticError):
    def __init__(self, degree: int, remainder: HGPoly):
        self.degree = degree
        self.remainder = remainder
        super().__init__(f"not divisible: nonzero remainder at t-degree {degree}: {render_poly(remainder)}")


def exact_divide(P: HGPoly, D: HGPoly) -> HGPoly:
    """Q with P == Q * D, computed from the lowest t-degree upwards."""
    P, D = _pair(P, D)
    if not D:
        raise ZeroDivisionError("division by the zero polynomial")
    low_d = D.min_degree()
    lead_inv = D[low_d].inverse_unit()
    if not P:
        return HGPoly.zero(P.n)
    # Top coefficients may cancel (s[2]+s[1,1] times s[2]-s[1,1] is 0), so bound
    # the quotient by the lowest divisor term: its character is nonzero on
    # every class, and on each class the coefficient ring is a domain.
    top_q = P.max_degree() - low_d
    quotient: dict[int, MotiveClass] = {}
    rem = P
    while rem:
        low_r = rem.min_degree()
        k = low_r - low_d
        if k > top_q:
            raise NotDivisible(low_r, rem)
        q = rem[low_r] * lead_inv
        quotient[k] = q
        rem = rem - poly_mul(HGPoly.monomial(q, k), D)
    return HGPoly(quotient, n=P.n)


def euler_class(P: HGPoly) -> MotiveClass:
    """Evaluation at t = -1."""
    out = MotiveClass.zero(P.n)
    for d, c in P.items():
        out = out + (c if d % 2 == 0 else -c)
    return out


def betti(P: HGPoly) -> dict[int, int]:
    """Forget Hodge data: L -> 1 and S_lam -> dim S_lam."""
    out = {}
    for d, c in P.items():
        dim = c.dimension()
        if dim:
            out[d] = dim
    return out


def betti_eval(P: HGPoly, t: int) -> Fraction:
    return sum((v * Fraction(t) ** d for d, v in betti(P).items()), Fraction(0))


# canonical text rendering


def _monomial(tate: int, degree: int) -> list[str]:
    out = []
    if tate:
        out.append("L" if tate == 1 else f"L^{tate}")
    if degree:
        out.append("t" if degree == 1 else f"t^{degree}")
    return out


def _render_group(rep: RepVector, tate: int, degree: int) -> tuple[str, str]:
    """Return (sign, body) for one (degree, tate) group."""
    mono = _monomial(tate, degree)
    if len(rep) == 1:
        (lam, c), = rep.items()
        sgn = "-" if c < 0 else "+"
        c = abs(c)
        if lam:
            factors = ([str(c)] if c != 1 else []) + [lam.render()] + mono
        else:
            factors = ([str(c)] if c != 1 or not mono else []) + mono
        return sgn, "*".join(factors)
    return "+", "*".join(["(" + rep.render() + ")"] + mono)


def _join(groups: list[tuple[str, str]]) -> str:
    if not groups:
        return "0"
    sgn, body = groups[0]
    text = ("-" if sgn == "-" else "") + body
    for sgn, body in groups[1:]:
        text += f" {sgn} {body}"
    return text


def render_class(c: MotiveClass) -> str:
    return _join([_render_group(rep, k, 0) for k, rep in c.by_tate().items()])


def render_poly(P: HGPoly) -> str:
    groups = []
    for d, c in P.items():
        for k, rep in c.by_tate().items():
            groups.append(_render_group(rep, k, d))
    return _join(groups)
