"""Exact character theory of the symmetric groups S_n for small n.

Characters are computed with the Murnaghan-Nakayama rule on beta-sets, so no
group elements are ever enumerated.  Partitions of 0 are allowed internally:
the empty partition stands for a non-equivariant ("plain") coefficient and is
promoted to the trivial representation when it meets a genuine S_n class.
"""
from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Mapping

MAX_N = 8


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p < 1 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be nonincreasing: {parts}")
        if sum(parts) > MAX_N:
            raise ValueError(f"partitions of n > {MAX_N} are not supported: {parts}")
        return super().__new__(cls, parts)

    @property
    def n(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def render(self) -> str:
        return "s[" + ",".join(str(p) for p in self) + "]"


def trivial(n: int) -> Partition:
    return Partition((n,)) if n else Partition(())


def sign(n: int) -> Partition:
    return Partition((1,) * n)


def _partitions(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions(n, n))


def partitions_of(n: int) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order, e.g. [(2), (1,1)]."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must lie in 1..{MAX_N}, got {n}")
    return list(_partitions_cached(n))


def centralizer_order(mu: Partition) -> int:
    z = 1
    for part in set(mu):
        m = mu.count(part)
        z *= part**m * factorial(m)
    return z


def class_size(mu: Partition) -> int:
    return factorial(mu.n) // centralizer_order(mu)


def _beta_set(lam: tuple[int, ...]) -> frozenset[int]:
    k = len(lam)
    return frozenset(lam[i] + (k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def _mn(beta: frozenset[int], mu: tuple[int, ...]) -> int:
    # Removing an r-rim hook moves one bead from b to b - r; the sign counts
    # the beads jumped over.
    if not mu:
        return 1
    r, rest = mu[0], mu[1:]
    total = 0
    for b in beta:
        target = b - r
        if target < 0 or target in beta:
            continue
        between = sum(1 for c in beta if target < c < b)
        total += (-1) ** between * _mn((beta - {b}) | {target}, rest)
    return total


def character_value(lam: Partition, mu: Partition) -> int:
    """chi_lam on the conjugacy class of cycle type mu."""
    lam, mu = Partition(lam), Partition(mu)
    if lam.n != mu.n:
        raise ValueError(f"partitions of different n: {lam} vs {mu}")
    return _mn(_beta_set(tuple(lam)), tuple(mu))


def hook_length_dimension(lam: Partition) -> int:
    """Dimension of S_lam by the hook length formula."""
    lam = Partition(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j - 1) + (conj[j] - i - 1) + 1
    return factorial(lam.n) // prod


def dimension(lam: Partition) -> int:
    lam = Partition(lam)
    return character_value(lam, Partition((1,) * lam.n))


class RepVector(Mapping):
    """A virtual representation of S_n: partition -> integer multiplicity.

    Zero multiplicities are dropped, so equal representations compare equal.
    ``n == 0`` is the plain (non-equivariant) case.
    """

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, terms: Mapping | Iterable = (), n: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, int] = {}
        for lam, c in items:
            lam = Partition(lam)
            if n is None:
                n = lam.n
            elif lam.n != n:
                raise ValueError(f"mixed n in representation: {lam} is not a partition of {n}")
            acc[lam] = acc.get(lam, 0) + int(c)
        self.n = 0 if n is None else n
        self._terms = {k: v for k, v in sorted(acc.items(), reverse=True) if v}
        self._hash = None

    @classmethod
    def irreducible(cls, lam: Iterable[int]) -> "RepVector":
        lam = Partition(lam)
        return cls({lam: 1}, n=lam.n)

    @classmethod
    def scalar(cls, c: int) -> "RepVector":
        return cls({Partition(()): c}, n=0)

    def __getitem__(self, lam):
        return self._terms.get(Partition(lam), 0)

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, RepVector):
            return NotImplemented
        if not self._terms and not other._terms:
            return True
        a, b = _common(self, other)
        return a._terms == b._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self):
        return f"RepVector({self.render()}, n={self.n})"

    def promote(self, n: int) -> "RepVector":
        """Reinterpret a plain class as a multiple of the trivial S_n-representation."""
        if n == self.n:
            return self
        if self.n != 0:
            raise ValueError(f"cannot coerce an S_{self.n}-representation to S_{n}")
        return RepVector({trivial(n): self[()]}, n=n)

    def __add__(self, other: "RepVector") -> "RepVector":
        a, b = _common(self, other)
        out = dict(a._terms)
        for k, v in b._terms.items():
            out[k] = out.get(k, 0) + v
        return RepVector(out, n=a.n)

    def __neg__(self):
        return RepVector({k: -v for k, v in self._terms.items()}, n=self.n)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int) -> "RepVector":
        return RepVector({k: c * v for k, v in self._terms.items()}, n=self.n)

    def is_genuine(self) -> bool:
        return all(v > 0 for v in self._terms.values())

    def dimension(self) -> int:
        return sum(v * dimension(k) for k, v in self._terms.items())

    def render(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for lam, c in self._terms.items():
            body = lam.render() if lam else "1"
            if lam and abs(c) != 1:
                body = f"{abs(c)}*{body}"
            elif not lam:
                body = str(abs(c))
            out.append(("-" if c < 0 else "+", body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for s, body in out[1:]:
            text += s + body
        return text


def _common(a: RepVector, b: RepVector) -> tuple[RepVector, RepVector]:
    if a.n == b.n:
        return a, b
    if not a._terms:
        return RepVector((), n=b.n), b
    if not b._terms:
        return a, RepVector((), n=a.n)
    if a.n == 0:
        return a.promote(b.n), b
    if b.n == 0:
        return a, b.promote(a.n)
    raise ValueError(f"mismatched symmetric groups: S_{a.n} vs S_{b.n}")


@lru_cache(maxsize=None)
def _kron_irreducibles(lam: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    n = lam.n
    classes = _partitions_cached(n)
    order = factorial(n)
    out = []
    for rho in classes:
        s = sum(
            class_size(mu) * character_value(lam, mu) * character_value(nu, mu) * character_value(rho, mu)
            for mu in classes
        )
        if s % order:
            raise ArithmeticError(f"non-integral Kronecker coefficient for {lam} x {nu} -> {rho}")
        if s:
            out.append((rho, s // order))
    return tuple(out)


def kronecker(a: RepVector, b: RepVector) -> RepVector:
    """Tensor product of two (virtual) representations of the same S_n."""
    a, b = _common(a, b)
    if a.n == 0:
        return RepVector.scalar(a[()] * b[()]) if a and b else RepVector((), n=0)
    acc: dict[Partition, int] = {}
    for lam, x in a.items():
        for nu, y in b.items():
            for rho, c in _kron_irreducibles(lam, nu):
                acc[rho] = acc.get(rho, 0) + x * y * c
    return RepVector(acc, n=a.n)


def inner_product(a: RepVector, b: RepVector) -> int:
    a, b = _common(a, b)
    return sum(v * b[k] for k, v in a.items())


def invariant_multiplicity(a: RepVector) -> int:
    """Multiplicity of the trivial representation."""
    return a[trivial(a.n)]


def class_function(a: RepVector) -> dict[Partition, int]:
    """Character of ``a`` as a map from cycle type to value."""
    if a.n == 0:
        return {Partition(()): a[()]}
    return {mu: sum(v * character_value(lam, mu) for lam, v in a.items()) for mu in _partitions_cached(a.n)}
