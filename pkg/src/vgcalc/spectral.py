"""Bigraded pages, declared differentials, convergence and long exact sequences.

Differentials are declared by their image class rather than by rank.  Since
morphisms of mixed Hodge structures are strict and the maps are equivariant, an
image can only consist of constituents (irreducible, Tate power) present in
both source and target; ``admissible_image`` computes that bound.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .motive import HGPoly, MotiveClass, euler_class, render_class

HOMOLOGICAL = "homological"
COHOMOLOGICAL = "cohomological"

Pos = tuple[int, int]


class InadmissibleDifferential(ValueError):
    pass


class AmbiguousRank(ValueError):
    pass


class LESInconsistent(ValueError):
    def __init__(self, degree: int, message: str):
        self.degree = degree
        super().__init__(f"degree {degree}: {message}")


@dataclass(frozen=True)
class DifferentialDecl:
    r: int
    source: Pos
    image: MotiveClass


@dataclass(frozen=True)
class ConnectingDecl:
    """Image of the connecting map leaving the open term in degree ``degree``."""

    degree: int
    image: MotiveClass


@dataclass(frozen=True)
class Page:
    entries: dict = field(default_factory=dict)
    variance: str = HOMOLOGICAL
    start: int | None = None
    warnings: tuple[str, ...] = ()

    def __post_init__(self):
        if self.variance not in (HOMOLOGICAL, COHOMOLOGICAL):
            raise ValueError(f"unknown variance {self.variance!r}")
        clean = {tuple(k): v for k, v in sorted(self.entries.items()) if v}
        ns = {v.n for v in clean.values()} - {0}
        if len(ns) > 1:
            raise ValueError(f"page mixes symmetric groups {sorted(ns)}")
        n = ns.pop() if ns else 0
        object.__setattr__(self, "entries", {k: v.promote(n) for k, v in clean.items()})
        if self.start is None:
            object.__setattr__(self, "start", 1 if self.variance == HOMOLOGICAL else 2)

    @property
    def n(self) -> int:
        return next((v.n for v in self.entries.values()), 0)

    def __getitem__(self, pos: Pos) -> MotiveClass:
        return self.entries.get(tuple(pos), MotiveClass.zero(self.n))

    def target(self, r: int, source: Pos) -> Pos:
        p, q = source
        if self.variance == HOMOLOGICAL:
            return (p - r, q + r - 1)
        return (p + r, q - r + 1)

    def box(self) -> tuple[int, int, int, int] | None:
        if not self.entries:
            return None
        ps = [p for p, _ in self.entries]
        qs = [q for _, q in self.entries]
        return min(ps), max(ps), min(qs), max(qs)

    def with_entries(self, entries: dict, warnings: Sequence[str] = ()) -> "Page":
        return Page(entries, self.variance, self.start, tuple(warnings))


def assemble_page(columns: Iterable[tuple[int, HGPoly]], variance: str = HOMOLOGICAL) -> Page:
    """E_{p,q} = coefficient of t^(p+q) in column p."""
    entries = {}
    seen = set()
    for p, poly in columns:
        if p in seen:
            raise ValueError(f"column {p} given twice")
        seen.add(p)
        for d, c in poly.items():
            entries[(p, d - p)] = c
    return Page(entries, variance)


def product_page(base: HGPoly, fiber: HGPoly) -> Page:
    """E_2^{p,q} = H^p(base) (x) H^q(fiber) for a Leray spectral sequence."""
    entries = {}
    for p, b in base.items():
        for q, f in fiber.items():
            entries[(p, q)] = b * f
    return Page(entries, COHOMOLOGICAL)


def admissible_image(page: Page, r: int, source: Pos) -> MotiveClass:
    """Largest class a d_r leaving ``source`` can hit."""
    tgt = page.target(r, source)
    if tgt not in page.entries or tuple(source) not in page.entries:
        return MotiveClass.zero(page.n)
    return page[source].meet(page[tgt])


def image_from_rank(page: Page, r: int, source: Pos, rank: int) -> MotiveClass:
    """The unique admissible image of dimension ``rank``; errors if not unique."""
    bound = admissible_image(page, r, source)
    items = list(bound.items())
    choices = []
    for counts in itertools.product(*(range(c + 1) for _, c in items)):
        cand = MotiveClass([(key, k) for (key, _), k in zip(items, counts) if k], n=page.n)
        if cand.dimension() == rank:
            choices.append(cand)
    if not choices:
        raise InadmissibleDifferential(
            f"d_{r} at {tuple(source)}: no admissible image of rank {rank} "
            f"(admissible bound {render_class(bound)})"
        )
    if len(choices) > 1:
        raise AmbiguousRank(
            f"d_{r} at {tuple(source)}: rank {rank} does not single out an image inside "
            f"{render_class(bound)}; declare the image class explicitly"
        )
    return choices[0]


def _max_r(page: Page, source: Pos) -> int:
    p0, p1, q0, q1 = page.box()
    p, q = source
    if page.variance == HOMOLOGICAL:
        return min(p - p0, q1 - q + 1)
    return min(p1 - p, q - q0 + 1)


def unresolved(page: Page, declared: Iterable[tuple[int, Pos]]) -> list[str]:
    """Positions on ``page`` where an undeclared differential could still be nonzero."""
    if not page.entries:
        return []
    declared = {(r, tuple(s)) for r, s in declared}
    out = []
    for src in page.entries:
        for r in range(page.start, _max_r(page, src) + 1):
            if (r, src) in declared:
                continue
            img = admissible_image(page, r, src)
            if img:
                out.append(
                    f"unresolved d_{r}: {src} -> {page.target(r, src)} could hit {render_class(img)}"
                )
    return out


def apply_differentials(page: Page, decls: Sequence[DifferentialDecl]) -> Page:
    """Subtract every declared image from its source and target, page by page.

    The returned page carries warnings for positions where a nonzero
    differential is still admissible but was never declared.
    """
    entries = dict(page.entries)
    work = page
    for d in sorted(decls, key=lambda d: d.r):
        src = tuple(d.source)
        if d.r < page.start:
            raise InadmissibleDifferential(f"d_{d.r} at {src}: page starts at E_{page.start}")
        img = d.image.promote(page.n) if d.image.n == 0 and page.n else d.image
        if not img:
            continue
        if not img.is_nonnegative():
            raise InadmissibleDifferential(f"d_{d.r} at {src}: image {render_class(img)} is not a genuine class")
        tgt = work.target(d.r, src)
        for name, pos in (("source", src), ("target", tgt)):
            have = work[pos]
            for key, c in img.items():
                if have.coefficient(*key) < c:
                    lam, k = key
                    raise InadmissibleDifferential(
                        f"d_{d.r} at {src}: image constituent {render_class(MotiveClass.schur(lam, k))} "
                        f"(x{c}) exceeds the {name} entry {pos} = {render_class(have)}"
                    )
        entries[src] = entries[src] - img
        entries[tgt] = entries[tgt] - img
        work = work.with_entries(entries)
    result = page.with_entries(entries)
    warnings = unresolved(result, [(d.r, d.source) for d in decls])
    return result.with_entries(result.entries, warnings)


def total_poly(page: Page) -> HGPoly:
    out: dict[int, MotiveClass] = {}
    for (p, q), c in page.entries.items():
        out[p + q] = out[p + q] + c if p + q in out else c
    return HGPoly(out)


def page_euler(page: Page) -> MotiveClass:
    return euler_class(total_poly(page))


def render_page(page: Page) -> str:
    """Rows q descending, columns p ascending, canonical class text per cell."""
    box = page.box()
    if box is None:
        return "(empty page)\n"
    p0, p1, q0, q1 = box
    lines = []
    for q in range(q1, q0 - 1, -1):
        cells = [render_class(page[(p, q)]) for p in range(p0, p1 + 1)]
        lines.append(f"{q}: " + " | ".join(cells))
    lines.append("p: " + " | ".join(str(p) for p in range(p0, p1 + 1)))
    return "\n".join(lines) + "\n"


# long exact sequences

BM = "bm"
GYSIN = "gysin"


def _closed_term(A: HGPoly, mode: str) -> HGPoly:
    if mode == BM:
        return A
    # residue term of the Gysin sequence: H^(k-2)(A)(-1)
    return (A * HGPoly.monomial(MotiveClass.scalar(1, 1), 2))


def _from_closed_term(C: HGPoly, mode: str) -> HGPoly:
    if mode == BM:
        return C
    return C * HGPoly.monomial(MotiveClass.scalar(1, -1), -2)


def les_solve(
    A: HGPoly | None = None,
    X: HGPoly | None = None,
    U: HGPoly | None = None,
    connecting: Sequence[ConnectingDecl] = (),
    mode: str = BM,
) -> HGPoly:
    """Solve the long exact sequence of a closed ``A`` in ``X`` with complement ``U``.

    ``mode="bm"`` is the Borel-Moore sequence A_k -> X_k -> U_k -> A_{k-1}.
    ``mode="gysin"`` is the cohomology sequence of a smooth divisor,
    H^{k-2}(A)(-1) -> H^k(X) -> H^k(U) -> H^{k-1}(A)(-1).  In both cases a
    ``ConnectingDecl`` gives the image of the map leaving U in degree k.
    Exactly one of A, X, U is None; that term is returned.
    """
    if mode not in (BM, GYSIN):
        raise ValueError(f"unknown LES mode {mode!r}")
    missing = [name for name, v in (("A", A), ("X", X), ("U", U)) if v is None]
    if len(missing) != 1:
        raise ValueError(f"exactly one LES term must be unknown, got {missing or 'none'}")
    step = -1 if mode == BM else 1
    C = _closed_term(A, mode) if A is not None else None

    images: dict[int, MotiveClass] = {}
    for c in connecting:
        images[c.degree] = images[c.degree] + c.image if c.degree in images else c.image
    S = HGPoly.zero()
    for k, img in images.items():
        if not img.is_nonnegative():
            raise LESInconsistent(k, f"connecting image {render_class(img)} is not a genuine class")
        S = S + HGPoly.monomial(img, k) + HGPoly.monomial(img, k + step)

    if X is None:
        X = C + U - S
    elif U is None:
        U = X - C + S
    else:
        C = X - U + S

    for name, poly in (("closed", C), ("ambient", X), ("open", U)):
        for d, c in poly.items():
            if not c.is_nonnegative():
                raise LESInconsistent(d, f"{name} term forced negative: {render_class(c)}")
    for k, img in images.items():
        if not img.le(U[k]):
            raise LESInconsistent(k, f"connecting image {render_class(img)} exceeds open term {render_class(U[k])}")
        if not img.le(C[k + step]):
            raise LESInconsistent(
                k, f"connecting image {render_class(img)} exceeds closed term {render_class(C[k + step])}"
            )
    if euler_class(X) != euler_class(U) + euler_class(C):
        raise LESInconsistent(0, "Euler classes do not balance")

    if missing == ["A"]:
        return _from_closed_term(C, mode)
    return X if missing == ["X"] else U


def tensor_connecting(degree: int, image: MotiveClass, factor: HGPoly) -> list[ConnectingDecl]:
    """Connecting images of ``id (x) delta`` when every term is a tensor product with ``factor``."""
    return [ConnectingDecl(degree + j, image * c) for j, c in factor.items()]
