"""Brute-force search over differential declarations on a page.

Used to check that hand-picked declarations are among the choices that reach a
given abutment, and to count how many such choices exist.
"""
from itertools import product

from vgcalc.motive import HGPoly, MotiveClass
from vgcalc.spectral import DifferentialDecl, Page, admissible_image, apply_differentials, total_poly


def sub_classes(bound: MotiveClass):
    """Every genuine class c with 0 <= c <= bound, coefficientwise."""
    terms = list(bound.items())
    for counts in product(*(range(c + 1) for _, c in terms)):
        yield MotiveClass([(key, c) for (key, _), c in zip(terms, counts) if c], n=bound.n)


def _stage_choices(page, r):
    sources = sorted(pos for pos in page.entries if admissible_image(page, r, pos))
    options = [list(sub_classes(admissible_image(page, r, pos))) for pos in sources]
    return sources, options


def search(page, radii, target):
    """All declaration lists (one stage per r in ``radii``) whose abutment is ``target``.

    Within a stage the sources must not feed one another, which holds for the
    pages this is used on; a stage that violates it raises.
    """
    solutions = []

    def rec(decls, stage):
        work = apply_differentials(page, decls)
        if stage == len(radii):
            if total_poly(work) == target:
                solutions.append(list(decls))
            return
        r = radii[stage]
        sources, options = _stage_choices(work, r)
        hit = {work.target(r, s) for s in sources} & set(sources)
        if hit:
            raise ValueError(f"d_{r} sources {sorted(hit)} are also targets")
        for images in product(*options):
            extra = [DifferentialDecl(r, s, img) for s, img in zip(sources, images) if img]
            rec(decls + extra, stage + 1)

    rec([], 0)
    return solutions


def canonical(decls):
    return sorted((d.r, d.source, tuple(d.image.items())) for d in decls if d.image)


def weight_slice(c: MotiveClass, k: int) -> MotiveClass:
    rep = c.by_tate().get(k)
    return MotiveClass({k: rep} if rep else {}, n=c.n)


def split_by_weight(page, target):
    """Differentials preserve the Tate exponent, so the search splits into one slice per weight."""
    weights = sorted({k for c in page.entries.values() for k in c.by_tate()})
    out = {}
    for k in weights:
        entries = {pos: weight_slice(c, k) for pos, c in page.entries.items() if weight_slice(c, k)}
        tgt = HGPoly({d: weight_slice(c, k) for d, c in target.items()}, n=target.n)
        out[k] = (Page(entries, page.variance), tgt)
    return out


def search_by_weight(page, radii, target):
    """Map weight -> list of solutions for that slice."""
    return {k: search(p, radii, t) for k, (p, t) in split_by_weight(page, target).items()}


def restrict(decls, k):
    return [DifferentialDecl(d.r, d.source, weight_slice(d.image, k)) for d in decls]
