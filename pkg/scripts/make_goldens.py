"""Write the golden files from hand transcriptions of the published tables and formulas.

Nothing here goes through strata, pages built by the engine, or LES solving:
tables are typed in cell by cell and formulas are typed in factored form, so
the goldens are an independent check on the scenario pipeline.  Only the
canonical renderers are shared.

    python scripts/make_goldens.py [--out DIR] [--check]
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from vgcalc.motive import HGPoly, MotiveClass, render_poly
from vgcalc.spectral import COHOMOLOGICAL, HOMOLOGICAL, Page, render_page

S2, S11 = (2,), (1, 1)


def rep(a: int = 0, b: int = 0, tate: int = 0) -> MotiveClass:
    """a*s[2] + b*s[1,1] at Tate power L^tate."""
    return MotiveClass.schur(S2, tate, a) + MotiveClass.schur(S11, tate, b) if a or b else MotiveClass.zero(2)


def mono(c: MotiveClass, deg: int) -> HGPoly:
    return HGPoly.monomial(c, deg)


def poly(*terms: tuple[int, int, int, int]) -> HGPoly:
    """Sum of a*s[2] + b*s[1,1] times L^tate t^deg over (a, b, tate, deg)."""
    out = HGPoly.zero(2)
    for a, b, tate, deg in terms:
        out = out + mono(rep(a, b, tate), deg)
    return out


ONE = HGPoly.unit()
L_T = HGPoly.monomial(MotiveClass.scalar(1, 1), 1)  # L t


def lt(tate: int, deg: int) -> HGPoly:
    return HGPoly.monomial(MotiveClass.scalar(1, tate), deg)


GL3 = (ONE + L_T) * (ONE + lt(2, 3)) * (ONE + lt(3, 5))
PGL3_BM = lt(-8, 16) * (ONE + lt(2, -3)) * (ONE + lt(3, -5))
GL3_BM = PGL3_BM * (lt(0, 1) + lt(-1, 2))

# Q(m) is L^-m.  Cells are (p, q): (a, b, tate).
TABLE2 = {
    (2, 22): (1, 0, -12),
    (1, 21): (1, 1, -11),
    (2, 20): (1, 0, -11),
    (2, 19): (0, 1, -10),
    (4, 17): (1, 1, -10),
    (3, 16): (0, 1, -9),
    (5, 16): (1, 0, -10),
    (4, 15): (1, 0, -9),
    (5, 15): (0, 1, -9),
    (4, 14): (0, 1, -8),
    (6, 12): (0, 1, -8),
    (7, 11): (1, 0, -8),
    (7, 10): (0, 1, -7),
}
TABLE2_BOX = ((1, 7), (10, 22))

TABLE3 = {
    (0, 7): (0, 1, 5), (2, 7): (1, 1, 6), (4, 7): (1, 1, 7), (6, 7): (1, 0, 8),
    (0, 6): (1, 1, 4), (2, 6): (2, 2, 5), (4, 6): (2, 2, 6), (6, 6): (1, 1, 7),
    (0, 4): (0, 1, 3), (2, 4): (1, 1, 4), (4, 4): (1, 1, 5), (6, 4): (1, 0, 6),
    (0, 3): (2, 1, 2), (2, 3): (3, 3, 3), (4, 3): (3, 3, 4), (6, 3): (1, 2, 5),
    (0, 0): (1, 0, 0), (2, 0): (1, 1, 1), (4, 0): (1, 1, 2), (6, 0): (0, 1, 3),
}
TABLE3_BOX = ((0, 6), (0, 7))

TABLE4 = {
    (3, 1): (1, 0, -2),
    (2, 0): (1, 1, -1), (3, 0): (1, 1, -1),
    (1, -1): (1, 0, 0), (2, -1): (1, 1, 0), (3, -1): (0, 2, 0),
}
TABLE4_BOX = ((1, 3), (-1, 1))


def table(cells: dict, box, variance: str) -> str:
    page = Page({pos: rep(*v) for pos, v in cells.items()}, variance)
    text = render_page(page)
    (p0, p1), (q0, q1) = box
    assert page.box() == (p0, p1, q0, q1), f"transcribed box {box} differs from {page.box()}"
    return text


def goldens() -> dict[str, str]:
    eq3_second = poly((1, 0, 0, 0), (2, 1, 2, 3), (0, 1, 3, 4), (1, 1, 4, 6), (0, 1, 5, 7))
    eq4 = poly((1, 0, 0, 0), (1, 1, 1, 2), (1, 0, 3, 5))
    eq5_first = poly((1, 0, -2, 9), (1, 1, -1, 7), (0, 1, 0, 7))
    eq9 = poly((1, 0, 6, 6), (1, 1, 7, 8), (0, 1, 8, 8))
    thm1i = poly((1, 0, 0, 0), (1, 1, 1, 2), (1, 0, 3, 5), (1, 0, 6, 6), (1, 1, 7, 8), (0, 1, 8, 8))
    thm1ii = poly((1, 0, 0, 0), (2, 1, 1, 2), (1, 1, 2, 4), (1, 0, 3, 5), (1, 0, 6, 6), (1, 1, 7, 8))
    polys = {
        "eq3": (ONE + L_T) * eq3_second,
        "eq4": eq4,
        "eq5": eq5_first * PGL3_BM,
        "eq6": eq5_first * GL3_BM,
        "eq8": GL3 * eq9,
        "eq9": eq9,
        "thm1i": thm1i,
        "thm1ii": thm1ii,
    }
    out = {name: render_poly(p) + "\n" for name, p in polys.items()}
    out["table2"] = table(TABLE2, TABLE2_BOX, HOMOLOGICAL)
    out["table3"] = table(TABLE3, TABLE3_BOX, COHOMOLOGICAL)
    out["table4"] = table(TABLE4, TABLE4_BOX, HOMOLOGICAL)
    return out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    default = Path(__file__).resolve().parent.parent / "src" / "vgcalc" / "goldens"
    ap.add_argument("--out", type=Path, default=default)
    ap.add_argument("--check", action="store_true", help="compare instead of writing")
    args = ap.parse_args(argv)
    stale = []
    args.out.mkdir(parents=True, exist_ok=True)
    for name, text in sorted(goldens().items()):
        path = args.out / f"{name}.txt"
        if args.check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    if stale:
        print("stale goldens: " + ", ".join(stale), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
