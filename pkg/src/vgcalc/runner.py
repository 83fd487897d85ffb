"""Execute parsed scenarios and compare their artifacts against golden files."""
from __future__ import annotations

import difflib
from dataclasses import dataclass, field
from pathlib import Path

from . import catalog
from .motive import (
    HGPoly,
    MotiveClass,
    alexander_dual,
    alexander_inverse,
    betti_eval,
    euler_class,
    exact_divide,
    poincare_dual_bm,
    render_poly,
    t_reverse,
    tate_twist,
    with_unit,
)
from .scenario import (
    AssertDecl,
    BinOp,
    Call,
    DiffDecl,
    DivideDecl,
    DualDecl,
    Gen,
    LesDecl,
    Let,
    Loc,
    Neg,
    Num,
    PageDecl,
    Pow,
    Ref,
    Scenario,
    ScenarioError,
    Schur,
    Space,
    StratumDecl,
    parse_file,
)
from .spectral import (
    ConnectingDecl,
    DifferentialDecl,
    Page,
    apply_differentials,
    assemble_page,
    image_from_rank,
    les_solve,
    page_euler,
    product_page,
    render_page,
    tensor_connecting,
    total_poly,
)
from .strata import StratumDescriptor, cone_bm, stratum_bm


class RunError(ScenarioError):
    """An operation failed while executing a statement."""


@dataclass
class PageState:
    page: Page
    diffs: list = field(default_factory=list)

    def converged(self) -> Page:
        return apply_differentials(self.page, self.diffs)


@dataclass
class AssertionResult:
    loc: Loc
    text: str
    passed: bool
    left: str
    right: str


@dataclass
class GoldenResult:
    name: str
    path: Path
    passed: bool
    diff: list[str]


@dataclass
class Report:
    source: str
    polys: dict = field(default_factory=dict)  # name -> HGPoly, in definition order
    strata: dict = field(default_factory=dict)  # name -> StratumDescriptor
    pages: dict = field(default_factory=dict)  # name -> PageState
    log: list = field(default_factory=list)  # (loc, text)
    warnings: list = field(default_factory=list)
    assertions: list = field(default_factory=list)
    goldens: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions) and all(g.passed for g in self.goldens)

    def artifact(self, name: str) -> str:
        """Canonical rendering of a named poly (or of a page's starting table)."""
        if name in self.pages:
            return render_page(self.pages[name].page)
        if name in self.polys:
            return render_poly(self.polys[name]) + "\n"
        raise KeyError(name)

    def render(self, emit: str = "all", quiet: bool = False) -> str:
        out = [f"scenario {self.source}"]
        if not quiet:
            if emit in ("poly", "all"):
                for loc, text in self.log:
                    out.append(f"  [{loc.source}:{loc.line}] {text}")
            if emit in ("table", "all"):
                for name, state in self.pages.items():
                    out.append(f"page {name} ({state.page.variance}, E_{state.page.start}):")
                    out.extend("  " + line for line in render_page(state.page).splitlines())
                    conv = state.converged()
                    out.append(f"page {name} after {len(state.diffs)} declared differential(s):")
                    out.extend("  " + line for line in render_page(conv).splitlines())
        for w in self.warnings:
            out.append(f"WARNING {w}")
        for a in self.assertions:
            status = "PASS" if a.passed else "FAIL"
            out.append(f"{status} assert [{a.loc.source}:{a.loc.line}] {a.text}")
            if not a.passed:
                out.append(f"    left:  {a.left}")
                out.append(f"    right: {a.right}")
        for g in self.goldens:
            out.append(f"{'PASS' if g.passed else 'FAIL'} golden {g.name} ({g.path.name})")
            out.extend("    " + line for line in g.diff)
        npass = sum(a.passed for a in self.assertions)
        out.append(
            f"{npass}/{len(self.assertions)} assertions passed, "
            f"{sum(g.passed for g in self.goldens)}/{len(self.goldens)} goldens passed, "
            f"{len(self.warnings)} warning(s)"
        )
        return "\n".join(out) + "\n"


def _space_id(sp: Space) -> catalog.SpaceId:
    name, params = sp.name, sp.params
    table = {
        "pt": lambda: catalog.point(),
        "P": lambda: catalog.projective(*params),
        "A": lambda: catalog.affine(*params),
        "Gm": lambda: catalog.torus(),
        "Gr": lambda: catalog.grassmannian(*params),
        "F2P1": lambda: catalog.f2_projective_line("trivial"),
        "F2P1swap": lambda: catalog.f2_projective_line("swap"),
        "F2P2": lambda: catalog.f2_projective_plane("swap"),
        "GL3": lambda: catalog.gl3(),
        "PGL3": lambda: catalog.pgl3(),
    }
    return table[name]()


class Runner:
    def __init__(self, scenario: Scenario):
        self.scenario = scenario
        self.report = Report(scenario.source)

    def fail(self, msg: str, loc: Loc):
        raise RunError(msg, loc.line, loc.col, loc.source)

    # expressions

    def eval(self, node) -> HGPoly:
        try:
            return self._eval(node)
        except ScenarioError:
            raise
        except (ValueError, ArithmeticError, KeyError) as exc:
            self.fail(str(exc), node.loc)

    def _eval(self, node) -> HGPoly:
        if isinstance(node, Num):
            return HGPoly.const(MotiveClass.scalar(node.value))
        if isinstance(node, Schur):
            return HGPoly.const(MotiveClass.schur(node.parts))
        if isinstance(node, Gen):
            if node.name == "L":
                return HGPoly.const(MotiveClass.scalar(1, 1))
            return HGPoly.monomial(MotiveClass.scalar(1), 1)
        if isinstance(node, Ref):
            if node.name in self.report.polys:
                return self.report.polys[node.name]
            if node.name in self.report.strata:
                return stratum_bm(self.report.strata[node.name])
            self.fail(f"unknown name {node.name!r}", node.loc)
        if isinstance(node, Neg):
            return -self.eval(node.operand)
        if isinstance(node, Pow):
            return self.eval(node.base) ** node.exp
        if isinstance(node, BinOp):
            a, b = self.eval(node.left), self.eval(node.right)
            return {"+": a.__add__, "-": a.__sub__, "*": a.__mul__}[node.op](b)
        if isinstance(node, Call):
            return self._call(node)
        raise AssertionError(node)

    def _call(self, node: Call) -> HGPoly:
        fn, args, kw = node.fn, node.args, dict(node.kwargs)
        if fn == "coh":
            return catalog.coh_poly(_space_id(args[0]))
        if fn == "bm":
            return catalog.bm_poly(_space_id(args[0]))
        if fn == "bconf":
            k, sp = args
            ambient = "affine" if sp.name == "A" else "projective"
            return catalog.twisted_config_bm(k, sp.params[0], ambient)
        if fn == "total":
            state = self.report.pages[args[0]]
            return total_poly(state.converged())
        if fn == "stratum":
            return stratum_bm(self.report.strata[args[0]])
        x = self.eval(args[0])
        if fn == "alexander":
            return alexander_dual(x, kw["M"], unreduced=bool(kw.get("unreduced")))
        if fn == "alexander_inv":
            return alexander_inverse(x, kw["M"])
        if fn == "twist":
            return tate_twist(x, args[1])
        if fn == "reverse":
            return t_reverse(x)
        if fn == "pdual":
            return poincare_dual_bm(x, args[1])
        if fn == "with_unit":
            return with_unit(x)
        if fn == "cone":
            return cone_bm(x)
        if fn == "euler":
            return HGPoly.const(euler_class(x))
        if fn == "chi":
            value = betti_eval(x, -1)
            if value.denominator != 1:
                self.fail("Euler characteristic is not an integer", node.loc)
            return HGPoly.const(MotiveClass.scalar(int(value)))
        raise AssertionError(fn)

    def warn(self, text: str):
        if text not in self.report.warnings:
            self.report.warnings.append(text)

    def bind(self, name: str, value: HGPoly, loc: Loc, verb: str = "let"):
        self.report.polys[name] = value
        self.report.log.append((loc, f"{verb} {name} = {render_poly(value)}"))

    # statements

    def run(self) -> Report:
        for st in self.scenario.statements:
            self.execute(st)
        for name, state in self.report.pages.items():
            for w in state.converged().warnings:
                self.warn(f"page {name}: {w}")
        return self.report

    def execute(self, st):
        try:
            self._execute(st)
        except ScenarioError:
            raise
        except (ValueError, ArithmeticError) as exc:
            self.fail(str(exc), st.loc)

    def _execute(self, st):
        rep = self.report
        if isinstance(st, Let):
            self.bind(st.name, self.eval(st.expr), st.loc)
        elif isinstance(st, StratumDecl):
            d = StratumDescriptor(st.name, self.eval(st.base), st.simplex, st.rank)
            rep.strata[st.name] = d
            rep.log.append((st.loc, f"stratum {st.name}: base {render_poly(d.base_bm)} -> {render_poly(stratum_bm(d))}"))
        elif isinstance(st, PageDecl):
            if st.product:
                page = product_page(self.eval(st.product[0]), self.eval(st.product[1]))
            elif st.entries:
                entries = {}
                for pos, expr in st.entries:
                    value = self.eval(expr)
                    if value.degrees() not in ([], [0]):
                        self.fail(f"page entry {pos} must be a class without t", expr.loc)
                    entries[pos] = value[0]
                page = Page(entries, st.variance)
            else:
                page = assemble_page([(p, self.eval(e)) for p, e in st.columns], st.variance)
            rep.pages[st.name] = PageState(page)
            rep.log.append((st.loc, f"page {st.name}: {len(page.entries)} nonzero entries"))
        elif isinstance(st, DiffDecl):
            state = rep.pages[st.page]
            if st.image is not None:
                value = self.eval(st.image)
                if value.degrees() not in ([], [0]):
                    self.fail("a differential image must be a class without t", st.loc)
                image = value[0]
            else:
                work = apply_differentials(state.page, [d for d in state.diffs if d.r < st.r])
                image = image_from_rank(work, st.r, st.source, st.rank)
            before = page_euler(state.converged())
            state.diffs.append(DifferentialDecl(st.r, st.source, image))
            after = page_euler(state.converged())
            if before != after:
                self.fail("Euler class not conserved by the declared differential", st.loc)
            rep.log.append((st.loc, f"diff {st.page} d_{st.r} at {st.source}: image {render_poly(HGPoly.const(image))}"))
        elif isinstance(st, LesDecl):
            terms = {k: (None if e is None else self.eval(e)) for k, e in st.terms}
            connecting = []
            for c in st.connects:
                img = self.eval(c.image)
                if img.degrees() not in ([], [0]):
                    self.fail("a connecting image must be a class without t", c.loc)
                if c.tensor is None:
                    connecting.append(ConnectingDecl(c.degree, img[0]))
                else:
                    connecting.extend(tensor_connecting(c.degree, img[0], self.eval(c.tensor)))
            solved = les_solve(terms["A"], terms["X"], terms["U"], connecting, st.mode)
            self.bind(st.name, solved, st.loc, verb=f"les[{st.mode}]")
        elif isinstance(st, DualDecl):
            self.bind(st.name, alexander_dual(self.eval(st.expr), st.M, st.unreduced), st.loc, verb="dual")
        elif isinstance(st, DivideDecl):
            self.bind(st.name, exact_divide(self.eval(st.num), self.eval(st.den)), st.loc, verb="divide")
        elif isinstance(st, AssertDecl):
            left, right = self.eval(st.left), self.eval(st.right)
            rep.assertions.append(
                AssertionResult(st.loc, st.text, left == right, render_poly(left), render_poly(right))
            )
        else:
            raise AssertionError(st)


def run(scenario: Scenario) -> Report:
    return Runner(scenario).run()


def compare_golden(report: Report, golden_path: Path | str) -> GoldenResult:
    """Byte-exact comparison of the artifact named after the golden file's stem."""
    path = Path(golden_path)
    if not path.exists():
        raise FileNotFoundError(f"golden file {path} does not exist")
    expected = path.read_text(encoding="utf-8")
    try:
        actual = report.artifact(path.stem)
    except KeyError:
        return GoldenResult(path.stem, path, False, [f"scenario defines no artifact named {path.stem!r}"])
    if actual == expected:
        return GoldenResult(path.stem, path, True, [])
    diff = [
        line.rstrip("\n")
        for line in difflib.unified_diff(
            expected.splitlines(), actual.splitlines(), "golden", "computed", lineterm="", n=0
        )
        if not line.startswith(("---", "+++", "@@"))
    ]
    return GoldenResult(path.stem, path, False, diff)


def compare_goldens(report: Report, golden_dir: Path | str) -> list[GoldenResult]:
    """Check every golden in ``golden_dir`` whose stem names an artifact of the report."""
    results = []
    for path in sorted(Path(golden_dir).glob("*.txt")):
        if path.stem in report.pages or path.stem in report.polys:
            results.append(compare_golden(report, path))
    report.goldens.extend(results)
    return results


def run_file(path: Path | str, golden_dir: Path | str | None = None) -> Report:
    report = run(parse_file(path))
    if golden_dir is not None:
        compare_goldens(report, golden_dir)
    return report

