"""Parser for ``.vgl`` scenario files.

The language is line oriented with ``#`` comments.  Expressions are built from
``s[parts]``, ``L``, ``t``, integers, names, function calls and
``+ - * ^ ( )``; ``^`` accepts negative exponents.  Statements::

    let NAME = EXPR;
    stratum NAME { base = EXPR; simplex = INT; rank = INT; }
    page NAME homological|cohomological { col INT = EXPR, ...;
                                          entry (P, Q) = EXPR;
                                          product base = EXPR fiber = EXPR; }
    diff PAGE r=INT at (P,Q) image = EXPR;      # or: rank = INT;
    les NAME mode=bm|gysin { A=EXPR|?; X=EXPR|?; U=EXPR|?;
                             connect k=INT image=EXPR [tensor=EXPR]; }
    dual NAME = alexander(EXPR, M=INT);
    divide NAME = EXPR / EXPR;
    assert EXPR == EXPR;
    include "other.vgl";
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any


class ScenarioError(Exception):
    def __init__(self, message: str, line: int = 0, col: int = 0, source: str = "<scenario>"):
        self.message = message
        self.line = line
        self.col = col
        self.source = source
        super().__init__(f"{source}:{line}:{col}: {message}" if line else f"{source}: {message}")


class ParseError(ScenarioError):
    pass


class ValidationError(ScenarioError):
    pass


@dataclass(frozen=True)
class Loc:
    source: str
    line: int
    col: int

    def __str__(self):
        return f"{self.source}:{self.line}:{self.col}"


# expression nodes


@dataclass(frozen=True)
class Num:
    value: int
    loc: Loc


@dataclass(frozen=True)
class Schur:
    parts: tuple[int, ...]
    loc: Loc


@dataclass(frozen=True)
class Gen:
    name: str  # "L" or "t"
    loc: Loc


@dataclass(frozen=True)
class Ref:
    name: str
    loc: Loc


@dataclass(frozen=True)
class Space:
    name: str
    params: tuple[int, ...]
    loc: Loc


@dataclass(frozen=True)
class Call:
    fn: str
    args: tuple
    kwargs: tuple  # ((key, value), ...)
    loc: Loc


@dataclass(frozen=True)
class BinOp:
    op: str
    left: Any
    right: Any
    loc: Loc


@dataclass(frozen=True)
class Neg:
    operand: Any
    loc: Loc


@dataclass(frozen=True)
class Pow:
    base: Any
    exp: int
    loc: Loc


# statements


@dataclass(frozen=True)
class Let:
    name: str
    expr: Any
    loc: Loc


@dataclass(frozen=True)
class StratumDecl:
    name: str
    base: Any
    simplex: int
    rank: int
    loc: Loc


@dataclass(frozen=True)
class PageDecl:
    name: str
    variance: str
    columns: tuple = ()  # ((p, expr), ...)
    entries: tuple = ()  # (((p, q), expr), ...)
    product: tuple | None = None  # (base_expr, fiber_expr)
    loc: Loc | None = None


@dataclass(frozen=True)
class DiffDecl:
    page: str
    r: int
    source: tuple[int, int]
    image: Any  # expression, or None when a rank is given
    rank: int | None
    loc: Loc


@dataclass(frozen=True)
class ConnectDecl:
    degree: int
    image: Any
    tensor: Any
    loc: Loc


@dataclass(frozen=True)
class LesDecl:
    name: str
    mode: str
    terms: tuple  # (("A", expr-or-None), ...)
    connects: tuple
    loc: Loc


@dataclass(frozen=True)
class DualDecl:
    name: str
    expr: Any
    M: int
    unreduced: bool
    loc: Loc


@dataclass(frozen=True)
class DivideDecl:
    name: str
    num: Any
    den: Any
    loc: Loc


@dataclass(frozen=True)
class AssertDecl:
    left: Any
    right: Any
    text: str
    loc: Loc


@dataclass
class Scenario:
    statements: list
    source: str = "<scenario>"
    kinds: dict = field(default_factory=dict)  # name -> "poly" | "stratum" | "page"
    ns: dict = field(default_factory=dict)  # name -> inferred symmetric-group degree


SPACE_NAMES = {
    "pt": 0,
    "P": 1,
    "A": 1,
    "Gm": 0,
    "Gr": 2,
    "F2P1": 0,
    "F2P1swap": 0,
    "F2P2": 0,
    "GL3": 0,
    "PGL3": 0,
}
SPACE_FUNCS = {"coh", "bm"}
# function name -> (positional arity, allowed keywords)
FUNCS = {
    "coh": (1, ()),
    "bm": (1, ()),
    "bconf": (2, ()),
    "alexander": (1, ("M", "unreduced")),
    "alexander_inv": (1, ("M",)),
    "twist": (2, ()),
    "reverse": (1, ()),
    "pdual": (2, ()),
    "with_unit": (1, ()),
    "cone": (1, ()),
    "euler": (1, ()),
    "chi": (1, ()),
    "total": (1, ()),
    "stratum": (1, ()),
}
RESERVED = {"s", "L", "t", "let", "stratum", "page", "diff", "les", "dual", "divide", "assert", "include"}

_TOKEN = re.compile(
    r"""
    (?P<ws>[ \t\r]+)
  | (?P<nl>\n)
  | (?P<comment>\#[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"[^"\n]*")
  | (?P<sym>==|[+\-*^()\[\]{},;=/?])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    col: int
    pos: int = 0
    end: int = 0


def tokenize(text: str, source: str = "<scenario>") -> list[Token]:
    tokens = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1, source)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1, pos, m.end()))
        pos = m.end()
    tokens.append(Token("eof", "", line, pos - line_start + 1, pos, pos))
    return tokens


class Parser:
    def __init__(self, text: str, source: str = "<scenario>", base_dir: Path | None = None, _seen=None):
        self.source = source
        self.text = text
        self.tokens = tokenize(text, source)
        self.i = 0
        self.base_dir = base_dir
        self._seen = set() if _seen is None else _seen

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def loc(self, tok: Token | None = None) -> Loc:
        tok = tok or self.tok
        return Loc(self.source, tok.line, tok.col)

    def error(self, msg: str, tok: Token | None = None):
        tok = tok or self.tok
        found = tok.text or "end of input"
        raise ParseError(f"{msg} (found {found!r})", tok.line, tok.col, self.source)

    def at(self, text: str) -> bool:
        return self.tok.text == text and self.tok.kind in ("sym", "name")

    def accept(self, text: str) -> bool:
        if self.at(text):
            self.i += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.error(f"expected {text!r}")
        tok = self.tok
        self.i += 1
        return tok

    def expect_name(self) -> str:
        if self.tok.kind != "name":
            self.error("expected a name")
        name = self.tok.text
        self.i += 1
        return name

    def expect_int(self, signed: bool = False) -> int:
        neg = signed and self.accept("-")
        if self.tok.kind != "int":
            self.error("expected an integer")
        value = int(self.tok.text)
        self.i += 1
        return -value if neg else value

    def expect_kw_int(self, key: str) -> int:
        self.expect(key)
        self.expect("=")
        return self.expect_int(signed=True)

    # statements

    def parse_program(self) -> list:
        out = []
        while self.tok.kind != "eof":
            out.extend(self.statement())
        return out

    def statement(self) -> list:
        tok = self.tok
        loc = self.loc()
        if tok.kind != "name":
            self.error("expected a statement")
        kw = tok.text
        self.i += 1
        if kw == "let":
            name = self.binding_name()
            self.expect("=")
            expr = self.expr()
            self.expect(";")
            return [Let(name, expr, loc)]
        if kw == "stratum":
            return [self.stratum(loc)]
        if kw == "page":
            return [self.page(loc)]
        if kw == "diff":
            return [self.diff(loc)]
        if kw == "les":
            return [self.les(loc)]
        if kw == "dual":
            name = self.binding_name()
            self.expect("=")
            call_tok = self.tok
            self.expect("alexander")
            self.expect("(")
            expr = self.expr()
            self.expect(",")
            M = self.expect_kw_int("M")
            unreduced = False
            if self.accept(","):
                self.expect("unreduced")
                unreduced = True
            self.expect(")")
            self.expect(";")
            if M < 1:
                self.error("M must be positive", call_tok)
            return [DualDecl(name, expr, M, unreduced, loc)]
        if kw == "divide":
            name = self.binding_name()
            self.expect("=")
            num = self.expr()
            self.expect("/")
            den = self.expr()
            self.expect(";")
            return [DivideDecl(name, num, den, loc)]
        if kw == "assert":
            start = self.i
            left = self.expr()
            self.expect("==")
            right = self.expr()
            raw = self.text[self.tokens[start].pos : self.tokens[self.i - 1].end]
            text = " ".join(raw.split())
            self.expect(";")
            return [AssertDecl(left, right, text, loc)]
        if kw == "include":
            if self.tok.kind != "string":
                self.error("expected a quoted file name")
            rel = self.tok.text[1:-1]
            self.i += 1
            self.expect(";")
            return self.include(rel, tok)
        self.i -= 1
        self.error("unknown statement")

    def binding_name(self) -> str:
        tok = self.tok
        name = self.expect_name()
        if name in RESERVED or name in FUNCS:
            self.error(f"{name!r} is reserved", tok)
        return name

    def include(self, rel: str, tok: Token) -> list:
        base = self.base_dir or Path.cwd()
        path = (base / rel).resolve()
        if path in self._seen:
            self.error(f"circular include of {rel}", tok)
        if not path.exists():
            self.error(f"included file {rel} not found", tok)
        self._seen.add(path)
        sub = Parser(path.read_text(encoding="utf-8"), str(rel), path.parent, self._seen)
        out = sub.parse_program()
        self._seen.discard(path)
        return out

    def stratum(self, loc: Loc) -> StratumDecl:
        if self.tok.kind == "string":
            name = self.tok.text[1:-1]
            self.i += 1
        else:
            name = self.binding_name()
        self.expect("{")
        fields: dict[str, Any] = {}
        while not self.accept("}"):
            key_tok = self.tok
            key = self.expect_name()
            if key in fields:
                self.error(f"duplicate field {key!r}", key_tok)
            self.expect("=")
            if key == "base":
                fields[key] = self.expr()
            elif key in ("simplex", "rank"):
                fields[key] = self.expect_int()
            else:
                self.error(f"unknown stratum field {key!r}", key_tok)
            self.expect(";")
        for key in ("base", "simplex", "rank"):
            if key not in fields:
                raise ParseError(f"stratum {name!r} is missing {key!r}", loc.line, loc.col, self.source)
        return StratumDecl(name, fields["base"], fields["simplex"], fields["rank"], loc)

    def page(self, loc: Loc) -> PageDecl:
        name = self.binding_name()
        if self.tok.text not in ("homological", "cohomological"):
            self.error("expected 'homological' or 'cohomological'")
        variance = self.tok.text
        self.i += 1
        self.expect("{")
        cols, entries, product = [], [], None
        while not self.accept("}"):
            if self.accept("col"):
                p = self.expect_int(signed=True)
                self.expect("=")
                cols.append((p, self.expr()))
                if not self.accept(","):
                    self.expect(";")
            elif self.accept("entry"):
                self.expect("(")
                p = self.expect_int(signed=True)
                self.expect(",")
                q = self.expect_int(signed=True)
                self.expect(")")
                self.expect("=")
                entries.append(((p, q), self.expr()))
                self.expect(";")
            elif self.accept("product"):
                self.expect("base")
                self.expect("=")
                base = self.expr()
                self.expect("fiber")
                self.expect("=")
                fiber = self.expr()
                self.expect(";")
                product = (base, fiber)
            else:
                self.error("expected 'col', 'entry' or 'product'")
        if sum(bool(x) for x in (cols, entries, product)) > 1:
            raise ParseError(f"page {name!r} mixes column, entry and product forms", loc.line, loc.col, self.source)
        if len({p for p, _ in cols}) != len(cols):
            raise ParseError(f"page {name!r} repeats a column", loc.line, loc.col, self.source)
        return PageDecl(name, variance, tuple(cols), tuple(entries), product, loc)

    def diff(self, loc: Loc) -> DiffDecl:
        page = self.expect_name()
        r = self.expect_kw_int("r")
        self.expect("at")
        self.expect("(")
        p = self.expect_int(signed=True)
        self.expect(",")
        q = self.expect_int(signed=True)
        self.expect(")")
        image, rank = None, None
        if self.accept("image"):
            self.expect("=")
            image = self.expr()
        elif self.at("rank"):
            rank = self.expect_kw_int("rank")
        else:
            self.error("expected 'image =' or 'rank ='")
        self.expect(";")
        return DiffDecl(page, r, (p, q), image, rank, loc)

    def les(self, loc: Loc) -> LesDecl:
        name = self.binding_name()
        self.expect("mode")
        self.expect("=")
        if self.tok.text not in ("bm", "gysin"):
            self.error("expected 'bm' or 'gysin'")
        mode = self.tok.text
        self.i += 1
        self.expect("{")
        terms: dict[str, Any] = {}
        connects = []
        while not self.accept("}"):
            tok = self.tok
            if self.accept("connect"):
                k = self.expect_kw_int("k")
                self.expect("image")
                self.expect("=")
                image = self.expr()
                tensor = None
                if self.accept("tensor"):
                    self.expect("=")
                    tensor = self.expr()
                self.expect(";")
                connects.append(ConnectDecl(k, image, tensor, self.loc(tok)))
                continue
            if tok.text not in ("A", "X", "U"):
                self.error("expected 'A', 'X', 'U' or 'connect'")
            if tok.text in terms:
                self.error(f"term {tok.text} given twice")
            self.i += 1
            self.expect("=")
            terms[tok.text] = None if self.accept("?") else self.expr()
            self.expect(";")
        if set(terms) != {"A", "X", "U"}:
            raise ParseError(f"les {name!r} must give A, X and U", loc.line, loc.col, self.source)
        if sum(v is None for v in terms.values()) != 1:
            raise ParseError(f"les {name!r} must leave exactly one term as '?'", loc.line, loc.col, self.source)
        return LesDecl(name, mode, tuple(sorted(terms.items())), tuple(connects), loc)

    # expressions

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-") and self.tok.kind == "sym":
            op_tok = self.tok
            self.i += 1
            node = BinOp(op_tok.text, node, self.term(), self.loc(op_tok))
        return node

    def term(self):
        node = self.unary()
        while self.at("*"):
            op_tok = self.tok
            self.i += 1
            node = BinOp("*", node, self.unary(), self.loc(op_tok))
        return node

    def unary(self):
        if self.at("-"):
            tok = self.tok
            self.i += 1
            return Neg(self.unary(), self.loc(tok))
        return self.power()

    def power(self):
        node = self.atom()
        if self.at("^"):
            tok = self.tok
            self.i += 1
            node = Pow(node, self.expect_int(signed=True), self.loc(tok))
        return node

    def atom(self):
        tok = self.tok
        loc = self.loc()
        if tok.kind == "int":
            self.i += 1
            return Num(int(tok.text), loc)
        if self.accept("("):
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind != "name":
            self.error("expected an expression")
        self.i += 1
        if tok.text == "s":
            self.expect("[")
            parts = [self.expect_int()]
            while self.accept(","):
                parts.append(self.expect_int())
            self.expect("]")
            if any(a < b for a, b in zip(parts, parts[1:])) or any(p < 1 for p in parts):
                self.error(f"s[{','.join(map(str, parts))}] is not a partition", tok)
            if sum(parts) > 8:
                self.error("partitions of n > 8 are not supported", tok)
            return Schur(tuple(parts), loc)
        if tok.text in ("L", "t"):
            return Gen(tok.text, loc)
        if self.at("(") and tok.text in FUNCS:
            return self.call(tok.text, loc)
        if self.at("("):
            self.error(f"unknown function {tok.text!r}", tok)
        return Ref(tok.text, loc)

    def space(self) -> Space:
        tok = self.tok
        name = self.expect_name()
        if name not in SPACE_NAMES:
            self.error(f"unknown space {name!r}", tok)
        params = []
        if SPACE_NAMES[name]:
            self.expect("(")
            params.append(self.expect_int())
            while self.accept(","):
                params.append(self.expect_int())
            self.expect(")")
            if len(params) != SPACE_NAMES[name]:
                self.error(f"{name} takes {SPACE_NAMES[name]} parameter(s)", tok)
        return Space(name, tuple(params), self.loc(tok))

    def call(self, fn: str, loc: Loc) -> Call:
        self.expect("(")
        args, kwargs = [], []
        arity, allowed = FUNCS[fn]
        pos = 0
        while True:
            if fn in SPACE_FUNCS or (fn == "bconf" and pos == 1):
                args.append(self.space())
            elif fn == "bconf" and pos == 0:
                args.append(self.expect_int())
            elif fn in ("twist", "pdual") and pos == 1:
                args.append(self.expect_int(signed=True))
            elif fn in ("total",):
                args.append(self.expect_name())
            elif fn == "stratum":
                if self.tok.kind == "string":
                    args.append(self.tok.text[1:-1])
                    self.i += 1
                else:
                    args.append(self.expect_name())
            elif pos >= arity:
                key_tok = self.tok
                key = self.expect_name()
                if key not in allowed:
                    self.error(f"{fn}() takes no keyword {key!r}", key_tok)
                if key == "unreduced":
                    kwargs.append((key, True))
                else:
                    self.expect("=")
                    kwargs.append((key, self.expect_int(signed=True)))
            else:
                args.append(self.expr())
            pos += 1
            if not self.accept(","):
                break
        self.expect(")")
        if len(args) != arity:
            raise ParseError(f"{fn}() takes {arity} argument(s), got {len(args)}", loc.line, loc.col, self.source)
        if fn.startswith("alexander") and "M" not in dict(kwargs):
            raise ParseError(f"{fn}() needs M=INT", loc.line, loc.col, self.source)
        return Call(fn, tuple(args), tuple(kwargs), loc)


# static checks


def _space_n(space: Space) -> int:
    return 2 if space.name in ("F2P1", "F2P1swap", "F2P2") else 0


def _merge_n(a: int, b: int, loc: Loc) -> int:
    if a and b and a != b:
        raise ValidationError(f"n-mismatch: S_{a} against S_{b}", loc.line, loc.col, loc.source)
    return a or b


class _Checker:
    def __init__(self, source: str):
        self.source = source
        self.kinds: dict[str, str] = {}
        self.ns: dict[str, int] = {}

    def fail(self, msg: str, loc: Loc):
        raise ValidationError(msg, loc.line, loc.col, loc.source)

    def define(self, name: str, kind: str, n: int, loc: Loc):
        if name in self.kinds:
            self.fail(f"{name!r} is already defined", loc)
        self.kinds[name] = kind
        self.ns[name] = n

    def ref(self, name: str, kind: str, loc: Loc) -> int:
        if name not in self.kinds:
            self.fail(f"unknown name {name!r}", loc)
        if self.kinds[name] != kind:
            self.fail(f"{name!r} is a {self.kinds[name]}, not a {kind}", loc)
        return self.ns[name]

    def n(self, node) -> int:
        if isinstance(node, (Num, Gen)):
            return 0
        if isinstance(node, Schur):
            return sum(node.parts)
        if isinstance(node, Ref):
            if node.name not in self.kinds:
                self.fail(f"unknown name {node.name!r}", node.loc)
            if self.kinds[node.name] == "page":
                self.fail(f"page {node.name!r} is not a polynomial; use total({node.name})", node.loc)
            return self.ns[node.name]
        if isinstance(node, Neg):
            return self.n(node.operand)
        if isinstance(node, Pow):
            return self.n(node.base)
        if isinstance(node, BinOp):
            return _merge_n(self.n(node.left), self.n(node.right), node.loc)
        if isinstance(node, Call):
            if node.fn in SPACE_FUNCS:
                return _space_n(node.args[0])
            if node.fn == "bconf":
                if node.args[1].name not in ("A", "P"):
                    self.fail("bconf() needs A(N) or P(N)", node.args[1].loc)
                return 0
            if node.fn == "total":
                return self.ref(node.args[0], "page", node.loc)
            if node.fn == "stratum":
                return self.ref(node.args[0], "stratum", node.loc)
            if node.fn == "chi":
                self.n(node.args[0])
                return 0
            return self.n(node.args[0])
        raise AssertionError(node)

    def check(self, statements: list):
        for st in statements:
            if isinstance(st, Let):
                self.define(st.name, "poly", self.n(st.expr), st.loc)
            elif isinstance(st, StratumDecl):
                self.define(st.name, "stratum", self.n(st.base), st.loc)
            elif isinstance(st, PageDecl):
                n = 0
                exprs = [e for _, e in st.columns] + [e for _, e in st.entries]
                if st.product:
                    exprs += list(st.product)
                for e in exprs:
                    n = _merge_n(n, self.n(e), st.loc)
                self.define(st.name, "page", n, st.loc)
            elif isinstance(st, DiffDecl):
                n = self.ref(st.page, "page", st.loc)
                if st.image is not None:
                    _merge_n(n, self.n(st.image), st.loc)
            elif isinstance(st, LesDecl):
                n = 0
                for _, e in st.terms:
                    if e is not None:
                        n = _merge_n(n, self.n(e), st.loc)
                for c in st.connects:
                    n = _merge_n(n, self.n(c.image), c.loc)
                    if c.tensor is not None:
                        n = _merge_n(n, self.n(c.tensor), c.loc)
                self.define(st.name, "poly", n, st.loc)
            elif isinstance(st, DualDecl):
                self.define(st.name, "poly", self.n(st.expr), st.loc)
            elif isinstance(st, DivideDecl):
                n = _merge_n(self.n(st.num), self.n(st.den), st.loc)
                self.define(st.name, "poly", n, st.loc)
            elif isinstance(st, AssertDecl):
                _merge_n(self.n(st.left), self.n(st.right), st.loc)


def parse_scenario(text: str, source: str = "<scenario>", base_dir: Path | str | None = None) -> Scenario:
    """Parse and statically validate scenario source text."""
    base = Path(base_dir) if base_dir is not None else None
    statements = Parser(text, source, base).parse_program()
    checker = _Checker(source)
    checker.check(statements)
    return Scenario(statements, source, checker.kinds, checker.ns)


def parse_file(path: Path | str) -> Scenario:
    path = Path(path)
    return parse_scenario(path.read_text(encoding="utf-8"), path.name, path.parent)
