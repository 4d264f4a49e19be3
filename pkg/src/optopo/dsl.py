"""A small language for set classes, operators, and function classes.

Definitions are quantified subset formulas compiled to brute-force
deciders, so any class definable in the grammar can be checked against
the native deciders or used as a search target.  Definitions form a DAG:
a body may reference built-ins and previously defined names only, which
keeps evaluation total.

Grammar (ASCII, `#` line comments)::

    program    := { definition ";" }
    definition := ("setclass"|"funclass"|"operator") IDENT "(" IDENT ")" ":=" body
    formula    := "forall"|"exists" binders "." formula | formula "->" formula
                | formula "or" formula | formula "and" formula | "not" formula
                | set "<=" set | set "=" set | "(" formula ")"
                | IDENT "(" set ")"            # previously defined setclass
                | IDENT "(" IDENT ")"          # previously defined funclass
    binders    := IDENT ":" QUAL "@" SIDE { "," IDENT ":" QUAL "@" SIDE }
    QUAL       := "open"|"closed"|"regopen"|"regclosed"|"clopen"|"tstarclosed"|"any"
    SIDE       := "X" | "Y"
    set        := IDENT | "~" set | set "|" set | set "&" set
                | ("Int"|"Cl"|"T"|"TCl"|"pCl") "(" set ")"
                | IDENT "(" set ")"            # previously defined operator
                | ("inv"|"image") "(" IDENT "," set ")" | "EMPTY" | "FULLX" | "FULLY"

Precedence: ``~`` > ``&`` > ``|``; ``not`` > ``and`` > ``or`` > ``->``
(right associative).  Set class and operator bodies are evaluated over a
single space, so their quantifier binders must use side X (meaning "the
space at hand") and ``T``/``TCl`` make them applicable on the domain
side only.
"""

from __future__ import annotations

import enum
import importlib.resources
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from ._ctx import b_and, b_not, b_or, images, op_ctx, preimages, space_ctx
from .core import Topology
from .operators import OperatorSpace


class DslSyntaxError(ValueError):
    def __init__(self, message: str, line: int, col: int):
        self.line, self.col = line, col
        super().__init__(f"{line}:{col}: {message}")


class DslTypeError(ValueError):
    pass


class DefKind(enum.Enum):
    SETCLASS = "setclass"
    FUNCLASS = "funclass"
    OPERATOR = "operator"


@dataclass(frozen=True)
class Definition:
    name: str
    kind: DefKind
    param: str
    body: object


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    name: str  # EMPTY | FULLX | FULLY


@dataclass(frozen=True)
class Comp:
    a: object


@dataclass(frozen=True)
class Union:
    a: object
    b: object


@dataclass(frozen=True)
class Inter:
    a: object
    b: object


@dataclass(frozen=True)
class Prim:
    op: str  # Int | Cl | T | TCl | pCl
    a: object


@dataclass(frozen=True)
class OpApp:
    defn: Definition
    a: object


@dataclass(frozen=True)
class Inv:
    fvar: str
    a: object


@dataclass(frozen=True)
class Image:
    fvar: str
    a: object


@dataclass(frozen=True)
class Cmp:
    op: str  # <= | =
    a: object
    b: object


@dataclass(frozen=True)
class Not:
    p: object


@dataclass(frozen=True)
class And:
    p: object
    q: object


@dataclass(frozen=True)
class Or:
    p: object
    q: object


@dataclass(frozen=True)
class Implies:
    p: object
    q: object


@dataclass(frozen=True)
class Binder:
    var: str
    qual: str
    side: str


@dataclass(frozen=True)
class Quant:
    kind: str  # forall | exists
    binders: tuple[Binder, ...]
    body: object


@dataclass(frozen=True)
class ClassApp:
    defn: Definition
    a: object


@dataclass(frozen=True)
class FunApp:
    defn: Definition
    fvar: str


# ---------------------------------------------------------------------------
# Lexer / parser

_KEYWORDS = {"setclass", "funclass", "operator", "forall", "exists", "not", "and", "or"}
_PRIMS = {"Int", "Cl", "T", "TCl", "pCl"}
_CONSTS = {"EMPTY", "FULLX", "FULLY"}
_QUALS = {"open", "closed", "regopen", "regclosed", "clopen", "tstarclosed", "any"}
_SYMBOLS = (":=", "->", "<=", ";", "(", ")", ",", ".", "=", "~", "|", "&", "@", ":")


@dataclass(frozen=True)
class _Tok:
    kind: str  # IDENT | SYM | EOF
    value: str
    line: int
    col: int


def _lex(text: str) -> list[_Tok]:
    toks = []
    line, col, i = 1, 1, 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line, col, i = line + 1, 1, i + 1
            continue
        if ch in " \t\r":
            i, col = i + 1, col + 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(_Tok("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        for sym in _SYMBOLS:
            if text.startswith(sym, i):
                toks.append(_Tok("SYM", sym, line, col))
                i += len(sym)
                col += len(sym)
                break
        else:
            raise DslSyntaxError(f"unexpected character {ch!r}", line, col)
    toks.append(_Tok("EOF", "", line, col))
    return toks


class _Parser:
    def __init__(self, text: str, env: dict):
        self.toks = _lex(text)
        self.pos = 0
        self.env = dict(env)  # name -> Definition, grows as we parse
        self.sides: dict[str, str] = {}
        self.fvar: Optional[str] = None
        self.kind: Optional[DefKind] = None

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def next(self) -> _Tok:
        tok = self.toks[self.pos]
        self.pos += 1
        return tok

    def expect(self, value: str) -> _Tok:
        tok = self.next()
        if tok.value != value or tok.kind == "EOF":
            raise DslSyntaxError(
                f"expected {value!r}, found {tok.value or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return tok

    def ident(self, what: str = "identifier") -> _Tok:
        tok = self.next()
        if tok.kind != "IDENT":
            raise DslSyntaxError(
                f"expected {what}, found {tok.value or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        return tok

    def err(self, message: str) -> DslSyntaxError:
        tok = self.peek()
        return DslSyntaxError(message, tok.line, tok.col)

    # -- program

    def program(self) -> list[Definition]:
        defs = []
        while self.peek().kind != "EOF":
            d = self.definition()
            defs.append(d)
            self.env[d.name] = d
        return defs

    def definition(self) -> Definition:
        kw = self.ident("definition keyword")
        if kw.value not in ("setclass", "funclass", "operator"):
            raise DslSyntaxError(
                f"expected setclass/funclass/operator, found {kw.value!r}",
                kw.line,
                kw.col,
            )
        self.kind = DefKind(kw.value)
        name = self.ident("definition name").value
        if name in self.env or name in _KEYWORDS | _PRIMS | _CONSTS | {"inv", "image"}:
            raise DslTypeError(f"duplicate or reserved definition name {name!r}")
        self.expect("(")
        param = self.ident("parameter").value
        self.expect(")")
        self.expect(":=")
        if self.kind is DefKind.FUNCLASS:
            self.fvar, self.sides = param, {}
            body = self.formula()
        else:
            self.fvar, self.sides = None, {param: "X"}
            body = self.set_expr() if self.kind is DefKind.OPERATOR else self.formula()
        self.expect(";")
        d = Definition(name, self.kind, param, body)
        _check(d)  # eager type check (unknown names already caught here)
        return d

    # -- formulas

    def formula(self):
        tok = self.peek()
        if tok.kind == "IDENT" and tok.value in ("forall", "exists"):
            self.next()
            binders = [self.binder()]
            while self.peek().value == ",":
                self.next()
                binders.append(self.binder())
            self.expect(".")
            saved = {b.var: self.sides.get(b.var) for b in binders}
            for b in binders:
                self.sides[b.var] = self._binder_side(b)
            body = self.formula()
            for var, old in saved.items():
                if old is None:
                    del self.sides[var]
                else:
                    self.sides[var] = old
            return Quant(tok.value, tuple(binders), body)
        p = self.or_formula()
        if self.peek().value == "->":
            self.next()
            return Implies(p, self.formula())
        return p

    def _binder_side(self, b: Binder) -> str:
        if self.kind is not DefKind.FUNCLASS and b.side != "X":
            raise DslTypeError(
                f"binder {b.var!r}: only side X is meaningful in a "
                f"{self.kind.value} body"
            )
        return b.side

    def binder(self) -> Binder:
        var = self.ident("binder variable").value
        self.expect(":")
        qual = self.ident("qualifier").value
        if qual not in _QUALS:
            raise DslSyntaxError(
                f"unknown qualifier {qual!r}",
                self.toks[self.pos - 1].line,
                self.toks[self.pos - 1].col,
            )
        self.expect("@")
        side = self.ident("side").value
        if side not in ("X", "Y"):
            raise DslSyntaxError(
                f"side must be X or Y, found {side!r}",
                self.toks[self.pos - 1].line,
                self.toks[self.pos - 1].col,
            )
        return Binder(var, qual, side)

    def or_formula(self):
        p = self.and_formula()
        while self.peek().value == "or":
            self.next()
            p = Or(p, self.and_formula())
        return p

    def and_formula(self):
        p = self.not_formula()
        while self.peek().value == "and":
            self.next()
            p = And(p, self.not_formula())
        return p

    def not_formula(self):
        if self.peek().value == "not":
            self.next()
            return Not(self.not_formula())
        return self.atom_formula()

    def atom_formula(self):
        tok = self.peek()
        if tok.value == "(":
            # Could be a parenthesized formula or a parenthesized set on the
            # left of a comparison; try the formula reading first.
            saved = self.pos
            try:
                self.next()
                p = self.formula()
                self.expect(")")
                if self.peek().value in ("<=", "=", "~", "|", "&"):
                    raise self.err("comparison context")
                return p
            except DslSyntaxError:
                self.pos = saved
        if tok.kind == "IDENT" and tok.value in self.env:
            d = self.env[tok.value]
            if d.kind is DefKind.SETCLASS:
                self.next()
                self.expect("(")
                a = self.set_expr()
                self.expect(")")
                return ClassApp(d, a)
            if d.kind is DefKind.FUNCLASS:
                self.next()
                self.expect("(")
                fv = self.ident("function variable").value
                self.expect(")")
                if fv != self.fvar:
                    raise DslTypeError(f"unknown function variable {fv!r}")
                return FunApp(d, fv)
        a = self.set_expr()
        op = self.peek()
        if op.value not in ("<=", "="):
            raise self.err(f"expected <= or =, found {op.value or 'end of input'!r}")
        self.next()
        return Cmp(op.value, a, self.set_expr())

    # -- sets

    def set_expr(self):
        a = self.inter_expr()
        while self.peek().value == "|":
            self.next()
            a = Union(a, self.inter_expr())
        return a

    def inter_expr(self):
        a = self.comp_expr()
        while self.peek().value == "&":
            self.next()
            a = Inter(a, self.comp_expr())
        return a

    def comp_expr(self):
        if self.peek().value == "~":
            self.next()
            return Comp(self.comp_expr())
        return self.set_atom()

    def set_atom(self):
        tok = self.next()
        if tok.value == "(":
            a = self.set_expr()
            self.expect(")")
            return a
        if tok.kind != "IDENT":
            raise DslSyntaxError(
                f"expected a set, found {tok.value or 'end of input'!r}",
                tok.line,
                tok.col,
            )
        name = tok.value
        if name in _CONSTS:
            return Const(name)
        if name in _PRIMS:
            self.expect("(")
            a = self.set_expr()
            self.expect(")")
            return Prim(name, a)
        if name in ("inv", "image"):
            self.expect("(")
            fv = self.ident("function variable").value
            if fv != self.fvar:
                raise DslTypeError(f"unknown function variable {fv!r}")
            self.expect(",")
            a = self.set_expr()
            self.expect(")")
            return Inv(fv, a) if name == "inv" else Image(fv, a)
        if name in self.env and self.peek().value == "(":
            d = self.env[name]
            if d.kind is not DefKind.OPERATOR:
                raise DslTypeError(
                    f"{name!r} is a {d.kind.value}, not an operator"
                )
            self.next()
            a = self.set_expr()
            self.expect(")")
            return OpApp(d, a)
        if name in self.sides:
            return Var(name)
        raise DslTypeError(f"unknown identifier {name!r}")


def parse(text: str, environment: Optional[dict] = None) -> list[Definition]:
    """Parse a program into definitions.

    `environment` maps names of previously available definitions (e.g.
    the stdlib) that the program may reference.
    """
    return _Parser(text, environment or {}).program()


# ---------------------------------------------------------------------------
# Side checking

def _unify(a: Optional[str], b: Optional[str], what: str) -> Optional[str]:
    if a is None:
        return b
    if b is None:
        return a
    if a != b:
        raise DslTypeError(f"side mismatch in {what}: {a} vs {b}")
    return a


def _side_of(node, sides: dict, single_space: bool) -> Optional[str]:
    if isinstance(node, Var):
        return sides[node.name]
    if isinstance(node, Const):
        if node.name == "EMPTY":
            return None
        if single_space and node.name == "FULLY":
            raise DslTypeError("FULLY is meaningless in a single-space body")
        return {"FULLX": "X", "FULLY": "Y"}[node.name]
    if isinstance(node, Comp):
        return _side_of(node.a, sides, single_space)
    if isinstance(node, (Union, Inter)):
        return _unify(
            _side_of(node.a, sides, single_space),
            _side_of(node.b, sides, single_space),
            "set algebra",
        )
    if isinstance(node, Prim):
        return _side_of(node.a, sides, single_space)
    if isinstance(node, OpApp):
        return _side_of(node.a, sides, single_space)
    if isinstance(node, Inv):
        _unify(_side_of(node.a, sides, single_space), "Y", "inv argument")
        return "X"
    if isinstance(node, Image):
        _unify(_side_of(node.a, sides, single_space), "X", "image argument")
        return "Y"
    raise TypeError(node)


def _check_formula(node, sides: dict, single_space: bool) -> None:
    if isinstance(node, Cmp):
        _unify(
            _side_of(node.a, sides, single_space),
            _side_of(node.b, sides, single_space),
            "comparison",
        )
    elif isinstance(node, Not):
        _check_formula(node.p, sides, single_space)
    elif isinstance(node, (And, Or, Implies)):
        _check_formula(node.p, sides, single_space)
        _check_formula(node.q, sides, single_space)
    elif isinstance(node, Quant):
        inner = dict(sides)
        for b in node.binders:
            inner[b.var] = b.side
        _check_formula(node.body, inner, single_space)
    elif isinstance(node, ClassApp):
        _side_of(node.a, sides, single_space)
    elif isinstance(node, FunApp):
        pass
    else:
        raise TypeError(node)


def _check(d: Definition) -> None:
    if d.kind is DefKind.OPERATOR:
        _side_of(d.body, {d.param: "X"}, True)
    elif d.kind is DefKind.SETCLASS:
        _check_formula(d.body, {d.param: "X"}, True)
    else:
        _check_formula(d.body, {}, False)


# ---------------------------------------------------------------------------
# Compilation to batch deciders

_QUAL_ATTR = {
    "open": "opens",
    "closed": "closeds",
    "regopen": "regopen",
    "regclosed": "regclosed",
    "clopen": "clopen",
    "tstarclosed": "tstar_closed",
}

_MISSING = object()


class _Rt:
    """Evaluation state: contexts, the batch of maps, and bound variables."""

    __slots__ = ("xc", "yc", "maps", "vars")

    def __init__(self, xc, yc, maps):
        self.xc = xc
        self.yc = yc
        self.maps = maps
        self.vars = {}


def _ctx_get(side: str):
    if side == "X":
        return lambda rt: rt.xc
    return lambda rt: rt.yc


def _compile_set(node, sides: dict, local: Optional[str]):
    """Return (closure, side); `local` substitutes side X in single-space bodies."""

    def resolve(side):
        return local if (local is not None and side == "X") else side

    if isinstance(node, Var):
        name = node.name
        return (lambda rt: rt.vars[name]), resolve(sides[name])
    if isinstance(node, Const):
        if node.name == "EMPTY":
            return (lambda rt: 0), None
        side = resolve({"FULLX": "X", "FULLY": "Y"}[node.name])
        get = _ctx_get(side)
        return (lambda rt: get(rt).full), side
    if isinstance(node, Comp):
        afn, side = _compile_set(node.a, sides, local)
        get = _ctx_get(side or "X")  # pure-EMPTY algebra defaults to X
        return (lambda rt: get(rt).full & ~afn(rt)), side
    if isinstance(node, (Union, Inter)):
        afn, sa = _compile_set(node.a, sides, local)
        bfn, sb = _compile_set(node.b, sides, local)
        side = _unify(sa, sb, "set algebra")
        if isinstance(node, Union):
            return (lambda rt: afn(rt) | bfn(rt)), side
        return (lambda rt: afn(rt) & bfn(rt)), side
    if isinstance(node, Prim):
        afn, side = _compile_set(node.a, sides, local)
        side = side or "X"
        if node.op in ("T", "TCl") and side != "X":
            raise DslTypeError(f"{node.op} is only available on the operator side")
        attr = {"Int": "int_t", "Cl": "cl_t", "T": "t_t", "TCl": "tcl_t", "pCl": "pcl_t"}[
            node.op
        ]
        get = _ctx_get(side)
        return (lambda rt: getattr(get(rt), attr)[afn(rt)]), side
    if isinstance(node, OpApp):
        afn, side = _compile_set(node.a, sides, local)
        side = side or "X"
        get = _ctx_get(side)
        defn = node.defn
        return (lambda rt: _op_np_table(get(rt).topology, defn)[afn(rt)]), side
    if isinstance(node, Inv):
        afn, side = _compile_set(node.a, sides, local)
        _unify(side, "Y", "inv argument")
        return (lambda rt: preimages(rt.maps, afn(rt), rt.xc.n)), "X"
    if isinstance(node, Image):
        afn, side = _compile_set(node.a, sides, local)
        _unify(side, "X", "image argument")
        return (lambda rt: images(rt.maps, afn(rt), rt.yc.n)), "Y"
    raise TypeError(node)


def _compile_formula(node, sides: dict, local: Optional[str]):
    if isinstance(node, Cmp):
        afn, sa = _compile_set(node.a, sides, local)
        bfn, sb = _compile_set(node.b, sides, local)
        _unify(sa, sb, "comparison")
        if node.op == "<=":
            return lambda rt: (afn(rt) & ~bfn(rt)) == 0
        return lambda rt: afn(rt) == bfn(rt)
    if isinstance(node, Not):
        pfn = _compile_formula(node.p, sides, local)
        return lambda rt: b_not(pfn(rt))
    if isinstance(node, And):
        pfn = _compile_formula(node.p, sides, local)
        qfn = _compile_formula(node.q, sides, local)

        def fand(rt):
            pv = pfn(rt)
            if isinstance(pv, (bool, np.bool_)) and not pv:
                return False
            return b_and(pv, qfn(rt))

        return fand
    if isinstance(node, Or):
        pfn = _compile_formula(node.p, sides, local)
        qfn = _compile_formula(node.q, sides, local)

        def f_or(rt):
            pv = pfn(rt)
            if isinstance(pv, (bool, np.bool_)) and pv:
                return True
            return b_or(pv, qfn(rt))

        return f_or
    if isinstance(node, Implies):
        pfn = _compile_formula(node.p, sides, local)
        qfn = _compile_formula(node.q, sides, local)

        def fimp(rt):
            pv = pfn(rt)
            if isinstance(pv, (bool, np.bool_)):
                return True if not pv else qfn(rt)
            return b_or(~pv, qfn(rt))

        return fimp
    if isinstance(node, Quant):
        return _compile_quant(node, sides, local)
    if isinstance(node, ClassApp):
        afn, side = _compile_set(node.a, sides, local)
        side = side or "X"
        body = _compiled_body(node.defn, side)
        param = node.defn.param

        def fapp(rt):
            old = rt.vars.get(param, _MISSING)
            rt.vars[param] = afn(rt)
            try:
                return body(rt)
            finally:
                if old is _MISSING:
                    del rt.vars[param]
                else:
                    rt.vars[param] = old

        return fapp
    if isinstance(node, FunApp):
        return _compiled_body(node.defn, "X")
    raise TypeError(node)


def _compile_quant(node: Quant, sides: dict, local: Optional[str]):
    inner = dict(sides)
    for b in node.binders:
        inner[b.var] = b.side
    body = _compile_formula(node.body, inner, local)
    for b in reversed(node.binders):
        body = _compile_binder(node.kind, b, body, local)
    return body


def _compile_binder(kind: str, b: Binder, body, local: Optional[str]):
    side = local if (local is not None and b.side == "X") else b.side
    get = _ctx_get(side)
    if b.qual == "tstarclosed" and side != "X":
        raise DslTypeError("tstarclosed quantifies over the operator side only")
    attr = _QUAL_ATTR.get(b.qual)
    var = b.var
    forall = kind == "forall"

    def run(rt):
        ctx = get(rt)
        masks = range(ctx.full + 1) if attr is None else getattr(ctx, attr)
        old = rt.vars.get(var, _MISSING)
        acc = forall
        try:
            for m in masks:
                rt.vars[var] = m
                v = body(rt)
                if forall:
                    acc = b_and(acc, v)
                    if acc is False or (acc is not True and not np.any(acc)):
                        break
                else:
                    acc = b_or(acc, v)
                    if acc is True or (acc is not False and np.all(acc)):
                        break
        finally:
            if old is _MISSING:
                rt.vars.pop(var, None)
            else:
                rt.vars[var] = old
        return acc

    return run


@lru_cache(maxsize=4096)
def _compiled_body(defn: Definition, side: str):
    local = side if defn.kind is not DefKind.FUNCLASS else None
    sides = {} if defn.kind is DefKind.FUNCLASS else {defn.param: side}
    if defn.kind is DefKind.OPERATOR:
        fn, _ = _compile_set(defn.body, sides, local)
        return fn
    return _compile_formula(defn.body, sides, local)


@lru_cache(maxsize=4096)
def _op_np_table(t: Topology, defn: Definition) -> np.ndarray:
    return np.array(eval_operator_table(defn, t), dtype=np.int64)


def eval_operator_table(defn: Definition, t: Topology) -> tuple[int, ...]:
    """Value of a DSL-defined operator on every subset mask of `t`."""
    if defn.kind is not DefKind.OPERATOR:
        raise ValueError(f"{defn.name!r} is not an operator definition")
    fn = _compiled_body(defn, "X")
    rt = _Rt(space_ctx(t), None, None)
    out = []
    for s in range(t.full_mask + 1):
        rt.vars[defn.param] = s
        out.append(int(fn(rt)))
    return tuple(out)


def eval_setclass(d: Definition, os: OperatorSpace, s: int) -> bool:
    """Evaluate a SETCLASS definition on one subset of an operator space."""
    if d.kind is not DefKind.SETCLASS:
        raise ValueError(f"{d.name!r} is not a setclass definition")
    os.topology.ground.check_mask(s)
    rt = _Rt(op_ctx(os), None, None)
    rt.vars[d.param] = s
    return bool(np.all(_compiled_body(d, "X")(rt)))


def funclass_batch(d: Definition):
    """Compiled decider (xc, yc, maps) -> bool / bool array for a FUNCLASS."""
    if d.kind is not DefKind.FUNCLASS:
        raise ValueError(f"{d.name!r} is not a funclass definition")
    body = _compiled_body(d, "X")

    def run(xc, yc, maps):
        return body(_Rt(xc, yc, maps))

    return run


def eval_funclass(d: Definition, f) -> bool:
    """Evaluate a FUNCLASS definition on one function instance."""
    xc = op_ctx(f.domain)
    yc = space_ctx(f.codomain)
    maps = np.array([f.mapping], dtype=np.int64).reshape(1, xc.n)
    return bool(np.all(funclass_batch(d)(xc, yc, maps)))


def parse_target(text: str, environment: Optional[dict] = None) -> Definition:
    """Parse a bare formula over a free function variable `f` as a search target.

    The stdlib (plus `environment`, if given) is in scope, so targets can
    combine named classes, e.g.
    ``almost_tstar_cont(f) and not almost_contra_tstar_cont(f)``.
    """
    env = dict(stdlib())
    env.update(environment or {})
    program = f"funclass target(f) := {text};"
    return parse(program, env)[0]


# ---------------------------------------------------------------------------
# Pretty printing

def pretty(defs: list[Definition]) -> str:
    return "".join(
        f"{d.kind.value} {d.name}({d.param}) := {_pp_body(d)};\n" for d in defs
    )


def _pp_body(d: Definition) -> str:
    if d.kind is DefKind.OPERATOR:
        return _pp_set(d.body, 0)
    return _pp_formula(d.body, 0)


def _pp_formula(node, prec: int) -> str:
    if isinstance(node, Quant):
        binders = ", ".join(f"{b.var}: {b.qual}@{b.side}" for b in node.binders)
        s = f"{node.kind} {binders} . {_pp_formula(node.body, 0)}"
        return f"({s})" if prec > 0 else s
    if isinstance(node, Implies):
        s = f"{_pp_formula(node.p, 2)} -> {_pp_formula(node.q, 1)}"
        return f"({s})" if prec > 1 else s
    if isinstance(node, Or):
        s = f"{_pp_formula(node.p, 2)} or {_pp_formula(node.q, 3)}"
        return f"({s})" if prec > 2 else s
    if isinstance(node, And):
        s = f"{_pp_formula(node.p, 3)} and {_pp_formula(node.q, 4)}"
        return f"({s})" if prec > 3 else s
    if isinstance(node, Not):
        return f"not {_pp_formula(node.p, 4)}"
    if isinstance(node, Cmp):
        return f"{_pp_set(node.a, 0)} {node.op} {_pp_set(node.b, 0)}"
    if isinstance(node, ClassApp):
        return f"{node.defn.name}({_pp_set(node.a, 0)})"
    if isinstance(node, FunApp):
        return f"{node.defn.name}({node.fvar})"
    raise TypeError(node)


def _pp_set(node, prec: int) -> str:
    if isinstance(node, Union):
        s = f"{_pp_set(node.a, 1)} | {_pp_set(node.b, 2)}"
        return f"({s})" if prec > 1 else s
    if isinstance(node, Inter):
        s = f"{_pp_set(node.a, 2)} & {_pp_set(node.b, 3)}"
        return f"({s})" if prec > 2 else s
    if isinstance(node, Comp):
        return f"~{_pp_set(node.a, 3)}"
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Const):
        return node.name
    if isinstance(node, Prim):
        return f"{node.op}({_pp_set(node.a, 0)})"
    if isinstance(node, OpApp):
        return f"{node.defn.name}({_pp_set(node.a, 0)})"
    if isinstance(node, Inv):
        return f"inv({node.fvar}, {_pp_set(node.a, 0)})"
    if isinstance(node, Image):
        return f"image({node.fvar}, {_pp_set(node.a, 0)})"
    raise TypeError(node)


# ---------------------------------------------------------------------------
# Stdlib

@lru_cache(maxsize=1)
def stdlib() -> dict:
    """Name -> Definition for the shipped renditions of the native classes."""
    text = (
        importlib.resources.files("optopo").joinpath("stdlib.dsl").read_text("utf-8")
    )
    return {d.name: d for d in parse(text)}
