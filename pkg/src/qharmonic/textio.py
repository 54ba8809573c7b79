"""Text and JSON rendering of scalars and polynomials, and the expression parser.

Grammar (precedence ``^`` > juxtaposition/``*``/``/`` > ``+ -``)::

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor (('*'|'/')? factor)*
    factor  := atom ('^' exponent)?
    atom    := INT | 'q' | 't' | 'x' INT | '(' expr ')'
    exponent:= ['-'] INT | '(' ['-'] INT ['/' INT] ')'

Juxtaposed or ``*``-joined factors multiply in the written order, so
``x3 x1`` is the noncommutative product and gets rewritten to normal form.
Division is only allowed by expressions that reduce to scalars.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction

from .algebra import IndexOutOfRange, Poly, Space, word
from .scalar import ONE, QScalar, qpow, tpow


class ParseError(SyntaxError):
    """Malformed expression; ``pos`` is the 0-based character offset."""

    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def format_scalar(c: QScalar) -> str:
    return str(c)


def _mono_str(nu):
    parts = []
    for i, a in enumerate(nu, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return " ".join(parts)


def _coeff_body(c: QScalar):
    """Return (negative, text) for a coefficient so that signs read naturally."""
    s = str(c)
    neg = False
    terms = [int(a) for a in c.num.coeffs() if a != 0]
    if len(terms) == 1 and terms[0] < 0:
        neg, s = True, str(-c)
    return neg, s


def format_poly(p: Poly) -> str:
    items = p.items()
    if not items:
        return "0"
    out = []
    for idx, (nu, c) in enumerate(items):
        mono = _mono_str(nu)
        neg, cs = _coeff_body(c)
        grouped = not (" " in cs and not (cs.startswith("(") and cs.endswith(")") and "/" not in cs))
        if not mono:
            body = cs if grouped or idx == 0 else f"({cs})"
        elif cs == "1":
            body = mono
        else:
            body = f"{cs} {mono}" if grouped else f"({cs}) {mono}"
        if idx == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append(f"{'-' if neg else '+'} {body}")
    return " ".join(out)


def poly_to_json(p: Poly) -> dict:
    return {
        "N": p.space.N,
        "terms": [{"nu": list(nu), "coeff": str(c)} for nu, c in p.items()],
    }


def poly_from_json(data) -> Poly:
    if isinstance(data, str):
        data = json.loads(data)
    space = Space(int(data["N"]))
    terms = {}
    for t in data["terms"]:
        terms[tuple(int(a) for a in t["nu"])] = parse_scalar(t["coeff"])
    return Poly(space, terms)


def matrix_to_json(rows) -> dict:
    return {"rows": [[str(c) for c in row] for row in rows]}


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|(x)(\d+)|([qt])|(\^|\*|/|\+|-|\(|\)))")


def _tokenize(text):
    pos = 0
    toks = []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            bad = len(text) - len(text[pos:].lstrip()) if text[pos:].strip() else pos
            raise ParseError(f"unexpected character {text[bad]!r}", bad)
        start = m.start(0) + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group(1):
            toks.append(("int", int(m.group(1)), start))
        elif m.group(2):
            toks.append(("var", int(m.group(3)), start))
        elif m.group(4):
            toks.append(("sym", m.group(4), start))
        else:
            toks.append(("op", m.group(5), start))
        pos = m.end(0)
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    """Recursive-descent parser producing Poly (or QScalar when N is None)."""

    def __init__(self, text, space: Space | None):
        self.toks = _tokenize(text)
        self.i = 0
        self.space = space

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            raise ParseError(f"expected {op!r}", tok[2])
        return tok

    # values are Poly when a space is given, otherwise QScalar
    def const(self, c):
        return Poly.constant(self.space, c) if self.space is not None else c

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError("unexpected trailing input", tok[2])
        return val

    def expr(self):
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        val = self.term()
        if sign < 0:
            val = -val
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                val = val + rhs if tok[1] == "+" else val - rhs
            else:
                return val

    def _starts_factor(self, tok):
        return tok[0] in ("int", "var", "sym") or (tok[0] == "op" and tok[1] == "(")

    def term(self):
        val = self.factor()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                val = self._mul(val, self.factor())
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                pos = self.peek()[2]
                val = self._div(val, self.factor(), pos)
            elif self._starts_factor(tok):
                val = self._mul(val, self.factor())
            else:
                return val

    def _mul(self, a, b):
        return a * b

    def _div(self, a, b, pos):
        if self.space is not None:
            if not (b.is_zero() or set(b.terms) == {(0,) * self.space.N}):
                raise ParseError("division by a non-scalar expression", pos)
            b = b.coeff((0,) * self.space.N)
        if b.is_zero():
            raise ParseError("division by zero", pos)
        return a / b

    def factor(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            e, pos = self.exponent()
            return self._power(base, e, pos)
        return base

    def exponent(self):
        tok = self.take()
        pos = tok[2]
        if tok[0] == "int":
            return Fraction(tok[1]), pos
        if tok[0] == "op" and tok[1] == "-":
            t2 = self.take()
            if t2[0] != "int":
                raise ParseError("expected integer exponent", t2[2])
            return Fraction(-t2[1]), pos
        if tok[0] == "op" and tok[1] == "(":
            sign = 1
            t2 = self.take()
            if t2[0] == "op" and t2[1] == "-":
                sign = -1
                t2 = self.take()
            if t2[0] != "int":
                raise ParseError("expected integer in exponent", t2[2])
            val = Fraction(sign * t2[1])
            t3 = self.take()
            if t3[0] == "op" and t3[1] == "/":
                t4 = self.take()
                if t4[0] != "int" or t4[1] == 0:
                    raise ParseError("expected nonzero integer denominator", t4[2])
                val = val / t4[1]
                t3 = self.take()
            if t3[0] != "op" or t3[1] != ")":
                raise ParseError("expected ')'", t3[2])
            return val, pos
        raise ParseError("bad exponent", pos)

    def _power(self, base, e, pos):
        if isinstance(base, tuple):  # bare q or t symbol
            sym = base[0]
            if sym == "q":
                if (e * 2).denominator != 1:
                    raise ParseError("q exponent must be a half-integer", pos)
                return self.const(qpow(e))
            if e.denominator != 1:
                raise ParseError("t exponent must be an integer", pos)
            return self.const(tpow(int(e)))
        base = self._resolve(base)
        if e.denominator != 1:
            raise ParseError("fractional exponent on a non-q base", pos)
        e = int(e)
        if e < 0:
            if self.space is not None:
                if not (set(base.terms) <= {(0,) * self.space.N}):
                    raise ParseError("negative power of a non-scalar", pos)
                c = base.coeff((0,) * self.space.N)
                if c.is_zero():
                    raise ParseError("negative power of zero", pos)
                return self.const(c ** e)
            if base.is_zero():
                raise ParseError("negative power of zero", pos)
            return base ** e
        return base ** e

    def _resolve(self, val):
        if isinstance(val, tuple):
            return self.const(qpow(1) if val[0] == "q" else tpow(1))
        return val

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            return self.const(QScalar(val))
        if kind == "sym":
            # defer so q^(1/2) is read as one unit
            if self.peek()[0] == "op" and self.peek()[1] == "^":
                return (val,)
            return self.const(qpow(1) if val == "q" else tpow(1))
        if kind == "var":
            if self.space is None:
                raise ParseError("variables are not allowed in a scalar expression", pos)
            if not 1 <= val <= self.space.N:
                raise IndexOutOfRange(f"x{val} outside x1..x{self.space.N} (position {pos})")
            return word(self.space, [val])
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {val!r}", pos)


def parse_poly(text: str, N) -> Poly:
    """Parse an expression into a normal-ordered Poly on E^N_q."""
    space = N if isinstance(N, Space) else Space(int(N))
    val = _Parser(text, space).parse()
    if isinstance(val, tuple):
        val = Poly.constant(space, qpow(1) if val[0] == "q" else tpow(1))
    return val


def parse_scalar(text: str) -> QScalar:
    """Parse a rational function of q (and q^(1/2) or t) into a QScalar."""
    val = _Parser(text, None).parse()
    if isinstance(val, tuple):
        val = qpow(1) if val[0] == "q" else tpow(1)
    return val
