"""The ideal-file text format.

    # comment
    field QQ            (or Fp:32003; optional, callers supply a default)
    ring w x y z
    f1 = w^2 - x*y
    f2 = w*y - x*z

One statement per line.  Coefficients are integers or integer ratios a/b;
operators are + - * ^ with explicit multiplication only; exponents are
nonnegative integer literals.  Printing a parsed file reproduces it in
canonical form, and parsing canonical output returns the same values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fields import Field, GF, QQ
from .orders import GREVLEX, OrderSpec
from .poly import Polynomial, PolynomialRing

__all__ = ["ParseError", "IdealFile", "parse_ideal_file", "print_ideal_file", "parse_polynomial"]


class ParseError(ValueError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass
class IdealFile:
    ring: PolynomialRing
    entries: list           # (name, Polynomial) pairs
    field_declared: bool

    @property
    def generators(self):
        return [p for _, p in self.entries]


def _tokenize(text: str, line_no: int):
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in " \t":
            i += 1
            continue
        if ch == "#":
            break
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i + 1))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i + 1))
            i = j
            continue
        if ch in "+-*^/=":
            tokens.append((ch, ch, i + 1))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line_no, i + 1)
    return tokens


class _ExprParser:
    """term {(+|-) term}; term: factor {* factor};
    factor: rational | name [^ int]."""

    def __init__(self, tokens, ring: PolynomialRing, line_no: int):
        self.tokens = tokens
        self.ring = ring
        self.line = line_no
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None, -1)

    def take(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        col = tok[2] if tok[2] > 0 else 1
        raise ParseError(msg, self.line, col)

    def parse(self) -> Polynomial:
        result = self.parse_term()
        while True:
            kind, _, _ = self.peek()
            if kind == "+":
                self.take()
                result = result + self.parse_term()
            elif kind == "-":
                self.take()
                result = result - self.parse_term()
            elif kind is None:
                return result
            else:
                self.fail(f"expected '+' or '-', got {self.peek()[1]!r}")

    def parse_term(self) -> Polynomial:
        sign = 1
        while self.peek()[0] == "-":
            self.take()
            sign = -sign
        result = self.parse_factor()
        while self.peek()[0] == "*":
            self.take()
            result = result * self.parse_factor()
        return result if sign > 0 else -result

    def parse_factor(self) -> Polynomial:
        kind, value, col = self.take()
        if kind == "int":
            num = int(value)
            if self.peek()[0] == "/":
                self.take()
                dkind, dval, _ = self.take()
                if dkind != "int":
                    self.fail("expected an integer denominator")
                return self.ring.constant(Fraction(num, int(dval)))
            return self.ring.constant(num)
        if kind == "name":
            if value not in self.ring._index:
                raise ParseError(f"unknown variable {value!r}", self.line, col)
            base = self.ring.variable(value)
            if self.peek()[0] == "^":
                self.take()
                ekind, eval_, ecol = self.take()
                if ekind != "int":
                    raise ParseError("exponent must be a nonnegative integer", self.line, ecol)
                return base ** int(eval_)
            return base
        self.fail("expected a coefficient or a variable", (kind, value, col))


def _parse_field_token(token: str, line_no: int, col: int) -> Field:
    if token == "QQ":
        return QQ
    if token.startswith("Fp:"):
        try:
            p = int(token[3:])
        except ValueError:
            raise ParseError(f"bad modulus in {token!r}", line_no, col)
        try:
            return GF(p)
        except ValueError as exc:
            raise ParseError(str(exc), line_no, col)
    raise ParseError(f"unknown field {token!r} (use QQ or Fp:p)", line_no, col)


def parse_ideal_file(text: str, default_field: Field | None = None,
                     order: OrderSpec = GREVLEX,
                     field_override: Field | None = None) -> IdealFile:
    field = None
    names = None
    ring = None
    entries = []
    declared = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("field "):
            if ring is not None:
                raise ParseError("field must come before the ring", line_no, 1)
            declared = True
            field = _parse_field_token(line[6:].strip(), line_no, 7)
            continue
        if line.startswith("ring "):
            if ring is not None:
                raise ParseError("duplicate ring declaration", line_no, 1)
            names = line[5:].split()
            if not names:
                raise ParseError("ring needs at least one variable", line_no, 6)
            use = field_override or field or default_field or GF(32003)
            try:
                ring = PolynomialRing(use, names, order)
            except ValueError as exc:
                raise ParseError(str(exc), line_no, 6)
            continue
        if ring is None:
            raise ParseError("polynomials must follow a ring declaration", line_no, 1)
        tokens = _tokenize(raw, line_no)
        if not tokens:
            continue
        if len(tokens) < 2 or tokens[0][0] != "name" or tokens[1][0] != "=":
            raise ParseError("expected 'name = polynomial'", line_no, tokens[0][2])
        name = tokens[0][1]
        parser = _ExprParser(tokens[2:], ring, line_no)
        entries.append((name, parser.parse()))
    if ring is None:
        raise ParseError("missing ring declaration", 1, 1)
    return IdealFile(ring, entries, declared)


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    tokens = _tokenize(text, 1)
    return _ExprParser(tokens, ring, 1).parse()


def _field_token(field: Field) -> str:
    return "QQ" if field.kind == "exact-rationals" else f"Fp:{field.modulus}"


def print_ideal_file(ideal: IdealFile) -> str:
    lines = [f"field {_field_token(ideal.ring.field)}"]
    lines.append("ring " + " ".join(ideal.ring.names))
    for name, poly in ideal.entries:
        lines.append(f"{name} = {poly}")
    return "\n".join(lines) + "\n"
