"""Text format for polynomials, ideals, and points.

Polynomial grammar: signed terms, optional rational coefficients written
p/q, variables with `^` integer powers, `*` optional between factors.
Ideal files: a `ring x y z w` line followed by one homogeneous generator
per line; `#` starts a comment.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .poly import DEFAULT_ORDER, MonomialOrder, Polynomial


class ParseError(ValueError):
    """Syntax or validation error with a 1-based line/column position."""

    def __init__(self, message: str, line: int = 1, col: int = 1):
        super().__init__(f"line {line}, col {col}: {message}")
        self.message = message
        self.line = line
        self.col = col


@dataclass(frozen=True)
class IdealSpec:
    """A homogeneous ideal presented by its generators."""

    ring_vars: tuple[str, ...]
    generators: tuple[Polynomial, ...]
    label: str | None = None

    @property
    def n_vars(self) -> int:
        return len(self.ring_vars)


_TOKEN_RE = re.compile(r"(\d+)|([A-Za-z_][A-Za-z_0-9]*)|([+\-*/^])|(.)")


def _tokenize(text: str, line: int) -> list[tuple[str, str, int]]:
    """Tokens as (kind, value, col); kind in {num, name, op}."""
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        num, name, op, bad = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            tokens.append(("num", num, col))
        elif name is not None:
            tokens.append(("name", name, col))
        elif op is not None:
            tokens.append(("op", op, col))
        else:
            if bad == ".":
                raise ParseError("decimal literals are not supported; use p/q", line, col)
            raise ParseError(f"unexpected character {bad!r}", line, col)
        pos = m.end()
    return tokens


class _PolyParser:
    def __init__(self, text: str, ring_vars: Sequence[str], line: int = 1):
        self.line = line
        self.ring = tuple(ring_vars)
        self.tokens = _tokenize(text, line)
        self.i = 0
        self.end_col = len(text) + 1

    def _peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def _error(self, message: str, col: int | None = None):
        if col is None:
            tok = self._peek()
            col = tok[2] if tok else self.end_col
        raise ParseError(message, self.line, col)

    def parse(self) -> Polynomial:
        if not self.tokens:
            self._error("empty polynomial")
        result = Polynomial.zero(self.ring)
        sign = 1
        tok = self._peek()
        if tok and tok[:2] in (("op", "+"), ("op", "-")):
            sign = -1 if tok[1] == "-" else 1
            self.i += 1
        while True:
            result = result + self._term().scale(sign)
            tok = self._peek()
            if tok is None:
                return result
            if tok[0] == "op" and tok[1] in "+-":
                sign = -1 if tok[1] == "-" else 1
                self.i += 1
            else:
                self._error(f"expected '+' or '-', got {tok[1]!r}")

    def _term(self) -> Polynomial:
        product = self._factor()
        while True:
            tok = self._peek()
            if tok is None:
                return product
            if tok[0] == "op" and tok[1] == "*":
                self.i += 1
                product = product * self._factor()
            elif tok[0] in ("num", "name"):
                # implicit multiplication, e.g. "2x" or "x y"
                product = product * self._factor()
            else:
                return product

    def _factor(self) -> Polynomial:
        tok = self._peek()
        if tok is None:
            self._error("expected a number or variable")
        kind, value, col = tok
        if kind == "num":
            self.i += 1
            numerator = int(value)
            nxt = self._peek()
            if nxt and nxt[:2] == ("op", "/"):
                self.i += 1
                den = self._peek()
                if den is None or den[0] != "num":
                    self._error("expected an integer denominator")
                self.i += 1
                if int(den[1]) == 0:
                    self._error("zero denominator", den[2])
                return Polynomial.constant(Fraction(numerator, int(den[1])), self.ring)
            return Polynomial.constant(numerator, self.ring)
        if kind == "name":
            self.i += 1
            if value not in self.ring:
                self._error(f"unknown variable {value!r}", col)
            index = self.ring.index(value)
            power = 1
            nxt = self._peek()
            if nxt and nxt[:2] == ("op", "^"):
                self.i += 1
                exp = self._peek()
                if exp and exp[:2] == ("op", "-"):
                    self._error("negative exponent", exp[2])
                if exp is None or exp[0] != "num":
                    self._error("expected an integer exponent")
                self.i += 1
                power = int(exp[1])
            exps = [0] * len(self.ring)
            exps[index] = power
            return Polynomial.monomial(tuple(exps), self.ring)
        self._error(f"unexpected {value!r}", col)


def parse_polynomial(text: str, ring_vars: Sequence[str], line: int = 1) -> Polynomial:
    return _PolyParser(text, ring_vars, line=line).parse()


_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def parse_ideal_file(text: str, label: str | None = None) -> IdealSpec:
    ring_vars: tuple[str, ...] | None = None
    generators: list[Polynomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        if ring_vars is None:
            head, *rest = body.split()
            if head != "ring":
                raise ParseError("expected a 'ring x y z ...' line first", lineno, 1)
            if not rest:
                raise ParseError("ring line declares no variables", lineno, 1)
            for name in rest:
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad variable name {name!r}", lineno, 1)
            if len(set(rest)) != len(rest):
                raise ParseError("duplicate variable name in ring line", lineno, 1)
            ring_vars = tuple(rest)
            continue
        if body.startswith("label "):
            label = body[len("label "):].strip()
            continue
        p = parse_polynomial(body, ring_vars, line=lineno)
        if p.is_zero:
            raise ParseError("zero generator", lineno, 1)
        if not p.is_homogeneous():
            raise ParseError(f"inhomogeneous generator {body!r}", lineno, 1)
        generators.append(p)
    if ring_vars is None:
        raise ParseError("missing ring line")
    if not generators:
        raise ParseError("empty generator list")
    return IdealSpec(ring_vars, tuple(generators), label)


def _format_monomial(mono, ring_vars) -> str:
    parts = []
    for name, e in zip(ring_vars, mono):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_polynomial(p: Polynomial, order: MonomialOrder = DEFAULT_ORDER) -> str:
    if p.is_zero:
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms(order):
        mono_str = _format_monomial(mono, p.ring)
        mag = abs(coeff)
        if not mono_str:
            body = format_rational(mag)
        elif mag == 1:
            body = mono_str
        else:
            body = f"{format_rational(mag)}*{mono_str}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


def format_ideal(ideal: IdealSpec) -> str:
    lines = ["ring " + " ".join(ideal.ring_vars)]
    if ideal.label:
        lines.append(f"label {ideal.label}")
    lines.extend(format_polynomial(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def validate_ideal(ideal: IdealSpec) -> None:
    for g in ideal.generators:
        if g.is_zero:
            raise ValueError("zero generator in ideal")
        if not g.is_homogeneous():
            raise ValueError("inhomogeneous generator in ideal")
        if g.ring != ideal.ring_vars:
            raise ValueError("generator ring does not match ideal ring")


def generator_degrees(ideal: IdealSpec) -> list[int]:
    return [g.total_degree() for g in ideal.generators]
