"""Sparse multivariate polynomials with exact rational coefficients.

Monomials are plain exponent tuples, one slot per ring variable.  All
coefficient arithmetic is done with `fractions.Fraction`; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Sequence

Monomial = tuple[int, ...]

Rational = int | Fraction


class MonomialOrder(Enum):
    """Graded monomial orders (plus plain lex).  Bigger key = bigger monomial."""

    degrevlex = "degrevlex"
    deglex = "deglex"
    lex = "lex"

    def key(self, exponents: Monomial):
        if self is MonomialOrder.lex:
            return tuple(exponents)
        if self is MonomialOrder.deglex:
            return (sum(exponents), tuple(exponents))
        # degrevlex: higher degree first, ties broken by the *smallest*
        # exponent on the last variable where they differ.
        return (sum(exponents), tuple(-e for e in reversed(exponents)))

    def sorted(self, monomials: Iterable[Monomial], reverse: bool = True) -> list[Monomial]:
        return sorted(monomials, key=self.key, reverse=reverse)


DEFAULT_ORDER = MonomialOrder.degrevlex


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """Does a divide b?"""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """a / b, assuming b divides a."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _iter_exponents(n_vars: int, degree: int) -> Iterator[Monomial]:
    if n_vars == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in _iter_exponents(n_vars - 1, degree - first):
            yield (first,) + rest


def enumerate_monomials(
    n_vars: int, degree: int, order: MonomialOrder = DEFAULT_ORDER
) -> list[Monomial]:
    """All monomials of the given total degree, biggest first in `order`."""
    if n_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    return order.sorted(_iter_exponents(n_vars, degree))


class RingMismatch(ValueError):
    pass


class Polynomial:
    """Canonical sparse polynomial: no zero coefficients are ever stored."""

    __slots__ = ("terms", "ring")

    def __init__(self, terms: Mapping[Monomial, Rational], ring: Sequence[str]):
        self.ring: tuple[str, ...] = tuple(ring)
        n = len(self.ring)
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if len(mono) != n:
                raise ValueError(f"exponent vector {mono} does not fit ring {self.ring}")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = clean.get(mono, Fraction(0)) + Fraction(coeff)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self.terms: dict[Monomial, Fraction] = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, ring: Sequence[str]) -> "Polynomial":
        return cls({}, ring)

    @classmethod
    def constant(cls, c: Rational, ring: Sequence[str]) -> "Polynomial":
        return cls({(0,) * len(ring): c}, ring)

    @classmethod
    def variable(cls, index: int, ring: Sequence[str]) -> "Polynomial":
        n = len(ring)
        if not 0 <= index < n:
            raise IndexError(f"variable index {index} out of range")
        exps = [0] * n
        exps[index] = 1
        return cls({tuple(exps): 1}, ring)

    @classmethod
    def monomial(cls, exponents: Monomial, ring: Sequence[str], coeff: Rational = 1) -> "Polynomial":
        return cls({tuple(exponents): coeff}, ring)

    # -- structure ----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int | None:
        """Max term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {monomial_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatch(f"ring mismatch: {self.ring} vs {other.ring}")

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        terms = dict(self.terms)
        for mono, c in other.terms.items():
            s = terms.get(mono, Fraction(0)) + c
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        out = Polynomial.zero(self.ring)
        out.terms = terms
        return out

    def __neg__(self) -> "Polynomial":
        out = Polynomial.zero(self.ring)
        out.terms = {m: -c for m, c in self.terms.items()}
        return out

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_ring(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Polynomial.zero(self.ring)
        out.terms = terms
        return out

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Rational) -> "Polynomial":
        c = Fraction(c)
        out = Polynomial.zero(self.ring)
        if c:
            out.terms = {m: coeff * c for m, coeff in self.terms.items()}
        return out

    # -- analysis -----------------------------------------------------

    def evaluate(self, coords: Sequence[Rational]) -> Fraction:
        if len(coords) != len(self.ring):
            raise ValueError(
                f"expected {len(self.ring)} coordinates, got {len(coords)}"
            )
        coords = [Fraction(c) for c in coords]
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            v = coeff
            for x, e in zip(coords, mono):
                if e:
                    v *= x**e
            total += v
        return total

    def partial_derivative(self, var_index: int) -> "Polynomial":
        if not 0 <= var_index < len(self.ring):
            raise IndexError(f"variable index {var_index} out of range")
        terms: dict[Monomial, Fraction] = {}
        for mono, coeff in self.terms.items():
            e = mono[var_index]
            if e == 0:
                continue
            new = list(mono)
            new[var_index] = e - 1
            terms[tuple(new)] = coeff * e
        out = Polynomial.zero(self.ring)
        out.terms = terms
        return out

    def sorted_terms(
        self, order: MonomialOrder = DEFAULT_ORDER
    ) -> list[tuple[Monomial, Fraction]]:
        return [(m, self.terms[m]) for m in order.sorted(self.terms)]

    def __repr__(self) -> str:
        from .parsing import format_polynomial

        return f"Polynomial({format_polynomial(self)!r}, ring={self.ring})"
