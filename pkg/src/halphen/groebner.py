"""Groebner bases, initial ideals, and exact Hilbert series.

Buchberger with the normal selection strategy and both classical pair
criteria, producing a reduced basis.  The Hilbert series of R/I is read
off the initial monomial ideal through the standard pivot recursion
with inclusion-exclusion, and the Hilbert polynomial is extracted from
the series together with an exact stabilization threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .combinat import binom, binomial_poly
from .parsing import IdealSpec, validate_ideal
from .poly import (
    DEFAULT_ORDER,
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_degree,
    monomial_div,
    monomial_divides,
    monomial_lcm,
)

PAIR_BUDGET = 200_000


class GroebnerBudgetExceeded(RuntimeError):
    pass


class EmptyProjectiveSet(ValueError):
    """The ideal contains a nonzero constant; V(I) is empty and P = 0."""


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    elements: tuple[Polynomial, ...]


@dataclass(frozen=True)
class MonomialIdeal:
    minimal_generators: tuple[Monomial, ...]


@dataclass(frozen=True)
class HilbertSeriesNumerator:
    """Integer coefficients h_j with series(R/I) = sum h_j t^j / (1-t)^n."""

    coeffs: tuple[int, ...]
    n_vars: int


@dataclass(frozen=True)
class HilbertPolynomial:
    """Rational coefficients of P(m), ascending, trailing zeros stripped."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    def leading_coefficient(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, m) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * m + c
        return total

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for power in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mono = {0: "", 1: "m"}.get(power, f"m^{power}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)


@dataclass(frozen=True)
class HilbertData:
    """Hilbert polynomial plus the degree from which H(m) = P(m)."""

    polynomial: HilbertPolynomial
    stabilizes_from: int
    numerator: HilbertSeriesNumerator


# -- polynomial reduction -------------------------------------------------


def leading_monomial(p: Polynomial, order: MonomialOrder) -> Monomial:
    return max(p.terms, key=order.key)


def normal_form(f: Polynomial, basis, order: MonomialOrder) -> Polynomial:
    """Full remainder of f on division by the basis."""
    remainder = Polynomial.zero(f.ring)
    work = f
    lms = [(leading_monomial(g, order), g) for g in basis if not g.is_zero]
    while not work.is_zero:
        lm = leading_monomial(work, order)
        lc = work.terms[lm]
        for glm, g in lms:
            if monomial_divides(glm, lm):
                factor = Polynomial.monomial(
                    monomial_div(lm, glm), f.ring, lc / g.terms[glm]
                )
                work = work - factor * g
                break
        else:
            head = Polynomial.monomial(lm, f.ring, lc)
            remainder = remainder + head
            work = work - head
    return remainder


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    lmf = leading_monomial(f, order)
    lmg = leading_monomial(g, order)
    lcm = monomial_lcm(lmf, lmg)
    uf = Polynomial.monomial(monomial_div(lcm, lmf), f.ring, Fraction(1) / f.terms[lmf])
    ug = Polynomial.monomial(monomial_div(lcm, lmg), g.ring, Fraction(1) / g.terms[lmg])
    return uf * f - ug * g


def buchberger(ideal: IdealSpec, order: MonomialOrder = DEFAULT_ORDER) -> GroebnerBasis:
    validate_ideal(ideal)
    if not ideal.generators:
        raise ValueError("empty generator list")
    basis = [g for g in ideal.generators if not g.is_zero]
    lm = [leading_monomial(g, order) for g in basis]
    pairs = set(combinations(range(len(basis)), 2))
    done: set[tuple[int, int]] = set()
    steps = 0
    while pairs:
        steps += 1
        if steps > PAIR_BUDGET:
            raise GroebnerBudgetExceeded("pair budget exceeded")
        # normal selection: smallest lcm in the monomial order
        i, j = min(pairs, key=lambda ij: order.key(monomial_lcm(lm[ij[0]], lm[ij[1]])))
        pairs.discard((i, j))
        done.add((i, j))
        lcm = monomial_lcm(lm[i], lm[j])
        # first Buchberger criterion: coprime leading monomials
        if lcm == tuple(a + b for a, b in zip(lm[i], lm[j])):
            continue
        # chain criterion
        skipped = False
        for k in range(len(basis)):
            if k in (i, j) or not monomial_divides(lm[k], lcm):
                continue
            ik = (min(i, k), max(i, k))
            jk = (min(j, k), max(j, k))
            if ik in done and jk in done:
                skipped = True
                break
        if skipped:
            continue
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if not r.is_zero:
            basis.append(r)
            lm.append(leading_monomial(r, order))
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    gb = _reduce_basis(basis, order)
    _assert_groebner(gb)
    return gb


def _reduce_basis(basis, order: MonomialOrder) -> GroebnerBasis:
    # minimal: keep one element per leading monomial kept by divisibility
    minimal: list[Polynomial] = []
    kept_lms: list[Monomial] = []
    for g in sorted(basis, key=lambda g: order.key(leading_monomial(g, order))):
        lmg = leading_monomial(g, order)
        if any(monomial_divides(lmh, lmg) for lmh in kept_lms):
            continue
        minimal.append(g)
        kept_lms.append(lmg)
    # interreduce: each element's tail reduced against the others, monic
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, order) if others else g
        if r.is_zero:
            continue
        lc = r.terms[leading_monomial(r, order)]
        reduced.append(r.scale(Fraction(1) / lc))
    reduced.sort(key=lambda g: order.key(leading_monomial(g, order)))
    return GroebnerBasis(order, tuple(reduced))


def _assert_groebner(gb: GroebnerBasis) -> None:
    basis = gb.elements
    for f, g in combinations(basis, 2):
        s = s_polynomial(f, g, gb.order)
        assert normal_form(s, basis, gb.order).is_zero, "S-polynomial did not reduce to zero"


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    lms = [leading_monomial(g, gb.order) for g in gb.elements]
    return MonomialIdeal(tuple(_minimalize(lms)))


def _minimalize(monomials) -> list[Monomial]:
    minimal: list[Monomial] = []
    for m in sorted(set(monomials), key=monomial_degree):
        if not any(monomial_divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


# -- Hilbert series of a monomial ideal -----------------------------------


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _poly_add(a: list[int], b: list[int], shift: int = 0) -> list[int]:
    out = list(a) + [0] * max(0, shift + len(b) - len(a))
    for j, y in enumerate(b):
        out[shift + j] += y
    return out


def _series_numerator(gens: list[Monomial], n_vars: int) -> list[int]:
    gens = _minimalize(gens)
    if not gens:
        return [1]
    if any(monomial_degree(g) == 0 for g in gens):
        return [0]
    supports = [[i for i, e in enumerate(g) if e] for g in gens]
    if all(len(s) == 1 for s in supports):
        # pairwise coprime pure powers: product of (1 - t^deg)
        numerator = [1]
        for g in gens:
            d = monomial_degree(g)
            factor = [0] * (d + 1)
            factor[0], factor[d] = 1, -1
            numerator = _poly_mul(numerator, factor)
        return numerator
    counts = [0] * n_vars
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = counts.index(max(counts))
    p = tuple(1 if i == pivot else 0 for i in range(n_vars))
    quotient = [
        tuple(e - 1 if i == pivot and e else e for i, e in enumerate(g)) for g in gens
    ]
    sum_gens = [g for g in gens if g[pivot] == 0] + [p]
    # N(I) = N(I + <x>) + t * N(I : x)
    return _poly_add(
        _series_numerator(sum_gens, n_vars), _series_numerator(quotient, n_vars), shift=1
    )


def series_numerator(mi: MonomialIdeal, n_vars: int) -> HilbertSeriesNumerator:
    coeffs = _series_numerator(list(mi.minimal_generators), n_vars)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return HilbertSeriesNumerator(tuple(coeffs), n_vars)


def series_coefficients(num: HilbertSeriesNumerator, upto: int) -> list[int]:
    """H(m) for m = 0..upto by expanding numerator(t) / (1-t)^n."""
    n = num.n_vars
    return [
        sum(c * binom(m - j + n - 1, n - 1) for j, c in enumerate(num.coeffs))
        for m in range(upto + 1)
    ]


# -- Hilbert polynomial ---------------------------------------------------


def _hilbert_polynomial_from_numerator(num: HilbertSeriesNumerator) -> HilbertData:
    n = num.n_vars
    q = list(num.coeffs)
    exponent = 0
    while any(q) and sum(q) == 0:
        # synthetic division by (1 - t)
        out = []
        carry = 0
        for c in q[:-1]:
            carry = carry + c
            out.append(carry)
        q = out
        exponent += 1
    while len(q) > 1 and q[-1] == 0:
        q.pop()
    s = n - exponent
    deg_q = len(q) - 1
    threshold = max(0, deg_q - s + 1)
    if not any(q) or s <= 0:
        return HilbertData(HilbertPolynomial(()), threshold, num)
    coeffs = [Fraction(0)] * s
    for j, c in enumerate(q):
        if not c:
            continue
        # C(m - j + s - 1, s - 1) as a polynomial in m
        for i, b in enumerate(binomial_poly(s - 1 - j, s - 1)):
            coeffs[i] += c * b
    return HilbertData(HilbertPolynomial(tuple(coeffs)), threshold, num)


def hilbert_polynomial(
    ideal: IdealSpec, order: MonomialOrder = DEFAULT_ORDER
) -> HilbertData:
    validate_ideal(ideal)
    if any(g.total_degree() == 0 for g in ideal.generators):
        raise EmptyProjectiveSet(
            "ideal contains a nonzero constant; the projective set is empty"
        )
    gb = buchberger(ideal, order)
    num = series_numerator(initial_ideal(gb), ideal.n_vars)
    return _hilbert_polynomial_from_numerator(num)
