"""Polynomial expressions over a coefficient semiring and an exponent monoid.

Canonical form: strictly descending exponents, no zero coefficients, every
exponent a member of the monoid.  The zero polynomial is the empty term
list.  Because the coefficient semirings are additively reduced there is
never cancellation: the support of a product is the sumset of the supports.

Exact division of f by g is performed in the fraction field after the
substitution y = x^(1/D), which turns all exponents into integers; the
quotient is accepted only when the remainder vanishes, every quotient
coefficient lies back in the semiring and every quotient exponent is a
member of the monoid.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .coeff import CoeffSemiring, Quad
from .errors import DomainError, ExponentNotInMonoidError, ParseError, UsageError
from .monoid import ExpElem, ExpMonoid


@dataclass(frozen=True)
class PolyExpr:
    semiring: CoeffSemiring
    monoid: ExpMonoid
    terms: tuple  # ((ExpElem, coeff), ...) with strictly descending exponents

    @classmethod
    def from_terms(cls, semiring, monoid, terms):
        """Build canonical form: validate, merge like terms, sort, drop zeros."""
        acc = {}
        for exp, coeff in terms:
            coeff = semiring.validate(coeff)
            if isinstance(exp, ExpElem):
                exp = exp.value
            q = Fraction(exp)
            if q < 0 or not monoid.member(q):
                raise DomainError(f"exponent {q} is not a member of {monoid.literal()}")
            n = int(q * monoid.denom)
            acc[n] = semiring.add(acc.get(n, semiring.zero), coeff)
        cleaned = tuple(
            (monoid.elem_of_num(n), c)
            for n, c in sorted(acc.items(), reverse=True)
            if not semiring.is_zero(c)
        )
        return cls(semiring, monoid, cleaned)

    @classmethod
    def zero(cls, semiring, monoid):
        return cls(semiring, monoid, ())

    @classmethod
    def one(cls, semiring, monoid):
        return cls.from_terms(semiring, monoid, [(0, semiring.one)])

    @classmethod
    def monomial(cls, semiring, monoid, coeff, exp):
        return cls.from_terms(semiring, monoid, [(exp, coeff)])

    # inspection ----------------------------------------------------------

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return len(self.terms) == 1 and self.terms[0][0].num == 0 and self.semiring.is_unit(
            self.terms[0][1]
        )

    def _nonzero(self):
        if not self.terms:
            raise DomainError("the zero polynomial has no canonical-form data")

    @property
    def degree(self) -> ExpElem:
        self._nonzero()
        return self.terms[0][0]

    @property
    def leading_coeff(self):
        self._nonzero()
        return self.terms[0][1]

    @property
    def trailing_degree(self) -> ExpElem:
        self._nonzero()
        return self.terms[-1][0]

    @property
    def trailing_coeff(self):
        self._nonzero()
        return self.terms[-1][1]

    @property
    def support(self) -> frozenset[ExpElem]:
        self._nonzero()
        return frozenset(e for e, _ in self.terms)

    @property
    def is_monomial(self) -> bool:
        self._nonzero()
        return len(self.terms) == 1

    def exponent_nums(self) -> tuple[int, ...]:
        """Exponent numerators over the monoid denominator, descending."""
        d = self.monoid.denom
        return tuple(int(e.value * d) for e, _ in self.terms)

    # arithmetic ----------------------------------------------------------

    def _same_context(self, other):
        if self.semiring != other.semiring or self.monoid != other.monoid:
            raise UsageError(
                f"mismatched contexts: ({self.semiring.literal()}, {self.monoid.literal()})"
                f" vs ({other.semiring.literal()}, {other.monoid.literal()})"
            )

    def __add__(self, other):
        self._same_context(other)
        return PolyExpr.from_terms(
            self.semiring,
            self.monoid,
            [(e, c) for e, c in self.terms] + [(e, c) for e, c in other.terms],
        )

    def __mul__(self, other):
        self._same_context(other)
        S = self.semiring
        d = self.monoid.denom
        acc = {}
        for ea, ca in self.terms:
            na = int(ea.value * d)
            for eb, cb in other.terms:
                n = na + int(eb.value * d)
                prod = S.mul(ca, cb)
                acc[n] = S.add(acc.get(n, S.zero), prod)
        terms = tuple(
            (self.monoid.elem_of_num(n), c)
            for n, c in sorted(acc.items(), reverse=True)
            if not S.is_zero(c)
        )
        return PolyExpr(S, self.monoid, terms)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise UsageError(f"polynomial powers need a nonnegative integer, got {n!r}")
        out = PolyExpr.one(self.semiring, self.monoid)
        for _ in range(n):
            out = out * self
        return out

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"PolyExpr({format_poly(self)!r})"


@dataclass(frozen=True)
class PolyFacts:
    degree: ExpElem
    leading_coeff: object
    trailing_degree: ExpElem
    trailing_coeff: object
    support: frozenset
    is_monomial: bool


def inspect(f: PolyExpr) -> PolyFacts:
    return PolyFacts(
        f.degree, f.leading_coeff, f.trailing_degree, f.trailing_coeff, f.support, f.is_monomial
    )


def ambient_exact_div(f: PolyExpr, g: PolyExpr):
    """Quotient f/g inside the semiring, or None when it does not exist there.

    Long division runs over the fraction field with integer exponents
    (y = x^(1/D)); the candidate quotient is then filtered back through the
    semiring and the monoid.
    """
    f._same_context(g)
    if g.is_zero:
        raise DomainError("division by the zero polynomial")
    if f.is_zero:
        raise DomainError("division of the zero polynomial")
    S = f.semiring
    M = f.monoid
    rem = dict(zip(f.exponent_nums(), (S.to_field(c) for _, c in f.terms)))
    gterms = list(zip(g.exponent_nums(), (S.to_field(c) for _, c in g.terms)))
    gdeg = gterms[0][0]
    glc = gterms[0][1]
    quo = {}
    while rem:
        rdeg = max(rem)
        if rdeg < gdeg:
            return None
        qc = S.f_div(rem[rdeg], glc)
        qe = rdeg - gdeg
        quo[qe] = qc
        for e, c in gterms:
            ne = qe + e
            nv = S.f_sub(rem.get(ne, S.to_field(S.zero)), S.f_mul(qc, c))
            if S.f_is_zero(nv):
                rem.pop(ne, None)
            else:
                rem[ne] = nv
    terms = []
    for e, fv in quo.items():
        v = S.from_field(fv)
        if v is None or not M.member_num(e):
            return None
        terms.append((M.elem_of_num(e), v))
    terms.sort(key=lambda t: t[0].value, reverse=True)
    return PolyExpr(S, M, tuple(terms))


# text form ---------------------------------------------------------------
#
#   poly  := term ('+' term)*
#   term  := coeff ['*'] [xpart] | xpart
#   coeff := decimal-integer | '(' int ',' int ')'     (pairs only for quad)
#   xpart := 'x' ['^' exp]
#   exp   := int ['/' int] | '{' int ['/' int] '}'
#
# Whitespace is insignificant.


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.i = 0

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def take(self, ch):
        if self.peek() != ch:
            raise ParseError(f"expected {ch!r}", self.i)
        self.i += 1

    def at_end(self):
        return self.peek() == ""

    def read_int(self):
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if self.i == start:
            raise ParseError("expected a decimal integer", start)
        return int(self.text[start:self.i])

    def read_rational(self):
        num = self.read_int()
        if self.peek() == "/":
            self.i += 1
            den = self.read_int()
            if den == 0:
                raise ParseError("zero denominator", self.i)
            return Fraction(num, den)
        return Fraction(num)


def parse(text: str, semiring: CoeffSemiring, monoid: ExpMonoid) -> PolyExpr:
    sc = _Scanner(text)
    if sc.at_end():
        raise ParseError("empty expression", 0)
    raw_terms = []
    while True:
        raw_terms.append(_parse_term(sc, semiring))
        if sc.at_end():
            break
        sc.take("+")
    for exp, _ in raw_terms:
        if not monoid.member(exp):
            raise ExponentNotInMonoidError(exp, monoid.literal())
    return PolyExpr.from_terms(semiring, monoid, [(e, c) for e, c in raw_terms])


def _parse_term(sc: _Scanner, semiring):
    ch = sc.peek()
    coeff = None
    if ch.isdigit():
        coeff = semiring.from_int(sc.read_int())
    elif ch == "(":
        if not isinstance(semiring, Quad):
            raise ParseError("pair coefficients need a quadratic semiring", sc.i)
        sc.take("(")
        b = sc.read_int()
        sc.take(",")
        c = sc.read_int()
        sc.take(")")
        coeff = (b, c)
    if coeff is not None:
        if sc.peek() == "*":
            sc.i += 1
            exp = _parse_xpart(sc, required=True)
        elif sc.peek() == "x":
            exp = _parse_xpart(sc, required=True)
        else:
            exp = Fraction(0)
        return (exp, coeff)
    if ch == "x":
        return (_parse_xpart(sc, required=True), semiring.one)
    raise ParseError(f"expected a term, found {ch!r}" if ch else "expected a term", sc.i)


def _parse_xpart(sc: _Scanner, required):
    if sc.peek() != "x":
        if required:
            raise ParseError("expected 'x'", sc.i)
        return Fraction(0)
    sc.i += 1
    if sc.peek() != "^":
        return Fraction(1)
    sc.i += 1
    if sc.peek() == "{":
        sc.take("{")
        q = sc.read_rational()
        sc.take("}")
        return q
    return sc.read_rational()


def format_poly(f: PolyExpr) -> str:
    """Canonical text form; parse(format_poly(f)) == f."""
    if f.is_zero:
        return "0"
    S = f.semiring
    quad = isinstance(S, Quad)
    parts = []
    for e, c in f.terms:
        if e.num == 0:
            xpart = ""
        elif e.value == 1:
            xpart = "x"
        elif e.denom == 1:
            xpart = f"x^{e.num}"
        else:
            xpart = f"x^{{{e.num}/{e.denom}}}"
        if quad:
            cpart = "" if c == S.one and xpart else f"({c[0]},{c[1]})"
            sep = "*" if cpart and xpart else ""
        else:
            cpart = "" if c == 1 and xpart else str(c)
            sep = ""
        parts.append(f"{cpart}{sep}{xpart}")
    return "+".join(parts)
