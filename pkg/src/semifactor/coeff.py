"""Coefficient semirings: the nonnegative integers and quadratic extensions.

Values are plain data.  ``Nat`` works on ``int`` and ``Quad(d)`` on pairs
``(b, c)`` standing for ``b + c*sqrt(d)`` with both entries nonnegative.
The semiring object carries the arithmetic, the divisibility theory and the
embedding into its fraction field (``Fraction`` for Nat, pairs of
``Fraction`` for Quad), which is where exact division is decided.

All functions are pure; semiring objects are frozen and safe to share
between threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, LengthFunctionUnavailableError, UsageError


def prime_factors(n: int) -> list[int]:
    """Prime factors of n >= 1 with multiplicity, ascending."""
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


class CoeffSemiring:
    """Protocol shared by the concrete semirings below."""

    zero = None
    one = None

    def validate(self, v):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, v):
        return v == self.zero

    def is_unit(self, v):
        return v == self.one

    def divisors_of(self, a):
        raise NotImplementedError

    def exact_div(self, a, b):
        raise NotImplementedError

    def atom_factorizations(self, a):
        """Complete set of atom multisets with product a, as sorted tuples."""
        raise NotImplementedError

    def mcd_set(self, vals):
        """All maximal common divisors of a nonempty list of nonzero values.

        Maximality is taken under the divisibility preorder: d is kept when
        no other common divisor is a proper multiple of d.  Equivalently the
        quotients vals/d admit no common non-unit divisor.
        """
        raise NotImplementedError

    def length(self, a):
        raise NotImplementedError

    def render(self, v):
        raise NotImplementedError

    def sort_key(self, v):
        raise NotImplementedError

    def max_component(self, v):
        raise NotImplementedError

    def values_with_components_at_most(self, bound):
        """All nonzero values whose integer components are <= bound."""
        raise NotImplementedError

    def from_int(self, n):
        raise NotImplementedError

    def literal(self):
        raise NotImplementedError

    # fraction-field arithmetic
    def to_field(self, v):
        raise NotImplementedError

    def from_field(self, fv):
        """Map a field value back into the semiring, or None."""
        raise NotImplementedError

    def f_add(self, a, b):
        raise NotImplementedError

    def f_sub(self, a, b):
        raise NotImplementedError

    def f_mul(self, a, b):
        raise NotImplementedError

    def f_div(self, a, b):
        raise NotImplementedError

    def f_is_zero(self, a):
        raise NotImplementedError


@dataclass(frozen=True)
class Nat(CoeffSemiring):
    """The semiring of nonnegative integers."""

    zero = 0
    one = 1

    def validate(self, v):
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise UsageError(f"not a nonnegative integer: {v!r}")
        return v

    def add(self, a, b):
        return self.validate(a) + self.validate(b)

    def mul(self, a, b):
        return self.validate(a) * self.validate(b)

    def divisors_of(self, a):
        self.validate(a)
        if a == 0:
            raise DomainError("0 has no divisor set")
        out = set()
        i = 1
        while i * i <= a:
            if a % i == 0:
                out.add(i)
                out.add(a // i)
            i += 1
        return out

    def exact_div(self, a, b):
        self.validate(a)
        self.validate(b)
        if b == 0:
            raise DomainError("division by 0")
        q, r = divmod(a, b)
        return q if r == 0 else None

    def atom_factorizations(self, a):
        self.validate(a)
        if a in (0, 1):
            raise DomainError(f"{a} has no factorization into atoms")
        return frozenset({tuple(prime_factors(a))})

    def mcd_set(self, vals):
        vals = list(vals)
        if not vals:
            raise UsageError("mcd of an empty list")
        for v in vals:
            self.validate(v)
            if v == 0:
                raise DomainError("mcd undefined when 0 is among the values")
        return {math.gcd(*vals)} if len(vals) > 1 else {vals[0]}

    def length(self, a):
        self.validate(a)
        if a == 0:
            raise DomainError("length undefined at 0")
        return len(prime_factors(a)) if a > 1 else 0

    def render(self, v):
        return str(v)

    def sort_key(self, v):
        return v

    def max_component(self, v):
        return v

    def values_with_components_at_most(self, bound):
        return list(range(1, bound + 1))

    def from_int(self, n):
        return self.validate(n)

    def literal(self):
        return "nat"

    def to_field(self, v):
        return Fraction(self.validate(v))

    def from_field(self, fv):
        if fv.denominator == 1 and fv >= 0:
            return int(fv)
        return None

    def f_add(self, a, b):
        return a + b

    def f_sub(self, a, b):
        return a - b

    def f_mul(self, a, b):
        return a * b

    def f_div(self, a, b):
        return a / b

    def f_is_zero(self, a):
        return a == 0


@dataclass(frozen=True)
class Quad(CoeffSemiring):
    """Pairs (b, c) standing for b + c*sqrt(d), b and c nonnegative integers.

    d must be >= 2 and not a perfect square, so 1 and sqrt(d) are rationally
    independent and the pair representation is unique.
    """

    d: int

    zero = (0, 0)
    one = (1, 0)

    def __post_init__(self):
        if not isinstance(self.d, int) or self.d < 2:
            raise UsageError(f"quadratic radicand must be an integer >= 2, got {self.d!r}")
        if math.isqrt(self.d) ** 2 == self.d:
            raise UsageError(f"quadratic radicand must not be a perfect square, got {self.d}")

    def validate(self, v):
        if (
            not isinstance(v, tuple)
            or len(v) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) and x >= 0 for x in v)
        ):
            raise UsageError(f"not a nonnegative (b, c) pair: {v!r}")
        return v

    def add(self, a, b):
        self.validate(a)
        self.validate(b)
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        self.validate(a)
        self.validate(b)
        return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def divisors_of(self, a):
        # Every divisor (b', c') of (b, c) satisfies b' + c' <= b + c: the
        # cofactor is nonzero, so each of its components contributes at least
        # once (or d >= 2 times) to the componentwise sums of the product.
        self.validate(a)
        if a == self.zero:
            raise DomainError("0 has no divisor set")
        total = a[0] + a[1]
        out = set()
        for b in range(total + 1):
            for c in range(total + 1 - b):
                s = (b, c)
                if s == self.zero:
                    continue
                if self.exact_div(a, s) is not None:
                    out.add(s)
        return out

    def exact_div(self, a, b):
        self.validate(a)
        self.validate(b)
        if b == self.zero:
            raise DomainError("division by 0")
        q = self._field_quot(self.to_field(a), self.to_field(b))
        return self.from_field(q)

    def _field_quot(self, a, b):
        n = b[0] * b[0] - self.d * b[1] * b[1]
        # n == 0 would force b = 0 since d is not a square
        p = (a[0] * b[0] - self.d * a[1] * b[1]) / n
        q = (a[1] * b[0] - a[0] * b[1]) / n
        return (p, q)

    def _is_atom(self, v):
        return len(self.divisors_of(v)) == 2

    def atom_factorizations(self, a):
        self.validate(a)
        if a in (self.zero, self.one):
            raise DomainError(f"{self.render(a)} has no factorization into atoms")
        divs = self.divisors_of(a)
        atoms = sorted((s for s in divs if s != self.one and self._is_atom(s)), key=self.sort_key)

        results = set()

        def rec(target, start, stack):
            if target == self.one:
                results.add(tuple(stack))
                return
            for j in range(start, len(atoms)):
                q = self.exact_div(target, atoms[j])
                if q is not None:
                    stack.append(atoms[j])
                    rec(q, j, stack)
                    stack.pop()

        rec(a, 0, [])
        return frozenset(results)

    def mcd_set(self, vals):
        vals = list(vals)
        if not vals:
            raise UsageError("mcd of an empty list")
        for v in vals:
            self.validate(v)
            if v == self.zero:
                raise DomainError("mcd undefined when 0 is among the values")
        commons = [
            s
            for s in self.divisors_of(vals[0])
            if all(self.exact_div(v, s) is not None for v in vals[1:])
        ]
        return {
            s
            for s in commons
            if not any(s2 != s and self.exact_div(s2, s) is not None for s2 in commons)
        }

    def length(self, a):
        # b + floor(sqrt(d))*c - 1 is superadditive whenever floor(sqrt(d))^2
        # <= d; it separates units only when floor(sqrt(d)) >= 2, i.e. d >= 4.
        self.validate(a)
        if a == self.zero:
            raise DomainError("length undefined at 0")
        t = math.isqrt(self.d)
        if t < 2:
            raise LengthFunctionUnavailableError(
                f"no supported length function for quad:{self.d} (need d >= 4)"
            )
        return a[0] + t * a[1] - 1

    def render(self, v):
        self.validate(v)
        b, c = v
        if b == 0 and c == 0:
            return "0"
        parts = []
        if b:
            parts.append(str(b))
        if c:
            parts.append("r" if c == 1 else f"{c}*r")
        return "+".join(parts)

    def sort_key(self, v):
        return v

    def max_component(self, v):
        return max(v)

    def values_with_components_at_most(self, bound):
        return [
            (b, c)
            for b in range(bound + 1)
            for c in range(bound + 1)
            if (b, c) != (0, 0)
        ]

    def from_int(self, n):
        if not isinstance(n, int) or n < 0:
            raise UsageError(f"not a nonnegative integer: {n!r}")
        return (n, 0)

    def literal(self):
        return f"quad:{self.d}"

    def to_field(self, v):
        self.validate(v)
        return (Fraction(v[0]), Fraction(v[1]))

    def from_field(self, fv):
        p, q = fv
        if p.denominator == 1 and q.denominator == 1 and p >= 0 and q >= 0:
            return (int(p), int(q))
        return None

    def f_add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def f_sub(self, a, b):
        return (a[0] - b[0], a[1] - b[1])

    def f_mul(self, a, b):
        return (a[0] * b[0] + self.d * a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def f_div(self, a, b):
        return self._field_quot(a, b)

    def f_is_zero(self, a):
        return a[0] == 0 and a[1] == 0


def semiring_from_literal(text: str) -> CoeffSemiring:
    """Parse "nat" or "quad:<d>" into a semiring object."""
    if text == "nat":
        return Nat()
    if text.startswith("quad:"):
        try:
            d = int(text[5:])
        except ValueError:
            raise UsageError(f"bad quadratic radicand in {text!r}") from None
        return Quad(d)
    raise UsageError(f"unknown coefficient semiring literal {text!r} (want nat or quad:<d>)")
