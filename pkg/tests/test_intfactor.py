import random
import threading
from fractions import Fraction
from itertools import product

import pytest

from semifactor.errors import BudgetError, DomainError
from semifactor.intfactor import IntPoly, factor_int_poly, squarefree_decompose


def ip(*coeffs_low_first):
    return IntPoly.of(list(coeffs_low_first))


X = ip(0, 1)
ONE = ip(1)


def poly_divides(g, f):
    """Trial division over the rationals, written independently."""
    rem = [Fraction(c) for c in f.coeffs]
    dg = g.degree
    while len(rem) - 1 >= dg:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < dg:
            break
        q = rem[-1] / g.coeffs[-1]
        pos = len(rem) - 1 - dg
        for j, c in enumerate(g.coeffs):
            rem[pos + j] -= q * c
    return not any(rem)


def signed_divisors(n):
    n = abs(n)
    out = set()
    for i in range(1, n + 1):
        if n % i == 0:
            out.update({i, -i})
    return out


def rational_linear_factors(f):
    """All monic-from-primitive linear factors via the rational root theorem."""
    out = []
    rest = f
    while rest.degree >= 1:
        tc = rest.coeffs[0]
        lc = rest.coeffs[-1]
        if tc == 0:
            out.append(X)
            rest = IntPoly.of(list(rest.coeffs)[1:])
            continue
        found = None
        for p in signed_divisors(tc):
            for q in signed_divisors(lc):
                if q < 0:
                    continue
                cand = IntPoly.of([-p, q])
                g = math_gcd_content(cand)
                if poly_divides(g, rest):
                    found = g
                    break
            if found:
                break
        if not found:
            break
        out.append(found)
        rest = divide_exact(rest, found)
    return out, rest


def math_gcd_content(f):
    import math

    g = 0
    for c in f.coeffs:
        g = math.gcd(g, c)
    sign = -1 if f.coeffs[-1] < 0 else 1
    return IntPoly.of([c // (g * sign) for c in f.coeffs])


def divide_exact(f, g):
    rem = [Fraction(c) for c in f.coeffs]
    quo = [Fraction(0)] * (f.degree - g.degree + 1)
    while True:
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < g.degree:
            break
        q = rem[-1] / g.coeffs[-1]
        quo[len(rem) - 1 - g.degree] = q
        for j, c in enumerate(g.coeffs):
            rem[len(rem) - 1 - g.degree + j] -= q * c
    assert not any(rem)
    return IntPoly.of([int(x) for x in quo])


def kronecker_factor_multiset(f):
    """Reference factorization for degree <= 6: strip rational roots, then
    search degree-2/3 factors by interpolation through divisor tuples."""
    assert f.degree <= 6
    linear, rest = rational_linear_factors(f)
    out = list(linear)
    out.extend(_kronecker_rec(rest))
    return sorted(tuple(g.coeffs) for g in out)


def _kronecker_rec(f):
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [math_gcd_content(f)]
    pts = [0, 1, -1, 2, -2, 3, -3]
    for t in range(2, f.degree // 2 + 1):
        sample = pts[: t + 1]
        vals = [f.eval(x) for x in sample]
        assert all(vals), "rational roots must be stripped first"
        choice_sets = [sorted(signed_divisors(v)) for v in vals]
        for choice in product(*choice_sets):
            cand = _interpolate(sample, choice)
            if cand is None or cand.degree != t or cand.coeffs[-1] < 0:
                continue
            if poly_divides(cand, f):
                return _kronecker_rec(cand) + _kronecker_rec(divide_exact(f, cand))
    return [math_gcd_content(f)]


def _interpolate(xs, ys):
    n = len(xs)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        num = [Fraction(ys[i])]
        den = Fraction(1)
        for j in range(n):
            if i == j:
                continue
            num = _mul_frac(num, [Fraction(-xs[j]), Fraction(1)])
            den *= xs[i] - xs[j]
        for k, c in enumerate(num):
            coeffs[k] += c / den
    if any(c.denominator != 1 for c in coeffs):
        return None
    return IntPoly.of([int(c) for c in coeffs])


def _mul_frac(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class TestSquarefree:
    def test_perfect_square(self):
        assert squarefree_decompose(ip(1, 2, 1)) == [(ip(1, 1), 2)]

    def test_already_squarefree(self):
        f = ip(1, 1, 1, 1, 1, 1)
        assert squarefree_decompose(f) == [(f, 1)]

    def test_mixed_multiplicities(self):
        assert squarefree_decompose(ip(0, 0, 1, 1)) == [(ip(1, 1), 1), (X, 2)]

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            squarefree_decompose(ip())

    def test_constant_has_no_parts(self):
        assert squarefree_decompose(ip(6)) == []

    def test_random_reassembly(self):
        rng = random.Random(21)
        for _ in range(100):
            f = ip(rng.randint(1, 4), rng.randint(1, 3))
            g = ip(rng.randint(1, 4), rng.randint(0, 3), 1)
            h = f ** rng.randint(1, 3) * g
            prod = ONE
            for part, mult in squarefree_decompose(h):
                prod = prod * part**mult
            content = divide_exact(h, prod)
            assert content.degree == 0
            assert content * prod == h


class TestFactor:
    def test_quartic_cyclotomic_product(self):
        fac = factor_int_poly(ip(1, 0, 1, 0, 1))
        assert fac.sign == 1 and fac.content == ()
        assert [(p.coeffs, m) for p, m in fac.factors] == [((1, -1, 1), 1), ((1, 1, 1), 1)]

    def test_sextic_witness(self):
        fac = factor_int_poly(ip(1, 1, 1, 1, 1, 1))
        assert [(p.coeffs, m) for p, m in fac.factors] == [
            ((1, 1), 1),
            ((1, -1, 1), 1),
            ((1, 1, 1), 1),
        ]

    def test_content(self):
        fac = factor_int_poly(ip(2, 2))
        assert fac.content == (2,)
        assert [(p.coeffs, m) for p, m in fac.factors] == [((1, 1), 1)]

    def test_sign(self):
        fac = factor_int_poly(ip(-2, -2))
        assert fac.sign == -1
        assert fac.expand() == ip(-2, -2)

    def test_degree_limit(self):
        with pytest.raises(BudgetError):
            factor_int_poly(ip(*([1] * 26)), degree_limit=24)

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            factor_int_poly(ip())

    def test_remultiplication_random(self):
        rng = random.Random(22)
        for _ in range(250):
            deg = rng.randint(1, 10)
            coeffs = [rng.randint(-9, 9) for _ in range(deg)] + [rng.randint(1, 9)]
            f = IntPoly.of(coeffs)
            assert factor_int_poly(f).expand() == f

    def test_low_degree_factors_are_irreducible(self):
        rng = random.Random(23)
        for _ in range(120):
            deg = rng.randint(2, 8)
            coeffs = [rng.randint(-5, 5) for _ in range(deg)] + [rng.randint(1, 5)]
            fac = factor_int_poly(IntPoly.of(coeffs))
            for poly, _ in fac.factors:
                if poly.degree == 1:
                    continue
                if poly.degree <= 3:
                    # no rational root
                    for p in signed_divisors(poly.coeffs[0] or 1):
                        if poly.coeffs[0] == 0:
                            break
                        for q in signed_divisors(poly.coeffs[-1]):
                            assert poly.eval(Fraction(p, q)) != 0
                if poly.degree == 2:
                    a, b, c = poly.coeffs[2], poly.coeffs[1], poly.coeffs[0]
                    disc = b * b - 4 * a * c
                    import math

                    assert disc < 0 or math.isqrt(abs(disc)) ** 2 != disc

    def test_kronecker_cross_check(self):
        pool = [ip(1, 1), ip(2, 1), ip(1, 0, 1), ip(1, 1, 1), ip(1, -1, 1), ip(1, 2)]
        rng = random.Random(24)
        for _ in range(12):
            parts = rng.sample(pool, rng.randint(2, 3))
            f = ONE
            for p in parts:
                f = f * p
            if f.degree > 6:
                continue
            fac = factor_int_poly(f)
            got = sorted(
                tuple(p.coeffs) for p, m in fac.factors for _ in range(m)
            )
            assert got == kronecker_factor_multiset(f)

    def test_multiset_union_on_products(self):
        rng = random.Random(25)
        pool = [ip(1, 1), ip(3, 1), ip(1, 1, 1), ip(1, -1, 1), ip(2, 0, 1), ip(1, 0, 0, 1)]
        for _ in range(40):
            f = rng.choice(pool) * rng.choice(pool)
            g = rng.choice(pool) * rng.choice(pool)
            ff, fg, fp = factor_int_poly(f), factor_int_poly(g), factor_int_poly(f * g)

            def bag(fac):
                out = {}
                for p, m in fac.factors:
                    out[p.coeffs] = out.get(p.coeffs, 0) + m
                return out

            combined = bag(ff)
            for k, v in bag(fg).items():
                combined[k] = combined.get(k, 0) + v
            assert bag(fp) == combined

    def test_cache_thread_safety_smoke(self):
        from semifactor.intfactor import clear_cache

        clear_cache()
        f = ip(1, 1, 1, 1, 1, 1)
        results = []

        def work():
            results.append(factor_int_poly(f))

        threads = [threading.Thread(target=work) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert all(r == results[0] for r in results)

    def test_x_power_times_unit_content(self):
        fac = factor_int_poly(ip(0, 0, 0, 5))
        assert fac.content == (5,)
        assert [(p.coeffs, m) for p, m in fac.factors] == [((0, 1), 3)]
