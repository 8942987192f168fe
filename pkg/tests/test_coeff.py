import random

import pytest

import semifactor as sf
from semifactor.errors import (
    DomainError,
    LengthFunctionUnavailableError,
    UsageError,
)

NAT = sf.Nat()
Q6 = sf.Quad(6)


def brute_quad_divisors(S, a):
    """Independent oracle: scan all candidate pairs and verify by multiplying."""
    total = a[0] + a[1]
    out = set()
    for b1 in range(total + 1):
        for c1 in range(total + 1 - b1):
            s = (b1, c1)
            if s == (0, 0):
                continue
            for b2 in range(total + 1):
                for c2 in range(total + 1 - b2):
                    if S.mul(s, (b2, c2)) == a:
                        out.add(s)
    return out


class TestSemiringOps:
    def test_nat_add_mul(self):
        assert NAT.add(2, 3) == 5
        assert NAT.mul(2, 3) == 6

    def test_quad_sqrt_squares(self):
        assert Q6.mul((0, 1), (0, 1)) == (6, 0)

    def test_quad_distributes(self):
        assert Q6.mul((1, 1), (2, 0)) == (2, 2)

    def test_mismatched_value_shape_rejected(self):
        with pytest.raises(UsageError):
            NAT.add((1, 0), 2)
        with pytest.raises(UsageError):
            Q6.mul(2, (1, 0))

    def test_negative_rejected(self):
        with pytest.raises(UsageError):
            NAT.validate(-1)
        with pytest.raises(UsageError):
            Q6.validate((1, -1))

    def test_quad_requires_nonsquare(self):
        with pytest.raises(UsageError):
            sf.Quad(9)
        with pytest.raises(UsageError):
            sf.Quad(1)

    def test_associativity_commutativity_random(self):
        rng = random.Random(1)
        for _ in range(500):
            a = (rng.randint(0, 9), rng.randint(0, 9))
            b = (rng.randint(0, 9), rng.randint(0, 9))
            c = (rng.randint(0, 9), rng.randint(0, 9))
            assert Q6.mul(a, b) == Q6.mul(b, a)
            assert Q6.mul(Q6.mul(a, b), c) == Q6.mul(a, Q6.mul(b, c))
            assert Q6.mul(a, Q6.add(b, c)) == Q6.add(Q6.mul(a, b), Q6.mul(a, c))


class TestDivisors:
    def test_nat_12(self):
        assert NAT.divisors_of(12) == {1, 2, 3, 4, 6, 12}

    def test_nat_unit(self):
        assert NAT.divisors_of(1) == {1}

    def test_quad_six(self):
        got = Q6.divisors_of((6, 0))
        assert got == {(1, 0), (2, 0), (3, 0), (0, 1), (6, 0)}
        assert got == brute_quad_divisors(Q6, (6, 0))

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            NAT.divisors_of(0)
        with pytest.raises(DomainError):
            Q6.divisors_of((0, 0))

    def test_contains_one_and_self_and_divides(self):
        rng = random.Random(2)
        for _ in range(40):
            a = (rng.randint(0, 5), rng.randint(0, 5))
            if a == (0, 0):
                continue
            divs = Q6.divisors_of(a)
            assert Q6.one in divs and a in divs
            for s in divs:
                assert Q6.exact_div(a, s) is not None

    def test_component_sum_bound_exhaustive(self):
        # every divisor (b', c') of (b, c) satisfies b' + c' <= b + c
        for total in range(1, 13):
            for b in range(total + 1):
                a = (b, total - b)
                for s in Q6.divisors_of(a):
                    assert s[0] + s[1] <= total

    def test_matches_brute_force_small(self):
        for total in range(1, 7):
            for b in range(total + 1):
                a = (b, total - b)
                assert Q6.divisors_of(a) == brute_quad_divisors(Q6, a)


class TestExactDiv:
    def test_nat(self):
        assert NAT.exact_div(6, 2) == 3
        assert NAT.exact_div(7, 2) is None

    def test_quad_six_by_root(self):
        assert Q6.exact_div((6, 0), (0, 1)) == (0, 1)

    def test_quad_non_integral(self):
        assert Q6.exact_div((2, 0), (1, 1)) is None

    def test_zero_divisor_rejected(self):
        with pytest.raises(DomainError):
            NAT.exact_div(3, 0)
        with pytest.raises(DomainError):
            Q6.exact_div((1, 1), (0, 0))

    def test_round_trip_random(self):
        rng = random.Random(3)
        for _ in range(2000):
            a = (rng.randint(0, 8), rng.randint(0, 8))
            b = (rng.randint(0, 8), rng.randint(0, 8))
            if a == (0, 0) or b == (0, 0):
                continue
            assert Q6.exact_div(Q6.mul(a, b), b) == a


class TestAtomFactorizations:
    def test_nat_prime_factorization(self):
        assert NAT.atom_factorizations(12) == {(2, 2, 3)}

    def test_quad_six_two_ways(self):
        assert Q6.atom_factorizations((6, 0)) == {((2, 0), (3, 0)), ((0, 1), (0, 1))}

    def test_quad_root_is_atom(self):
        assert Q6.atom_factorizations((0, 1)) == {((0, 1),)}

    def test_units_rejected(self):
        for bad in (0, 1):
            with pytest.raises(DomainError):
                NAT.atom_factorizations(bad)
        with pytest.raises(DomainError):
            Q6.atom_factorizations((1, 0))

    def test_products_and_atomicity(self):
        for total in range(2, 7):
            for b in range(total + 1):
                a = (b, total - b)
                if a == (1, 0):
                    continue
                for z in Q6.atom_factorizations(a):
                    prod = (1, 0)
                    for v in z:
                        prod = Q6.mul(prod, v)
                        assert Q6.divisors_of(v) == {(1, 0), v}
                    assert prod == a


class TestMcd:
    def test_nat_gcd(self):
        assert NAT.mcd_set([4, 6]) == {2}
        assert NAT.mcd_set([2, 3]) == {1}

    def test_quad_six_and_root(self):
        assert Q6.mcd_set([(6, 0), (0, 1)]) == {(0, 1)}

    def test_empty_rejected(self):
        with pytest.raises(UsageError):
            NAT.mcd_set([])

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            Q6.mcd_set([(1, 1), (0, 0)])

    def test_mcd_properties_random(self):
        rng = random.Random(4)
        for _ in range(30):
            vals = []
            while len(vals) < 2:
                v = (rng.randint(0, 4), rng.randint(0, 4))
                if v != (0, 0):
                    vals.append(v)
            for d in Q6.mcd_set(vals):
                quots = [Q6.exact_div(v, d) for v in vals]
                assert all(q is not None for q in quots)
                assert Q6.mcd_set(quots) == {(1, 0)}


class TestLength:
    def test_nat_values(self):
        assert NAT.length(12) == 3
        assert NAT.length(1) == 0

    def test_quad_root(self):
        assert Q6.length((0, 1)) == 1

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            NAT.length(0)

    def test_small_radicands_unsupported(self):
        for d in (2, 3):
            with pytest.raises(LengthFunctionUnavailableError):
                sf.Quad(d).length((0, 1))

    def test_superadditive_and_unit_detection(self):
        rng = random.Random(5)
        for S in (NAT, Q6, sf.Quad(7), sf.Quad(11)):
            for _ in range(2500):
                if S is NAT:
                    a, b = rng.randint(1, 500), rng.randint(1, 500)
                    unit = 1
                else:
                    a = (rng.randint(0, 9), rng.randint(0, 9))
                    b = (rng.randint(0, 9), rng.randint(0, 9))
                    unit = (1, 0)
                    if a == (0, 0) or b == (0, 0):
                        continue
                assert S.length(S.mul(a, b)) >= S.length(a) + S.length(b)
                assert (S.length(a) == 0) == (a == unit)


class TestRender:
    @pytest.mark.parametrize(
        "value,text",
        [((3, 0), "3"), ((0, 1), "r"), ((2, 1), "2+r"), ((0, 0), "0"), ((1, 2), "1+2*r")],
    )
    def test_quad_text(self, value, text):
        assert Q6.render(value) == text

    def test_nat_text(self):
        assert NAT.render(17) == "17"
