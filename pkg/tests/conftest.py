from fractions import Fraction

import pytest

import semifactor as sf


@pytest.fixture
def nat_ctx():
    return sf.Nat(), sf.nat_monoid()


@pytest.fixture
def quad6_ctx():
    return sf.Quad(6), sf.nat_monoid()


@pytest.fixture
def halves_ctx():
    return sf.Nat(), sf.make_monoid([Fraction(1, 2), Fraction(3, 4)])


def random_poly(rng, S, M, max_num=6, max_terms=4, max_coeff=5):
    """A random nonzero polynomial expression in the given context."""
    members = [n for n in range(max_num + 1) if M.member_num(n)]
    exps = rng.sample(members, rng.randint(1, min(max_terms, len(members))))
    terms = []
    for n in exps:
        if isinstance(S, sf.Nat):
            c = rng.randint(1, max_coeff)
        else:
            c = (rng.randint(0, max_coeff), rng.randint(0, max_coeff))
            if c == (0, 0):
                c = (1, 0)
        terms.append((Fraction(n, M.denom), c))
    return sf.PolyExpr.from_terms(S, M, terms)
