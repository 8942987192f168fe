"""Complete factorization of univariate integer polynomials.

Pipeline: integer content and sign extraction, Yun squarefree decomposition,
Berlekamp factorization modulo a small deterministic prime, quadratic Hensel
lifting to a Landau-Mignotte bound, and subset recombination with exact
trial division.  Every factorization is re-multiplied before it is returned.

Dense representation throughout: a polynomial is a list of ints, lowest
degree first, no trailing zeros (the zero polynomial is the empty list).
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .coeff import prime_factors
from .errors import BudgetError, DomainError, InternalError, UsageError

DEFAULT_DEGREE_LIMIT = 24


# -- dense integer polynomial helpers --------------------------------------

def _trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c):
    return len(c) - 1


def _add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _scale(a, k):
    return _trim([x * k for x in a])


def _deriv(a):
    return _trim([i * a[i] for i in range(1, len(a))])


def _eval(a, x):
    out = 0
    for c in reversed(a):
        out = out * x + c
    return out


def _content(a):
    g = 0
    for x in a:
        g = math.gcd(g, x)
    return g


def _primitive(a):
    """(content, primitive part with positive leading coefficient)."""
    if not a:
        return 0, []
    g = _content(a)
    if a[-1] < 0:
        g = -g
    return g, [x // g for x in a]


def _div_exact(a, b):
    """Quotient of a by b over the rationals when it is an integer
    polynomial and the remainder vanishes; otherwise None."""
    if not b:
        raise DomainError("division by the zero polynomial")
    rem = [Fraction(x) for x in a]
    quo = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    blc = Fraction(b[-1])
    db = _deg(b)
    while len(rem) - 1 >= db and any(rem):
        while rem and rem[-1] == 0:
            rem.pop()
        if len(rem) - 1 < db:
            break
        q = rem[-1] / blc
        pos = len(rem) - 1 - db
        quo[pos] = q
        for j in range(len(b)):
            rem[pos + j] -= q * b[j]
    if any(rem):
        return None
    if any(x.denominator != 1 for x in quo):
        return None
    return _trim([int(x) for x in quo])


def _gcd_z(a, b):
    """Primitive gcd with positive leading coefficient (Euclid over Q)."""
    fa = [Fraction(x) for x in a]
    fb = [Fraction(x) for x in b]

    def trimf(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def remf(u, v):
        u = u[:]
        dv = len(v) - 1
        vl = v[-1]
        while len(u) - 1 >= dv:
            q = u[-1] / vl
            pos = len(u) - 1 - dv
            for j in range(len(v)):
                u[pos + j] -= q * v[j]
            trimf(u)
            if not u:
                break
        return u

    trimf(fa)
    trimf(fb)
    while fb:
        fa, fb = fb, remf(fa, fb)
    if not fa:
        return []
    scale = math.lcm(*(x.denominator for x in fa))
    ints = [int(x * scale) for x in fa]
    return _primitive(ints)[1]


# -- public types -----------------------------------------------------------

@dataclass(frozen=True)
class IntPoly:
    """Dense integer polynomial, coefficients lowest degree first."""

    coeffs: tuple[int, ...]

    @classmethod
    def of(cls, coeffs):
        cs = list(coeffs)
        if any(not isinstance(x, int) or isinstance(x, bool) for x in cs):
            raise UsageError(f"integer coefficients required: {cs!r}")
        return cls(tuple(_trim(cs)))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_nonnegative(self):
        return all(c >= 0 for c in self.coeffs)

    def eval(self, x):
        return _eval(list(self.coeffs), x)

    def __add__(self, other):
        return IntPoly(tuple(_add(list(self.coeffs), list(other.coeffs))))

    def __sub__(self, other):
        return IntPoly(tuple(_sub(list(self.coeffs), list(other.coeffs))))

    def __mul__(self, other):
        return IntPoly(tuple(_mul(list(self.coeffs), list(other.coeffs))))

    def __pow__(self, n):
        out = [1]
        for _ in range(n):
            out = _mul(out, list(self.coeffs))
        return IntPoly(tuple(out))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            else:
                xp = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    parts.append(xp)
                elif c == -1:
                    parts.append(f"-{xp}")
                else:
                    parts.append(f"{c}{xp}")
        text = "+".join(parts)
        return text.replace("+-", "-")


@dataclass(frozen=True)
class IntFactorization:
    sign: int
    content: tuple[int, ...]  # prime multiset, ascending
    factors: tuple  # ((IntPoly, multiplicity), ...), canonical order

    def expand(self) -> IntPoly:
        out = [self.sign]
        for p in self.content:
            out = _scale(out, p)
        for poly, mult in self.factors:
            for _ in range(mult):
                out = _mul(out, list(poly.coeffs))
        return IntPoly(tuple(out))


# -- squarefree decomposition (Yun) -----------------------------------------

def squarefree_decompose(F: IntPoly):
    """Pairwise-coprime squarefree parts with multiplicities.

    F = content * prod(part_i ^ mult_i); parts are primitive with positive
    leading coefficient.  A constant input has no parts.
    """
    if F.is_zero:
        raise DomainError("the zero polynomial has no squarefree decomposition")
    f = _primitive(list(F.coeffs))[1]
    if _deg(f) == 0:
        return []
    df = _deriv(f)
    a = _gcd_z(f, df)
    if _deg(a) == 0:
        return [(IntPoly(tuple(f)), 1)]
    b = _div_exact(f, a)
    c = _div_exact(df, a)
    d = _sub(c, _deriv(b))
    parts = []
    i = 1
    while _deg(b) > 0:
        a = _gcd_z(b, d) if d else _primitive(b)[1]
        if _deg(a) > 0:
            parts.append((IntPoly(tuple(a)), i))
        b = _div_exact(b, a)
        c = _div_exact(d, a) if d else []
        d = _sub(c, _deriv(b))
        i += 1
    return parts


# -- GF(p) arithmetic --------------------------------------------------------

def _p_trim(c, p):
    c = [x % p for x in c]
    while c and c[-1] == 0:
        c.pop()
    return c


def _p_sub(a, b, p):
    n = max(len(a), len(b))
    return _p_trim(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def _p_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _p_trim(out, p)


def _p_monic(a, p):
    inv = pow(a[-1], -1, p)
    return [(x * inv) % p for x in a]


def _p_divmod(a, b, p):
    a = [x % p for x in a]
    b = _p_trim(list(b), p)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    quo = [0] * max(len(a) - db, 0)
    while True:
        while a and a[-1] % p == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        q = (a[-1] * inv) % p
        pos = len(a) - 1 - db
        quo[pos] = q
        for j in range(len(b)):
            a[pos + j] = (a[pos + j] - q * b[j]) % p
    return _p_trim(quo, p), _p_trim(a, p)


def _p_rem(a, b, p):
    return _p_divmod(a, b, p)[1]


def _p_gcd(a, b, p):
    a = _p_trim(list(a), p)
    b = _p_trim(list(b), p)
    while b:
        a, b = b, _p_rem(a, b, p)
    return _p_monic(a, p) if a else []


def _p_powmod(base, e, mod, p):
    result = [1]
    b = _p_rem(base, mod, p)
    while e:
        if e & 1:
            result = _p_rem(_p_mul(result, b, p), mod, p)
        b = _p_rem(_p_mul(b, b, p), mod, p)
        e >>= 1
    return result


def _nullspace(A, p):
    """Basis of the nullspace of the n x n matrix A over GF(p)."""
    n = len(A)
    A = [[x % p for x in row] for row in A]
    pivots = {}
    row = 0
    for col in range(n):
        pr = next((r for r in range(row, n) if A[r][col]), None)
        if pr is None:
            continue
        A[row], A[pr] = A[pr], A[row]
        inv = pow(A[row][col], -1, p)
        A[row] = [(x * inv) % p for x in A[row]]
        for r in range(n):
            if r != row and A[r][col]:
                c = A[r][col]
                A[r] = [(A[r][j] - c * A[row][j]) % p for j in range(n)]
        pivots[col] = row
        row += 1
    basis = []
    for fc in range(n):
        if fc in pivots:
            continue
        v = [0] * n
        v[fc] = 1
        for pc, pr in pivots.items():
            v[pc] = (-A[pr][fc]) % p
        basis.append(v)
    return basis


def _berlekamp(f, p):
    """Monic irreducible factors of a monic squarefree f over GF(p)."""
    n = _deg(f)
    if n == 1:
        return [f]
    xp = _p_powmod([0, 1], p, f, p)
    rows = []
    cur = [1]
    for _ in range(n):
        rows.append(cur + [0] * (n - len(cur)))
        cur = _p_rem(_p_mul(cur, xp, p), f, p)
    # v with v^p = v mod f <=> sum_i v_i x^(p i) = v, i.e. A v = 0
    A = [
        [(rows[i][j] - (1 if i == j else 0)) % p for i in range(n)]
        for j in range(n)
    ]
    basis = _nullspace(A, p)
    r = len(basis)
    if r == 1:
        return [f]
    factors = [f]
    for v in basis:
        vpoly = _p_trim(list(v), p)
        if _deg(vpoly) < 1:
            continue
        for s in range(p):
            if len(factors) == r:
                break
            vs = _p_sub(vpoly, [s], p)
            next_factors = []
            for u in factors:
                if _deg(u) == 1:
                    next_factors.append(u)
                    continue
                g = _p_gcd(u, _p_rem(vs, u, p), p)
                if 0 < _deg(g) < _deg(u):
                    next_factors.append(g)
                    next_factors.append(_p_monic(_p_divmod(u, g, p)[0], p))
                else:
                    next_factors.append(u)
            factors = next_factors
        if len(factors) == r:
            break
    if len(factors) != r:
        raise InternalError("modular factor count disagrees with the Berlekamp nullity")
    return sorted(factors, key=lambda u: (len(u), u))


def _primes():
    yield 2
    yield 3
    n = 5
    while True:
        if all(n % q for q in range(3, math.isqrt(n) + 1, 2)):
            yield n
        n += 2


def _choose_prime(f):
    """Smallest prime keeping the degree and squarefreeness of f mod p."""
    lc = abs(f[-1])
    for p in _primes():
        if lc % p == 0:
            continue
        fp = _p_trim(list(f), p)
        dfp = _p_trim(_deriv(fp), p)
        if not dfp:
            continue
        if _deg(_p_gcd(fp, dfp, p)) == 0:
            return p


# -- Hensel lifting ----------------------------------------------------------

def _tr(c, m):
    """Reduce coefficients into the symmetric range (-m/2, m/2]."""
    out = []
    half = m // 2
    for x in c:
        r = x % m
        if r > half:
            r -= m
        out.append(r)
    return _trim(out)


def _divmod_monic(a, b, m):
    """Division by a monic b with coefficient arithmetic mod m."""
    a = list(a)
    db = _deg(b)
    quo = [0] * max(len(a) - db, 0)
    while True:
        a = _tr(a, m)
        if len(a) - 1 < db:
            break
        q = a[-1]
        pos = len(a) - 1 - db
        quo[pos] = q
        for j in range(len(b)):
            a[pos + j] -= q * b[j]
    return _tr(quo, m), a


def _hensel_step(m, f, g, h, s, t):
    """Lift f = g*h and s*g + t*h = 1 from mod m to mod m^2 (h monic)."""
    M = m * m
    e = _tr(_sub(_tr(f, M), _mul(g, h)), M)
    q, r = _divmod_monic(_mul(s, e), h, M)
    g1 = _tr(_add(g, _add(_mul(t, e), _mul(q, g))), M)
    h1 = _tr(_add(h, r), M)
    b = _tr(_sub(_add(_mul(s, g1), _mul(t, h1)), [1]), M)
    c, d = _divmod_monic(_mul(s, b), h1, M)
    s1 = _tr(_sub(s, d), M)
    t1 = _tr(_sub(t, _add(_mul(t, b), _mul(c, g1))), M)
    return g1, h1, s1, t1


def _hensel_lift(p, f, fs, l):
    """Lift monic mod-p factors of f (= lc(f) * prod fs mod p) to mod p^l."""
    r = len(fs)
    lc = f[-1]
    pl = p**l
    if r == 1:
        inv = pow(lc % pl, -1, pl)
        return [_tr(_scale(f, inv), pl)]
    k = r // 2
    g = [lc % p]
    for u in fs[:k]:
        g = _p_mul(g, u, p)
    h = [1]
    for u in fs[k:]:
        h = _p_mul(h, u, p)
    s, t = _bezout_pair(g, h, p)
    g, h, s, t = (_tr(u, p) for u in (g, h, s, t))
    m = p
    while m < pl:
        g, h, s, t = _hensel_step(m, f, g, h, s, t)
        m = m * m
    return _hensel_lift(p, g, fs[:k], l) + _hensel_lift(p, h, fs[k:], l)


def _bezout_pair(g, h, p):
    """s, t with s*g + t*h = 1 over GF(p), deg s < deg h, deg t < deg g."""
    r0, r1 = _p_trim(list(g), p), _p_trim(list(h), p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = _p_divmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _p_sub(s0, _p_mul(q, s1, p), p)
        t0, t1 = t1, _p_sub(t0, _p_mul(q, t1, p), p)
    if _deg(r0) != 0:
        raise InternalError("modular factors are not coprime")
    inv = pow(r0[0], -1, p)
    s = _p_trim([x * inv for x in s0], p)
    s = _p_rem(s, h, p)
    # t = (1 - s*g) / h exactly over GF(p)
    num = _p_sub([1], _p_mul(s, g, p), p)
    t, rem = _p_divmod(num, h, p)
    if rem:
        raise InternalError("Bezout completion has a nonzero remainder")
    return s, t


# -- Zassenhaus recombination ------------------------------------------------

def _zassenhaus(f):
    """Irreducible factors of a primitive squarefree f with positive lc."""
    n = _deg(f)
    if n == 1:
        return [f]
    A = max(abs(c) for c in f)
    b = f[-1]
    bound = (math.isqrt(n + 1) + 1) * (1 << n) * A * b
    p = _choose_prime(f)
    l = 1
    pl = p
    while pl <= 2 * bound:
        l += 1
        pl *= p
    fs = _berlekamp(_p_monic(_p_trim(list(f), p), p), p)
    if len(fs) == 1:
        return [f]
    lifted = sorted(_hensel_lift(p, f, fs, l), key=lambda u: (len(u), u))
    factors = lifted
    rest = f
    out = []
    s = 1
    while 2 * s <= len(factors):
        found = False
        for subset in combinations(range(len(factors)), s):
            g = [rest[-1]]
            for i in subset:
                g = _mul(g, factors[i])
            cand = _primitive(_tr(g, pl))[1]
            if _deg(cand) < 1:
                continue
            q = _div_exact(rest, cand)
            if q is not None:
                out.append(cand)
                rest = q
                chosen = set(subset)
                factors = [factors[i] for i in range(len(factors)) if i not in chosen]
                found = True
                break
        if not found:
            s += 1
    if _deg(rest) >= 1:
        out.append(rest)
    elif rest != [1]:
        raise InternalError(f"recombination left a non-unit constant {rest}")
    return sorted(out, key=lambda u: (len(u), u))


# -- top level ---------------------------------------------------------------

_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


def _factor_primitive(prim):
    """Irreducible factors with multiplicities of a primitive polynomial
    with positive leading coefficient; cached on the coefficient tuple."""
    key = tuple(prim)
    with _CACHE_LOCK:
        hit = _CACHE.get(key)
    if hit is not None:
        return hit
    counts = {}
    for part, mult in squarefree_decompose(IntPoly(key)):
        for irr in _zassenhaus(list(part.coeffs)):
            t = tuple(irr)
            counts[t] = counts.get(t, 0) + mult
    result = tuple(sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0])))
    with _CACHE_LOCK:
        _CACHE[key] = result
    return result


def factor_int_poly(
    F: IntPoly, degree_limit: int = DEFAULT_DEGREE_LIMIT, use_cache: bool = True
) -> IntFactorization:
    """Complete factorization of F into sign, prime content and irreducibles."""
    if F.is_zero:
        raise DomainError("the zero polynomial has no factorization")
    if F.degree > degree_limit:
        raise BudgetError(f"degree {F.degree} exceeds the factorization limit {degree_limit}")
    coeffs = list(F.coeffs)
    cont, prim = _primitive(coeffs)
    sign = -1 if cont < 0 else 1
    cont = abs(cont)
    if _deg(prim) == 0:
        pairs = ()
    elif use_cache:
        pairs = _factor_primitive(prim)
    else:
        counts = {}
        for part, mult in squarefree_decompose(IntPoly(tuple(prim))):
            for irr in _zassenhaus(list(part.coeffs)):
                t = tuple(irr)
                counts[t] = counts.get(t, 0) + mult
        pairs = tuple(sorted(counts.items(), key=lambda kv: (len(kv[0]), kv[0])))
    result = IntFactorization(
        sign=sign,
        content=tuple(prime_factors(cont)) if cont > 1 else (),
        factors=tuple((IntPoly(t), m) for t, m in pairs),
    )
    if result.expand() != F:
        raise InternalError(f"factorization of {F} failed re-multiplication")
    return result
