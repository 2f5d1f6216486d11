"""Univariate polynomials over field elements and root finding in the tower."""
import random
from math import gcd as igcd

import numpy as np

from ..errors import ClosureBoundExceeded, NoAdmissibleRoot, PreconditionViolated
from .core import COMPLEX, DEFAULT_MAX_DEGREE, FieldElement, GF, common_field, power_residue


class Poly:
    """Dense polynomial, coefficients constant term first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = list(coeffs)
        if coeffs:
            f = coeffs[0].field
            for c in coeffs[1:]:
                f = common_field(f, c.field)
            coeffs = [c.lift(f) for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_ints(cls, field, ints):
        return cls([field(i) for i in ints])

    @property
    def field(self):
        return self.coeffs[0].field if self.coeffs else None

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lift(self, field):
        return Poly([c.lift(field) for c in self.coeffs])

    def __eq__(self, other):
        return isinstance(other, Poly) and len(self.coeffs) == len(other.coeffs) and all(
            a == b for a, b in zip(self.coeffs, other.coeffs)
        )

    def __repr__(self):
        return "Poly([" + ", ".join(str(c) for c in self.coeffs) + "])"

    def __call__(self, x):
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        if acc is None:
            return x.field.zero
        return acc * x.field.one if acc.field is not x.field else acc

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        out = []
        for i in range(n):
            if i < len(a) and i < len(b):
                out.append(a[i] + b[i])
            else:
                out.append(a[i] if i < len(a) else b[i])
        return Poly(out)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return Poly([c * other for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly([])
        zero = a[0].field.zero
        out = [zero] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai.is_zero():
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out)

    def monic(self):
        inv = self.coeffs[-1].inv()
        return Poly([c * inv for c in self.coeffs])

    def divmod(self, other):
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.coeffs)
        b = other.coeffs
        db = len(b) - 1
        if len(r) - 1 < db:
            return Poly([]), Poly(r)
        inv = b[-1].inv()
        q = [None] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            c = r[i] * inv
            q[i - db] = c
            if not c.is_zero():
                for j in range(db + 1):
                    r[i - db + j] = r[i - db + j] - c * b[j]
        return Poly(q), Poly(r[:db])

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def powmod(self, e, modulus):
        result = Poly([modulus.coeffs[0].field.one])
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            e >>= 1
            if e:
                base = (base * base) % modulus
        return result

    def gcd(self, other):
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic() if a.coeffs else a


def X(field):
    return Poly([field.zero, field.one])


def _binomial(poly):
    """(k, a) when poly is X^k - a (monic), else None."""
    c = poly.coeffs
    if len(c) < 3 or not c[-1] == c[-1].field.one:
        return None
    if any(not x.is_zero() for x in c[1:-1]):
        return None
    return len(c) - 1, -c[0]


def _binomial_roots_table(a, k):
    """All roots of X^k = a in a table field via discrete logarithms."""
    f = a.field
    if a.is_zero():
        return [0]
    n = f.order - 1
    L = f._log[a.value] if f.m > 1 else None
    if L is None:
        return None
    g = igcd(k, n)
    if L % g:
        return []
    kk, nn, LL = k // g, n // g, L // g
    e0 = LL * pow(kk, -1, nn) % nn if nn > 1 else 0
    return sorted(f._exp2[e0 + j * nn] for j in range(g))


def roots_in_level(poly, field):
    """All distinct roots of poly lying in the given level, in canonical order."""
    poly = poly.lift(field)
    if poly.degree < 0:
        raise PreconditionViolated("the zero polynomial has every element as a root")
    if poly.degree == 0:
        return []
    poly = poly.monic()
    if field.kind == "complex":
        return _complex_roots(poly)
    if poly.degree == 1:
        return [-poly.coeffs[0]]
    bino = _binomial(poly)
    if bino is not None and field.has_tables:
        codes = _binomial_roots_table(bino[1], bino[0])
        if codes is not None:
            return [FieldElement(field, c) for c in codes]
    if poly.degree == 2 and field.p != 2 and bino is None:
        return _quadratic_roots(poly, field)
    return _generic_roots(poly, field)


def _quadratic_roots(poly, field):
    c0, c1 = poly.coeffs[0], poly.coeffs[1]
    disc = c1 * c1 - 4 * c0
    sq = roots_in_level(Poly([-disc, field.zero, field.one]), field)
    if not sq:
        return []
    half = field(2).inv()
    roots = {((-c1 + s) * half).value for s in sq} | {((-c1 - s) * half).value for s in sq}
    return [FieldElement(field, v) for v in sorted(roots)]


def _generic_roots(poly, field):
    """Distinct-root extraction by gcd with X^Q - X, then equal-degree splitting."""
    Q = field.order
    x = X(field)
    h = x.powmod(Q, poly)
    r = poly.gcd(h - x)
    if r.degree <= 0:
        return []
    roots = []
    _split(r, field, roots)
    return sorted(roots, key=lambda e: e.value)


def _split(r, field, out):
    if r.degree == 1:
        out.append(-r.monic().coeffs[0])
        return
    Q = field.order
    x = X(field)
    # small codes share their low coefficients, so walk a seeded sequence instead
    rng = random.Random(Q * 31 + r.degree)
    for _ in range(256):
        d = FieldElement(field, rng.randrange(1, Q))
        if field.p == 2:
            # absolute trace of d*X, a sum of repeated squarings
            term = (x * d) % r
            acc = term
            for _ in range(field.m - 1):
                term = (term * term) % r
                acc = acc + term
            g = r.gcd(acc)
        else:
            w = (x + Poly([d])).powmod((Q - 1) // 2, r)
            g = r.gcd(w - Poly([field.one]))
        if 0 < g.degree < r.degree:
            _split(g, field, out)
            _split(r // g, field, out)
            return
    raise AssertionError("failed to split a product of linear factors")


def _complex_roots(poly):
    coeffs = [complex(c.value) for c in reversed(poly.coeffs)]
    vals = np.roots(coeffs)
    out = [FieldElement(COMPLEX, complex(v)) for v in vals]
    return sorted(out, key=lambda e: e.sort_key())


def kth_root_closure(a, k, max_degree=DEFAULT_MAX_DEGREE, base=None):
    """Canonical k-th root of a in the smallest tower level that has one.

    The search starts at the level of `base` (a field) when given, which must
    contain a's level; candidate levels are multiples of that starting level.
    Returns (root, degree).
    """
    if k < 1:
        raise PreconditionViolated("k must be positive")
    f = a.field
    if f.kind == "complex":
        if a.is_zero():
            return f.zero, 1
        return FieldElement(f, complex(a.value) ** (1.0 / k)), 1
    start = base if base is not None else f
    if start is not f:
        a = a.lift(start)
        f = start
    if a.is_zero():
        return f.zero, f.m
    if k == 1:
        return a, f.m
    d = 1
    while f.m * d <= max_degree and d <= k:
        level_m = f.m * d
        if power_residue(a, k, level_m):
            level = GF(f.p, level_m)
            roots = roots_in_level(Poly([-a.lift(level)] + [level.zero] * (k - 1) + [level.one]), level)
            if roots:
                return roots[0], level_m
        d += 1
    raise ClosureBoundExceeded(f"no {k}-th root of {a} within degree {max_degree}")


def poly_roots_avoiding(poly, forbidden=(), max_degree=DEFAULT_MAX_DEGREE, base=None):
    """First root of poly, in canonical order at the smallest level, not in forbidden."""
    if poly.degree < 1:
        raise PreconditionViolated("polynomial must be nonconstant")
    f = poly.field
    if base is not None:
        f = common_field(f, base)
        poly = poly.lift(f)
    forbidden = list(forbidden)
    if f.kind == "complex":
        for r in roots_in_level(poly, f):
            if not any(r == x for x in forbidden):
                return r
        raise NoAdmissibleRoot("every root is forbidden")
    found_any = False
    for d in range(1, poly.degree + 1):
        level_m = f.m * d
        if level_m > max_degree:
            break
        level = GF(f.p, level_m)
        roots = roots_in_level(poly, level)
        if roots:
            found_any = True
        for r in roots:
            if not any(_same(r, x) for x in forbidden):
                return r
    if found_any:
        raise NoAdmissibleRoot("every root within the degree bound is forbidden")
    raise ClosureBoundExceeded(f"no root within degree {max_degree}")


def _same(a, b):
    try:
        return a == b
    except Exception:
        return False
