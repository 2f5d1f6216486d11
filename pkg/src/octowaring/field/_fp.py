"""Dense polynomials over a prime field F_p.

Polynomials are plain lists of ints, constant term first, with no trailing
zeros (the zero polynomial is the empty list).
"""
from itertools import product


def trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def sub(a, b, p):
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return trim(out)


def mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim([c % p for c in out])


def divmod_(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    inv_lc = pow(b[-1], p - 2, p)
    db = len(b) - 1
    if len(a) - 1 < db:
        return [], trim(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lc % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p
    return trim(q), trim(a[:db])


def mod(a, b, p):
    return divmod_(a, b, p)[1]


def powmod(base, e, f, p):
    result = [1]
    base = mod(base, f, p)
    while e:
        if e & 1:
            result = mod(mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = mod(mul(base, base, p), f, p)
    return result


def gcd(a, b, p):
    a, b = trim(list(a)), trim(list(b))
    while b:
        a, b = b, mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def inverse_mod(a, f, p):
    """Inverse of a modulo f via the extended Euclidean algorithm."""
    r0, r1 = list(f), trim(list(a))
    s0, s1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
    if len(r0) != 1:
        raise ZeroDivisionError("not invertible modulo f")
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in s0]


def prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_irreducible(f, p):
    """Rabin's irreducibility test for a monic f over F_p."""
    m = len(f) - 1
    if m <= 0:
        return False
    if m == 1:
        return True
    x = [0, 1]

    def frob_iter(j):
        h = x
        for _ in range(j):
            h = powmod(h, p, f, p)
        return h

    for r in prime_factors(m):
        h = frob_iter(m // r)
        if len(gcd(f, sub(h, x, p), p)) != 1:
            return False
    return sub(frob_iter(m), x, p) == []


def canonical_irreducible(p, m):
    """Lexicographically smallest monic irreducible of degree m.

    Coefficient vectors are compared from the constant term upward.
    """
    if m == 1:
        return [0, 1]
    # a zero constant term means X divides f, so start the scan at 1
    for low in product(range(1, p), *[range(p)] * (m - 1)):
        f = list(low) + [1]
        if is_irreducible(f, p):
            return f
    raise ValueError("no irreducible polynomial found")  # unreachable
