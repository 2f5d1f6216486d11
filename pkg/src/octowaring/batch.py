"""Vectorized octonion arithmetic over numpy arrays of field codes.

A batch of octonions is an array of shape (..., 8) holding slot values in the
order eta, x1, x2, x3, y1, y2, y3, zeta.  Finite fields use int64 codes (the
same codes as FieldElement.value); the complex backend uses complex128.
Only prime fields and table-backed extension fields are supported.
"""
import numpy as np

from .field import FieldElement
from .octonion import Octonion


class BatchField:
    """Elementwise field operations on code arrays."""

    def __init__(self, field):
        self.field = field
        self.kind = field.kind
        if field.kind == "complex":
            self.dtype = np.complex128
            self.mode = "complex"
        elif field.m == 1:
            self.dtype = np.int64
            self.mode = "prime"
            self.p = field.p
        elif field.has_tables:
            self.dtype = np.int64
            self.mode = "table"
            t = field.np_tables()
            self.exp, self.log, self.zech = t["exp"], t["log"], t["zech"]
            self.n = field.order - 1
            self.half = self.n // 2
            self.char2 = field.p == 2
        else:
            raise ValueError(f"batch arithmetic needs a table-backed field, got {field}")
        self.zero = field.zero.value
        self.one = field.one.value

    def const(self, value, shape=()):
        if isinstance(value, FieldElement):
            value = value.lift(self.field).value
        return np.full(shape, value, dtype=self.dtype)

    def add(self, a, b):
        if self.mode == "complex":
            return a + b
        if self.mode == "prime":
            return (a + b) % self.p
        if self.char2:
            return np.bitwise_xor(a, b)
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        la, lb = self.log[a], self.log[b]
        z = self.zech[(lb - la) % self.n]
        res = self.exp[(la + z) % self.n]
        res = np.where(z < 0, 0, res)
        res = np.where(a == 0, b, res)
        return np.where(b == 0, a, res)

    def neg(self, a):
        if self.mode == "complex":
            return -a
        if self.mode == "prime":
            return (-a) % self.p
        if self.char2:
            return a
        a = np.asarray(a)
        return np.where(a == 0, 0, self.exp[(self.log[a] + self.half) % self.n])

    def sub(self, a, b):
        if self.mode == "complex":
            return a - b
        if self.mode == "prime":
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if self.mode == "complex":
            return a * b
        if self.mode == "prime":
            return (a * b) % self.p
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        res = self.exp[(self.log[a] + self.log[b]) % self.n]
        return np.where((a == 0) | (b == 0), 0, res)

    def random(self, rng, shape):
        if self.mode == "complex":
            return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return rng.integers(0, self.field.order, size=shape, dtype=np.int64)

    def equal(self, a, b):
        if self.mode == "complex":
            scale = np.maximum(1.0, np.maximum(np.abs(a), np.abs(b)))
            return np.abs(a - b) <= 1e-9 * scale
        return a == b


def to_array(octs, bf):
    """Encode Octonion objects as a (n, 8) array."""
    rows = [[s.lift(bf.field).value for s in o.slots()] for o in octs]
    return np.array(rows, dtype=bf.dtype).reshape(len(rows), 8)


def from_array(arr, bf):
    field = bf.field
    out = []
    for row in np.asarray(arr).reshape(-1, 8):
        vals = [complex(v) if bf.mode == "complex" else int(v) for v in row]
        out.append(Octonion.from_slots([FieldElement(field, v) for v in vals]))
    return out


def _dot(bf, u, v):
    return bf.add(bf.add(bf.mul(u[0], v[0]), bf.mul(u[1], v[1])), bf.mul(u[2], v[2]))


def _cross(bf, u, v):
    m, s = bf.mul, bf.sub
    return [
        s(m(u[1], v[2]), m(u[2], v[1])),
        s(m(u[2], v[0]), m(u[0], v[2])),
        s(m(u[0], v[1]), m(u[1], v[0])),
    ]


def _split(A):
    A = np.asarray(A)
    return A[..., 0], [A[..., 1], A[..., 2], A[..., 3]], [A[..., 4], A[..., 5], A[..., 6]], A[..., 7]


def _join(a, x, y, b):
    parts = np.broadcast_arrays(a, *x, *y, b)
    return np.stack(parts, axis=-1)


def mul(bf, A, B):
    a, x, y, b = _split(A)
    a2, x2, y2, b2 = _split(B)
    yy = _cross(bf, y, y2)
    xx = _cross(bf, x, x2)
    ad, m, s = bf.add, bf.mul, bf.sub
    top = [s(ad(m(a, x2[i]), m(b2, x[i])), yy[i]) for i in range(3)]
    bot = [ad(ad(m(b, y2[i]), m(a2, y[i])), xx[i]) for i in range(3)]
    return _join(ad(m(a, a2), _dot(bf, x, y2)), top, bot, ad(m(b, b2), _dot(bf, y, x2)))


def add(bf, A, B):
    return bf.add(np.asarray(A), np.asarray(B))


def sub(bf, A, B):
    return bf.sub(np.asarray(A), np.asarray(B))


def scale(bf, s, A):
    s = np.asarray(s)
    if s.ndim:
        s = s[..., None]
    return bf.mul(s, np.asarray(A))


def conj(bf, A):
    a, x, y, b = _split(A)
    return _join(b, [bf.neg(v) for v in x], [bf.neg(v) for v in y], a)


def norm(bf, A):
    a, x, y, b = _split(A)
    return bf.sub(bf.mul(a, b), _dot(bf, x, y))


def trace(bf, A):
    a, _, _, b = _split(A)
    return bf.add(a, b)


def add_scalar(bf, A, s):
    """A + s*1."""
    a, x, y, b = _split(A)
    return _join(bf.add(a, s), x, y, bf.add(b, s))


def unit(bf, shape=()):
    out = np.zeros(tuple(shape) + (8,), dtype=bf.dtype)
    out[..., 0] = bf.one
    out[..., 7] = bf.one
    return out


def pow_iter(bf, A, n):
    if n == 0:
        return unit(bf, np.asarray(A).shape[:-1])
    R = np.asarray(A)
    for _ in range(n - 1):
        R = mul(bf, A, R)
    return R


def ch_coefficients(bf, t, nrm, n):
    one = bf.const(bf.one, np.shape(t))
    zero = bf.const(bf.zero, np.shape(t))
    if n == 0:
        return zero, one
    s, u = one, zero
    for _ in range(n - 1):
        s, u = bf.add(bf.mul(t, s), u), bf.neg(bf.mul(nrm, s))
    return s, u


def pow_ch(bf, A, n):
    s, u = ch_coefficients(bf, trace(bf, A), norm(bf, A), n)
    return add_scalar(bf, scale(bf, s, A), u)


def f_poly(bf, a, d, k):
    total = bf.const(bf.zero, np.shape(a))
    ap = bf.const(bf.one, np.shape(a))
    dp = [bf.const(bf.one, np.shape(d))]
    for _ in range(k - 1):
        dp.append(bf.mul(dp[-1], d))
    for i in range(k):
        total = bf.add(total, bf.mul(ap, dp[k - 1 - i]))
        ap = bf.mul(ap, a)
    return total


def power(bf, a, k):
    r = bf.const(bf.one, np.shape(a))
    for _ in range(k):
        r = bf.mul(r, a)
    return r


def pow_orthogonal(bf, A, k):
    """Closed form for rows with <x, y> = 0 (not checked here)."""
    a, x, y, b = _split(A)
    f = f_poly(bf, a, b, k)
    return _join(power(bf, a, k), [bf.mul(f, v) for v in x], [bf.mul(f, v) for v in y], power(bf, b, k))


def equal_rows(bf, A, B):
    return bf.equal(np.asarray(A), np.asarray(B)).all(axis=-1)
