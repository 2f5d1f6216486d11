"""Split octonions written as Zorn vector matrices (eta, x; y, zeta).

Product convention:

    (a, x; y, b)(a', x'; y', b') =
        (aa' + <x,y'>,  a x' + b' x - y ^ y';
         b y' + a' y + x ^ x',  b b' + <y,x'>)

With the minus sign on the upper cross product the norm eta*zeta - <x,y> is
multiplicative.
"""
from .errors import PreconditionViolated, SingularElement
from .field import FieldElement, common_field, element_from_json

SLOTS = ("eta", "x1", "x2", "x3", "y1", "y2", "y3", "zeta")


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _vadd(u, v):
    return (u[0] + v[0], u[1] + v[1], u[2] + v[2])


def _vsub(u, v):
    return (u[0] - v[0], u[1] - v[1], u[2] - v[2])


def _vscale(s, u):
    return (s * u[0], s * u[1], s * u[2])


class Octonion:
    """Immutable Zorn vector matrix; all slots share one field level."""

    __slots__ = ("eta", "x", "y", "zeta")

    def __init__(self, eta, x, y, zeta):
        slots = [eta, *x, *y, zeta]
        if len(slots) != 8:
            raise ValueError("x and y must have three entries")
        f = None
        for s in slots:
            if isinstance(s, FieldElement):
                f = s.field if f is None else common_field(f, s.field)
        if f is None:
            raise ValueError("at least one slot must be a FieldElement (use Octonion.from_ints)")
        vals = [s.lift(f) if isinstance(s, FieldElement) else f(s) for s in slots]
        object.__setattr__(self, "eta", vals[0])
        object.__setattr__(self, "x", tuple(vals[1:4]))
        object.__setattr__(self, "y", tuple(vals[4:7]))
        object.__setattr__(self, "zeta", vals[7])

    def __setattr__(self, name, value):
        raise AttributeError("Octonion is immutable")

    def __reduce__(self):
        return (Octonion, (self.eta, self.x, self.y, self.zeta))

    # -- constructors --
    @classmethod
    def from_slots(cls, slots):
        slots = list(slots)
        return cls(slots[0], slots[1:4], slots[4:7], slots[7])

    @classmethod
    def from_ints(cls, field, eta, x, y, zeta):
        return cls(field(eta), [field(v) for v in x], [field(v) for v in y], field(zeta))

    @classmethod
    def scalar(cls, s, field=None):
        if not isinstance(s, FieldElement):
            s = field(s)
        z = s.field.zero
        return cls(s, (z, z, z), (z, z, z), s)

    @classmethod
    def zero(cls, field):
        return cls.scalar(field.zero)

    @classmethod
    def unit(cls, field):
        return cls.scalar(field.one)

    @classmethod
    def diag(cls, a, b, field=None):
        if field is not None:
            a, b = field(a), field(b)
        z = common_field(a.field, b.field).zero
        return cls(a, (z, z, z), (z, z, z), b)

    # -- accessors --
    @property
    def field(self):
        return self.eta.field

    def slots(self):
        return (self.eta, *self.x, *self.y, self.zeta)

    def lift(self, field):
        return Octonion.from_slots([s.lift(field) for s in self.slots()])

    def is_zero(self):
        return all(s.is_zero() for s in self.slots())

    def is_scalar(self):
        return all(s.is_zero() for s in self.x + self.y) and self.eta == self.zeta

    # -- algebra --
    def __add__(self, other):
        return Octonion(self.eta + other.eta, _vadd(self.x, other.x), _vadd(self.y, other.y), self.zeta + other.zeta)

    def __sub__(self, other):
        return Octonion(self.eta - other.eta, _vsub(self.x, other.x), _vsub(self.y, other.y), self.zeta - other.zeta)

    def __neg__(self):
        return Octonion(-self.eta, _vscale(-1, self.x), _vscale(-1, self.y), -self.zeta)

    def scale(self, s):
        return Octonion(s * self.eta, _vscale(s, self.x), _vscale(s, self.y), s * self.zeta)

    def __mul__(self, other):
        if isinstance(other, Octonion):
            return mul(self, other)
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n):
        return pow_ch(self, n)

    def conj(self):
        return conj(self)

    def norm(self):
        return norm(self)

    def trace(self):
        return trace(self)

    def inverse(self):
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return all(a == b for a, b in zip(self.slots(), other.slots()))

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        return hash(tuple(self.slots()))

    def __repr__(self):
        x = ", ".join(str(v) for v in self.x)
        y = ", ".join(str(v) for v in self.y)
        return f"Octonion({self.eta}, ({x}); ({y}), {self.zeta})"

    # -- JSON --
    def to_json(self):
        return {
            "eta": self.eta.to_json(),
            "x": [v.to_json() for v in self.x],
            "y": [v.to_json() for v in self.y],
            "zeta": self.zeta.to_json(),
        }

    @classmethod
    def from_json(cls, obj, default_field=None):
        if not isinstance(obj, dict):
            raise ValueError("octonion must be a JSON object")
        try:
            x, y = obj["x"], obj["y"]
            if len(x) != 3 or len(y) != 3:
                raise ValueError("x and y must have three entries")
            dec = lambda v: element_from_json(v, default_field)
            return cls(dec(obj["eta"]), [dec(v) for v in x], [dec(v) for v in y], dec(obj["zeta"]))
        except KeyError as exc:
            raise ValueError(f"octonion is missing key {exc}") from exc


def mul(A, B):
    a, x, y, b = A.eta, A.x, A.y, A.zeta
    a2, x2, y2, b2 = B.eta, B.x, B.y, B.zeta
    yy = cross(y, y2)
    xx = cross(x, x2)
    return Octonion(
        a * a2 + dot(x, y2),
        (a * x2[0] + b2 * x[0] - yy[0], a * x2[1] + b2 * x[1] - yy[1], a * x2[2] + b2 * x[2] - yy[2]),
        (b * y2[0] + a2 * y[0] + xx[0], b * y2[1] + a2 * y[1] + xx[1], b * y2[2] + a2 * y[2] + xx[2]),
        b * b2 + dot(y, x2),
    )


def conj(A):
    return Octonion(A.zeta, _vscale(-1, A.x), _vscale(-1, A.y), A.eta)


def norm(A):
    return A.eta * A.zeta - dot(A.x, A.y)


def trace(A):
    return A.eta + A.zeta


def inverse(A):
    n = norm(A)
    if n.is_zero():
        raise SingularElement("octonion has norm zero")
    return conj(A).scale(n.inv())


def pow_iter(A, n):
    """A^n by left iteration A(A(...A)), the reference definition."""
    if n < 0:
        raise PreconditionViolated("negative exponent")
    if n == 0:
        return Octonion.unit(A.field)
    R = A
    for _ in range(n - 1):
        R = mul(A, R)
    return R


def f_poly(a, d, k):
    """sum_{i<k} a^i d^(k-1-i)."""
    if k < 1:
        raise PreconditionViolated("k must be positive")
    total = a.field.zero
    ap = a.field.one
    for i in range(k):
        total = total + ap * d ** (k - 1 - i)
        ap = ap * a
    return total


def pow_orthogonal(A, k):
    """Closed form (a^k, f b; f c, d^k) valid when <x, y> = 0."""
    if not dot(A.x, A.y).is_zero():
        raise PreconditionViolated("pow_orthogonal needs <x, y> = 0")
    if k < 1:
        raise PreconditionViolated("k must be positive")
    f = f_poly(A.eta, A.zeta, k)
    return Octonion(A.eta ** k, _vscale(f, A.x), _vscale(f, A.y), A.zeta ** k)


def ch_coefficients(t, nrm, n):
    """(s, u) with A^n = s A + u for any A of trace t and norm nrm."""
    one, zero = t.field.one, t.field.zero
    if n == 0:
        return zero, one
    s, u = one, zero
    for _ in range(n - 1):
        s, u = t * s + u, -(nrm * s)
    return s, u


def pow_ch(A, n):
    """A^n from the quadratic relation A^2 = tr(A) A - N(A)."""
    if n < 0:
        raise PreconditionViolated("negative exponent")
    s, u = ch_coefficients(trace(A), norm(A), n)
    R = A.scale(s)
    return Octonion(R.eta + u, R.x, R.y, R.zeta + u)
