"""Finite field tower levels, the complex backend and their elements.

An element of F_{p^m} is stored as an integer code.  Writing the element as
c0 + c1 t + ... + c_{m-1} t^{m-1} over the canonical irreducible of degree m,
the code is sum(c_i * p^(m-1-i)), so c0 is the most significant digit and the
natural integer order of codes is the coefficient-lexicographic order.
"""
import array
import threading
from math import gcd

import numpy as np

from ..errors import CapExceeded, DivisionByZero, IncompatibleTower
from . import _fp

# Fields up to this many elements get exp/log/Zech tables.
TABLE_LIMIT = 1 << 20
DEFAULT_MAX_DEGREE = 24
DEFAULT_ENUM_CAP = 1 << 16
COMPLEX_RTOL = 1e-9

_cache_lock = threading.RLock()
_fields = {}
_embeddings = {}


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def GF(p, m=1):
    """Return the (memoized) tower level F_{p^m}."""
    key = (int(p), int(m))
    f = _fields.get(key)
    if f is not None:
        return f
    with _cache_lock:
        f = _fields.get(key)
        if f is None:
            if not _is_prime(key[0]):
                raise ValueError(f"characteristic must be prime, got {p}")
            if key[1] < 1:
                raise ValueError("extension degree must be >= 1")
            f = FiniteField(*key)
            _fields[key] = f
    return f


def field_of_order(q):
    """The level F_q for a prime power q."""
    q = int(q)
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, r = 0, q
    while r % p == 0:
        r //= p
        m += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return GF(p, m)


class FiniteField:
    kind = "finite"

    def __init__(self, p, m):
        self.p = p
        self.m = m
        self.order = p ** m
        self.modulus = _fp.canonical_irreducible(p, m)
        self._top = p ** (m - 1)
        self._tables = None
        if m == 1:
            self.add, self.sub, self.mul = self._add_p, self._sub_p, self._mul_p
            self.neg, self.inv, self.pow = self._neg_p, self._inv_p, self._pow_p
        elif self.order <= TABLE_LIMIT:
            self._build_tables()
            if p == 2:
                self.add = self.sub = self._xor
                self.neg = self._ident
            else:
                self.add, self.sub, self.neg = self._add_t, self._sub_t, self._neg_t
            self.mul, self.inv, self.pow = self._mul_t, self._inv_t, self._pow_t
        else:
            self.add, self.sub, self.mul = self._add_poly, self._sub_poly, self._mul_poly
            self.neg, self.inv, self.pow = self._neg_poly, self._inv_poly, self._pow_poly
        self.zero = FieldElement(self, 0)
        self.one = FieldElement(self, self._top)

    def __repr__(self):
        return f"GF({self.p}^{self.m})" if self.m > 1 else f"GF({self.p})"

    def __reduce__(self):
        return (GF, (self.p, self.m))

    @property
    def has_tables(self):
        return self._tables is not None

    # -- codes and coefficient vectors --
    def decode(self, code):
        """Coefficient list c0..c_{m-1} of a code."""
        p = self.p
        out = [0] * self.m
        for i in range(self.m - 1, -1, -1):
            code, out[i] = divmod(code, p)
        return out

    def encode(self, coeffs):
        code = 0
        p = self.p
        for i in range(self.m):
            code = code * p + (coeffs[i] if i < len(coeffs) else 0) % p
        return code

    def from_int(self, n):
        """Code of the prime-subfield element n mod p."""
        return (n % self.p) * self._top

    def __call__(self, value):
        """Build an element from an int (prime subfield) or a coefficient list."""
        if isinstance(value, FieldElement):
            return value.lift(self)
        if isinstance(value, (list, tuple)):
            if len(value) > self.m:
                raise ValueError("too many coefficients")
            return FieldElement(self, self.encode(list(value)))
        return FieldElement(self, self.from_int(int(value)))

    def element(self, code):
        if not 0 <= code < self.order:
            raise ValueError("code out of range")
        return FieldElement(self, code)

    @property
    def gen(self):
        """The canonical generator t (the unit for prime fields)."""
        if self.m == 1:
            return self.one
        return FieldElement(self, self.encode([0, 1]))

    def elements(self):
        for c in range(self.order):
            yield FieldElement(self, c)

    # -- prime field ops --
    def _add_p(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def _sub_p(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def _mul_p(self, a, b):
        return a * b % self.p

    def _neg_p(self, a):
        return (self.p - a) if a else 0

    def _inv_p(self, a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def _pow_p(self, a, e):
        if e < 0:
            a, e = self._inv_p(a), -e
        return pow(a, e, self.p)

    # -- table ops --
    def _primitive_coeffs(self):
        n = self.order - 1
        primes = _fp.prime_factors(n)
        f, p = self.modulus, self.p
        for code in range(1, self.order):
            g = _fp.trim(self.decode(code))
            if all(_fp.powmod(g, n // r, f, p) != [1] for r in primes):
                return self.decode(code)
        raise AssertionError("no primitive element")

    def _build_tables(self):
        p, m, q = self.p, self.m, self.order
        n = q - 1
        g = self._primitive_coeffs()
        mat = np.zeros((m, m), dtype=np.int64)
        for j in range(m):
            col = _fp.mod(_fp.mul(_fp.trim(list(g)), [0] * j + [1], p), self.modulus, p)
            mat[: len(col), j] = col
        block = min(n, 1024)
        rows = np.zeros((block, m), dtype=np.int64)
        v = np.zeros(m, dtype=np.int64)
        v[0] = 1
        for i in range(block):
            rows[i] = v
            v = mat @ v % p
        # matrix for multiplication by g^block
        step = np.eye(m, dtype=np.int64)
        base, e = mat.copy(), block
        while e:
            if e & 1:
                step = step @ base % p
            base = base @ base % p
            e >>= 1
        chunks = [rows]
        total = block
        while total < n:
            rows = rows @ step.T % p
            chunks.append(rows)
            total += block
        coeffs = np.concatenate(chunks)[:n]
        weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
        exp = coeffs @ weights
        log = np.full(q, -1, dtype=np.int64)
        log[exp] = np.arange(n, dtype=np.int64)
        if (log[1:] < 0).any():
            raise AssertionError("generator is not primitive")
        top = self._top
        c0 = exp // top
        one_plus = np.where(c0 < p - 1, exp + top, exp - (p - 1) * top)
        zech = log[one_plus]
        self._n = n
        self._half = n // 2 if p != 2 else 0
        self._exp2 = array.array("q", np.concatenate([exp, exp]).tolist())
        self._log = array.array("q", log.tolist())
        self._zech = array.array("q", zech.tolist())
        self._tables = {"exp": exp, "log": log, "zech": zech}

    def np_tables(self):
        return self._tables

    @staticmethod
    def _xor(a, b):
        return a ^ b

    @staticmethod
    def _ident(a):
        return a

    def _add_t(self, a, b):
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        d = self._log[b] - la
        if d < 0:
            d += self._n
        z = self._zech[d]
        if z < 0:
            return 0
        return self._exp2[la + z]

    def _neg_t(self, a):
        if not a:
            return 0
        return self._exp2[self._log[a] + self._half]

    def _sub_t(self, a, b):
        return self._add_t(a, self._neg_t(b))

    def _mul_t(self, a, b):
        if not a or not b:
            return 0
        return self._exp2[self._log[a] + self._log[b]]

    def _inv_t(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        la = self._log[a]
        return self._exp2[self._n - la] if la else a

    def _pow_t(self, a, e):
        if not a:
            if e < 0:
                raise DivisionByZero("inverse of zero")
            return self._top if e == 0 else 0
        return self._exp2[(self._log[a] * e) % self._n]

    # -- polynomial-basis ops for large fields --
    def _add_poly(self, a, b):
        p = self.p
        return self.encode([(x + y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def _sub_poly(self, a, b):
        p = self.p
        return self.encode([(x - y) % p for x, y in zip(self.decode(a), self.decode(b))])

    def _neg_poly(self, a):
        p = self.p
        return self.encode([(-x) % p for x in self.decode(a)])

    def _mul_poly(self, a, b):
        p = self.p
        prod = _fp.mul(_fp.trim(self.decode(a)), _fp.trim(self.decode(b)), p)
        return self.encode(_fp.mod(prod, self.modulus, p))

    def _inv_poly(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return self.encode(_fp.inverse_mod(_fp.trim(self.decode(a)), self.modulus, self.p))

    def _pow_poly(self, a, e):
        if e < 0:
            a, e = self._inv_poly(a), -e
        if not a:
            return self._top if e == 0 else 0
        e %= self.order - 1
        return self.encode(_fp.powmod(_fp.trim(self.decode(a)), e, self.modulus, self.p))


class ComplexField:
    """Approximate complex numbers with a relative equality tolerance."""

    kind = "complex"
    p = 0
    m = 1
    order = None

    def __init__(self):
        self.zero = FieldElement(self, 0j)
        self.one = FieldElement(self, 1 + 0j)

    def __repr__(self):
        return "ComplexField()"

    def __reduce__(self):
        return (_complex_field, ())

    def __call__(self, value):
        if isinstance(value, FieldElement):
            if value.field is not self:
                raise IncompatibleTower("cannot move a finite element to the complex backend")
            return value
        return FieldElement(self, complex(value))

    def from_int(self, n):
        return complex(n)

    @staticmethod
    def add(a, b):
        return a + b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def neg(a):
        return -a

    @staticmethod
    def inv(a):
        if a == 0:
            raise DivisionByZero("inverse of zero")
        return 1 / a

    @staticmethod
    def pow(a, e):
        if e < 0:
            if a == 0:
                raise DivisionByZero("inverse of zero")
            return (1 / a) ** (-e)
        r = 1 + 0j
        for _ in range(e):
            r *= a
        return r


COMPLEX = None


def _complex_field():
    return COMPLEX


def common_field(f1, f2):
    """Smallest of two levels into which both embed, or IncompatibleTower."""
    if f1 is f2:
        return f1
    if f1.kind != f2.kind:
        raise IncompatibleTower("finite and complex elements do not mix")
    if f1.kind == "complex":
        return f1
    if f1.p != f2.p:
        raise IncompatibleTower(f"characteristics {f1.p} and {f2.p} differ")
    if f2.m % f1.m == 0:
        return f2
    if f1.m % f2.m == 0:
        return f1
    raise IncompatibleTower(f"degrees {f1.m} and {f2.m}: neither divides the other")


def embedding(src, dst):
    """Code-level map F_{p^m} -> F_{p^m'} for m | m' (memoized)."""
    key = (src.p, src.m, dst.m)
    emb = _embeddings.get(key)
    if emb is not None:
        return emb
    if src.p != dst.p or dst.m % src.m:
        raise IncompatibleTower(f"cannot embed {src} into {dst}")
    with _cache_lock:
        emb = _embeddings.get(key)
        if emb is None:
            emb = _Embedding(src, dst)
            _embeddings[key] = emb
    return emb


class _Embedding:
    """Embedding fixed by the image r of the generator of the smaller level.

    r is the first root (canonical order) of the smaller level's modulus that is
    compatible with the embeddings of every intermediate subfield, so that
    composing embeddings along the tower is path independent.
    """

    def __init__(self, src, dst):
        self.src, self.dst = src, dst
        if src.m == 1:
            self.image = None
            return
        if src.m == dst.m:
            self.image = None
            return
        from .poly import Poly, roots_in_level

        mod = Poly([dst(c) for c in src.modulus])
        candidates = roots_in_level(mod, dst)
        checks = []
        for r in _fp.prime_factors(src.m):
            sub = GF(src.p, src.m // r)
            if sub.m == 1:
                continue
            # t_sub inside src, written as a polynomial in t_src
            inner = embedding(sub, src)(sub.gen.value)
            poly = Poly([dst(c) for c in src.decode(inner)])
            target = FieldElement(dst, embedding(sub, dst)(sub.gen.value))
            checks.append((poly, target))
        for r in candidates:
            if all(poly(r) == target for poly, target in checks):
                break
        else:
            raise AssertionError("no compatible embedding")
        self.image = r
        # images of 1, t, t^2, ... as codes in dst
        powers = [dst.one]
        for _ in range(src.m - 1):
            powers.append(powers[-1] * r)
        self._basis = [x.value for x in powers]
        self._memo = {}

    def __call__(self, code):
        if self.image is None:
            if self.src.m == self.dst.m:
                return code
            return self.dst.from_int(code)
        out = self._memo.get(code)
        if out is None:
            dst = self.dst
            out = 0
            for c, b in zip(self.src.decode(code), self._basis):
                if c:
                    out = dst.add(out, dst.mul(dst.from_int(c), b))
            if len(self._memo) < 1 << 16:
                self._memo[code] = out
        return out


class FieldElement:
    """Immutable element of a finite tower level or of the complex backend."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.field, self.value))

    @property
    def is_complex(self):
        return self.field.kind == "complex"

    @property
    def degree(self):
        return self.field.m

    def lift(self, field):
        """Embed into a larger tower level."""
        if field is self.field:
            return self
        f = common_field(self.field, field)
        if f is not field:
            raise IncompatibleTower(f"cannot lift {self.field} into {field}")
        return FieldElement(field, embedding(self.field, field)(self.value))

    def coeffs(self):
        return self.field.decode(self.value)

    def is_zero(self):
        if self.field.kind == "complex":
            return abs(self.value) <= COMPLEX_RTOL
        return self.value == 0

    def __bool__(self):
        return not self.is_zero()

    def _pair(self, other):
        if isinstance(other, FieldElement):
            if other.field is self.field:
                return self.field, self.value, other.value
            f = common_field(self.field, other.field)
            return f, self.lift(f).value, other.lift(f).value
        if isinstance(other, int):
            f = self.field
            return f, self.value, f.from_int(other)
        if isinstance(other, complex) and self.field.kind == "complex":
            return self.field, self.value, other
        if isinstance(other, float) and self.field.kind == "complex":
            return self.field, self.value, complex(other)
        return None, None, None

    def __add__(self, other):
        f = self.field
        if other.__class__ is FieldElement and other.field is f:
            return FieldElement(f, f.add(self.value, other.value))
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.add(a, b))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        f = self.field
        if other.__class__ is FieldElement and other.field is f:
            return FieldElement(f, f.sub(self.value, other.value))
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.sub(a, b))

    def __rsub__(self, other):
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.sub(b, a))

    def __mul__(self, other):
        f = self.field
        if other.__class__ is FieldElement and other.field is f:
            return FieldElement(f, f.mul(self.value, other.value))
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.mul(a, b))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.mul(a, f.inv(b)))

    def __rtruediv__(self, other):
        f, a, b = self._pair(other)
        if f is None:
            return NotImplemented
        return FieldElement(f, f.mul(b, f.inv(a)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pos__(self):
        return self

    def inv(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __pow__(self, e):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement(self.field, self.field.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, (int, FieldElement)) or (
            isinstance(other, (complex, float)) and self.field.kind == "complex"
        ):
            try:
                f, a, b = self._pair(other)
            except IncompatibleTower:
                return False
            if f.kind == "complex":
                return abs(a - b) <= COMPLEX_RTOL * max(1.0, abs(a), abs(b))
            return a == b
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        # Equal elements at different tower levels must hash alike, so hash
        # the image in the prime field when possible and otherwise only p.
        if self.field.kind == "complex":
            return hash("complex")
        f = self.field
        if self.value % f._top == 0:
            return hash((f.p, self.value // f._top))
        return hash((f.p, "ext"))

    def sort_key(self):
        """Canonical enumeration order (finite) or (re, im) order (complex)."""
        if self.field.kind == "complex":
            return (round(self.value.real, 9), round(self.value.imag, 9))
        return (self.field.m, self.value)

    def __repr__(self):
        return f"FieldElement({self})"

    def __str__(self):
        f = self.field
        if f.kind == "complex":
            v = self.value
            return f"{v.real:g}{v.imag:+g}j"
        if f.m == 1:
            return str(self.value)
        terms = []
        for i, c in enumerate(self.coeffs()):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if i == 0:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}*{mono}")
        return "+".join(terms) if terms else "0"

    # -- JSON --
    def to_json(self):
        f = self.field
        if f.kind == "complex":
            return {"re": float(self.value.real), "im": float(self.value.imag)}
        return {"p": f.p, "m": f.m, "c": self.coeffs()}


COMPLEX = ComplexField()


def element_from_json(obj, default_field=None):
    """Decode {"p","m","c"}, {"re","im"} or a bare number (needs default_field)."""
    if isinstance(obj, dict):
        if "re" in obj or "im" in obj:
            return FieldElement(COMPLEX, complex(float(obj.get("re", 0.0)), float(obj.get("im", 0.0))))
        try:
            p, m, c = int(obj["p"]), int(obj["m"]), list(obj["c"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"bad field element encoding: {obj!r}") from exc
        if len(c) != m or any((not isinstance(x, int)) or not 0 <= x < p for x in c):
            raise ValueError(f"bad coefficient vector: {obj!r}")
        return GF(p, m)(c)
    if isinstance(obj, bool):
        raise ValueError("booleans are not field elements")
    if isinstance(obj, (int, float)) and default_field is not None:
        if default_field.kind == "complex":
            return default_field(obj)
        if isinstance(obj, float):
            raise ValueError("floats are only valid for the complex backend")
        return default_field(obj)
    raise ValueError(f"cannot decode field element from {obj!r}")


def enumerate_field(p, m=1, cap=DEFAULT_ENUM_CAP):
    """All elements of F_{p^m} in canonical order."""
    if p ** m > cap:
        raise CapExceeded(f"{p}^{m} = {p ** m} elements exceeds cap {cap}")
    return list(GF(p, m).elements())


def power_residue(a, k, level_m):
    """True when a (finite, nonzero) has a k-th root in F_{p^level_m}."""
    f = a.field
    Q = f.p ** level_m
    g = gcd(k, Q - 1)
    e = (Q - 1) // g
    return a ** (e % (f.order - 1)) == f.one
