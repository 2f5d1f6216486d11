"""Working state shared by the solver steps: current tower level, root
extraction, canonical choices and the trace of chosen scalars."""
from ..errors import ClosureBoundExceeded, NotAPower, PreconditionViolated
from ..field import GF, Poly, kth_root_closure, poly_roots_avoiding
from ..octonion import Octonion, norm, trace


class SolveContext:
    def __init__(self, field, max_degree):
        self.level = field
        self.max_degree = max_degree
        self.trace = []

    @property
    def degree(self):
        return 1 if self.level.kind == "complex" else self.level.m

    def note(self, name, value):
        self.trace.append((name, value))
        return value

    def _adopt(self, e):
        if e.field.kind == "finite" and e.field.m > self.level.m:
            self.level = e.field
        return e.lift(self.level)

    def up(self, *items):
        """Lift elements or octonions to the current level."""
        out = tuple(v.lift(self.level) for v in items)
        return out if len(out) != 1 else out[0]

    def root(self, a, k, name=None):
        """Canonical k-th root of a, extending the level when needed."""
        r, _ = kth_root_closure(a.lift(self.level), k, self.max_degree, base=self.level)
        r = self._adopt(r)
        return self.note(name, r) if name else r

    def f_root(self, known, k, target, name=None):
        """u with f(u, known, k) = target; f is symmetric in its two arguments."""
        known, target = self.up(known, target)
        coeffs = [known ** (k - 1 - j) for j in range(k)]
        coeffs[0] = coeffs[0] - target
        r = poly_roots_avoiding(Poly(coeffs), (), self.max_degree, base=self.level)
        r = self._adopt(r)
        return self.note(name, r) if name else r

    def solve_poly(self, poly):
        return self._adopt(poly_roots_avoiding(poly, (), self.max_degree, base=self.level))

    def candidates(self):
        """Canonical scan of the current level, then of doubled levels."""
        if self.level.kind == "complex":
            n = 0
            while True:
                yield self.level(n)
                n += 1
        while True:
            f = self.level
            for e in f.elements():
                yield e
            if 2 * f.m > self.max_degree:
                return
            self.level = GF(f.p, 2 * f.m)

    def choose(self, ok, name=None, limit=4096):
        """First candidate c (canonical order) with ok(c) true."""
        for i, c in enumerate(self.candidates()):
            if i >= limit:
                break
            if ok(c):
                return self.note(name, c) if name else c
        raise ClosureBoundExceeded("no admissible parameter within the degree bound")


def octonion_root(ctx, Z, k, tag=""):
    """Some X with X^k = Z, or NotAPower.

    Every element lies in the commutative subalgebra generated by itself, where
    it satisfies t^2 - T t + N = 0; roots are read off from the eigenvalues.
    """
    Z = ctx.up(Z)
    one = ctx.level.one
    if all(v.is_zero() for v in Z.x + Z.y) and Z.eta == Z.zeta:
        mu = ctx.root(Z.eta, k, f"mu{tag}")
        return Octonion.scalar(mu)
    T, N = trace(Z), norm(Z)
    lam1 = ctx.solve_poly(Poly([N, -T, one]))
    lam2 = ctx.up(T) - lam1
    Z = ctx.up(Z)
    if lam1 != lam2:
        mu1 = ctx.root(lam1, k, f"mu{tag}_1")
        mu2 = ctx.root(lam2, k, f"mu{tag}_2")
        mu1, mu2, lam1, lam2 = ctx.up(mu1, mu2, lam1, lam2)
        s = (mu1 - mu2) / (lam1 - lam2)
        t = mu1 - s * lam1
        X = Z.scale(s)
        return Octonion(X.eta + t, X.x, X.y, X.zeta + t)
    if lam1.is_zero() or (ctx.level.kind == "finite" and k % ctx.level.p == 0):
        raise NotAPower("repeated eigenvalue with no k-th root")
    mu = ctx.root(lam1, k, f"mu{tag}")
    mu, lam1 = ctx.up(mu, lam1)
    c = (ctx.level(k) * mu ** (k - 1)).inv()
    Z = ctx.up(Z)
    n = Octonion(Z.eta - lam1, Z.x, Z.y, Z.zeta - lam1).scale(c)
    return Octonion(n.eta + mu, n.x, n.y, n.zeta + mu)


def require(cond, msg):
    if not cond:
        raise PreconditionViolated(msg)
