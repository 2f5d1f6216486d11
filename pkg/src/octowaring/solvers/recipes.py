"""Shape-specific constructions of (X, Y) with A1 X^k1 + A2 Y^k2 = A.

Shapes are recognised from the slot supports of the pair itself, so raw pairs
that happen to equal a catalogue representative take the same route.  Each
recipe either returns (X, Y, route) or raises, in which case the caller falls
back to the generic construction.
"""
from ..octonion import Octonion, conj, pow_ch
from . import lemmas
from .context import require


def fits(A, pattern):
    """Slot pattern check: z zero, n nonzero, 1 one, a anything."""
    one = A.field.one
    for code, v in zip(pattern, A.slots()):
        if code == "z" and not v.is_zero():
            return False
        if code == "n" and v.is_zero():
            return False
        if code == "1" and v != one:
            return False
    return True


def is_diag_invertible(A):
    return fits(A, "nzzzzzzn")


def is_k1(A):
    return fits(A, "n1zzzzzn") and A.eta == A.zeta


def _O(eta, x, y, zeta):
    return Octonion(eta, tuple(x), tuple(y), zeta)


def _pick(ctx, name, build, A1, A2, k2, A):
    """Choose the free parameter of Y so that conj(A1) R has distinct diagonal."""
    C = conj(A1)

    def ok(c):
        try:
            Y = build(c)
        except ZeroDivisionError:
            return False
        Z = C * (A - A2 * pow_ch(Y, k2))
        return Z.eta != Z.zeta

    c = ctx.choose(ok, name)
    Y = build(c)
    return Y, ctx.up(A - A2 * pow_ch(Y, k2))


# -- invertible A1: Y is chosen so that conj(A1)(A - A2 Y^k2) is a scalar power --

def reduce_invertible(ctx, A1, A2, k2, A):
    """(Y, residual, route) for a recognised invertible A1, else None."""
    diag, k1 = is_diag_invertible(A1), is_k1(A1)
    if not (diag or k1):
        return None
    A = ctx.up(A)
    a1 = A1.eta
    al, b, c, de = A.eta, A.x, A.y, A.zeta
    b1, b8 = A2.eta, A2.zeta
    k = k2

    # A2 = (b1, (s, 0, 0); 0, b8) with b1 != 0: kill x with an upper Y
    if fits(A2, "nazzzzza") and not b1.is_zero():
        tx = (de / a1, 0, 0) if k1 else (0, 0, 0)

        def build(aY):
            if aY.is_zero():
                raise ZeroDivisionError
            t = (b1 * aY ** (k - 1)).inv()
            return _O(aY, [t * (bi - ti) for bi, ti in zip(b, tx)], (0, 0, 0), 0)

        return (*_pick(ctx, "alpha_Y", build, A1, A2, k, A), "upper")

    # A2 = diag(0, b8): kill y with a lower Y
    if fits(A2, "zzzzzzzn"):
        cx = (0, -b[2] / a1, b[1] / a1) if k1 else (0, 0, 0)

        def build(dY):
            if dY.is_zero():
                raise ZeroDivisionError
            t = (b8 * dY ** (k - 1)).inv()
            return _O(0, (0, 0, 0), [t * (ci - xi) for ci, xi in zip(c, cx)], dY)

        return (*_pick(ctx, "delta_Y", build, A1, A2, k, A), "lower")

    if diag and fits(A2, "z1zzzzza"):
        # A2 = (0, e1; 0, b8)
        dY = ctx.root(b[0], k, "delta_Y")
        aY = ctx.f_root(dY, k, ctx.level.one, "alpha_Y")
        build = lambda tau: _O(aY, (0, c[2], -c[1]), (tau, 0, 0), dY)
        return (*_pick(ctx, "tau", build, A1, A2, k, A), "e1-nilpotent")

    if diag and fits(A2, "a1zznzza"):
        # A2 = (b1, e1; (b5, 0, 0), b8)
        dY = ctx.root(b[0], k, "delta_Y")
        aY = ctx.f_root(dY, k, ctx.level.one, "alpha_Y")
        build = lambda tau: _O(aY, (0, c[2], -c[1]), (tau, 0, 0), dY)
        return (*_pick(ctx, "tau", build, A1, A2, k, A), "e1-y1")

    if diag and fits(A2, "a1zzznza"):
        # A2 = (b1, e1; (0, b6, 0), b8)
        b6 = A2.y[1]
        dY = ctx.root(b[0], k, "delta_Y")
        aY = ctx.f_root(dY, k, ctx.level.one, "alpha_Y")
        w = b6 * aY ** k - c[1]
        build = lambda tau: _O(aY, (0, c[2], w), (tau, 0, 0), dY)
        return (*_pick(ctx, "tau", build, A1, A2, k, A), "e1-y2")

    if fits(A2, "az1zzzza"):
        # A2 = (b1, e2; 0, b8)
        dY = ctx.root(b[1], k, "delta_Y")
        aY = ctx.f_root(dY, k, ctx.level.one, "alpha_Y")
        build = lambda g: _O(aY, (-c[2], 0, c[0]), (0, g, 0), dY)
        return (*_pick(ctx, "gamma", build, A1, A2, k, A), "e2")

    if not k1:
        return None

    if fits(A2, "znzzzzza") and a1 * A2.x[0] != b8:
        # A2 = (0, (b2, 0, 0); 0, b8)
        b2 = A2.x[0]
        dk = (a1 * b[0] - de) / (a1 * b2 - b8)
        dY = ctx.root(dk, k, "delta_Y")
        aY = ctx.f_root(dY, k, ctx.level.one, "alpha_Y")
        w = -(c[1] + b[2] / a1) / b2
        u = (c[2] - b[1] / a1) / b2
        build = lambda tau: _O(aY, (0, u, w), (tau, 0, 0), dY)
        return (*_pick(ctx, "tau", build, A1, A2, k, A), "k1-e1")

    if fits(A2, "azzznzza"):
        # A2 = (b1, 0; (b5, 0, 0), b8)
        b5 = A2.y[0]
        aY = ctx.root(c[0] / b5, k, "alpha_Y")
        dY = ctx.f_root(aY, k, ctx.level.one, "delta_Y")
        g2, g3 = -b[2] / b5, b[1] / b5
        build = lambda tau: _O(aY, (tau, 0, 0), (0, g2, g3), dY)
        return (*_pick(ctx, "tau", build, A1, A2, k, A), "y1")

    if fits(A2, "azzzz1za"):
        # A2 = (b1, 0; e2, b8)
        aY = ctx.root(c[1], k, "alpha_Y")
        dY = ctx.f_root(aY, k, ctx.level.one, "delta_Y")

        def build(t):
            r8 = de - b8 * dY ** k - t
            return _O(aY, (0, t, 0), (b[2], 0, r8 / a1 - b[0]), dY)

        return (*_pick(ctx, "t", build, A1, A2, k, A), "y2")
    return None


# -- both coefficients singular --

def solve_singular(ctx, A1, A2, k1, k2, A):
    """(X, Y, route) for a recognised singular pair, else None.

    The target is assumed to lie in the image (checked by the caller).
    """
    A = ctx.up(A)
    al, b, c, de = A.eta, A.x, A.y, A.zeta
    zero = Octonion.zero(ctx.level)

    def finish_upper(Y, route):
        R = A - A2 * pow_ch(Y, k2)
        return lemmas.upper(ctx, A1.eta, R, k1), Y, route

    def finish_lower(Y, route):
        R = A - A2 * pow_ch(Y, k2)
        return lemmas.lower(ctx, A1.zeta, R, k1), Y, route

    def finish_nil(Y, route):
        R = A - A2 * pow_ch(Y, k2)
        return lemmas.nilpotent(ctx, A1.x[0], R, k1), Y, route

    if fits(A1, "nzzzzzzz"):
        a1 = A1.eta
        if fits(A2, "nzzzzzzz"):
            return finish_upper(zero, "upper-upper")
        if fits(A2, "zzzzzzzn"):
            return lemmas.upper(ctx, a1, _O(al, b, (0, 0, 0), 0), k1), lemmas.lower(
                ctx, A2.zeta, _O(0, (0, 0, 0), c, de), k2
            ), "upper-lower"
        if fits(A2, "a1zzaazn"):
            # A2 = (b1, e1; (b5, b6, 0), b8) with b8 != 0
            b8 = A2.zeta
            dY = ctx.root(de / b8, k2, "delta_Y")
            aY = ctx.f_root(dY, k2, b8.inv(), "alpha_Y")
            v = A2.y
            ak = aY ** k2
            Y = _O(aY, (0, 0, 0), [ci - ak * vi for ci, vi in zip(c, v)], dY)
            return finish_upper(Y, "upper-e1")
        return None

    if fits(A1, "zzzzzzzn"):
        a8 = A1.zeta
        if fits(A2, "zzzzzzzn"):
            return finish_lower(zero, "lower-lower")
        if fits(A2, "nzzzzzzz"):
            return lemmas.lower(ctx, a8, _O(0, (0, 0, 0), c, de), k1), lemmas.upper(
                ctx, A2.eta, _O(al, b, (0, 0, 0), 0), k2
            ), "lower-upper"
        if fits(A2, "n1zzaaza"):
            # A2 = (b1, e1; (b5, b6, 0), b8) with b1 != 0
            b1 = A2.eta
            aY = ctx.root(al / b1, k2, "alpha_Y")
            dY = ctx.f_root(aY, k2, ctx.level.one, "delta_Y")
            dk = dY ** k2
            Y = _O(aY, [(b[0] - dk) / b1, b[1] / b1, b[2] / b1], (0, 0, 0), dY)
            return finish_lower(Y, "lower-e1")
        return None

    if fits(A1, "znzzzzzz"):
        if fits(A2, "znzzzzzz"):
            return finish_nil(zero, "nilpotent-nilpotent")
        if fits(A2, "zz1zzzzn"):
            b8 = A2.zeta
            dY = ctx.root(de / b8, k2, "delta_Y")
            aY = ctx.f_root(dY, k2, ctx.level.one, "alpha_Y")
            return finish_nil(_O(aY, (0, 0, 0), [ci / b8 for ci in c], dY), "nilpotent-e2-lower")
        if fits(A2, "nz1zzzzz"):
            b1 = A2.eta
            return finish_nil(_O(1, (0, b[1] / b1, c[0]), (0, 0, 0), 0), "nilpotent-e2-upper")
        if fits(A2, "zz1zzzzz"):
            dY = ctx.root(b[1], k2, "delta_Y")
            aY = ctx.f_root(dY, k2, ctx.level.one, "alpha_Y")
            return finish_nil(_O(aY, (0, 0, c[0]), (0, 0, 0), dY), "nilpotent-e2")
        if fits(A2, "azzznzza"):
            # A2 = (b1, 0; (b5, 0, 0), b8)
            b5, b8 = A2.y[0], A2.zeta
            aY = ctx.root(c[0] / b5, k2, "alpha_Y")
            dY = ctx.f_root(aY, k2, ctx.level.one, "delta_Y")
            tau = (de - b8 * dY ** k2) / b5
            Y = _O(aY, (tau, 0, 0), (0, -b[2] / b5, b[1] / b5), dY)
            return finish_nil(Y, "nilpotent-y1")
        if fits(A2, "zzzzz1zz"):
            return finish_nil(_O(0, (0, de, 0), (b[2], 0, 0), 1), "nilpotent-y2")
        return None
    return None


def require_shape(cond, msg="unrecognised shape"):
    require(cond, msg)
