"""Closed-form root constructions for the target shapes reached after the
coefficient-specific reductions.

Throughout, an element with <x, y> = 0 has power
(a, x; y, d)^k = (a^k, f x; f y, d^k) with f = f(a, d, k).
"""
from ..octonion import Octonion, conj, dot, f_poly, norm
from .context import octonion_root, require


def _vec(*vals):
    return tuple(vals)


def scalar_power(ctx, n, Z, k):
    """X with n X^k = Z for a nonzero scalar n, Z.eta != Z.zeta and <Z.x, Z.y> = 0."""
    Z = ctx.up(Z)
    require(not n.is_zero(), "scalar coefficient must be nonzero")
    require(dot(Z.x, Z.y).is_zero(), "target needs <x, y> = 0")
    require(Z.eta != Z.zeta, "target needs distinct diagonal entries")
    aX = ctx.root(Z.eta / n, k, "alpha_X")
    dX = ctx.root(ctx.up(Z.zeta) / n, k, "delta_X")
    f = f_poly(*ctx.up(aX, dX), k)
    tau = ctx.note("tau", (ctx.up(n) * f).inv())
    Z = ctx.up(Z)
    return Octonion(aX, [tau * v for v in Z.x], [tau * v for v in Z.y], dX)


def conjugate_reduction(ctx, A1, R, k):
    """X with A1 X^k = R for invertible A1.

    Multiplying by conj(A1) turns the problem into N(A1) X^k = conj(A1) R.
    Returns (X, closed_form) where closed_form is False when conj(A1) R is not
    of the shape handled by scalar_power and a general root was used instead.
    """
    n = norm(A1)
    require(not n.is_zero(), "coefficient must be invertible")
    Z = conj(A1) * R
    if dot(Z.x, Z.y).is_zero() and Z.eta != Z.zeta:
        return scalar_power(ctx, n, Z, k), True
    return octonion_root(ctx, Z.scale(n.inv()), k, "X"), False


def upper(ctx, a1, R, k):
    """X with diag(a1, 0) X^k = R for R = (alpha, b; 0, 0)."""
    R = ctx.up(R)
    require(all(v.is_zero() for v in R.y) and R.zeta.is_zero(), "target must be upper")
    aX = ctx.root(R.eta / a1, k, "alpha_X")
    dX = ctx.f_root(aX, k, ctx.up(a1).inv(), "delta_X")
    return Octonion(aX, ctx.up(R).x, (0, 0, 0), dX)


def lower(ctx, a8, R, k):
    """X with diag(0, a8) X^k = R for R = (0, 0; c, delta)."""
    R = ctx.up(R)
    require(all(v.is_zero() for v in R.x) and R.eta.is_zero(), "target must be lower")
    dX = ctx.root(R.zeta / a8, k, "delta_X")
    aX = ctx.f_root(dX, k, ctx.up(a8).inv(), "alpha_X")
    return Octonion(aX, (0, 0, 0), ctx.up(R).y, dX)


def nilpotent(ctx, s, R, k):
    """X with (0, s e1; 0, 0) X^k = R for R = (alpha, (b1, 0, 0); (0, c2, c3), 0).

    Left multiplication by (0, e1; 0, 0) only reads the entries y1, zeta, x2
    and x3 of its argument.
    """
    R = ctx.up(R).scale(ctx.up(s).inv())
    require(
        R.x[1].is_zero() and R.x[2].is_zero() and R.y[0].is_zero() and R.zeta.is_zero(),
        "target is outside the image of the nilpotent coefficient",
    )
    dX = ctx.root(R.x[0], k, "delta_X")
    aX = ctx.f_root(dX, k, ctx.level.one, "alpha_X")
    R = ctx.up(R)
    return Octonion(aX, _vec(0, R.y[2], -R.y[1]), _vec(R.eta, 0, 0), dX)
