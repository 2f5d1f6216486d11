"""Solve and classify entry points."""
import logging
import random

from ..errors import ClosureBoundExceeded, NoAdmissibleRoot, NotAPower, NotARepresentative, PreconditionViolated
from ..field import GF, common_field
from ..linalg import left_mult_matrix, mask_from_constraints, satisfies, solve_affine, span_constraints
from ..octonion import Octonion, norm, pow_iter
from ..representatives import match_catalog, nonsurjective_matches
from . import recipes
from .context import SolveContext, octonion_root
from .lemmas import conjugate_reduction, scalar_power
from .types import ObstructionWitness, ProblemInstance, SolveCertificate, SolverConfig, Verdict

log = logging.getLogger(__name__)

_RECIPE_ERRORS = (PreconditionViolated, ClosureBoundExceeded, NoAdmissibleRoot, NotAPower, ZeroDivisionError)


def _level(*octs):
    f = octs[0].field
    for o in octs[1:]:
        f = common_field(f, o.field)
    return f


def obstruction(A1, A2, A):
    """ObstructionWitness when A is outside the image, else None.

    An invertible coefficient makes the map onto.  With both coefficients
    singular the image is the span of the two left multiplications.
    """
    if not norm(A1).is_zero() or not norm(A2).is_zero():
        return None
    f = _level(A1, A2, A)
    cons = span_constraints(A1.lift(f), A2.lift(f))
    if not cons or satisfies(cons, A.lift(f)):
        return None
    violated = tuple(i for i, row in enumerate(cons) if not satisfies([row], A.lift(f)))
    matches = nonsurjective_matches(A1, A2)
    fam, swapped = matches[0] if matches else (None, False)
    return ObstructionWitness(fam, tuple(mask_from_constraints(cons)), violated, swapped)


def _recipe(ctx, A1, A2, k1, k2, A):
    """(X, Y, route) from the shape-specific constructions, or None."""
    if not norm(A1).is_zero():
        red = recipes.reduce_invertible(ctx, A1, A2, k2, A)
        if red is None:
            return None
        Y, R, route = red
        X, exact = conjugate_reduction(ctx, A1, R, k1)
        return X, Y, "invertible:" + route + ("" if exact else "+root")
    if not norm(A2).is_zero():
        return None
    out = recipes.solve_singular(ctx, A1, A2, k1, k2, A)
    if out is None:
        return None
    X, Y, route = out
    return X, Y, "singular:" + route


def _random_element(rng, field):
    if field.kind == "complex":
        return field(complex(rng.gauss(0, 1), rng.gauss(0, 1)))
    return field.element(rng.randrange(field.order))


def generic_solve(ctx, A1, A2, k1, k2, A, config):
    """Solve the linear system A1 W1 + A2 W2 = A, then take k-th roots of W1, W2.

    The affine solution space is sampled (the particular solution first, then
    seeded random points, moving up the tower every 32 misses) until both
    parts are powers.
    """
    f = ctx.level
    A1, A2, A = A1.lift(f), A2.lift(f), A.lift(f)
    M = [r1 + r2 for r1, r2 in zip(left_mult_matrix(A1), left_mult_matrix(A2))]
    v0, kernel = solve_affine(M, list(A.slots()), f)
    if v0 is None:
        raise PreconditionViolated("target is outside the image")
    rng = random.Random(config.seed)
    for attempt in range(config.attempts):
        level = ctx.level
        if attempt and attempt % 32 == 0 and level.kind == "finite" and 2 * level.m <= ctx.max_degree:
            ctx.level = level = GF(level.p, 2 * level.m)
        v = [s.lift(level) for s in v0]
        if attempt:
            for vec in kernel:
                t = _random_element(rng, level)
                v = [a + t * bv for a, bv in zip(v, vec)]
        W1, W2 = Octonion.from_slots(v[:8]), Octonion.from_slots(v[8:])
        sub = SolveContext(level, ctx.max_degree)
        try:
            X = octonion_root(sub, W1, k1, "X")
            Y = octonion_root(sub, W2, k2, "Y")
        except (NotAPower, ClosureBoundExceeded, NoAdmissibleRoot):
            continue
        ctx.level = sub.level
        ctx.trace.extend(sub.trace)
        return X, Y
    raise ClosureBoundExceeded(f"no power pair found in {config.attempts} samples")


def _attempt(field, config, fn):
    ctx = SolveContext(field, config.max_degree)
    try:
        out = fn(ctx)
    except _RECIPE_ERRORS as exc:
        log.debug("route failed: %s", exc)
        return None, ctx
    return out, ctx


def solve(inst, config=None):
    """SolveCertificate with A1 X^k1 + A2 Y^k2 = target, or ObstructionWitness."""
    config = config or SolverConfig()
    A1, A2, k1, k2, A = inst.A1, inst.A2, inst.k1, inst.k2, inst.target
    field = _level(A1, A2, A)
    A1, A2, A = A1.lift(field), A2.lift(field), A.lift(field)
    wit = obstruction(A1, A2, A)
    if wit is not None:
        return wit

    found = None
    for swapped in (False, True):
        B1, B2, j1, j2 = (A2, A1, k2, k1) if swapped else (A1, A2, k1, k2)
        out, ctx = _attempt(field, config, lambda c: _recipe(c, B1, B2, j1, j2, A))
        if out is not None:
            U, V, route = out
            found = (V, U, route + ":swapped") if swapped else (U, V, route)
            break
    if found is None:
        out, ctx = _attempt(field, config, lambda c: generic_solve(c, A1, A2, k1, k2, A, config))
        if out is None:
            raise ClosureBoundExceeded("no solution found within the degree bound")
        found = (*out, "generic")
    X, Y, route = found
    X, Y = ctx.up(X, Y)
    lhs = A1.lift(ctx.level) * pow_iter(X, k1) + A2.lift(ctx.level) * pow_iter(Y, k2)
    ok = lhs == A.lift(ctx.level)
    return SolveCertificate(X, Y, tuple(ctx.trace), ctx.degree, bool(ok), route)


def _pair_of(obj):
    if isinstance(obj, ProblemInstance):
        return obj.A1, obj.A2
    if hasattr(obj, "pair"):
        return obj.pair()
    A1, A2 = obj
    return A1, A2


def classify(obj):
    """Verdict for a representative, a ProblemInstance or a raw pair (A1, A2).

    A raw pair must equal a catalogue representative or match a non-surjective
    shape in one of the two orders.
    """
    A1, A2 = _pair_of(obj)
    if A1.is_zero() or A2.is_zero():
        raise PreconditionViolated("coefficients must be nonzero")
    matches = nonsurjective_matches(A1, A2)
    if not hasattr(obj, "pair") and not matches:
        if match_catalog(A1, A2) is None and match_catalog(A2, A1) is None:
            raise NotARepresentative("pair is neither a catalogue representative nor a known non-surjective shape")
    if not matches:
        return Verdict(True)
    fam, swapped = matches[0]
    f = common_field(A1.field, A2.field)
    cons = span_constraints(A1.lift(f), A2.lift(f))
    return Verdict(False, fam, tuple(mask_from_constraints(cons)), swapped, tuple(matches))


# -- single-step entry points --

def _finish(ctx, X, Y, ok, route):
    return SolveCertificate(X, Y, tuple(ctx.trace), ctx.degree, bool(ok), route)


def solve_scalar_power(A, alpha1, k1, config=None):
    """Certificate (Y is None) for alpha1 X^k1 = A; A needs eta != zeta and <x, y> = 0."""
    config = config or SolverConfig()
    f = common_field(A.field, alpha1.field)
    ctx = SolveContext(f, config.max_degree)
    X = scalar_power(ctx, alpha1.lift(f), A.lift(f), k1)
    X = ctx.up(X)
    ok = pow_iter(X, k1).scale(alpha1.lift(ctx.level)) == A.lift(ctx.level)
    return _finish(ctx, X, None, ok, "scalar")


def invertible_case(A1, A2):
    """Roman case label of an invertible diagonal or K1-shaped A1, else None.

    Diagonal A1: I (A2 diagonal), II (A2 = (b1, e1; 0, b8)), III (A2 with e1 and
    a lower row (b5, b6, 0)).  K1-shaped A1: IV (A2 diagonal), V (A2 upper
    triangular), VI (A2 lower triangular).
    """
    if recipes.is_diag_invertible(A1):
        if recipes.fits(A2, "azzzzzza"):
            return "I"
        if recipes.fits(A2, "a1zzzzza"):
            return "II"
        if recipes.fits(A2, "a1zzaaza"):
            return "III"
        return None
    if recipes.is_k1(A1):
        if recipes.fits(A2, "azzzzzza"):
            return "IV"
        if recipes.fits(A2, "aaazzzza"):
            return "V"
        if recipes.fits(A2, "azzzaaza"):
            return "VI"
    return None


def reduce_invertible_case(A, pair, k2, case=None, config=None):
    """(Y, residual) with residual = A - A2 Y^k2 reducible to a scalar power.

    `pair` is an OrbitRepresentative or (A1, A2) with A1 invertible and of
    diagonal or K1 shape.  When `case` is given it must match the pair.
    """
    config = config or SolverConfig()
    A1, A2 = _pair_of(pair)
    found = invertible_case(A1, A2)
    if found is None or (case is not None and case != found):
        raise PreconditionViolated(f"pair does not have invertible case shape {case or ''}".rstrip())
    ctx = SolveContext(_level(A1, A2, A), config.max_degree)
    red = recipes.reduce_invertible(ctx, A1.lift(ctx.level), A2.lift(ctx.level), k2, A)
    if red is None:
        raise PreconditionViolated("no reduction for this pair")
    Y, R, _ = red
    return ctx.up(Y), ctx.up(R)


def apply_conjugate_reduction(residual, A1, k1, config=None):
    """Certificate (Y is None) for A1 X^k1 = residual with A1 invertible.

    The closed form applies when conj(A1) residual has distinct diagonal
    entries and orthogonal off-diagonal vectors (route "conjugate"); other
    residuals fall back to a general k-th root (route "conjugate+root").
    """
    config = config or SolverConfig()
    f = common_field(residual.field, A1.field)
    ctx = SolveContext(f, config.max_degree)
    A1, R = A1.lift(f), residual.lift(f)
    if norm(A1).is_zero():
        raise PreconditionViolated("coefficient must be invertible")
    X, exact = conjugate_reduction(ctx, A1, R, k1)
    X = ctx.up(X)
    ok = A1.lift(ctx.level) * pow_iter(X, k1) == R.lift(ctx.level)
    return _finish(ctx, X, None, ok, "conjugate" if exact else "conjugate+root")


def solve_invertible(inst, config=None):
    """Certificate for an instance where one coefficient is invertible."""
    if norm(inst.A1).is_zero() and norm(inst.A2).is_zero():
        raise PreconditionViolated("one coefficient must be invertible")
    return solve(inst, config)


def solve_noninvertible(inst, config=None):
    """Certificate or ObstructionWitness for an instance with both coefficients singular."""
    if not norm(inst.A1).is_zero() or not norm(inst.A2).is_zero():
        raise PreconditionViolated("both coefficients must be singular")
    return solve(inst, config)
