"""Small exact linear algebra over FieldElement matrices (lists of rows)."""
from .field import common_field
from .octonion import SLOTS, Octonion


def rref(rows):
    """Reduced row echelon form with leftmost pivots scaled to 1.

    Returns (reduced nonzero rows, pivot columns).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inv()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows):
    return len(rref(rows)[1])


def nullspace(rows, ncols, field):
    """Basis of {v : M v = 0} for M given by its rows."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * ncols
        v[fc] = field.one
        for row, pc in zip(red, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve_affine(rows, rhs, field):
    """Particular solution and kernel basis of M v = rhs, or (None, None)."""
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None, None
    v = [field.zero] * ncols
    for row, pc in zip(red, pivots):
        v[pc] = row[ncols]
    return v, nullspace(rows, ncols, field)


def transpose(rows):
    return [list(c) for c in zip(*rows)]


def left_mult_matrix(A):
    """8x8 matrix (rows) of W -> A W in slot coordinates."""
    f = A.field
    cols = []
    for i in range(8):
        e = [f.zero] * 8
        e[i] = f.one
        cols.append((A * Octonion.from_slots(e)).slots())
    return transpose(cols)


def span_constraints(A1, A2):
    """RREF rows w with <w, A1 U + A2 V> = 0 for all U, V.

    These cut out the span of the two left multiplications, which is the
    image of the map over the closure when both coefficients are singular.
    """
    f = common_field(A1.field, A2.field)
    A1, A2 = A1.lift(f), A2.lift(f)
    M = [r1 + r2 for r1, r2 in zip(left_mult_matrix(A1), left_mult_matrix(A2))]
    ann = nullspace(transpose(M), 8, f)
    red, _ = rref(ann) if ann else ([], [])
    return red


def mask_from_constraints(constraints):
    """Slot pattern: "free", "zero" or "linked:<slot>=<expr>" for each slot."""
    mask = ["free"] * 8
    for row in constraints:
        pc = next(i for i, v in enumerate(row) if not v.is_zero())
        terms = []
        for j in range(pc + 1, 8):
            c = row[j]
            if c.is_zero():
                continue
            coef = -c
            s = str(coef)
            if coef == coef.field.one:
                terms.append(SLOTS[j])
            else:
                if not s.isdigit():
                    s = f"({s})"
                terms.append(f"{s}*{SLOTS[j]}")
        mask[pc] = "zero" if not terms else f"linked:{SLOTS[pc]}=" + "+".join(terms)
    return mask


def satisfies(constraints, A):
    """True when the octonion A satisfies every constraint row."""
    s = A.slots()
    for row in constraints:
        acc = None
        for c, v in zip(row, s):
            t = c * v
            acc = t if acc is None else acc + t
        if not acc.is_zero():
            return False
    return True
