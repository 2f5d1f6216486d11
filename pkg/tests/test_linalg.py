import itertools

from octowaring.field import GF
from octowaring.linalg import (
    left_mult_matrix,
    mask_from_constraints,
    nullspace,
    rank,
    rref,
    satisfies,
    solve_affine,
    span_constraints,
)
from octowaring.octonion import Octonion


def _m(F, rows):
    return [[F(v) for v in r] for r in rows]


def test_rref_and_rank():
    F = GF(5)
    red, piv = rref(_m(F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]]))
    assert piv == [0, 1]
    assert red == _m(F, [[1, 0, 1], [0, 1, 1]])
    assert rank(_m(F, [[0, 0], [0, 0]])) == 0


def test_nullspace_annihilates():
    F = GF(7)
    M = _m(F, [[1, 2, 3, 4], [0, 1, 5, 6]])
    ker = nullspace(M, 4, F)
    assert len(ker) == 2
    for v in ker:
        for row in M:
            assert sum((a * b for a, b in zip(row, v)), F.zero) == 0


def test_solve_affine():
    F = GF(3)
    M = _m(F, [[1, 1], [1, 2]])
    v, ker = solve_affine(M, [F(2), F(0)], F)
    assert ker == []
    assert [M[0][0] * v[0] + M[0][1] * v[1], M[1][0] * v[0] + M[1][1] * v[1]] == [2, 0]
    v, _ = solve_affine(_m(F, [[1, 1], [1, 1]]), [F(1), F(2)], F)
    assert v is None


def test_left_mult_matrix_is_left_multiplication(rng):
    F = GF(5)
    A = Octonion.from_slots([F(rng.randrange(5)) for _ in range(8)])
    W = Octonion.from_slots([F(rng.randrange(5)) for _ in range(8)])
    L = left_mult_matrix(A)
    got = [sum((c * w for c, w in zip(row, W.slots())), F.zero) for row in L]
    assert got == list((A * W).slots())


def _image_by_enumeration(A1, A2, F):
    pts = set()
    for w in itertools.product(list(F.elements()), repeat=8):
        W = Octonion.from_slots(w)
        pts.add(A1 * W)
        pts.add(A2 * W)
    return pts


def test_span_constraints_cut_out_the_span():
    F = GF(2)
    A1 = Octonion.from_ints(F, 1, (0, 0, 0), (0, 0, 0), 0)
    A2 = Octonion.from_ints(F, 1, (0, 0, 0), (0, 0, 0), 0)
    cons = span_constraints(A1, A2)
    # (1, 0; 0, 0) W keeps eta and x: y and zeta are pinned to zero
    assert mask_from_constraints(cons) == ["free"] * 4 + ["zero"] * 4
    for P in _image_by_enumeration(A1, A2, F):
        assert satisfies(cons, P)


def test_span_constraints_surjective_pair():
    F = GF(3)
    assert span_constraints(Octonion.unit(F), Octonion.diag(1, 0, F)) == []


def test_mask_linked():
    F = GF(5)
    # x1 - 2*y3 = 0  ->  x1 linked to 2*y3
    row = [F(0), F(1), F(0), F(0), F(0), F(0), F(-2), F(0)]
    assert mask_from_constraints([row]) == ["free", "linked:x1=2*y3"] + ["free"] * 6
