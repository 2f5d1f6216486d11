import json
import random

import pytest

from octowaring.errors import NotARepresentative, PreconditionViolated
from octowaring.field import COMPLEX, GF
from octowaring.octonion import Octonion, conj, dot, pow_iter
from octowaring.representatives import FAMILY_PARAMS, OrbitRepresentative
from octowaring.solvers import (
    ObstructionWitness,
    ProblemInstance,
    SolveCertificate,
    Verdict,
    apply_conjugate_reduction,
    classify,
    invertible_case,
    reduce_invertible_case,
    solve,
    solve_invertible,
    solve_noninvertible,
    solve_scalar_power,
)

from conftest import rand_oct, random_surjective_rep

F7 = GF(7)


def O(F, *slots):
    return Octonion.from_ints(F, slots[0], slots[1:4], slots[4:7], slots[7])


def _check(cert, inst):
    assert isinstance(cert, SolveCertificate)
    assert cert.verified
    L = cert.X.field
    lhs = inst.A1.lift(L) * pow_iter(cert.X, inst.k1) + inst.A2.lift(L) * pow_iter(cert.Y, inst.k2)
    assert lhs == inst.target


# -- single-term solver --

def test_scalar_power_diagonal():
    A = Octonion.diag(2, 4, F7)
    cert = solve_scalar_power(A, F7.one, 2)
    X = cert.X
    assert all(v.is_zero() for v in X.x + X.y)
    assert X.eta ** 2 == 2 and X.zeta ** 2 == 4
    assert cert.Y is None and cert.verified


def test_scalar_power_examples():
    cert = solve_scalar_power(Octonion.diag(1, 2, F7), F7(2), 2)
    assert cert.verified
    assert pow_iter(cert.X, 2).scale(F7(2).lift(cert.X.field)) == Octonion.diag(1, 2, F7)
    A = O(F7, 1, 1, 0, 0, 0, 1, 0, 2)
    cert = solve_scalar_power(A, F7.one, 3)
    assert cert.verified and pow_iter(cert.X, 3) == A


def test_scalar_power_trace_names():
    cert = solve_scalar_power(O(F7, 3, 1, 2, 0, 0, 0, 5, 1), F7(2), 2)
    names = [n for n, _ in cert.trace]
    assert names[:2] == ["alpha_X", "delta_X"]


def test_scalar_power_preconditions():
    with pytest.raises(PreconditionViolated):
        solve_scalar_power(Octonion.diag(3, 3, F7), F7.one, 2)
    with pytest.raises(PreconditionViolated):
        solve_scalar_power(O(F7, 1, 1, 0, 0, 1, 0, 0, 2), F7.one, 2)


def test_scalar_power_extends_tower():
    # 3 and 5 are non-squares mod 7
    cert = solve_scalar_power(Octonion.diag(3, 5, F7), F7.one, 2)
    assert cert.verified and cert.max_tower_degree == 2


def test_scalar_power_char_divides_k():
    # f(a, d, k) must stay nonzero when p | k; a^k != d^k guarantees it
    F = GF(3)
    cert = solve_scalar_power(O(F, 1, 1, 0, 0, 0, 0, 1, 2), F.one, 3)
    assert cert.verified


# -- invertible cases --

def _conj_reduced(A1, R):
    Z = conj(A1.lift(R.field)) * R
    return Z.eta != Z.zeta and dot(Z.x, Z.y).is_zero()


def test_case_one_residual_shape(rng):
    F = GF(7, 2)
    rep = OrbitRepresentative.make("DD", F, alpha1=2, alpha8=3, beta1=4, beta8=5)
    assert invertible_case(*rep.pair()) == "I"
    for _ in range(20):
        A = rand_oct(rng, F)
        Y, R = reduce_invertible_case(A, rep, 2, case="I")
        A1, A2 = rep.pair()
        assert R == A - A2.lift(Y.field) * pow_iter(Y, 2)
        assert _conj_reduced(A1, R)


def test_case_two_with_beta1_zero(rng):
    rep = OrbitRepresentative.make("FK", F7, alpha1=2, alpha8=3, beta1=0, beta8=5)
    assert invertible_case(*rep.pair()) == "II"
    for _ in range(20):
        Y, R = reduce_invertible_case(rand_oct(rng, F7), rep, 3)
        assert R.x[0].is_zero()
        assert R.y[1].is_zero() and R.y[2].is_zero()
        assert R.eta / GF(7)(2) * GF(7)(3) != R.zeta


def test_reduce_zero_target():
    rep = OrbitRepresentative.make("K1F", F7, alpha1=2, beta1=3, beta8=5)
    assert invertible_case(*rep.pair()) == "IV"
    Y, R = reduce_invertible_case(Octonion.zero(F7), rep, 2)
    assert _conj_reduced(rep.pair()[0], R)


def test_reduce_wrong_case():
    rep = OrbitRepresentative.make("DD", F7, alpha1=2, alpha8=3, beta1=4, beta8=5)
    with pytest.raises(PreconditionViolated):
        reduce_invertible_case(Octonion.zero(F7), rep, 2, case="V")


def test_apply_conjugate_reduction(rng):
    A1 = Octonion.diag(2, 3, F7)
    cert = apply_conjugate_reduction(Octonion.diag(2, 5, F7), A1, 2)
    assert cert.verified and cert.route == "conjugate"
    # residual equal to A1: X = unit is the canonical root
    cert = apply_conjugate_reduction(A1, A1, 2)
    assert cert.X == Octonion.unit(F7)
    F = GF(3, 2)
    A1 = Octonion.diag(F.gen, 1, F)
    for _ in range(20):
        R = rand_oct(rng, F)
        cert = apply_conjugate_reduction(R, A1, 2)
        assert cert.verified
        assert A1.lift(cert.X.field) * pow_iter(cert.X, 2) == R


def test_solve_invertible_examples():
    U = Octonion.unit(F7)
    inst = ProblemInstance(U, U, 2, 2, Octonion.diag(5, 0, F7))
    _check(solve_invertible(inst), inst)
    inst = ProblemInstance(U, U, 2, 3, Octonion.zero(F7))
    _check(solve_invertible(inst), inst)


def test_ek1_nilpotent_second(rng):
    for _ in range(20):
        rep = OrbitRepresentative.make("EK1", F7, alpha1=rng.randrange(1, 7), beta1=0)
        inst = ProblemInstance.from_rep(rep, 2, 3, rand_oct(rng, F7))
        _check(solve(inst), inst)


def test_solve_invertible_rejects_singular():
    E = O(F7, 0, 1, 0, 0, 0, 0, 0, 0)
    with pytest.raises(PreconditionViolated):
        solve_invertible(ProblemInstance(E, E, 2, 2, Octonion.zero(F7)))
    with pytest.raises(PreconditionViolated):
        solve_noninvertible(ProblemInstance(Octonion.unit(F7), E, 2, 2, Octonion.zero(F7)))


# -- singular coefficients --

def test_dd_corner_pair_is_onto(rng):
    # diag(a1, 0) and diag(0, b8)
    rep = OrbitRepresentative.make("DD", F7, alpha1=3, alpha8=0, beta1=0, beta8=2)
    for _ in range(20):
        inst = ProblemInstance.from_rep(rep, 2, 3, rand_oct(rng, F7))
        _check(solve_noninvertible(inst), inst)


def test_nilpotent_pair_in_and_out_of_image():
    E = O(F7, 0, 1, 0, 0, 0, 0, 0, 0)
    inst = ProblemInstance(E, E, 2, 2, O(F7, 3, 2, 0, 0, 0, 5, 6, 0))
    _check(solve_noninvertible(inst), inst)
    wit = solve(ProblemInstance(E, E, 2, 2, Octonion.diag(0, 1, F7)))
    assert isinstance(wit, ObstructionWitness)
    assert wit.family == 5
    assert wit.mask[7] == "zero"


def test_singular_recipes(rng):
    # one singular pair per route (b1 b8 = b5 keeps A2 singular); targets come
    # from the span so they are solvable
    F = GF(5)
    shapes = [
        ((1, 0, 0, 0, 0, 0, 0, 0), (2, 1, 0, 0, 2, 4, 0, 1)),
        ((0, 0, 0, 0, 0, 0, 0, 2), (3, 1, 0, 0, 2, 2, 0, 4)),
        ((0, 2, 0, 0, 0, 0, 0, 0), (0, 0, 1, 0, 0, 0, 0, 3)),
        ((0, 2, 0, 0, 0, 0, 0, 0), (4, 0, 1, 0, 0, 0, 0, 0)),
        ((0, 1, 0, 0, 0, 0, 0, 0), (0, 0, 0, 0, 2, 0, 0, 3)),
    ]
    for s1, s2 in shapes:
        A1, A2 = O(F, *s1), O(F, *s2)
        for _ in range(10):
            target = A1 * rand_oct(rng, F) + A2 * rand_oct(rng, F)
            inst = ProblemInstance(A1, A2, 2, 3, target)
            cert = solve(inst)
            _check(cert, inst)
            assert cert.route.startswith("singular:")


# -- dispatcher properties --

@pytest.mark.parametrize("tag", sorted(FAMILY_PARAMS))
def test_surjective_families_solve(tag):
    rng = random.Random(tag)
    for F in (GF(5), GF(7), GF(2), GF(3)):
        rep = random_surjective_rep(tag, F, rng)
        if rep is None:
            continue
        for _ in range(4):
            k1, k2 = rng.choice([2, 3]), rng.choice([2, 3])
            inst = ProblemInstance.from_rep(rep, k1, k2, rand_oct(rng, F))
            cert = solve(inst)
            _check(cert, inst)
            assert cert.max_tower_degree <= 24
            assert not cert.route.endswith("+root")


def test_swap_symmetry(rng):
    for tag in FAMILY_PARAMS:
        rep = random_surjective_rep(tag, F7, rng)
        inst = ProblemInstance.from_rep(rep, 2, 3, rand_oct(rng, F7))
        a, b = solve(inst), solve(inst.swapped())
        assert isinstance(a, SolveCertificate) == isinstance(b, SolveCertificate)
    E = O(F7, 0, 1, 0, 0, 0, 0, 0, 0)
    F2 = O(F7, 0, 0, 0, 0, 0, 1, 0, 0)
    # the image of this pair has y1 = 0
    inst = ProblemInstance(E, F2, 2, 3, O(F7, 1, 0, 0, 0, 1, 0, 0, 1))
    assert isinstance(solve(inst), ObstructionWitness)
    assert isinstance(solve(inst.swapped()), ObstructionWitness)


def test_determinism(rng):
    rep = OrbitRepresentative.make("K1LT", F7, alpha1=3, beta1=2, beta5=4, beta8=1)
    inst = ProblemInstance.from_rep(rep, 3, 2, rand_oct(rng, F7))
    a, b = solve(inst), solve(inst)
    assert json.dumps(a.to_json()) == json.dumps(b.to_json())


def test_complex_backend(rng):
    rep = OrbitRepresentative.make("DD", COMPLEX, alpha1=COMPLEX(1.5), alpha8=COMPLEX(-2), beta1=COMPLEX(1j),
                                   beta8=COMPLEX(0.5))
    inst = ProblemInstance.from_rep(rep, 2, 3, rand_oct(rng, COMPLEX))
    cert = solve(inst)
    _check(cert, inst)
    assert cert.max_tower_degree == 1


def test_instance_validation():
    U = Octonion.unit(F7)
    with pytest.raises(PreconditionViolated):
        ProblemInstance(U, U, 1, 2, U)
    with pytest.raises(PreconditionViolated):
        ProblemInstance(U, Octonion.zero(F7), 2, 2, U)


# -- classifier --

def test_classify_examples():
    D = Octonion.diag
    v = classify((D(3, 0, F7), D(5, 0, F7)))
    assert not v.surjective and v.family == 1
    rep = OrbitRepresentative.make("DD", F7, alpha1=3, alpha8=2, beta1=1, beta8=0)
    assert classify(rep) == Verdict(True)
    v = classify((O(F7, 0, 1, 0, 0, 0, 0, 0, 0), O(F7, 0, 0, 0, 0, 0, 1, 0, 0)))
    assert not v.surjective and v.family == 8


def test_classify_swapped_order():
    E = O(F7, 0, 1, 0, 0, 0, 0, 0, 0)
    v = classify((O(F7, 0, 0, 0, 0, 0, 1, 0, 0), E))
    assert v.family == 8 and v.swapped


def test_classify_rejects_unknown_pairs():
    with pytest.raises(NotARepresentative):
        classify((O(F7, 1, 1, 1, 1, 1, 1, 1, 1), O(F7, 1, 2, 3, 4, 5, 6, 0, 1)))


def test_record_json_round_trip(rng):
    rep = OrbitRepresentative.make("FN", F7, alpha1=1, alpha8=2, beta1=3, beta5=4, beta8=5)
    inst = ProblemInstance.from_rep(rep, 2, 2, rand_oct(rng, F7))
    assert ProblemInstance.from_json(inst.to_json()) == inst
    cert = solve(inst)
    assert SolveCertificate.from_json(json.loads(json.dumps(cert.to_json()))) == cert
    v = classify((Octonion.diag(1, 0, F7), Octonion.diag(2, 0, F7)))
    assert Verdict.from_json(v.to_json()) == v
    E = O(F7, 0, 1, 0, 0, 0, 0, 0, 0)
    w = solve(ProblemInstance(E, E, 2, 2, Octonion.unit(F7)))
    assert ObstructionWitness.from_json(w.to_json()) == w
