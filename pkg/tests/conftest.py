import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from octowaring.field import COMPLEX, GF
from octowaring.octonion import Octonion
from octowaring.representatives import FAMILY_PARAMS, OrbitRepresentative, constraint_violations, nonsurjective_matches

settings.register_profile("default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

# (p, m) pairs exercised by the property tests: prime, table-backed extensions
# in odd and even characteristic
LEVELS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 4), (3, 2), (7, 2)]


def elements(F):
    return st.integers(0, F.order - 1).map(F.element)


def octonions(F):
    return st.lists(elements(F), min_size=8, max_size=8).map(Octonion.from_slots)


@st.composite
def field_and_octs(draw, n=2):
    p, m = draw(st.sampled_from(LEVELS))
    F = GF(p, m)
    return (F, *[draw(octonions(F)) for _ in range(n)])


def zorn_mul_int(A, B, p):
    """Independent oracle: the Zorn product on plain int 8-tuples mod p."""
    a, x1, x2, x3, y1, y2, y3, b = A
    c, u1, u2, u3, v1, v2, v3, d = B
    x, y, u, v = (x1, x2, x3), (y1, y2, y3), (u1, u2, u3), (v1, v2, v3)

    def cr(s, t):
        return (s[1] * t[2] - s[2] * t[1], s[2] * t[0] - s[0] * t[2], s[0] * t[1] - s[1] * t[0])

    yv, xu = cr(y, v), cr(x, u)
    out = [a * c + sum(i * j for i, j in zip(x, v))]
    out += [a * u[i] + d * x[i] - yv[i] for i in range(3)]
    out += [b * v[i] + c * y[i] + xu[i] for i in range(3)]
    out += [b * d + sum(i * j for i, j in zip(y, u))]
    return tuple(o % p for o in out)


def rand_oct(rng, F):
    if F is COMPLEX:
        return Octonion.from_slots([F(complex(rng.gauss(0, 1), rng.gauss(0, 1))) for _ in range(8)])
    return Octonion.from_slots([F.element(rng.randrange(F.order)) for _ in range(8)])


@pytest.fixture
def rng():
    return random.Random(12345)


def random_params(tag, F, rng):
    """Random parameters of a catalogue family that satisfy its constraints."""
    names = FAMILY_PARAMS[tag]
    while True:
        if F is COMPLEX:
            P = {n: F(complex(rng.gauss(0, 1), rng.gauss(0, 1))) for n in names}
        else:
            P = {n: F.element(rng.randrange(F.order)) for n in names}
        if not constraint_violations(tag, P):
            return OrbitRepresentative(tag, tuple((n, P[n]) for n in names))


def random_surjective_rep(tag, F, rng, tries=200):
    """Random representative of `tag` whose pair matches no non-surjective shape."""
    for _ in range(tries):
        rep = random_params(tag, F, rng)
        A1, A2 = rep.pair()
        if A1.is_zero() or A2.is_zero():
            continue
        if not nonsurjective_matches(A1, A2):
            return rep
    return None


# criterion number -> (passed, seconds, note); filled by tests/test_acceptance.py
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, secs, note = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'} ({secs:.2f}s) {note}".rstrip())
