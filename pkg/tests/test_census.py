import numpy as np
import pytest

from octowaring import census
from octowaring.errors import CapExceeded
from octowaring.field import GF
from octowaring.octonion import Octonion
from octowaring.representatives import NONSURJECTIVE_PATTERNS
from octowaring.solvers import ProblemInstance, SolveCertificate, solve

# image sizes of the first F_2 instance of each shape, frozen from the naive
# double loop (image_census_naive); identical for (k1, k2) = (2, 2) and (2, 3)
FIRST_INSTANCE_SIZES = {1: 16, 2: 16, 3: 64, 4: 64, 5: 16, 6: 64, 7: 64, 8: 64}

# slots pinned to zero on the image, first F_3 instance of each shape
F3_ZERO_SLOTS = {
    1: {"y1", "y2", "y3", "zeta"},
    2: {"eta", "x1", "x2", "x3"},
    3: {"y1", "zeta"},
    4: {"x2", "x3"},
    5: {"x2", "x3", "y1", "zeta"},
    6: {"x3", "zeta"},
    7: {"x3", "zeta"},
    8: {"x2", "y1"},
}
SLOTS = ("eta", "x1", "x2", "x3", "y1", "y2", "y3", "zeta")


def _first(fam, q):
    return next(iter(census.family_instances(fam, q)))


def test_enumeration_is_exhaustive():
    F = GF(2)
    elems = list(census.enumerate_octonions(2))
    assert len(elems) == 256 == len(set(elems))
    assert elems[0] == Octonion.zero(F)
    assert census.encode(census.all_codes(3), 3).tolist() == list(range(3 ** 8))


def test_cap():
    with pytest.raises(CapExceeded):
        list(census.enumerate_octonions(5))
    with pytest.raises(CapExceeded):
        census.image_census(Octonion.unit(GF(5)), Octonion.unit(GF(5)), 2, 2, 5)
    assert len(list(census.enumerate_octonions(4))) == 4 ** 8


@pytest.mark.parametrize("k2", [2, 3])
@pytest.mark.parametrize("fam", sorted(NONSURJECTIVE_PATTERNS))
def test_frozen_first_instance_sizes(fam, k2):
    A1, A2 = _first(fam, 2)
    rep = census.image_census(A1, A2, 2, k2, 2)
    assert rep.image_size == FIRST_INSTANCE_SIZES[fam]
    assert rep.proper_subset and rep.mask_consistent


@pytest.mark.parametrize("fam", [1, 3, 5, 8])
def test_bitset_matches_naive(fam):
    A1, A2 = _first(fam, 2)
    naive = census.image_census_naive(A1, A2, 2, 3, 2)
    seen = census.image_bitset(A1, A2, 2, 3, 2)
    idx = np.flatnonzero(seen)
    assert len(idx) == len(naive)
    got = {census._decode(int(i), 2) for i in idx}
    assert got == naive


def test_unit_pair_is_onto():
    U = Octonion.unit(GF(2))
    for k1, k2 in [(2, 2), (2, 3), (3, 3)]:
        rep = census.image_census(U, U, k1, k2, 2)
        assert rep.image_size == 256 and not rep.proper_subset
        assert rep.mask == ["free"] * 8


def test_unit_pair_larger_q():
    for q in (3, 4):
        U = Octonion.unit(GF(2, 2) if q == 4 else GF(q))
        assert census.image_census(U, U, 2, 2, q).image_size == q ** 8


def test_workers_agree():
    A1, A2 = _first(3, 3)
    a = census.image_bitset(A1, A2, 2, 2, 3)
    b = census.image_bitset(A1, A2, 2, 2, 3, workers=2)
    assert (a == b).all()


@pytest.mark.parametrize("fam", sorted(NONSURJECTIVE_PATTERNS))
def test_f3_masks(fam):
    A1, A2 = _first(fam, 3)
    rep = census.image_census(A1, A2, 2, 2, 3)
    assert rep.proper_subset and rep.mask_consistent
    zero = {SLOTS[i] for i, m in enumerate(rep.mask) if m == "zero"}
    assert zero == F3_ZERO_SLOTS[fam]


def test_certificates_land_in_image():
    # over F_2 a certificate at level 1 is itself an enumerated preimage
    A1, A2 = _first(6, 2)
    seen = census.image_bitset(A1, A2, 2, 2, 2)
    hit = 0
    for idx in range(256):
        target = census._decode(idx, 2)
        out = solve(ProblemInstance(A1, A2, 2, 2, target))
        if isinstance(out, SolveCertificate):
            assert out.verified
            hit += 1
            if out.max_tower_degree == 1:
                assert seen[idx]
        else:
            assert not seen[idx]
    assert hit >= seen.sum()


def test_report_json_round_trip():
    A1, A2 = _first(4, 2)
    rep = census.image_census(A1, A2, 2, 2, 2, label=4)
    back = census.CensusReport.from_json(rep.to_json())
    assert back.to_json() == rep.to_json()
    assert len(rep.non_image_samples) == census.SAMPLE_LIMIT


def test_verify_families_table():
    rows = census.verify_theorem_families(2, 2, 2, catalog=False, limit=4)
    assert [r["family"] for r in rows] == sorted(NONSURJECTIVE_PATTERNS)
    assert all(r["proper"] == r["instances"] == r["mask_ok"] for r in rows)
    text = census.format_table(rows)
    assert text.splitlines()[0].split()[:3] == ["kind", "family", "instances"]
