"""Exhaustive image census of (X, Y) -> A1 X^k1 + A2 Y^k2 over O(F_q) for tiny q.

Elements are indexed by their slot codes read as base-q digits (eta first),
which is also the canonical enumeration order.  The census precomputes the
deduplicated sets of A1 X^k1 and A2 Y^k2, then marks every pairwise sum in a
boolean table of size q^8.
"""
import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import batch
from .errors import CapExceeded
from .field import DEFAULT_ENUM_CAP, FieldElement, GF, field_of_order
from .linalg import mask_from_constraints, nullspace, rref, span_constraints
from .octonion import Octonion, pow_iter
from .representatives import FAMILY_PARAMS, NONSURJECTIVE_PATTERNS, build_pair, constraint_violations

SAMPLE_LIMIT = 16
_CHUNK = 1 << 20  # pair sums per vectorized block


def _check_cap(q, cap):
    cap = DEFAULT_ENUM_CAP if cap is None else cap
    if q ** 8 > cap:
        raise CapExceeded(f"q^8 = {q ** 8} exceeds the enumeration cap {cap}")


def all_codes(q):
    """(q^8, 8) array of slot codes in canonical order."""
    idx = np.arange(q ** 8, dtype=np.int64)
    digits = np.empty((q ** 8, 8), dtype=np.int64)
    for i in range(7, -1, -1):
        digits[:, i] = idx % q
        idx //= q
    return digits


def encode(rows, q):
    """Canonical index of each row of slot codes."""
    out = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(8):
        out = out * q + rows[:, i]
    return out


def enumerate_octonions(q, cap=None):
    """All q^8 octonions over F_q, once each, in canonical order."""
    _check_cap(q, cap)
    F = field_of_order(q)
    for codes in itertools.product(range(q), repeat=8):
        yield Octonion.from_slots([FieldElement(F, c) for c in codes])


def term_image(A, k, q, elements=None):
    """Deduplicated array of A X^k over all X in O(F_q)."""
    F = field_of_order(q)
    bf = batch.BatchField(F)
    E = all_codes(q) if elements is None else elements
    P = np.unique(batch.pow_ch(bf, E, k), axis=0)
    a = batch.to_array([A.lift(F)], bf)[0]
    return np.unique(batch.mul(bf, a, P), axis=0)


def _mark_sums(args):
    p, m, T1, T2 = args
    F = GF(p, m)
    bf = batch.BatchField(F)
    q = F.order
    seen = np.zeros(q ** 8, dtype=bool)
    step = max(1, _CHUNK // max(1, len(T2)))
    for s in range(0, len(T1), step):
        block = batch.add(bf, T1[s:s + step, None, :], T2[None, :, :])
        seen[encode(block.reshape(-1, 8), q)] = True
        if seen.all():
            break
    return seen


def image_bitset(A1, A2, k1, k2, q, workers=1, cap=None):
    """Boolean table over canonical indices marking the image of the map."""
    _check_cap(q, cap)
    F = field_of_order(q)
    E = all_codes(q)
    T1 = term_image(A1, k1, q, E)
    T2 = term_image(A2, k2, q, E)
    if workers <= 1 or len(T1) < 2 * workers:
        return _mark_sums((F.p, F.m, T1, T2))
    parts = np.array_split(T1, workers)
    seen = np.zeros(q ** 8, dtype=bool)
    with ProcessPoolExecutor(max_workers=workers) as ex:
        for part in ex.map(_mark_sums, [(F.p, F.m, P, T2) for P in parts]):
            seen |= part
    return seen


def _decode(index, q):
    F = field_of_order(q)
    codes = []
    for _ in range(8):
        codes.append(index % q)
        index //= q
    return Octonion.from_slots([FieldElement(F, int(c)) for c in reversed(codes)])


def span_of_rows(rows, q):
    """RREF basis (FieldElement rows) of the linear span of code rows."""
    F = field_of_order(q)
    bf = batch.BatchField(F)
    pts = np.asarray(rows, dtype=np.int64)
    basis = []  # (pivot, code row), pivot entry 1
    while len(pts):
        nz = np.flatnonzero((pts != 0).any(axis=1))
        if not len(nz):
            break
        v = [FieldElement(F, int(c)) for c in pts[nz[0]]]
        piv = next(i for i, e in enumerate(v) if not e.is_zero())
        inv = v[piv].inv()
        row = np.array([(e * inv).value for e in v], dtype=np.int64)
        basis.append((piv, row))
        # eliminate the new pivot from every remaining point
        coef = pts[:, piv]
        pts = batch.sub(bf, pts, bf.mul(coef[:, None], row[None, :]))
        pts = pts[(pts != 0).any(axis=1)]
    red, _ = rref([[FieldElement(F, int(c)) for c in row] for _, row in basis]) if basis else ([], [])
    return red


def mask_of_rows(rows, q):
    """Slot mask of the linear constraints shared by all the given points."""
    F = field_of_order(q)
    span = span_of_rows(rows, q)
    if not span:
        ann = [[F.one if i == j else F.zero for j in range(8)] for i in range(8)]
    else:
        ann = nullspace(span, 8, F)
    cons, _ = rref(ann) if ann else ([], [])
    return cons, mask_from_constraints(cons)


@dataclass
class CensusReport:
    q: int
    k1: int
    k2: int
    label: str  # family id, catalogue tag or "pair"
    image_size: int
    total: int
    mask: list
    elapsed: float
    non_image_samples: list = dc_field(default_factory=list)
    A1: Octonion = None
    A2: Octonion = None
    # True when every image point satisfies the span constraints of (A1, A2)
    mask_consistent: bool = True

    @property
    def proper_subset(self):
        return self.image_size < self.total

    def to_json(self):
        return {
            "q": self.q,
            "k1": self.k1,
            "k2": self.k2,
            "label": self.label,
            "image_size": self.image_size,
            "total": self.total,
            "proper_subset": self.proper_subset,
            "mask": list(self.mask),
            "mask_consistent": self.mask_consistent,
            "elapsed": round(self.elapsed, 6),
            "non_image_samples": [o.to_json() for o in self.non_image_samples],
            "A1": self.A1.to_json() if self.A1 is not None else None,
            "A2": self.A2.to_json() if self.A2 is not None else None,
        }

    @classmethod
    def from_json(cls, obj):
        dec = lambda o: Octonion.from_json(o) if o is not None else None
        return cls(
            obj["q"], obj["k1"], obj["k2"], obj["label"], obj["image_size"], obj["total"],
            list(obj["mask"]), obj["elapsed"], [dec(o) for o in obj["non_image_samples"]],
            dec(obj.get("A1")), dec(obj.get("A2")), obj.get("mask_consistent", True),
        )


def image_census(A1, A2, k1, k2, q, label="pair", workers=1, cap=None):
    """Exact image of the map over F_q with its slot mask."""
    t0 = time.perf_counter()
    F = field_of_order(q)
    A1, A2 = A1.lift(F), A2.lift(F)
    seen = image_bitset(A1, A2, k1, k2, q, workers, cap)
    image_idx = np.flatnonzero(seen)
    _, mask = mask_of_rows(all_codes(q)[image_idx], q)
    cons = span_constraints(A1, A2)
    consistent = True
    if cons:
        consistent = bool(_rows_satisfy(cons, all_codes(q)[image_idx], F).all())
    missing = np.flatnonzero(~seen)[:SAMPLE_LIMIT]
    return CensusReport(
        q, k1, k2, str(label), int(len(image_idx)), q ** 8, mask,
        time.perf_counter() - t0, [_decode(int(i), q) for i in missing], A1, A2, consistent,
    )


def _rows_satisfy(cons, rows, F):
    bf = batch.BatchField(F)
    ok = np.ones(len(rows), dtype=bool)
    for c in cons:
        acc = bf.const(0, (len(rows),))
        for j, cj in enumerate(c):
            if not cj.is_zero():
                acc = bf.add(acc, bf.mul(bf.const(cj), rows[:, j]))
        ok &= acc == 0
    return ok


def image_census_naive(A1, A2, k1, k2, q, cap=None):
    """Image as a set of octonions by a plain double loop (scalar arithmetic)."""
    _check_cap(q, cap)
    F = field_of_order(q)
    A1, A2 = A1.lift(F), A2.lift(F)
    elems = list(enumerate_octonions(q, cap))
    second = [A2 * pow_iter(Y, k2) for Y in elems]
    image = set()
    for X in elems:
        first = A1 * pow_iter(X, k1)
        for s in second:
            image.add(first + s)
    return image


def _instantiations(pattern, F):
    choices = []
    for code in pattern:
        if code == "z":
            choices.append([F.zero])
        elif code == "n":
            choices.append([e for e in F.elements() if not e.is_zero()])
        else:
            choices.append(list(F.elements()))
    for vals in itertools.product(*choices):
        yield Octonion.from_slots(vals)


def family_instances(fam, q):
    """Every F_q instantiation (A1, A2) of a non-surjective shape."""
    F = field_of_order(q)
    p1, p2 = NONSURJECTIVE_PATTERNS[fam]
    for A1 in _instantiations(p1, F):
        for A2 in _instantiations(p2, F):
            yield A1, A2


def catalog_instances(tag, q):
    """Every F_q parameter choice of a catalogue family with both coefficients nonzero."""
    F = field_of_order(q)
    names = FAMILY_PARAMS[tag]
    for vals in itertools.product(list(F.elements()), repeat=len(names)):
        P = dict(zip(names, vals))
        if constraint_violations(tag, P):
            continue
        A1, A2 = build_pair(tag, P)
        if A1.is_zero() or A2.is_zero():
            continue
        yield P, A1, A2


def verify_theorem_families(q, k1, k2, workers=1, cap=None, catalog=True, limit=None):
    """Census rows for the non-surjective shapes and, optionally, the catalogue.

    Each row: kind ("nonsurjective" or "catalog"), family, instances, proper
    (instances whose image is a proper subset), mask_ok (instances whose image
    respects the span constraints), image sizes and the mask of the first
    instance.  Catalogue rows are informational: over F_q a map that is onto
    over the closure may still miss points.
    """
    rows = []
    for fam in NONSURJECTIVE_PATTERNS:
        reps = list(family_instances(fam, q))[:limit]
        rows.append(_summarize("nonsurjective", fam, reps, q, k1, k2, workers, cap))
    if catalog:
        for tag in FAMILY_PARAMS:
            reps = [(A1, A2) for _, A1, A2 in catalog_instances(tag, q)][:limit]
            rows.append(_summarize("catalog", tag, reps, q, k1, k2, workers, cap))
    return rows


def _summarize(kind, fam, reps, q, k1, k2, workers, cap):
    reports = [image_census(A1, A2, k1, k2, q, fam, workers, cap) for A1, A2 in reps]
    return {
        "kind": kind,
        "family": fam,
        "instances": len(reports),
        "proper": sum(r.proper_subset for r in reports),
        "mask_ok": sum(r.mask_consistent for r in reports),
        "min_image": min((r.image_size for r in reports), default=None),
        "max_image": max((r.image_size for r in reports), default=None),
        "total": q ** 8,
        "mask": list(reports[0].mask) if reports else None,
    }


def format_table(rows):
    """Aligned plain-text table of dict rows (column order of the first row)."""
    if not rows:
        return ""
    cols = list(rows[0])
    cells = [[str(r.get(c)) if not isinstance(r.get(c), list) else " ".join(r.get(c)) for c in cols] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
    lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
    return "\n".join(lines)
