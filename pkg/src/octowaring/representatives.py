"""Catalogue of orbit representatives for coefficient pairs and the shapes of
the pairs whose Waring-type map is not surjective."""
from dataclasses import dataclass

from .errors import NotARepresentative
from .field import element_from_json
from .octonion import SLOTS, Octonion

# parameter names and the pair they build; zero slots are filled in by _oct
FAMILY_PARAMS = {
    "DD": ("alpha1", "alpha8", "beta1", "beta8"),
    "EK1": ("alpha1", "beta1"),
    "FK": ("alpha1", "alpha8", "beta1", "beta8"),
    "FN": ("alpha1", "alpha8", "beta1", "beta5", "beta8"),
    "FP": ("alpha1", "alpha8", "beta1", "beta8"),
    "K1E": ("alpha1", "beta1"),
    "K1F": ("alpha1", "beta1", "beta8"),
    "K1L1": ("alpha1", "beta1", "beta2"),
    "K1LT": ("alpha1", "beta1", "beta5", "beta8"),
    "K1M": ("alpha1", "beta1", "beta8"),
    "K1M1T": ("alpha1", "beta1"),
}
FAMILY_TAGS = tuple(FAMILY_PARAMS)


def _oct(field, **slots):
    vals = [slots.get(name, field.zero) for name in SLOTS]
    vals = [v if not isinstance(v, int) else field(v) for v in vals]
    return Octonion.from_slots(vals)


def build_pair(tag, params):
    """The pair (A1, A2) of a catalogue family for concrete parameters."""
    P = params
    f = next(iter(P.values())).field
    one = f.one
    if tag in ("DD", "EK1", "FK", "FN", "FP"):
        a8 = P["alpha1"] if tag == "EK1" else P["alpha8"]
        A1 = _oct(f, eta=P["alpha1"], zeta=a8)
        b8 = P["beta1"] if tag == "EK1" else P["beta8"]
        if tag == "DD":
            A2 = _oct(f, eta=P["beta1"], zeta=b8)
        elif tag in ("EK1", "FK"):
            A2 = _oct(f, eta=P["beta1"], x1=one, zeta=b8)
        elif tag == "FN":
            A2 = _oct(f, eta=P["beta1"], x1=one, y1=P["beta5"], zeta=b8)
        else:
            A2 = _oct(f, eta=P["beta1"], x1=one, y2=one, zeta=b8)
        return A1, A2
    A1 = _oct(f, eta=P["alpha1"], x1=one, zeta=P["alpha1"])
    b1 = P["beta1"]
    if tag == "K1E":
        A2 = _oct(f, eta=b1, zeta=b1)
    elif tag == "K1F":
        A2 = _oct(f, eta=b1, zeta=P["beta8"])
    elif tag == "K1L1":
        A2 = _oct(f, eta=b1, x1=P["beta2"], zeta=b1)
    elif tag == "K1LT":
        A2 = _oct(f, eta=b1, y1=P["beta5"], zeta=P["beta8"])
    elif tag == "K1M":
        A2 = _oct(f, eta=b1, x2=one, zeta=P["beta8"])
    else:
        A2 = _oct(f, eta=b1, y2=one, zeta=b1)
    return A1, A2


def constraint_violations(tag, P):
    bad = []
    if tag in ("FK", "FN", "FP") and P["alpha1"] == P["alpha8"]:
        bad.append("alpha1 != alpha8")
    if tag == "FN" and P["beta5"].is_zero():
        bad.append("beta5 != 0")
    if tag == "K1F" and P["beta1"] == P["beta8"]:
        bad.append("beta1 != beta8")
    if tag == "K1L1" and P["beta2"].is_zero():
        bad.append("beta2 != 0")
    if tag == "K1LT" and P["beta5"].is_zero():
        bad.append("beta5 != 0")
    return bad


@dataclass(frozen=True)
class OrbitRepresentative:
    """A catalogue family tag with concrete parameter values."""

    family: str
    params: tuple  # ((name, FieldElement), ...) in catalogue order

    def __post_init__(self):
        if self.family not in FAMILY_PARAMS:
            raise NotARepresentative(f"unknown family tag {self.family!r}")
        names = tuple(n for n, _ in self.params)
        if names != FAMILY_PARAMS[self.family]:
            raise NotARepresentative(f"{self.family} takes parameters {FAMILY_PARAMS[self.family]}, got {names}")
        bad = constraint_violations(self.family, dict(self.params))
        if bad:
            raise NotARepresentative(f"{self.family} requires " + ", ".join(bad))

    @classmethod
    def make(cls, family, field=None, **params):
        """Build from keyword parameters; ints are read in `field`."""
        if family not in FAMILY_PARAMS:
            raise NotARepresentative(f"unknown family tag {family!r}")
        names = FAMILY_PARAMS[family]
        missing = [n for n in names if n not in params]
        extra = [n for n in params if n not in names]
        if missing or extra:
            raise NotARepresentative(f"{family} takes parameters {names}")
        vals = [params[n] if not isinstance(params[n], int) else field(params[n]) for n in names]
        return cls(family, tuple(zip(names, vals)))

    def param(self, name):
        return dict(self.params)[name]

    def pair(self):
        return build_pair(self.family, dict(self.params))

    def to_json(self):
        return {"family": self.family, "params": {n: v.to_json() for n, v in self.params}}

    @classmethod
    def from_json(cls, obj, default_field=None):
        try:
            fam = obj["family"]
            raw = obj["params"]
        except (KeyError, TypeError) as exc:
            raise ValueError("representative needs 'family' and 'params'") from exc
        if not isinstance(raw, dict):
            raise ValueError("'params' must be an object")
        if fam not in FAMILY_PARAMS:
            raise NotARepresentative(f"unknown family tag {fam!r}")
        params = {n: element_from_json(v, default_field) for n, v in raw.items()}
        return cls.make(fam, **params)


def match_catalog(A1, A2):
    """The catalogue representative equal to (A1, A2), or None."""
    guesses = {
        "alpha1": A1.eta,
        "alpha8": A1.zeta,
        "beta1": A2.eta,
        "beta2": A2.x[0],
        "beta5": A2.y[0],
        "beta8": A2.zeta,
    }
    for tag, names in FAMILY_PARAMS.items():
        P = {n: guesses[n] for n in names}
        if constraint_violations(tag, P):
            continue
        B1, B2 = build_pair(tag, P)
        if B1 == A1 and B2 == A2:
            return OrbitRepresentative(tag, tuple((n, P[n]) for n in names))
    return None


# Support patterns of the non-surjective shapes, up to independent nonzero
# rescaling of each coefficient (which does not change the image over the
# closure).  'n' nonzero, 'z' zero, 'a' any; slot order as in SLOTS.
NONSURJECTIVE_PATTERNS = {
    1: ("nzzzzzzz", "nzzzzzzz"),
    2: ("zzzzzzzn", "zzzzzzzn"),
    3: ("nzzzzzzz", "anzzzazz"),
    4: ("zzzzzzzn", "znzzzaza"),
    5: ("znzzzzzz", "znzzzzzz"),
    6: ("znzzzzzz", "aznzzzzz"),
    7: ("znzzzzzz", "zznzzzza"),
    8: ("znzzzzzz", "zzzzznzz"),
}


def _fits(pattern, A):
    for code, v in zip(pattern, A.slots()):
        z = v.is_zero()
        if code == "z" and not z:
            return False
        if code == "n" and z:
            return False
    return True


def nonsurjective_matches(A1, A2):
    """All (family, swapped) whose shape matches (A1, A2) or (A2, A1)."""
    out = []
    for fam, (p1, p2) in NONSURJECTIVE_PATTERNS.items():
        if _fits(p1, A1) and _fits(p2, A2):
            out.append((fam, False))
        if _fits(p1, A2) and _fits(p2, A1):
            out.append((fam, True))
    return out
