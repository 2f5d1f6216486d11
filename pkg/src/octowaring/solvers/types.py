"""Problem, certificate, obstruction and verdict records."""
from dataclasses import dataclass, field as dc_field

from ..errors import PreconditionViolated
from ..field import DEFAULT_MAX_DEGREE, element_from_json
from ..octonion import Octonion
from ..representatives import OrbitRepresentative


@dataclass(frozen=True)
class SolverConfig:
    max_degree: int = DEFAULT_MAX_DEGREE
    # generic fallback: random kernel samples before giving up
    attempts: int = 400
    seed: int = 20240613


@dataclass(frozen=True)
class ProblemInstance:
    """Find X, Y with A1 X^k1 + A2 Y^k2 = target."""

    A1: Octonion
    A2: Octonion
    k1: int
    k2: int
    target: Octonion
    rep: OrbitRepresentative = None

    def __post_init__(self):
        for k in (self.k1, self.k2):
            if not isinstance(k, int) or k < 2:
                raise PreconditionViolated("exponents must be integers >= 2")
        if self.A1.is_zero() or self.A2.is_zero():
            raise PreconditionViolated("coefficients must be nonzero")

    @classmethod
    def from_rep(cls, rep, k1, k2, target):
        A1, A2 = rep.pair()
        return cls(A1, A2, k1, k2, target, rep)

    def swapped(self):
        return ProblemInstance(self.A2, self.A1, self.k2, self.k1, self.target)

    def to_json(self):
        out = {}
        if self.rep is not None:
            out["rep"] = self.rep.to_json()
        else:
            out["A1"] = self.A1.to_json()
            out["A2"] = self.A2.to_json()
        out["k1"] = self.k1
        out["k2"] = self.k2
        out["target"] = self.target.to_json()
        return out

    @classmethod
    def from_json(cls, obj, default_field=None):
        if not isinstance(obj, dict):
            raise ValueError("instance must be a JSON object")
        try:
            k1, k2 = obj["k1"], obj["k2"]
            target = Octonion.from_json(obj["target"], default_field)
        except KeyError as exc:
            raise ValueError(f"instance is missing key {exc}") from exc
        if not isinstance(k1, int) or not isinstance(k2, int) or isinstance(k1, bool) or isinstance(k2, bool):
            raise ValueError("k1 and k2 must be integers")
        if "rep" in obj:
            rep = OrbitRepresentative.from_json(obj["rep"], default_field)
            return cls.from_rep(rep, k1, k2, target)
        if "A1" not in obj or "A2" not in obj:
            raise ValueError("instance needs 'rep' or both 'A1' and 'A2'")
        A1 = Octonion.from_json(obj["A1"], default_field)
        A2 = Octonion.from_json(obj["A2"], default_field)
        return cls(A1, A2, k1, k2, target)


@dataclass(frozen=True)
class SolveCertificate:
    X: Octonion
    Y: Octonion  # None for single-term certificates
    trace: tuple  # ((name, FieldElement), ...)
    max_tower_degree: int
    verified: bool
    route: str = ""

    def to_json(self):
        return {
            "X": self.X.to_json(),
            "Y": self.Y.to_json() if self.Y is not None else None,
            "trace": [[n, v.to_json()] for n, v in self.trace],
            "degree": self.max_tower_degree,
            "verified": self.verified,
            "route": self.route,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(
            Octonion.from_json(obj["X"]),
            Octonion.from_json(obj["Y"]) if obj["Y"] is not None else None,
            tuple((n, element_from_json(v)) for n, v in obj["trace"]),
            int(obj["degree"]),
            bool(obj["verified"]),
            obj.get("route", ""),
        )

    def __eq__(self, other):
        if not isinstance(other, SolveCertificate):
            return NotImplemented
        return self.to_json() == other.to_json()


@dataclass(frozen=True)
class ObstructionWitness:
    """The target violates a linear constraint satisfied by the whole image."""

    family: int  # matched non-surjective shape, None for an unmatched raw pair
    mask: tuple  # 8 slot patterns
    violated: tuple = ()  # indices of violated constraint rows
    swapped: bool = False

    def to_json(self):
        return {
            "family": self.family,
            "mask": list(self.mask),
            "violated": list(self.violated),
            "swapped": self.swapped,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["family"], tuple(obj["mask"]), tuple(obj.get("violated", ())), bool(obj.get("swapped", False)))


@dataclass(frozen=True)
class Verdict:
    surjective: bool
    family: int = None
    mask: tuple = None
    swapped: bool = False
    matches: tuple = dc_field(default=())

    def to_json(self):
        return {
            "surjective": self.surjective,
            "family": self.family,
            "mask": list(self.mask) if self.mask is not None else None,
            "swapped": self.swapped,
            "matches": [[f, s] for f, s in self.matches],
        }

    @classmethod
    def from_json(cls, obj):
        mask = obj.get("mask")
        return cls(
            bool(obj["surjective"]),
            obj.get("family"),
            tuple(mask) if mask is not None else None,
            bool(obj.get("swapped", False)),
            tuple((f, s) for f, s in obj.get("matches", ())),
        )
