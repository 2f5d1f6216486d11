"""Command-line front end: eval, solve, classify, census.

Exit codes: 0 success, 1 usage/input/limit error, 2 provable obstruction.
"""
import json
import sys

import click

from . import census as census_mod
from .errors import OctoError
from .field import COMPLEX, DEFAULT_ENUM_CAP, DEFAULT_MAX_DEGREE, GF, FieldElement, element_from_json
from .octonion import Octonion, inverse
from .representatives import FAMILY_PARAMS, NONSURJECTIVE_PATTERNS, OrbitRepresentative
from .solvers import ObstructionWitness, ProblemInstance, SolverConfig, classify, solve


class InputError(click.ClickException):
    exit_code = 1


def parse_field(spec, max_degree=DEFAULT_MAX_DEGREE):
    """'p^m', 'p' or 'complex'; m may not exceed the degree bound."""
    spec = spec.strip().lower()
    if spec == "complex":
        return COMPLEX
    try:
        p, _, m = spec.partition("^")
        F = GF(int(p), int(m) if m else 1)
    except ValueError as exc:
        raise InputError(f"bad field spec {spec!r}: {exc}") from exc
    if F.m > max_degree:
        raise InputError(f"field degree {F.m} exceeds --max-degree {max_degree}")
    return F


def _read_json(source):
    """Inline JSON, '-' for stdin, or a path prefixed with '@'."""
    if source == "-":
        text = sys.stdin.read()
    elif source.startswith("@"):
        try:
            with open(source[1:]) as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(str(exc)) from exc
    else:
        text = source
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _emit(obj, fmt):
    if fmt == "json":
        click.echo(json.dumps(obj))
        return
    if isinstance(obj, list):
        click.echo(census_mod.format_table(obj))
        return
    for key, val in obj.items():
        click.echo(f"{key}: {json.dumps(val) if isinstance(val, (dict, list)) else val}")


def common(f):
    """Shared flags; each has an OCTO_ environment override."""
    opts = [
        click.option("--field", "field_spec", default="7^1", envvar="OCTO_FIELD", show_default=True,
                     help="Default field for bare integers: p^m or complex."),
        click.option("--max-degree", default=DEFAULT_MAX_DEGREE, envvar="OCTO_MAX_DEGREE", type=int, show_default=True,
                     help="Largest extension degree the solver may use."),
        click.option("--workers", default=1, envvar="OCTO_WORKERS", type=int, show_default=True),
        click.option("--format", "fmt", default="json", envvar="OCTO_FORMAT", type=click.Choice(["json", "table"]),
                     show_default=True),
        click.option("--cap", default=DEFAULT_ENUM_CAP, envvar="OCTO_CAP", type=int, show_default=True,
                     help="Largest q^8 the census may enumerate."),
    ]
    for opt in reversed(opts):
        f = opt(f)
    return f


@click.group()
def main():
    """Split-octonion arithmetic and the equation A1 X^k1 + A2 Y^k2 = A."""


# -- eval --

_UNARY = {"conj", "norm", "trace", "inverse", "neg"}
_BINARY = {"mul", "add", "sub"}


def evaluate(node, F, path="$"):
    """Evaluate a JSON expression tree to an Octonion or FieldElement."""
    if node == "unit":
        return Octonion.unit(F)
    if node == "zero":
        return Octonion.zero(F)
    if isinstance(node, dict) and "op" not in node:
        try:
            return Octonion.from_json(node, F)
        except (ValueError, TypeError, OctoError) as exc:
            raise InputError(f"at {path}: {exc}") from exc
    if not isinstance(node, dict):
        raise InputError(f"at {path}: expected an octonion, 'unit', 'zero' or an op node")
    op = node["op"]
    args = node.get("args", [])
    if not isinstance(args, list):
        raise InputError(f"at {path}: 'args' must be a list")
    vals = [evaluate(a, F, f"{path}.args[{i}]") for i, a in enumerate(args)]
    need = 2 if op in _BINARY else 1
    if op not in _UNARY | _BINARY | {"pow", "scale"}:
        raise InputError(f"at {path}: unknown op {op!r}")
    if op == "scale":
        need = 1
    if len(vals) != need:
        raise InputError(f"at {path}: {op} takes {need} argument(s)")
    if any(not isinstance(v, Octonion) for v in vals):
        raise InputError(f"at {path}: {op} needs octonion arguments")
    if op == "mul":
        return vals[0] * vals[1]
    if op == "add":
        return vals[0] + vals[1]
    if op == "sub":
        return vals[0] - vals[1]
    if op == "conj":
        return vals[0].conj()
    if op == "norm":
        return vals[0].norm()
    if op == "trace":
        return vals[0].trace()
    if op == "neg":
        return -vals[0]
    if op == "inverse":
        return inverse(vals[0])
    if op == "scale":
        return vals[0].scale(element_from_json(node.get("by"), F))
    n = node.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError(f"at {path}: pow needs a nonnegative integer 'n'")
    return vals[0] ** n


@main.command("eval")
@click.argument("expr")
@common
def eval_cmd(expr, field_spec, max_degree, workers, fmt, cap):
    """Evaluate an expression tree (inline JSON, @file or - for stdin).

    Nodes: an octonion object, "unit", "zero", or {"op": ..., "args": [...]}
    with op in mul, add, sub, conj, norm, trace, inverse, neg, pow (with "n")
    and scale (with "by").
    """
    F = parse_field(field_spec, max_degree)
    try:
        val = evaluate(_read_json(expr), F)
    except OctoError as exc:
        raise InputError(str(exc)) from exc
    out = val.to_json() if isinstance(val, (Octonion, FieldElement)) else val
    _emit(out if isinstance(out, dict) else {"value": out}, fmt)


# -- solve --

@main.command("solve")
@click.argument("instance")
@common
def solve_cmd(instance, field_spec, max_degree, workers, fmt, cap):
    """Solve A1 X^k1 + A2 Y^k2 = target for an instance JSON.

    The instance holds "k1", "k2", "target" and either "rep" (a catalogue
    representative) or "A1" and "A2".  Exits 2 with an obstruction when the
    target is outside the image.
    """
    F = parse_field(field_spec, max_degree)
    try:
        inst = ProblemInstance.from_json(_read_json(instance), F)
        res = solve(inst, SolverConfig(max_degree=max_degree))
    except click.ClickException:
        raise
    except (OctoError, ValueError, TypeError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    _emit(res.to_json(), fmt)
    if isinstance(res, ObstructionWitness):
        sys.exit(2)


# -- classify --

def _parse_pair(obj, F):
    if not isinstance(obj, dict):
        raise InputError("pair must be a JSON object")
    if "rep" in obj:
        obj = obj["rep"]
    if "family" in obj:
        return OrbitRepresentative.from_json(obj, F)
    if "A1" in obj and "A2" in obj:
        return Octonion.from_json(obj["A1"], F), Octonion.from_json(obj["A2"], F)
    raise InputError("pair needs 'family' and 'params', 'rep', or 'A1' and 'A2'")


@main.command("classify")
@click.argument("pair")
@common
def classify_cmd(pair, field_spec, max_degree, workers, fmt, cap):
    """Surjectivity verdict for a representative or raw pair JSON."""
    F = parse_field(field_spec, max_degree)
    try:
        verdict = classify(_parse_pair(_read_json(pair), F))
    except click.ClickException:
        raise
    except (OctoError, ValueError, TypeError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    _emit(verdict.to_json(), fmt)


# -- census --

@main.command("census")
@click.option("--family", help="Non-surjective shape 1-8 or a catalogue tag; sweeps all F_q parameters.")
@click.option("--pair", "pair_json", help="Pair JSON (rep or A1/A2) for a single census.")
@click.option("--all-families", is_flag=True, help="One summary row per non-surjective shape.")
@click.option("--catalog", is_flag=True, help="With --all-families, add catalogue rows.")
@click.option("--q", "q", default=2, type=int, show_default=True)
@click.option("--k1", default=2, type=int, show_default=True)
@click.option("--k2", default=2, type=int, show_default=True)
@common
def census_cmd(family, pair_json, all_families, catalog, q, k1, k2, field_spec, max_degree, workers, fmt, cap):
    """Exhaustive image census over O(F_q)."""
    if sum(bool(x) for x in (family, pair_json, all_families)) != 1:
        raise InputError("give exactly one of --family, --pair, --all-families")
    if k1 < 1 or k2 < 1:
        raise InputError("k1 and k2 must be positive")
    try:
        if q ** 8 > cap:
            raise census_mod.CapExceeded(f"q^8 = {q ** 8} exceeds the enumeration cap {cap}")
        Fq = census_mod.field_of_order(q)
        if all_families:
            rows = census_mod.verify_theorem_families(q, k1, k2, workers, cap, catalog=catalog)
            _emit(rows, fmt)
            return
        if pair_json:
            p = _parse_pair(_read_json(pair_json), Fq)
            A1, A2 = p.pair() if hasattr(p, "pair") else p
            rep = census_mod.image_census(A1, A2, k1, k2, q, "pair", workers, cap)
            out = rep.to_json()
            _emit(out if fmt == "json" else _report_row(rep), fmt)
            return
        if family.isdigit() and int(family) in NONSURJECTIVE_PATTERNS:
            label, pairs = int(family), list(census_mod.family_instances(int(family), q))
        elif family in FAMILY_PARAMS:
            label, pairs = family, [(A1, A2) for _, A1, A2 in census_mod.catalog_instances(family, q)]
        else:
            raise InputError(f"unknown family {family!r}")
        reports = [census_mod.image_census(A1, A2, k1, k2, q, label, workers, cap) for A1, A2 in pairs]
        if fmt == "table":
            _emit([_report_row(r) for r in reports], fmt)
            return
        _emit({
            "family": label,
            "q": q,
            "k1": k1,
            "k2": k2,
            "instances": len(reports),
            "proper_subset": all(r.proper_subset for r in reports),
            "reports": [r.to_json() for r in reports],
        }, fmt)
    except click.ClickException:
        raise
    except (OctoError, ValueError) as exc:
        raise InputError(str(exc)) from exc


def _report_row(r):
    return {
        "A1": " ".join(str(v) for v in r.A1.slots()),
        "A2": " ".join(str(v) for v in r.A2.slots()),
        "image_size": r.image_size,
        "total": r.total,
        "proper_subset": r.proper_subset,
        "mask": list(r.mask),
    }


if __name__ == "__main__":
    main()
