"""Constructive solvers for A1 X^k1 + A2 Y^k2 = A and the surjectivity classifier."""
from .context import SolveContext, octonion_root
from .core import (
    apply_conjugate_reduction,
    classify,
    generic_solve,
    invertible_case,
    obstruction,
    reduce_invertible_case,
    solve,
    solve_invertible,
    solve_noninvertible,
    solve_scalar_power,
)
from .lemmas import conjugate_reduction, lower, nilpotent, scalar_power, upper
from .recipes import reduce_invertible, solve_singular
from .types import ObstructionWitness, ProblemInstance, SolveCertificate, SolverConfig, Verdict

__all__ = [
    "ObstructionWitness",
    "apply_conjugate_reduction",
    "invertible_case",
    "reduce_invertible_case",
    "solve_invertible",
    "solve_noninvertible",
    "solve_scalar_power",
    "ProblemInstance",
    "SolveCertificate",
    "SolveContext",
    "SolverConfig",
    "Verdict",
    "classify",
    "conjugate_reduction",
    "generic_solve",
    "lower",
    "nilpotent",
    "obstruction",
    "octonion_root",
    "reduce_invertible",
    "scalar_power",
    "solve",
    "solve_singular",
    "upper",
]
