"""Twisted Tornheim double zeta values, periodic zeta, Dirichlet characters and
numerical checks of the relations between them."""

from .dirichlet import DirichletCharacter, character, characters_mod, double_L, gauss_sum, verify_char_inversion
from .errors import (DomainError, ExpressionSyntaxError, InsufficientTerms, NonConvergent, NotPrimitive,
                     ParityViolation, TornheimError)
from .series import (Accel, DEFAULT_CONFIG, PartialSumSequence, SummationConfig, ValueWithError, accelerate,
                     sum_double_diagonal, sum_single)
from .tornheim import (T, TornheimParams, K_closed_form, U_value, convergence_class, lhs_theorem1, rhs_theorem1,
                       stuffle_rhs, tornheim_T)
from .zeta import PeriodicZetaArgs, periodic_zeta, riemann_zeta

__all__ = [
    "Accel", "DEFAULT_CONFIG", "DirichletCharacter", "DomainError", "ExpressionSyntaxError", "InsufficientTerms",
    "K_closed_form", "NonConvergent", "NotPrimitive", "ParityViolation", "PartialSumSequence", "PeriodicZetaArgs",
    "SummationConfig", "T", "TornheimError", "TornheimParams", "U_value", "ValueWithError", "accelerate",
    "character", "characters_mod", "convergence_class", "double_L", "gauss_sum", "lhs_theorem1", "periodic_zeta",
    "rhs_theorem1", "riemann_zeta", "stuffle_rhs", "sum_double_diagonal", "sum_single", "tornheim_T",
    "verify_char_inversion",
]
