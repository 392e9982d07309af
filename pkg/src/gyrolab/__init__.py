"""Computational gyrogroups: Möbius and Einstein models, finite tables, and checkers."""

from .core import AxiomReport, CheckResult, GyroModel, check_axioms, gyr_apply
from .einstein import EinsteinModel, einstein_add, einstein_gyr, einstein_inv, gamma
from .errors import GyroError, InvalidElementError
from .mobius import Ball, MobiusModel, gyr_multiplier, mobius_add, mobius_gyr, mobius_inv

__version__ = "0.1.0"
