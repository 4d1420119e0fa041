"""Finite reversible event structures, configuration systems and the constructions between them."""

from revent.core import (
    Cs,
    Enabling,
    Polarized,
    Raes,
    Res,
    Rpes,
    Transition,
    ValidationReport,
    enabling,
    enabling_closure,
    fwd,
    rev,
    transition,
    validate,
    validate_cs,
    validate_raes,
    validate_res,
    validate_rpes,
)
from revent.morphisms import PartialMap, compose, identity

__version__ = "0.1.0"
