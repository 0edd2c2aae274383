"""Thick subcategories, shift spectra and rank functions on finite models."""

from ._backend import BACKEND
from .catmodel import FormalObject, Model, load_model, perp_left, perp_right, save_model, thick_closure
from .errors import (
    AxiomViolation, GuardError, InconsistencyError, ModeError, ModelError, ParseError, SpeclabError,
    UsageError, VerificationFailure,
)
from .builtins import builtin_model
from .spectra import (
    FiniteSpace, Lattice, classify, enumerate_thicks, matsui_spectrum, radical, shift_homological_spectrum,
    shift_spectrum, support,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "FormalObject", "Model", "load_model", "save_model", "perp_left", "perp_right",
    "thick_closure", "builtin_model", "FiniteSpace", "Lattice", "classify", "enumerate_thicks",
    "matsui_spectrum", "radical", "shift_spectrum", "shift_homological_spectrum", "support",
    "SpeclabError", "UsageError", "ModelError", "ParseError", "ModeError", "InconsistencyError",
    "AxiomViolation", "GuardError", "VerificationFailure", "__version__",
]
