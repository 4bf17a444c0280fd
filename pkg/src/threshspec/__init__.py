"""Eigenvalue counting and localization for threshold graphs."""

from .diagonalize import diagonalize, eigencount
from .oracle import eigenvalues
from .sequences import CreationSequence, anti_regular, from_text
from .spectra import inertia_by_diagonalization, locate_lambda_minus, locate_lambda_plus
from .verify import verify_conjecture, verify_critical_cases

__version__ = "0.1.0"

__all__ = [
    "CreationSequence",
    "anti_regular",
    "diagonalize",
    "eigencount",
    "eigenvalues",
    "from_text",
    "inertia_by_diagonalization",
    "locate_lambda_minus",
    "locate_lambda_plus",
    "verify_conjecture",
    "verify_critical_cases",
]
