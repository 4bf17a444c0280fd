"""Inertia and localization of the extreme eigenvalues lambda^+ and lambda^-.

Everything here is driven by :func:`threshspec.diagonalize.eigencount`.
The gap (OMEGA_LO, OMEGA_HI) contains no eigenvalue except -1 and 0, so
bisection brackets start at its edges and never straddle those two values.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass

from .diagonalize import diagonalize, eigencount, sign_counts
from .exceptions import InertiaMismatch, NotConnected, ToleranceTooSmall
from .sequences import CreationSequence

log = logging.getLogger(__name__)

OMEGA_LO = (-1.0 - math.sqrt(2.0)) / 2.0
OMEGA_HI = (-1.0 + math.sqrt(2.0)) / 2.0
DEFAULT_TOL = 1e-9
MAX_ITER = 200


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_zero: int
    n_minus: int
    n_minus_one: int

    @property
    def triple(self):
        return (self.n_plus, self.n_zero, self.n_minus)

    def to_dict(self):
        return asdict(self)


@dataclass(frozen=True)
class Bracket:
    lo: float
    hi: float
    iterations: int

    @property
    def value(self):
        return 0.5 * (self.lo + self.hi)


@dataclass(frozen=True)
class SpectralSummary:
    lambda_plus: float | None
    lambda_minus: float | None
    tol: float
    iterations: int
    brackets: dict

    def to_dict(self):
        return {
            "lambda_plus": self.lambda_plus,
            "lambda_minus": self.lambda_minus,
            "tol": self.tol,
            "iterations": self.iterations,
            "brackets": self.brackets,
        }


def _require_connected(seq):
    if seq.n < 2 or not seq.connected:
        raise NotConnected(f"{seq.bits} is not a connected sequence with n >= 2")


def inertia_by_counting(seq: CreationSequence) -> Inertia:
    """Inertia from adjacent-pair substring counts, O(n)."""
    _require_connected(seq)
    bits = seq.bits
    pairs = {"00": 0, "01": 0, "10": 0, "11": 0}
    for i in range(len(bits) - 1):
        pairs[bits[i:i + 2]] += 1
    return Inertia(pairs["01"], pairs["00"], bits.count("1"), pairs["11"])


def minus_one_by_counting(seq: CreationSequence) -> int:
    """Multiplicity of -1 as the number of "11" pairs once b_1 is read as b_2.

    The first vertex of a threshold graph can be declared isolated or
    dominating; the literal "11" count only holds when the choice is b_1 = b_2.
    """
    _require_connected(seq)
    bits = seq.bits[1] + seq.bits[1:]
    return sum(1 for i in range(len(bits) - 1) if bits[i] == "1" and bits[i + 1] == "1")


def inertia_by_diagonalization(seq: CreationSequence) -> Inertia:
    """Inertia from sign counts of the diagonal at sigma = 0 and sigma = 1."""
    _require_connected(seq)
    at_zero = sign_counts(diagonalize(seq, 0.0, trace=False).final_diagonal)
    at_minus_one = sign_counts(diagonalize(seq, 1.0, trace=False).final_diagonal)
    result = Inertia(at_zero.greater, at_zero.equal, at_zero.less, at_minus_one.equal)
    counted = inertia_by_counting(seq)
    if counted.triple != result.triple:
        raise InertiaMismatch(
            f"{seq.bits}: diagonalization gives {result.triple}, substring counts give {counted.triple}"
        )
    if counted.n_minus_one != result.n_minus_one:
        log.debug(
            "%s: n_-1 = %d by diagonalization, %d '11' substrings",
            seq.bits, result.n_minus_one, counted.n_minus_one,
        )
    return result


def _less_or_equal(seq, x):
    # pure sign test: the zero band used for inertia would bias the bracket
    c = eigencount(seq, x, zero_tol=0.0)
    return c.less + c.equal


def _bisect(seq, lo, hi, target, tol, max_iter):
    """Shrink [lo, hi] around the point where #(eigenvalues <= x) reaches target."""
    it = 0
    while hi - lo >= tol:
        if it >= max_iter:
            raise ToleranceTooSmall(f"bisection did not reach width {tol} in {max_iter} steps")
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise ToleranceTooSmall(f"bracket [{lo!r}, {hi!r}] stalled at float resolution")
        # an eigenvalue sitting on the probe counts as <= mid
        if _less_or_equal(seq, mid) >= target:
            hi = mid
        else:
            lo = mid
        it += 1
    return Bracket(lo, hi, it)


def bracket_lambda_plus(seq, tol=DEFAULT_TOL, max_iter=MAX_ITER) -> Bracket:
    _require_connected(seq)
    if tol <= 0:
        raise ValueError("tol must be positive")
    below = eigencount(seq, OMEGA_HI, zero_tol=0.0).less
    return _bisect(seq, OMEGA_HI, float(seq.n), below + 1, tol, max_iter)


def bracket_lambda_minus(seq, tol=DEFAULT_TOL, max_iter=MAX_ITER) -> Bracket | None:
    _require_connected(seq)
    if tol <= 0:
        raise ValueError("tol must be positive")
    below = eigencount(seq, OMEGA_LO, zero_tol=0.0).less
    if below == 0:
        return None
    return _bisect(seq, -float(seq.n), OMEGA_LO, below, tol, max_iter)


def locate_lambda_plus(seq: CreationSequence, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float:
    """Smallest positive eigenvalue, to within ``tol``."""
    return bracket_lambda_plus(seq, tol, max_iter).value


def locate_lambda_minus(seq: CreationSequence, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float | None:
    """Largest eigenvalue below -1, or None when there is none."""
    br = bracket_lambda_minus(seq, tol, max_iter)
    return None if br is None else br.value


def spectral_summary(seq: CreationSequence, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> SpectralSummary:
    plus = bracket_lambda_plus(seq, tol, max_iter)
    minus = bracket_lambda_minus(seq, tol, max_iter)
    brackets = {"plus": [plus.lo, plus.hi], "minus": None if minus is None else [minus.lo, minus.hi]}
    return SpectralSummary(
        lambda_plus=plus.value,
        lambda_minus=None if minus is None else minus.value,
        tol=tol,
        iterations=plus.iterations + (0 if minus is None else minus.iterations),
        brackets=brackets,
    )


def forbidden_interval_clear(seq: CreationSequence, delta: float = 1e-9) -> bool:
    """True iff the only spectrum inside the gap sits exactly at -1 and 0."""
    _require_connected(seq)
    expected = inertia_by_diagonalization(seq)
    return gap_contents(seq, delta) == expected.n_zero + expected.n_minus_one


def gap_contents(seq: CreationSequence, delta: float = 1e-9) -> int:
    """Number of eigenvalues strictly inside (OMEGA_LO + delta, OMEGA_HI - delta)."""
    return eigencount(seq, OMEGA_HI - delta).less - eigencount(seq, OMEGA_LO + delta).less
