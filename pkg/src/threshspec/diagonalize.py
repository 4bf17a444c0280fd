"""Congruence diagonalization of A + sigma*I for threshold graphs.

The loop walks the creation sequence from the last vertex to the second,
writing one final diagonal entry per step. By Sylvester's law of inertia the
signs of the resulting diagonal count the eigenvalues of A on either side of
-sigma, so ``eigencount(seq, x)`` runs the loop at ``sigma = -x``.
"""

from __future__ import annotations

import json
from array import array
from dataclasses import dataclass, field
from typing import NamedTuple

from .exceptions import NotConnected, PoleAtInput, SingularityEncountered
from .sequences import CreationSequence

BRANCH_EPS = 1e-12
ZERO_TOL = 1e-9

_ONE = ord("1")


class SubcaseRecord(NamedTuple):
    m: int
    case: str
    # new value written to b_{m-1}, if any
    mutation: int | None = None


class EigenCounts(NamedTuple):
    greater: int
    equal: int
    less: int


@dataclass
class DiagonalizeTrace:
    sigma: float
    final_diagonal: array
    alpha_sequence: list = field(default_factory=list)
    subcase_log: list = field(default_factory=list)
    zero_tol: float = ZERO_TOL

    @property
    def sign_pattern(self) -> str:
        return sign_string(self.final_diagonal, self.zero_tol)

    def counts(self) -> EigenCounts:
        return sign_counts(self.final_diagonal, self.zero_tol)

    def cases(self) -> list[str]:
        return [rec.case for rec in self.subcase_log if rec.case != "skip"]

    def to_dict(self) -> dict:
        return {
            "sigma": self.sigma,
            "final_diagonal": list(self.final_diagonal),
            "alpha": list(self.alpha_sequence),
            "subcases": [{"m": r.m, "case": r.case} for r in self.subcase_log],
            "signs": self.sign_pattern,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def sign_string(values, zero_tol: float = ZERO_TOL) -> str:
    return "".join("0" if abs(v) <= zero_tol else ("+" if v > 0 else "-") for v in values)


def sign_counts(values, zero_tol: float = ZERO_TOL) -> EigenCounts:
    pos = neg = 0
    for v in values:
        if v > zero_tol:
            pos += 1
        elif v < -zero_tol:
            neg += 1
    return EigenCounts(pos, len(values) - pos - neg, neg)


def diagonalize(
    seq: CreationSequence,
    sigma: float,
    *,
    trace: bool = True,
    branch_eps: float = BRANCH_EPS,
    zero_tol: float = ZERO_TOL,
) -> DiagonalizeTrace:
    """Run the diagonalization loop on A(seq) + sigma*I.

    With ``trace=False`` only the final diagonal is kept, so memory is the
    working bit copy plus the output buffer.
    """
    sigma = float(sigma)
    n = seq.n
    b = bytearray(seq.bits, "ascii")
    d = array("d", [sigma]) * n
    sigma_is_one = abs(sigma - 1.0) <= branch_eps
    sigma_is_zero = abs(sigma) <= branch_eps
    inv_sigma = 0.0 if sigma_is_zero else 1.0 / sigma

    if not trace:
        for m in range(n - 1, 0, -1):
            if b[m] != _ONE:
                continue
            a = d[m]
            if b[m - 1] == _ONE:
                s = a + sigma - 2.0
                if s > branch_eps or s < -branch_eps:
                    d[m - 1] = (a * sigma - 1.0) / s
                    d[m] = s
                elif sigma_is_one:
                    d[m - 1] = 1.0
                    d[m] = 0.0
                else:
                    d[m - 1] = 1.0
                    d[m] = -(1.0 - sigma) ** 2
                    b[m - 1] = 48
            elif sigma_is_zero:
                d[m - 1] = 1.0
                d[m] = -1.0
            else:
                d[m - 1] = a - inv_sigma
                d[m] = sigma
                b[m - 1] = _ONE
        return DiagonalizeTrace(sigma, d, zero_tol=zero_tol)

    # alpha[i] is the value sitting in d_{i+1} right after it was last written
    # as a temporary, alpha[n-1] = sigma
    alpha = [sigma] * n
    log = []
    for m in range(n - 1, 0, -1):
        step = m + 1
        if b[m] != _ONE:
            log.append(SubcaseRecord(step, "skip"))
            alpha[m - 1] = d[m - 1]
            continue
        a = d[m]
        if b[m - 1] == _ONE:
            s = a + sigma - 2.0
            if abs(s) > branch_eps:
                d[m - 1] = (a * sigma - 1.0) / s
                d[m] = s
                log.append(SubcaseRecord(step, "1a"))
            elif sigma_is_one:
                d[m - 1] = 1.0
                d[m] = 0.0
                log.append(SubcaseRecord(step, "1b"))
            else:
                d[m - 1] = 1.0
                d[m] = -(1.0 - sigma) ** 2
                b[m - 1] = ord("0")
                log.append(SubcaseRecord(step, "1c", 0))
        elif sigma_is_zero:
            d[m - 1] = 1.0
            d[m] = -1.0
            log.append(SubcaseRecord(step, "2a"))
        else:
            d[m - 1] = a - inv_sigma
            d[m] = sigma
            b[m - 1] = _ONE
            log.append(SubcaseRecord(step, "2b", 1))
        alpha[m - 1] = d[m - 1]
    return DiagonalizeTrace(sigma, d, alpha, log, zero_tol)


def eigencount(seq: CreationSequence, x: float, zero_tol: float = ZERO_TOL) -> EigenCounts:
    """Number of eigenvalues of A(seq) above, at and below ``x``."""
    sigma = 0.0 - x
    return sign_counts(diagonalize(seq, sigma, trace=False).final_diagonal, zero_tol)


def transfer_eval(kind: str, sigma: float, alpha: float, eps: float = BRANCH_EPS) -> float:
    """g(a) = (a*sigma - 1)/(a + sigma - 2) for kind 'g'; f(a) = a - 1/sigma for 'f'."""
    if kind == "g":
        den = alpha + sigma - 2.0
        if abs(den) <= eps:
            raise PoleAtInput(f"g has a pole at alpha = 2 - sigma = {2.0 - sigma}")
        return (alpha * sigma - 1.0) / den
    if kind == "f":
        if abs(sigma) <= eps:
            raise PoleAtInput("f is undefined at sigma = 0")
        return alpha - 1.0 / sigma
    raise ValueError(f"kind must be 'f' or 'g', got {kind!r}")


def alpha_trace(seq: CreationSequence, sigma: float) -> list[float]:
    """Alpha-sequence (alpha_1, ..., alpha_n = sigma) along the regular path.

    Raises SingularityEncountered if any step leaves subcases 1a/2b.
    """
    if seq.n < 2 or not seq.connected:
        raise NotConnected(f"{seq.bits} is not connected")
    tr = diagonalize(seq, sigma)
    for rec in tr.subcase_log:
        if rec.case not in ("1a", "2b"):
            raise SingularityEncountered(rec.m, rec.case)
    return list(tr.alpha_sequence)


def perturb_compare(seq: CreationSequence, flip_index: int, sigma: float) -> tuple[float, float]:
    """Top alpha value before and after toggling b_l (1 < l < n)."""
    if not 1 < flip_index < seq.n:
        raise ValueError(f"flip index must satisfy 1 < l < n, got {flip_index}")
    original = alpha_trace(seq, sigma)
    flipped = alpha_trace(seq.flip(flip_index), sigma)
    return original[0], flipped[0]
