"""Exhaustive and family-targeted checks of the anti-regular extremal property.

For every connected threshold graph G on n vertices the anti-regular graph
A_n should satisfy lambda^+(A_n) <= lambda^+(G) and lambda^-(G) <= lambda^-(A_n).
Eigenvalues are located by bisection at tolerance ``tol``; comparisons allow
a slack of ``2 * tol`` and near-ties are re-run at ``tol / 100``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .diagonalize import diagonalize
from .exceptions import OrderTooSmall
from .sequences import (
    CreationSequence,
    anti_regular,
    critical_by_position,
    enumerate_connected,
    enumerate_critical,
    enumeration_cap,
    CapExceeded,
)
from .spectra import DEFAULT_TOL, locate_lambda_minus, locate_lambda_plus

VERIFY_CAP = 20


@dataclass(frozen=True)
class GraphExtremes:
    seq: str
    lambda_plus: float
    lambda_minus: float | None


@dataclass
class ConjectureReport:
    n: int
    total_graphs: int
    tol: float
    lambda_plus_star: tuple
    lambda_minus_star: tuple | None
    anti_regular_values: tuple
    margins: dict
    verdict: bool
    warnings: list = field(default_factory=list)
    graphs: list = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        plus_seq, plus_val = self.lambda_plus_star
        minus = None
        if self.lambda_minus_star is not None:
            minus = {"seq": self.lambda_minus_star[0], "value": self.lambda_minus_star[1]}
        return {
            "n": self.n,
            "total": self.total_graphs,
            "tol": self.tol,
            "winner_plus": {"seq": plus_seq, "value": plus_val},
            "winner_minus": minus,
            "anti_regular": {
                "seq": anti_regular(self.n).bits,
                "plus": self.anti_regular_values[0],
                "minus": self.anti_regular_values[1],
            },
            "margins": self.margins,
            "excluded_from_minus": sum(1 for g in self.graphs if g.lambda_minus is None),
            "warnings": self.warnings,
            "verdict": self.verdict,
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["seq", "lambda_plus", "lambda_minus"])
        for g in self.graphs:
            writer.writerow([g.seq, repr(g.lambda_plus), "" if g.lambda_minus is None else repr(g.lambda_minus)])
        return buf.getvalue()


def _extremes(args) -> list[GraphExtremes]:
    bits_list, tol = args
    out = []
    for bits in bits_list:
        seq = CreationSequence(bits)
        out.append(GraphExtremes(bits, locate_lambda_plus(seq, tol), locate_lambda_minus(seq, tol)))
    return out


def graph_extremes(n: int, tol: float = DEFAULT_TOL, jobs: int = 1) -> list[GraphExtremes]:
    """lambda^+ and lambda^- for every connected graph of order n, in enumeration order."""
    bits = [s.bits for s in enumerate_connected(n)]
    if jobs <= 1 or len(bits) < 64:
        return _extremes((bits, tol))
    chunk = max(16, len(bits) // (jobs * 8))
    chunks = [(bits[i:i + chunk], tol) for i in range(0, len(bits), chunk)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        parts = list(pool.map(_extremes, chunks))
    return [g for part in parts for g in part]


def verify_conjecture(n: int, tol: float = DEFAULT_TOL, jobs: int = 1, cap: int | None = None) -> ConjectureReport:
    """Compare A_n against every connected threshold graph of order n."""
    cap = min(VERIFY_CAP, enumeration_cap()) if cap is None else cap
    if n < 3:
        raise OrderTooSmall(f"verification needs n >= 3, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds verification cap {cap}")
    graphs = graph_extremes(n, tol, jobs)
    ar = anti_regular(n).bits
    ar_row = next(g for g in graphs if g.seq == ar)
    slack = 2.0 * tol
    warnings = []
    verdict = True

    plus_star = min(graphs, key=lambda g: g.lambda_plus)
    with_minus = [g for g in graphs if g.lambda_minus is not None]
    minus_star = max(with_minus, key=lambda g: g.lambda_minus) if with_minus else None

    others = [g for g in graphs if g.seq != ar]
    plus_margin = min((g.lambda_plus - ar_row.lambda_plus for g in others), default=None)
    minus_others = [g for g in others if g.lambda_minus is not None]
    minus_margin = None
    if ar_row.lambda_minus is not None and minus_others:
        minus_margin = min(ar_row.lambda_minus - g.lambda_minus for g in minus_others)

    for g in others:
        d_plus = g.lambda_plus - ar_row.lambda_plus
        if d_plus <= slack:
            ok, msg = _recheck(g.seq, ar, "plus", tol, d_plus)
            warnings.append(msg)
            verdict &= ok
        if g.lambda_minus is None:
            continue
        if ar_row.lambda_minus is None:
            verdict = False
            warnings.append(f"FAIL {g.seq}: lambda^- exists but A_n has none")
            continue
        d_minus = ar_row.lambda_minus - g.lambda_minus
        if d_minus <= slack:
            ok, msg = _recheck(g.seq, ar, "minus", tol, d_minus)
            warnings.append(msg)
            verdict &= ok

    return ConjectureReport(
        n=n,
        total_graphs=len(graphs),
        tol=tol,
        lambda_plus_star=(plus_star.seq, plus_star.lambda_plus),
        lambda_minus_star=None if minus_star is None else (minus_star.seq, minus_star.lambda_minus),
        anti_regular_values=(ar_row.lambda_plus, ar_row.lambda_minus),
        margins={"plus": plus_margin, "minus": minus_margin},
        verdict=bool(verdict),
        warnings=warnings,
        graphs=graphs,
    )


def _recheck(bits, ar_bits, which, tol, coarse_margin):
    """Re-run a near-tie at tol/100; a violation beyond the fine slack fails."""
    fine = tol / 100.0
    g, a = CreationSequence(bits), CreationSequence(ar_bits)
    if which == "plus":
        margin = locate_lambda_plus(g, fine) - locate_lambda_plus(a, fine)
    else:
        margin = locate_lambda_minus(a, fine) - locate_lambda_minus(g, fine)
    if margin < -2.0 * fine:
        return False, f"FAIL {bits}: lambda^{'+' if which == 'plus' else '-'} margin {margin:.3e} at tol {fine:g}"
    return True, f"WARN {bits}: lambda^{'+' if which == 'plus' else '-'} tie within slack (margin {coarse_margin:.3e}, {margin:.3e} at tol {fine:g})"


@dataclass(frozen=True)
class CriticalCase:
    seq: str
    lambda_plus: float
    lambda_minus: float | None
    margin: float
    dominated_by_anti_regular: bool


def verify_critical_cases(n: int, tol: float = DEFAULT_TOL) -> list[CriticalCase]:
    """Check each critical graph against A_n in the parity-appropriate direction.

    Even n compares lambda^-, odd n compares lambda^+; ``margin`` is positive
    when A_n wins.
    """
    crit = enumerate_critical(n)
    ar = anti_regular(n)
    ar_plus = locate_lambda_plus(ar, tol)
    ar_minus = locate_lambda_minus(ar, tol)
    rows = []
    for seq in crit:
        lp = locate_lambda_plus(seq, tol)
        lm = locate_lambda_minus(seq, tol)
        if n % 2 == 0:
            margin = math.inf if lm is None else ar_minus - lm
        else:
            margin = lp - ar_plus
        rows.append(CriticalCase(seq.bits, lp, lm, margin, margin > 2.0 * tol))
    return rows


@dataclass
class ChainCheck:
    """Outcome of an ordered-chain check over the critical family."""

    n: int
    sequences: list
    values: list
    pivot: int
    holds: bool
    extra: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "n": self.n,
            "chain": [{"seq": s, "value": v} for s, v in zip(self.sequences, self.values)],
            "pivot": self.pivot,
            "extra": self.extra,
            "holds": self.holds,
        }


def _strict_chain(values, increasing, tol):
    slack = tol
    if increasing:
        return all(b - a > slack for a, b in zip(values, values[1:]))
    return all(a - b > slack for a, b in zip(values, values[1:]))


def even_minus_chain(n: int, tol: float = DEFAULT_TOL) -> ChainCheck:
    """lambda^- over the s_1 = 2 critical family ordered by widened-run position.

    The values fall strictly from the t_1 end to a single minimum and then
    rise strictly to the t_k end. On top of that, with G1 = 0^2 1^2 01..01,
    G2 = 0^3 1 01..01 and G3 = 0^2 1 01..01^2, we need
    lambda^-(G1) < lambda^-(G2) < lambda^-(A_n) and lambda^-(G3) < lambda^-(A_n).
    """
    if n % 2 or n < 8:
        raise OrderTooSmall(f"chain check needs even n >= 8, got {n}")
    family = critical_by_position(n)
    values = [locate_lambda_minus(s, tol) for s in family]
    pivot = int(np.argmin(values))
    valley = _strict_chain(values[: pivot + 1], False, tol) and _strict_chain(values[pivot:], True, tol)

    g1, g3 = family[0], family[-1]
    g2 = enumerate_critical(n)[-1]
    ar = locate_lambda_minus(anti_regular(n), tol)
    v1, v2, v3 = values[0], locate_lambda_minus(g2, tol), values[-1]
    g1_g2_order = v2 - v1 > tol and ar - v2 > tol
    g3_below = ar - v3 > tol
    extra = {
        "G1": {"seq": g1.bits, "value": v1},
        "G2": {"seq": g2.bits, "value": v2},
        "G3": {"seq": g3.bits, "value": v3},
        "anti_regular": ar,
        "g1_g2_order": g1_g2_order,
        "g3_below": g3_below,
        "valley": valley,
    }
    return ChainCheck(n, [s.bits for s in family], values, pivot, bool(valley and g1_g2_order and g3_below), extra)


def verify_theorem5_chain(n: int, tol: float = DEFAULT_TOL) -> bool:
    return even_minus_chain(n, tol).holds


def odd_plus_chain(n: int, tol: float = DEFAULT_TOL) -> ChainCheck:
    """lambda^+ over the odd-order critical family ordered by widened-run position.

    The values rise strictly from the t_1 end to a single maximum and fall
    strictly to the t_k end, and A_n = 00101..01 sits strictly below both
    ends: lambda^+(A_n) < lambda^+(01^2 01..01), lambda^+(A_n) < lambda^+(01..01^2).
    """
    if n % 2 == 0 or n < 5:
        raise OrderTooSmall(f"odd-order chain check needs odd n >= 5, got {n}")
    family = critical_by_position(n)
    values = [locate_lambda_plus(s, tol) for s in family]
    pivot = int(np.argmax(values))
    peak = _strict_chain(values[: pivot + 1], True, tol) and _strict_chain(values[pivot:], False, tol)
    ar = locate_lambda_plus(anti_regular(n), tol)
    first_above = values[0] - ar > tol
    last_above = values[-1] - ar > tol
    extra = {
        "anti_regular": ar,
        "first_above": first_above,
        "last_above": last_above,
        "peak": peak,
    }
    return ChainCheck(n, [s.bits for s in family], values, pivot, bool(peak and first_above and last_above), extra)


def verify_corollary2_inequalities(n: int, tol: float = DEFAULT_TOL) -> bool:
    return odd_plus_chain(n, tol).holds


@dataclass(frozen=True)
class SignPatternCheck:
    n: int
    y: float
    expected: str
    observed: str

    @property
    def match(self) -> bool:
        return self.expected == self.observed


def expected_sign_pattern(n: int) -> str:
    """Final-diagonal signs of A_n just above lambda^-(A_n)."""
    if n % 2 == 0:
        return "++" + "-+" * (n // 2 - 1)
    return "-++" + "-+" * ((n - 3) // 2)


def verify_sign_pattern(n: int, samples: int, seed: int = 0, tol: float = DEFAULT_TOL) -> list[SignPatternCheck]:
    """Sample shifts y with -y strictly between lambda^-(A_n) and -1 (even n) or 0 (odd n)."""
    if n < 3:
        raise OrderTooSmall(f"sign pattern check needs n >= 3, got {n}")
    if samples < 1:
        raise ValueError("samples must be >= 1")
    seq = anti_regular(n)
    lam = locate_lambda_minus(seq, tol)
    lo = lam + 10 * tol
    hi = -1.0 if n % 2 == 0 else 0.0
    rng = np.random.default_rng(seed)
    expected = expected_sign_pattern(n)
    out = []
    while len(out) < samples:
        x = float(rng.uniform(lo, hi))
        if x <= lo or x >= hi or abs(x + 1.0) <= 1e-6:
            continue
        y = -x
        out.append(SignPatternCheck(n, y, expected, diagonalize(seq, y, trace=False).sign_pattern))
    return out


def report_json(report: ConjectureReport) -> str:
    return json.dumps(report.to_dict())
