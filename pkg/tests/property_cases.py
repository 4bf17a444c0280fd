"""Instance generators for alpha-sequence property tests.

Shifts are drawn from the range that matters: sigma = -lambda
for an eigenvalue outside the spectral gap, i.e. sigma > (1 + sqrt 2)/2 or
sigma < -(sqrt 2 - 1)/2.
"""

import math

import numpy as np

from threshspec.diagonalize import diagonalize, transfer_eval
from threshspec.exceptions import SingularityEncountered
from threshspec.diagonalize import alpha_trace
from threshspec.sequences import CreationSequence, enumerate_connected

SIGMA_POS_MIN = (1 + math.sqrt(2)) / 2
SIGMA_NEG_MAX = -(math.sqrt(2) - 1) / 2

# flipped bit value, sign of sigma, hypothesis on (alpha_{l+1}, sigma), expected sign of change
PERTURBATION_ITEMS = {
    "to1_pos_mid": ("1", +1, lambda a, s: 1 / s < a < 2, -1),
    # f < 0 < g needs alpha + sigma - 2 < 0 as well
    "to1_pos_low": ("1", +1, lambda a, s: a < 1 / s and a + s - 2 < 0, -1),
    # f > g at the flipped step fails for 2 < alpha < 2 - sigma
    "to1_neg": ("1", -1, lambda a, s: 1 / s < a and not 2 < a < 2 - s, +1),
    "to0_pos_high": ("0", +1, lambda a, s: a > 2, -1),
    "to0_neg_low": ("0", -1, lambda a, s: a < 1 / s, +1),
}


def random_connected(rng, n_min=4, n_max=12):
    n = int(rng.integers(n_min, n_max + 1))
    middle = "".join(rng.choice(["0", "1"], n - 2))
    return CreationSequence("0" + middle + "1")


def sample_sigma(rng, sign, n):
    if sign > 0:
        return float(rng.uniform(SIGMA_POS_MIN, n))
    return -float(rng.uniform(-SIGMA_NEG_MAX, n))


def _crosses_pole(seq, l, a, b, sigma):
    pole = 2 - sigma
    # steps i = l..2 apply g exactly when b_{i-1} = 1
    return any(seq.bits[i - 2] == "1" and (a[i - 1] - pole) * (b[i - 1] - pole) <= 0 for i in range(2, l + 1))


def perturbation_instances(item, count, rng):
    """Yield (seq, l, sigma, alpha1, alpha1_flipped) meeting the flip hypotheses."""
    bit, sign, hyp, _ = PERTURBATION_ITEMS[item]
    found = 0
    while found < count:
        seq = random_connected(rng)
        candidates = [l for l in range(2, seq.n) if seq.bits[l - 1] == bit]
        if not candidates:
            continue
        l = int(rng.choice(candidates))
        sigma = sample_sigma(rng, sign, seq.n)
        try:
            a = alpha_trace(seq, sigma)
            b = alpha_trace(seq.flip(l), sigma)
        except SingularityEncountered:
            continue
        if not hyp(a[l], sigma) or _crosses_pole(seq, l, a, b, sigma):
            continue
        found += 1
        yield seq, l, sigma, a[0], b[0]


def _phi(seq, m, sigma):
    tr = diagonalize(seq, sigma)
    for rec in tr.subcase_log:
        if rec.m <= m:
            break
        if rec.case not in ("1a", "2b"):
            return None
    return tr.alpha_sequence[m - 1] + sigma - 2


def singular_shift_instances(n_max=8, grid=np.linspace(-5.0, 5.0, 1001)):
    """Shifts at which subcase 1c fires, found as roots of alpha_m + sigma - 2."""
    out = []
    for n in range(3, n_max + 1):
        for seq in enumerate_connected(n):
            for m in range(3, n + 1):
                if seq.bits[m - 2] != "1" or seq.bits[m - 1] != "1":
                    continue
                vals = [_phi(seq, m, s) for s in grid]
                for (s0, v0), (s1, v1) in zip(zip(grid, vals), zip(grid[1:], vals[1:])):
                    if v0 is None or v1 is None or v0 * v1 > 0:
                        continue
                    lo, hi, flo = s0, s1, v0
                    for _ in range(200):
                        mid = 0.5 * (lo + hi)
                        fm = _phi(seq, m, mid)
                        if fm is None:
                            break
                        if fm == 0 or mid in (lo, hi):
                            lo = hi = mid
                            break
                        if (fm > 0) == (flo > 0):
                            lo, flo = mid, fm
                        else:
                            hi = mid
                    root = 0.5 * (lo + hi)
                    if abs(root - 1) < 1e-6 or abs(root) < 1e-6:
                        continue
                    tr = diagonalize(seq, root)
                    if any(r.case == "1c" and r.m == m for r in tr.subcase_log):
                        out.append((seq, m, root, tr))
    return out


def monotonicity_samples(rng, count):
    """(sigma, alpha_lo, alpha_hi) with both alphas in (2 - sigma, inf) and sigma away from 1."""
    out = []
    while len(out) < count:
        sigma = float(rng.uniform(-10, 10))
        if abs(sigma - 1) < 1e-3 or abs(sigma) < 1e-3:
            continue
        lo = 2 - sigma
        a1, a2 = sorted(lo + rng.exponential(3.0, size=2))
        if a2 - a1 < 1e-9 or a1 - lo < 1e-9:
            continue
        out.append((sigma, float(a1), float(a2)))
    return out


def f(sigma, alpha):
    return transfer_eval("f", sigma, alpha)


def g(sigma, alpha):
    return transfer_eval("g", sigma, alpha)
