"""Creation sequences of threshold graphs.

A threshold graph on n vertices is stored as a string of '0'/'1' characters
b_1 ... b_n, where b_i = 1 means vertex i was added as a dominating vertex
and b_i = 0 means it was added isolated. The first bit is always 0.
"""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .exceptions import (
    CapExceeded,
    EmptyInput,
    FirstBitNotZero,
    IllegalCharacter,
    NotConnected,
    OrderTooSmall,
)

DEFAULT_CAP = 24
CAP_ENV_VAR = "THRESHSPEC_CAP"


@dataclass(frozen=True, order=True)
class CreationSequence:
    """Validated creation sequence; immutable and hashable."""

    bits: str

    def __post_init__(self):
        if not self.bits:
            raise EmptyInput("creation sequence is empty")
        for i, ch in enumerate(self.bits):
            if ch not in "01":
                raise IllegalCharacter(i, ch)
        if self.bits[0] != "0":
            raise FirstBitNotZero("b_1 must be 0, got " + self.bits[:8])

    @property
    def n(self) -> int:
        return len(self.bits)

    @property
    def connected(self) -> bool:
        return self.n == 1 or self.bits[-1] == "1"

    def __len__(self):
        return len(self.bits)

    def __str__(self):
        return self.bits

    def flip(self, index: int) -> "CreationSequence":
        """Return a copy with b_index toggled (1-based index)."""
        i = index - 1
        flipped = "1" if self.bits[i] == "0" else "0"
        return CreationSequence(self.bits[:i] + flipped + self.bits[i + 1:])


RunLengthForm = tuple  # tuple of (zero_run, one_run) pairs


def parse(text: str) -> CreationSequence:
    """Parse a raw bit string such as ``"0101"``."""
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty sequence text")
    offset = len(text) - len(text.lstrip())
    for i, ch in enumerate(stripped):
        if ch not in "01":
            raise IllegalCharacter(offset + i, ch)
    return CreationSequence(stripped)


_TOKEN = re.compile(r"^([01])(?:\^(\d+))?$")


def parse_run_length(text: str) -> CreationSequence:
    """Parse whitespace separated tokens like ``"0^2 1 0 1"``.

    A caret gives the repetition count of the digit; no caret means once.
    """
    tokens = text.split()
    if not tokens:
        raise EmptyInput("empty run-length text")
    parts = []
    pos = 0
    for tok in tokens:
        m = _TOKEN.match(tok)
        if m is None:
            bad = next((c for c in tok if c not in "01^0123456789"), tok[0])
            raise IllegalCharacter(text.index(tok, pos), bad)
        pos = text.index(tok, pos) + len(tok)
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count < 1:
            raise IllegalCharacter(pos - 1, "0")
        parts.append(m.group(1) * count)
    return CreationSequence("".join(parts))


def from_text(text: str) -> CreationSequence:
    """Accept either a raw bit string or run-length tokens."""
    if "^" in text or len(text.split()) > 1:
        return parse_run_length(text)
    return parse(text)


def to_run_length(seq: CreationSequence) -> RunLengthForm:
    """Split a connected sequence into blocks (s_i, t_i) of 0-runs and 1-runs."""
    if seq.n < 2 or not seq.connected:
        raise NotConnected(f"{seq.bits} is not a connected sequence with n >= 2")
    runs = [len(list(g)) for _, g in itertools.groupby(seq.bits)]
    return tuple((runs[i], runs[i + 1]) for i in range(0, len(runs), 2))


def from_run_length(blocks) -> CreationSequence:
    parts = []
    for s, t in blocks:
        if s < 1 or t < 1:
            raise ValueError(f"run lengths must be >= 1, got {(s, t)}")
        parts.append("0" * s + "1" * t)
    return CreationSequence("".join(parts))


def anti_regular(n: int) -> CreationSequence:
    """Creation sequence of the connected anti-regular graph A_n."""
    if n < 2:
        raise OrderTooSmall(f"anti-regular graph needs n >= 2, got {n}")
    if n % 2 == 0:
        return CreationSequence("01" * (n // 2))
    return CreationSequence("0" + "01" * ((n - 1) // 2))


def complete(n: int) -> CreationSequence:
    return CreationSequence("0" + "1" * (n - 1))


def adjacency(seq: CreationSequence) -> np.ndarray:
    """Dense 0/1 adjacency matrix; vertex i with b_i = 1 joins every j < i."""
    n = seq.n
    b = np.frombuffer(seq.bits.encode("ascii"), dtype=np.uint8) == ord("1")
    lower = np.tril(np.ones((n, n), dtype=np.int8), k=-1) * b[:, None]
    return lower + lower.T


def degrees(seq: CreationSequence) -> list[int]:
    """Vertex degrees without building the matrix."""
    bits = seq.bits
    n = len(bits)
    deg = [0] * n
    ones_after = 0
    for i in range(n - 1, -1, -1):
        # neighbours: earlier vertices if dominating, plus later dominating ones
        deg[i] = (i if bits[i] == "1" else 0) + ones_after
        if bits[i] == "1":
            ones_after += 1
    return deg


def enumeration_cap() -> int:
    raw = os.environ.get(CAP_ENV_VAR)
    return int(raw) if raw else DEFAULT_CAP


def enumerate_connected(n: int, cap: int | None = None) -> Iterator[CreationSequence]:
    """Yield all 2^(n-2) connected sequences of length n in lexicographic order."""
    cap = enumeration_cap() if cap is None else cap
    if n < 2:
        raise OrderTooSmall(f"need n >= 2, got {n}")
    if n > cap:
        raise CapExceeded(f"n={n} exceeds enumeration cap {cap}")
    width = n - 2
    for k in range(1 << width):
        middle = format(k, f"0{width}b") if width else ""
        yield CreationSequence("0" + middle + "1")


def enumerate_critical(n: int) -> list[CreationSequence]:
    """The n-2 critical sequences for order n.

    Runs are listed as s_1, t_1, s_2, t_2, ..., s_k, t_k. For even n = 2k+2,
    s_1 = 2 and exactly one other run is 2, or s_1 = 3 and all else 1.
    For odd n = 2k+1, s_1 = 1 and exactly one of the other runs is 2.
    """
    if n < 5:
        raise OrderTooSmall(f"critical families start at n = 5, got {n}")
    if n % 2 == 0:
        k = (n - 2) // 2
        first = 2
    else:
        k = (n - 1) // 2
        first = 1
    out = []
    for pos in range(1, 2 * k):
        runs = [first] + [1] * (2 * k - 1)
        runs[pos] = 2
        out.append(_from_runs(runs))
    if n % 2 == 0:
        out.append(_from_runs([3] + [1] * (2 * k - 1)))
    return out


def critical_by_position(n: int) -> list[CreationSequence]:
    """Critical sequences with the widened run at positions t_1, s_2, ..., t_k.

    Excludes the even-order s_1 = 3 member.
    """
    crit = enumerate_critical(n)
    return crit[:-1] if n % 2 == 0 else crit


def _from_runs(runs) -> CreationSequence:
    return CreationSequence("".join(("0" if i % 2 == 0 else "1") * r for i, r in enumerate(runs)))
