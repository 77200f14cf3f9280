"""Mechanical words of slope phi over the alphabet {1, 2}.

The lower word takes letters floor((n+1)*phi) - floor(n*phi), the upper
word the ceiling analogue.  They differ only in letter 0 (1 vs 2) and
share their factor set.  Prefix sums telescope: the first n letters of
the lower word sum to floor(n*phi), of the upper word to ceil(n*phi).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidPair
from .wythoff import beatty_a, ceil_phi

LOWER = "lower"
UPPER = "upper"


@dataclass(frozen=True)
class MechanicalWord:
    kind: str
    letters: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.letters)

    def as_string(self) -> str:
        return "".join(str(c) for c in self.letters)

    def letter_sum(self) -> int:
        return sum(self.letters)


@dataclass(frozen=True)
class Factor:
    """A contiguous subword with its origin, length, height and sum."""

    letters: tuple[int, ...]
    start: int

    @property
    def length(self) -> int:
        return len(self.letters)

    @property
    def height(self) -> int:
        return sum(1 for c in self.letters if c == 1)

    @property
    def total(self) -> int:
        return sum(self.letters)


def _floor_fn(kind: str):
    if kind == LOWER:
        return beatty_a
    if kind == UPPER:
        return ceil_phi
    raise ValueError(f"kind must be {LOWER!r} or {UPPER!r}, got {kind!r}")


def word_prefix(kind: str, n: int) -> MechanicalWord:
    """The first n letters of the lower or upper word."""
    if n < 0:
        raise ValueError("n must be non-negative")
    f = _floor_fn(kind)
    prev = f(0)
    letters = []
    for k in range(1, n + 1):
        cur = f(k)
        letters.append(cur - prev)
        prev = cur
    return MechanicalWord(kind, tuple(letters))


def prefix_sum(kind: str, n: int) -> int:
    """Sum of the first n letters, in closed form (telescoping)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return _floor_fn(kind)(n)


@dataclass(frozen=True)
class BalanceReport:
    """Min/max number of 1s over every window of each length.

    A word is balanced when the heights of equal-length factors never
    differ by more than one.  `violations` lists (length, min_height,
    max_height, min_start, max_start) for each offending length.
    """

    length: int
    violations: tuple[tuple[int, int, int, int, int], ...]

    @property
    def balanced(self) -> bool:
        return not self.violations


def balance_report(letters: Sequence[int]) -> BalanceReport:
    n = len(letters)
    ones = [0] * (n + 1)
    for i, c in enumerate(letters):
        ones[i + 1] = ones[i] + (1 if c == 1 else 0)
    violations = []
    for size in range(1, n + 1):
        lo = hi = ones[size] - ones[0]
        lo_at = hi_at = 0
        for start in range(1, n - size + 1):
            h = ones[start + size] - ones[start]
            if h < lo:
                lo, lo_at = h, start
            elif h > hi:
                hi, hi_at = h, start
        if hi - lo > 1:
            violations.append((size, lo, hi, lo_at, hi_at))
    return BalanceReport(length=n, violations=tuple(violations))


def check_balanced(kind: str, n: int) -> BalanceReport:
    """Exhaustive balance check over the length-n prefix."""
    if n < 2:
        raise ValueError("need n >= 2 to compare factors")
    return balance_report(word_prefix(kind, n).letters)


@dataclass(frozen=True)
class FactorSumReport:
    """Observed factor sums per length against the two admissible values.

    For each length l <= maxlen the only sums that may occur are the two
    prefix sums of the lower and upper words, which differ by exactly 1.
    """

    maxlen: int
    window: int
    admissible: tuple[tuple[int, tuple[int, int]], ...]
    violations: tuple[tuple[int, int, int], ...]  # (length, start, sum)

    @property
    def ok(self) -> bool:
        return not self.violations


def factor_sum_report(maxlen: int, window: int) -> FactorSumReport:
    """Check every factor of both word prefixes against the admissible sums."""
    if maxlen < 1:
        raise ValueError("maxlen must be >= 1")
    if window < maxlen:
        raise ValueError("window must cover maxlen")
    admissible = tuple(
        (size, (prefix_sum(LOWER, size), prefix_sum(UPPER, size)))
        for size in range(1, maxlen + 1)
    )
    allowed = {size: set(sums) for size, sums in admissible}
    violations = []
    for kind in (LOWER, UPPER):
        letters = word_prefix(kind, window).letters
        for size in range(1, maxlen + 1):
            total = sum(letters[:size])
            for start in range(0, window - size + 1):
                if start > 0:
                    total += letters[start + size - 1] - letters[start - 1]
                if total not in allowed[size]:
                    violations.append((size, start, total))
    return FactorSumReport(
        maxlen=maxlen,
        window=window,
        admissible=admissible,
        violations=tuple(violations),
    )


def factor_set(letters: Sequence[int], size: int) -> set[tuple[int, ...]]:
    """All distinct factors of the given length."""
    seq = tuple(letters)
    return {seq[i : i + size] for i in range(len(seq) - size + 1)}


def find_split_witness(p: int, q: int, bound: int | None = None) -> tuple[int, int] | None:
    """Least (m, n) with A_n - A_m = p and B_n - B_m = q, if one exists.

    Since B_k - A_k = k, any solution has n - m = q - p, so only m is
    scanned.  The default bound 4*q is comfortably past every witness
    observed for pairs up to a few hundred; None means no witness with
    n <= bound.
    """
    if not (1 <= p < q):
        raise InvalidPair(f"need 1 <= p < q, got ({p}, {q})")
    if bound is None:
        bound = 4 * q
    if bound < q:
        raise ValueError("bound must be at least q")
    gap = q - p
    for m in range(0, bound - gap + 1):
        if beatty_a(m + gap) - beatty_a(m) == p:
            return (m, m + gap)
    return None
