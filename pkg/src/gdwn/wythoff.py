"""Beatty sequences for the golden ratio, pair classification, and the
Wythoff / dual Wythoff arrays.

All floors and ceilings of n*phi are computed with integer arithmetic
(isqrt), never floats: float rounding flips classifications near the
Beatty boundary once n gets large.  Python integers are unbounded, so
there is no overflow range to guard.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import InvalidPair

NON_SPLITTING = "non-splitting"
WYTHOFF = "wythoff"
DUAL = "dual"


def beatty_a(n: int) -> int:
    """floor(n * phi), exactly.

    n*phi = (n + n*sqrt(5)) / 2 and floor(n*sqrt(5)) = isqrt(5*n^2);
    the parity argument shows the outer floor commutes with replacing
    n*sqrt(5) by its floor.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return (n + isqrt(5 * n * n)) // 2


def beatty_b(n: int) -> int:
    """floor(n * phi^2) = floor(n * phi) + n."""
    return beatty_a(n) + n


def ceil_phi(n: int) -> int:
    """ceil(n * phi); n*phi is irrational for n >= 1, so this is A_n + 1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return 0 if n == 0 else beatty_a(n) + 1


def ratio_below_phi(p: int, q: int) -> bool:
    """Exact test for q/p < phi, i.e. (2q - p)^2 < 5 p^2."""
    if p < 1:
        raise ValueError("p must be positive")
    d = 2 * q - p
    return d * d < 5 * p * p


@dataclass(frozen=True)
class PairClass:
    """Classification of a pair: "wythoff"/"dual" carry the Beatty index."""

    kind: str
    index: int | None = None

    @property
    def is_splitting(self) -> bool:
        return self.kind != NON_SPLITTING

    def describe(self) -> str:
        if self.kind == WYTHOFF:
            return f"Wythoff pair (index {self.index})"
        if self.kind == DUAL:
            return f"dual Wythoff pair (index {self.index})"
        return "non-splitting"


def classify_pair(p: int, q: int, strict: bool = True) -> PairClass:
    """Classify (p, q) as a Wythoff pair, a dual Wythoff pair, or neither.

    With l = q - p, the pair is (A_l, B_l) iff p == floor(l*phi) and
    (A_l + 1, B_l + 1) iff p == ceil(l*phi).  Callers sweeping a grid can
    pass strict=False to get NON_SPLITTING back for p >= q or p < 1
    instead of an exception.
    """
    if not (1 <= p < q):
        if strict:
            raise InvalidPair(f"need 1 <= p < q, got ({p}, {q})")
        return PairClass(NON_SPLITTING)
    l = q - p
    a = beatty_a(l)
    if p == a:
        return PairClass(WYTHOFF, l)
    if p == a + 1:
        return PairClass(DUAL, l)
    return PairClass(NON_SPLITTING)


def splitting_multiple(p: int, q: int, tmax: int) -> int | None:
    """Least t in [1, tmax] such that (t*p, t*q) is a splitting pair."""
    if not (1 <= p < q):
        raise InvalidPair(f"need 1 <= p < q, got ({p}, {q})")
    if tmax < 1:
        raise ValueError("tmax must be >= 1")
    for t in range(1, tmax + 1):
        if classify_pair(t * p, t * q).is_splitting:
            return t
    return None


# --- Fibonacci / Zeckendorf -------------------------------------------------

_FIBS = [0, 1]  # F_0 = 0, F_1 = 1, F_2 = 1, ...


def fib(k: int) -> int:
    while len(_FIBS) <= k:
        _FIBS.append(_FIBS[-1] + _FIBS[-2])
    return _FIBS[k]


@dataclass(frozen=True)
class ZeckendorfRep:
    """Indices k (>= 2, non-adjacent, descending order) with n = sum F_k."""

    indices: tuple[int, ...]

    def values(self) -> tuple[int, ...]:
        return tuple(fib(k) for k in self.indices)

    def total(self) -> int:
        return sum(self.values())


def zeckendorf(n: int) -> ZeckendorfRep:
    """Greedy decomposition into non-adjacent Fibonacci numbers (F_2 = 1)."""
    if n < 1:
        raise ValueError("zeckendorf needs n >= 1")
    k = 2
    while fib(k + 1) <= n:
        k += 1
    indices = []
    rest = n
    while rest > 0:
        while fib(k) > rest:
            k -= 1
        indices.append(k)
        rest -= fib(k)
        k -= 2
    return ZeckendorfRep(tuple(indices))


def z_shift(rep: ZeckendorfRep) -> int:
    """Right shift: each F_k becomes F_{k+1}."""
    return sum(fib(k + 1) for k in rep.indices)


def _z_unshift(n: int) -> int:
    """Left shift of a Zeckendorf rep: each F_k becomes F_{k-1}."""
    return sum(fib(k - 1) for k in zeckendorf(n).indices)


# --- interspersion arrays ---------------------------------------------------


def _fill_row(first: int, second: int, cols: int) -> list[int]:
    row = [first, second]
    while len(row) < cols:
        row.append(row[-1] + row[-2])
    return row[:cols]


def _next_seed(rows: list[list[int]], start: int) -> int:
    """Least integer >= start absent from the given rows, extending each
    row past the candidate so absence is decided against the full array."""
    seed = start
    while True:
        hit = False
        for row in rows:
            while row[-1] < seed:
                row.append(row[-1] + row[-2])
            if seed in row:
                hit = True
                break
        if not hit:
            return seed
        seed += 1


def wythoff_array(rows: int, cols: int) -> list[list[int]]:
    """First rows x cols entries of the Wythoff array.

    Each row starts at the least positive integer absent from earlier
    rows, followed by its Zeckendorf right shift; later entries obey
    x[k+2] = x[k] + x[k+1].  Consecutive column pairs (2j+1, 2j+2) are
    Wythoff pairs.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be >= 1")
    built: list[list[int]] = []
    for _ in range(rows):
        seed = _next_seed(built, 1)
        built.append(_fill_row(seed, z_shift(zeckendorf(seed)), max(cols, 2)))
    return [row[:cols] for row in built]


def dual_wythoff_array(rows: int, cols: int) -> list[list[int]]:
    """First rows x cols entries of the dual Wythoff array.

    Rows are seeded by the least integer >= 2 absent so far; the second
    entry is seed + leftshift(seed - 1), which makes (seed, second) the
    dual pair (A_l + 1, B_l + 1) whose A_l = seed - 1.  The Fibonacci
    recurrence then continues the row.
    """
    if rows < 1 or cols < 1:
        raise ValueError("rows and cols must be >= 1")
    built: list[list[int]] = []
    for _ in range(rows):
        seed = _next_seed(built, 2)
        built.append(_fill_row(seed, seed + _z_unshift(seed - 1), max(cols, 2)))
    return [row[:cols] for row in built]
