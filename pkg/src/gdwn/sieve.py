"""Greedy sieve for the pairing function pi of a diagonal Nim game.

For each column n, pi(n) is the least value v such that no legal move
connects (n, v) to an earlier (j, pi(j)).  A move along pair (p, q)
reaches column j only when n - j is an exact positive multiple of q
(forbidding pi(j) + t*p) or of p (forbidding pi(j) + t*q); pairs with
gcd > 1, such as (2, 4), make the divisibility condition essential.
For games containing (0, 1) the resulting pi is an involution and
{{n, pi(n)}} is exactly the set of losing positions, which the
brute-force grid oracle confirms in the test suite.

Two engines are provided: a direct reference implementation and a
stamped, compiled one roughly three orders of magnitude faster.  Their
outputs are required (and tested) to be identical.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import BudgetExceeded
from .games import GameSpec

DEFAULT_CAP_FACTOR = 16

ENGINES = ("naive", "fast", "auto")


@dataclass(frozen=True)
class PTable:
    """The sieve output on [0, n_max] plus the derived index sequences.

    u_set holds the indices i with pi(i) >= i (in increasing order),
    l_set the rest.  a = u_set and b = pi applied to u_set, so that
    (a_k, b_k) enumerates each losing pair once from its lower side.
    """

    spec: GameSpec
    n_max: int
    pi: tuple[int, ...]
    u_set: tuple[int, ...]
    l_set: tuple[int, ...]
    a: tuple[int, ...]
    b: tuple[int, ...]

    def pair_count(self) -> int:
        return len(self.a)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(zip(self.a, self.b))

    def p_positions_within(self, xmax: int, ymax: int) -> set[tuple[int, int]]:
        """Symmetrized pair set clipped to a grid (for oracle comparison)."""
        out = set()
        for i, v in enumerate(self.pi):
            if i <= xmax and v <= ymax:
                out.add((i, v))
            if v <= xmax and i <= ymax:
                out.add((v, i))
        return out


def default_cap(n_max: int) -> int:
    return DEFAULT_CAP_FACTOR * (n_max + 1)


def _pi_naive(pairs, n_max, cap):
    pi: list[int] = []
    for n in range(n_max + 1):
        forbidden = set()
        for p, q in pairs:
            j = n - q
            t = 1
            while j >= 0:
                forbidden.add(pi[j] + t * p)
                j -= q
                t += 1
            if 0 < p and p != q:
                j = n - p
                t = 1
                while j >= 0:
                    forbidden.add(pi[j] + t * q)
                    j -= p
                    t += 1
        v = 0
        while v in forbidden:
            v += 1
            if v > cap:
                raise BudgetExceeded(
                    f"mex scan passed cap {cap} at column {n}", column=n
                )
        pi.append(v)
    return pi


def _pi_fast(pairs, n_max, cap):
    ps = np.array([p for p, _ in pairs], dtype=np.int64)
    qs = np.array([q for _, q in pairs], dtype=np.int64)
    has_nim = (0, 1) in pairs
    if _kernels.HAVE_NUMBA:
        pi, failed = _kernels.sieve_kernel(n_max, ps, qs, has_nim, cap)
        pi = [int(v) for v in pi]
    else:
        pi, failed = _kernels.sieve_stamped_python(n_max, ps, qs, has_nim, cap)
    if failed >= 0:
        raise BudgetExceeded(
            f"mex scan passed cap {cap} at column {failed}", column=failed
        )
    return pi


def compute_pi(
    spec: GameSpec, n_max: int, engine: str = "auto", cap: int | None = None
) -> PTable:
    """Run the sieve up to column n_max.

    engine is "naive", "fast" or "auto" (fast when the compiled kernel
    is importable).  cap bounds the values the mex scan may visit;
    passing it raises BudgetExceeded, which no known game does at the
    default of 16*(n_max + 1).
    """
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    if engine not in ENGINES:
        raise ValueError(f"engine must be one of {ENGINES}, got {engine!r}")
    if cap is None:
        cap = default_cap(n_max)
    if engine == "naive":
        pi = _pi_naive(spec.pairs, n_max, cap)
    else:
        pi = _pi_fast(spec.pairs, n_max, cap)
    return table_from_pi(spec, n_max, pi)


def table_from_pi(spec: GameSpec, n_max: int, pi) -> PTable:
    """Rebuild a PTable from an already-known pi array (deserialization)."""
    pi = [int(v) for v in pi]
    if len(pi) != n_max + 1:
        raise ValueError(f"pi must have {n_max + 1} entries, got {len(pi)}")
    u_set = tuple(i for i, v in enumerate(pi) if v >= i)
    l_set = tuple(i for i, v in enumerate(pi) if v < i)
    return PTable(
        spec=spec,
        n_max=n_max,
        pi=tuple(pi),
        u_set=u_set,
        l_set=l_set,
        a=u_set,
        b=tuple(pi[i] for i in u_set),
    )


def derive_sequences(table: PTable):
    """The (a, b, U, L) view of a computed table."""
    return table.a, table.b, table.u_set, table.l_set


@dataclass(frozen=True)
class DerivedRows:
    """Difference rows printed alongside (a, b): delta = b - a,
    gamma = b - mult_lo*a, eta = mult_hi*b - a."""

    delta: tuple[int, ...]
    gamma: tuple[int, ...]
    eta: tuple[int, ...]
    mult_lo: int
    mult_hi: int


def derive_rows(table: PTable, mult_lo: int = 2, mult_hi: int = 2) -> DerivedRows:
    a, b = table.a, table.b
    return DerivedRows(
        delta=tuple(bb - aa for aa, bb in zip(a, b)),
        gamma=tuple(bb - mult_lo * aa for aa, bb in zip(a, b)),
        eta=tuple(mult_hi * bb - aa for aa, bb in zip(a, b)),
        mult_lo=mult_lo,
        mult_hi=mult_hi,
    )


@dataclass(frozen=True)
class InvolutionReport:
    """Involution check: every i with pi(i) inside the table must satisfy
    pi(pi(i)) == i; `boundary` lists the columns whose partner lies past
    n_max and therefore cannot be checked yet."""

    violations: tuple[tuple[int, int, int], ...]
    boundary: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_involution(table: PTable) -> InvolutionReport:
    pi = table.pi
    n_max = table.n_max
    violations = []
    boundary = []
    for i, v in enumerate(pi):
        if v > n_max:
            boundary.append(i)
        elif pi[v] != i:
            violations.append((i, v, pi[v]))
    return InvolutionReport(tuple(violations), tuple(boundary))


def settled_value_bound(table: PTable) -> int:
    """Least value not yet covered by a or b.

    Every value below the bound has its pair fully decided; b values
    above it may still be missing partners past n_max.
    """
    covered = set(table.a) | set(table.b)
    m = 0
    while m in covered:
        m += 1
    return m


@dataclass(frozen=True)
class ComplementarityReport:
    """Every settled value is covered by exactly one pair.

    A self-pair (a_i == b_i, e.g. the origin) counts once.  For games
    with both (0,1) and (1,1) the only self-pair is (0,0), so this is
    equivalent to: a and b partition the settled values, meeting at 0.
    """

    bound: int
    duplicates: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.duplicates


def check_complementarity(table: PTable) -> ComplementarityReport:
    bound = settled_value_bound(table)
    counts: dict[int, int] = {}
    for a_i, b_i in zip(table.a, table.b):
        for v in {a_i, b_i}:
            if v < bound:
                counts[v] = counts.get(v, 0) + 1
    duplicates = tuple(sorted(v for v, c in counts.items() if c > 1))
    return ComplementarityReport(bound=bound, duplicates=duplicates)


def check_u_density(table: PTable) -> tuple[int, ...]:
    """Indices n where #(U through n) falls below (n+1)/2; none expected
    for any involution."""
    bad = []
    count = 0
    in_u = set(table.u_set)
    for n in range(table.n_max + 1):
        if n in in_u:
            count += 1
        if 2 * count < n + 1:
            bad.append(n)
    return tuple(bad)


def check_a_density(table: PTable) -> tuple[int, ...]:
    """Bounds m where #{i : a_i <= m} fails to exceed m/2."""
    bad = []
    count = 0
    a = table.a
    idx = 0
    for m in range(table.n_max + 1):
        while idx < len(a) and a[idx] <= m:
            count += 1
            idx += 1
        if 2 * count <= m:
            bad.append(m)
    return tuple(bad)


def delta_values_distinct(table: PTable) -> bool:
    """Whether the differences b - a are pairwise distinct."""
    deltas = [bb - aa for aa, bb in zip(table.a, table.b)]
    return len(set(deltas)) == len(deltas)


def b_increasing(table: PTable) -> bool:
    """Whether b is strictly increasing (true exactly for Wythoff-like
    solutions; exposed as a probe, no converse asserted)."""
    b = table.b
    return all(b[i] < b[i + 1] for i in range(len(b) - 1))
