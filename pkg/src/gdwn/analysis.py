"""Ratio-series analysis: beam splitting, Wythoff equivalence, closed forms.

The limit statements about b_n/a_n are not decidable from a finite
table, so the split detector is an explicitly finite-sample proxy: drop
a warm-up prefix, then look for grid-aligned intervals that contain no
tail ratio at all while a non-negligible share of the tail sits on each
side.  Ratios are kept as exact rationals throughout the search; floats
appear only in the reported summaries.
"""

from __future__ import annotations

import os
import statistics
from bisect import bisect_left
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby

from .errors import InsufficientData, WrongSpec
from .games import GameSpec, solve_bruteforce, validate_spec, wythoff_extension
from .sieve import PTable, compute_pi
from .wythoff import beatty_a, beatty_b, classify_pair, ratio_below_phi

DEFAULT_GAP_RESOLUTION = Fraction(1, 256)
DEFAULT_MIN_BEAM_FRACTION = 0.05

SIDE_BELOW = "below"
SIDE_ABOVE = "above"
SIDE_ALL = "all"


def worker_count(requested: int | None = None) -> int:
    """Worker pool size: explicit argument, else GDWN_THREADS, else CPUs."""
    if requested is not None:
        return max(1, requested)
    env = os.environ.get("GDWN_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# --- ratio series ------------------------------------------------------------


@dataclass(frozen=True)
class RatioEntry:
    index: int
    x: int
    y: int
    ratio: Fraction

    @property
    def ratio_float(self) -> float:
        return self.y / self.x


@dataclass(frozen=True)
class RatioSeries:
    """Sequence of (index, x, y, y/x) with x >= 1 for every entry."""

    spec: GameSpec
    n_max: int
    kind: str  # "pairs" for (a_n, b_n), "columns" for (n, pi(n))
    entries: tuple[RatioEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)


def ratio_series(table: PTable) -> RatioSeries:
    """Ratios b_n/a_n for n >= 1 (index 0 has a_0 = 0 and is skipped)."""
    if table.pair_count() < 2:
        raise InsufficientData("need at least two pairs")
    entries = tuple(
        RatioEntry(index=n, x=a, y=b, ratio=Fraction(b, a))
        for n, (a, b) in enumerate(zip(table.a, table.b))
        if n >= 1
    )
    return RatioSeries(spec=table.spec, n_max=table.n_max, kind="pairs", entries=entries)


def full_ratio_series(table: PTable) -> RatioSeries:
    """Ratios pi(n)/n over every column n >= 1, both sides of the diagonal."""
    if table.n_max < 1:
        raise InsufficientData("need at least one column past 0")
    entries = tuple(
        RatioEntry(index=n, x=n, y=table.pi[n], ratio=Fraction(table.pi[n], n))
        for n in range(1, table.n_max + 1)
    )
    return RatioSeries(spec=table.spec, n_max=table.n_max, kind="columns", entries=entries)


# --- split detection ----------------------------------------------------------


@dataclass(frozen=True)
class BeamEstimate:
    """Summary of one band of tail ratios.

    slope is the arithmetic mean; median and last_decile_mean are drift
    diagnostics (some games show bands that wander rather than settle).
    """

    side: str
    slope: float
    density: float
    median: float
    last_decile_mean: float
    count: int
    index_first: int
    index_last: int
    ratio_min: float
    ratio_max: float


@dataclass(frozen=True)
class SplitReport:
    split: bool
    fold_count: int
    alpha: Fraction | None
    mu: Fraction | None
    gaps: tuple[tuple[Fraction, Fraction], ...]
    beams: tuple[BeamEstimate, ...]
    exceptional_count: int
    tail_mean: float
    tail_count: int
    min_tail: int
    gap_resolution: Fraction
    min_beam_fraction: float

    @property
    def gap(self) -> tuple[Fraction, Fraction] | None:
        if not self.split:
            return None
        return (self.alpha, self.alpha + self.mu)


def _grid_gap(r_lo: Fraction, r_hi: Fraction, res: Fraction):
    """Widest [alpha, alpha+mu) of grid multiples inside (r_lo, r_hi]."""
    k_lo = r_lo // res + 1
    k_hi = r_hi // res
    if k_hi - k_lo < 1:
        return None
    return (k_lo * res, (k_hi - k_lo) * res)


def _beam(entries, side: str, tail_count: int, late_cutoff: int) -> BeamEstimate:
    floats = [e.ratio_float for e in entries]
    late = [e.ratio_float for e in entries if e.index >= late_cutoff]
    return BeamEstimate(
        side=side,
        slope=statistics.fmean(floats),
        density=len(entries) / tail_count,
        median=statistics.median(floats),
        last_decile_mean=statistics.fmean(late) if late else float("nan"),
        count=len(entries),
        index_first=min(e.index for e in entries),
        index_last=max(e.index for e in entries),
        ratio_min=min(floats),
        ratio_max=max(floats),
    )


def _detect(series, max_gaps, min_tail, gap_resolution, min_beam_fraction):
    entries = series.entries
    if min_tail is None:
        min_tail = max(100, len(entries) // 20)
    if len(entries) < 2 * min_tail:
        raise InsufficientData(
            f"series has {len(entries)} entries; need at least {2 * min_tail}"
        )
    head = entries[:min_tail]
    tail = sorted(entries[min_tail:], key=lambda e: e.ratio)
    ratios = [e.ratio for e in tail]
    tn = len(ratios)

    # distinct ratio values with cumulative counts from below
    distinct = []
    seen = 0
    for value, group in groupby(ratios):
        seen += sum(1 for _ in group)
        distinct.append((value, seen))

    # candidate gaps between consecutive distinct values, grid-aligned,
    # with at least min_beam_fraction of the tail strictly on each side
    candidates = []
    for (r_lo, below), (r_hi, _) in zip(distinct, distinct[1:]):
        above = tn - below
        if below / tn < min_beam_fraction or above / tn < min_beam_fraction:
            continue
        gap = _grid_gap(r_lo, r_hi, gap_resolution)
        if gap is not None:
            candidates.append((gap[1], gap[0]))  # (mu, alpha)
    candidates.sort(key=lambda c: (-c[0], c[1]))

    # greedily accept the widest gaps while every resulting band keeps
    # its share of the tail
    accepted: list[tuple[Fraction, Fraction]] = []  # (alpha, mu)
    for mu, alpha in candidates:
        if len(accepted) >= max_gaps:
            break
        tentative = sorted(accepted + [(alpha, mu)])
        cuts = [0]
        for g_alpha, g_mu in tentative:
            cuts.append(bisect_left(ratios, g_alpha))
            cuts.append(bisect_left(ratios, g_alpha + g_mu))
        cuts.append(tn)
        bands = [cuts[i + 1] - cuts[i] for i in range(0, len(cuts) - 1, 2)]
        if all(b / tn >= min_beam_fraction for b in bands):
            accepted = tentative

    principal = max(accepted, key=lambda g: g[1]) if accepted else None
    beams = []
    if accepted:
        late_cutoff = _late_cutoff(entries[min_tail:])
        bounds: list[Fraction] = []
        for g_alpha, g_mu in accepted:
            bounds.extend([g_alpha, g_alpha + g_mu])
        cuts = [0] + [bisect_left(ratios, x) for x in bounds] + [tn]
        for i in range(0, len(cuts) - 1, 2):
            band = tail[cuts[i] : cuts[i + 1]]
            side = SIDE_BELOW if band[-1].ratio < principal[0] else SIDE_ABOVE
            beams.append(_beam(band, side, tn, late_cutoff))
    else:
        beams.append(_beam(tail, SIDE_ALL, tn, _late_cutoff(entries[min_tail:])))

    exceptional = 0
    if principal is not None:
        lo, width = principal
        exceptional = sum(1 for e in head if lo <= e.ratio < lo + width)

    return SplitReport(
        split=bool(accepted),
        fold_count=len(accepted),
        alpha=principal[0] if principal else None,
        mu=principal[1] if principal else None,
        gaps=tuple(accepted),
        beams=tuple(beams),
        exceptional_count=exceptional,
        tail_mean=statistics.fmean(e.ratio_float for e in tail),
        tail_count=tn,
        min_tail=min_tail,
        gap_resolution=gap_resolution,
        min_beam_fraction=min_beam_fraction,
    )


def _late_cutoff(tail_entries) -> int:
    first = min(e.index for e in tail_entries)
    last = max(e.index for e in tail_entries)
    return last - max(1, (last - first) // 10)


def detect_split(
    series: RatioSeries,
    min_tail: int | None = None,
    gap_resolution: Fraction = DEFAULT_GAP_RESOLUTION,
    min_beam_fraction: float = DEFAULT_MIN_BEAM_FRACTION,
) -> SplitReport:
    """Decide whether the tail of the series splits across one empty gap.

    The first min_tail entries (default max(100, 5%)) are discarded as
    the "finitely many exceptions"; the report counts how many of them
    fall inside the detected gap.
    """
    return _detect(series, 1, min_tail, gap_resolution, min_beam_fraction)


def detect_multi_split(
    series: RatioSeries,
    max_beams: int = 4,
    min_tail: int | None = None,
    gap_resolution: Fraction = DEFAULT_GAP_RESOLUTION,
    min_beam_fraction: float = DEFAULT_MIN_BEAM_FRACTION,
) -> SplitReport:
    """Like detect_split but cutting up to max_beams gaps, so the tail is
    clustered into at most max_beams + 1 bands; fold_count reports how
    many gaps were actually sustained."""
    if max_beams < 1:
        raise ValueError("max_beams must be >= 1")
    return _detect(series, max_beams, min_tail, gap_resolution, min_beam_fraction)


# --- Wythoff equivalence ------------------------------------------------------


@dataclass(frozen=True)
class EquivalenceReport:
    spec: GameSpec
    n_max: int
    equivalent: bool
    first_divergence: int | None
    divergent_pair: tuple[int, int] | None
    expected_pair: tuple[int, int] | None


def check_wythoff_equivalence(
    spec: GameSpec, n_max: int, table: PTable | None = None
) -> EquivalenceReport:
    """Compare the game's (a, b) pairs with the Wythoff pairs (A_n, B_n)."""
    if not spec.extends_wythoff():
        raise WrongSpec("spec must contain (0,1) and (1,1)")
    if table is None:
        table = compute_pi(spec, n_max)
    for i, (a, b) in enumerate(zip(table.a, table.b)):
        ea, eb = beatty_a(i), beatty_b(i)
        if (a, b) != (ea, eb):
            return EquivalenceReport(spec, n_max, False, i, (a, b), (ea, eb))
    return EquivalenceReport(spec, n_max, True, None, None, None)


@dataclass(frozen=True)
class SweepReport:
    p_max: int
    n_max: int
    checked_equivalent: int
    checked_splitting: int
    failures: tuple[tuple[int, int, bool, bool], ...]  # (p, q, expected, got)

    @property
    def ok(self) -> bool:
        return not self.failures


def splitting_pairs_up_to(p_max: int) -> list[tuple[int, int]]:
    """All Wythoff and dual Wythoff pairs with first component <= p_max."""
    out = []
    l = 1
    while True:
        a, b = beatty_a(l), beatty_b(l)
        if a > p_max:
            break
        out.append((a, b))
        if a + 1 <= p_max:
            out.append((a + 1, b + 1))
        l += 1
    return sorted(out)


def shallow_nonsplitting_pairs(p_max: int) -> list[tuple[int, int]]:
    """Non-splitting (p, q) with q/p below phi and p <= p_max."""
    out = []
    for p in range(1, p_max + 1):
        q = p + 1
        while ratio_below_phi(p, q):
            if not classify_pair(p, q).is_splitting:
                out.append((p, q))
            q += 1
    return out


def wythoff_equivalence_sweep(
    p_max: int = 40, n_max: int = 2000, workers: int | None = None
) -> SweepReport:
    """Equivalence holds exactly for the shallow non-splitting pairs.

    Every non-splitting pair with q/p < phi must give a game whose pairs
    agree with Wythoff Nim's out to n_max, and every splitting pair must
    diverge.  Results are aggregated in task order, so the report is
    deterministic regardless of pool size.
    """
    tasks = [(p, q, True) for p, q in shallow_nonsplitting_pairs(p_max)]
    tasks += [(p, q, False) for p, q in splitting_pairs_up_to(p_max)]

    def run(task):
        p, q, expected = task
        report = check_wythoff_equivalence(wythoff_extension(p, q), n_max)
        return (p, q, expected, report.equivalent)

    with ThreadPoolExecutor(max_workers=worker_count(workers)) as pool:
        results = list(pool.map(run, tasks))
    failures = tuple(r for r in results if r[2] != r[3])
    return SweepReport(
        p_max=p_max,
        n_max=n_max,
        checked_equivalent=sum(1 for t in tasks if t[2]),
        checked_splitting=sum(1 for t in tasks if not t[2]),
        failures=failures,
    )


@dataclass(frozen=True)
class WitnessSweepReport:
    bound: int
    checked: int
    failures: tuple[tuple[int, int, bool, bool], ...]  # (p, q, classified, witnessed)

    @property
    def ok(self) -> bool:
        return not self.failures


def witness_classifier_sweep(max_pq: int = 300) -> WitnessSweepReport:
    """Splitting-pair classification must coincide with the existence of a
    Beatty difference witness, for every 1 <= p < q <= max_pq."""
    from .words import find_split_witness

    failures = []
    checked = 0
    for p in range(1, max_pq):
        for q in range(p + 1, max_pq + 1):
            checked += 1
            classified = classify_pair(p, q).is_splitting
            witnessed = find_split_witness(p, q) is not None
            if classified != witnessed:
                failures.append((p, q, classified, witnessed))
    return WitnessSweepReport(bound=max_pq, checked=checked, failures=tuple(failures))


# --- closed-form families -----------------------------------------------------


@dataclass(frozen=True)
class ClosedFormReport:
    family: str
    r: int | None
    s: int | None
    n_max: int
    agrees: bool
    expected_agreement: bool
    mismatches: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.agrees == self.expected_agreement


CLOSED_FORM_FAMILIES = ("single_pair", "zero_s", "zero_s_and_ss", "nim_extension")


def _closed_form_member(family: str, r: int | None, s: int | None):
    if family == "single_pair":
        return lambda x, y: max(x, y) < s or min(x, y) < r
    if family == "zero_s":
        return lambda x, y: x // s == y // s
    if family == "zero_s_and_ss":

        def member(x, y):
            u, v = sorted((x // s, y // s))
            return beatty_a(v - u) == u

        return member
    if family == "nim_extension":
        return lambda x, y: x == y
    raise ValueError(f"unknown family {family!r}")


def _closed_form_spec(family: str, r: int | None, s: int | None) -> GameSpec:
    if family == "single_pair":
        return validate_spec([(r, s)])
    if family == "zero_s":
        return validate_spec([(0, s)])
    if family == "zero_s_and_ss":
        if s == 1:
            return validate_spec([(0, 1), (1, 1)])
        return validate_spec([(0, s), (s, s)])
    if family == "nim_extension":
        return validate_spec([(0, 1), (r, s)])
    raise ValueError(f"unknown family {family!r}")


def verify_closed_form(
    family: str, n_max: int, r: int | None = None, s: int | None = None
) -> ClosedFormReport:
    """Compare the grid oracle against a closed-form candidate P-set.

    Families: single_pair {(r,s)} vs "below s or below r"; zero_s
    {(0,s)} vs equal s-blocks; zero_s_and_ss {(0,s),(s,s)} vs s-scaled
    Wythoff pairs; nim_extension {(0,1),(r,s)} vs the Nim diagonal,
    which is expected to agree exactly when r != s.

    The single_pair formula is only faithful when r == s: for r < s the
    position (r+s, r+s) is a losing position the formula misses, so
    expected_agreement is set accordingly and ok reflects whether the
    comparison matched that expectation.
    """
    if family not in CLOSED_FORM_FAMILIES:
        raise ValueError(f"family must be one of {CLOSED_FORM_FAMILIES}")
    if family in ("single_pair", "nim_extension"):
        if r is None or s is None or not (1 <= r <= s):
            raise ValueError("need 1 <= r <= s")
    else:
        if s is None or s < 1:
            raise ValueError("need s >= 1")
    spec = _closed_form_spec(family, r, s)
    member = _closed_form_member(family, r, s)
    grid = solve_bruteforce(spec, n_max, n_max)
    mismatches = []
    for x in range(n_max + 1):
        for y in range(n_max + 1):
            if grid.is_p(x, y) != member(x, y):
                mismatches.append((x, y))
    if family == "nim_extension":
        expected = r != s
    elif family == "single_pair":
        expected = r == s
    else:
        expected = True
    return ClosedFormReport(
        family=family,
        r=r,
        s=s,
        n_max=n_max,
        agrees=not mismatches,
        expected_agreement=expected,
        mismatches=tuple(mismatches[:20]),
    )


# --- patterns specific to the (1,2) game ---------------------------------------


@dataclass(frozen=True)
class OneTwoPatternReport:
    """Structure checks for the game {(0,1),(1,1),(1,2)}.

    The indices where b > 2a form a ladder: each visit raises b - 2a by
    exactly one.  witness_pairs lists (start, step) for consecutive
    ladder rungs.  Ratios stay at or below 3, and every suffix of the
    ratio sequence spans at least phi - 3/2.
    """

    pair_count: int
    ladder_ok: bool
    ladder_violations: tuple[tuple[int, int, int], ...]
    witness_pairs: tuple[tuple[int, int], ...]
    ratio_bound_ok: bool
    ratio_violations: tuple[int, ...]
    oscillation_ok: bool
    oscillation_violations: tuple[int, ...]
    oscillation_checked_through: int

    @property
    def ok(self) -> bool:
        return self.ladder_ok and self.ratio_bound_ok and self.oscillation_ok


def check_onetwo_patterns(
    table: PTable, margin_fraction: float = 0.1
) -> OneTwoPatternReport:
    if table.spec.pairs != ((0, 1), (1, 1), (1, 2)):
        raise WrongSpec("pattern checks apply to the (1,2) extension only")
    a, b = table.a, table.b
    count = len(a)
    gamma = [bb - 2 * aa for aa, bb in zip(a, b)]

    rungs = [n for n in range(count) if gamma[n] > 0]
    ladder_violations = []
    expected = 1
    for n in rungs:
        if gamma[n] != expected:
            ladder_violations.append((n, gamma[n], expected))
        expected = gamma[n] + 1
    witness_pairs = []
    start = 0
    for n in rungs:
        witness_pairs.append((start, n - start))
        start = n

    ratio_violations = tuple(
        n for n in range(1, count) if b[n] > 3 * a[n]
    )

    # exact test for suffix spread >= phi - 3/2: with d = max - min,
    # d >= (sqrt(5) - 2)/2  iff  (2d + 2)^2 > 5
    checked_through = max(1, count - 1 - max(1, int(margin_fraction * count)))
    suffix_max = [Fraction(0)] * count
    suffix_min = [Fraction(0)] * count
    ratios = [None] + [Fraction(b[n], a[n]) for n in range(1, count)]
    cur_max, cur_min = ratios[count - 1], ratios[count - 1]
    for n in range(count - 1, 0, -1):
        cur_max = max(cur_max, ratios[n])
        cur_min = min(cur_min, ratios[n])
        suffix_max[n], suffix_min[n] = cur_max, cur_min
    osc_violations = []
    for n in range(1, checked_through + 1):
        d = suffix_max[n] - suffix_min[n]
        lhs = 2 * d + 2
        if lhs * lhs <= 5:
            osc_violations.append(n)

    return OneTwoPatternReport(
        pair_count=count,
        ladder_ok=not ladder_violations,
        ladder_violations=tuple(ladder_violations),
        witness_pairs=tuple(witness_pairs),
        ratio_bound_ok=not ratio_violations,
        ratio_violations=ratio_violations,
        oscillation_ok=not osc_violations,
        oscillation_violations=tuple(osc_violations),
        oscillation_checked_through=checked_through,
    )
