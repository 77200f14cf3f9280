"""Game rules for generalized diagonal Wythoff Nim.

A game is described by a set of move pairs (p, q) with 0 <= p <= q and
q >= 1.  From (x, y) a player may subtract (t*p, t*q) or (t*q, t*p) for
any integer t >= 1, as long as both coordinates stay non-negative.  Nim
is {(0, 1)}; adding the main diagonal (1, 1) gives Wythoff Nim.

Positions are plain (x, y) tuples.  Everything here is pure and
immutable, so values can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import EmptySpec, GridTooLarge, MultiplePair, NonPositiveQ

Pair = tuple[int, int]
Position = tuple[int, int]

GRID_CELL_GUARD = 10**8


def _multiple_factor(big: Pair, small: Pair) -> int | None:
    """Return t >= 1 with big == t * small, if such an integer exists."""
    bp, bq = big
    sp, sq = small
    if sp == 0:
        if bp != 0 or bq % sq != 0:
            return None
        t = bq // sq
    else:
        if bp % sp != 0:
            return None
        t = bp // sp
        if t * sq != bq:
            return None
    return t if t >= 1 else None


@dataclass(frozen=True)
class GameSpec:
    """A validated, normalized list of move pairs.

    Construct through :func:`validate_spec`; the dataclass itself does
    not re-check the invariants.
    """

    pairs: tuple[Pair, ...]

    def label(self) -> str:
        return "".join(f"({p},{q})" for p, q in self.pairs)

    @property
    def has_nim_pair(self) -> bool:
        return (0, 1) in self.pairs

    def extends_wythoff(self) -> bool:
        return (0, 1) in self.pairs and (1, 1) in self.pairs


def validate_spec(pairs: Iterable[Sequence[int]]) -> GameSpec:
    """Normalize and validate a list of move pairs.

    Each pair is reordered so p <= q.  Raises EmptySpec, NonPositiveQ
    (q < 1 or a negative entry) or MultiplePair (some pair is an integer
    multiple of another, duplicates included); the MultiplePair message
    names the offending indices.
    """
    normalized: list[Pair] = []
    for idx, raw in enumerate(pairs):
        a, b = int(raw[0]), int(raw[1])
        if a < 0 or b < 0:
            raise NonPositiveQ(f"pairs[{idx}]={tuple(raw)} has a negative entry")
        p, q = (a, b) if a <= b else (b, a)
        if q < 1:
            raise NonPositiveQ(f"pairs[{idx}]={tuple(raw)} has q < 1")
        normalized.append((p, q))
    if not normalized:
        raise EmptySpec("a game needs at least one move pair")
    for i, big in enumerate(normalized):
        for j, small in enumerate(normalized):
            if i == j:
                continue
            t = _multiple_factor(big, small)
            if t is not None:
                raise MultiplePair(
                    f"pairs[{i}]={big} is {t}x pairs[{j}]={small}",
                    index=i,
                    base_index=j,
                    factor=t,
                )
    return GameSpec(tuple(normalized))


def nim_spec() -> GameSpec:
    return GameSpec(((0, 1),))


def wythoff_spec() -> GameSpec:
    return GameSpec(((0, 1), (1, 1)))


def wythoff_extension(p: int, q: int) -> GameSpec:
    """The standard three-pair game: Nim + diagonal + one extra pair."""
    return validate_spec([(0, 1), (1, 1), (p, q)])


def is_legal_move(spec: GameSpec, frm: Position, to: Position) -> bool:
    """True iff frm -> to subtracts t*(p, q) or t*(q, p) for some pair.

    Total function: any displacement that is not a positive multiple of
    a spec pair (in either orientation) simply returns False.
    """
    m = frm[0] - to[0]
    n = frm[1] - to[1]
    if m < 0 or n < 0 or (m == 0 and n == 0):
        return False
    for p, q in spec.pairs:
        # orientation (m, n) = (t*p, t*q): q >= 1 forces t = n // q
        if n % q == 0 and n >= q and m == (n // q) * p:
            return True
        # orientation (m, n) = (t*q, t*p): t = m // q
        if m % q == 0 and m >= q and n == (m // q) * p:
            return True
    return False


def followers(spec: GameSpec, pos: Position) -> list[Position]:
    """All positions reachable from pos in one move, sorted lexicographically."""
    x, y = pos
    out: set[Position] = set()
    for p, q in spec.pairs:
        t = 1
        while t * p <= x and t * q <= y:
            out.add((x - t * p, y - t * q))
            t += 1
        if p != q:
            t = 1
            while t * q <= x and t * p <= y:
                out.add((x - t * q, y - t * p))
                t += 1
    return sorted(out)


@dataclass(frozen=True, eq=False)
class OutcomeGrid:
    """P/N outcomes on [0, xmax] x [0, ymax]; grid[x, y] is True for P."""

    xmax: int
    ymax: int
    grid: np.ndarray = field(repr=False)

    def is_p(self, x: int, y: int) -> bool:
        return bool(self.grid[x, y])

    def outcome(self, x: int, y: int) -> str:
        return "P" if self.grid[x, y] else "N"

    def p_positions(self) -> set[Position]:
        xs, ys = np.nonzero(self.grid)
        return {(int(x), int(y)) for x, y in zip(xs, ys)}


def solve_bruteforce(spec: GameSpec, xmax: int, ymax: int) -> OutcomeGrid:
    """Retrograde P/N labelling of the full grid.

    A cell is P exactly when every in-grid follower is N.  Cells are
    visited in lexicographic order, which is topological here because
    every move lowers x, or keeps x and lowers y.
    """
    if xmax < 0 or ymax < 0:
        raise ValueError("grid bounds must be non-negative")
    if (xmax + 1) * (ymax + 1) > GRID_CELL_GUARD:
        raise GridTooLarge(
            f"{(xmax + 1) * (ymax + 1)} cells exceeds the {GRID_CELL_GUARD} guard"
        )
    pairs = spec.pairs
    rows = [bytearray(ymax + 1) for _ in range(xmax + 1)]
    for x in range(xmax + 1):
        row = rows[x]
        for y in range(ymax + 1):
            is_p = 1
            for p, q in pairs:
                t = 1
                while t * p <= x and t * q <= y:
                    if rows[x - t * p][y - t * q]:
                        is_p = 0
                        break
                    t += 1
                if not is_p:
                    break
                if p != q:
                    t = 1
                    while t * q <= x and t * p <= y:
                        if rows[x - t * q][y - t * p]:
                            is_p = 0
                            break
                        t += 1
                    if not is_p:
                        break
            row[y] = is_p
    grid = np.frombuffer(b"".join(rows), dtype=np.uint8).reshape(
        xmax + 1, ymax + 1
    ).astype(bool)
    return OutcomeGrid(xmax=xmax, ymax=ymax, grid=grid)
