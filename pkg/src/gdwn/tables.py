"""Reference tables for the bundled games, with golden-file regression.

The sieve tables are regenerated from scratch and diffed against the
CSV files checked in under data/golden.  The (2,4) and (4,6) goldens
are gated on the brute-force grid oracle rather than on any external
source; see the test suite for the cross-validation.
"""

from __future__ import annotations

import difflib
from importlib import resources

from .games import validate_spec
from .serialize import ptable_to_csv
from .sieve import compute_pi
from .wythoff import dual_wythoff_array, wythoff_array

# name -> (pairs, n_max) for sieve tables; arrays handled separately
SIEVE_TABLES: dict[str, tuple[tuple[tuple[int, int], ...], int]] = {
    "wythoff": (((0, 1), (1, 1)), 14),
    "onetwo": (((0, 1), (1, 1), (1, 2)), 27),
    "twothree": (((0, 1), (1, 1), (2, 3)), 19),
    "twofour": (((0, 1), (1, 1), (2, 4)), 21),
    "foursix": (((0, 1), (1, 1), (4, 6)), 21),
    "fourseven": (((0, 1), (1, 1), (4, 7)), 18),
}

ARRAY_TABLES = ("wythoff_array", "dual_wythoff_array")

TABLE_NAMES = tuple(SIEVE_TABLES) + ARRAY_TABLES


def _array_csv(rows: list[list[int]]) -> str:
    return "\n".join(",".join(str(v) for v in row) for row in rows) + "\n"


def generate_table(name: str, engine: str = "auto") -> str:
    """Regenerate one reference table as CSV text."""
    if name in SIEVE_TABLES:
        pairs, n_max = SIEVE_TABLES[name]
        table = compute_pi(validate_spec(pairs), n_max, engine=engine)
        return ptable_to_csv(table)
    if name == "wythoff_array":
        return _array_csv(wythoff_array(5, 10))
    if name == "dual_wythoff_array":
        return _array_csv(dual_wythoff_array(6, 10))
    raise ValueError(f"unknown table {name!r}; known: {TABLE_NAMES}")


def golden_path(name: str):
    return resources.files("gdwn").joinpath(f"data/golden/{name}.csv")


def read_golden(name: str) -> str:
    return golden_path(name).read_text(encoding="ascii")


def compare_table(name: str, engine: str = "auto") -> tuple[bool, str]:
    """(identical, unified diff) of the regenerated table vs its golden."""
    fresh = generate_table(name, engine=engine)
    golden = read_golden(name)
    if fresh == golden:
        return True, ""
    diff = "".join(
        difflib.unified_diff(
            golden.splitlines(keepends=True),
            fresh.splitlines(keepends=True),
            fromfile=f"golden/{name}.csv",
            tofile=f"regenerated/{name}.csv",
        )
    )
    return False, diff


def write_goldens(directory=None) -> list[str]:
    """Regenerate every golden file (development helper)."""
    written = []
    for name in TABLE_NAMES:
        text = generate_table(name)
        if directory is None:
            path = golden_path(name)
        else:
            path = directory / f"{name}.csv"
        with open(str(path), "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        written.append(str(path))
    return written
