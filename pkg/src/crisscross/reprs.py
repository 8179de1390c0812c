"""Array representations used by the code constructions.

Column composition sequences, base-q row/column integers, and the
"good" / band-validity structural predicates.
"""
from __future__ import annotations

from .core_array import Array2D, transpose
from .errors import InvalidParameterError
from .onedim import composition

Composition = tuple[int, ...]


def ccr(x: Array2D) -> tuple[Composition, ...]:
    """Column composition sequence: frequency vector of each column, left to right."""
    q = x.q
    return tuple(composition(col, q) for col in zip(*x.cells))


def rir(x: Array2D) -> tuple[int, ...]:
    """Row integer sequence: each row read as a base-q number, most significant first."""
    q = x.q
    out = []
    for row in x.cells:
        value = 0
        for v in row:
            value = value * q + v
        out.append(value)
    return tuple(out)


def cir(x: Array2D) -> tuple[int, ...]:
    """Column integer sequence: rir of the transpose."""
    return rir(transpose(x))


def is_good(x: Array2D) -> bool:
    """True iff adjacent columns always have distinct compositions."""
    comps = ccr(x)
    return all(a != b for a, b in zip(comps, comps[1:]))


def _check_band_height(x: Array2D, l: int) -> None:
    if l < 1:
        raise InvalidParameterError("band height must be positive")
    if x.rows < 3 * l:
        raise InvalidParameterError(
            f"validity needs at least 3 bands: rows {x.rows} < {3 * l}"
        )


def is_l_weakly_valid(x: Array2D, l: int) -> bool:
    """True iff in each of the first three height-l row bands, adjacent columns differ."""
    _check_band_height(x, l)
    cells = x.cells
    for k in range(3):
        band = cells[k * l:(k + 1) * l]
        for j in range(x.cols - 1):
            if all(row[j] == row[j + 1] for row in band):
                return False
    return True


def is_l_valid(x: Array2D, l: int) -> bool:
    """Band validity plus no triple repeats among column or row compositions.

    Three conditions: (i) no three consecutive columns share one composition,
    (ii) no three consecutive rows share one composition, (iii) weak validity
    of the first three height-l bands.
    """
    _check_band_height(x, l)
    col_comps = ccr(x)
    for a, b, c in zip(col_comps, col_comps[1:], col_comps[2:]):
        if a == b == c:
            return False
    row_comps = ccr(transpose(x))
    for a, b, c in zip(row_comps, row_comps[1:], row_comps[2:]):
        if a == b == c:
            return False
    return is_l_weakly_valid(x, l)


def rows_are_distinct(x: Array2D) -> bool:
    """True iff no two adjacent rows are identical."""
    return all(a != b for a, b in zip(x.cells, x.cells[1:]))
