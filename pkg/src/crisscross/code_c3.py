"""Burst criss-cross correction via residue interleaving.

An n x n array splits into t_r * t_c residue subarrays: class (s_r, s_c)
keeps the rows congruent to s_r mod t_r and the columns congruent to s_c
mod t_c. Deleting t_r consecutive rows and t_c consecutive columns removes
exactly one row and one column from every subarray, so burst correction
reduces to one single-deletion problem per class.

The anchor class (1, 1) carries the full single-deletion machinery plus
distinct consecutive rows, which pins its deletion position exactly and
brackets every other class into at most two candidates per axis. The other
classes only store their sums and four inversion parities; that is enough
to finish each of them off.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .code_c2 import (
    C2Params,
    _band_parities,
    _column_int,
    _disjoint_band,
    _resolve_by_parity,
    c2_check,
    c2_decode,
    c2_syndromes,
)
from .core_array import (
    Array2D,
    extract_residue_subarray,
    interleave_residue_subarrays,
)
from .errors import (
    AmbiguityError,
    CodePropertyError,
    InvalidParameterError,
    NotACodewordError,
    NotInstantiableError,
)
from .onedim import inversions
from .outcome import DecodeOutcome
from .reprs import is_l_valid, is_l_weakly_valid, rir, rows_are_distinct
from .scan import ScanContext

SumGrid = tuple[tuple[tuple[int, ...], ...], ...]
BitGrid = tuple[tuple[tuple[int, int, int, int], ...], ...]


@dataclass(frozen=True)
class C3Params:
    """Class description for the burst code.

    Grids are indexed [s_r - 1][s_c - 1]. Per subarray: a holds all column
    sums mod q, b all row sums but the last (it is implied by the column
    sums), d the three band parities plus the row-integer parity. The anchor
    subarray additionally carries full interval syndromes in `anchor`; its
    grid slots must agree with it.
    """

    n: int
    q: int
    t_r: int
    t_c: int
    l: int
    anchor: C2Params
    a: SumGrid
    b: SumGrid
    d: BitGrid

    def __post_init__(self) -> None:
        if self.q < 2:
            raise InvalidParameterError("alphabet size must be at least 2")
        if self.t_r < 1 or self.t_c < 1:
            raise InvalidParameterError("burst lengths must be positive")
        if self.n < 1 or self.n % self.t_r or self.n % self.t_c:
            raise InvalidParameterError(
                f"burst lengths ({self.t_r}, {self.t_c}) must divide n={self.n}"
            )
        m_r, m_c = self.m_r, self.m_c
        if self.l < 1 or m_r < 3 * self.l:
            raise InvalidParameterError(
                f"subarrays have {m_r} rows, too few for three bands of height {self.l}"
            )
        if m_c < 2:
            raise InvalidParameterError("subarrays need at least two columns")
        for name, grid, width in (("a", self.a, m_c), ("b", self.b, m_r - 1)):
            if len(grid) != self.t_r or any(len(row) != self.t_c for row in grid):
                raise InvalidParameterError(f"{name} must be a {self.t_r}x{self.t_c} grid")
            for row in grid:
                for entry in row:
                    if len(entry) != width:
                        raise InvalidParameterError(
                            f"each {name} entry must have length {width}"
                        )
                    if any(not 0 <= v < self.q for v in entry):
                        raise InvalidParameterError(f"{name} entries must lie in [0, q)")
        if len(self.d) != self.t_r or any(len(row) != self.t_c for row in self.d):
            raise InvalidParameterError(f"d must be a {self.t_r}x{self.t_c} grid")
        for row in self.d:
            for bits in row:
                if len(bits) != 4 or any(bit not in (0, 1) for bit in bits):
                    raise InvalidParameterError("each d entry must be four bits")
        an = self.anchor
        if (an.rows, an.cols, an.q, an.l) != (m_r, m_c, self.q, self.l):
            raise InvalidParameterError("anchor parameters do not match the subarray shape")
        if not an.rows_distinct:
            raise InvalidParameterError("the anchor class requires distinct consecutive rows")
        if (an.a, an.b, an.d) != (self.a[0][0], self.b[0][0], self.d[0][0]):
            raise InvalidParameterError("anchor grid slots disagree with the anchor class")

    @property
    def m_r(self) -> int:
        return self.n // self.t_r

    @property
    def m_c(self) -> int:
        return self.n // self.t_c

    def full_b(self, s_r: int, s_c: int) -> tuple[int, ...]:
        """All m_r row sums of subarray (s_r, s_c), the last one implied."""
        bs = self.b[s_r - 1][s_c - 1]
        last = (sum(self.a[s_r - 1][s_c - 1]) - sum(bs)) % self.q
        return bs + (last,)


def _subarrays(x: Array2D, t_r: int, t_c: int) -> list[list[Array2D]]:
    return [
        [extract_residue_subarray(x, s, u, t_r, t_c) for u in range(1, t_c + 1)]
        for s in range(1, t_r + 1)
    ]


def _parity_bits(x: Array2D, l: int) -> tuple[int, int, int, int]:
    return _band_parities(x, l) + (inversions(rir(x)) % 2,)


def c3_syndromes(x: Array2D, t_r: int, t_c: int, l: int) -> C3Params:
    """Class parameters of x for the burst code with window t_r x t_c.

    Raises NotInstantiableError when the anchor subarray cannot carry its
    role (not band-valid, or with equal consecutive rows); any array outside
    the code but with a workable anchor still gets well defined parameters.
    """
    if x.rows != x.cols:
        raise InvalidParameterError("the burst code is defined on square arrays")
    if t_r < 1 or t_c < 1 or x.rows % t_r or x.cols % t_c:
        raise InvalidParameterError(
            f"burst lengths ({t_r}, {t_c}) must divide n={x.rows}"
        )
    subs = _subarrays(x, t_r, t_c)
    head = subs[0][0]
    if not is_l_valid(head, l) or not rows_are_distinct(head):
        raise NotInstantiableError(
            "anchor subarray is not band-valid with distinct consecutive rows"
        )
    anchor = c2_syndromes(head, l, rows_distinct=True)
    a = tuple(tuple(sub.col_sums() for sub in row) for row in subs)
    b = tuple(tuple(sub.row_sums()[:-1] for sub in row) for row in subs)
    d = tuple(tuple(_parity_bits(sub, l) for sub in row) for row in subs)
    return C3Params(
        n=x.rows, q=x.q, t_r=t_r, t_c=t_c, l=l, anchor=anchor, a=a, b=b, d=d
    )


def c3_check(x: Array2D, p: C3Params) -> bool:
    """Membership test: anchor passes its full class check, every other
    subarray matches its sums and parities and is weakly band-valid."""
    if (x.rows, x.cols) != (p.n, p.n) or x.q != p.q:
        raise InvalidParameterError(
            f"array shape {x.rows}x{x.cols} over q={x.q} does not match the class"
        )
    subs = _subarrays(x, p.t_r, p.t_c)
    for s, u in itertools.product(range(1, p.t_r + 1), range(1, p.t_c + 1)):
        sub = subs[s - 1][u - 1]
        if (s, u) == (1, 1):
            if not c2_check(sub, p.anchor):
                return False
            continue
        if sub.col_sums() != p.a[s - 1][u - 1]:
            return False
        if sub.row_sums()[:-1] != p.b[s - 1][u - 1]:
            return False
        if not is_l_weakly_valid(sub, p.l):
            return False
        if _parity_bits(sub, p.l) != p.d[s - 1][u - 1]:
            return False
    return True


def _resolve_subarray(
    y_sub: Array2D,
    a: tuple[int, ...],
    full_b: tuple[int, ...],
    l: int,
    d: tuple[int, int, int, int],
    row_cands: list[int],
    col_cands: list[int],
) -> tuple[Array2D, int | None, int | None]:
    """Finish one non-anchor subarray given <=2 candidates per axis.

    Returns the restored subarray plus the resolved row and column indices
    (None where a tie left the position open; the array is unique anyway).
    """
    q = y_sub.q
    m_c = len(a)
    ctx = ScanContext(y_sub, a, full_b)

    if len(col_cands) == 1:
        j, col_exact = col_cands[0], True
    else:
        # The chosen band avoids the row interval, so its rows read the same
        # under either row hypothesis, making the column test independent.
        interval = (row_cands[0], row_cands[-1])
        k = _disjoint_band(l, interval)
        first = (k - 1) * l + 1
        shift = 1 if first > interval[1] else 0
        band = [y_sub.cells[r - 1 - shift] for r in range(first, first + l)]
        y_cir = tuple(_column_int(band, t, q) for t in range(m_c - 1))
        missing = 0
        for r in range(first, first + l):
            gap = (full_b[r - 1] - sum(y_sub.cells[r - 1 - shift])) % q
            missing = missing * q + gap
        j, col_exact = _resolve_by_parity(y_cir, missing, col_cands, d[k - 1], "column")

    matches: list[tuple[int, Array2D]] = []
    for i in row_cands:
        new_row, new_col = ctx.forced_insertions(i, j)
        cand = ctx.assemble(i, j, new_row, new_col)
        if inversions(rir(cand)) % 2 == d[3]:
            matches.append((i, cand))
    if not matches:
        raise NotACodewordError("no row candidate matches the inversion parity")
    if len({cand for _, cand in matches}) > 1:
        raise AmbiguityError(
            "two row hypotheses give distinct subarrays consistent with the class"
        )
    row_exact = len(matches) == 1
    return (
        matches[0][1],
        matches[0][0] if row_exact else None,
        j if col_exact else None,
    )


def _window_starts(
    positions: list[tuple[int, int]], t: int, n: int
) -> tuple[int, int]:
    """Feasible burst start range given resolved (residue, subindex) pairs.

    A start r covers full-array index s + (pos - 1) * t exactly when
    r <= s + (pos - 1) * t <= r + t - 1.
    """
    hits = [s + (pos - 1) * t for s, pos in positions]
    lo = max(1, max(hits) - t + 1)
    hi = min(min(hits), n - t + 1)
    if lo > hi:
        raise NotACodewordError("resolved deletion positions fit no single burst window")
    return lo, hi


def c3_decode(y: Array2D, p: C3Params) -> DecodeOutcome:
    """Recover the codeword from a burst deletion of t_r rows and t_c columns.

    Pipeline: decode the anchor subarray (its distinct-rows property makes
    the position exact), derive per-subarray candidate intervals from the
    anchor position, resolve each remaining subarray by parity, reinterleave,
    and verify membership. The reported intervals range over feasible burst
    start positions.
    """
    if y.q != p.q or (y.rows, y.cols) != (p.n - p.t_r, p.n - p.t_c):
        raise InvalidParameterError(
            f"received shape {y.rows}x{y.cols} does not match a {p.t_r}x{p.t_c} "
            f"burst deletion from {p.n}x{p.n}"
        )
    y_subs = _subarrays(y, p.t_r, p.t_c)

    anchor_out = c2_decode(y_subs[0][0], p.anchor)
    if not (anchor_out.row_exact and anchor_out.col_exact):
        raise CodePropertyError(
            "anchor decode left a position open despite the distinct-rows guarantee"
        )
    i_star = anchor_out.row_interval[0]
    j_star = anchor_out.col_interval[0]

    parts: list[list[Array2D]] = [
        [None] * p.t_c for _ in range(p.t_r)  # type: ignore[list-item]
    ]
    parts[0][0] = anchor_out.array
    row_hits = [(1, i_star)]
    col_hits = [(1, j_star)]
    for s, u in itertools.product(range(1, p.t_r + 1), range(1, p.t_c + 1)):
        if (s, u) == (1, 1):
            continue
        row_cands = [i_star] if s == 1 else [i for i in (i_star - 1, i_star) if i >= 1]
        col_cands = [j_star] if u == 1 else [j for j in (j_star - 1, j_star) if j >= 1]
        sub, i_res, j_res = _resolve_subarray(
            y_subs[s - 1][u - 1],
            p.a[s - 1][u - 1],
            p.full_b(s, u),
            p.l,
            p.d[s - 1][u - 1],
            row_cands,
            col_cands,
        )
        parts[s - 1][u - 1] = sub
        if i_res is not None:
            row_hits.append((s, i_res))
        if j_res is not None:
            col_hits.append((u, j_res))

    x = interleave_residue_subarrays(parts, p.t_r, p.t_c)
    if not c3_check(x, p):
        raise NotACodewordError("reassembled array fails the class constraints")
    return DecodeOutcome(
        array=x,
        row_interval=_window_starts(row_hits, p.t_r, p.n),
        col_interval=_window_starts(col_hits, p.t_c, p.n),
        path="residue",
    )
