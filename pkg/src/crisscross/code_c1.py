"""Single criss-cross deletion correcting code over good arrays.

A codeword is an n x n q-ary array with adjacent-distinct column
compositions whose column sums, row sums, column-composition signature
syndrome, and row-integer signature syndrome match the class parameters.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .core_array import (
    Array2D,
    DEFAULT_ENUMERATION_CAP,
    enumerate_arrays,
    move_last_col_to,
    move_last_row_to,
)
from .errors import (
    AmbiguityError,
    CapacityError,
    CodePropertyError,
    InvalidParameterError,
    NotACodewordError,
)
from .onedim import comp_rank, signature_syndrome, vt_decode_known_symbol
from .outcome import DecodeOutcome
from .reprs import ccr, rir
from .scan import ScanContext


@dataclass(frozen=True)
class C1Params:
    """Class parameters; relaxed mode stores n-1 row sums and derives the last."""

    n: int
    q: int
    a: tuple[int, ...]
    b: tuple[int, ...]
    c: int
    d: int
    relaxed: bool = True

    def __post_init__(self):
        if self.n < 2:
            raise InvalidParameterError("need n >= 2 to delete a row and a column")
        if self.q < 2:
            raise InvalidParameterError("alphabet size must be at least 2")
        if len(self.a) != self.n:
            raise InvalidParameterError(f"need {self.n} column sums, got {len(self.a)}")
        want_b = self.n - 1 if self.relaxed else self.n
        if len(self.b) != want_b:
            raise InvalidParameterError(f"need {want_b} row sums, got {len(self.b)}")
        for v in self.a + self.b:
            if not 0 <= v < self.q:
                raise InvalidParameterError(f"sum residue {v} outside [0, {self.q})")
        if not 0 <= self.c < self.n or not 0 <= self.d < self.n:
            raise InvalidParameterError("signature syndromes must lie in [0, n)")
        if not self.relaxed and (sum(self.a) - sum(self.b)) % self.q:
            raise InvalidParameterError(
                "inconsistent sums: column totals and row totals must agree mod q"
            )

    @property
    def full_b(self) -> tuple[int, ...]:
        """Row sums for every row, deriving the last one in relaxed mode."""
        if not self.relaxed:
            return self.b
        return self.b + ((sum(self.a) - sum(self.b)) % self.q,)

    @property
    def uniform(self) -> bool:
        """True iff all column sums agree and all (derived) row sums agree."""
        return len(set(self.a)) == 1 and len(set(self.full_b)) == 1


def c1_syndromes(x: Array2D, relaxed: bool = True) -> C1Params:
    """Parameters of the class containing x."""
    if x.rows != x.cols:
        raise InvalidParameterError("this construction is defined on square arrays")
    n = x.rows
    b = x.row_sums()
    return C1Params(
        n=n,
        q=x.q,
        a=x.col_sums(),
        b=b[: n - 1] if relaxed else b,
        c=signature_syndrome(tuple(comp_rank(c) for c in ccr(x)), n),
        d=signature_syndrome(rir(x), n),
        relaxed=relaxed,
    )


def c1_check(x: Array2D, p: C1Params) -> bool:
    """Membership test against every class constraint."""
    _check_shape(x, p)
    if x.col_sums() != p.a:
        return False
    row_sums = x.row_sums()
    if row_sums[: len(p.b)] != p.b:
        return False
    if not p.relaxed and row_sums != p.b:
        return False
    comps = ccr(x)
    if any(u == v for u, v in zip(comps, comps[1:])):
        return False
    if signature_syndrome(tuple(comp_rank(c) for c in comps), p.n) != p.c:
        return False
    return signature_syndrome(rir(x), p.n) == p.d


def _check_shape(x: Array2D, p) -> None:
    rows = getattr(p, "rows", None) or p.n
    cols = getattr(p, "cols", None) or p.n
    if (x.rows, x.cols) != (rows, cols):
        raise InvalidParameterError(
            f"array shape {x.rows}x{x.cols} does not match parameters {rows}x{cols}"
        )
    if x.q != p.q:
        raise InvalidParameterError(f"alphabet {x.q} does not match parameters {p.q}")


def c1_decode(y: Array2D, p: C1Params, path: str = "auto") -> DecodeOutcome:
    """Recover the codeword whose deletion ball contains the (n-1) x (n-1) minor y.

    With uniform sums the missing symbols are completed directly and the two
    VT-style syndromes localize the deleted column and row. Otherwise every
    deletion hypothesis is scanned and filtered by full membership; ball
    disjointness of the class makes at most one survivor possible.
    """
    if path not in ("auto", "fast", "scan"):
        raise InvalidParameterError(f"unknown decode path {path!r}")
    if y.q != p.q or y.rows != p.n - 1 or y.cols != p.n - 1:
        raise InvalidParameterError(
            f"received shape {y.rows}x{y.cols} (q={y.q}) does not match a deletion "
            f"from {p.n}x{p.n} (q={p.q})"
        )
    if path == "auto":
        path = "fast" if p.uniform else "scan"
    if path == "fast":
        if not p.uniform:
            raise InvalidParameterError("fast path requires uniform column and row sums")
        return _decode_fast(y, p)
    return _decode_scan(y, p)


def _complete_array(y: Array2D, a_val: int, b_val: int) -> Array2D:
    """Append the column and row forced by uniform sums (deleted ones shifted last)."""
    q = y.q
    bottom = [(a_val - sum(col)) % q for col in zip(*y.cells)]
    right = [(b_val - sum(row)) % q for row in y.cells]
    corner = (b_val - sum(bottom)) % q
    cells = tuple(
        row + (right[i],) for i, row in enumerate(y.cells)
    ) + (tuple(bottom) + (corner,),)
    return Array2D(cells, q)


def _decode_fast(y: Array2D, p: C1Params) -> DecodeOutcome:
    n = p.n
    x2 = _complete_array(y, p.a[0], p.full_b[0])
    ranks = tuple(comp_rank(c) for c in ccr(x2))
    _, col_run = vt_decode_known_symbol(ranks[:-1], ranks[-1], p.c, n)
    if col_run[0] != col_run[1]:
        raise CodePropertyError(
            "composition run longer than one contradicts adjacent-distinct columns"
        )
    j = col_run[0]
    x1 = move_last_col_to(x2, j)
    ints = rir(x1)
    _, row_run = vt_decode_known_symbol(ints[:-1], ints[-1], p.d, n)
    x = move_last_row_to(x1, row_run[0])
    if not c1_check(x, p):
        raise NotACodewordError("completed array fails the class constraints")
    return DecodeOutcome(array=x, row_interval=row_run, col_interval=(j, j), path="fast")


def _decode_scan(y: Array2D, p: C1Params) -> DecodeOutcome:
    n = p.n
    ctx = ScanContext(y, p.a, p.full_b)
    survivors: dict[Array2D, list[tuple[int, int]]] = {}
    for i_hyp, j_hyp in itertools.product(range(1, n + 1), repeat=2):
        new_row, new_col = ctx.forced_insertions(i_hyp, j_hyp)
        if ctx.col_rank_syndrome(j_hyp, new_row, new_col) != p.c:
            continue
        cand = ctx.assemble(i_hyp, j_hyp, new_row, new_col)
        if c1_check(cand, p):
            survivors.setdefault(cand, []).append((i_hyp, j_hyp))
    return _scan_verdict(survivors, "scan")


def _scan_verdict(survivors: dict, path: str) -> DecodeOutcome:
    if not survivors:
        raise NotACodewordError("no deletion hypothesis yields a class member")
    if len(survivors) > 1:
        raise AmbiguityError(
            f"{len(survivors)} distinct codewords explain the input; "
            "the class is not deletion correcting on this instance"
        )
    array, hyps = next(iter(survivors.items()))
    rows = [i for i, _ in hyps]
    cols = [j for _, j in hyps]
    return DecodeOutcome(
        array=array,
        row_interval=(min(rows), max(rows)),
        col_interval=(min(cols), max(cols)),
        path=path,
    )


def c1_enumerate(p: C1Params, cap: int = DEFAULT_ENUMERATION_CAP) -> Iterator[Array2D]:
    """Yield every codeword of the class in lexicographic order (tiny n only)."""
    total = p.q ** (p.n * p.n)
    if total > cap:
        raise CapacityError(f"{total} arrays exceed the enumeration cap {cap}")
    for x in enumerate_arrays(p.n, p.n, p.q, cap):
        if c1_check(x, p):
            yield x
