"""Hypothesis-scan support for decoding with position-dependent sum constraints.

Given a received minor Y and indexed column/row sum vectors, each deletion
hypothesis (i, j) forces a unique candidate array: the missing symbols in
every surviving column and row are pinned by their sum constraints and the
corner by the deleted row's own sum. Decoders enumerate hypotheses, screen
candidates cheaply, and keep those passing the full membership test.
"""
from __future__ import annotations

from .core_array import Array2D
from .errors import InvalidParameterError
from .onedim import comp_rank, composition, signature_syndrome


class ScanContext:
    """Per-decode cache of column/row sums and compositions of the received minor."""

    def __init__(self, y: Array2D, a: tuple[int, ...], full_b: tuple[int, ...]):
        rows, cols = len(full_b), len(a)
        if y.rows != rows - 1 or y.cols != cols - 1:
            raise InvalidParameterError(
                f"received shape {y.rows}x{y.cols} does not match a single "
                f"criss-cross deletion from {rows}x{cols}"
            )
        self.q = y.q
        self.rows, self.cols = rows, cols
        self.a, self.full_b = a, full_b
        self.cells = y.cells
        self.y_col_sums = tuple(sum(col) for col in zip(*y.cells))
        self.y_row_sums = tuple(sum(row) for row in y.cells)
        self.y_col_comps = tuple(composition(col, y.q) for col in zip(*y.cells))
        self.y_row_comps = tuple(composition(row, y.q) for row in y.cells)

    def forced_insertions(self, i_hyp: int, j_hyp: int):
        """Row and column contents forced by the sums under hypothesis (i_hyp, j_hyp)."""
        q, rows, cols = self.q, self.rows, self.cols
        new_row = [0] * cols
        for k in range(1, cols + 1):
            if k == j_hyp:
                continue
            new_row[k - 1] = (self.a[k - 1] - self.y_col_sums[k - 1 if k < j_hyp else k - 2]) % q
        corner = (self.full_b[i_hyp - 1] - sum(new_row)) % q
        new_row[j_hyp - 1] = corner
        new_col = [0] * rows
        for k in range(1, rows + 1):
            if k == i_hyp:
                continue
            new_col[k - 1] = (self.full_b[k - 1] - self.y_row_sums[k - 1 if k < i_hyp else k - 2]) % q
        new_col[i_hyp - 1] = corner
        return tuple(new_row), tuple(new_col)

    def col_rank_syndrome(self, j_hyp: int, new_row, new_col) -> int:
        """Signature syndrome of the candidate's column composition ranks."""
        ranks = []
        for k in range(1, self.cols + 1):
            if k == j_hyp:
                ranks.append(comp_rank(composition(new_col, self.q)))
            else:
                comp = self.y_col_comps[k - 1 if k < j_hyp else k - 2]
                v = new_row[k - 1]
                ranks.append(comp_rank(comp[:v] + (comp[v] + 1,) + comp[v + 1:]))
        return signature_syndrome(tuple(ranks), self.cols)

    def row_rank_syndrome(self, i_hyp: int, new_row, new_col) -> int:
        """Signature syndrome of the candidate's row composition ranks."""
        ranks = []
        for k in range(1, self.rows + 1):
            if k == i_hyp:
                ranks.append(comp_rank(composition(new_row, self.q)))
            else:
                comp = self.y_row_comps[k - 1 if k < i_hyp else k - 2]
                v = new_col[k - 1]
                ranks.append(comp_rank(comp[:v] + (comp[v] + 1,) + comp[v + 1:]))
        return signature_syndrome(tuple(ranks), self.rows)

    def assemble(self, i_hyp: int, j_hyp: int, new_row, new_col) -> Array2D:
        """Materialize the candidate array for hypothesis (i_hyp, j_hyp)."""
        out = []
        yi = 0
        for r in range(1, self.rows + 1):
            if r == i_hyp:
                out.append(new_row)
            else:
                yrow = self.cells[yi]
                yi += 1
                out.append(yrow[: j_hyp - 1] + (new_col[r - 1],) + yrow[j_hyp - 1:])
        return Array2D(tuple(out), self.q)
