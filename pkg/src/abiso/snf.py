"""Integer Smith normal form by exact row/column reduction."""

from __future__ import annotations

from typing import Sequence


def smith_normal_form(rows: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal d_1 | d_2 | ... of the Smith normal form of an integer matrix.

    Returns min(rows, cols) nonnegative entries forming a divisibility chain,
    zeros trailing when the rank is deficient.  Plain int arithmetic, so the
    reduction is exact for any input size.
    """
    m = [[int(v) for v in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    if any(len(row) != ncols for row in m):
        raise ValueError("matrix rows have unequal lengths")
    size = min(nrows, ncols)

    def swap_rows(a: int, b: int) -> None:
        m[a], m[b] = m[b], m[a]

    def swap_cols(a: int, b: int) -> None:
        for row in m:
            row[a], row[b] = row[b], row[a]

    for t in range(size):
        # smallest nonzero magnitude in the trailing block becomes the pivot
        piv = None
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])

        while True:
            dirty = False
            for i in range(t + 1, nrows):
                while m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, ncols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        swap_rows(i, t)
            for j in range(t + 1, ncols):
                while m[t][j]:
                    q = m[t][j] // m[t][t]
                    for i in range(t, nrows):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        swap_cols(j, t)
                        dirty = True  # column t was disturbed; redo row pass
            if dirty:
                continue
            # pivot must divide every remaining entry for the chain property
            offender = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if m[i][j] % m[t][t]:
                        offender = i
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            for j in range(t, ncols):
                m[t][j] += m[offender][j]

    return [abs(m[i][i]) for i in range(size)]
