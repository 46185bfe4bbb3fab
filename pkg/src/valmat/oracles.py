"""Independent reference computations used to cross-check the main code paths."""
from fractions import Fraction
from typing import List, Sequence

from .modclass import ModuleClass
from .realize import ValuedMatrix, vp
from .valgroup import INF


def smith_valuations(p: int, matrix: Sequence[Sequence[Fraction]]) -> List[int]:
    """Diagonal valuations of a Smith form over the integers localised at ``p``.

    Works by row and column operations: repeatedly move an entry of least
    valuation to the pivot position and clear its row and column.
    """
    A = [list(map(Fraction, row)) for row in matrix]
    m = len(A)
    ncols = len(A[0]) if A else 0
    diag = []
    for k in range(min(m, ncols)):
        best = None
        for i in range(k, m):
            for j in range(k, ncols):
                if A[i][j] != 0:
                    v = vp(A[i][j], p)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        _, i, j = best
        A[k], A[i] = A[i], A[k]
        for row in A:
            row[k], row[j] = row[j], row[k]
        piv = A[k][k]
        for i in range(k + 1, m):
            f = A[i][k] / piv
            if f:
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
        for j in range(k + 1, ncols):
            f = A[k][j] / piv
            if f:
                for row in A:
                    row[j] -= f * row[k]
        diag.append(vp(piv, p))
    return diag


def smith_module(X: ValuedMatrix, mask: int) -> ModuleClass:
    """``M(A)`` of a p-local presentation, computed from a Smith form."""
    cols = X.columns(mask)
    m = X.rows
    if not cols:
        return ModuleClass([INF] * m)
    matrix = [[cols[c][r] for c in range(len(cols))] for r in range(m)]
    diag = smith_valuations(X.ring.p, matrix)
    return ModuleClass([INF] * (m - len(diag)) + [d for d in diag if d])


def smith_realize_table(X: ValuedMatrix) -> List[ModuleClass]:
    return [smith_module(X, mask) for mask in range(1 << X.n)]
