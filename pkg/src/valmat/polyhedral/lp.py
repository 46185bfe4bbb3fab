"""A small exact linear programming solver over the rationals.

Dense two-phase tableau simplex with Bland's rule, so every run is
deterministic and terminates.  Intended for the modest problem sizes that
come up when probing faces of lifted polyhedra.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


@dataclass
class LPResult:
    status: str
    value: Optional[Fraction] = None
    x: Optional[List[Fraction]] = None

    @property
    def ok(self) -> bool:
        return self.status == OPTIMAL


def _pivot(T, basis, r, c):
    piv = T[r][c]
    row = T[r]
    if piv != 1:
        T[r] = row = [v / piv for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _simplex(T, basis, ncols, allowed):
    """Maximise the objective in the last row (stored as reduced costs)."""
    m = len(T) - 1
    while True:
        obj = T[-1]
        enter = None
        for j in range(ncols):
            if allowed[j] and obj[j] < 0:
                enter = j
                break
        if enter is None:
            return OPTIMAL
        best = None
        for i in range(m):
            a = T[i][enter]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return UNBOUNDED
        _pivot(T, basis, best[1], enter)


def lp_solve(c: Sequence, A_eq: Sequence[Sequence] = (), b_eq: Sequence = (),
             A_ub: Sequence[Sequence] = (), b_ub: Sequence = (), maximize: bool = True) -> LPResult:
    """Optimise ``c.x`` subject to ``A_eq x = b_eq``, ``A_ub x <= b_ub`` and ``x >= 0``."""
    nvar = len(c)
    rows = [([Fraction(v) for v in a], Fraction(b), False) for a, b in zip(A_eq, b_eq)]
    rows += [([Fraction(v) for v in a], Fraction(b), True) for a, b in zip(A_ub, b_ub)]
    nslack = sum(1 for r in rows if r[2])
    m = len(rows)
    width = nvar + nslack + m
    T = []
    basis = []
    s = 0
    for i, (a, b, ub) in enumerate(rows):
        row = a + [Fraction(0)] * (nslack + m) + [b]
        if ub:
            row[nvar + s] = Fraction(1)
            s += 1
        if b < 0:
            row = [-v for v in row]
        row[nvar + nslack + i] = Fraction(1)
        T.append(row)
        basis.append(nvar + nslack + i)
    # phase one: minimise the sum of artificials
    obj = [Fraction(0)] * (width + 1)
    for row in T:
        for j in range(width + 1):
            obj[j] -= row[j]
    for i in range(m):
        obj[nvar + nslack + i] = Fraction(0)
    T.append(obj)
    allowed = [True] * width
    _simplex(T, basis, width, allowed)
    if T[-1][-1] != 0:
        return LPResult(INFEASIBLE)
    # drive remaining artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= nvar + nslack:
            for j in range(nvar + nslack):
                if T[i][j] != 0:
                    _pivot(T, basis, i, j)
                    break
    for j in range(nvar + nslack, width):
        allowed[j] = False
    sign = 1 if maximize else -1
    obj = [Fraction(0)] * (width + 1)
    for j in range(nvar):
        obj[j] = -sign * Fraction(c[j])
    for i in range(m):
        bj = basis[i]
        f = obj[bj]
        if f:
            obj = [a - f * b for a, b in zip(obj, T[i])]
    T[-1] = obj
    status = _simplex(T, basis, width, allowed)
    if status == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvar
    for i in range(m):
        if basis[i] < nvar:
            x[basis[i]] = T[i][-1]
    value = sum(Fraction(ci) * xi for ci, xi in zip(c, x))
    return LPResult(OPTIMAL, value, x)


def lp_optimize(c, A_eq=(), b_eq=(), A_ub=(), b_ub=(), maximize=True) -> LPResult:
    return lp_solve(c, A_eq, b_eq, A_ub, b_ub, maximize)


def lp_feasible(A_eq=(), b_eq=(), A_ub=(), b_ub=(), nvar: Optional[int] = None) -> LPResult:
    if nvar is None:
        rows = list(A_eq) + list(A_ub)
        nvar = len(rows[0]) if rows else 0
    return lp_solve([0] * nvar, A_eq, b_eq, A_ub, b_ub)


def free_variable_lp(c, A_ub, b_ub, maximize=True) -> LPResult:
    """Optimise over unrestricted variables by splitting each into two nonnegative parts."""
    n = len(c)
    c2 = list(c) + [-v for v in c]
    A2 = [list(a) + [-v for v in a] for a in A_ub]
    res = lp_solve(c2, A_ub=A2, b_ub=b_ub, maximize=maximize)
    if res.ok:
        res.x = [res.x[j] - res.x[n + j] for j in range(n)]
    return res
