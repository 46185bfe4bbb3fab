"""Axiom checkers for matroids over a valuation ring.

Three families are available: the t-form (TS, T0, T1, T2), the d-form
(L0, L1, L2a, L2b), and the nine statements obtained from the tropical
three-term relation by genericising and zeroising (D4 down to D0'').
"""
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import List, Sequence, Tuple

from .errors import BadCoordinates
from .matroid import MatroidV, bits
from .modclass import d_invariant, d_leq
from .valgroup import INF, ExtVal, ext_add, ext_sub, fmt, min_attained_twice

D_STATEMENTS = ("D4", "D3", "D3'", "D2", "D2'", "D2''", "D1'", "D1''", "D0''")

_ALIASES = {"D3′": "D3'", "D2′": "D2'", "D2″": "D2''", "D1′": "D1'", "D1″": "D1''", "D0″": "D0''"}


@dataclass(frozen=True, order=True)
class Violation:
    axiom: str
    A: Tuple[int, ...]
    witness: Tuple[int, ...]
    index: object
    values: Tuple = ()
    note: str = ""

    def to_json(self) -> dict:
        idx = self.index
        if isinstance(idx, Fraction) or idx is INF:
            idx = fmt(idx)
        return {
            "axiom": self.axiom,
            "A": list(self.A),
            "witness": list(self.witness),
            "index": idx,
            "values": [fmt(v) if not isinstance(v, (tuple, list)) else [fmt(x) for x in v]
                       for v in self.values],
            "note": self.note,
        }


@dataclass
class AxiomReport:
    name: str
    violations: List[Violation] = field(default_factory=list)
    checked: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def merge(self, other: "AxiomReport") -> "AxiomReport":
        return AxiomReport(self.name + "+" + other.name,
                           sorted(self.violations + other.violations),
                           self.checked + other.checked)

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed, "checked": self.checked,
                "violations": [v.to_json() for v in sorted(self.violations)]}


def _diffs(row):
    return tuple(ext_sub(row[i], row[i + 1]) for i in range(len(row) - 1))


def _ge(a, b) -> bool:
    return a >= b


# -- t-form ------------------------------------------------------------------------

def verify_t_axioms(M: MatroidV, first_only: bool = False) -> AxiomReport:
    """Check (TS), (T0), (T1), (T2) for all subsets and all relevant indices."""
    rep = AxiomReport("t")
    T = M.t_table()
    K = M.stab_bound
    D = [_diffs(row) for row in T]
    n, full = M.n, M.full
    S = M.set_of

    def bad(v):
        rep.violations.append(v)
        return first_only

    # (TS) holds by construction: every table row ends at zero.
    for A in range(1 << n):
        d = D[A]
        for i in range(K):
            rep.checked += 1
            if not d[i] >= d[i + 1]:
                if bad(Violation("T0", S(A), (), i, (d[i], d[i + 1]))):
                    return rep
    for A in range(1 << n):
        dA = D[A]
        for b in bits(full ^ A):
            Ab = A | (1 << b)
            dAb = D[Ab]
            for i in range(K):
                rep.checked += 1
                if not (dA[i] >= dAb[i] >= dA[i + 1]):
                    if bad(Violation("T1", S(A), S(1 << b), i, (dA[i], dAb[i], dA[i + 1]))):
                        return rep
    for A in range(1 << n):
        TA = T[A]
        out = bits(full ^ A)
        for b, c in combinations(out, 2):
            Ab, Ac = A | (1 << b), A | (1 << c)
            Abc = Ab | Ac
            TAb, TAc, TAbc = T[Ab], T[Ac], T[Abc]
            for i in range(K):
                rep.checked += 1
                m1, m2 = D[Ab][i], D[Ac][i]
                mn = min(m1, m2)
                try:
                    lhs = ext_add(ext_sub(ext_sub(TA[i + 1], TAb[i + 1]), TAc[i + 1]), TAbc[i])
                except ArithmeticError:
                    if bad(Violation("T2", S(A), S((1 << b) | (1 << c)), i, (), "undefined difference")):
                        return rep
                    continue
                ok = lhs >= mn and (m1 == m2 or lhs == mn)
                if not ok:
                    if bad(Violation("T2", S(A), S((1 << b) | (1 << c)), i, (lhs, m1, m2))):
                        return rep
    rep.violations.sort()
    return rep


# -- d-form ------------------------------------------------------------------------

def critical_thresholds(M: MatroidV) -> List:
    """Thresholds at which the d-invariants of ``M`` can change, plus samples between.

    For the integer flavor these are the integers ``1..max+2``.  For the
    rational flavor every finite length, every midpoint between consecutive
    lengths, half the smallest length and two values above the largest.
    """
    finite = sorted({x for m in M.modules for x in m.lengths if x is not INF})
    if M.flavor == "int" and all(isinstance(x, int) for x in finite):
        top = finite[-1] if finite else 0
        return list(range(1, top + 3))
    if not finite:
        return [1, 2]
    out = set(finite)
    out.add(Fraction(finite[0]) / 2)
    for a, b in zip(finite, finite[1:]):
        out.add((Fraction(a) + b) / 2)
    out.add(finite[-1] + 1)
    out.add(finite[-1] + 2)
    return sorted(out)


def verify_d_axioms(M: MatroidV, first_only: bool = False) -> AxiomReport:
    rep = AxiomReport("d")
    L = critical_thresholds(M)
    n, full = M.n, M.full
    S = M.set_of
    d = [[d_invariant(m, ell) for ell in L] for m in M.modules]
    dl = [[d_leq(m, ell) for ell in L] for m in M.modules]

    def bad(v):
        rep.violations.append(v)
        return first_only

    for A in range(1 << n):
        for k in range(len(L) - 1):
            rep.checked += 1
            if d[A][k] < d[A][k + 1]:
                if bad(Violation("L0", S(A), (), L[k], (d[A][k], d[A][k + 1]))):
                    return rep
    for A in range(1 << n):
        for b in bits(full ^ A):
            Ab = A | (1 << b)
            for k, ell in enumerate(L):
                rep.checked += 1
                diff = d[A][k] - d[Ab][k]
                if not 0 <= diff <= 1:
                    if bad(Violation("L1", S(A), S(1 << b), ell, (d[A][k], d[Ab][k]))):
                        return rep
    for A in range(1 << n):
        for b, c in combinations(bits(full ^ A), 2):
            Ab, Ac = A | (1 << b), A | (1 << c)
            Abc = Ab | Ac
            for k, ell in enumerate(L):
                rep.checked += 1
                val = dl[A][k] - dl[Ab][k] - dl[Ac][k] + dl[Abc][k]
                if val < 0:
                    if bad(Violation("L2a", S(A), S((1 << b) | (1 << c)), ell, (val,))):
                        return rep
                elif val != 0 and d[Ab][k] != d[Ac][k]:
                    if bad(Violation("L2b", S(A), S((1 << b) | (1 << c)), ell,
                                     (val, d[Ab][k], d[Ac][k]))):
                        return rep
    rep.violations.sort()
    return rep


# -- D-family ----------------------------------------------------------------------

def _terms(which, T, A, e, i):
    """Return ("twice", values) or ("ge", lhs, rhs) for one instance."""
    def tt(extra, j):
        m = A
        for x in extra:
            m |= 1 << x
        row = T[m]
        return row[j] if j < len(row) else 0

    if which == "D4":
        b, c, d, f = e
        return ("twice", (ext_add(tt((b, c), i), tt((d, f), i)),
                          ext_add(tt((b, d), i), tt((c, f), i)),
                          ext_add(tt((b, f), i), tt((c, d), i))))
    if which == "D3'":
        b, c, d = e
        return ("twice", (ext_add(tt((b, c), i), tt((d,), i + 1)),
                          ext_add(tt((b, d), i), tt((c,), i + 1)),
                          ext_add(tt((b,), i + 1), tt((c, d), i))))
    if which == "D3":
        b, c, d = e
        return ("twice", (ext_add(tt((b, c), i), tt((d,), i)),
                          ext_add(tt((b, d), i), tt((c,), i)),
                          ext_add(tt((b,), i), tt((c, d), i))))
    if which == "D2'":
        b, c = e
        return ("twice", (ext_add(tt((b, c), i), tt((), i + 1)),
                          ext_add(tt((b,), i + 1), tt((c,), i)),
                          ext_add(tt((b,), i), tt((c,), i + 1))))
    if which == "D2''":
        b, c = e
        return ("ge", ext_add(tt((b, c), i), tt((), i + 2)), ext_add(tt((b,), i + 1), tt((c,), i + 1)))
    if which == "D2":
        b, c = e
        return ("ge", ext_add(tt((b, c), i), tt((), i)), ext_add(tt((b,), i), tt((c,), i)))
    if which == "D1''":
        (b,) = e
        return ("ge", ext_add(tt((b,), i), tt((), i + 2)), ext_add(tt((b,), i + 1), tt((), i + 1)))
    if which == "D1'":
        (b,) = e
        return ("ge", ext_add(tt((b,), i + 1), tt((), i)), ext_add(tt((b,), i), tt((), i + 1)))
    if which == "D0''":
        return ("ge", ext_add(tt((), i), tt((), i + 2)), ext_add(tt((), i + 1), tt((), i + 1)))
    raise ValueError(f"unknown statement {which!r}")


_ARITY = {"D4": 4, "D3'": 3, "D3": 3, "D2'": 2, "D2''": 2, "D2": 2, "D1''": 1, "D1'": 1, "D0''": 0}


def verify_D_statement(M: MatroidV, which: str, first_only: bool = False) -> AxiomReport:
    """Check one of the nine D-statements over all subsets, elements and indices."""
    which = _ALIASES.get(which, which)
    if which not in _ARITY:
        raise ValueError(f"unknown statement {which!r}")
    rep = AxiomReport(which)
    T = M.t_table()
    K = M.stab_bound
    k = _ARITY[which]
    for A in range(1 << M.n):
        for e in combinations(bits(M.full ^ A), k):
            for i in range(K + 1):
                rep.checked += 1
                res = _terms(which, T, A, e, i)
                if res[0] == "twice":
                    ok = min_attained_twice(res[1])
                    vals = res[1]
                else:
                    ok = res[1] >= res[2]
                    vals = res[1:]
                if not ok:
                    wit = tuple(M.labels[x] for x in e)
                    rep.violations.append(Violation(which, M.set_of(A), wit, i, tuple(vals)))
                    if first_only:
                        return rep
    rep.violations.sort()
    return rep


def verify_all_D(M: MatroidV) -> dict:
    return {w: verify_D_statement(M, w) for w in D_STATEMENTS}


def verify_reduced_system(M: MatroidV) -> AxiomReport:
    """(TS) with (D0''), (D1'), (D1''), (D2'): equivalent to the t-axioms."""
    rep = AxiomReport("reduced")
    for w in ("D0''", "D1'", "D1''", "D2'"):
        r = verify_D_statement(M, w)
        rep.violations.extend(r.violations)
        rep.checked += r.checked
    rep.violations.sort()
    return rep


# -- generalised exchange ------------------------------------------------------------

def _tvec(M: MatroidV, v) -> ExtVal:
    mask = 0
    for p, x in enumerate(v[:-1]):
        if x:
            mask |= 1 << p
    return M.t(mask, v[-1])


def check_generalised_exchange(M: MatroidV, v: Sequence[int], w: Sequence[int], a: int) -> bool:
    """Exchange inequality for lattice points ``v, w`` of ``{0,1}^n x N``.

    Coordinates are 0-based: ``0..n-1`` are elements, ``n`` is the index
    coordinate and ``n+1`` is the virtual coordinate ``-sum``.  Returns True
    when ``t(v)+t(w)`` is at least one of the exchanged sums.
    """
    n = M.n
    v, w = list(v), list(w)
    if len(v) != n + 1 or len(w) != n + 1:
        raise BadCoordinates("vectors must have n+1 coordinates")
    for u in (v, w):
        if any(x not in (0, 1) for x in u[:n]) or u[n] < 0:
            raise BadCoordinates("vectors must lie in {0,1}^n x N")
    ve, we = v + [-sum(v)], w + [-sum(w)]
    if not 0 <= a <= n + 1 or not ve[a] > we[a]:
        raise BadCoordinates("coordinate a must satisfy v_a > w_a")
    B = [b for b in range(n + 2) if ve[b] < we[b]]
    base = ext_add(_tvec(M, v), _tvec(M, w))
    sums = []
    for b in B:
        v2, w2 = list(v), list(w)
        if a <= n:
            v2[a] -= 1
            w2[a] += 1
        if b <= n:
            v2[b] += 1
            w2[b] -= 1
        sums.append(ext_add(_tvec(M, v2), _tvec(M, w2)))
    return base >= min(sums)


def generalised_exchange_failures(M: MatroidV, limit: int = None) -> list:
    """All ``(v, w, a)`` with ``i <= stab_bound`` at which the exchange inequality fails."""
    n = M.n
    K = M.stab_bound
    pts = [tuple(((m >> p) & 1) for p in range(n)) + (i,) for m in range(1 << n) for i in range(K + 1)]
    out = []
    for v in pts:
        for w in pts:
            if v == w:
                continue
            ve, we = list(v) + [-sum(v)], list(w) + [-sum(w)]
            for a in range(n + 2):
                if ve[a] > we[a] and not check_generalised_exchange(M, v, w, a):
                    out.append((v, w, a))
                    if limit and len(out) >= limit:
                        return out
    return out
