"""Exhaustive enumeration of small matroids over a discrete valuation ring."""
from itertools import combinations, combinations_with_replacement
from typing import Iterator, List

from .matroid import MatroidV, bits
from .modclass import ModuleClass, t_invariant
from .valgroup import INF, ext_add, ext_sub


def module_classes(max_len: int, max_summands: int, free: bool = True) -> List[ModuleClass]:
    """All classes with integer lengths ``<= max_len`` (and free summands) up to a count."""
    values = list(range(1, max_len + 1)) + ([INF] if free else [])
    out = []
    for k in range(max_summands + 1):
        for combo in combinations_with_replacement(values, k):
            out.append(ModuleClass(combo))
    out.sort(key=lambda m: (len(m), [(-1 if x is INF else x) for x in m.lengths]))
    return out


def enumerate_matroids(n: int, flavor: str = "int", max_len: int = 1,
                       max_summands: int = 2) -> Iterator[MatroidV]:
    """Yield every table within the bounds that satisfies the t-axioms.

    Subsets are assigned in increasing bitmask order; (T1) and (T2) are
    tested as soon as every set they mention is assigned, so the search
    prunes early.  The order of the output is deterministic.
    """
    classes = module_classes(max_len, max_summands)
    K = max_summands + 2
    rows = [tuple(t_invariant(m, i) for i in range(K + 2)) for m in classes]
    diffs = [tuple(ext_sub(r[i], r[i + 1]) for i in range(K + 1)) for r in rows]
    size = 1 << n
    choice = [0] * size

    def ok(X: int, c: int) -> bool:
        T, D = rows, diffs
        dX = D[c]
        for b in bits(X):
            A = X ^ (1 << b)
            dA = D[choice[A]]
            for i in range(K):
                if not (dA[i] >= dX[i] >= dA[i + 1]):
                    return False
        tX = T[c]
        for b, cc in combinations(bits(X), 2):
            A = X ^ (1 << b) ^ (1 << cc)
            Ab, Ac = A | (1 << b), A | (1 << cc)
            tA, tAb, tAc = T[choice[A]], T[choice[Ab]], T[choice[Ac]]
            dAb, dAc = D[choice[Ab]], D[choice[Ac]]
            for i in range(K):
                m1, m2 = dAb[i], dAc[i]
                try:
                    lhs = ext_add(ext_sub(ext_sub(tA[i + 1], tAb[i + 1]), tAc[i + 1]), tX[i])
                except ArithmeticError:
                    return False
                mn = m1 if m1 <= m2 else m2
                if lhs < mn or (m1 != m2 and lhs != mn):
                    return False
        return True

    def rec(X: int):
        if X == size:
            yield MatroidV([classes[c] for c in choice], flavor=flavor)
            return
        for c in range(len(classes)):
            if ok(X, c):
                choice[X] = c
                yield from rec(X + 1)

    yield from rec(0)
