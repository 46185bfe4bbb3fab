"""Spannable matroids, reconstruction from partial t-data, and exceptional pairs."""
from typing import Dict, List, NamedTuple, Optional

from .axioms import AxiomReport, Violation
from .errors import InvalidTSequence, NotSpannable, NotValidTSequence
from .matroid import MatroidV, bits, is_spannable, popcount
from .modclass import ModuleClass, from_t_sequence, t_invariant
from .valgroup import INF, ExtVal, ext, ext_sub


def check_spannable_recursion(M: MatroidV, offset: int = 0) -> AxiomReport:
    """Check ``t_{i+1}(A) = min_{b not in A} t_i(Ab)`` for proper ``A`` and ``i >= offset``.

    With ``offset = 0`` this needs ``M(E) = 0``.  A positive ``offset`` checks
    the recursion from that index on, which holds when ``M(E)`` needs at
    most ``offset`` generators.
    """
    if offset == 0 and not is_spannable(M):
        raise NotSpannable("M(E) is not the zero module")
    rep = AxiomReport("spannable-recursion")
    T = M.t_table()
    K = M.stab_bound
    for A in range(M.full):
        out = bits(M.full ^ A)
        for i in range(offset, K + 1):
            rep.checked += 1
            rhs = min(T[A | (1 << b)][i] for b in out)
            if T[A][i + 1] != rhs:
                rep.violations.append(Violation("recursion", M.set_of(A), (), i, (T[A][i + 1], rhs)))
    return rep


def _build(rows, n, labels, flavor):
    mods = []
    for r in rows:
        try:
            mods.append(from_t_sequence(r))
        except NotValidTSequence as exc:
            raise InvalidTSequence(str(exc)) from exc
    return MatroidV(mods, labels, flavor)


def _key_mask(key, labels) -> int:
    pos = {lab: i for i, lab in enumerate(labels)}
    if isinstance(key, int):
        return key
    m = 0
    for lab in key:
        m |= 1 << pos[lab]
    return m


def reconstruct_bounded(partial: Dict, n: int, ell: int, labels=None, flavor="int",
                        depth: Optional[int] = None) -> MatroidV:
    """Complete ``t_i(A)`` for ``i > ell`` by ``t_{j+1}(A) = min_b t_j(Ab)``.

    Args:
      partial: maps a subset (mask or label iterable) to its values
        ``(t_0, ..., t_ell)``.
      n: ground set size.
      ell: number of generators of ``M(E)``; the recursion is used for
        indices ``j >= ell``.
    """
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    full = (1 << n) - 1
    rows: List[List[ExtVal]] = [None] * (1 << n)
    for key, vals in partial.items():
        rows[_key_mask(key, labels)] = [ext(v) for v in vals][:ell + 1]
    if any(r is None for r in rows):
        raise InvalidTSequence("partial data must cover every subset")
    for r in rows:
        if len(r) < ell + 1:
            raise InvalidTSequence("each subset needs values t_0..t_ell")
    # M(A) needs at most ell + n - |A| generators, so n more steps suffice
    if depth is None:
        depth = n + 1
    for j in range(ell, ell + depth):
        for A in range(1 << n):
            if A == full:
                rows[A].append(0)
            else:
                rows[A].append(min(rows[A | (1 << b)][j] for b in bits(full ^ A)))
    return _build(rows, n, labels, flavor)


def reconstruct_spannable(t0: Dict, n: int, labels=None, flavor="int") -> MatroidV:
    """Rebuild a spannable matroid from its lengths ``t_0(A)``."""
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    full = (1 << n) - 1
    data = {_key_mask(k, labels): [v] for k, v in t0.items()}
    if full in data and ext(data[full][0]) != 0:
        raise InvalidTSequence("t_0(E) must be zero for a spannable matroid")
    return reconstruct_bounded(data, n, 0, labels, flavor)


def reconstruct_bispannable(rank_r_modules: Dict, n: int, r: int, labels=None,
                            flavor="int") -> MatroidV:
    """Rebuild a bispannable matroid from its modules on the ``r``-subsets.

    Sets smaller than ``r`` are filled by the spannable recursion (with
    ``t_i(A)`` infinite when ``i + |A| < r``); larger sets by the dual recursion
    ``t_i(A) = min_{a in A} t_i(A - a)`` read off from duality.
    """
    labels = tuple(labels) if labels is not None else tuple(range(1, n + 1))
    depth = r + 1
    rows: List[Optional[List[ExtVal]]] = [None] * (1 << n)
    for key, mod in rank_r_modules.items():
        m = _key_mask(key, labels)
        if popcount(m) != r:
            raise InvalidTSequence("keys must be r-subsets")
        mod = mod if isinstance(mod, ModuleClass) else ModuleClass(mod)
        rows[m] = [t_invariant(mod, i) for i in range(depth + 2)]
    for A in range(1 << n):
        if popcount(A) == r and rows[A] is None:
            raise InvalidTSequence("every r-subset needs a module")
    full = (1 << n) - 1
    # below rank r: t_{i+1}(A) = min_b t_i(Ab), t_i(A) infinite when i + |A| < r
    for size in range(r - 1, -1, -1):
        for A in range(1 << n):
            if popcount(A) != size:
                continue
            row = []
            for i in range(depth + 2):
                if i + size < r:
                    row.append(INF)
                else:
                    row.append(min(rows[A | (1 << b)][i - 1] for b in bits(full ^ A)))
            rows[A] = row
    # above rank r: dual recursion t_i(A) = min_{a in A} t_{i+1}(A - a)
    for size in range(r + 1, n + 1):
        for A in range(1 << n):
            if popcount(A) != size:
                continue
            rows[A] = [min(rows[A ^ (1 << a)][i] for a in bits(A))
                       for i in range(depth + 2)]
    return _build(rows, n, labels, flavor)


class ExceptionalPair(NamedTuple):
    s: int
    i: int
    mu: ExtVal


def exceptional_pairs(M: MatroidV, include_stable: bool = False) -> List[ExceptionalPair]:
    """Pairs ``(s, i)`` with ``t_i(A) = t_{i+1}(A) + mu`` for every ``|A| = s``.

    ``mu`` is infinite when every ``t_{s,i}`` entry is infinite (the relation
    then holds for ``mu = inf``); such degenerate pairs are reported with
    ``mu = INF``.  By default pairs where ``t_{s,i}`` is already identically
    zero are skipped; ``include_stable=True`` lists them up to the
    stabilisation bound.
    """
    T = M.t_table()
    K = M.stab_bound
    n = M.n
    out = []
    for s in range(1, n):
        masks = [A for A in range(1 << n) if popcount(A) == s]
        for i in range(K + 1):
            col = [T[A][i] for A in masks]
            nxt = [T[A][i + 1] for A in masks]
            if not include_stable and all(x == 0 for x in col):
                continue
            mus = {ext_sub(a, b) for a, b in zip(col, nxt) if b is not INF}
            if not mus:
                out.append(ExceptionalPair(s, i, INF))
            elif len(mus) == 1:
                out.append(ExceptionalPair(s, i, mus.pop()))
    return out


def exceptionality(M: MatroidV) -> int:
    return len(exceptional_pairs(M))
