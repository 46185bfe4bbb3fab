"""Tropical Plücker vectors, flags and incidences, and the matroids they come from.

Coordinates are indexed by bitmasks over ground set positions ``0..n-1``.
Tropical addition is ``min``; a tropical polynomial vanishes when its
minimum is attained at least twice (an all-infinite minimum counts as
vanishing).
"""
from fractions import Fraction
from itertools import combinations
from math import comb, lcm
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .axioms import AxiomReport, Violation, verify_t_axioms
from .errors import (AllInfinite, BadProfile, NotInClass, NotNormalized, NotPluecker,
                     NotValidTSequence, RankBounds, RankMismatch, ValmatError)
from .matroid import MatroidV, bits, from_t_table, is_bispannable, is_essential, popcount
from .valgroup import INF, ExtVal, ext, ext_add, fmt, min_attained_twice, normalize


def subsets_of_size(n: int, r: int) -> List[int]:
    """All ``r``-subsets of ``range(n)`` as bitmasks, in lexicographic order."""
    if r < 0 or r > n:
        return []
    return [sum(1 << e for e in c) for c in combinations(range(n), r)]


def mask_key(mask: int) -> str:
    return ",".join(str(e + 1) for e in bits(mask))


def key_mask(key: str) -> int:
    key = key.strip()
    if not key:
        return 0
    m = 0
    for tok in key.split(","):
        m |= 1 << (int(tok) - 1)
    return m


class TPluecker:
    """A rank-``r`` vector on ``n`` elements; missing coordinates are infinite."""

    __slots__ = ("n", "r", "coords", "note")

    def __init__(self, n: int, r: int, coords: Dict[int, object], note: str = ""):
        if not 0 <= r <= n:
            raise RankBounds(f"rank {r} outside 0..{n}")
        full = {}
        for A in subsets_of_size(n, r):
            full[A] = INF
        for A, v in coords.items():
            if A not in full:
                raise ValueError(f"coordinate {mask_key(A)!r} does not have size {r}")
            full[A] = ext(v)
        if all(v is INF for v in full.values()):
            raise AllInfinite("every coordinate is infinite")
        self.n, self.r, self.coords, self.note = n, r, full, note

    @classmethod
    def constant(cls, n: int, r: int, value=0) -> "TPluecker":
        return cls(n, r, {A: value for A in subsets_of_size(n, r)})

    def __getitem__(self, A: int) -> ExtVal:
        return self.coords.get(A, INF)

    def __eq__(self, other):
        if not isinstance(other, TPluecker):
            return NotImplemented
        return (self.n, self.r, self.coords) == (other.n, other.r, other.coords)

    def __hash__(self):
        return hash((self.n, self.r, tuple(sorted(self.coords.items(), key=lambda kv: kv[0]))))

    def __repr__(self):
        vals = ", ".join(f"{mask_key(A) or '{}'}:{fmt(v)}" for A, v in self.items())
        return f"TPluecker(n={self.n}, r={self.r}, {{{vals}}})"

    def items(self):
        return [(A, self.coords[A]) for A in subsets_of_size(self.n, self.r)]

    def values(self) -> List[ExtVal]:
        return [v for _, v in self.items()]

    def support(self) -> List[int]:
        return [A for A, v in self.items() if v is not INF]

    def min_value(self) -> ExtVal:
        return min(v for v in self.coords.values())

    def shift(self, c) -> "TPluecker":
        c = ext(c)
        return TPluecker(self.n, self.r, {A: ext_add(v, c) for A, v in self.coords.items()}, self.note)

    def normalized(self) -> "TPluecker":
        """Shift so the minimum coordinate is zero."""
        return self.shift(-self.min_value())

    def dual(self) -> "TPluecker":
        full = (1 << self.n) - 1
        return TPluecker(self.n, self.n - self.r, {full ^ A: v for A, v in self.coords.items()})

    def permuted(self, perm: Sequence[int]) -> "TPluecker":
        """Move the element at position ``k`` to position ``perm[k]``."""
        out = {}
        for A, v in self.coords.items():
            out[sum(1 << perm[k] for k in bits(A))] = v
        return TPluecker(self.n, self.r, out, self.note)

    def to_json(self) -> dict:
        return {"format": "tpluecker/1", "n": self.n, "r": self.r,
                "coords": {mask_key(A): fmt(v) for A, v in self.items()}}

    @classmethod
    def from_json(cls, data: dict) -> "TPluecker":
        from .errors import FormatError
        if data.get("format") != "tpluecker/1":
            raise FormatError("expected format tpluecker/1")
        n, r = int(data["n"]), int(data["r"])
        coords = {}
        for key, v in data["coords"].items():
            try:
                A = key_mask(key)
            except ValueError as exc:
                raise FormatError(f"bad subset key {key!r}") from exc
            if A >> n or popcount(A) != r:
                raise FormatError(f"bad subset key {key!r}")
            coords[A] = ext(v)
        return cls(n, r, coords)


class TFlagPluecker:
    """A vector indexed by every subset of ``range(n)``."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Dict[int, object]):
        self.n = n
        self.coords = {A: ext(coords.get(A, INF)) for A in range(1 << n)}
        for r in range(n + 1):
            if all(self.coords[A] is INF for A in subsets_of_size(n, r)):
                raise AllInfinite(f"every coordinate of size {r} is infinite")

    @classmethod
    def from_flag(cls, flag: Sequence[TPluecker]) -> "TFlagPluecker":
        n = flag[0].n
        if [p.r for p in flag] != list(range(n + 1)):
            raise RankMismatch("a full flag needs one vector of each rank 0..n")
        coords = {}
        for p in flag:
            coords.update(p.coords)
        return cls(n, coords)

    def rank(self, r: int) -> TPluecker:
        return TPluecker(self.n, r, {A: self.coords[A] for A in subsets_of_size(self.n, r)})

    def __getitem__(self, A: int) -> ExtVal:
        return self.coords[A]

    def to_json(self) -> dict:
        return {"format": "tflag/1", "n": self.n,
                "coords": {mask_key(A): fmt(self.coords[A]) for A in range(1 << self.n)}}

    @classmethod
    def from_json(cls, data: dict) -> "TFlagPluecker":
        from .errors import FormatError
        if data.get("format") != "tflag/1":
            raise FormatError("expected format tflag/1")
        n = int(data["n"])
        return cls(n, {key_mask(k): ext(v) for k, v in data["coords"].items()})


# -- relation checkers ------------------------------------------------------------------

def _vanishes(terms) -> bool:
    return min_attained_twice(list(terms))


def check_three_term(p: TPluecker, limit: Optional[int] = None) -> AxiomReport:
    """Three-term relations, plus basis exchange on the support when it is not full."""
    rep = AxiomReport("three-term")
    n, r = p.n, p.r
    c = p.coords
    for A in subsets_of_size(n, r - 2):
        out = bits(((1 << n) - 1) ^ A)
        for b, cc, d, e in combinations(out, 4):
            B, C, D, E = 1 << b, 1 << cc, 1 << d, 1 << e
            terms = (ext_add(c[A | B | C], c[A | D | E]), ext_add(c[A | B | D], c[A | C | E]),
                     ext_add(c[A | B | E], c[A | C | D]))
            rep.checked += 1
            if not _vanishes(terms):
                rep.violations.append(Violation("3-term", tuple(bits(A)), (b, cc, d, e), None, terms))
                if limit and len(rep.violations) >= limit:
                    return rep
    supp = p.support()
    if len(supp) < len(p.coords):
        sset = set(supp)
        for B1 in supp:
            for B2 in supp:
                for x in bits(B1 & ~B2):
                    rep.checked += 1
                    if not any((B1 ^ (1 << x)) | (1 << y) in sset for y in bits(B2 & ~B1)):
                        rep.violations.append(Violation("support-exchange", tuple(bits(B1)),
                                                        tuple(bits(B2)), x))
                        if limit and len(rep.violations) >= limit:
                            return rep
    return rep


_BIG = 1 << 50
_HALF = 1 << 49


def _scale(values: Iterable[ExtVal]) -> Optional[int]:
    den = 1
    top = 0
    for v in values:
        if v is INF:
            continue
        v = Fraction(v)
        den = lcm(den, v.denominator)
    for v in values:
        if v is not INF:
            top = max(top, abs(Fraction(v) * den))
    if top >= 1 << 40:
        return None
    return den


def _relations_python(n, upper, lower, sA, sB, name, limit):
    rep = AxiomReport(name)
    for A in subsets_of_size(n, sA):
        for B in subsets_of_size(n, sB):
            terms = [ext_add(upper[A ^ (1 << a)], lower[B | (1 << a)]) for a in bits(A & ~B)]
            rep.checked += 1
            if not _vanishes(terms):
                rep.violations.append(Violation(name, tuple(bits(A)), tuple(bits(B)), (sA, sB), tuple(terms)))
                if limit and len(rep.violations) >= limit:
                    return rep
    return rep


def _relations_numpy(n, upper, lower, sA, sB, name, limit, chunk=64):
    vals = list(upper.values()) + list(lower.values())
    den = _scale(vals)
    if den is None:
        return _relations_python(n, upper, lower, sA, sB, name, limit)

    def enc(v):
        return _BIG if v is INF else int(Fraction(v) * den)

    As = subsets_of_size(n, sA)
    Bs = subsets_of_size(n, sB)
    U = np.full((len(As), n), _BIG, dtype=np.int64)
    for k, A in enumerate(As):
        for a in bits(A):
            U[k, a] = enc(upper[A ^ (1 << a)])
    L = np.full((len(Bs), n), _BIG, dtype=np.int64)
    for k, B in enumerate(Bs):
        for a in range(n):
            if not (B >> a) & 1:
                L[k, a] = enc(lower[B | (1 << a)])
    rep = AxiomReport(name)
    rep.checked = len(As) * len(Bs)
    for start in range(0, len(Bs), chunk):
        Lc = L[start:start + chunk]
        T = U[None, :, :] + Lc[:, None, :]
        T = np.minimum(T, _BIG)
        m = T.min(axis=2)
        cnt = (T == m[:, :, None]).sum(axis=2)
        bad = np.argwhere((m < _HALF) & (cnt < 2))
        for bi, ai in bad:
            A, B = As[ai], Bs[start + bi]
            terms = [ext_add(upper[A ^ (1 << a)], lower[B | (1 << a)]) for a in bits(A & ~B)]
            rep.violations.append(Violation(name, tuple(bits(A)), tuple(bits(B)), (sA, sB), tuple(terms)))
            if limit and len(rep.violations) >= limit:
                return rep
    return rep


def _relations(n, upper, lower, sA, sB, name, limit, method):
    if method == "python" or (method == "auto" and comb(n, sA) * comb(n, sB) < 2000):
        return _relations_python(n, upper, lower, sA, sB, name, limit)
    return _relations_numpy(n, upper, lower, sA, sB, name, limit)


def check_pluecker_full(p, limit: Optional[int] = None, method: str = "auto") -> AxiomReport:
    """All relations ``min_{a in A-B} p_{A-a} + p_{B+a}`` vanishes.

    For a rank-``r`` vector the pairs have ``|A| = r+1`` and ``|B| = r-1``; for a
    flag vector every pair with ``|A| >= |B| + 2`` is used.  ``method`` chooses
    between the plain loop and a vectorised integer kernel (``"auto"`` picks
    by problem size).
    """
    if isinstance(p, TPluecker):
        if p.r < 1 or p.r + 1 > p.n:
            return AxiomReport("pluecker")
        return _relations(p.n, p.coords, p.coords, p.r + 1, p.r - 1, "pluecker", limit, method)
    rep = AxiomReport("flag-pluecker")
    n = p.n
    for sA in range(2, n + 1):
        for sB in range(0, sA - 1):
            upper = {A: p.coords[A] for A in subsets_of_size(n, sA - 1)}
            lower = {B: p.coords[B] for B in subsets_of_size(n, sB + 1)}
            sub = _relations(n, upper, lower, sA, sB, "flag-pluecker", limit, method)
            rep.checked += sub.checked
            rep.violations.extend(sub.violations)
            if limit and len(rep.violations) >= limit:
                return rep
    return rep


def check_incidence(p: TPluecker, q: TPluecker, mode: str = "full", limit: Optional[int] = None,
                    method: str = "auto") -> AxiomReport:
    """Incidence of ``p`` (rank ``r``) and ``q`` (rank ``r + 1``), lower rank first.

    ``three-term``: for ``|A| = r-1`` and ``b, c, d`` outside ``A``,
    ``min{q_Abc + p_Ad, q_Abd + p_Ac, q_Acd + p_Ab}`` vanishes.
    ``full``: ``min_{a in A-B} q_{A-a} + p_{B+a}`` vanishes for ``|A| = r+2``, ``|B| = r-1``.
    """
    if p.n != q.n or q.r != p.r + 1:
        raise RankMismatch(f"need ranks r and r+1 on one ground set, got {p.r} and {q.r}")
    n, r = p.n, p.r
    if mode == "three-term":
        rep = AxiomReport("incidence-3")
        P, Q = p.coords, q.coords
        for A in subsets_of_size(n, r - 1):
            out = bits(((1 << n) - 1) ^ A)
            for b, c, d in combinations(out, 3):
                B, C, D = 1 << b, 1 << c, 1 << d
                terms = (ext_add(Q[A | B | C], P[A | D]), ext_add(Q[A | B | D], P[A | C]),
                         ext_add(Q[A | C | D], P[A | B]))
                rep.checked += 1
                if not _vanishes(terms):
                    rep.violations.append(Violation("incidence-3", tuple(bits(A)), (b, c, d), None, terms))
                    if limit and len(rep.violations) >= limit:
                        return rep
        return rep
    if r < 1 or r + 2 > n:
        return AxiomReport("incidence")
    return _relations(n, q.coords, p.coords, r + 2, r - 1, "incidence", limit, method)


# -- vectors from matroids ------------------------------------------------------------------

def extract_t_vector(M: MatroidV, r: int, i: int) -> TPluecker:
    """``(t_i(M(A)))_{|A| = r}``.

    Needs ``r + i >= generic rank``; the boundary case ``r + i == generic rank``
    is recorded in the ``note`` field.
    """
    R = M.generic_rank
    if r + i < R:
        raise AllInfinite(f"r + i = {r + i} is below the generic rank {R}")
    coords = {}
    for A in subsets_of_size(M.n, r):
        row = M.t_row(A)
        coords[A] = row[i] if i < len(row) else 0
    note = "boundary" if r + i == R else ""
    return TPluecker(M.n, r, coords, note)


def valid_profile(profile: Sequence[int], n: int, R: int) -> bool:
    if len(profile) != n + 1:
        return False
    if any(x < 0 for x in profile):
        return False
    if any(profile[k] - profile[k + 1] not in (0, 1) for k in range(n)):
        return False
    return all(k + profile[k] >= R for k in range(n + 1))


def all_profiles(n: int, R: int, top: int) -> List[Tuple[int, ...]]:
    """Valid profiles with ``i_0 <= top``."""
    out = []

    def rec(prefix):
        if len(prefix) == n + 1:
            if valid_profile(prefix, n, R):
                out.append(tuple(prefix))
            return
        last = prefix[-1]
        for nxt in (last, last - 1):
            if nxt >= 0:
                rec(prefix + [nxt])

    for start in range(top + 1):
        rec([start])
    return sorted(set(out))


def extract_flag(M: MatroidV, profile: Sequence[int]) -> List[TPluecker]:
    """The flag ``(t_{0,i_0}, ..., t_{n,i_n})`` for a valid index profile."""
    if not valid_profile(profile, M.n, M.generic_rank):
        raise BadProfile(f"profile {list(profile)} is not valid for this matroid")
    return [extract_t_vector(M, r, profile[r]) for r in range(M.n + 1)]


def fm_profile(M: MatroidV) -> Tuple[int, ...]:
    """``i_r = max(R - r, 0)`` for generic rank ``R``."""
    R = M.generic_rank
    return tuple(max(R - r, 0) for r in range(M.n + 1))


def check_flag(flag: Sequence[TPluecker], method: str = "auto") -> AxiomReport:
    """Full flag relations of the whole flag, after checking consecutive incidences."""
    rep = AxiomReport("flag")
    for p in flag:
        rep = rep.merge(check_pluecker_full(p, method=method))
    for p, q in zip(flag, flag[1:]):
        rep = rep.merge(check_incidence(p, q, "full", method=method))
    rep = rep.merge(check_pluecker_full(TFlagPluecker.from_flag(flag), method=method))
    return rep


def check_q_from_incidence(p: TPluecker, q: TPluecker) -> AxiomReport:
    """Report a counterexample if ``q`` is incident to ``p`` yet fails the Plücker relations."""
    rep = AxiomReport("incidence-implies-pluecker")
    if q.r == p.r + 1:
        inc = check_incidence(p, q)
    elif q.r == p.r - 1:
        inc = check_incidence(q, p)
    else:
        raise RankMismatch("ranks must differ by one")
    rep.checked = 1
    if inc.passed:
        for sub in (check_three_term(q), check_pluecker_full(q)):
            if not sub.passed:
                rep.violations.append(Violation("counterexample", (), (), None, (), sub.name))
                break
    return rep


def tropical_combination(q1: TPluecker, q2: TPluecker, a=0, b=0) -> TPluecker:
    """Coordinatewise ``min(a + q1, b + q2)``."""
    if (q1.n, q1.r) != (q2.n, q2.r):
        raise RankMismatch("vectors must share ground set and rank")
    a, b = ext(a), ext(b)
    return TPluecker(q1.n, q1.r, {A: min(ext_add(a, q1[A]), ext_add(b, q2[A])) for A in q1.coords})


# -- stable operations -------------------------------------------------------------------------

def _submasks_of_size(A: int, k: int) -> List[int]:
    return [sum(1 << e for e in c) for c in combinations(bits(A), k)]


def stable_sum(p: TPluecker, q: TPluecker) -> TPluecker:
    """``(p + q)_A = min{p_B + q_C : B ⊔ C = A}``."""
    if p.n != q.n:
        raise RankMismatch("ground sets differ")
    n, s = p.n, p.r + q.r
    if s > n:
        raise RankBounds(f"ranks {p.r} + {q.r} exceed {n}")
    coords = {}
    for A in subsets_of_size(n, s):
        coords[A] = min((ext_add(p[B], q[A ^ B]) for B in _submasks_of_size(A, p.r)), default=INF)
    return TPluecker(n, s, coords)


def stable_intersection(p: TPluecker, q: TPluecker) -> TPluecker:
    """``(p ∩ q)_A = min{p_B + q_C : B ∪ C = [n], B ∩ C = A}``."""
    if p.n != q.n:
        raise RankMismatch("ground sets differ")
    n = p.n
    s = p.r + q.r - n
    if s < 0:
        raise RankBounds(f"ranks {p.r} + {q.r} fall short of {n}")
    full = (1 << n) - 1
    coords = {}
    for A in subsets_of_size(n, s):
        D = full ^ A
        best = INF
        for D1 in _submasks_of_size(D, n - p.r):
            best = min(best, ext_add(p[full ^ D1], q[full ^ (D ^ D1)]))
        coords[A] = best
    return TPluecker(n, s, coords)


def underline_sum(p: TPluecker, g: TPluecker) -> TPluecker:
    """Rank ``r + 1`` on ``n + 1`` elements: ``(p+g)_A`` without the new element, ``p_{A-*}`` with it."""
    if g.r != 1 or g.n != p.n:
        raise RankMismatch("g must have rank 1 on the same ground set")
    n = p.n
    star = 1 << n
    s = stable_sum(p, g) if p.r < n else None
    coords = {}
    for A in subsets_of_size(n + 1, p.r + 1):
        coords[A] = p[A ^ star] if A & star else s[A]
    return TPluecker(n + 1, p.r + 1, coords)


def underline_cap(p: TPluecker, h: TPluecker) -> TPluecker:
    """Rank ``r`` on ``n + 1`` elements: ``p_A`` without the new element, ``(p∩h)_{A-*}`` with it."""
    if h.r != p.n - 1 or h.n != p.n:
        raise RankMismatch("h must have rank n-1 on the same ground set")
    n = p.n
    bar = 1 << n
    inter = stable_intersection(p, h) if p.r >= 1 else None
    coords = {}
    for A in subsets_of_size(n + 1, p.r):
        if A & bar:
            coords[A] = inter[A ^ bar]
        else:
            coords[A] = p[A]
    return TPluecker(n + 1, p.r, coords)


def lift_g(g: TPluecker, v) -> TPluecker:
    """``g'`` of rank 1 on ``n + 1`` elements with value ``v`` on the new element."""
    coords = dict(g.coords)
    coords[1 << g.n] = ext(v)
    return TPluecker(g.n + 1, 1, coords)


def lift_h(h: TPluecker, v) -> TPluecker:
    """``h'`` of rank ``n`` on ``n + 1`` elements: ``v`` on ``[n]``, ``h_{A-*}`` otherwise."""
    n = h.n
    star = 1 << n
    coords = {(1 << n) - 1: ext(v)}
    for A in subsets_of_size(n, n - 1):
        coords[A | star] = h[A]
    return TPluecker(n + 1, n, coords)


def rank1_in_corank1(g: TPluecker, h: TPluecker) -> bool:
    """``L(g) ⊆ L(h)``: ``min_a g_a + h_{[n]-a}`` vanishes."""
    full = (1 << g.n) - 1
    return _vanishes([ext_add(g[1 << a], h[full ^ (1 << a)]) for a in range(g.n)])


def underline_identity(p: TPluecker, g: TPluecker, h: TPluecker, v) -> Tuple[TPluecker, TPluecker]:
    """Both sides of the commutation identity, on positions ``[n], *, *̄``."""
    n = p.n
    lhs = underline_cap(underline_sum(p, g), lift_h(h, v))
    rhs = underline_sum(underline_cap(p, h), lift_g(g, v))
    perm = list(range(n)) + [n + 1, n]
    return lhs, rhs.permuted(perm)


# -- the Dressian slice ----------------------------------------------------------------------------

def xi_blocks(n: int, r: int, k: int, ell: int) -> Tuple[int, int]:
    """Masks of the generic block ``G`` and the zero block ``Z`` after ``[n]``."""
    g = r + k
    z = n - r + ell
    G = ((1 << g) - 1) << n
    Z = ((1 << z) - 1) << (n + g)
    return G, Z


def in_class(M: MatroidV, r: int, k: int, ell: int) -> bool:
    return (is_essential(M) and M.generic_rank == r
            and M.modules[0].summand_count <= r + k
            and M.modules[M.full].summand_count <= ell)


def class_parameters(M: MatroidV) -> Tuple[int, int, int]:
    """Smallest ``(r, k, ell)`` with ``M`` in the class (``M`` must be essential)."""
    r = M.generic_rank
    return r, M.modules[0].summand_count - r, M.modules[M.full].summand_count


def xi_embed(M: MatroidV, r: int, n: int, k: int, ell: int) -> TPluecker:
    """``p_A = t_{|A∩G|}(M(A∩[n]))`` on ``2n + k + ell`` elements, rank ``n + k``."""
    if M.n != n or not in_class(M, r, k, ell):
        raise NotInClass(f"matroid is not in the class (r={r}, n={n}, k={k}, l={ell})")
    G, Z = xi_blocks(n, r, k, ell)
    base = (1 << n) - 1
    N = 2 * n + k + ell
    rows = [M.t_row(S) for S in range(1 << n)]
    coords = {}
    for A in subsets_of_size(N, n + k):
        j = popcount(A & G)
        row = rows[A & base]
        coords[A] = row[j] if j < len(row) else 0
    return TPluecker(N, n + k, coords)


def check_W(q: TPluecker, n: int, G: int, Z: int, trace: bool = True) -> AxiomReport:
    """The linear equations of the slice.

    Coordinates agree when their intersections with ``G`` and with ``Z`` have
    equal sizes (and, with ``trace=True``, equal traces on ``[n]``); all
    coordinates with ``|Z∩A| = 0`` agree, and all with ``|G∩A| = |G|`` agree.
    """
    rep = AxiomReport("W" if trace else "W-literal")
    base = (1 << n) - 1
    groups: Dict[tuple, List[int]] = {}
    for A in q.coords:
        key = (popcount(A & G), popcount(A & Z)) + ((A & base,) if trace else ())
        groups.setdefault(key, []).append(A)
    for key in sorted(groups):
        members = sorted(groups[key])
        first = members[0]
        for A in members[1:]:
            rep.checked += 1
            if q[A] != q[first]:
                rep.violations.append(Violation("W-class", tuple(bits(A)), tuple(bits(first)), key,
                                                (q[A], q[first])))
    gsize = popcount(G)
    for name, pred in (("W-zero-block", lambda A: popcount(A & Z) == 0),
                       ("W-generic-block", lambda A: popcount(A & G) == gsize)):
        members = sorted(A for A in q.coords if pred(A))
        for A in members[1:]:
            rep.checked += 1
            if q[A] != q[members[0]]:
                rep.violations.append(Violation(name, tuple(bits(A)), tuple(bits(members[0])), None,
                                                (q[A], q[members[0]])))
    return rep


class Section(NamedTuple):
    matroid: MatroidV
    shift: ExtVal
    lifted: TPluecker


def lifted_vector(p: TPluecker) -> TPluecker:
    """``p`` capped ``r`` times with ``0*`` then summed ``n - r`` times with ``0``."""
    q = p
    for _ in range(p.r):
        q = underline_cap(q, TPluecker.constant(q.n, q.n - 1))
    for _ in range(p.n - p.r):
        q = underline_sum(q, TPluecker.constant(q.n, 1))
    return q


def section(p: TPluecker, auto_shift: bool = False) -> Section:
    """Build a matroid in the class ``(r, n; 0, 0)`` whose ``t_{r,0}`` equals ``p``."""
    shift = 0
    if p.min_value() != 0:
        if not auto_shift:
            raise NotNormalized(f"minimum coordinate is {fmt(p.min_value())}, not 0")
        shift = normalize(-p.min_value())
        p = p.shift(shift)
    rep = check_pluecker_full(p, limit=1)
    if not rep.passed:
        raise NotPluecker(str(rep.violations[0]))
    n, r = p.n, p.r
    q = lifted_vector(p)
    G, Z = xi_blocks(n, r, 0, 0)
    w = check_W(q, n, G, Z)
    if not w.passed:
        raise ValmatError(f"lifted vector left the slice: {w.violations[0]}")
    gpos = bits(G)
    zpos = bits(Z)
    rows = []
    for S in range(1 << n):
        s = popcount(S)
        row = []
        for j in range(r + 2):
            if j < r - s:
                row.append(INF)
            elif j > n - s or j >= r:
                row.append(0)
            else:
                A = S | sum(1 << g for g in gpos[:j]) | sum(1 << z for z in zpos[:n - s - j])
                row.append(q[A])
        rows.append(row)
    try:
        M = from_t_table(rows)
    except NotValidTSequence as exc:
        raise ValmatError(f"pulled-back table is not a matroid table: {exc}") from exc
    flavor = "int" if all(isinstance(v, int) or v is INF for v in p.coords.values()) else "rat"
    M = MatroidV(M.modules, None, flavor)
    check = verify_t_axioms(M, first_only=True)
    if not check.passed:
        raise ValmatError(f"pulled-back matroid fails the axioms: {check.violations[0]}")
    if not is_bispannable(M) or extract_t_vector(M, r, 0) != p:
        raise ValmatError("pulled-back matroid does not reproduce the vector")
    return Section(M, shift, q)


def matroid_from_pluecker(p: TPluecker, auto_shift: bool = False) -> MatroidV:
    return section(p, auto_shift).matroid


def lifted_formula(p: TPluecker, A: int, G: int) -> ExtVal:
    """``min{p_B : |B| = r, |B ∩ A| >= r - |G ∩ A|}`` (direct evaluation of the lifted vector)."""
    n, r = p.n, p.r
    trace = A & ((1 << n) - 1)
    need = r - popcount(A & G)
    return min((v for B, v in p.coords.items() if popcount(B & trace) >= need), default=INF)


# -- example vectors ----------------------------------------------------------------------------------

def fano_vector(weights: Optional[Sequence] = None) -> TPluecker:
    """Zero on the bases of the Fano plane, shifted by ``sum_{b in B} w_b`` and normalised."""
    from .polyhedral.subdivision import FANO_LINES
    lines = {sum(1 << e for e in L) for L in FANO_LINES}
    w = [0] * 7 if weights is None else [ext(x) for x in weights]
    coords = {}
    for B in subsets_of_size(7, 3):
        if B not in lines:
            coords[B] = sum(w[b] for b in bits(B))
    return TPluecker(7, 3, coords).normalized()


def vector_from_values(n: int, r: int, values: Sequence) -> TPluecker:
    """Coordinates listed in lexicographic order of the ``r``-subsets."""
    masks = subsets_of_size(n, r)
    if len(values) != len(masks):
        raise ValueError(f"expected {len(masks)} values")
    return TPluecker(n, r, dict(zip(masks, values)))
