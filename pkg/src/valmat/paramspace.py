"""The parameter space of matroids with bounded generator counts.

A matroid over the ring lies in the class ``(r, n; k, ell)`` when it is
essential, has generic rank ``r``, ``M(∅)`` needs at most ``r + k``
generators and ``M(E)`` at most ``ell``.  Such a matroid is projected to a
sequence of tropical flags indexed by the letters of a Bott-Samelson word,
and its full table of ``t``-values sits inside a polyhedral cone.

Two index conventions appear here.  ``index_profile`` returns the literal
counts ``i(j, m)``.  ``project_pi`` reads the ``t``-value of rank-``m`` sets
at ``tau(j, m) = max(r - m, 0) + i(0, m) - i(j, m)``, which starts at the
smallest meaningful index and ends at an index where every ``t`` vanishes.
"""
from collections import deque
from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .axioms import AxiomReport, Violation
from .errors import AllInfinite, BadParams, FormatError, InvalidIndex, NotComparable, NotInClass
from .matroid import MatroidV, bits, popcount
from .spannable import exceptional_pairs
from .tropical import (TPluecker, check_flag, extract_t_vector, in_class,
                       subsets_of_size)
from .valgroup import INF, ExtVal, ext, ext_add, ext_sub, fmt


def _check_params(r: int, n: int, k: int, ell: int) -> None:
    if n < 1 or not 0 <= r <= n or k < 0 or ell < 0:
        raise BadParams(f"need n >= 1, 0 <= r <= n and k, l >= 0; got {(r, n, k, ell)}")
    if abs(k - ell) > n:
        raise BadParams(f"|k - l| = {abs(k - ell)} exceeds n = {n}")


# -- the word ------------------------------------------------------------------------------

@dataclass(frozen=True)
class BSWord:
    r: int
    n: int
    k: int
    ell: int
    factors: Tuple[Tuple[int, int], ...]
    letters: Tuple[int, ...]

    def __len__(self):
        return len(self.letters)

    def count(self, m: int, j: Optional[int] = None) -> int:
        """Occurrences of ``s_m`` among the first ``j`` letters (all by default)."""
        return self.letters[:j].count(m) if j is not None else self.letters.count(m)

    def __str__(self):
        return " ".join(f"s{m}" for m in self.letters) or "e"


def build_word(r: int, n: int, k: int, ell: int) -> BSWord:
    """Expand the product of ``x_{a,b} = s_a s_{a+1} ... s_b`` over ``r + k`` factors.

    First indices run ``r, r-1, ..., 1`` and then stay at 1 for ``k`` more
    factors; second indices stay at ``n-1`` for ``ell`` factors and then
    run ``n-1, n-2, ...``.  A factor with ``a > b`` is empty.
    """
    _check_params(r, n, k, ell)
    total = r + k
    firsts = [r - j if j < r else 1 for j in range(total)]
    seconds = [n - 1 if j < ell else n - 1 - (j - ell) for j in range(total)]
    factors = tuple(zip(firsts, seconds))
    letters = tuple(m for a, b in factors for m in range(a, b + 1))
    return BSWord(r, n, k, ell, factors, letters)


def initial_index(r: int, n: int, k: int, ell: int, m: int) -> int:
    return min(r, m) - max(-k, m - n + r - ell)


def index_profile(word: BSWord, j: int) -> Tuple[int, ...]:
    """``(i(j, 1), ..., i(j, n-1))``: the initial index minus the ``s_m`` seen so far."""
    if not 0 <= j <= len(word):
        raise InvalidIndex(f"j = {j} outside 0..{len(word)}")
    r, n, k, ell = word.r, word.n, word.k, word.ell
    return tuple(initial_index(r, n, k, ell, m) - word.count(m, j) for m in range(1, n))


def t_index_profile(word: BSWord, j: int) -> Tuple[int, ...]:
    """The ``t``-indices read by ``project_pi`` for flag ``j``, one per rank ``1..n-1``."""
    r = word.r
    start = index_profile(word, 0)
    here = index_profile(word, j)
    return tuple(max(r - m, 0) + start[m - 1] - here[m - 1] for m in range(1, word.n))


def final_profile_displayed(r: int, n: int) -> Tuple[int, ...]:
    """``(r-1, r-2, ..., 1, 0, ..., 0)`` over ranks ``1..n-1``."""
    return tuple(max(r - m, 0) for m in range(1, n))


# -- flag sequences --------------------------------------------------------------------------

def _projectively_equal(p: TPluecker, q: TPluecker) -> bool:
    if (p.n, p.r) != (q.n, q.r):
        return False
    if p.support() != q.support():
        return False
    diffs = {ext_sub(p[A], q[A]) for A in p.support()}
    return len(diffs) <= 1


@dataclass
class FlagSequencePoint:
    """Flags ``F_0, ..., F_s``; each flag lists vectors of ranks ``1..n-1``."""
    r: int
    n: int
    k: int
    ell: int
    flags: List[List[TPluecker]]
    profiles: List[Tuple[int, ...]] = field(default_factory=list)

    def to_json(self) -> dict:
        word = build_word(self.r, self.n, self.k, self.ell)
        return {"format": "flagseq/1",
                "params": {"r": self.r, "n": self.n, "k": self.k, "l": self.ell},
                "word": list(word.letters),
                "profiles": [list(p) for p in self.profiles],
                "flags": [[p.to_json() for p in F] for F in self.flags]}

    @classmethod
    def from_json(cls, data: dict) -> "FlagSequencePoint":
        if data.get("format") != "flagseq/1":
            raise FormatError("expected format flagseq/1")
        try:
            prm = data["params"]
            r, n, k, ell = int(prm["r"]), int(prm["n"]), int(prm["k"]), int(prm["l"])
            flags = [[TPluecker.from_json(p) for p in F] for F in data["flags"]]
            profiles = [tuple(int(x) for x in p) for p in data.get("profiles", [])]
        except (KeyError, TypeError) as exc:
            raise FormatError(f"malformed flagseq/1 payload: {exc}") from exc
        return cls(r, n, k, ell, flags, profiles)


def class_membership(M: MatroidV, r: int, n: int, k: int, ell: int) -> bool:
    """Essential, generic rank ``r`` and the two generator bounds."""
    return M.n == n and in_class(M, r, k, ell)


def project_pi(M: MatroidV, r: int, n: int, k: int, ell: int) -> FlagSequencePoint:
    """The flag sequence of ``M`` along the word for ``(r, n, k, ell)``."""
    word = build_word(r, n, k, ell)
    if not class_membership(M, r, n, k, ell):
        raise NotInClass(f"matroid is not in the class (r={r}, n={n}, k={k}, l={ell})")
    flags, profiles = [], []
    for j in range(len(word) + 1):
        prof = t_index_profile(word, j)
        flag = []
        for m, i in zip(range(1, n), prof):
            if i < 0:
                raise InvalidIndex(f"negative index {i} at rank {m} in flag {j}")
            try:
                flag.append(extract_t_vector(M, m, i))
            except AllInfinite as exc:
                raise InvalidIndex(f"rank {m}, index {i} in flag {j}: {exc}") from exc
        flags.append(flag)
        profiles.append(prof)
    return FlagSequencePoint(r, n, k, ell, flags, profiles)


def zero_flag(n: int) -> List[TPluecker]:
    return [TPluecker.constant(n, m, 0) for m in range(1, n)]


def _in_FD(flag: Sequence[TPluecker], n: int) -> AxiomReport:
    padded = [TPluecker.constant(n, 0, 0)] + list(flag) + [TPluecker.constant(n, n, 0)]
    return check_flag(padded)


def check_ZDw(point: FlagSequencePoint, word: Optional[BSWord] = None,
              distinguished: Optional[Sequence[TPluecker]] = None) -> AxiomReport:
    """Membership in the Bott-Samelson Dressian.

    Violations are tagged ``ZD-FD`` (a flag fails the flag relations),
    ``ZD-final`` (the last flag is not the distinguished one) and
    ``ZD-step`` (consecutive flags differ outside the letter's dimension).
    """
    if word is None:
        word = build_word(point.r, point.n, point.k, point.ell)
    n = point.n
    rep = AxiomReport("ZDw")
    if len(point.flags) != len(word) + 1:
        rep.violations.append(Violation("ZD-length", (), (), None,
                                        (len(point.flags), len(word) + 1)))
        return rep
    for j, F in enumerate(point.flags):
        sub = _in_FD(F, n)
        rep.checked += 1
        if not sub.passed:
            rep.violations.append(Violation("ZD-FD", (), (), j, (), sub.violations[0].axiom))
    if distinguished is None:
        distinguished = zero_flag(n)
    rep.checked += 1
    last = point.flags[-1]
    for p, q in zip(last, distinguished):
        if not _projectively_equal(p, q):
            rep.violations.append(Violation("ZD-final", (), (), p.r))
    for j, m in enumerate(word.letters):
        rep.checked += 1
        for p, q in zip(point.flags[j], point.flags[j + 1]):
            if p.r != m and not _projectively_equal(p, q):
                rep.violations.append(Violation("ZD-step", (), (m,), j, (), f"rank {p.r} changed"))
    rep.violations.sort()
    return rep


# -- the cone and the linear space ----------------------------------------------------------------

Point = Dict[Tuple[int, int], ExtVal]


def _elements(A: int) -> Tuple[int, ...]:
    """1-based positions of ``A``, matching subset keys in files."""
    return tuple(e + 1 for e in bits(A))


def table_point(M: MatroidV) -> Point:
    """``{(A, i): t_i(M(A))}`` over every subset and the stored index range."""
    out = {}
    for A in range(1 << M.n):
        for i, v in enumerate(M.t_row(A)):
            out[(A, i)] = v
    return out


def _as_point(point: Union[MatroidV, Point]) -> Tuple[Point, int]:
    if isinstance(point, MatroidV):
        return table_point(point), point.n
    pt = {(int(A), int(i)): ext(v) for (A, i), v in point.items()}
    n = max((A.bit_length() for A, _ in pt), default=0)
    return pt, n


CONE_FAMILIES = ("C-D1'", "C-D1''", "C-D0''")
EXTRA_FAMILIES = ("C-D2", "C-D2''")


def check_cone_C(point: Union[MatroidV, Point], extra: bool = False, n: Optional[int] = None) -> AxiomReport:
    """The inequalities cutting out the cone; ``extra`` adds the two optional families.

    Instances that refer to a missing ``(A, i)`` are skipped.
    """
    pt, n0 = _as_point(point)
    n = n0 if n is None else n
    rep = AxiomReport("cone")
    idx = sorted({i for _, i in pt})

    def ge(name, lhs, rhs, A, wit, i):
        rep.checked += 1
        if None in lhs or None in rhs:
            rep.checked -= 1
            return
        a, b = ext_add(*lhs), ext_add(*rhs)
        if not a >= b:
            rep.violations.append(Violation(name, _elements(A), tuple(x + 1 for x in wit), i, (a, b)))

    g = pt.get
    for A in range(1 << n):
        outside = bits(((1 << n) - 1) ^ A)
        for i in idx:
            ge("C-D0''", (g((A, i)), g((A, i + 2))), (g((A, i + 1)), g((A, i + 1))), A, (), i)
            for b in outside:
                Ab = A | (1 << b)
                ge("C-D1'", (g((Ab, i + 1)), g((A, i))), (g((Ab, i)), g((A, i + 1))), A, (b,), i)
                ge("C-D1''", (g((Ab, i)), g((A, i + 2))), (g((Ab, i + 1)), g((A, i + 1))), A, (b,), i)
            if not extra:
                continue
            for x, b in enumerate(outside):
                for c in outside[x + 1:]:
                    Ab, Ac, Abc = A | (1 << b), A | (1 << c), A | (1 << b) | (1 << c)
                    ge("C-D2", (g((Abc, i)), g((A, i))), (g((Ab, i)), g((Ac, i))), A, (b, c), i)
                    ge("C-D2''", (g((Abc, i)), g((A, i + 2))), (g((Ab, i + 1)), g((Ac, i + 1))),
                       A, (b, c), i)
    rep.violations.sort()
    return rep


@dataclass
class LinearFit:
    report: AxiomReport
    lam: Optional[Dict[int, ExtVal]]
    mu: Optional[Dict[int, ExtVal]]

    @property
    def passed(self) -> bool:
        return self.report.passed


def check_space_L(point: Union[MatroidV, Point], n: Optional[int] = None) -> LinearFit:
    """The classical linear space ``p_{A,i} = lambda_i + mu_{|A|+i}``.

    Checks the two families of equations (equal values on equal-size sets,
    and the four-term relation) plus finiteness, then fits ``lambda`` and
    ``mu`` with ``lambda`` pinned to zero at the smallest index of each
    connected block of unknowns.
    """
    pt, n0 = _as_point(point)
    n = n0 if n is None else n
    rep = AxiomReport("linear")
    for (A, i), v in sorted(pt.items()):
        if v is INF:
            rep.checked += 1
            rep.violations.append(Violation("L-finite", _elements(A), (), i, (v,)))
    if rep.violations:
        return LinearFit(rep, None, None)
    first: Dict[Tuple[int, int], Tuple[int, ExtVal]] = {}
    for (A, i), v in sorted(pt.items()):
        key = (popcount(A), i)
        if key not in first:
            first[key] = (A, v)
            continue
        rep.checked += 1
        if v != first[key][1]:
            rep.violations.append(Violation("L-size", _elements(A), _elements(first[key][0]), i,
                                            (v, first[key][1])))
    g = pt.get
    for (A, i) in sorted(pt):
        outside = bits(((1 << n) - 1) ^ A)
        for x, b in enumerate(outside):
            for c in outside[x + 1:]:
                Ab, Ac, Abc = A | (1 << b), A | (1 << c), A | (1 << b) | (1 << c)
                terms = (g((Abc, i)), g((A, i + 1)), g((Ab, i + 1)), g((Ac, i)))
                if None in terms:
                    continue
                rep.checked += 1
                lhs, rhs = terms[0] + terms[1], terms[2] + terms[3]
                if lhs != rhs:
                    rep.violations.append(Violation("L-four-term", _elements(A), (b + 1, c + 1), i, (lhs, rhs)))
    rep.violations.sort()
    if not rep.passed:
        return LinearFit(rep, None, None)
    # bipartite propagation: an edge lambda_i -- mu_{s+i} carries the value q(s, i)
    adj: Dict[tuple, List[Tuple[tuple, ExtVal]]] = {}
    for (s, i), (_, v) in first.items():
        adj.setdefault(("l", i), []).append((("m", s + i), v))
        adj.setdefault(("m", s + i), []).append((("l", i), v))
    val: Dict[tuple, ExtVal] = {}
    for start in sorted(k for k in adj if k[0] == "l"):
        if start in val:
            continue
        val[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w, v in adj[u]:
                if w not in val:
                    val[w] = v - val[u]
                    queue.append(w)
    lam = {key[1]: x for key, x in val.items() if key[0] == "l"}
    mu = {key[1]: x for key, x in val.items() if key[0] == "m"}
    for (s, i), (A, v) in first.items():
        if lam[i] + mu[s + i] != v:
            rep.violations.append(Violation("L-fit", _elements(A), (), i, (v, lam[i] + mu[s + i])))
    if not rep.passed:
        return LinearFit(rep, None, None)
    return LinearFit(rep, lam, mu)


# -- dimension counts ------------------------------------------------------------------------------

def _clipped_triangle(x: int, cap: int) -> int:
    """``sum_{j=1}^{x} min(j, cap)`` for ``x >= 0``; zero otherwise."""
    if x <= 0 or cap <= 0:
        return 0
    if x <= cap:
        return x * (x + 1) // 2
    return cap * (cap + 1) // 2 + (x - cap) * cap


def D_bound(k: int, ell: int, r: int, n: int) -> int:
    """``k*ell`` minus the two corners of the ``k x ell`` box cut off by ``0 < s < n``.

    When neither corner is clipped by the other side of the box this is
    ``k*ell - C(max(0, ell-r)+1, 2) - C(max(0, k-n+r)+1, 2)``.
    """
    _check_params(r, n, k, ell)
    return k * ell - _clipped_triangle(ell - r, k) - _clipped_triangle(k - n + r, ell)


def D_closed_form(k: int, ell: int, r: int, n: int) -> int:
    """The unclipped binomial expression."""
    return k * ell - comb(max(0, ell - r) + 1, 2) - comb(max(0, k - n + r) + 1, 2)


def free_pairs(k: int, ell: int, r: int, n: int, lower: bool = True) -> List[Tuple[int, int]]:
    """Pairs ``(s, i)`` with ``0 < s < n``, ``0 <= i < ell`` and ``s - r + i < k``.

    With ``lower=True`` also ``s - r + i >= 0``, which holds automatically
    for pairs where ``t_{s,i}`` can be finite.
    """
    out = []
    for s in range(1, n):
        for i in range(ell):
            u = s - r + i
            if u < k and (u >= 0 or not lower):
                out.append((s, i))
    return out


def pair_count(k: int, ell: int, r: int, n: int, lower: bool = True) -> int:
    return len(free_pairs(k, ell, r, n, lower))


# -- fibres ----------------------------------------------------------------------------------------

@dataclass
class FibreReport:
    lambdas: Dict[Tuple[int, int], ExtVal]
    shifted: List[Tuple[int, int]]
    admissible: List[Tuple[int, int]]
    exceptional: List[Tuple[int, int]]
    bound: int
    violations: List[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def free_count(self) -> int:
        return len(self.shifted)

    def to_json(self) -> dict:
        return {"passed": self.passed,
                "lambdas": {f"{s},{i}": fmt(v) for (s, i), v in sorted(self.lambdas.items())},
                "shifted": [list(x) for x in self.shifted],
                "free_count": self.free_count, "bound": self.bound,
                "violations": list(self.violations)}


def _pi_hat_equal(M1: MatroidV, M2: MatroidV, r, n, k, ell) -> bool:
    if M1.modules[0] != M2.modules[0] or M1.modules[M1.full] != M2.modules[M2.full]:
        return False
    a, b = project_pi(M1, r, n, k, ell), project_pi(M2, r, n, k, ell)
    return all(_projectively_equal(p, q) for F, G in zip(a.flags, b.flags) for p, q in zip(F, G))


def fibre_shift_check(M1: MatroidV, M2: MatroidV, r: int, n: int, k: int, ell: int) -> FibreReport:
    """Compare two matroids with the same flags and the same ``M(∅)``, ``M(E)``.

    Computes the constant ``lambda_{s,i}`` with ``t_{s,i}(M2) = t_{s,i}(M1) +
    lambda_{s,i}``, and checks that every nonzero shift sits at an
    exceptional pair of ``M1`` with ``i < ell`` and ``s - r + i < k``, and
    that the number of shifted pairs is within ``D_bound``.
    """
    for M in (M1, M2):
        if not class_membership(M, r, n, k, ell):
            raise NotInClass(f"matroid is not in the class (r={r}, n={n}, k={k}, l={ell})")
    if M1.labels != M2.labels or not _pi_hat_equal(M1, M2, r, n, k, ell):
        raise NotComparable("the two matroids have different flag data")
    K = max(len(M1.t_row(0)), len(M2.t_row(0)))
    violations = []
    lambdas = {}
    for s in range(n + 1):
        masks = subsets_of_size(n, s)
        for i in range(K):
            diffs = set()
            for A in masks:
                a, b = M1.t(A, i), M2.t(A, i)
                if (a is INF) != (b is INF):
                    violations.append(f"support of t_{{{s},{i}}} differs")
                    break
                if a is not INF:
                    diffs.add(b - a)
            if len(diffs) > 1:
                violations.append(f"t_{{{s},{i}}} is not shifted by a constant")
            lambdas[(s, i)] = ext(diffs.pop()) if len(diffs) == 1 else 0
    exc = sorted({(p.s, p.i) for p in exceptional_pairs(M1)})
    admissible = [x for x in exc if x[1] < ell and x[0] - r + x[1] < k]
    shifted = sorted(x for x, v in lambdas.items() if v != 0)
    for x in shifted:
        if x not in admissible:
            violations.append(f"shift at ({x[0]},{x[1]}) outside the admissible exceptional pairs")
    bound = D_bound(k, ell, r, n)
    if len(shifted) > bound:
        violations.append(f"{len(shifted)} shifted pairs exceed the bound {bound}")
    return FibreReport(lambdas, shifted, admissible, exc, bound, violations)
