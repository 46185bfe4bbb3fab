"""Isomorphism classes of finitely presented modules over a valuation ring.

A class is stored as the nonincreasing list of its cyclic summand lengths,
with ``INF`` standing for a free summand.  The invariants ``t_i``, ``d_l`` and
``d_{<=l}`` are derived from that list.
"""
from itertools import product
from typing import Iterable, Sequence, Tuple

from .errors import NotValidTSequence, SizeBound
from .valgroup import INF, ExtVal, ext, ext_sub, fmt, normalize


class ModuleClass:
    """Sorted tuple of summand lengths, ``INF`` entries first, no zeros."""

    __slots__ = ("lengths", "_hash")

    def __init__(self, lengths: Iterable = ()):
        vals = []
        for x in lengths:
            v = ext(x)
            if v is not INF and v < 0:
                raise ValueError(f"negative summand length {v}")
            if v != 0:
                vals.append(v)
        vals.sort(reverse=True)
        self.lengths: Tuple[ExtVal, ...] = tuple(vals)
        self._hash = hash(self.lengths)

    @classmethod
    def zero(cls) -> "ModuleClass":
        return _ZERO

    @classmethod
    def free(cls, rank: int) -> "ModuleClass":
        return cls([INF] * rank)

    def __eq__(self, other):
        if not isinstance(other, ModuleClass):
            return NotImplemented
        return self.lengths == other.lengths

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return "ModuleClass([" + ", ".join(str(fmt(x)) for x in self.lengths) + "])"

    def __len__(self):
        return len(self.lengths)

    @property
    def free_rank(self) -> int:
        return sum(1 for x in self.lengths if x is INF)

    @property
    def torsion_count(self) -> int:
        return len(self.lengths) - self.free_rank

    @property
    def summand_count(self) -> int:
        return len(self.lengths)

    def is_zero(self) -> bool:
        return not self.lengths

    def to_json(self) -> list:
        return [fmt(x) for x in self.lengths]


_ZERO = ModuleClass()


def t_invariant(N: ModuleClass, i: int) -> ExtVal:
    """Length left after killing the ``i`` largest summands."""
    if i < 0:
        raise ValueError("index must be nonnegative")
    rest = N.lengths[i:]
    if rest and rest[0] is INF:
        return INF
    return normalize(sum(rest))


def t_sequence(N: ModuleClass) -> Tuple[ExtVal, ...]:
    """``(t_0, ..., t_s)`` ending at the first zero."""
    return tuple(t_invariant(N, i) for i in range(len(N.lengths) + 1))


def from_t_sequence(t: Sequence) -> ModuleClass:
    """Inverse of :func:`t_sequence`; trailing zeros may be omitted or repeated."""
    vals = [ext(x) for x in t]
    if not vals or vals[-1] != 0:
        vals.append(0)
    lengths = []
    prev = None
    for a, b in zip(vals, vals[1:]):
        try:
            d = ext_sub(a, b)
        except ArithmeticError as exc:
            raise NotValidTSequence(f"t-sequence increases to infinity: {vals}") from exc
        if d is not INF and d < 0:
            raise NotValidTSequence(f"t-sequence is not nonincreasing: {vals}")
        if prev is not None and d > prev:
            raise NotValidTSequence(f"differences of {vals} are not nonincreasing")
        prev = d
        lengths.append(d)
    return ModuleClass(lengths)


def d_invariant(N: ModuleClass, ell: ExtVal) -> int:
    """Number of summands of length at least ``ell``."""
    ell = ext(ell)
    if ell is INF or ell <= 0:
        raise ValueError("threshold must be finite and positive")
    return sum(1 for x in N.lengths if x >= ell)


def d_leq(N: ModuleClass, ell: ExtVal) -> ExtVal:
    """Length of ``N / I_ell N``, that is the sum of ``min(length, ell)``."""
    ell = ext(ell)
    if ell is INF or ell <= 0:
        raise ValueError("threshold must be finite and positive")
    return normalize(sum(ell if x is INF or x > ell else x for x in N.lengths))


def generic_quotient(N: ModuleClass) -> ModuleClass:
    """Quotient by a generic element: drop the largest summand."""
    return ModuleClass(N.lengths[1:])


def direct_sum(N: ModuleClass, Np: ModuleClass) -> ModuleClass:
    return ModuleClass(N.lengths + Np.lengths)


def oracle_t_finite(p: int, exponents: Sequence[int], i: int, bound: int = 2 ** 20) -> ExtVal:
    """Brute-force ``t_i`` of the finite group ``sum Z/p^e``.

    Builds every subgroup generated by at most ``i`` elements, level by level,
    and returns the smallest ``log_p`` of the index of such a subgroup.  This is
    deliberately independent of the summand-length formula.
    """
    exps = [e for e in exponents if e > 0]
    if not exps:
        return 0
    moduli = [p ** e for e in exps]
    size = 1
    for q in moduli:
        size *= q
    if size > bound:
        raise SizeBound(f"group of order {size} exceeds bound {bound}")
    elements = list(product(*[range(q) for q in moduli]))
    zero = tuple(0 for _ in moduli)

    def span_with(H: frozenset, x) -> frozenset:
        out = set(H)
        frontier = list(H)
        # H + <x>: add multiples of x to every element until closure
        cur = x
        multiples = [zero]
        while cur != zero:
            multiples.append(cur)
            cur = tuple((a + b) % q for a, b, q in zip(cur, x, moduli))
        for h in frontier:
            for m in multiples:
                out.add(tuple((a + b) % q for a, b, q in zip(h, m, moduli)))
        return frozenset(out)

    # A subgroup contained in another one of the same level can only lead to
    # smaller sums later, so each level keeps its inclusion-maximal members.
    level = [frozenset([zero])]
    best = 1
    for _ in range(i):
        found = []
        for H in level:
            for x in elements:
                if x in H or any(x in K and H <= K for K in found):
                    continue
                found.append(span_with(H, x))
        if not found:
            break
        found = list(set(found))
        found.sort(key=len, reverse=True)
        maximal = []
        for K in found:
            if not any(K <= L for L in maximal):
                maximal.append(K)
        level = maximal
        best = max(best, len(level[0]))
    index = size // best
    length = 0
    while index > 1:
        index //= p
        length += 1
    return length
