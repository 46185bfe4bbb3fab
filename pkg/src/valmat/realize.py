"""Matroids realised by matrices over a localisation of the integers or over Puiseux polynomials.

A presentation lists the relations of ``M(empty) = R^m / <relations>`` and a
column ``x_e`` for every element.  ``M(A)`` is the quotient by the columns in
``A`` and its summand lengths come from the valuations of the minors of the
combined matrix: if ``mu_k`` is the least valuation of a ``k x k`` minor then
the torsion lengths are the successive differences ``mu_k - mu_{k-1}``.
"""
import random
from math import gcd
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import FormatError
from .matroid import MatroidV, bits
from .modclass import ModuleClass
from .valgroup import INF, ExtVal, normalize


# -- Puiseux polynomials ----------------------------------------------------------

class PuiseuxPoly:
    """A finite sum ``c_1 t^{q_1} + ... `` with rational coefficients and exponents ``q >= 0``."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        acc: Dict[Fraction, Fraction] = {}
        for c, q in terms:
            c, q = Fraction(c), Fraction(q)
            if q < 0:
                raise FormatError("Puiseux exponents must be nonnegative")
            acc[q] = acc.get(q, 0) + c
        self.terms: Tuple[Tuple[Fraction, Fraction], ...] = tuple(
            (acc[q], q) for q in sorted(acc) if acc[q] != 0)

    @classmethod
    def const(cls, c) -> "PuiseuxPoly":
        return cls([(c, 0)])

    @classmethod
    def monomial(cls, c, q) -> "PuiseuxPoly":
        return cls([(c, q)])

    def __add__(self, other):
        other = _pp(other)
        return PuiseuxPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self):
        return PuiseuxPoly((-c, q) for c, q in self.terms)

    def __sub__(self, other):
        return self + (-_pp(other))

    def __rsub__(self, other):
        return _pp(other) - self

    def __mul__(self, other):
        other = _pp(other)
        return PuiseuxPoly((c1 * c2, q1 + q2) for c1, q1 in self.terms for c2, q2 in other.terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = PuiseuxPoly.const(other)
        if not isinstance(other, PuiseuxPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def val(self) -> ExtVal:
        return normalize(self.terms[0][1]) if self.terms else INF

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{q}" for c, q in self.terms)

    def to_json(self) -> list:
        return [{"c": _qstr(c), "q": _qstr(q)} for c, q in self.terms]

    @classmethod
    def from_json(cls, data) -> "PuiseuxPoly":
        if isinstance(data, (int, str)):
            return cls.const(Fraction(data))
        try:
            return cls((Fraction(str(t["c"])), Fraction(str(t["q"]))) for t in data)
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad Puiseux entry {data!r}") from exc


def _pp(x) -> PuiseuxPoly:
    if isinstance(x, PuiseuxPoly):
        return x
    return PuiseuxPoly.const(x)


def _qstr(q: Fraction):
    q = Fraction(q)
    return q.numerator if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def pp_add(a, b) -> PuiseuxPoly:
    return _pp(a) + _pp(b)


def pp_mul(a, b) -> PuiseuxPoly:
    return _pp(a) * _pp(b)


def pp_val(a) -> ExtVal:
    return _pp(a).val()


# -- rings ------------------------------------------------------------------------------

def vp(x: Fraction, p: int) -> ExtVal:
    """p-adic valuation of a rational."""
    x = Fraction(x)
    if x == 0:
        return INF
    v = 0
    num, den = x.numerator, x.denominator
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


@dataclass(frozen=True)
class Ring:
    kind: str
    p: Optional[int] = None

    def val(self, x) -> ExtVal:
        if self.kind == "p-local":
            return vp(x, self.p)
        return pp_val(x)

    def zero(self):
        return Fraction(0) if self.kind == "p-local" else PuiseuxPoly()

    def parse(self, token):
        if self.kind == "p-local":
            try:
                x = Fraction(str(token)) if not isinstance(token, int) else Fraction(token)
            except (ValueError, ZeroDivisionError) as exc:
                raise FormatError(f"bad entry {token!r}") from exc
            if x.denominator % self.p == 0:
                raise FormatError(f"entry {token} has {self.p} in its denominator")
            return x
        return PuiseuxPoly.from_json(token)

    def dump(self, x):
        if self.kind == "p-local":
            return _qstr(x)
        return x.to_json()

    def to_json(self) -> dict:
        if self.kind == "p-local":
            return {"kind": "p-local", "p": self.p}
        return {"kind": "puiseux-poly"}


def p_local(p: int) -> Ring:
    return Ring("p-local", p)


PUISEUX = Ring("puiseux-poly")


@dataclass
class ValuedMatrix:
    """Presentation of a realisable matroid.

    Attributes:
      ring: the coefficient ring.
      rows: the number ``m`` of generators of ``M(empty)`` before relations.
      relations: columns generating the relation submodule.
      elements: one column per element, in label order.
      labels: element labels (default ``1..n``).
    """
    ring: Ring
    rows: int
    relations: List[list] = field(default_factory=list)
    elements: List[list] = field(default_factory=list)
    labels: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        conv = self._conv
        self.relations = [[conv(x) for x in col] for col in self.relations]
        self.elements = [[conv(x) for x in col] for col in self.elements]
        for col in self.relations + self.elements:
            if len(col) != self.rows:
                raise FormatError("every column must have one entry per row")
            for x in col:
                v = self.ring.val(x)
                if v is not INF and v < 0:
                    raise FormatError(f"entry {x} has negative valuation")
        if self.labels is None:
            self.labels = tuple(range(1, len(self.elements) + 1))
        self.labels = tuple(self.labels)

    def _conv(self, x):
        if self.ring.kind == "p-local":
            if isinstance(x, Fraction):
                if x.denominator % self.ring.p == 0:
                    raise FormatError(f"entry {x} has {self.ring.p} in its denominator")
                return x
            return self.ring.parse(x)
        if isinstance(x, PuiseuxPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return PuiseuxPoly.const(x)
        return PuiseuxPoly.from_json(x)

    @property
    def n(self) -> int:
        return len(self.elements)

    def columns(self, mask: int) -> list:
        return list(self.relations) + [self.elements[i] for i in bits(mask)]

    def drop_element(self, index: int) -> "ValuedMatrix":
        els = self.elements[:index] + self.elements[index + 1:]
        labs = self.labels[:index] + self.labels[index + 1:]
        return ValuedMatrix(self.ring, self.rows, list(self.relations), els, labs)

    def contract_element(self, index: int) -> "ValuedMatrix":
        els = self.elements[:index] + self.elements[index + 1:]
        labs = self.labels[:index] + self.labels[index + 1:]
        return ValuedMatrix(self.ring, self.rows, list(self.relations) + [self.elements[index]], els, labs)


# -- determinants -------------------------------------------------------------------------

def det_fraction(M: List[List[Fraction]]) -> Fraction:
    """Bareiss fraction-free elimination (exact over the rationals)."""
    k = len(M)
    if k == 0:
        return Fraction(1)
    A = [list(map(Fraction, row)) for row in M]
    sign = 1
    prev = Fraction(1)
    for c in range(k - 1):
        if A[c][c] == 0:
            for r in range(c + 1, k):
                if A[r][c] != 0:
                    A[c], A[r] = A[r], A[c]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for r in range(c + 1, k):
            for j in range(c + 1, k):
                A[r][j] = (A[r][j] * A[c][c] - A[r][c] * A[c][j]) / prev
        prev = A[c][c]
    return sign * A[k - 1][k - 1]


def det_generic(M: list):
    """Laplace expansion along the first row; fine for the small sizes used here."""
    k = len(M)
    if k == 0:
        return PuiseuxPoly.const(1)
    if k == 1:
        return M[0][0]
    total = None
    for j in range(k):
        if isinstance(M[0][j], PuiseuxPoly) and M[0][j].is_zero():
            continue
        sub = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det_generic(sub)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else PuiseuxPoly()


def minor_valuations(X: ValuedMatrix, A) -> List[ExtVal]:
    """``mu_0, ..., mu_m``: least valuation of a ``k x k`` minor of ``[relations | x_A]``."""
    mask = A if isinstance(A, int) else _mask(X, A)
    cols = X.columns(mask)
    m = X.rows
    ring = X.ring
    mus: List[ExtVal] = [0]
    for k in range(1, m + 1):
        if k > len(cols):
            mus.append(INF)
            continue
        best = INF
        for rsel in combinations(range(m), k):
            for csel in combinations(range(len(cols)), k):
                sub = [[cols[c][r] for c in csel] for r in rsel]
                d = det_fraction(sub) if ring.kind == "p-local" else det_generic(sub)
                v = ring.val(d)
                if v is not INF and (best is INF or v < best):
                    best = v
                    if best == mus[-1]:
                        break
            if best is not INF and best == mus[-1]:
                break
        mus.append(best)
    return mus


def _mask(X: ValuedMatrix, A) -> int:
    pos = {lab: i for i, lab in enumerate(X.labels)}
    m = 0
    for lab in A:
        m |= 1 << pos[lab]
    return m


def module_from_mus(mus: Sequence[ExtVal], m: int) -> ModuleClass:
    rho = max(k for k, v in enumerate(mus) if v is not INF)
    lengths = [INF] * (m - rho)
    for k in range(1, rho + 1):
        d = mus[k] - mus[k - 1]
        if d:
            lengths.append(d)
    return ModuleClass(lengths)


def realize(X: ValuedMatrix) -> MatroidV:
    mods = [module_from_mus(minor_valuations(X, mask), X.rows) for mask in range(1 << X.n)]
    flavor = "int" if X.ring.kind == "p-local" else "rat"
    return MatroidV(mods, X.labels, flavor)


def _prime_factors(x: int) -> set:
    x = abs(x)
    out = set()
    d = 2
    while d * d <= x:
        while x % d == 0:
            out.add(d)
            x //= d
        d += 1
    if x > 1:
        out.add(x)
    return out


def realize_multi(rows: int, elements: Sequence[Sequence], primes: Sequence[int],
                  relations: Sequence[Sequence] = ()) -> Tuple[Dict[int, MatroidV], List[int]]:
    """Realise one rational matrix at several primes.

    Returns the per-prime matroids and the sorted list of all primes at
    which some ``M(A)`` has torsion.  Only numerators of minors are scanned,
    so primes occurring in denominators are not reported.
    """
    out = {}
    for p in primes:
        out[p] = realize(ValuedMatrix(p_local(p), rows, [list(c) for c in relations],
                                      [list(c) for c in elements]))
    # torsion of M(A) at p means p divides every nonzero minor of maximal size
    relevant = set()
    for mask in range(1 << len(elements)):
        cols = [list(map(Fraction, c)) for c in relations] + \
            [list(map(Fraction, elements[i])) for i in bits(mask)]
        for k in range(min(rows, len(cols)), 0, -1):
            g = 0
            for rsel in combinations(range(rows), k):
                for csel in combinations(range(len(cols)), k):
                    d = det_fraction([[cols[c][r] for c in csel] for r in rsel])
                    if d != 0:
                        g = gcd(g, d.numerator)
            if g:
                relevant |= _prime_factors(g)
                break
    return out, sorted(relevant)


def random_realizable(m: int, n: int, seed: int, ring: Optional[Ring] = None, max_val: int = 2,
                      n_relations: int = 0, zero_prob: float = 0.2) -> ValuedMatrix:
    """Deterministic pseudo-random presentation for property tests."""
    rng = random.Random(seed)
    ring = ring or p_local(2)

    def entry():
        if rng.random() < zero_prob:
            return 0
        if ring.kind == "p-local":
            p = ring.p
            u = rng.choice([u for u in range(-4, 5) if u % p != 0])
            return Fraction(u * p ** rng.randint(0, max_val))
        nterms = rng.randint(1, 2)
        terms = []
        for _ in range(nterms):
            q = Fraction(rng.randint(0, 2 * max_val), rng.choice([1, 2, 3]))
            terms.append((rng.choice([-2, -1, 1, 2, 3]), q))
        return PuiseuxPoly(terms)

    rels = [[entry() for _ in range(m)] for _ in range(n_relations)]
    els = [[entry() for _ in range(m)] for _ in range(n)]
    return ValuedMatrix(ring, m, rels, els)
