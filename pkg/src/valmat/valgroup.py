"""Extended rational values: exact rationals together with an absorbing infinity.

Finite values are Python ``int`` when integral and reduced ``Fraction``
otherwise, so the common integer case stays cheap.  Infinity is the singleton
``INF``.  Addition with ``INF`` gives ``INF``, ``INF - x`` is ``INF`` for every
``x`` (including ``INF``), and a finite value minus ``INF`` raises.
"""
from fractions import Fraction
from typing import Iterable, Union

from .errors import EmptyList, FiniteMinusInfinity, FormatError


class _Infinity:
    __slots__ = ()
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (_Infinity, ())

    def __hash__(self):
        return hash("valmat-infinity")

    def __eq__(self, other):
        return other is self

    def __ne__(self, other):
        return other is not self

    def __lt__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return other is self
        return NotImplemented

    def __gt__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return other is not self
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return True
        return NotImplemented

    def __add__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return self
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, _Infinity)):
            return self
        return NotImplemented

    def __rsub__(self, other):
        raise FiniteMinusInfinity(f"{other} - inf")


INF = _Infinity()

ExtVal = Union[int, Fraction, _Infinity]


def is_inf(x) -> bool:
    return x is INF


def normalize(x) -> ExtVal:
    """Canonical finite form: integral fractions become ints."""
    if x is INF:
        return INF
    if isinstance(x, bool):
        raise FormatError(f"not a value: {x!r}")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    raise FormatError(f"not a value: {x!r}")


def ext(x) -> ExtVal:
    """Parse a value from an int, Fraction, ``"a/b"`` string or ``"inf"``."""
    if x is INF:
        return INF
    if isinstance(x, str):
        s = x.strip()
        if s in ("inf", "Infinity", "∞"):
            return INF
        try:
            return normalize(Fraction(s))
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"bad value token {x!r}") from exc
    if isinstance(x, float):
        raise FormatError("floating point values are not accepted")
    return normalize(x)


def ext_add(a: ExtVal, b: ExtVal) -> ExtVal:
    if a is INF or b is INF:
        return INF
    return normalize(a + b)


def ext_sub(a: ExtVal, b: ExtVal) -> ExtVal:
    if a is INF:
        return INF
    if b is INF:
        raise FiniteMinusInfinity(f"{a} - inf")
    return normalize(a - b)


def ext_sum(vals: Iterable[ExtVal]) -> ExtVal:
    total = 0
    for v in vals:
        if v is INF:
            return INF
        total += v
    return normalize(total)


def min_attained_twice(vals) -> bool:
    """True when the minimum occurs at least twice; an all-infinite list counts."""
    vals = list(vals)
    if not vals:
        raise EmptyList("min_attained_twice of an empty list")
    m = min(vals)
    return sum(1 for v in vals if v == m) >= 2


def fmt(x: ExtVal):
    """JSON form of a value: int, ``"a/b"`` or ``"inf"``."""
    if x is INF:
        return "inf"
    x = normalize(x)
    if isinstance(x, int):
        return x
    return f"{x.numerator}/{x.denominator}"


def fmt_str(x: ExtVal) -> str:
    return str(fmt(x))
