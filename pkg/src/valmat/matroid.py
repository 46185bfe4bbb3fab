"""Matroids over a valuation ring, stored as a dense table of module classes.

Subsets of the ground set are bitmasks over element positions.  Each
position carries a label (1..n by default) and labels are what appear in
file keys and in violation witnesses.
"""
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import FormatError
from .modclass import (ModuleClass, direct_sum, from_t_sequence,
                       generic_quotient, t_invariant)
from .valgroup import INF, ExtVal

FLAVORS = ("int", "rat")


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


class MatroidV:
    """A total map from subsets of the ground set to module classes.

    Args:
      modules: sequence of length ``2**n``; entry ``mask`` is the class of
        ``M(A)`` where ``A`` is the set of positions set in ``mask``.
      labels: element labels, one per position (default ``1..n``).
      flavor: ``"int"`` for integer valuations, ``"rat"`` for rational ones.
    """

    __slots__ = ("labels", "flavor", "modules", "_ttab", "_depth")

    def __init__(self, modules: Sequence[ModuleClass], labels: Optional[Sequence[int]] = None,
                 flavor: str = "int"):
        modules = tuple(m if isinstance(m, ModuleClass) else ModuleClass(m) for m in modules)
        size = len(modules)
        n = size.bit_length() - 1
        if size == 0 or (1 << n) != size:
            raise FormatError(f"module table has {size} entries, not a power of two")
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(int(x) for x in labels)
        if len(labels) != n or len(set(labels)) != n:
            raise FormatError("labels must be distinct, one per element")
        if flavor not in FLAVORS:
            raise FormatError(f"unknown flavor {flavor!r}")
        self.labels = labels
        self.flavor = flavor
        self.modules = modules
        self._ttab = None
        self._depth = max(len(m) for m in modules)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def from_sets(cls, table: Dict, n: Optional[int] = None, labels=None, flavor="int"):
        """Build from a dict keyed by iterables of labels."""
        if labels is None:
            if n is None:
                seen = set()
                for k in table:
                    seen.update(k)
                n = max(seen, default=0)
            labels = tuple(range(1, n + 1))
        pos = {lab: i for i, lab in enumerate(labels)}
        mods = [None] * (1 << len(labels))
        for key, val in table.items():
            mask = 0
            for lab in key:
                mask |= 1 << pos[lab]
            mods[mask] = val if isinstance(val, ModuleClass) else ModuleClass(val)
        missing = [i for i, m in enumerate(mods) if m is None]
        if missing:
            raise FormatError(f"module table is missing {len(missing)} subsets")
        return cls(mods, labels, flavor)

    @classmethod
    def zero(cls, n: int, flavor="int") -> "MatroidV":
        return cls([ModuleClass()] * (1 << n), flavor=flavor)

    # -- basic accessors ---------------------------------------------------------
    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def generic_rank(self) -> int:
        return self.modules[0].free_rank

    @property
    def depth(self) -> int:
        """Largest summand count over all subsets."""
        return self._depth

    @property
    def stab_bound(self) -> int:
        """Indices above this make every statement about ``t_i`` trivial."""
        return self._depth + 2

    def mask(self, A) -> int:
        if isinstance(A, int):
            return A
        pos = {lab: i for i, lab in enumerate(self.labels)}
        m = 0
        for lab in A:
            if lab not in pos:
                raise KeyError(f"{lab} is not a ground set label")
            m |= 1 << pos[lab]
        return m

    def set_of(self, mask: int) -> Tuple[int, ...]:
        return tuple(self.labels[i] for i in bits(mask))

    def module(self, A) -> ModuleClass:
        return self.modules[self.mask(A)]

    def t_row(self, mask: int) -> Tuple[ExtVal, ...]:
        """``(t_0, ..., t_K)`` of ``M(A)`` padded with zeros up to ``K = stab_bound + 2``."""
        return self.t_table()[mask]

    def t_table(self):
        if self._ttab is None:
            K = self.stab_bound + 2
            self._ttab = tuple(tuple(t_invariant(m, i) for i in range(K + 1)) for m in self.modules)
        return self._ttab

    def t(self, A, i: int) -> ExtVal:
        mask = self.mask(A)
        row = self.t_table()[mask]
        return row[i] if i < len(row) else 0

    def __eq__(self, other):
        if not isinstance(other, MatroidV):
            return NotImplemented
        return self.labels == other.labels and self.modules == other.modules

    def __hash__(self):
        return hash((self.labels, self.modules))

    def __repr__(self):
        parts = []
        for mask, m in enumerate(self.modules):
            key = ",".join(str(x) for x in self.set_of(mask))
            parts.append(f"{{{key}}}:{list(m.to_json())}")
        return "MatroidV(" + " ".join(parts) + ")"

    def relabel(self, labels: Sequence[int]) -> "MatroidV":
        return MatroidV(self.modules, labels, self.flavor)


def t(M: MatroidV, A, i: int) -> ExtVal:
    """``t_i(M(A))``."""
    return M.t(A, i)


# -- operations ----------------------------------------------------------------

def dual(M: MatroidV) -> MatroidV:
    """Dual matroid via ``t_j(M*(B)) = t_{j+r-n+|B|}(M(E\\B))``.

    A negative source index means the value is infinite.  On essential
    matroids this is an involution; free summands of ``M(E)`` are lost.
    """
    n, r = M.n, M.generic_rank
    full = M.full
    mods = []
    for B in range(1 << n):
        src = M.modules[full ^ B]
        shift = r - n + popcount(B)
        if shift >= 0:
            mods.append(ModuleClass(src.lengths[shift:]))
        else:
            mods.append(ModuleClass((INF,) * (-shift) + src.lengths))
    return MatroidV(mods, M.labels, M.flavor)


def _position(M: MatroidV, a) -> int:
    try:
        return M.labels.index(a)
    except ValueError:
        raise KeyError(f"{a} is not a ground set label") from None


def _drop_bit(mask: int, p: int) -> int:
    low = mask & ((1 << p) - 1)
    high = mask >> (p + 1)
    return low | (high << p)


def delete(M: MatroidV, a) -> MatroidV:
    """Restriction to the complement of ``a``; labels are kept."""
    p = _position(M, a)
    mods = [M.modules[m] for m in range(1 << M.n) if not (m >> p) & 1]
    labels = M.labels[:p] + M.labels[p + 1:]
    return MatroidV(mods, labels, M.flavor)


def contract(M: MatroidV, a) -> MatroidV:
    """``A -> M(A + a)`` on the complement of ``a``."""
    p = _position(M, a)
    mods = [M.modules[m | (1 << p)] for m in range(1 << M.n) if not (m >> p) & 1]
    labels = M.labels[:p] + M.labels[p + 1:]
    return MatroidV(mods, labels, M.flavor)


def direct_sum_matroid(M1: MatroidV, M2: MatroidV) -> MatroidV:
    """Direct sum on the disjoint union; clashing labels of ``M2`` are shifted."""
    labels2 = M2.labels
    if set(labels2) & set(M1.labels):
        off = max(M1.labels)
        labels2 = tuple(x + off for x in labels2)
    n1 = M1.n
    mods = []
    for mask in range(1 << (n1 + M2.n)):
        lo = mask & ((1 << n1) - 1)
        hi = mask >> n1
        mods.append(direct_sum(M1.modules[lo], M2.modules[hi]))
    flavor = "rat" if "rat" in (M1.flavor, M2.flavor) else "int"
    return MatroidV(mods, M1.labels + labels2, flavor)


def _new_label(M: MatroidV) -> int:
    return max(M.labels, default=0) + 1


def generic_extension(M: MatroidV) -> MatroidV:
    """Add a generic element ``g`` (new last position)."""
    mods = list(M.modules) + [generic_quotient(m) for m in M.modules]
    return MatroidV(mods, M.labels + (_new_label(M),), M.flavor)


def add_loop(M: MatroidV) -> MatroidV:
    """Direct sum with the one-element matroid whose modules are zero."""
    mods = list(M.modules) + list(M.modules)
    return MatroidV(mods, M.labels + (_new_label(M),), M.flavor)


def is_spannable(M: MatroidV) -> bool:
    return M.modules[M.full].is_zero()


def is_cospannable(M: MatroidV) -> bool:
    return M.modules[0].torsion_count == 0


def is_bispannable(M: MatroidV) -> bool:
    return is_spannable(M) and is_cospannable(M)


def is_essential(M: MatroidV) -> bool:
    return M.modules[M.full].free_rank == 0


def from_t_table(rows: Sequence[Sequence[ExtVal]], labels=None, flavor="int") -> MatroidV:
    """Build a matroid from per-subset t-sequences (each ending at zero)."""
    return MatroidV([from_t_sequence(r) for r in rows], labels, flavor)
