"""The lifted polyhedron ``P(M)`` of a matroid over a valuation ring, and its converse.

Coordinates are ``(x_1, ..., x_n, i, y)``: an indicator vector of a subset,
the index of a t-invariant and its value.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..axioms import verify_t_axioms
from ..errors import ConditionFailed, IncompatibleLocals, NotAMatroid, NotSpannable, NotValidTSequence
from ..matroid import MatroidV, bits, from_t_table, is_spannable
from ..modclass import d_invariant, d_leq
from ..valgroup import INF, normalize
from .lp import lp_feasible
from .polyhedron import QPolyhedron, minkowski_sum
from .subdivision import ClassicalMatroid, corank_subdivision_formula, regular_subdivision


def _e(A: int, n: int) -> List[int]:
    return [(A >> k) & 1 for k in range(n)]


def _unit(k: int, dim: int) -> List[int]:
    return [1 if j == k else 0 for j in range(dim)]


def generator_points(M: MatroidV, extra: int = 1) -> List[List]:
    """Points ``(e_A, i, t_i(A))`` for ``i`` up to the stabilisation bound plus ``extra``."""
    n = M.n
    T = M.t_table()
    top = M.stab_bound + extra
    pts = []
    for A in range(1 << n):
        row = T[A]
        for i in range(top + 1):
            v = row[i] if i < len(row) else 0
            if v is not INF:
                pts.append(_e(A, n) + [i, v])
    return pts


def build_P(M: MatroidV, check: bool = True) -> QPolyhedron:
    """``conv{(e_A, i, t_i(A))} + cone{(0,1,0), (0,0,1)}`` with minimal generators."""
    if check:
        rep = verify_t_axioms(M, first_only=True)
        if not rep.passed:
            raise NotAMatroid(str(rep.violations[0]))
    dim = M.n + 2
    return QPolyhedron.from_generators(dim, generator_points(M), [_unit(M.n, dim), _unit(M.n + 1, dim)])


def t_from_P(P: QPolyhedron, n: int, A: int, i: int):
    """``min{y : (e_A, i, y) in P}``."""
    return P.min_last(_e(A, n) + [i])


# -- multi-prime variant ---------------------------------------------------------------

@dataclass
class MatroidOverZ:
    """A family of local matroids ``M_p`` sharing one generic matroid."""
    n: int
    primes: Tuple[int, ...]
    locals: Dict[int, MatroidV] = field(default_factory=dict)

    def __post_init__(self):
        self.primes = tuple(self.primes)
        if set(self.primes) != set(self.locals):
            raise IncompatibleLocals("every declared prime needs a local matroid")
        for p in self.primes:
            if self.locals[p].n != self.n:
                raise IncompatibleLocals(f"local matroid at {p} has the wrong ground set size")
        for A in range(1 << self.n):
            ranks = {self.locals[p].modules[A].free_rank for p in self.primes}
            if len(ranks) > 1:
                raise IncompatibleLocals(f"free ranks differ across primes at subset mask {A}")

    @classmethod
    def from_vectors(cls, rows: int, elements: Sequence[Sequence], primes: Sequence[int]):
        from ..realize import realize_multi
        locs, _ = realize_multi(rows, elements, primes)
        return cls(len(elements), tuple(primes), locs)


def build_P_multi(MZ: MatroidOverZ) -> QPolyhedron:
    """Generators ``(e_A, i, (t_i(M_p(A)))_p)`` with rays ``(0,1,0)`` and ``(0,0,e_p)``."""
    n, k = MZ.n, len(MZ.primes)
    dim = n + 1 + k
    tables = [MZ.locals[p].t_table() for p in MZ.primes]
    top = max(MZ.locals[p].stab_bound for p in MZ.primes) + 1
    pts = []
    for A in range(1 << n):
        for i in range(top + 1):
            vals = [T[A][i] if i < len(T[A]) else 0 for T in tables]
            if any(v is INF for v in vals):
                continue
            pts.append(_e(A, n) + [i] + vals)
    rays = [_unit(n, dim)] + [_unit(n + 1 + j, dim) for j in range(k)]
    return QPolyhedron.from_generators(dim, pts, rays)


def project_prime(P: QPolyhedron, n: int, index: int) -> QPolyhedron:
    """Keep the ``x``, ``i`` and the ``index``-th value coordinate."""
    return P.project(list(range(n + 1)) + [n + 1 + index])


# -- edge directions --------------------------------------------------------------------

def allowed_direction(d: Sequence) -> bool:
    """Is ``d`` parallel to ``e - e'`` for ``e, e'`` in ``{(e_a, 0)} ∪ {(0, 0), (0, 1)}``?"""
    nz = [x for x in d if x != 0]
    if len(nz) <= 1:
        return True
    return len(nz) == 2 and nz[0] == -nz[1]


def check_edge_directions(P: QPolyhedron, n: int, method: str = "dd") -> List[Tuple]:
    """Bounded edges whose projection to ``(x, i)`` has a disallowed direction."""
    bad = []
    bounded, _ = P.edges(method)
    for v, w in bounded:
        d = tuple(Fraction(a) - b for a, b in zip(w[:n + 1], v[:n + 1]))
        if not allowed_direction(d):
            bad.append((v, w, tuple(normalize(x) for x in d)))
    return bad


# -- converse construction ------------------------------------------------------------------------

def _in_value_group(y, flavor: str) -> bool:
    if y is INF:
        return True
    y = Fraction(y)
    if y < 0:
        return False
    return flavor == "rat" or y.denominator == 1


def matroid_from_polyhedron(P: QPolyhedron, n: int, flavor: str = "int",
                            check_roundtrip: bool = True) -> MatroidV:
    """Recover ``M`` with ``P(M) = P`` after checking the five recognising conditions.

    Conditions are tested in the order i, iii, ii, iv, v; ``ConditionFailed``
    names the first one that fails, or ``"roundtrip"`` if the extracted table
    does not reproduce ``P``.
    """
    dim = n + 2
    if P.dim != dim:
        raise ConditionFailed("i", f"ambient dimension {P.dim}, expected {dim}")
    if P.is_empty():
        raise ConditionFailed("i", "empty polyhedron")
    want = sorted([tuple(_unit(n, dim)), tuple(_unit(n + 1, dim))])
    if sorted(P.rays) != want:
        raise ConditionFailed("i", f"recession rays {list(P.rays)}")
    # (iii) lattice vertices
    for v in P.vertices:
        x, i, y = v[:n], v[n], v[n + 1]
        if any(c not in (0, 1) for c in x) or Fraction(i).denominator != 1 or i < 0 \
                or not _in_value_group(y, flavor):
            raise ConditionFailed("iii", f"vertex {v}")
    top = max(int(v[n]) for v in P.vertices)
    # (ii) the fibre over every cube vertex reaches height zero from index top on
    for A in range(1 << n):
        y = P.min_last(_e(A, n) + [top])
        if y is INF or y > 0:
            raise ConditionFailed("ii", f"min over (e_A, {top}) for mask {A} is {y}")
    # (iv) minima over lattice fibres lie in the value group
    rows = []
    for A in range(1 << n):
        row = []
        for i in range(top + 1):
            y = P.min_last(_e(A, n) + [i])
            if not _in_value_group(y, flavor):
                raise ConditionFailed("iv", f"min over (e_A, {i}) for mask {A} is {y}")
            row.append(y)
        row.append(0)
        rows.append(row)
    # (v) edge directions
    bad = check_edge_directions(P, n)
    if bad:
        v, w, d = bad[0]
        raise ConditionFailed("v", f"edge {v} -- {w} has direction {d}")
    try:
        M = from_t_table(rows, flavor=flavor)
    except NotValidTSequence as exc:
        raise ConditionFailed("roundtrip", str(exc)) from exc
    if check_roundtrip and build_P(M, check=False) != P:
        raise ConditionFailed("roundtrip", "the extracted table does not reproduce the polyhedron")
    return M


# -- operations on polyhedra ------------------------------------------------------------------------

def poly_delete(P: QPolyhedron, a: int) -> QPolyhedron:
    """Slice at ``x_a = 0`` and omit the coordinate (``a`` is a 0-based position)."""
    S = P.slice(a, 0)
    return S.project([c for c in range(P.dim) if c != a])


def poly_contract(P: QPolyhedron, a: int) -> QPolyhedron:
    S = P.slice(a, 1)
    return S.project([c for c in range(P.dim) if c != a])


def poly_dual(P: QPolyhedron, n: int, r: int) -> QPolyhedron:
    """Image under ``s(x, i, y) = (1 - x, sum(x) - r + i, y)``."""
    dim = n + 2
    mat = []
    for k in range(n):
        mat.append([-1 if j == k else 0 for j in range(dim)])
    mat.append([1] * n + [1, 0])
    mat.append([0] * (n + 1) + [1])
    shift = [1] * n + [-r, 0]
    return P.affine_image(mat, shift)


def poly_sum(P1: QPolyhedron, n1: int, P2: QPolyhedron, n2: int) -> QPolyhedron:
    """Minkowski sum of the two polyhedra placed on disjoint coordinate blocks."""
    n = n1 + n2
    dim = n + 2

    def embed(P, offset, nk):
        mat = [[0] * P.dim for _ in range(dim)]
        for k in range(nk):
            mat[offset + k][k] = 1
        mat[n][nk] = 1
        mat[n + 1][nk + 1] = 1
        return P.affine_image(mat, [0] * dim)

    return minkowski_sum(embed(P1, 0, n1), embed(P2, n1, n2))


# -- spanning set polytopes -----------------------------------------------------------------------------

def spanning_polytopes(M: MatroidV) -> Tuple[QPolyhedron, QPolyhedron]:
    """Residue and generic spanning set polytopes, read off ``P(M)``."""
    n = M.n
    P = build_P(M, check=False)
    at0 = P.slice(n, 0)
    residue = at0.slice(n + 1, 0).project(list(range(n))) if not at0.is_empty() else QPolyhedron(n)
    generic = at0.project(list(range(n))) if not at0.is_empty() else QPolyhedron(n)
    return residue, generic


def spanning_polytopes_direct(M: MatroidV) -> Tuple[QPolyhedron, QPolyhedron]:
    """The same polytopes from the module table: ``M(A) = 0`` and ``t_0(A)`` finite."""
    n = M.n
    res = [_e(A, n) for A in range(1 << n) if M.modules[A].is_zero()]
    gen = [_e(A, n) for A in range(1 << n) if M.modules[A].free_rank == 0]
    return QPolyhedron.from_generators(n, res), QPolyhedron.from_generators(n, gen)


# -- faces -----------------------------------------------------------------------------------------------

FACE_CLASSES = ("a", "b", "c", "d")


def generic_matroid(M: MatroidV) -> ClassicalMatroid:
    """The matroid over the fraction field: corank of ``A`` is the free rank of ``M(A)``."""
    r = M.generic_rank
    return ClassicalMatroid(M.n, [r - m.free_rank for m in M.modules])


@dataclass
class FaceReport:
    faces: Dict[str, List[Tuple[frozenset, frozenset]]]
    class_c_cells: List[frozenset]
    corank_cells: List[frozenset]
    facet_data: List[dict]

    @property
    def class_c_ok(self) -> bool:
        return self.class_c_cells == self.corank_cells

    @property
    def class_d_ok(self) -> bool:
        return all(f["c_matches"] and f["is_cell"] for f in self.facet_data)


def _maximal(sets) -> List[frozenset]:
    sets = set(sets)
    return sorted((s for s in sets if not any(s < t for t in sets)), key=lambda s: sorted(s))


def faces_by_recession(M: MatroidV, max_n: int = 5) -> FaceReport:
    """Classify faces of ``P(M)`` by recession cone and check the class (c) and (d) descriptions."""
    from ..errors import DimensionBound
    n = M.n
    if n > max_n:
        raise DimensionBound(f"face lattice only computed for n <= {max_n}")
    P = build_P(M, check=False)
    rid = {r: k for k, r in enumerate(P.rays)}
    i_ray, y_ray = rid[tuple(_unit(n, n + 2))], rid[tuple(_unit(n + 1, n + 2))]
    classes: Dict[str, List] = {c: [] for c in FACE_CLASSES}
    for vs, rs in P.faces():
        key = "a" if rs == {i_ray, y_ray} else "b" if rs == {i_ray} else "c" if rs == {y_ray} else "d"
        classes[key].append((vs, rs))

    def xmask(v):
        return sum(1 << k for k in range(n) if v[k] == 1)

    cells_c = _maximal(frozenset(xmask(P.vertices[j]) for j in vs) for vs, rs in classes["c"])
    corank = corank_subdivision_formula(generic_matroid(M))
    corank = _maximal(corank)
    facet_data = []
    subdivisions = {}
    for (a, b), vs, rs in P.facets():
        if rs:
            continue
        ax, a_i, a_t = a[:n], a[n], a[n + 1]
        v = Fraction(a_i) / a_t
        vn = normalize(v)
        masks = sorted({xmask(P.vertices[j]) for j in vs})
        cs = {A: normalize((Fraction(b) - sum(ax[k] for k in bits(A))) / a_t) for A in masks}
        dl = {A: d_leq(M.modules[A], vn) for A in masks}
        if vn not in subdivisions:
            heights = {A: d_leq(M.modules[A], vn) for A in range(1 << n)}
            subdivisions[vn] = regular_subdivision(n, heights)
        cell = frozenset(masks)
        facet_data.append({
            "slope": vn, "constants": cs, "masks": masks,
            "c_matches": all(cs[A] == dl[A] for A in masks),
            "is_cell": any(cell <= c for c in subdivisions[vn]),
            "is_facet": cell in subdivisions[vn],
        })
    return FaceReport(classes, cells_c, corank, facet_data)


# -- experimental cone ------------------------------------------------------------------------------------

def build_RP(M: MatroidV):
    """Inequality system for the polytopal cone of a spannable matroid (experimental).

    Variables ``x[a, l]`` for ``a`` in the ground set and ``l`` in the
    critical thresholds, flattened as ``a * len(L) + k``.  Rows ``(coeffs, rhs)``
    mean ``coeffs . x >= rhs``.  Per threshold there are ``n`` monotonicity rows
    (against the next threshold, or zero for the last one) and one row per subset.
    """
    from ..axioms import critical_thresholds
    if not is_spannable(M):
        raise NotSpannable("M(E) is not the zero module")
    n = M.n
    L = critical_thresholds(M)
    nv = n * len(L)
    rows = []
    for k, ell in enumerate(L):
        for a in range(n):
            c = [0] * nv
            c[a * len(L) + k] = 1
            if k + 1 < len(L):
                c[a * len(L) + k + 1] = -1
            rows.append((c, 0))
        for A in range(1 << n):
            c = [0] * nv
            for a in bits(M.full ^ A):
                c[a * len(L) + k] = 1
            rows.append((c, d_invariant(M.modules[A], ell)))
    return {"thresholds": L, "variables": [(a, ell) for a in range(n) for ell in L], "rows": rows}


def rp_feasible(system) -> bool:
    """LP feasibility of a ``build_RP`` system (variables are nonnegative)."""
    rows = system["rows"]
    nv = len(system["variables"])
    A_ub = [[-x for x in c] for c, _ in rows]
    b_ub = [-rhs for _, rhs in rows]
    return lp_feasible(A_ub=A_ub, b_ub=b_ub, nvar=nv).ok
