"""Exact rational polyhedra given by vertices and recession rays.

The generator form is always kept minimal.  An inequality description is
computed on demand by exact double description (pycddlib in fraction mode)
and cached; most queries (membership, minimum of the last coordinate over a
fibre, edges, faces) then run on the inequalities.  The LP-based routines in
this module give an independent second route used for cross-checks.
"""
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, List, Sequence, Tuple

import cdd

from ..valgroup import INF
from .lp import OPTIMAL, UNBOUNDED, lp_solve

Vec = Tuple[Fraction, ...]


def _vec(v) -> Vec:
    out = []
    for x in v:
        x = Fraction(x)
        out.append(x.numerator if x.denominator == 1 else x)
    return tuple(out)


def primitive(r) -> Vec:
    """Scale a nonzero rational vector to a primitive integer vector (same direction)."""
    r = [Fraction(x) for x in r]
    den = reduce(lambda a, b: a * b // gcd(a, b), (x.denominator for x in r), 1)
    ints = [int(x * den) for x in r]
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ValueError("zero ray")
    return tuple(x // g for x in ints)


class QPolyhedron:
    """``conv(vertices) + cone(rays)`` in ``Q^dim``, with minimal generators.

    Use :meth:`from_generators` to build from arbitrary (redundant) generators.
    The constructor itself trusts that its input is already minimal.
    """

    def __init__(self, dim: int, vertices: Iterable = (), rays: Iterable = (), _hrep=None):
        self.dim = dim
        self.vertices: Tuple[Vec, ...] = tuple(sorted({_vec(v) for v in vertices}))
        self.rays: Tuple[Vec, ...] = tuple(sorted({primitive(r) for r in rays}))
        for v in self.vertices + self.rays:
            if len(v) != dim:
                raise ValueError("generator has the wrong dimension")
        self._hrep = _hrep

    # -- construction -----------------------------------------------------------
    @classmethod
    def from_generators(cls, dim: int, points: Iterable, rays: Iterable = (), method: str = "dd"):
        points = sorted({_vec(p) for p in points})
        rays = sorted({primitive(r) for r in rays if any(x != 0 for x in r)})
        if not points:
            return cls(dim, (), ())
        if method == "lp":
            return cls(dim, *_minimalize_lp(points, rays))
        return cls._from_dd(dim, points, rays)

    @classmethod
    def _from_dd(cls, dim, points, rays):
        """One double-description pass; a generator is kept unless its face holds another."""
        mat = cdd.Matrix([[1] + list(p) for p in points] + [[0] + list(r) for r in rays],
                         number_type="fraction")
        mat.rep_type = cdd.RepType.GENERATOR
        poly = cdd.Polyhedron(mat)
        H = poly.get_inequalities()
        if poly.get_generators().lin_set:
            return cls._from_canonical(dim, points, rays)
        hrep = []
        for k in range(H.row_size):
            row = H[k]
            a = _vec(row[1:])
            hrep.append((a, _vec([-row[0]])[0], k in H.lin_set))
        inc = [frozenset(z) for z in poly.get_input_incidence()]
        npts = len(points)
        pinc, rinc = inc[:npts], inc[npts:]
        verts = []
        for j, p in enumerate(points):
            Z = pinc[j]
            if any(k != j and Z <= pinc[k] for k in range(npts)) or any(Z <= z for z in rinc):
                continue
            verts.append(p)
        rs = []
        for j, r in enumerate(rays):
            Z = rinc[j]
            if any(k != j and Z <= rinc[k] for k in range(len(rays))):
                continue
            rs.append(r)
        keep = [k for k, (a, b, eq) in enumerate(hrep) if any(x != 0 for x in a)]
        return cls(dim, verts, rs, _hrep=[hrep[k] for k in keep])

    @classmethod
    def _from_canonical(cls, dim, points, rays):
        mat = cdd.Matrix([[1] + list(p) for p in points] + [[0] + list(r) for r in rays],
                         number_type="fraction")
        mat.rep_type = cdd.RepType.GENERATOR
        mat.canonicalize()
        verts, rs = [], []
        lin = mat.lin_set
        for k in range(mat.row_size):
            row = mat[k]
            if row[0] == 0:
                rs.append(row[1:])
                if k in lin:
                    rs.append([-x for x in row[1:]])
            else:
                verts.append([Fraction(x) / Fraction(row[0]) for x in row[1:]])
        return cls(dim, verts, rs)

    @classmethod
    def empty(cls, dim: int) -> "QPolyhedron":
        return cls(dim)

    def is_empty(self) -> bool:
        return not self.vertices

    def __eq__(self, other):
        if not isinstance(other, QPolyhedron):
            return NotImplemented
        return (self.dim, self.vertices, self.rays) == (other.dim, other.vertices, other.rays)

    def __hash__(self):
        return hash((self.dim, self.vertices, self.rays))

    def __repr__(self):
        return f"QPolyhedron(dim={self.dim}, {len(self.vertices)} vertices, {len(self.rays)} rays)"

    # -- inequality description ---------------------------------------------------
    def hrep(self) -> List[Tuple[Vec, Fraction, bool]]:
        """List of ``(a, b, is_equality)`` meaning ``a.x >= b`` (or ``= b``)."""
        if self._hrep is None:
            if self.is_empty():
                self._hrep = []
                return self._hrep
            mat = cdd.Matrix([[1] + list(v) for v in self.vertices] + [[0] + list(r) for r in self.rays],
                             number_type="fraction")
            mat.rep_type = cdd.RepType.GENERATOR
            poly = cdd.Polyhedron(mat)
            H = poly.get_inequalities()
            out = []
            for k in range(H.row_size):
                row = H[k]
                a = _vec(row[1:])
                if all(x == 0 for x in a):
                    continue
                out.append((a, _vec([-row[0]])[0], k in H.lin_set))
            self._hrep = out
        return self._hrep

    def inequalities(self) -> List[Tuple[Vec, Fraction]]:
        """Inequalities only, equalities split into two opposite inequalities."""
        out = []
        for a, b, eq in self.hrep():
            out.append((a, b))
            if eq:
                out.append((tuple(-x for x in a), -b))
        return out

    def contains(self, x) -> bool:
        if self.is_empty():
            return False
        x = [Fraction(v) for v in x]
        for a, b, eq in self.hrep():
            s = sum(ai * xi for ai, xi in zip(a, x))
            if s < b or (eq and s != b):
                return False
        return True

    def min_last(self, prefix):
        """``min{y : (prefix, y) in P}``; ``INF`` when the fibre is empty."""
        if self.is_empty():
            return INF
        prefix = [Fraction(v) for v in prefix]
        lo, hi = None, None
        for a, b, eq in self.hrep():
            s = sum(ai * xi for ai, xi in zip(a[:-1], prefix))
            ay = a[-1]
            rhs = b - s
            if ay == 0:
                if rhs > 0 or (eq and rhs != 0):
                    return INF
                continue
            bound = Fraction(rhs) / ay
            if eq:
                lo = bound if lo is None else max(lo, bound)
                hi = bound if hi is None else min(hi, bound)
            elif ay > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None and lo > hi:
            return INF
        if lo is None:
            raise ValueError("the last coordinate is unbounded below on this fibre")
        return lo.numerator if lo.denominator == 1 else lo

    def min_last_lp(self, prefix):
        """Same as :meth:`min_last` but through the generator LP."""
        if self.is_empty():
            return INF
        V, R = self.vertices, self.rays
        nv, nr = len(V), len(R)
        k = len(prefix)
        A_eq = [[V[j][c] for j in range(nv)] + [R[j][c] for j in range(nr)] for c in range(k)]
        b_eq = list(prefix)
        A_eq.append([1] * nv + [0] * nr)
        b_eq.append(1)
        cost = [V[j][-1] for j in range(nv)] + [R[j][-1] for j in range(nr)]
        res = lp_solve(cost, A_eq, b_eq, maximize=False)
        if res.status == "infeasible":
            return INF
        if res.status == UNBOUNDED:
            raise ValueError("the last coordinate is unbounded below on this fibre")
        v = res.value
        return v.numerator if v.denominator == 1 else v

    # -- incidence ---------------------------------------------------------------------
    def _tight_masks(self):
        H = self.hrep()
        vt, rt = [], []
        for v in self.vertices:
            m = 0
            for k, (a, b, eq) in enumerate(H):
                if sum(ai * xi for ai, xi in zip(a, v)) == b:
                    m |= 1 << k
            vt.append(m)
        for r in self.rays:
            m = 0
            for k, (a, b, eq) in enumerate(H):
                if sum(ai * xi for ai, xi in zip(a, r)) == 0:
                    m |= 1 << k
            rt.append(m)
        return vt, rt

    def face_generators(self, tight: int):
        """Indices of vertices and rays lying on every inequality in ``tight``."""
        vt, rt = self._incidence()
        vs = [j for j, m in enumerate(vt) if m & tight == tight]
        rs = [j for j, m in enumerate(rt) if m & tight == tight]
        return vs, rs

    def _incidence(self):
        if not hasattr(self, "_inc"):
            self._inc = self._tight_masks()
        return self._inc

    def edges(self, method: str = "dd"):
        """Bounded edges as vertex pairs and unbounded edges as (vertex, ray) pairs."""
        if method == "lp":
            return _edges_lp(self)
        vt, rt = self._incidence()
        nv, nr = len(self.vertices), len(self.rays)
        bounded, unbounded = [], []
        for i in range(nv):
            for j in range(i + 1, nv):
                Z = vt[i] & vt[j]
                if any(m & Z == Z for m in rt):
                    continue
                if any(k != i and k != j and vt[k] & Z == Z for k in range(nv)):
                    continue
                bounded.append((self.vertices[i], self.vertices[j]))
            for j in range(nr):
                Z = vt[i] & rt[j]
                if any(k != i and vt[k] & Z == Z for k in range(nv)):
                    continue
                if any(k != j and rt[k] & Z == Z for k in range(nr)):
                    continue
                unbounded.append((self.vertices[i], self.rays[j]))
        return bounded, unbounded

    def faces(self):
        """All nonempty faces as pairs (vertex index set, ray index set)."""
        vt, rt = self._incidence()
        H = self.hrep()
        nv, nr = len(self.vertices), len(self.rays)
        allv = frozenset(range(nv))
        allr = frozenset(range(nr))
        eqmask = 0
        for k, (a, b, eq) in enumerate(H):
            if eq:
                eqmask |= 1 << k
        facet_sets = []
        for k, (a, b, eq) in enumerate(H):
            if eq:
                continue
            Z = (1 << k) | eqmask
            vs = frozenset(j for j in range(nv) if vt[j] & Z == Z)
            rs = frozenset(j for j in range(nr) if rt[j] & Z == Z)
            if vs:
                facet_sets.append((vs, rs))
        faces = {(allv, allr)}
        frontier = [(allv, allr)]
        while frontier:
            nxt = []
            for fv, fr in frontier:
                for gv, gr in facet_sets:
                    iv = fv & gv
                    if not iv or (iv == fv and (fr & gr) == fr):
                        continue
                    face = (iv, fr & gr)
                    if face not in faces:
                        faces.add(face)
                        nxt.append(face)
            frontier = nxt
        return sorted(faces, key=lambda f: (-len(f[0]) - len(f[1]), sorted(f[0]), sorted(f[1])))

    def facets(self):
        """Facets as (inequality, vertex index set, ray index set)."""
        vt, rt = self._incidence()
        out = []
        for k, (a, b, eq) in enumerate(self.hrep()):
            if eq:
                continue
            vs = [j for j, m in enumerate(vt) if (m >> k) & 1]
            rs = [j for j, m in enumerate(rt) if (m >> k) & 1]
            out.append(((a, b), vs, rs))
        return out

    def affine_dim(self, vertex_ids=None, ray_ids=None) -> int:
        vs = list(self.vertices) if vertex_ids is None else [self.vertices[j] for j in vertex_ids]
        rs = list(self.rays) if ray_ids is None else [self.rays[j] for j in ray_ids]
        if not vs:
            return -1
        base = vs[0]
        vecs = [[Fraction(a) - b for a, b in zip(v, base)] for v in vs[1:]] + [[Fraction(x) for x in r] for r in rs]
        return _rank(vecs)

    # -- transformations ------------------------------------------------------------------
    def project(self, coords: Sequence[int]) -> "QPolyhedron":
        pts = [tuple(v[c] for c in coords) for v in self.vertices]
        rs = [tuple(r[c] for c in coords) for r in self.rays]
        return QPolyhedron.from_generators(len(coords), pts, rs)

    def slice(self, coord: int, value) -> "QPolyhedron":
        """Intersection with the hyperplane ``x_coord = value`` (coordinate kept)."""
        value = Fraction(value)
        H = [(a, b, eq) for a, b, eq in self.hrep()]
        if self.is_empty():
            return QPolyhedron(self.dim)
        e = tuple(1 if j == coord else 0 for j in range(self.dim))
        rows = [[-b] + list(a) for a, b, eq in H]
        lin = {k for k, (a, b, eq) in enumerate(H) if eq}
        rows.append([-value] + list(e))
        lin.add(len(rows) - 1)
        mat = cdd.Matrix(rows, number_type="fraction")
        mat.rep_type = cdd.RepType.INEQUALITY
        mat.lin_set = frozenset(lin)
        poly = cdd.Polyhedron(mat)
        G = poly.get_generators()
        pts, rs = [], []
        for k in range(G.row_size):
            row = G[k]
            if row[0] == 0:
                rs.append(row[1:])
                if k in G.lin_set:
                    rs.append([-x for x in row[1:]])
            else:
                pts.append([Fraction(x) / Fraction(row[0]) for x in row[1:]])
        if not pts:
            return QPolyhedron(self.dim)
        return QPolyhedron.from_generators(self.dim, pts, rs)

    def affine_image(self, matrix: Sequence[Sequence], shift: Sequence) -> "QPolyhedron":
        """Image under ``x -> matrix x + shift`` (rays map linearly)."""
        def lin(v):
            return [sum(Fraction(m) * x for m, x in zip(row, v)) for row in matrix]
        pts = [[a + Fraction(s) for a, s in zip(lin(v), shift)] for v in self.vertices]
        rs = [lin(r) for r in self.rays]
        rs = [r for r in rs if any(x != 0 for x in r)]
        return QPolyhedron.from_generators(len(matrix), pts, rs)

    def to_json(self, with_hrep: bool = False) -> dict:
        from ..valgroup import fmt
        out = {"dim": self.dim,
               "vertices": [[fmt(x) for x in v] for v in self.vertices],
               "rays": [[fmt(x) for x in r] for r in self.rays]}
        if with_hrep:
            out["inequalities"] = [[fmt(x) for x in a] + [fmt(b)] for a, b in self.inequalities()]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "QPolyhedron":
        from ..valgroup import ext
        dim = int(data["dim"])
        pts = [[ext(x) for x in v] for v in data.get("vertices", [])]
        rs = [[ext(x) for x in r] for r in data.get("rays", [])]
        return cls.from_generators(dim, pts, rs)


def minkowski_sum(P: QPolyhedron, Q: QPolyhedron) -> QPolyhedron:
    if P.is_empty() or Q.is_empty():
        return QPolyhedron(P.dim)
    pts = [[a + b for a, b in zip(u, v)] for u in P.vertices for v in Q.vertices]
    return QPolyhedron.from_generators(P.dim, pts, list(P.rays) + list(Q.rays))


def _rank(vecs) -> int:
    M = [list(v) for v in vecs]
    rank = 0
    ncols = len(M[0]) if M else 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(M)):
            if M[r][c] != 0:
                piv = r
                break
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for r in range(len(M)):
            if r != rank and M[r][c] != 0:
                f = M[r][c] / M[rank][c]
                M[r] = [a - f * b for a, b in zip(M[r], M[rank])]
        rank += 1
    return rank


# -- LP route ------------------------------------------------------------------------------

def in_hull_lp(point, points, rays) -> bool:
    """Is ``point`` in ``conv(points) + cone(rays)``?  Decided by an LP."""
    np_, nr = len(points), len(rays)
    if np_ == 0:
        return False
    dim = len(point)
    A_eq = [[points[j][c] for j in range(np_)] + [rays[j][c] for j in range(nr)] for c in range(dim)]
    A_eq.append([1] * np_ + [0] * nr)
    b_eq = list(point) + [1]
    return lp_solve([0] * (np_ + nr), A_eq, b_eq).status == OPTIMAL


def _minimalize_lp(points, rays):
    """Drop generators expressible by the others (lexicographic order is kept)."""
    rays = list(rays)
    keep_r = []
    for j, r in enumerate(rays):
        others = [s for k, s in enumerate(rays) if k != j and (k > j or s in keep_r)]
        if others:
            A_eq = [[s[c] for s in others] for c in range(len(r))]
            if lp_solve([0] * len(others), A_eq, list(r)).status == OPTIMAL:
                continue
        keep_r.append(r)
    pts = list(points)
    keep_p = []
    for j, p in enumerate(pts):
        others = [q for k, q in enumerate(pts) if k != j and (k > j or q in keep_p)]
        if others and in_hull_lp(p, others, keep_r):
            continue
        keep_p.append(p)
    return keep_p, keep_r


def _edges_lp(P: QPolyhedron):
    """Edges by minimal-face probes: maximise the weight carried by other generators."""
    V, R = P.vertices, P.rays
    nv, nr = len(V), len(R)
    dim = P.dim

    def only_uses(target, allowed_v, allowed_r):
        # representations of target; maximise total weight on the other generators
        A_eq = [[V[j][c] for j in range(nv)] + [R[j][c] for j in range(nr)] for c in range(dim)]
        A_eq.append([1] * nv + [0] * nr)
        b_eq = list(target) + [1]
        cost = [0 if j in allowed_v else 1 for j in range(nv)] + [0 if j in allowed_r else 1 for j in range(nr)]
        res = lp_solve(cost, A_eq, b_eq)
        return res.status == OPTIMAL and res.value == 0

    bounded, unbounded = [], []
    for i in range(nv):
        for j in range(i + 1, nv):
            mid = [(Fraction(a) + b) / 2 for a, b in zip(V[i], V[j])]
            if only_uses(mid, {i, j}, set()):
                bounded.append((V[i], V[j]))
        for j in range(nr):
            pt = [Fraction(a) + b for a, b in zip(V[i], R[j])]
            if only_uses(pt, {i}, {j}):
                unbounded.append((V[i], R[j]))
    return bounded, unbounded
