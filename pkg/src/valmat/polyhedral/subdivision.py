"""Classical matroids, their polytopes and regular subdivisions of the cube."""
from fractions import Fraction
from typing import Callable, Dict, FrozenSet, Iterable, List, Sequence

from ..matroid import bits, popcount
from .polyhedron import QPolyhedron


class ClassicalMatroid:
    """A matroid over a field, stored through its rank function on bitmasks."""

    def __init__(self, n: int, rank: Sequence[int], name: str = ""):
        if len(rank) != 1 << n:
            raise ValueError("rank table must cover every subset")
        self.n = n
        self.rank_table = tuple(rank)
        self.name = name

    @classmethod
    def from_bases(cls, n: int, bases: Iterable[Iterable[int]], name: str = ""):
        bmasks = []
        for B in bases:
            m = 0
            for b in B:
                m |= 1 << b
            bmasks.append(m)
        if not bmasks:
            raise ValueError("a matroid has at least one basis")
        rank = [max(popcount(A & B) for B in bmasks) for A in range(1 << n)]
        return cls(n, rank, name)

    @classmethod
    def from_rank_function(cls, n: int, rk: Callable[[int], int], name: str = ""):
        return cls(n, [rk(A) for A in range(1 << n)], name)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def rank(self) -> int:
        return self.rank_table[self.full]

    def rk(self, A: int) -> int:
        return self.rank_table[A]

    def cork(self, A: int) -> int:
        return self.rank - self.rank_table[A]

    def bases(self) -> List[int]:
        r = self.rank
        return [A for A in range(1 << self.n) if popcount(A) == r and self.rank_table[A] == r]

    def spanning_sets(self) -> List[int]:
        r = self.rank
        return [A for A in range(1 << self.n) if self.rank_table[A] == r]

    def is_flat(self, F: int) -> bool:
        rf = self.rank_table[F]
        return all(self.rank_table[F | (1 << e)] > rf for e in bits(self.full ^ F))

    def is_cyclic(self, F: int) -> bool:
        rf = self.rank_table[F]
        return all(self.rank_table[F ^ (1 << e)] == rf for e in bits(F))

    def components(self) -> List[int]:
        """Connected components as bitmasks: elements linked through shared circuits."""
        comps = [1 << e for e in range(self.n)]
        for C in self._circuits():
            hit = [c for c in comps if c & C]
            merged = 0
            for c in hit:
                merged |= c
                comps.remove(c)
            comps.append(merged)
        return sorted(comps)

    def _circuits(self) -> List[int]:
        if not hasattr(self, "_circ"):
            out = []
            for C in range(1, 1 << self.n):
                if self.rank_table[C] == popcount(C) - 1 and \
                        all(self.rank_table[C ^ (1 << e)] == popcount(C) - 1 for e in bits(C)):
                    out.append(C)
            self._circ = out
        return self._circ

    def circuits(self) -> List[int]:
        return list(self._circuits())

    def __repr__(self):
        return f"ClassicalMatroid({self.name or 'n=%d' % self.n}, rank {self.rank})"


def uniform(r: int, n: int) -> ClassicalMatroid:
    return ClassicalMatroid.from_rank_function(n, lambda A: min(popcount(A), r), f"U{r},{n}")


def free_matroid(n: int) -> ClassicalMatroid:
    return uniform(n, n)


def from_vectors(vectors: Sequence[Sequence], name: str = "") -> ClassicalMatroid:
    """Column matroid of rational vectors."""
    vecs = [[Fraction(x) for x in v] for v in vectors]

    def rk(A):
        rows = [list(vecs[e]) for e in bits(A)]
        rank = 0
        if not rows:
            return 0
        ncols = len(rows[0])
        for c in range(ncols):
            piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
            if piv is None:
                continue
            rows[rank], rows[piv] = rows[piv], rows[rank]
            for r in range(rank + 1, len(rows)):
                f = rows[r][c] / rows[rank][c]
                if f:
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
        return rank

    return ClassicalMatroid.from_rank_function(len(vecs), rk, name)


def graphic(num_vertices: int, edges: Sequence, name: str = "") -> ClassicalMatroid:
    """Cycle matroid of a graph; rank is the size of a spanning forest."""
    def rk(A):
        parent = list(range(num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        r = 0
        for e in bits(A):
            u, v = find(edges[e][0]), find(edges[e][1])
            if u != v:
                parent[u] = v
                r += 1
        return r

    return ClassicalMatroid.from_rank_function(len(edges), rk, name)


def k4() -> ClassicalMatroid:
    edges = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    return graphic(4, edges, "M(K4)")


FANO_LINES = ((0, 1, 2), (0, 3, 4), (0, 5, 6), (1, 3, 5), (1, 4, 6), (2, 3, 6), (2, 4, 5))


def fano() -> ClassicalMatroid:
    lines = [sum(1 << e for e in L) for L in FANO_LINES]

    def rk(A):
        k = popcount(A)
        if k <= 2:
            return k
        if k == 3:
            return 2 if A in lines else 3
        return 3

    return ClassicalMatroid.from_rank_function(7, rk, "F7")


def cyclic_flats(N: ClassicalMatroid) -> List[int]:
    return [F for F in range(1 << N.n) if N.is_flat(F) and N.is_cyclic(F)]


# -- regular subdivisions --------------------------------------------------------------

def regular_subdivision(n: int, heights: Dict[int, object]) -> List[FrozenSet[int]]:
    """Maximal cells of the regular subdivision of ``[0,1]^n`` lifted by ``heights``.

    Each cell is returned as the set of cube vertices (bitmasks) lying on
    the corresponding lower facet of ``conv{(e_A, h(A))} + cone{(0,1)}``.
    """
    pts = [[(A >> k) & 1 for k in range(n)] + [heights[A]] for A in range(1 << n)]
    ray = [0] * n + [1]
    P = QPolyhedron.from_generators(n + 1, pts, [ray])
    cells = set()
    for (a, b), vs, rs in P.facets():
        if a[-1] == 0:
            continue
        cell = frozenset(A for A in range(1 << n)
                         if sum(a[k] * ((A >> k) & 1) for k in range(n)) + a[-1] * Fraction(heights[A]) == b)
        cells.add(cell)
    return sorted(cells, key=lambda c: sorted(c))


def corank_subdivision_geometric(N: ClassicalMatroid) -> List[FrozenSet[int]]:
    return regular_subdivision(N.n, {A: N.cork(A) for A in range(1 << N.n)})


def corank_subdivision_formula(N: ClassicalMatroid) -> List[FrozenSet[int]]:
    """One cell per cyclic flat ``S``: sets ``S + A - B`` whose corank drops by exactly ``|A|``."""
    cells = set()
    full = N.full
    for S in cyclic_flats(N):
        cS = N.cork(S)
        outside = full ^ S
        cell = set()
        sub_a = outside
        while True:
            sub_b = S
            while True:
                T = (S | sub_a) & ~sub_b
                if N.cork(T) == cS - popcount(sub_a):
                    cell.add(T)
                if sub_b == 0:
                    break
                sub_b = (sub_b - 1) & S
            if sub_a == 0:
                break
            sub_a = (sub_a - 1) & outside
        cells.add(frozenset(cell))
    return sorted(cells, key=lambda c: sorted(c))


def corank_subdivision_facets(N: ClassicalMatroid, method: str = "formula") -> List[FrozenSet[int]]:
    if method == "geometric":
        return corank_subdivision_geometric(N)
    return corank_subdivision_formula(N)


# -- classical and valuated polytopes ----------------------------------------------------------

def _indicator(A: int, n: int) -> List[int]:
    return [(A >> k) & 1 for k in range(n)]


def classical_polytope(N: ClassicalMatroid) -> QPolyhedron:
    """Basis polytope ``conv{e_B}``."""
    return QPolyhedron.from_generators(N.n, [_indicator(B, N.n) for B in N.bases()])


def spanning_set_polytope(N: ClassicalMatroid) -> QPolyhedron:
    return QPolyhedron.from_generators(N.n, [_indicator(S, N.n) for S in N.spanning_sets()])


def spanning_via_minkowski(N: ClassicalMatroid) -> QPolyhedron:
    """``(P(N) + cone{e_i}) ∩ [0,1]^n``, computed from inequalities."""
    n = N.n
    P = QPolyhedron.from_generators(n, [_indicator(B, n) for B in N.bases()],
                                    [[1 if j == k else 0 for j in range(n)] for k in range(n)])
    pts = [_indicator(A, n) for A in range(1 << n) if P.contains(_indicator(A, n))]
    return QPolyhedron.from_generators(n, pts)


def valuated_lift(n: int, values: Dict[int, object]) -> QPolyhedron:
    """``conv{(e_A, v(A))} + cone{(0,1)}`` over the sets with finite value."""
    from ..valgroup import INF
    pts = [_indicator(A, n) + [v] for A, v in values.items() if v is not INF]
    return QPolyhedron.from_generators(n + 1, pts, [[0] * n + [1]])


def _is_root_direction(d) -> bool:
    nz = [x for x in d if x != 0]
    return len(nz) == 2 and nz[0] == -nz[1]


def basis_edge_violations(P: QPolyhedron, n: int) -> List:
    """Bounded edges whose first ``n`` coordinates do not move along some ``e_i - e_j``."""
    bad = []
    bounded, _ = P.edges()
    for v, w in bounded:
        d = [Fraction(a) - b for a, b in zip(v[:n], w[:n])]
        if not _is_root_direction(d):
            bad.append((v, w))
    return bad


def subdivision_edge_violations(cells: List[FrozenSet[int]], n: int) -> List:
    """Edges of the cells (as polytopes) not of the form ``e - e'`` with ``e, e'`` in ``{e_a} ∪ {0}``."""
    bad = []
    for cell in cells:
        Q = QPolyhedron.from_generators(n, [_indicator(A, n) for A in sorted(cell)])
        for v, w in Q.edges()[0]:
            d = [a - b for a, b in zip(v, w)]
            nz = [x for x in d if x != 0]
            if not (len(nz) == 1 or (len(nz) == 2 and nz[0] == -nz[1])):
                bad.append((v, w))
    return bad
