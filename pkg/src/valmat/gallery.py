"""Small named examples used by the golden files, the tests and the CLI."""
from itertools import combinations

from .matroid import MatroidV
from .modclass import ModuleClass
from .valgroup import INF


def exceptional_example() -> MatroidV:
    """``M(∅) = R ⊕ R/m²``, ``M(1) = M(2) = R/m³``, ``M(12) = R/m``.

    Its only exceptional pair is ``(1, 0)`` with ``mu = 3``.
    """
    return MatroidV.from_sets({(): [INF, 2], (1,): [3], (2,): [3], (1, 2): [1]}, n=2)


def exceptional_sibling() -> MatroidV:
    """The same table with ``M(1) = M(2) = R/m²``."""
    return MatroidV.from_sets({(): [INF, 2], (1,): [2], (2,): [2], (1, 2): [1]}, n=2)


def lambda_example(lam: int) -> MatroidV:
    """A rank-2 table on four elements satisfying D4, D3 and D3' but not D2'.

    ``t_0(12) = 2``, ``t_1(12) = 1``, ``t_0(34) = 1`` and ``t_0(A) = lam`` for
    ``|A| = 3``; every other ``t_{s,i}`` with ``s + i >= 2`` is zero.  The
    (D2') instance at ``A = {1}, b, c = 2, 3`` needs ``lam = 1`` and the one
    at ``A = {4}, b, c = 2, 3`` needs ``lam = 0``.
    """
    table = {(): [INF, INF]}
    for a in range(1, 5):
        table[(a,)] = [INF]
    for A in combinations(range(1, 5), 2):
        table[A] = []
    table[(1, 2)] = [1, 1]
    table[(3, 4)] = [1]
    for A in combinations(range(1, 5), 3):
        table[A] = [lam] if lam else []
    table[(1, 2, 3, 4)] = []
    return MatroidV.from_sets(table, n=4)


TWO_PRIMES_VECTORS = ((0, 1), (1, 3), (1, 2), (1, 0))
TWO_PRIMES = (2, 3)


def single_loop() -> MatroidV:
    return MatroidV([ModuleClass(), ModuleClass()])
