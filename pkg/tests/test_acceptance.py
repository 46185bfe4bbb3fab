"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 11 and 12 do not hold as stated.  Their tests compute the
criterion faithfully, record FAIL with counts, and are marked ``xfail`` so
the rest of the suite stays green.
"""
import random
import time
from collections import Counter
from fractions import Fraction

import pytest

from valmat.axioms import verify_d_axioms, verify_reduced_system, verify_t_axioms
from valmat.enumerate import enumerate_matroids
from valmat.errors import AllInfinite, ConditionFailed, SizeBound
from valmat.gallery import (TWO_PRIMES, TWO_PRIMES_VECTORS, exceptional_example,
                            exceptional_sibling, lambda_example)
from valmat.matroid import (MatroidV, contract, delete, direct_sum_matroid, dual, is_bispannable,
                            is_essential)
from valmat.modclass import ModuleClass, oracle_t_finite, t_invariant
from valmat.oracles import smith_realize_table
from valmat.paramspace import (D_bound, build_word, check_cone_C, check_ZDw, final_profile_displayed,
                               fibre_shift_check, index_profile, pair_count, project_pi)
from valmat.polyhedral import (MatroidOverZ, build_P, build_P_multi, check_edge_directions,
                               corank_subdivision_formula, corank_subdivision_geometric,
                               matroid_from_polyhedron, poly_contract, poly_delete, poly_dual,
                               poly_sum, project_prime)
from valmat.polyhedral.subdivision import k4, uniform
from valmat.realize import p_local, random_realizable, realize, vp
from valmat.spannable import exceptional_pairs
from valmat.tropical import (TPluecker, all_profiles, check_flag,
                             check_pluecker_full, check_q_from_incidence, check_W, class_parameters,
                             extract_flag, extract_t_vector, fano_vector, matroid_from_pluecker,
                             rank1_in_corank1, stable_intersection, stable_sum, underline_identity,
                             xi_blocks, xi_embed)
from valmat.valgroup import INF


@pytest.fixture(scope="module")
def enumerated():
    """Every table with n <= 3, integer lengths <= 3 and at most two summands."""
    return [M for n in range(4) for M in enumerate_matroids(n, "int", 3, 2)]


def _realizable(seed: int, max_n: int, max_m: int = 3, relations: bool = True):
    """A seeded realisable matroid; returns ``(matrix, matroid)``."""
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    m = rng.randint(1, max_m)
    ring = p_local(rng.choice([2, 3]))
    X = random_realizable(m, n, seed, ring, max_val=3,
                          n_relations=rng.randint(0, 1) if relations else 0)
    return X, realize(X)


def _essential_realizable(seed: int, max_n: int, min_n: int = 1):
    rng = random.Random(seed)
    while True:
        X, M = _realizable(rng.randrange(10 ** 9), max_n)
        if M.n >= min_n and is_essential(M):
            return X, M


def _perturb(M: MatroidV, rng: random.Random) -> MatroidV:
    mods = list(M.modules)
    A = rng.randrange(len(mods))
    choices = [ModuleClass(c) for c in ([], [1], [2], [3], [1, 1], [2, 1], [INF], [INF, 1], [INF, INF])]
    mods[A] = rng.choice([c for c in choices if c != mods[A]])
    return MatroidV(mods, M.labels, M.flavor)


# -- 1 --------------------------------------------------------------------------------------------

def test_criterion_01_two_primes(record):
    start = time.time()
    MZ = MatroidOverZ.from_vectors(2, TWO_PRIMES_VECTORS, TWO_PRIMES)
    P = build_P_multi(MZ)
    a, b = (1, 0, 0, 1, 0, 0, 0), (0, 1, 1, 0, 0, 0, 0)
    has_vertices = a in P.vertices and b in P.vertices

    def functional(v):
        return 3 * v[0] + 2 * v[1] + 2 * v[2] + v[3] + 4 * (v[4] + v[5] + v[6])

    values = {v: functional(v) for v in P.vertices}
    least = min(values.values())
    argmin = sorted(v for v, x in values.items() if x == least)
    bounded, _ = P.edges()
    is_edge = (a, b) in bounded or (b, a) in bounded
    bad = {frozenset((v, w)) for v, w, _ in check_edge_directions(P, 4)}
    violates = frozenset((a, b)) in bad
    projections_ok = all(check_edge_directions(project_prime(P, 4, k), 4) == [] for k in range(2))
    elapsed = time.time() - start
    ok = (has_vertices and least == 4 and argmin == sorted([a, b]) and is_edge and violates
          and projections_ok and elapsed < 5)
    record(1, ok, f"min={least} argmin={len(argmin)} edge={is_edge} violates={violates} "
                  f"projections_ok={projections_ok} {elapsed:.2f}s")
    assert ok


# -- 2 --------------------------------------------------------------------------------------------

def test_criterion_02_exceptional_pair(record):
    start = time.time()
    E, S = exceptional_example(), exceptional_sibling()
    checks = [verify_t_axioms(E).passed, verify_d_axioms(E).passed, verify_reduced_system(E).passed,
              verify_t_axioms(S).passed, verify_d_axioms(S).passed]
    pairs = exceptional_pairs(E)
    fibre = fibre_shift_check(E, S, 1, 2, 1, 1)
    elapsed = time.time() - start
    ok = (all(checks) and pairs == [(1, 0, 3)] and fibre.passed and fibre.shifted == [(1, 0)]
          and fibre.lambdas[(1, 0)] == -1 and elapsed < 1)
    record(2, ok, f"pairs={[tuple(p) for p in pairs]} shifts={fibre.shifted} "
                  f"lambda_1,0={fibre.lambdas[(1, 0)]} {elapsed:.2f}s")
    assert ok


# -- 3 --------------------------------------------------------------------------------------------

def test_criterion_03_lambda_counterexample(record):
    from valmat.axioms import verify_D_statement
    start = time.time()
    ok = True
    witnesses = {}
    for lam in (0, 1):
        M = lambda_example(lam)
        for w in ("D4", "D3", "D3'"):
            ok &= verify_D_statement(M, w).passed
        viol = verify_D_statement(M, "D2'").violations
        ok &= bool(viol)
        witnesses[lam] = {(v.A, v.witness) for v in viol}
    # the triple at A={1}, b,c = 2,3 needs lam = 1, the one at A={4} needs lam = 0
    ok &= ((1,), (2, 3)) in witnesses[0] and ((4,), (2, 3)) in witnesses[1]
    ok &= ((4,), (2, 3)) not in witnesses[0] and ((1,), (2, 3)) not in witnesses[1]
    elapsed = time.time() - start
    ok &= elapsed < 1
    record(3, ok, f"lam=0 fails at A={{1}} (2,3); lam=1 fails at A={{4}} (2,3) {elapsed:.2f}s")
    assert ok


# -- 4 --------------------------------------------------------------------------------------------

def test_criterion_04_cryptomorphism(enumerated, record):
    start = time.time()
    failures = 0
    for M in enumerated:
        P = build_P(M, check=False)
        if check_edge_directions(P, M.n) or matroid_from_polyhedron(P, M.n) != M:
            failures += 1
    rng = random.Random(4)
    caught = Counter()
    pool = [M for M in enumerated if M.n >= 2]
    while sum(caught.values()) < 50:
        N = _perturb(rng.choice(pool), rng)
        if verify_t_axioms(N, first_only=True).passed:
            continue
        try:
            back = matroid_from_polyhedron(build_P(N, check=False), N.n)
            caught["roundtrip-mismatch" if back != N else "missed"] += 1
        except ConditionFailed as exc:
            caught[exc.condition] += 1
    elapsed = time.time() - start
    ok = failures == 0 and caught["missed"] == 0 and elapsed < 600
    record(4, ok, f"{len(enumerated)} tables, {failures} roundtrip failures; "
                  f"50 non-matroids rejected by {dict(sorted(caught.items()))} {elapsed:.1f}s")
    assert ok


# -- 5 --------------------------------------------------------------------------------------------

def test_criterion_05_axiom_equivalence(enumerated, record):
    start = time.time()
    rng = random.Random(5)
    tables = list(enumerated) + [_perturb(rng.choice(enumerated[20:]), rng) for _ in range(500)]
    disagree_d = disagree_reduced = negatives = 0
    for M in tables:
        t = verify_t_axioms(M).passed
        negatives += not t
        disagree_d += t != verify_d_axioms(M).passed
        disagree_reduced += t != verify_reduced_system(M).passed
    elapsed = time.time() - start
    ok = disagree_d == 0 and disagree_reduced == 0 and elapsed < 600
    record(5, ok, f"{len(tables)} tables ({negatives} non-matroids): d disagreements {disagree_d}, "
                  f"reduced disagreements {disagree_reduced} {elapsed:.1f}s")
    assert ok


# -- 6 --------------------------------------------------------------------------------------------

def test_criterion_06_realization_vs_oracle(record):
    start = time.time()
    mismatches = oracle_checked = oracle_bad = 0
    for seed in range(500):
        rng = random.Random(seed)
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        p = rng.choice([2, 3])
        X = random_realizable(m, n, seed, p_local(p), max_val=3, n_relations=rng.randint(0, 1))
        mods = list(realize(X).modules)
        if mods != smith_realize_table(X):
            mismatches += 1
        for N in set(mods):
            exps = [x for x in N.lengths if x is not INF]
            torsion = ModuleClass(exps)
            for i in range(len(exps) + 1):
                try:
                    want = oracle_t_finite(p, exps, i, bound=64)
                except SizeBound:
                    break
                oracle_checked += 1
                oracle_bad += want != t_invariant(torsion, i)
    elapsed = time.time() - start
    ok = mismatches == 0 and oracle_bad == 0 and elapsed < 120
    record(6, ok, f"500 matrices, {mismatches} Smith mismatches, {oracle_checked} oracle values "
                  f"({oracle_bad} wrong) {elapsed:.1f}s")
    assert ok


# -- 7 --------------------------------------------------------------------------------------------

def test_criterion_07_polyhedral_operations(record):
    start = time.time()
    bad = Counter()
    for seed in range(100):
        _, M = _essential_realizable(seed, 4, min_n=1)
        _, N = _essential_realizable(seed + 10 ** 6, 2)
        P = build_P(M)
        a = M.labels[random.Random(seed).randrange(M.n)]
        pos = M.labels.index(a)
        bad["delete"] += poly_delete(P, pos) != build_P(delete(M, a))
        bad["contract"] += poly_contract(P, pos) != build_P(contract(M, a))
        bad["dual"] += poly_dual(P, M.n, M.generic_rank) != build_P(dual(M))
        bad["sum"] += poly_sum(P, M.n, build_P(N), N.n) != build_P(direct_sum_matroid(M, N))
    elapsed = time.time() - start
    ok = sum(bad.values()) == 0 and elapsed < 300
    record(7, ok, f"100 instances, mismatches {dict(bad)} {elapsed:.1f}s")
    assert ok


# -- 8 --------------------------------------------------------------------------------------------

def test_criterion_08_corank_subdivision(record):
    start = time.time()
    cases = {"U1,3": uniform(1, 3), "U2,4": uniform(2, 4), "U3,5": uniform(3, 5),
             "U2,5": uniform(2, 5), "K4": k4()}
    equal = {name: corank_subdivision_geometric(N) == corank_subdivision_formula(N)
             for name, N in cases.items()}
    elapsed = time.time() - start
    ok = all(equal.values()) and elapsed < 120
    record(8, ok, f"{equal} {elapsed:.1f}s")
    assert ok


# -- 9 --------------------------------------------------------------------------------------------

def test_criterion_09_flag_extraction(record):
    start = time.time()
    vectors = flags = counterexamples = failures = 0
    for seed in range(100):
        _, M = _essential_realizable(seed, 5, min_n=2)
        R = M.generic_rank
        for r in range(M.n + 1):
            for i in range(max(R - r, 0), M.stab_bound + 1):
                vectors += 1
                failures += not check_pluecker_full(extract_t_vector(M, r, i)).passed
        for prof in all_profiles(M.n, R, M.stab_bound):
            flag = extract_flag(M, prof)
            flags += 1
            failures += not check_flag(flag).passed
            for p, q in zip(flag, flag[1:]):
                counterexamples += len(check_q_from_incidence(p, q).violations)
    elapsed = time.time() - start
    ok = failures == 0 and counterexamples == 0 and elapsed < 300
    record(9, ok, f"{vectors} vectors, {flags} flags, {failures} failures, "
                  f"{counterexamples} incidence counterexamples {elapsed:.1f}s")
    assert ok


# -- 10 -------------------------------------------------------------------------------------------

def _section_ok(p: TPluecker) -> bool:
    M = matroid_from_pluecker(p, auto_shift=True)
    return (verify_t_axioms(M).passed and is_bispannable(M)
            and extract_t_vector(M, p.r, 0) == p.normalized())


def test_criterion_10_section(record):
    start = time.time()
    vectors = []
    seed = 0
    while len(vectors) < 50:
        _, M = _essential_realizable(seed, 5, min_n=2)
        seed += 1
        r = M.generic_rank
        if 1 <= r < M.n:
            vectors.append(extract_t_vector(M, r, 0))
    hand = [fano_vector(w) for w in ([0] * 7, [1, 0, 0, 0, 0, 0, 0], [0, 1, 2, 0, 1, 2, 0],
                                     [3, 0, 1, 0, 0, 2, 1], [Fraction(1, 2), 0, 0, 1, 0, 0, 0])]
    ok_real = sum(_section_ok(p) for p in vectors)
    ok_hand = sum(_section_ok(p) for p in hand)
    elapsed = time.time() - start
    ok = ok_real == 50 and ok_hand == 5 and elapsed < 120
    record(10, ok, f"realisable {ok_real}/50, Fano-support {ok_hand}/5 {elapsed:.1f}s")
    assert ok


# -- 11 -------------------------------------------------------------------------------------------

def _incident_triple(rng: random.Random):
    """``(p, g, h)`` with ``p`` realisable and ``g``, ``h`` from a point on a hyperplane."""
    while True:
        n = rng.randint(2, 5)
        while True:
            X = random_realizable(rng.randint(1, n - 1), n, rng.randrange(10 ** 9), p_local(2),
                                  max_val=2, zero_prob=0.15)
            M = realize(X)
            if 1 <= M.generic_rank < n and is_essential(M):
                break
        p = extract_t_vector(M, M.generic_rank, 0).normalized()
        a = [0] * n
        while not any(a):
            a = [rng.choice([0, 1, -1, 2, -2, 3, 4]) for _ in range(n)]
        j = max(range(n), key=lambda e: abs(a[e]))
        x = [0] * n
        while not any(x):
            x = [Fraction(rng.choice([0, 1, -1, 2, -2, 4])) for _ in range(n)]
            x[j] = Fraction(-sum(a[e] * x[e] for e in range(n) if e != j), a[j])
        full = (1 << n) - 1
        g = TPluecker(n, 1, {1 << e: vp(x[e], 2) for e in range(n)})
        h = TPluecker(n, n - 1, {full ^ (1 << e): vp(Fraction(a[e]), 2) for e in range(n)})
        try:
            stable_sum(p, g)
            stable_intersection(p, h)
        except AllInfinite:
            continue
        return p, g, h


@pytest.mark.xfail(strict=True, reason="the identity fails for positive v; see the decisions ledger")
def test_criterion_11_underline_commutation(record):
    start = time.time()
    rng = random.Random(11)
    by_v = Counter()
    failing = 0
    for _ in range(200):
        p, g, h = _incident_triple(rng)
        assert rank1_in_corank1(g, h)
        bad = False
        for v in (-1, 0, 1, 2, INF):
            lhs, rhs = underline_identity(p, g, h, v)
            if lhs != rhs:
                by_v["inf" if v is INF else v] += 1
                bad = True
        failing += bad
    elapsed = time.time() - start
    ok = failing == 0 and elapsed < 60
    record(11, ok, f"{failing}/200 triples fail for some v; failures by v {dict(by_v)} {elapsed:.1f}s")
    assert ok


# -- 12 -------------------------------------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="the zero-block equations fail when k < l; see the decisions ledger")
def test_criterion_12_dressian_slice(record):
    start = time.time()
    members = pluecker_bad = w_bad = w_bad_k_ge_l = raised_bad = controls = controls_missed = 0
    for seed in range(150):
        rng = random.Random(seed)
        m, n = rng.randint(1, 3), rng.randint(1, 4)
        X = random_realizable(m, n, seed, p_local(rng.choice([2, 3])), max_val=3,
                              n_relations=rng.randint(0, 1))
        M = realize(X)
        if not is_essential(M):
            continue
        members += 1
        r, k, ell = class_parameters(M)
        q = xi_embed(M, r, n, k, ell)
        G, Z = xi_blocks(n, r, k, ell)
        pluecker_bad += not check_pluecker_full(q).passed
        if not check_W(q, n, G, Z).passed:
            w_bad += 1
            w_bad_k_ge_l += k >= ell
        big = max(k, ell)
        q2 = xi_embed(M, r, n, big, big)
        raised_bad += not check_W(q2, n, *xi_blocks(n, r, big, big)).passed
        # perturb a finite coordinate that shares its W class with another one
        base = (1 << n) - 1
        classes = Counter((bin(A & G).count("1"), bin(A & Z).count("1"), A & base) for A in q.coords)
        movable = sorted(A for A, v in q.coords.items() if v is not INF and
                         classes[(bin(A & G).count("1"), bin(A & Z).count("1"), A & base)] > 1)
        if not movable:
            continue
        A = movable[rng.randrange(len(movable))]
        controls += 1
        coords = dict(q.coords)
        coords[A] = q[A] + 1
        moved = TPluecker(q.n, q.r, coords)
        if check_pluecker_full(moved, limit=1).passed and check_W(moved, n, G, Z).passed:
            controls_missed += 1
    elapsed = time.time() - start
    ok = pluecker_bad == 0 and w_bad == 0 and controls_missed == 0 and elapsed < 120
    record(12, ok, f"{members} class members: Pluecker failures {pluecker_bad}, W failures {w_bad} "
                   f"(all with k < l: {w_bad_k_ge_l == 0}); with k = l = max(k, l): {raised_bad} "
                   f"W failures; perturbations missed {controls_missed}/{controls} {elapsed:.1f}s")
    assert ok


# -- 13 -------------------------------------------------------------------------------------------

def test_criterion_13_parameter_space(enumerated, record):
    start = time.time()
    realised = [_essential_realizable(seed, 4)[1] for seed in range(50)]
    tables = list(enumerated) + realised
    cone_bad = sum(not check_cone_C(M, extra=True).passed for M in tables)
    count_bad = 0
    for n in range(1, 7):
        for r in range(n + 1):
            for k in range(7):
                for ell in range(7):
                    if abs(k - ell) > n:
                        continue
                    count_bad += D_bound(k, ell, r, n) != pair_count(k, ell, r, n)
    zd13_bad = final_bad = points = 0
    for M in tables:
        if M.n == 0 or not is_essential(M):
            continue
        r, k, ell = class_parameters(M)
        rep = check_ZDw(project_pi(M, r, M.n, k, ell))
        points += 1
        kinds = {v.axiom for v in rep.violations}
        zd13_bad += bool(kinds & {"ZD-FD", "ZD-step", "ZD-length"})
        final_bad += "ZD-final" in kinds
    # the displayed final index profile (r-1, ..., 1, 0, ..., 0) against the one the word reaches
    discrepancies = []
    for n in range(2, 5):
        for r in range(1, n):
            w = build_word(r, n, 0, 0)
            if index_profile(w, len(w)) != final_profile_displayed(r, n):
                discrepancies.append((r, n))
    elapsed = time.time() - start
    ok = cone_bad == 0 and count_bad == 0 and zd13_bad == 0 and elapsed < 300
    record(13, ok, f"cone failures {cone_bad}/{len(tables)}, D_bound mismatches {count_bad}, "
                   f"ZD (1)/(3) failures {zd13_bad}/{points}, final-flag failures {final_bad} (reported); "
                   f"displayed final profile differs for (r, n) in {discrepancies} {elapsed:.1f}s")
    assert ok
