"""Acceptance gate: one test per criterion, each printing its verdict.

Run with `pytest tests/test_acceptance.py -v -s` to see one line per
criterion.  Criteria 5 and 6 share the poset sweep via a module fixture.
"""

import time
from fractions import Fraction as F
from itertools import product as iproduct

import pytest

from unitcat import duality as D
from unitcat import enriched as E
from unitcat import posets as P
from unitcat import stone as S
from unitcat import suites as SU
from unitcat import tnorms as T
from unitcat import vcat as VC
from unitcat.reports import emit_report, strip_timing

LUK = T.lukasiewicz()
MIN = T.minimum()
PROD = T.product()
CHAIN2 = P.chain(2)
POINT = P.chain(1)


def verdict(num, label, ok, extra=""):
    print(f"criterion {num:>2} [{'PASS' if ok else 'FAIL'}] {label}{extra}")
    assert ok, f"criterion {num}: {label}"


def test_criterion_1_quantale_axioms():
    start = time.perf_counter()
    for q in (LUK, MIN):
        for n in range(1, 13):
            rep = T.verify_quantale_axioms(q, T.GridChain(n))
            assert rep.passed, (q.name, n, rep.failures)
    two_seg = T.ordinal_sum((F(0), F(1, 2), T.Lukasiewicz()), (F(1, 2), F(1), T.Product()))
    for q in (PROD, two_seg):
        rep = T.verify_quantale_axioms_sampled(q, seed=0, count=10_000)
        assert rep.passed and rep.checked == 10_000
    elapsed = time.perf_counter() - start
    verdict(1, "quantale axioms + adjunction", elapsed < 10, f" ({elapsed:.1f}s < 10s)")


def test_criterion_2_zero_divisors():
    rep = T.no_zero_divisor_audit(LUK, T.GridChain(6))
    ok = rep.passed and any("nilpotency witness" in n for n in rep.notes)
    sample = T.rational_sample(T.SampleSpec(seed=1, count=100))
    assert len(sample) ** 2 == 10_000
    rep2 = T.no_zero_divisor_audit(PROD, T.SampleSpec(seed=1, count=100))
    verdict(2, "no zero divisors", ok and rep2.passed and rep2.checked > 0)


def test_criterion_3_monad_laws():
    start = time.perf_counter()
    count = 0
    for size in range(1, 5):
        for Q in P.all_posets(size):
            assert len(P.upper_sets(Q)) <= 16  # VVX enumeration stays under 2^16
            rep = P.verify_monad_laws(Q)
            assert rep.passed, (Q.leq, rep.failures)
            count += 1
    elapsed = time.perf_counter() - start
    ok = count == 242 and elapsed < 30
    verdict(3, f"monad laws on {count} posets", ok, f" ({elapsed:.1f}s < 30s)")


def test_criterion_4_flagship_representability():
    sp = D.function_space(CHAIN2, LUK, 2)
    passing = sorted(
        t for t in iproduct(range(3), repeat=6) if D.passes_cut(sp, t)
    )
    expected = sorted(D.phi_of(a, sp).itable for a in P.upper_sets(CHAIN2))
    ok = passing == expected and len(passing) == 3

    sp1 = D.function_space(POINT, MIN, 2)
    passing1 = sorted(
        t for t in iproduct(range(3), repeat=3) if D.passes_cut(sp1, t, drop_tenlax=True)
    )
    expected1 = sorted(D.phi_of(a, sp1).itable for a in P.upper_sets(POINT))
    ok = ok and passing1 == expected1 and len(passing1) == 2
    verdict(4, "flagship 729-scan representability oracle", ok)


@pytest.fixture(scope="module")
def condition_sweep():
    """Shared sweep for criteria 5 and 6: every (poset <= 4, n <= 3, tensor)."""
    rows = []
    for size in range(1, 5):
        for Q in P.all_posets(size):
            for n in (1, 2, 3):
                for q in (LUK, MIN):
                    sp = D.function_space(Q, q, n)
                    for a in P.upper_sets(Q):
                        rows.append((Q, n, q, sp, a, D.check_conditions(D.phi_of(a, sp))))
    return rows


def test_criterion_5_condition_table(condition_sweep):
    count = 0
    for Q, n, q, sp, a, rep in condition_sweep:
        assert rep.holds("mon", "act", "sup", "tenlax", "minus"), (Q.leq, n, q.name, a)
        assert (rep.top is None) == (a != 0), (Q.leq, n, q.name, a)
        assert (rep.ten is None) == P.is_irreducible(Q, a), (Q.leq, n, q.name, a)
        count += 1
    verdict(5, f"condition table over {count} upper-set functionals", count == 10_728)


def test_criterion_6_zero_anti_roundtrips(condition_sweep):
    for Q, n, q, sp, a, _ in condition_sweep:
        phi = D.phi_of(a, sp)
        assert D.zero_set(phi) == a == D.anti_set(phi), (Q.leq, n, q.name, a)
    max_gap = 0
    for Q in (CHAIN2, P.vee(), P.antichain(2)):
        for q in (LUK, MIN):
            sp = D.function_space(Q, q, 2)
            corpus = D.make_corpus(sp, 400, seed=6)
            drop = T.nilpotent_free(q)
            for phi in corpus:
                if not D.passes_cut(sp, phi.itable, drop_tenlax=drop):
                    continue
                z = D.zero_set(phi)
                assert z == D.anti_set(phi)
                rebuilt = D.phi_of(z, sp)
                gap = max(
                    abs(x - y) for x, y in zip(rebuilt.itable, phi.itable)
                )
                max_gap = max(max_gap, gap)
    verdict(6, "zero/anti roundtrips", max_gap == 0, f" (max gap {max_gap})")


def test_criterion_7_meet_counterexample():
    sp = D.function_space(POINT, MIN, 2)
    phi = D.Functional(sp, [min(F(1, 2), f[0]) for f in sp.functions])
    rep = D.check_conditions(phi)
    ok = (
        rep.holds("mon", "act", "sup")
        and rep.minus is not None
        and all(phi != D.phi_of(a, sp) for a in P.upper_sets(POINT))
    )
    verdict(7, "meet-action counterexample detected", ok)


def test_criterion_8_functoriality_and_restriction():
    import random

    spaces = {}

    def space(Q):
        if Q.leq not in spaces:
            spaces[Q.leq] = D.function_space(Q, LUK, 2)
        return spaces[Q.leq]

    def composite_ok(X, Y, Z, phi, phi2):
        cz, cy, cx = space(Z), space(Y), space(X)
        via = D.c_of_distributor(P.kleisli_compose(phi2, phi), cz, cx)
        c1 = D.c_of_distributor(phi, cy, cx)
        c2 = D.c_of_distributor(phi2, cz, cy)
        return via == tuple(c1[i] for i in c2)

    small = [Q for size in (1, 2) for Q in P.all_posets(size)]
    exhaustive = 0
    for X in small:
        for Y in small:
            phis = list(P.continuous_distributors(X, Y))
            for Z in small:
                for phi2 in P.continuous_distributors(Y, Z):
                    for phi in phis:
                        assert composite_ok(X, Y, Z, phi, phi2)
                        exhaustive += 1

    rng = random.Random(0)
    pool = [Q for size in range(1, 5) for Q in P.all_posets(size)]
    ups = {Q.leq: P.upper_sets(Q) for Q in pool}

    def rand_dist(X, Y):
        raw = [ups[Y.leq][rng.randrange(len(ups[Y.leq]))] for _ in range(X.size)]
        rows = []
        for x in range(X.size):
            acc = (1 << Y.size) - 1
            for x2 in range(X.size):
                if X.leq[x2][x]:
                    acc &= raw[x2]
            rows.append(acc)
        return tuple(
            tuple(int(rows[x] >> y & 1) for y in range(Y.size)) for x in range(X.size)
        )

    for _ in range(1000):
        X, Y, Z = (pool[rng.randrange(len(pool))] for _ in range(3))
        assert composite_ok(X, Y, Z, rand_dist(X, Y), rand_dist(Y, Z))

    total_partial = 0
    pool3 = [Q for size in (1, 2, 3) for Q in P.all_posets(size)]
    for X in pool3:
        for Y in pool3:
            for phi in P.continuous_distributors(X, Y):
                rep = D.total_partial_audit(phi, X, Y, LUK, 2)
                assert rep.passed, (X.leq, Y.leq, phi)
                total_partial += 1
    verdict(
        8,
        f"functoriality ({exhaustive} exhaustive + 1000 sampled) "
        f"and {total_partial} restriction checks",
        True,
    )


def test_criterion_9_stone_weierstrass():
    flagship = S.sw_audit(CHAIN2, LUK, 2)
    ok = flagship.passed and any("exact equality" in x for x in flagship.notes)
    count = 0
    for size in range(1, 5):
        for Q in P.all_posets(size):
            for n in (1, 2, 3):
                rep = S.sw_audit(Q, LUK, n)
                assert rep.passed, (Q.leq, n, rep.failures)
                count += 1
    verdict(9, f"density mechanics over {count} instances", ok and count == 726)


def test_criterion_10_enriched_roundtrip():
    seen_half_pair = False
    count = 0
    for size in (1, 2, 3):
        for n in (1, 2):
            for X in E.enumerate_enriched_categories(size, LUK, n):
                if any(v == F(1, 2) for row in X.matrix for v in row):
                    seen_half_pair = True
                rep = E.adjunction_audit(X, n)
                assert rep.passed and not rep.findings, (X.matrix, n, rep)
                assert E.lemma1_audit(X, n).passed, (X.matrix, n)
                assert E.pointsep_extension_audit(X, n).passed, (X.matrix, n)
                count += 1
    verdict(
        10,
        f"enriched roundtrip exact on {count} categories",
        seen_half_pair and count > 0,
    )


def test_criterion_11_tensor_maximality():
    X = VC.from_poset(CHAIN2, LUK)
    rep = E.tensor_maximality_audit(X, (F(1), F(1, 2)), 2)
    verdict(11, "tensor maximality flagship", rep.passed)


def test_criterion_12_determinism():
    texts = []
    for _ in range(2):
        rep = SU.run_suite(
            SU.SuiteConfig(suite="functoriality", max_size=3, corpus=60, seed=13)
        )
        texts.append(strip_timing(emit_report(rep, "json")))
    ok = texts[0] == texts[1]
    for _ in range(2):
        rep = SU.run_suite(SU.SuiteConfig(suite="representability", max_size=2, seed=3))
        texts.append(strip_timing(emit_report(rep, "table")))
    verdict(12, "byte-identical witness sections", ok and texts[2] == texts[3])
