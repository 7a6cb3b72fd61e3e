from fractions import Fraction as F

import pytest

from unitcat import duality as D
from unitcat import enriched as E
from unitcat import posets as P
from unitcat import tnorms as T
from unitcat import vcat as VC

LUK = T.lukasiewicz()
ONE = VC.unit_category(LUK)
HALF_PAIR = VC.vcategory(LUK, [["1", "1/2"], ["0", "1"]])
CHAIN2 = VC.from_poset(P.chain(2), LUK)


def test_enumerate_cx_point():
    sp = E.enumerate_cx(ONE, 2)
    assert sp.functions == ((F(0),), (F(1, 2),), (F(1),))


def test_enumerate_cx_half_pair_filters_one_table():
    sp = E.enumerate_cx(HALF_PAIR, 2)
    assert sp.size == 8
    assert (F(0), F(1)) not in sp.index
    assert (F(0), F(1, 2)) in sp.index


def test_enumerate_cx_agrees_with_poset_space():
    for size in (1, 2, 3):
        for Q in P.all_posets(size):
            got = set(E.enumerate_cx(VC.from_poset(Q, LUK), 2).functions)
            want = set(D.function_space(Q, LUK, 2).functions)
            assert got == want


def test_cx_contains_representables():
    for X in (HALF_PAIR, CHAIN2):
        sp = E.enumerate_cx(X, 2)
        for x in range(X.size):
            i = E.representable_index(sp, x)
            assert sp.functions[i] == tuple(X.a(y, x) for y in range(X.size))


def test_cogeneration():
    assert E.is_cogenerated(ONE, n=2)
    assert E.is_cogenerated(HALF_PAIR, n=2)
    for size in (1, 2, 3):
        for Q in P.all_posets(size):
            assert E.is_cogenerated(VC.from_poset(Q, LUK), n=2)


def test_cogeneration_fails_on_truncated_space():
    sp = E.enumerate_cx(HALF_PAIR, 2)
    constants = [i for i, f in enumerate(sp.ifuncs) if len(set(f)) == 1]
    truncated = D.FunctionSpace(
        HALF_PAIR, LUK, 2, [sp.functions[i] for i in constants]
    )
    assert not E.is_cogenerated(HALF_PAIR, truncated)


def test_enriched_c_point_example():
    sp = E.enumerate_cx(ONE, 2)
    f = E.enriched_c((F(1, 2),), sp)
    assert f.table == (F(0), F(0), F(1, 2))
    zero = E.enriched_c((F(0),), sp)
    assert set(zero.table) == {F(0)}


def test_enriched_c_identity_on_poset_base():
    sp = E.enumerate_cx(CHAIN2, 2)
    assert E.enriched_c_map(CHAIN2.matrix, sp, sp) == tuple(range(sp.size))


def test_retract_formulas_agree_and_invert():
    sp = E.enumerate_cx(ONE, 2)
    f = E.enriched_c((F(1, 2),), sp)
    assert E.retract_phi(f) == (F(1, 2),)
    assert E.retract_phi_simplified(f) == (F(1, 2),)
    zero = D.Functional(sp, [F(0)] * sp.size)
    assert E.retract_phi(zero) == (F(0),)


def test_retract_of_upper_set_functional_is_indicator():
    Q = P.chain(2)
    X = VC.from_poset(Q, LUK)
    sp = E.enumerate_cx(X, 2)
    for a in P.upper_sets(Q):
        phi_func = D.phi_of(a, D.function_space(Q, LUK, 2))
        aligned = D.Functional(sp, [phi_func(D.function_space(Q, LUK, 2).index[f]) for f in sp.functions])
        row = E.retract_phi(aligned)
        assert row == tuple(F(1) if a >> x & 1 else F(0) for x in range(2))


def test_grid_distributors():
    rows = E.grid_distributors_into(CHAIN2, 2)
    # monotone rows toward the top of the chain
    assert all(r[0] <= r[1] for r in rows)
    assert (F(0), F(1, 2)) in rows and (F(1), F(1)) in rows
    assert len(rows) == 6


def test_adjunction_audit_examples():
    for X in (ONE, HALF_PAIR, CHAIN2):
        rep = E.adjunction_audit(X, 2)
        assert rep.passed and not rep.findings


def test_adjunction_audit_skips_non_cogenerated(monkeypatch):
    monkeypatch.setattr(E, "is_cogenerated", lambda X, space=None, n=None: False)
    rep = E.adjunction_audit(HALF_PAIR, 2)
    assert rep.checked == 0 and any("skipped" in x for x in rep.notes)


def test_off_grid_category_is_rejected():
    with pytest.raises(T.GridNotClosed):
        E.enumerate_cx(VC.vcategory(LUK, [["1", "1/2"], ["0", "1"]]), 1)


def test_lemma1():
    Xc = CHAIN2
    sp = E.enumerate_cx(Xc, 2)
    assert E.lemma1_audit(Xc, 2).passed
    assert E.lemma1_audit(HALF_PAIR, 2).passed
    assert E.lemma1_audit(ONE, 2).passed
    # also across the minimum tensor, which the statement admits
    Xm = VC.from_poset(P.chain(2), T.minimum())
    assert E.lemma1_audit(Xm, 2).passed


def test_pointsep():
    for X in (ONE, HALF_PAIR, CHAIN2):
        assert E.pointsep_extension_audit(X, 2).passed


def test_twovalued():
    assert E.twovalued_audit(CHAIN2.matrix, CHAIN2, CHAIN2, 2).passed
    rep = E.twovalued_audit(((F(0), F(1, 2)),), ONE, CHAIN2, 2)
    assert rep.passed and rep.notes  # fractional row: lax fails, equivalence holds
    assert E.twovalued_audit(((F(0), F(0)),), ONE, CHAIN2, 2).passed
    with pytest.raises(ValueError):
        E.twovalued_audit(((F(1), F(1)),), ONE, HALF_PAIR, 2)


def test_tensor_maximality_flagship():
    rep = E.tensor_maximality_audit(CHAIN2, (F(1), F(1, 2)), 2)
    assert rep.passed
    rep = E.tensor_maximality_audit(CHAIN2, (F(1), F(1)), 2)
    assert rep.passed
    rep = E.tensor_maximality_audit(CHAIN2, (F(0), F(0)), 2)
    assert rep.passed


def test_tensor_maximality_guards():
    with pytest.raises(ValueError):
        E.tensor_maximality_audit(HALF_PAIR, (F(1), F(1)), 2)


def test_category_enumeration_includes_half_pair():
    cats = list(E.enumerate_enriched_categories(2, LUK, 2))
    assert any(X.matrix == HALF_PAIR.matrix for X in cats)
    for X in cats:
        assert VC.is_separated(X)
        assert E.is_cogenerated(X, n=2)


def test_enriched_c_functorial_on_grid_distributors():
    from itertools import product as iproduct

    from unitcat import vrel as VR

    q = LUK
    X = CHAIN2
    spx = E.enumerate_cx(X, 2)
    vals = T.GridChain(2).elements

    def grid_endodistributors():
        for flat in iproduct(vals, repeat=4):
            mat = (flat[:2], flat[2:])
            ok = all(
                q.tensor(q.tensor(X.a(x2, x), mat[x][y]), X.a(y, y2)) <= mat[x2][y2]
                for x in range(2)
                for y in range(2)
                for x2 in range(2)
                for y2 in range(2)
            )
            if ok:
                yield mat

    dists = list(grid_endodistributors())
    assert len(dists) > 1
    for phi in dists[:12]:
        for phi2 in dists[:12]:
            composite = VR.compose(
                VR.vrelation(q, phi2), VR.vrelation(q, phi)
            ).matrix
            via = E.enriched_c_map(composite, spx, spx)
            c1 = E.enriched_c_map(phi, spx, spx)
            c2 = E.enriched_c_map(phi2, spx, spx)
            assert via == tuple(c1[i] for i in c2)


def test_enriched_product_mode_needs_unit_grid():
    with pytest.raises(T.GridNotClosed):
        E.enumerate_cx(VC.unit_category(T.product()), 2)
    sp = E.enumerate_cx(VC.unit_category(T.product()), 1)
    assert sp.size == 2
    rep = E.adjunction_audit(VC.unit_category(T.product()), 1)
    assert rep.passed
