from fractions import Fraction as Q

import pytest
from hypothesis import given, settings, strategies as st

from leviroots import (
    InvalidDesignation,
    InvalidPair,
    all_simple_types,
    bracket_image,
    designation,
    highest_weight_roots,
    lowest_weight_roots,
    nilradical_trace,
    root_system,
    sign_rule_check,
    troot_coroot,
    troot_of,
    troot_string,
    troot_string_report,
    troot_system,
)


def des_a2_keep2(a2):
    return designation(a2, kept=(2,))


def test_designation_validation(a2):
    with pytest.raises(InvalidDesignation):
        designation(a2, kept=(1, 2))  # must be proper
    with pytest.raises(InvalidDesignation):
        designation(a2, deleted=())
    with pytest.raises(InvalidDesignation):
        designation(a2, kept=(3,))
    with pytest.raises(InvalidDesignation):
        designation(a2, kept=(1,), deleted=(2,))
    d = designation(a2, deleted=(1,))
    assert sorted(d.kept) == [2] and d.deleted == (1,)


def test_troot_of_borel(a2):
    borel = designation(a2, kept=())
    for phi in a2.roots:
        assert troot_of(borel, phi) == phi


def test_troot_of_projection(a2):
    des = des_a2_keep2(a2)
    assert troot_of(des, (0, 1)) is None  # alpha2 lives in the Levi factor
    assert troot_of(des, (1, 0)) == (1,)
    assert troot_of(des, (1, 1)) == (1,)
    assert troot_of(des, (-1, -1)) == (-1,)


def test_a2_keep2_worked_example(a2):
    trsys = troot_system(des_a2_keep2(a2))
    assert trsys.keys == ((-1,), (1,))
    space = trsys.spaces[(1,)]
    assert set(space.roots) == {(1, 0), (1, 1)}
    assert space.highest == (1, 1)  # alpha1+alpha2+alpha2 is not a root
    assert space.lowest == (1, 0)
    # projection of alpha1: alpha1 + alpha2/2
    beta = trsys.simples[0]
    assert trsys.troot_vec(beta) == (Q(1), Q(1, 2))
    assert trsys.inner(beta, beta) == Q(3, 2)
    # nilradical trace: delta = 2*beta, (delta, beta) = 3
    assert trsys.delta_key == (2,)
    assert nilradical_trace(trsys) == (Q(2), Q(1))
    assert trsys.inner(trsys.delta_key, beta) == 3
    assert troot_coroot(trsys, beta) == (Q(4, 3), Q(2, 3))


def test_borel_all_dims_one():
    for name in ("A3", "B3", "G2"):
        rs = root_system(name)
        trsys = troot_system(designation(rs, kept=()))
        assert len(trsys.keys) == len(rs.roots)
        assert all(len(sp.roots) == 1 for sp in trsys.spaces.values())


def test_space_partition_counts():
    rs = root_system("B4")
    for deleted in [(1,), (2,), (1, 3), (2, 4), (1, 2, 3, 4)]:
        des = designation(rs, deleted=deleted)
        trsys = troot_system(des)
        in_levi = sum(
            1 for phi in rs.roots if not any(phi[j - 1] for j in deleted)
        )
        assert sum(len(s.roots) for s in trsys.spaces.values()) + in_levi == len(rs.roots)


def test_highest_and_lowest_certificates(g2):
    des = designation(g2, deleted=(2,))
    trsys = troot_system(des)
    raising = [(1, 0)]  # the kept simple root
    for key in trsys.positives:
        space = trsys.spaces[key]
        assert highest_weight_roots(g2, space.roots, raising) == [space.highest]
        assert lowest_weight_roots(g2, space.roots, raising) == [space.lowest]


def test_g2_mark2_parabolic_spaces(g2):
    trsys = troot_system(designation(g2, deleted=(2,)))
    assert trsys.keys == ((-2,), (-1,), (1,), (2,))
    assert len(trsys.spaces[(1,)].roots) == 4
    assert len(trsys.spaces[(2,)].roots) == 1
    assert trsys.spaces[(2,)].roots == ((3, 2),)


def test_bracket_image_borel(a2):
    trsys = troot_system(designation(a2, kept=()))
    assert bracket_image(trsys, (1, 0), (0, 1)) == ((1, 1),)
    # no root sums at all
    assert bracket_image(trsys, (1, 0), (1, 1)) == ()
    with pytest.raises(InvalidPair):
        bracket_image(trsys, (1, 0), (-1, 0))  # lands in the Levi factor


def test_bracket_image_g2_beta_beta(g2):
    trsys = troot_system(designation(g2, deleted=(2,)))
    img = bracket_image(trsys, (1,), (1,))
    assert img == tuple(trsys.spaces[(2,)].roots)


def test_bracket_fills_target_space(f4):
    trsys = troot_system(designation(f4, deleted=(1, 4)))
    for mu in trsys.keys:
        for nu in trsys.keys:
            s = tuple(a + b for a, b in zip(mu, nu))
            if s not in trsys.spaces:
                continue
            assert set(bracket_image(trsys, mu, nu)) == set(trsys.spaces[s].roots)


def test_sign_rule_spot(a2):
    trsys = troot_system(designation(a2, kept=()))
    rep = sign_rule_check(trsys, (1, 0), (0, 1))
    assert rep.ok and rep.inner_sign == -1
    rep = sign_rule_check(trsys, (1, 0), (1, 1))
    assert rep.ok and rep.inner_sign == 1
    rep = sign_rule_check(trsys, (1, 0), (1, 0))
    assert rep.ok  # equal arguments: difference vanishes, rule vacuous


def test_troot_string_examples(a2, g2):
    borel = troot_system(designation(a2, kept=()))
    assert troot_string(borel, (1, 0), (0, 1)) == (0, 1)
    trsys = troot_system(designation(g2, deleted=(2,)))
    beta = (1,)
    assert troot_string(trsys, beta, beta) == (-3, 1)
    assert troot_string(trsys, None, beta) == (-2, 2)  # through zero
    assert troot_string(trsys, (2,), beta) == (-4, 0)


def test_troot_string_reports_pass(g2):
    trsys = troot_system(designation(g2, deleted=(2,)))
    weights = [None] + list(trsys.keys)
    for gamma in weights:
        for nu in trsys.keys:
            rep = troot_string_report(trsys, gamma, nu)
            assert rep.ok, (gamma, nu, rep.failures)
            assert rep.p <= 0 <= rep.q


def test_troot_string_rejects_non_troot(g2):
    trsys = troot_system(designation(g2, deleted=(2,)))
    with pytest.raises(InvalidPair):
        troot_string(trsys, (5,), (1,))
    with pytest.raises(InvalidPair):
        troot_string(trsys, (1,), (3,))


def test_document_fields(a2):
    doc = troot_system(des_a2_keep2(a2)).document()
    assert doc["schema"] == "leviroots.trootsystem/1"
    assert doc["kept"] == [2] and doc["deleted"] == [1]
    assert [s["dim"] for s in doc["spaces"]] == [2, 2]
    assert doc["trace_vector"] == ["2", "1"]


# -- property sweeps over small designations --------------------------------

SMALL = [t for t in all_simple_types(4)]


@st.composite
def small_designation(draw):
    stype = draw(st.sampled_from(SMALL))
    rs = root_system(stype)
    nodes = list(range(1, rs.rank + 1))
    deleted = draw(st.sets(st.sampled_from(nodes), min_size=1).map(sorted))
    return designation(rs, deleted=deleted)


@settings(max_examples=60, deadline=None)
@given(small_designation())
def test_mirror_spaces(des):
    trsys = troot_system(des)
    for key in trsys.positives:
        neg = tuple(-c for c in key)
        assert {tuple(-c for c in r) for r in trsys.spaces[key].roots} == set(
            trsys.spaces[neg].roots
        )


@settings(max_examples=60, deadline=None)
@given(small_designation())
def test_delta_positive_on_positives(des):
    trsys = troot_system(des)
    for nu in trsys.positives:
        assert trsys.inner(trsys.delta_key, nu) > 0


@settings(max_examples=40, deadline=None)
@given(small_designation())
def test_simples_span_positives(des):
    trsys = troot_system(des)
    # every positive key is a nonnegative integer combination of unit keys
    for key in trsys.positives:
        assert all(c >= 0 for c in key)
    for s in trsys.simples:
        assert sum(s) == 1 and set(s) <= {0, 1}


@settings(max_examples=40, deadline=None)
@given(small_designation(), st.data())
def test_string_report_random_pairs(des, data):
    trsys = troot_system(des)
    keys = list(trsys.keys)
    gamma = data.draw(st.sampled_from([None] + keys))
    nu = data.draw(st.sampled_from(keys))
    rep = troot_string_report(trsys, gamma, nu)
    assert rep.ok, rep.failures
