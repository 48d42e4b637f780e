"""The invariant sweep must pass on real data and fail on corrupted data."""

import pytest

from leviroots import (
    all_parabolic_designations,
    check_designation,
    check_document,
    check_node,
    check_type,
    designation,
    extended_diagram,
    root_system,
    standard_designations,
    sweep_types,
)
from leviroots import checks
from leviroots.levi import troot_system as real_troot_system


def test_all_parabolic_designations_count():
    for name, rank in (("A2", 2), ("B3", 3), ("D4", 4)):
        rs = root_system(name)
        des = all_parabolic_designations(rs)
        assert len(des) == 2 ** rank - 1
        # deterministic order: by deleted-set size, then nodes
        sizes = [len(d.deleted) for d in des]
        assert sizes == sorted(sizes)


def test_standard_designations_dedupe_rank1():
    rs = root_system("A1")
    des = standard_designations(rs)
    assert len(des) == 1  # Borel == the only maximal parabolic


def test_standard_designations_g2(g2):
    des = standard_designations(g2)
    deleted = [d.deleted for d in des]
    assert deleted == [(1, 2), (1,), (2,)]


def test_check_designation_green(g2, f4):
    for rs, deleted in ((g2, [2]), (f4, [1, 4]), (f4, [1, 2, 3, 4])):
        rep = check_designation(designation(rs, deleted=deleted))
        assert rep.failures == ()
        assert rep.counts["troots"] > 0


def test_counts_recorded(g2):
    rep = check_designation(designation(g2, deleted=[1, 2]))
    assert rep.counts["troots"] == 12
    assert rep.counts["positive"] == 6
    assert rep.counts["k_cent"] == 5


def test_corrupted_delta_detected(monkeypatch, g2):
    def corrupt(des):
        t = real_troot_system(des)
        t.delta_key = tuple(-x for x in t.delta_key)
        return t

    monkeypatch.setattr(checks, "troot_system", corrupt)
    rep = check_designation(designation(g2, deleted=[2]))
    assert {f.check for f in rep.failures} == {"trace-positivity"}


def test_corrupted_space_detected(monkeypatch):
    rs = root_system("B3")

    def corrupt(des):
        t = real_troot_system(des)
        key = t.positives[0]
        t._space_encs[key] = frozenset(list(t._space_encs[key])[1:])
        return t

    monkeypatch.setattr(checks, "troot_system", corrupt)
    rep = check_designation(designation(rs, deleted=[2]))
    names = {f.check for f in rep.failures}
    assert "bracket-law" in names


def test_check_node_green(g2, f4):
    for rs in (g2, f4):
        ext = extended_diagram(rs)
        for j in range(1, rs.rank + 1):
            rep = check_node(rs, ext, j)
            assert rep.failures == (), (rs.stype, j, rep.failures)


def test_check_type_report_shape():
    rep = check_type(root_system("B2"), all_parabolics=True)
    assert rep.ok
    assert rep.failure_count() == 0
    d = rep.as_dict()
    assert d["type"] == "B2"
    assert len(d["designations"]) == 3
    assert len(d["nodes"]) == 2


def test_check_type_a_family_runs_block_crosscheck():
    rep = check_type(root_system("A3"), all_parabolics=True)
    assert rep.ok
    assert rep.sln_failures == []


def test_check_document_shape():
    reports = sweep_types(2)
    doc = check_document(reports, all_parabolics=False)
    assert doc["schema"] == "leviroots.check/1"
    assert doc["ok"] is True
    assert doc["failure_count"] == 0
    assert doc["scope"] == "borel-and-maximal"
    assert [t["type"] for t in doc["types"]] == ["A1", "A2", "B2", "C2", "G2"]


def test_failure_serialization():
    f = checks.Failure("bracket-law", "G2 deleted=(2,)", "missing sum")
    assert f.as_dict() == {
        "check": "bracket-law",
        "subject": "G2 deleted=(2,)",
        "detail": "missing sum",
    }
