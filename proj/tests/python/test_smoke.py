"""End-to-end smoke tests for the Python bindings."""

import pytest

import polyfield as pf


def test_group_orders():
    assert pf.group_order("[4,3,4,3]", 3) == 103680
    assert pf.group_order("[3,3]", 5) == 24
    assert pf.group_order("[inf]", 11) == 22
    assert pf.group_order("rank6-G", 3) == 24261120


def test_classification():
    c = pf.classify("[4,3,4,3]", 3)
    assert c["order"] == 103680
    assert c["primary"] == "O(5,3,0)"
    assert c["radical_dim"] == 0

    c7 = pf.classify("[4,3,4,3]", 7)
    assert "O1(5,7,0)" in c7["tags"]

    f4 = pf.classify("[3,4,3]", 3)
    assert f4["exceptional_overlap"]


def test_cgroup_verdicts():
    assert pf.is_string_cgroup("[4,3,4,3]", 3)["is_cgroup"]
    for p in (3, 5, 7):
        assert pf.is_string_cgroup("[inf,3,inf]", p)["is_cgroup"]
    bad = pf.is_string_cgroup("[inf,3,inf]", 11)
    assert not bad["is_cgroup"]
    assert bad["intersection_order"] == 12
    assert bad["expected_order"] == 6
    assert bad["witness"]


def test_polytope_summary():
    s = pf.summarize("[3,3]", 5)
    assert s["f_vector"] == [4, 6, 4]
    assert s["schlafli"] == [3, 3]

    t = pf.summarize("[4,3,4,3]", 3)
    assert t["flag_count"] == 103680
    assert t["facet"] == "{4,3,4}_(3,0,0)"

    with pytest.raises(Exception):
        pf.summarize("[inf,3,inf]", 11)


def test_toroid_and_petrie():
    t = pf.toroid_type("[4,3,4]", 3)
    assert t["name"] == "{4,3,4}_(3,0,0)"
    assert t["vertex_count"] == 27

    h = pf.petrie("rank6-G", 3)
    assert h["order"] == 13
    assert h["char_poly"] == [1, 0, -1, -1, -1, 0, 1]


def test_duality_and_orders():
    for p in (3, 5, 7, 11, 13):
        w = pf.duality_check_H(p)
        assert w["ok"]
    assert pf.orthogonal_order(5, 3, 0) == 103680
    assert pf.orthogonal_order(4, 3, 1) == 1152


def test_analyze_report():
    r = pf.analyze("[4,3,4,3]", 3)
    assert r["schema"] == "polyfield/1"
    assert r["order"] == 103680
    assert r["cgroup"]["is_cgroup"] is True
    assert not r["capacity_notices"]
    assert pf.report_passes(r)


def test_suites_registry_and_fast_suite():
    names = pf.suite_names()
    assert len(names) == 6
    assert "euclidean" in names
    report = pf.run_suite("euclidean")
    assert pf.report_passes(report)
