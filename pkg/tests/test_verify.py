import json

import pytest

from carterlab.verify import (CARTER_CATALOG, REGISTRY, CheckReport,
                              list_cases, parse_reports, regenerate_derived,
                              render_reports, run_all, run_case)


def test_case_ids_unique_and_anchored():
    cases = list_cases()
    ids = [c.id for c in cases]
    assert len(ids) == len(set(ids))
    assert all(c.anchor for c in cases)
    assert all(c.tier in ("quick", "full") for c in cases)


def test_tier_filtering():
    quick = {c.id for c in list_cases("quick")}
    full = {c.id for c in list_cases("full")}
    assert "norm2syl-psl2-7" in quick
    assert "pgammal-2-27-witness" in full
    assert not quick & full
    with pytest.raises(ValueError):
        list_cases("weekly")


def test_unknown_case_id():
    with pytest.raises(KeyError):
        run_case("definitely-not-a-case")


def test_empty_registry_runs_to_empty_list():
    from carterlab.verify.report import Registry
    assert Registry().run_all() == []


def test_duplicate_case_ids_rejected():
    from carterlab.verify.report import CheckCase, Registry
    reg = Registry()
    case = CheckCase("x", "d", "a", "quick", (), {}, 1.0, lambda: ({}, ""))
    reg.add(case)
    with pytest.raises(ValueError):
        reg.add(case)


def test_single_case_runs_and_replays():
    r = run_case("norm2syl-psl2-7")
    assert r.status == "pass"
    assert r.metrics["order"] == 168
    assert r.metrics["ms"] >= 0


def test_explicit_skips_carry_reasons():
    for cid in ("carter-semilinear-2g2", "syl2-fieldaut-psl2-8",
                "carter-semilinear-2a2-witness"):
        r = run_case(cid)
        assert r.status == "skip" and r.reason, cid


def test_report_json_round_trip():
    reports = [run_case("psl23-power"), run_case("carter-semilinear-2g2")]
    text = render_reports(reports, "json")
    parsed = parse_reports(text)
    assert [p.to_dict() for p in parsed] == [r.to_dict() for r in reports]
    assert render_reports([], "json") == "[]"


def test_text_rendering_marks_failures_distinctly():
    ok = CheckReport("a", "pass", "anchor", {"ms": 1}, "fine")
    bad = CheckReport("b", "fail", "anchor", {"ms": 2}, "broken")
    text = render_reports([ok, bad])
    lines = text.splitlines()
    assert lines[0].startswith("PASS") and lines[1].startswith("FAIL!")


def test_run_all_is_order_independent_and_parallel_safe():
    ids = ["psl23-power", "highest-root-C3", "torus-A1", "carter-sym3"]
    seq = {r.id: r.status for cid in ids for r in [run_case(cid)]}
    par = {r.id: r.status
           for r in REGISTRY.run_all("quick", parallelism=4)
           if r.id in ids}
    assert seq == par


@pytest.mark.slow
def test_catalog_expectations_match_oracle_regeneration():
    regenerated = regenerate_derived()
    assert regenerated  # at least the oracle-sized groups
    for case_id, values in regenerated.items():
        _, count, order, _ = CARTER_CATALOG[case_id]
        assert values["classes"] == count, case_id
        if count:
            assert values["rep_order"] == order, case_id


def test_catalog_group_specs_present():
    for c in list_cases():
        assert isinstance(c.group_specs, tuple)


def test_quick_cases_stay_within_five_times_budget():
    by_id = {c.id: c for c in list_cases("quick")}
    for r in run_all("quick"):
        if r.status == "skip":
            continue
        assert r.metrics["ms"] <= 5000 * by_id[r.id].budget_s, \
            (r.id, r.metrics["ms"])
