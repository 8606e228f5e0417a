from __future__ import annotations

from dataclasses import replace

import pytest

from tpclab import ledger
from tpclab.graph import is_connected, make_complete, make_cycle
from tpclab.settings import set_settings
from tpclab.suite import (
    MONOTONICITY_PAIRS,
    SUITES,
    Criterion,
    SuiteReport,
    checker_exactness,
    graph_name,
    monotonicity_pairs,
    pseudo_coloring,
    run_suite,
)


def test_graph_name_is_graph6():
    assert graph_name(make_complete(3)) == "Bw"
    assert graph_name(make_cycle(4)) == graph_name(make_cycle(4))


def test_pseudo_coloring_is_deterministic():
    g = make_cycle(5)
    first = pseudo_coloring(g, 7)
    assert first == pseudo_coloring(g, 7)
    assert first.colors_used() <= {1, 2, 3}
    assert any(pseudo_coloring(g, i) != first for i in range(20))


def test_report_counts_and_json():
    report = SuiteReport("demo", (Criterion("a", True), Criterion("b", False, "nope")))
    assert (report.passed, report.failed) == (1, 1)
    payload = report.to_json()
    assert payload["criteria"][1] == {"name": "b", "passed": False, "detail": "nope"}
    assert set(payload) == {"suite", "passed", "failed", "criteria"}


def test_checker_exactness_small():
    criteria = checker_exactness(n_max=4)
    assert len(criteria) == 1 + 2 + 6
    assert all(c.passed for c in criteria), [c for c in criteria if not c.passed]


def test_run_suite_records_in_ledger(pinned_settings):
    set_settings(replace(pinned_settings, enumeration=replace(pinned_settings.enumeration, max_vertices=3)))
    (report,) = run_suite("checker-exactness")
    assert report.failed == 0
    events = ledger.read_events(event_type="suite")
    assert events[-1]["suite"] == "checker-exactness"
    assert events[-1]["passed"] == report.passed


def test_monotonicity_sweep_has_fifty_distinct_pairs():
    pairs = monotonicity_pairs()
    assert len(pairs) == MONOTONICITY_PAIRS == 50
    assert len({(g, sub) for g, sub in pairs}) == 50
    for g, sub in pairs:
        assert sub.is_spanning_subgraph_of(g)
        assert is_connected(sub)
    assert any(sub.num_edges >= sub.n for _, sub in pairs)


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_suite("bogus")


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(SUITES))
def test_full_suites_pass(name):
    (report,) = run_suite(name)
    assert report.failed == 0, [c for c in report.criteria if not c.passed]
