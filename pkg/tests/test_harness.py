import json

import pytest

from rowmotion.backends import MatrixRing, RationalField
from rowmotion.errors import GenericityFailure, NotInvertible
from rowmotion.harness import (
    THEOREMS,
    CheckSpec,
    TheoremCheck,
    build_poset,
    default_check_specs,
    emit_report,
    labeling_orbit_report,
    run_check,
    scan_conjecture,
)
from rowmotion.poset import chain_product


def test_registry_contents():
    expected = {
        "involution", "commutation", "extension-independence", "reciprocity",
        "meteor-gorge", "bar-transfer", "nar-transfer", "nor-transfer",
        "t-star", "tau-star", "t-star-nc", "tau-star-nc", "gyration",
        "rescale-rank", "rescale-bar",
    }
    assert set(THEOREMS) == expected


def test_checkspec_validation():
    with pytest.raises(KeyError):
        CheckSpec("no-such-theorem", "chain 2x3", "rational")
    with pytest.raises(ValueError):
        CheckSpec("bar-transfer", "chain 2x3", "rational", points=0)


def test_build_poset_specs(tmp_path):
    assert build_poset("chain 2x3").n == 6
    assert build_poset("rootA 3").n == 6
    assert build_poset("random 5 7").n == 5
    path = tmp_path / "p.poset"
    path.write_text(build_poset("chain 2x2").serialize())
    assert build_poset(str(path)).covers == chain_product(2, 2).covers
    with pytest.raises(FileNotFoundError):
        build_poset("missing.poset")


def test_run_check_bar_transfer_20_points():
    rep = run_check(CheckSpec("bar-transfer", "chain 2x3", "rational", points=20, seed=1))
    assert rep["passes"] == 20 and rep["failures"] == 0 and rep["status"] == "pass"


def test_run_check_reciprocity_matrix_50_points():
    rep = run_check(CheckSpec("reciprocity", "chain 2x3", "matrix:2", points=50, seed=2))
    assert rep["passes"] == 50 and rep["failures"] == 0


def test_run_check_involution_singleton_one_point():
    rep = run_check(CheckSpec("involution", "chain 1x1", "rational", points=1, seed=3))
    assert rep["passes"] == 1 and rep["status"] == "pass"


def test_run_check_skips_ungraded_for_graded_theorems():
    # seed chosen so the random poset is ungraded
    from rowmotion.poset import random_poset
    seed = next(s for s in range(100) if not random_poset(6, s).is_graded)
    rep = run_check(CheckSpec("gyration", f"random 6 {seed}", "rational", points=5))
    assert rep["status"] == "skipped (ungraded)"


def test_run_check_deterministic():
    spec = CheckSpec("tau-star", "rootA 3", "rational", points=5, seed=9)
    assert run_check(spec) == run_check(spec)


def test_run_check_genericity_failure(monkeypatch):
    def always_degenerate(dyn, g, rng):
        raise NotInvertible(context="forced")
    monkeypatch.setitem(THEOREMS, "always-degenerate",
                        TheoremCheck(always_degenerate, False, ("rational",), "fixture"))
    with pytest.raises(GenericityFailure):
        run_check(CheckSpec("always-degenerate", "chain 1x1", "rational",
                            points=1, max_retries=2))


def test_run_check_retries_then_passes(monkeypatch):
    calls = {"n": 0}

    def degenerate_once(dyn, g, rng):
        calls["n"] += 1
        if calls["n"] == 1:
            raise NotInvertible(context="first attempt only")
        return True

    monkeypatch.setitem(THEOREMS, "degenerate-once",
                        TheoremCheck(degenerate_once, False, ("rational",), "fixture"))
    rep = run_check(CheckSpec("degenerate-once", "chain 1x1", "rational", points=1))
    assert rep["passes"] == 1 and rep["retries"] == 1 and rep["status"] == "pass"


def test_run_check_counts_failures(monkeypatch):
    flips = iter([True, False, True, False])
    monkeypatch.setitem(THEOREMS, "coin-flip",
                        TheoremCheck(lambda dyn, g, rng: next(flips), False,
                                     ("rational",), "fixture"))
    rep = run_check(CheckSpec("coin-flip", "chain 1x1", "rational", points=4))
    assert rep["passes"] == 2 and rep["failures"] == 2 and rep["status"] == "fail"


def test_default_check_specs_cover_registry():
    specs = default_check_specs(points=1)
    assert {s.theorem for s in specs} == set(THEOREMS)


def test_orbit_report_2x3_rational():
    p = chain_product(2, 3)
    rep = labeling_orbit_report(p, RationalField(), "bar", seed=0, poset_name="chain 2x3")
    d = rep.to_dict()
    assert d["order"] == 5
    assert d["returned_to_start"] and d["minimal"]
    assert {"map", "order", "seed", "failures"} <= set(d)


def test_orbit_report_exceeded():
    p = chain_product(2, 3)
    rep = labeling_orbit_report(p, RationalField(), "bar", seed=0, max_iter=3)
    assert rep.order is None
    assert rep.to_dict()["order"] == "exceeded"


def test_scan_conjecture_small_table():
    rows = scan_conjecture(2, 3, "rational", seeds=(0, 1, 2))
    by_ab = {(r["a"], r["b"]): r for r in rows}
    assert by_ab[(1, 1)]["observed"] == 2
    assert by_ab[(2, 3)]["expected"] == 5
    assert all(r["status"] == "consistent" for r in rows)


def test_scan_conjecture_matrix3_2x2():
    rows = scan_conjecture(2, 2, "matrix:3", seeds=(0,))
    by_ab = {(r["a"], r["b"]): r for r in rows}
    assert by_ab[(2, 2)]["observed"] == 4
    assert by_ab[(2, 2)]["status"] == "consistent"


def test_scan_reports_exceeded_rows_without_failing():
    rows = scan_conjecture(1, 1, "rational", seeds=(0,), max_iter=1)
    assert rows[0]["status"] == "exceeded"
    assert rows[0]["observed"] == "exceeded"


def test_orbit_report_genericity_failure(monkeypatch):
    from rowmotion import harness as h

    def always_degenerate(step, start, equal, max_iter=64):
        raise NotInvertible(context="forced")

    monkeypatch.setattr(h, "detect_order", always_degenerate)
    with pytest.raises(GenericityFailure):
        labeling_orbit_report(chain_product(1, 1), RationalField(), "bar",
                              seed=0, max_retries=2)


def test_scan_skips_beyond_element_budget():
    rows = scan_conjecture(4, 4, "rational", seeds=(0,), element_budget=12)
    by_ab = {(r["a"], r["b"]): r for r in rows}
    assert by_ab[(4, 4)]["status"] == "skipped"
    assert by_ab[(3, 4)]["status"] == "consistent"


def test_emit_report_empty():
    assert json.loads(emit_report([], "json")) == []
    assert emit_report([], "text") == b"(no reports)\n"


def test_emit_report_json_schema_and_determinism():
    p = chain_product(2, 2)
    rep = labeling_orbit_report(p, RationalField(), "bor", seed=4).to_dict()
    blob1 = emit_report([rep], "json")
    blob2 = emit_report([labeling_orbit_report(p, RationalField(), "bor", seed=4).to_dict()],
                        "json")
    assert blob1 == blob2
    parsed = json.loads(blob1)
    assert parsed[0]["map"] == "bor" and parsed[0]["order"] == 4


def test_emit_report_csv_scan_header():
    rows = scan_conjecture(1, 2, "rational", seeds=(0,))
    blob = emit_report(rows, "csv").decode()
    assert blob.splitlines()[0] == "a,b,backend,observed,expected,status"


def test_emit_report_unknown_format():
    with pytest.raises(ValueError):
        emit_report([], "yaml")


def test_concurrent_checks_share_poset_and_stay_deterministic():
    # checks are independent pure jobs: a thread pool over one shared poset
    # (exercising the lazily cached chain index) matches the sequential run
    from concurrent.futures import ThreadPoolExecutor

    p = chain_product(2, 3)
    specs = [CheckSpec(t, "chain 2x3", "rational", points=4, seed=5)
             for t in ("bar-transfer", "meteor-gorge", "tau-star", "involution")]
    sequential = [run_check(s, poset=p) for s in specs]
    fresh = chain_product(2, 3)
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(lambda s: run_check(s, poset=fresh), specs))
    assert parallel == sequential


def test_nar_and_nor_orders_match():
    # the headline equality: antichain and order rowmotion share their order.
    # Iterating past the true period on generic posets blows up exact values
    # exponentially, so compare where the order is finite and small.
    for a, b, d in [(2, 2, 2), (2, 2, 3), (2, 3, 2)]:
        p = chain_product(a, b)
        backend = MatrixRing(d)
        bar = labeling_orbit_report(p, backend, "bar", seed=1, max_iter=10)
        bor = labeling_orbit_report(p, backend, "bor", seed=1, max_iter=10)
        assert bar.order == bor.order == a + b
