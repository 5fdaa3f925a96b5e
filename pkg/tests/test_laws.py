from itertools import islice

import pytest

import semiring.scalar
from commands.generators import GenConfig
from commands.laws import (
    LAWS,
    check_cauchy,
    check_det_mult,
    check_fast_vs_naive,
    check_identical_rows,
    evaluate,
    get_law,
    iter_law,
    list_laws,
    run_instance,
    run_law,
    summarize,
)
from commands.reports import LawReport, law_report_to_json, to_jsonable
from semiring.errors import UnknownLawError
from semiring.matrix import TropMatrix
from semiring.scalar import NEG_INF, TropScalar, nu, real

SMALL_RUN = GenConfig(seed=7, count=15, dims=(2, 4))

LAW_IDS = (
    "semiring-axioms",
    "freshman",
    "cauchy",
    "diagram",
    "det-transpose",
    "det-row-linearity",
    "identical-rows",
    "det-mult",
    "inverse-iff-regular",
    "products-idempotent",
    "det-inverse",
    "real-projection",
    "val-homomorphism",
    "fast-vs-naive",
)


def test_registry():
    assert tuple(LAWS) == LAW_IDS
    assert [law.law_id for law in list_laws()] == list(LAW_IDS)
    assert all(law.statement and law.pinned for law in list_laws())


def test_get_law_rejects_unknown_ids():
    with pytest.raises(UnknownLawError, match="no-such-law"):
        get_law("no-such-law")
    with pytest.raises(KeyError):
        run_law("no-such-law")


@pytest.mark.parametrize("law_id", LAW_IDS)
def test_law_holds(law_id):
    reports = run_law(law_id, SMALL_RUN)
    failing = [law_report_to_json(r) for r in reports if not r.passed]
    assert not failing
    assert len(reports) == len(get_law(law_id).pinned) + SMALL_RUN.count


def test_law_holds_with_duplicated_lines():
    config = SMALL_RUN.replace(duplicate_row_mode=True)
    for law_id in ("det-transpose", "det-mult", "inverse-iff-regular", "fast-vs-naive"):
        assert all(r.passed for r in run_law(law_id, config))


def test_reports_are_indexed_and_reproducible():
    reports = run_law("det-mult", SMALL_RUN)
    pinned = len(get_law("det-mult").pinned)
    assert [r.index for r in reports[:pinned]] == [None] * pinned
    assert [r.index for r in reports[pinned:]] == list(range(SMALL_RUN.count))
    assert {r.seed for r in reports} == {SMALL_RUN.seed}
    assert run_law("det-mult", SMALL_RUN) == reports
    assert run_instance("det-mult", SMALL_RUN, 4) == reports[pinned + 4]
    assert run_law("det-mult", SMALL_RUN.replace(seed=8)) != reports


def test_workers_keep_generation_order():
    serial = run_law("fast-vs-naive", SMALL_RUN)
    parallel = run_law("fast-vs-naive", SMALL_RUN, workers=2)
    assert parallel == serial


def test_iter_law_streams_reports():
    pinned = len(get_law("freshman").pinned)
    stream = iter_law("freshman", SMALL_RUN.replace(count=10**9))
    head = list(islice(stream, pinned + 3))
    assert [r.index for r in head[pinned:]] == [0, 1, 2]
    assert head == run_law("freshman", SMALL_RUN.replace(count=3))


def test_identical_rows_reaches_size_six():
    sizes = {len(r.instance["a"]) for r in run_law("identical-rows", SMALL_RUN.replace(count=100))}
    assert sizes == {2, 3, 4, 5, 6}


def test_zero_count_runs_pinned_instances_only():
    reports = run_law("freshman", SMALL_RUN.replace(count=0))
    assert len(reports) == len(get_law("freshman").pinned)


def _max_without_multiplicity(x: TropScalar, y: TropScalar) -> TropScalar:
    return max(x, y)


def test_idempotent_addition_is_detected(monkeypatch):
    monkeypatch.setattr(semiring.scalar, "add", _max_without_multiplicity)
    reports = run_law("semiring-axioms", SMALL_RUN)
    failing = [r for r in reports if not r.passed]
    assert failing
    assert "partial_idempotency" in failing[0].witness["failed"]
    assert summarize(reports).loc["semiring-axioms", "fail"] == len(failing)


def test_cauchy_equality_cases():
    assert check_cauchy((nu(1), real(1))) == (True, None)
    assert check_cauchy((real(1), real(1))) == (True, None)
    assert check_cauchy((NEG_INF, NEG_INF, NEG_INF)) == (True, None)
    assert check_cauchy((real(0), real(3))) == (True, None)


def test_identical_rows_check_reports_regular_matrices():
    passed, witness = check_identical_rows(TropMatrix.from_rows([[1, 1], [2, 3]]))
    assert not passed
    assert witness["det"] == {"value": "4", "optimal_count": 1}


def test_det_mult_on_singular_factor():
    a = TropMatrix.from_rows([[1, 2], [2, 3]])
    b = TropMatrix.from_rows([[3, 1], [0, 2]])
    assert check_det_mult(a, b) == (True, None)
    assert check_fast_vs_naive(a @ b) == (True, None)


def test_evaluate_serializes_inputs():
    report = evaluate(get_law("freshman"), {"x": real(1), "y": nu(2)}, seed=5, index=6)
    assert report.instance == {"x": "1", "y": "2v"}
    assert report.passed
    assert law_report_to_json(report) == {
        "law_id": "freshman",
        "verdict": "pass",
        "seed": 5,
        "index": 6,
        "instance": {"x": "1", "y": "2v"},
    }


def test_failing_report_needs_a_witness():
    with pytest.raises(ValueError, match="witness"):
        LawReport("freshman", passed=False)
    report = LawReport("freshman", passed=False, witness={"n": 2})
    assert report.verdict == "fail"
    assert law_report_to_json(report)["witness"] == {"n": 2}


def test_to_jsonable():
    matrix = TropMatrix.from_rows([["1v", "-inf"]])
    assert to_jsonable({"a": matrix, "k": (1, True, None)}) == {"a": [["1v", "-inf"]], "k": [1, True, None]}
    with pytest.raises(TypeError):
        to_jsonable(object())


def test_summarize():
    reports = [
        LawReport("b"),
        LawReport("a", passed=False, witness={}),
        LawReport("b"),
        LawReport("a"),
        LawReport("b", passed=False, witness={}),
    ]
    table = summarize(reports)
    assert list(table.index) == ["b", "a"]
    assert list(table.columns) == ["pass", "fail"]
    assert table.loc["b"].tolist() == [2, 1]
    assert table.loc["a"].tolist() == [1, 1]


def test_summarize_without_failures_or_reports():
    table = summarize([LawReport("a")])
    assert table.loc["a", "fail"] == 0
    assert summarize([]).empty
