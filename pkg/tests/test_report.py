import json

import pytest

from lyalg import io
from lyalg.linalg import Tensor
from lyalg.report import SUITES, UnknownSuite, VerificationReport, run_suite
from lyalg.yang_baxter import TwoTensor


def test_every_suite_runs_on_some_fixture():
    seen = set()
    for name in io.fixture_names():
        obj = io.load(name)
        for kind, table in SUITES.items():
            if isinstance(obj, kind):
                for suite in table:
                    report = run_suite(obj, suite)
                    assert report.checks, (name, suite)
                    seen.add((kind.__name__, suite))
    expected = {(k.__name__, s) for k, t in SUITES.items() for s in t}
    # only a raw matched-pair file is not shipped
    assert expected - seen == {("MatchedPairData", "matched-pair")}


def test_default_suites_pass_except_the_example_bialgebra():
    for name in io.fixture_names():
        report = run_suite(io.load(name))
        assert report.passed == (name != "bialg_dim2"), name


def test_failing_report_shows_residual_counts(dim2):
    r = TwoTensor(dim2, Tensor([[0, 1], [1, 0]]))
    report = run_suite(r)
    assert not report.passed and report.exit_code == 1
    assert "nonzero residual entries" in report.to_text()


def test_json_shape():
    report = run_suite(io.load("dim2"))
    doc = json.loads(report.to_json())
    assert set(doc) == {"subject", "suite", "verdict", "checks"}
    assert set(doc["checks"][0]) == {"name", "anchor", "passed", "residual"}
    assert "seconds" in report.as_dict(timing=True)


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite(io.load("dim2"), "cybe")
    with pytest.raises(UnknownSuite):
        run_suite(object())


def test_empty_report_passes():
    assert VerificationReport("x", "y").passed
