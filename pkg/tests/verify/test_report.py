"""
Tests for cohexp.verify.report
"""

import json

import pytest

from cohexp.verify import CheckResult, CheckStatus, VerificationReport


def _report(*statuses):
    return VerificationReport(
        p=3,
        checks=[
            CheckResult(check_id=f"c{i}", anchor=f"quote {i}", claim=f"claim {i}", status=s)
            for i, s in enumerate(statuses)
        ],
    )


class TestVerificationReport:
    """Tests for VerificationReport."""

    def test_cited_does_not_fail(self):
        """Test that cited checks neither pass nor fail the report."""
        report = _report(CheckStatus.PASS, CheckStatus.CITED)
        assert report.passed
        assert [c.check_id for c in report.cited()] == ["c1"]
        assert not report.get("c1").computed

    def test_first_failure(self):
        """Test that the first failing check is reported."""
        report = _report(CheckStatus.PASS, CheckStatus.FAIL, CheckStatus.FAIL)
        assert not report.passed
        assert report.first_failure.check_id == "c1"

    def test_get_unknown(self):
        """Test that an unknown id raises KeyError."""
        with pytest.raises(KeyError):
            _report().get("missing")

    def test_json_statuses_are_strings(self):
        """Test the JSON encoding of statuses and details."""
        report = _report(CheckStatus.CITED)
        report.checks[0].details["degree"] = 4
        data = json.loads(report.to_json())
        assert data["checks"][0]["status"] == "cited"
        assert data["checks"][0]["details"] == {"degree": 4}
        assert data["verdict"] == []

    def test_anchor_serialised_under_external_name(self):
        """Test that the anchor is written as paper_anchor and read back from it."""
        report = _report(CheckStatus.PASS)
        data = json.loads(report.to_json())
        assert data["checks"][0]["paper_anchor"] == "quote 0"
        assert "anchor" not in data["checks"][0]
        again = VerificationReport.model_validate(data)
        assert again.checks[0].anchor == "quote 0"
