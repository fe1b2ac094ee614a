"""
Tests for cohexp.verify.pipeline
"""

import json

import pytest

from cohexp.exceptions import ContractError
from cohexp.fpla import UnsupportedFieldError
from cohexp.verify import CheckStatus, CounterexamplePipeline, verify_counterexample


@pytest.fixture(scope="module")
def report3():
    return verify_counterexample(3, threads=2)


class TestPipelineP3:
    """Tests for the full run at p = 3."""

    def test_passes(self, report3):
        """Test that every computed check passes."""
        assert report3.passed, report3.first_failure
        assert report3.first_failure is None

    @pytest.mark.parametrize(
        "check_id",
        [
            "algebra.sl2_valid",
            "algebra.sl2_brackets",
            "group.cocycle_condition",
            "group.p_power_map",
            "group.commutators",
            "group.center_is_w",
            "group.order",
            "group.exponent",
            "algebra.subalgebra_count",
            "algebra.explicit_subalgebra",
            "algebra.h_not_in_s",
            "lattice.maximal_count",
            "lattice.frattini_of_g",
            "lattice.frattini_of_maximals",
            "lattice.frattini_shape",
            "lattice.index_p2_intersection",
            "lattice.index_p2_cross_check",
            "lattice.witness_family",
            "lattice.lift_meets_w",
            "lattice.lift_words",
            "lattice.line_preimages_meet_in_w",
            "lattice.family_intersection",
            "lattice.coset_homomorphisms",
            "lattice.embedding",
            "lattice.image_exponents",
            "sylow.image_orders",
            "sylow.wreath",
            "summary.divisibility_chain",
        ],
    )
    def test_computed_check(self, report3, check_id):
        """Test that each computed check is present and passes."""
        check = report3.get(check_id)
        assert check.status is CheckStatus.PASS
        assert check.computed

    def test_constants(self, report3):
        """Test the numbers recorded in the details."""
        assert report3.get("group.order").details["order"] == 729
        assert report3.get("group.exponent").details["exponent"] == 9
        assert report3.get("group.cocycle_condition").details["sweep"] == (
            "exhaustive, 19683 triples"
        )
        assert report3.get("algebra.subalgebra_count").details["count"] == 4
        assert report3.get("algebra.explicit_subalgebra").details["alpha"] == 1
        assert report3.get("lattice.maximal_count").details["count"] == 13
        assert report3.get("lattice.frattini_of_g").details["order"] == 27
        assert report3.get("lattice.witness_family").details["members"] == 17
        assert report3.get("lattice.embedding").details["degree"] == 9
        assert report3.get("sylow.wreath").details == {"order": 81, "exponent": 9}
        assert report3.get("summary.divisibility_chain").details["chain"] == [9, 9, 27, 729]

    def test_cited_facts_are_never_passed(self, report3):
        """Test that the cited inputs are exactly the five external facts."""
        cited = report3.cited()
        assert [c.check_id for c in cited] == [
            "cited.e_of_g",
            "cited.group_uniqueness",
            "cited.sylow_conjugacy",
            "cited.subgroup_divisibility",
            "cited.nakayama_rim",
        ]
        assert all(c.status is CheckStatus.CITED and not c.computed for c in cited)

    def test_e_of_g_is_the_cited_degree_four_fact(self, report3):
        """Test that e(G) = p^3 enters only as the cited H^4 dependency."""
        check = report3.get("cited.e_of_g")
        assert check.status is CheckStatus.CITED
        assert check.anchor == "elements of order p^3 in H^4(G)"
        assert check.claim == "H^4(G) contains elements of order p^3, so e(G) = p^3"
        assert check.details == {"kind": "external computation", "degree": 4}
        assert not any(c.check_id.startswith("cohom.") for c in report3.checks)

    def test_every_check_has_an_anchor(self, report3):
        """Test that each check carries its source quote."""
        assert all(c.anchor for c in report3.checks)
        assert report3.get("group.order").anchor == "G has exponent p^2 and order p^6"
        assert report3.get("algebra.h_not_in_s").anchor == "h is not in S"
        assert report3.get("lattice.index_p2_intersection").anchor == (
            "the intersection of all subgroups of index p^2 in G is trivial"
        )
        assert report3.get("lattice.lift_meets_w").anchor == (
            "has a subgroup K of index p^2 in G lying over it"
        )

    def test_frattini_method_is_justified(self, report3):
        """Test that the intersection check records both directions of the Frattini argument."""
        details = report3.get("lattice.index_p2_intersection").details
        assert details["order"] == 1
        assert "contains Phi(M)" in details["containment"]
        assert "intersection of the maximal subgroups of M" in details["attainment"]

    def test_verdict(self, report3):
        """Test the four verdict lines."""
        assert report3.verdict == [
            "e_inf(G) divides 9 (computed: index-9 subgroups meet trivially)",
            "G not elementary abelian (computed: exp = 9)",
            "e(G) = 27 (cited: order-27 classes in H^4(G))",
            "conclusion: e_inf(G) = 9 != e(G) = 27",
        ]

    def test_json_is_canonical(self, report3):
        """Test that the JSON form is sorted and reloads."""
        text = report3.to_json()
        data = json.loads(text)
        assert data["p"] == 3
        assert list(data) == sorted(data)
        assert report3.to_json() == text

    def test_json_field_names(self, report3):
        """Test the external field names of each check."""
        data = json.loads(report3.to_json())
        for check in data["checks"]:
            assert set(check) == {"check_id", "paper_anchor", "claim", "status", "details"}
            assert check["status"] in {"pass", "fail", "cited"}
        by_id = {c["check_id"]: c for c in data["checks"]}
        assert by_id["group.exponent"]["paper_anchor"] == "G has exponent p^2 and order p^6"


@pytest.mark.slow
class TestPipelineP5:
    """Tests for the full run at p = 5."""

    def test_passes(self):
        """Test that p = 5 verifies with sampled sweeps."""
        report = verify_counterexample(5, threads=2)
        assert report.passed, report.first_failure
        assert report.get("group.order").details["order"] == 15625
        assert report.get("group.exponent").details["exponent"] == 25
        assert report.get("algebra.explicit_subalgebra").details["alpha"] == 4
        assert report.get("lattice.maximal_count").details["count"] == 31
        assert report.get("lattice.witness_family").details["members"] == 37
        assert report.get("lattice.embedding").details["degree"] == 25
        assert report.get("sylow.wreath").details == {"order": 15625, "exponent": 25}
        assert report.verdict[-1] == "conclusion: e_inf(G) = 25 != e(G) = 125"


class TestArguments:
    """Tests for argument checking."""

    def test_p_two(self):
        """Test that p = 2 is rejected as a field error."""
        with pytest.raises(UnsupportedFieldError, match="odd prime required"):
            CounterexamplePipeline(2)

    @pytest.mark.parametrize("p", [11, 13])
    def test_unsupported_primes(self, p):
        """Test that primes outside the supported set are contract errors."""
        with pytest.raises(ContractError):
            CounterexamplePipeline(p)

    def test_reduced_stages_for_seven(self):
        """Test that p = 7 runs only the reduced stage list."""
        pipeline = CounterexamplePipeline(7)
        names = [stage.__name__ for stage in pipeline.stages]
        assert names == [
            "validate_algebra",
            "build_group",
            "order_and_exponent",
            "check_subalgebras",
        ]
