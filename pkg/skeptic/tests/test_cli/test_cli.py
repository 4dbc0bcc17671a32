"""Tests for the skeptic command line"""
import json

import pytest

from skeptic.golden import fixture

pytestmark = [pytest.mark.order(12), pytest.mark.timeout(300)]


def _json(output: str):
    return json.loads(output[output.index("{"): output.rindex("}") + 1])


class Test_examples:
    def test_all_pass(self, invoke):
        result = invoke("examples")
        assert result.exit_code == 0
        assert "PASS dominance tree" in result.output
        assert "FAIL" not in result.output


class Test_br:
    def test_worked_model(self, invoke):
        """
        :GIVEN: P(Y1=1) in [0.6, 1] and P(Y2=1) in [0, 1]
        :WHEN:  the binary relevance report is requested
        :THEN:  label 1 is predicted, label 2 abstained on, and interval
                dominance keeps all four vectors
        """
        result = invoke("br", "0.6:1,0:1")
        assert result.exit_code == 0
        report = _json(result.output)
        assert report["maximal"] == "1*"
        assert report["gamma_minimax"] == "1*"
        assert len(report["interval_dominance"]) == 4
        assert report["expected_loss"]["00"] == pytest.approx([0.6, 2.0])

    def test_bad_intervals(self, invoke):
        assert invoke("br", "0.7:0.2").exit_code == 2
        assert invoke("br", "half").exit_code == 2


class Test_decide:
    def test_alg1(self, invoke):
        result = invoke("decide", str(fixture("dominance_tree.json")))
        assert result.exit_code == 0
        decision = _json(result.output)
        assert decision["set"] == ["00", "10", "11"]
        assert decision["checks"] == 8
        assert decision["partial"] is None
        assert decision["outer"] == "**"

    def test_known_member(self, invoke):
        """
        :GIVEN: the two-label tree
        :WHEN:  decided with a known maximal member
        :THEN:  the set is unchanged and 3^2 - 2^2 checks are made
        """
        result = invoke("decide", str(fixture("dominance_tree.json")), "--known-member")
        assert result.exit_code == 0
        decision = _json(result.output)
        assert decision["set"] == ["00", "10", "11"]
        assert decision["checks"] == 5
        assert decision["outer"] == "**"

    def test_finite_has_no_outer(self, invoke):
        result = invoke(
            "decide", str(fixture("finite_credal_set.json")), "--finite", "--rule", "naive"
        )
        assert result.exit_code == 0
        assert "outer" not in _json(result.output)

    def test_outer(self, invoke):
        result = invoke("decide", str(fixture("dominance_tree.json")), "--rule", "outer")
        assert _json(result.output)["partial"] == "**"
        assert _json(result.output)["outer"] == "**"

    def test_eadmissible(self, invoke):
        result = invoke(
            "decide",
            str(fixture("finite_credal_set.json")),
            "--finite",
            "--rule",
            "eadmissible",
            "--loss",
            "zero-one",
        )
        assert result.exit_code == 0
        assert _json(result.output)["set"] == ["00", "10", "11"]

    def test_naive_zero_one(self, invoke):
        result = invoke(
            "decide",
            str(fixture("finite_credal_set.json")),
            "--finite",
            "--rule",
            "naive",
            "--loss",
            "zero-one",
        )
        decision = _json(result.output)
        assert len(decision["set"]) == 4
        assert decision["checks"] == 12

    def test_rule_needs_hamming(self, invoke):
        result = invoke(
            "decide", str(fixture("dominance_tree.json")), "--loss", "zero-one"
        )
        assert result.exit_code == 2

    def test_eadmissible_needs_finite(self, invoke):
        result = invoke(
            "decide", str(fixture("dominance_tree.json")), "--rule", "eadmissible"
        )
        assert result.exit_code == 2

    def test_unreadable(self, invoke, tmp_path):
        assert invoke("decide", str(tmp_path / "absent.json")).exit_code == 1


class Test_drivers:
    def test_simulate(self, invoke, tmp_path):
        out = tmp_path / "results" / "sim"
        result = invoke(
            "simulate", "--m", "2,3", "--epsilon", "0.45", "--trees", "5",
            "--repetitions", "1", "-o", str(out),
        )
        assert result.exit_code == 0
        assert out.with_suffix(".csv").exists()
        assert _json(out.with_suffix(".json").read_text())["passed"] is True

    def test_scale_flag_names(self, invoke):
        result = invoke("simulate", "--help")
        assert result.exit_code == 0
        assert "--full-scale" in result.output
        assert "--paper-scale" in result.output

    def test_simulate_bad_epsilon(self, invoke, tmp_path):
        result = invoke("simulate", "--epsilon", "0.7", "-o", str(tmp_path / "sim"))
        assert result.exit_code == 1

    def test_timing(self, invoke, tmp_path):
        out = tmp_path / "timing"
        result = invoke("timing", "--m", "1,2", "--instances", "1", "-o", str(out))
        assert result.exit_code == 0
        assert "PASS alg1_check_count" in result.output

    def test_dataset(self, invoke, tmp_path):
        out = tmp_path / "dataset"
        result = invoke(
            "dataset", "--levels", "0", "--s", "0,1", "--methods", "skeptic,precise",
            "--cv-repeats", "1", "--cv-folds", "2", "-o", str(out),
        )
        assert result.exit_code == 0
        assert out.with_suffix(".json").exists()


class Test_write_config:
    def test_write(self, invoke, tmp_path):
        target = tmp_path / "copy.ini"
        result = invoke("write-config", str(target))
        assert result.exit_code == 0
        text = target.read_text()
        assert "[simulation]" in text
        assert "config_file" not in text
