"""
命令行端到端测试
"""
import json

import pytest

from polyvol.main import EXIT_BUDGET, EXIT_CACHE, EXIT_OK, EXIT_USAGE, run_cli


def run(*argv):
    return run_cli(list(argv))


class TestCountCommand:
    """count 子命令"""

    def test_constant_margins(self, tmp_path):
        code, text = run("count", "--m", "3", "--s", "2", "--n", "3", "--t", "2",
                         "--cache", str(tmp_path / "counts.csv"))
        assert code == EXIT_OK
        assert text == "21\n"

    def test_infers_missing_sum(self):
        assert run("count", "--m", "2", "--s", "3", "--n", "3", "--no-cache") == (EXIT_OK, "7\n")

    def test_general_margins_with_oracle(self):
        code, text = run("count", "--rows", "2,1", "--cols", "1,1,1", "--oracle")
        assert code == EXIT_OK
        assert text == "3\noracle: 3 (agree)\n"

    def test_json_output(self):
        code, text = run("count", "--m", "2", "--s", "4", "--n", "2", "--t", "4",
                         "--no-cache", "--format", "json")
        assert code == EXIT_OK
        assert json.loads(text)["count"] == "5"

    def test_unbalanced_is_usage_error(self):
        code, text = run("count", "--m", "2", "--s", "3", "--n", "2", "--t", "4", "--no-cache")
        assert code == EXIT_USAGE
        assert "unbalanced margins" in text

    def test_budget_exceeded(self):
        code, text = run("count", "--m", "5", "--s", "12", "--n", "5", "--t", "12",
                         "--no-cache", "--time-budget", "1e-9")
        assert code == EXIT_BUDGET
        assert "PARTIAL" in text

    def test_corrupt_cache(self, tmp_path):
        path = tmp_path / "counts.csv"
        path.write_text("m,s,n,t,count\n3,2,3,2,21\nnot-a-record\n", encoding="utf-8")
        code, text = run("count", "--m", "2", "--s", "1", "--n", "2", "--t", "1", "--cache", str(path))
        assert code == EXIT_CACHE
        assert "3" in text

    def test_cache_transparency(self, tmp_path):
        cache = str(tmp_path / "counts.csv")
        cold = run("count", "--m", "3", "--s", "4", "--n", "4", "--t", "3", "--cache", cache)
        warm = run("count", "--m", "4", "--s", "3", "--n", "3", "--t", "4", "--cache", cache)
        direct = run("count", "--m", "3", "--s", "4", "--n", "4", "--t", "3", "--no-cache")
        assert cold == warm == direct


class TestUsage:
    """参数错误"""

    def test_missing_command(self):
        code, text = run()
        assert code == EXIT_USAGE
        assert "usage" in text

    def test_unknown_flag(self):
        code, text = run("count", "--bogus", "1")
        assert code == EXIT_USAGE
        assert "usage" in text

    def test_missing_margins(self):
        code, _ = run("count", "--m", "3", "--no-cache")
        assert code == EXIT_USAGE

    def test_unknown_log_level(self):
        code, text = run("count", "--m", "3", "--s", "2", "--n", "3", "--no-cache", "--log-level", "LOUD")
        assert code == EXIT_USAGE
        assert "usage" in text
        assert "--log-level" in text

    def test_log_level_case_insensitive(self):
        code, text = run("count", "--m", "3", "--s", "2", "--n", "3", "--no-cache", "--log-level", "debug")
        assert code == EXIT_OK
        assert text == "21\n"

    def test_subcommand_help(self):
        """--help 返回帮助文本，不退出进程"""
        code, text = run("count", "--help")
        assert code == EXIT_OK
        assert "usage" in text
        assert "--rows" in text

    def test_top_level_help(self):
        code, text = run("--help")
        assert code == EXIT_OK
        assert "table1" in text

    def test_missing_actual_file(self, tmp_path):
        code, text = run("table1", "--max-n", "1", "--no-cache",
                         "--actual-file", str(tmp_path / "missing.csv"))
        assert code == EXIT_USAGE
        assert text.startswith("error:")


class TestEhrhartAndVolume:
    """ehrhart / volume 子命令"""

    def test_volume_exact_birkhoff_two(self):
        code, text = run("volume", "--m", "2", "--n", "2", "--exact", "--no-cache")
        assert code == EXIT_OK
        assert text == "ν = 1\nvol = 2\n"

    def test_volume_exact_irrational(self):
        code, text = run("volume", "--m", "2", "--n", "3", "--exact", "--no-cache")
        assert code == EXIT_OK
        assert text == "ν = 1/3\nvol = 2/3*sqrt(3) ≈ 1.1547\n"

    def test_volume_estimate(self):
        code, text = run("volume", "--m", "2", "--n", "2")
        assert code == EXIT_OK
        assert text.startswith("vol estimate = 2.4190")

    def test_ehrhart_with_verify(self):
        code, text = run("ehrhart", "--m", "2", "--n", "3", "--verify", "--no-cache")
        assert code == EXIT_OK
        assert "c_0 = 1/3" in text
        assert "verify (z=9): true" in text

    def test_ehrhart_single_value(self):
        assert run("ehrhart", "--m", "2", "--n", "4", "--z", "1", "--no-cache") == (EXIT_OK, "H(1) = 0\n")

    def test_ehrhart_csv(self):
        code, text = run("ehrhart", "--m", "3", "--n", "3", "--format", "csv", "--no-cache")
        assert code == EXIT_OK
        lines = text.splitlines()
        assert lines[0] == "i,power,coeff"
        assert lines[1] == "0,4,1/8"
        assert lines[-1] == "4,0,1"


class TestEstimateAndHyp:
    """estimate / hyp 子命令"""

    def test_count_estimate(self):
        code, text = run("estimate", "--m", "2", "--s", "1", "--n", "2", "--t", "1")
        assert code == EXIT_OK
        assert text.startswith("count estimate = 2.63795\n")

    def test_proxy_estimate_json(self):
        code, text = run("estimate", "--m", "3", "--n", "3", "--lambda-mult", "64", "--format", "json")
        assert code == EXIT_OK
        payload = json.loads(text)
        assert payload["kind"] == "nu_proxy"
        assert payload["log"] < 0

    def test_digits_override(self):
        code, text = run("estimate", "--m", "1", "--n", "1", "--digits", "3")
        assert code == EXIT_OK
        assert text.startswith("volume estimate = 1.51\n")

    @pytest.mark.parametrize("n, rhs, satisfied", [("2000", "3.04036", "true"), ("1000", "2.7631", "false")])
    def test_hyp_examples(self, n, rhs, satisfied):
        code, text = run("hyp", "--m", n, "--n", n, "--lambda", "1", "--a", "0.4")
        assert code == EXIT_OK
        assert text == f"lhs = 3\nrhs = {rhs}\nsatisfied = {satisfied}\n"

    def test_hyp_bad_lambda(self):
        code, _ = run("hyp", "--m", "3", "--n", "3", "--lambda", "abc")
        assert code == EXIT_USAGE


class TestTable1Command:
    """table1 子命令"""

    def test_first_three_rows(self):
        code, text = run("table1", "--max-n", "3", "--no-cache", "--format", "json")
        assert code == EXIT_OK
        ratios = [row["ratio"] for row in json.loads(text)]
        assert ratios == pytest.approx([1.51345, 1.20951, 1.25408], abs=2e-5)

    def test_warm_and_cold_identical(self, tmp_path):
        cache = str(tmp_path / "counts.csv")
        first = run("table1", "--max-n", "3", "--cache", cache)
        second = run("table1", "--max-n", "3", "--cache", cache)
        assert first == second
        assert first[0] == EXIT_OK

    def test_budget_marks_partial(self):
        code, text = run("table1", "--max-n", "3", "--no-cache", "--time-budget", "1e-9")
        assert code == EXIT_BUDGET
        assert "budget exceeded" in text
        assert "PARTIAL" in text

    def test_plot(self, tmp_path):
        output = tmp_path / "ratio.png"
        code, _ = run("table1", "--max-n", "2", "--no-cache", "--plot", str(output))
        assert code == EXIT_OK
        assert output.exists()
