import pytest

from antikahler import catalog
from antikahler.cli.textio import parse_structure
from antikahler.classify4 import standard_j
from antikahler.geometry import is_anti_kahler
from antikahler.liealg import LieAlgebra
from antikahler.scalars import signature
from antikahler.verifier import (
    PROPOSITIONS,
    SUITES,
    GeneratorConfig,
    SuiteReport,
    UnknownSuiteError,
    list_suites,
    random_anti_hermitian_metric,
    random_complex_structure,
    random_structure,
    run_suite,
    sample_rng,
    split_seed,
)


class TestDeterminism:
    def test_split_seed_stable(self):
        assert split_seed(1, 0) == split_seed(1, 0)
        assert split_seed(1, 0) != split_seed(1, 1)
        assert split_seed(1, 0) != split_seed(2, 0)

    def test_identical_configs_identical_reports(self):
        cfg = GeneratorConfig(master_seed=5, samples=5, dim=4)
        first = run_suite("theta_iff_antikahler", cfg)
        second = run_suite("theta_iff_antikahler", cfg)
        assert first.to_text() == second.to_text()
        assert first.to_machine() == second.to_machine()

    def test_structures_reproducible(self):
        cfg = GeneratorConfig(master_seed=11, samples=4, dim=4)
        for i in range(4):
            assert random_structure(cfg, i) == random_structure(cfg, i)


class TestGenerators:
    def test_random_complex_structure(self):
        rng = sample_rng(GeneratorConfig(master_seed=3), 0)
        from antikahler.scalars import Matrix
        j = random_complex_structure(rng, 4, 3)
        assert j * j == -Matrix.identity(4)

    def test_random_metric_valid_and_neutral(self):
        alg = LieAlgebra.abelian(6)
        j = standard_j(6)
        s = random_anti_hermitian_metric(alg, j, 12345, bound=3)
        assert signature(s.g) == (3, 3, 0)

    def test_random_metric_deterministic(self):
        alg = LieAlgebra.abelian(4)
        j = standard_j(4)
        assert random_anti_hermitian_metric(alg, j, 9, bound=3) == \
            random_anti_hermitian_metric(alg, j, 9, bound=3)

    def test_bi_invariant_j_forces_anti_kahler(self):
        # random metric adapted to the bi-invariant J is always anti-Kahler
        sl2c = catalog.get("sl2c_killing").structure
        for seed in range(3):
            s = random_anti_hermitian_metric(sl2c.algebra, sl2c.J, seed, bound=2)
            assert is_anti_kahler(s)

    def test_stream_mixes_verdicts(self):
        cfg = GeneratorConfig(master_seed=55, samples=12, dim=4)
        verdicts = {is_anti_kahler(random_structure(cfg, i)) for i in range(12)}
        assert verdicts == {True, False}


class TestRegistry:
    def test_unknown_suite(self):
        with pytest.raises(UnknownSuiteError):
            run_suite("nope", GeneratorConfig())

    def test_propositions_covered_exactly_once(self):
        seen = {}
        for name, (_, props) in SUITES.items():
            for prop in props:
                assert prop not in seen, f"{prop} covered twice"
                seen[prop] = name
        assert set(seen) == set(PROPOSITIONS)

    def test_list_suites(self):
        assert set(list_suites()) == set(SUITES)


class TestSuitesRun:
    @pytest.mark.parametrize("name", sorted(SUITES))
    def test_suite_passes_dim4(self, name):
        report = run_suite(name, GeneratorConfig(master_seed=17, samples=5, dim=4))
        assert report.passed, report.to_text()
        assert report.checks > 0

    @pytest.mark.parametrize("name", ["theta_iff_antikahler", "koszul_laws",
                                      "curvature_purity", "twin_metric"])
    def test_suite_passes_dim6(self, name):
        report = run_suite(name, GeneratorConfig(master_seed=23, samples=4, dim=6))
        assert report.passed, report.to_text()


class TestReportFormat:
    def test_counterexample_serializes_to_cli_format(self):
        cfg = GeneratorConfig(master_seed=1, samples=1, dim=4)
        report = SuiteReport(suite="demo", config=cfg)
        s = catalog.get("affC_std").structure
        from antikahler.cli.textio import format_structure
        report.check(False, "demo_assertion", 0, format_structure(s))
        assert not report.passed
        text = report.to_text()
        assert "result: FAIL" in text
        assert "counterexample:" in text
        payload = "\n".join(
            line[2:] for line in text.splitlines()
            if line.startswith("  "))
        assert parse_structure(payload) == s

    def test_pass_report_shape(self):
        report = run_suite("worked_example_n7",
                           GeneratorConfig(master_seed=2, samples=2, dim=4))
        text = report.to_text()
        assert text.endswith("result: PASS\n")
        machine = report.to_machine()
        assert machine["result"] == "pass"
        assert machine["failures"] == []
