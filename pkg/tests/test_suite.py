from __future__ import annotations

import json
import unittest
from dataclasses import replace
from fractions import Fraction

from genocchi.errors import ParameterError, PrecisionError, SingularParameterError
from genocchi.exact import LAMBDA
from genocchi.identities import IDENTITY_IDS, Status, SuiteConfig, build_report, run_suite, verify
from genocchi.identities.base import DEFAULT_EXPECTED_FAILURES
from genocchi.identities.suite import evaluate_outcome, iter_grid, summarize

SMALL = SuiteConfig(
    max_n=3,
    orders=(1, 2),
    odd_m=(1, 3),
    even_m=(2,),
    z_max_n=2,
    z_m=(1, 2),
    lambdas=(Fraction(1, 2),),
    spot_lambdas=(Fraction(1), Fraction(1, 3)),
    lowering_orders=(1, 2),
    lowering_max_k=4,
    abc_orders=(1,),
    derivative_orders=(1,),
    log_samples=1,
    y_samples=(Fraction(1, 2),),
    p_samples=(Fraction(2),),
    pde_orders=(1,),
    pde_precision=5,
    family_max_n=6,
    family_checks=False,
)


class TestSuiteRun(unittest.TestCase):
    @classmethod
    def setUpClass(cls) -> None:
        cls.seen: list = []
        cls.results = run_suite(SMALL, on_result=cls.seen.append)

    def test_every_id_in_catalog_order(self) -> None:
        order = []
        for r in self.results:
            if not order or order[-1] != r.id:
                order.append(r.id)
        self.assertEqual(tuple(order), IDENTITY_IDS)
        self.assertEqual(len(self.seen), len(self.results))

    def test_only_documented_discrepancies(self) -> None:
        outcome = evaluate_outcome(SMALL, self.results)
        self.assertEqual(outcome.unexpected, ())
        self.assertEqual(outcome.resolved, ())
        self.assertTrue(outcome.ok)
        documented = {r.id for r in self.results if r.status is Status.DOCUMENTED}
        self.assertEqual(documented, set(DEFAULT_EXPECTED_FAILURES))

    def test_summary_counts(self) -> None:
        summary = summarize(self.results)
        self.assertEqual(set(summary), {"pass", "fail", "documented_discrepancy"})
        self.assertEqual(sum(summary.values()), len(self.results))
        self.assertEqual(summary["fail"], 0)

    def test_report_is_plain_json(self) -> None:
        report = build_report(SMALL, self.results)
        text = json.dumps(report, sort_keys=True)
        self.assertEqual(json.loads(text)["summary"], summarize(self.results))
        self.assertEqual(report["family_checks"], [])
        self.assertEqual(report["config"]["precision"], SMALL.resolved_precision())
        self.assertTrue(report["ok"])


class TestSelection(unittest.TestCase):
    def test_only(self) -> None:
        config = replace(SMALL, only=frozenset({"COMPLEMENT"}))
        results = run_suite(config)
        self.assertEqual({r.id for r in results}, {"COMPLEMENT"})
        self.assertEqual(len(results), (config.max_n + 1) * len(config.lambdas))

    def test_empty_selection(self) -> None:
        config = replace(SMALL, only=frozenset())
        self.assertEqual(list(iter_grid(config)), [])
        report = build_report(config, [])
        self.assertEqual(report["summary"], {"pass": 0, "fail": 0, "documented_discrepancy": 0})
        self.assertEqual(report["resolved_errata"], [])

    def test_resolved_erratum_fails_the_run(self) -> None:
        config = replace(
            SMALL, only=frozenset({"C2_12"}), expected_failures=DEFAULT_EXPECTED_FAILURES | {"C2_12"}
        )
        outcome = evaluate_outcome(config, run_suite(config))
        self.assertEqual(outcome.resolved, ("C2_12",))
        self.assertFalse(outcome.ok)

    def test_unexpected_failure(self) -> None:
        config = replace(SMALL, only=frozenset({"C2_14"}), expected_failures=frozenset())
        results = run_suite(config)
        self.assertIn(Status.FAIL, {r.status for r in results})
        self.assertEqual(evaluate_outcome(config, results).unexpected, ("C2_14",))

    def test_logs_progress(self) -> None:
        config = replace(SMALL, only=frozenset({"C2_3"}))
        with self.assertLogs("genocchi.identities.suite", level="INFO") as cm:
            run_suite(config)
        self.assertTrue(any("checking C2_3" in line for line in cm.output))


class TestVerify(unittest.TestCase):
    def test_family_checks_only_for_unrestricted_runs(self) -> None:
        restricted = verify(replace(SMALL, only=frozenset({"COMPLEMENT"}), family_checks=True))
        self.assertEqual(restricted["family_checks"], [])
        report = verify(replace(SMALL, only=None, family_checks=True))
        names = {c["name"] for c in report["family_checks"]}
        self.assertIn("euler_number_formula", names)
        self.assertIn("lambda_spot", names)
        self.assertIn("euler_number_formula", report["conventions"])
        self.assertTrue(report["ok"], report["unexpected_failures"])

    def test_symbolic_lambda_through_order_two(self) -> None:
        config = replace(SMALL, max_n=4, lambdas=(LAMBDA,), orders=(1, 2), abc_orders=(1, 2), family_checks=True)
        report = verify(config)
        self.assertEqual(report["unexpected_failures"], [])
        self.assertEqual(report["resolved_errata"], [])
        self.assertTrue(report["ok"])
        documented = {r["id"] for r in report["results"] if r["status"] == "documented_discrepancy"}
        self.assertEqual(documented, set(DEFAULT_EXPECTED_FAILURES))
        self.assertEqual(report["config"]["lambdas"], ["symbolic"])
        self.assertEqual(report["summary"]["fail"], 0)


class TestSuiteConfig(unittest.TestCase):
    def test_from_mapping(self) -> None:
        config = SuiteConfig.from_mapping(
            {
                "max_n": "3",
                "lambdas": "1/2, symbolic",
                "only": "T2_1,C2_3",
                "expect_pass": ["T2_9"],
                "logs": "0,1,1; 1/2,2,1",
                "integral_bounds": [[0, 1]],
                "odd_m": "1,3",
                "family_checks": False,
                "report": "ignored.json",
            }
        )
        self.assertEqual(config.max_n, 3)
        self.assertEqual(config.lambdas, (Fraction(1, 2), LAMBDA))
        self.assertEqual(config.only, frozenset({"T2_1", "C2_3"}))
        self.assertNotIn("T2_9", config.expected_failures)
        self.assertIn("C2_10", config.expected_failures)
        self.assertEqual(config.logs[1], (Fraction(1, 2), Fraction(2), Fraction(1)))
        self.assertEqual(config.integral_bounds, ((Fraction(0), Fraction(1)),))
        self.assertEqual(config.odd_m, (1, 3))
        self.assertFalse(config.family_checks)

    def test_from_mapping_errors(self) -> None:
        cases = [
            ({"only": "NOPE"}, ParameterError),
            ({"odd_m": [2]}, ParameterError),
            ({"even_m": [3]}, ParameterError),
            ({"lambdas": "-1"}, SingularParameterError),
            ({"max_n": "x"}, ParameterError),
            ({"max_n": True}, ParameterError),
            ({"logs": "0,1"}, ParameterError),
            ({"logs": "1,1,1"}, ParameterError),
            ({"y_samples": "0"}, ParameterError),
            ({"lowering_orders": [0]}, ParameterError),
            ({"precision": 5}, PrecisionError),
            ({"pde_precision": 0}, PrecisionError),
        ]
        for cfg, error in cases:
            with self.subTest(cfg=cfg):
                with self.assertRaises(error):
                    SuiteConfig.from_mapping(cfg)

    def test_precision(self) -> None:
        self.assertEqual(SMALL.required_precision(), 10)
        self.assertEqual(replace(SMALL, precision=40).resolved_precision(), 40)
        with self.assertRaises(PrecisionError):
            replace(SMALL, precision=9).resolved_precision()
        self.assertGreaterEqual(SuiteConfig().required_precision(), 13)

    def test_log_tuples_are_seeded(self) -> None:
        config = replace(SMALL, log_samples=8)
        tuples = config.log_tuples()
        self.assertEqual(tuples, config.log_tuples())
        self.assertEqual(len(tuples), 9)
        self.assertEqual(tuples[0], SMALL.logs[0])
        for la, lb, lc in tuples:
            self.assertNotEqual(la, lb)
            self.assertNotEqual(lc, 0)
        self.assertNotEqual(tuples, replace(config, seed=1).log_tuples())

    def test_to_json(self) -> None:
        obj = replace(SMALL, only=frozenset({"T2_4", "C2_3"})).to_json()
        self.assertEqual(obj["only"], ["C2_3", "T2_4"])
        self.assertEqual(obj["lambdas"], ["1/2"])
        self.assertEqual(obj["logs"], [["0", "1", "1"]])
        self.assertEqual(SuiteConfig().to_json()["lambdas"], ["symbolic"])


if __name__ == "__main__":
    unittest.main()
