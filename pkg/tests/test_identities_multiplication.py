from __future__ import annotations

import itertools
import unittest
from fractions import Fraction

from genocchi.errors import ParameterError, PrecisionError
from genocchi.exact import LAMBDA
from genocchi.identities import (
    Status,
    check_C2_2,
    check_C2_3,
    check_C2_5,
    check_C2_6,
    check_R4_2,
    check_T2_1,
    check_T2_4,
    check_T4_1,
)

LAMBDAS = (Fraction(1), Fraction(2), Fraction(1, 3))


class TestOddMultiplication(unittest.TestCase):
    def test_rational_grid(self) -> None:
        for n, l, m, lam in itertools.product(range(6), (0, 1, 2), (1, 3), LAMBDAS):
            with self.subTest(n=n, l=l, m=m, lam=lam):
                res = check_T2_1(n, l, m, lam, precision=10)
                self.assertEqual(res.status, Status.PASS, res.residual)

    def test_symbolic_lambda(self) -> None:
        for n in range(5):
            with self.subTest(n=n):
                res = check_T2_1(n, 2, 3, LAMBDA, precision=6)
                self.assertTrue(res.holds)
                self.assertEqual(res.to_json()["params"]["lambda"], "symbolic")

    def test_corollaries(self) -> None:
        for n in range(7):
            with self.subTest(n=n):
                self.assertEqual(check_C2_2(n, 2, 5).status, Status.PASS)
                self.assertEqual(check_C2_3(n, 3).status, Status.PASS)
        self.assertEqual(check_C2_3(2, 3).id, "C2_3")

    def test_parameter_checks(self) -> None:
        with self.assertRaises(ParameterError):
            check_T2_1(2, 1, 2, 1)
        with self.assertRaises(ParameterError):
            check_T2_1(-1, 1, 3, 1)
        with self.assertRaises(PrecisionError):
            check_T2_1(10, 1, 3, 1, precision=10)


class TestEvenMultiplication(unittest.TestCase):
    def test_rational_grid(self) -> None:
        for n, l, m, lam in itertools.product(range(6), (1, 2), (2, 4), (Fraction(1), Fraction(1, 2), Fraction(3))):
            with self.subTest(n=n, l=l, m=m, lam=lam):
                res = check_T2_4(n, l, m, lam, precision=10)
                self.assertEqual(res.status, Status.PASS, res.residual)

    def test_corollaries(self) -> None:
        for n in range(6):
            with self.subTest(n=n):
                self.assertEqual(check_C2_5(n, 2, 2).status, Status.PASS)
                self.assertEqual(check_C2_6(n, 4).status, Status.PASS)

    def test_odd_m_rejected(self) -> None:
        with self.assertRaises(ParameterError):
            check_T2_4(2, 1, 3, 1)


class TestTwoVariableMultiplication(unittest.TestCase):
    def test_scaled_second_variable(self) -> None:
        for n, m, y, p in itertools.product(range(6), (1, 3), (Fraction(1, 2), Fraction(-2)), (1, Fraction(1, 3))):
            with self.subTest(n=n, m=m, y=y, p=p):
                res = check_T4_1(n, m, Fraction(2), y, p, precision=10)
                self.assertEqual(res.status, Status.PASS, res.residual)

    def test_m_squared_form(self) -> None:
        for n, lam in itertools.product(range(6), (Fraction(1), Fraction(-1, 2))):
            with self.subTest(n=n, lam=lam):
                self.assertEqual(check_R4_2(n, 3, lam, Fraction(3, 2), precision=10).status, Status.PASS)

    def test_result_params(self) -> None:
        res = check_T4_1(3, 3, 1, Fraction(1, 2), 2)
        self.assertEqual(res.to_json()["params"], {"n": 3, "m": 3, "lambda": "1", "y": "1/2", "p": "2"})
        self.assertNotIn("residual", res.to_json())


if __name__ == "__main__":
    unittest.main()
