from __future__ import annotations

import itertools
import unittest
from fractions import Fraction

from genocchi.errors import ParameterError
from genocchi.exact import LAMBDA, XPoly
from genocchi.identities import (
    Status,
    check_C2_8,
    check_C2_10,
    check_C2_11,
    check_C2_12,
    check_C2_14,
    check_T2_7,
    check_T2_9,
    check_T2_13,
    check_T2_15,
)


class TestAlternatingSums(unittest.TestCase):
    def test_rational_grid(self) -> None:
        for n, l, m, lam in itertools.product(range(4), (1, 2), (1, 2, 3), (Fraction(1), Fraction(1, 2))):
            with self.subTest(n=n, l=l, m=m, lam=lam):
                res = check_T2_7(n, l, m, lam, precision=12)
                self.assertEqual(res.status, Status.PASS, res.residual)

    def test_lambda_one(self) -> None:
        for n in range(5):
            with self.subTest(n=n):
                self.assertEqual(check_C2_8(n, 3, 2).status, Status.PASS)


class TestOddRecursion(unittest.TestCase):
    def test_order_one_holds(self) -> None:
        for n, m, lam in itertools.product(range(7), (1, 3, 5), (Fraction(1), Fraction(2), Fraction(-1, 3))):
            with self.subTest(n=n, m=m, lam=lam):
                self.assertEqual(check_C2_11(n, m, lam, precision=10).status, Status.PASS)
        self.assertEqual(check_C2_12(4, 3).status, Status.PASS)

    def test_order_one_symbolic(self) -> None:
        for n in range(4):
            with self.subTest(n=n):
                self.assertTrue(check_T2_9(n, 1, 3, LAMBDA, precision=6).holds)

    def test_higher_order_is_a_documented_discrepancy(self) -> None:
        res = check_T2_9(3, 2, 3, 1)
        self.assertEqual(res.status, Status.DOCUMENTED)
        self.assertEqual(res.residual, XPoly.constant(-108))
        self.assertEqual(res.to_json()["residual_sample"], "-108")
        self.assertEqual(check_C2_10(3, 2, 3).residual, XPoly.constant(-108))
        strict = check_T2_9(3, 2, 3, 1, expected_failures=())
        self.assertEqual(strict.status, Status.FAIL)

    def test_trivial_multiplier(self) -> None:
        for n in range(5):
            with self.subTest(n=n):
                self.assertEqual(check_T2_9(n, 2, 1, Fraction(1, 2)).status, Status.PASS)

    def test_even_m_rejected(self) -> None:
        with self.assertRaises(ParameterError):
            check_T2_9(2, 1, 4, 1)


class TestEvenRecursion(unittest.TestCase):
    def test_order_one_holds(self) -> None:
        for n, m, lam in itertools.product(range(7), (2, 4), (Fraction(1), Fraction(1, 2))):
            with self.subTest(n=n, m=m, lam=lam):
                self.assertEqual(check_T2_13(n, 1, m, lam, precision=10).status, Status.PASS)

    def test_higher_order_statuses(self) -> None:
        statuses = {check_C2_14(n, 2, 2).status for n in range(6)}
        self.assertIn(Status.DOCUMENTED, statuses)
        self.assertNotIn(Status.FAIL, statuses)

    def test_odd_m_rejected(self) -> None:
        with self.assertRaises(ParameterError):
            check_T2_13(2, 1, 3, 1)


class TestOrderLowering(unittest.TestCase):
    def test_grid(self) -> None:
        for k, n, lam in itertools.product(range(1, 7), (1, 2, 3), (Fraction(1), Fraction(1, 2), Fraction(-3))):
            with self.subTest(k=k, n=n, lam=lam):
                self.assertEqual(check_T2_15(k, n, lam, precision=10).status, Status.PASS)

    def test_symbolic(self) -> None:
        for k in range(1, 5):
            with self.subTest(k=k):
                self.assertTrue(check_T2_15(k, 2, LAMBDA, precision=6).holds)

    def test_ranges(self) -> None:
        with self.assertRaises(ParameterError):
            check_T2_15(2, 0, 1)
        with self.assertRaises(ParameterError):
            check_T2_15(0, 1, 1)


if __name__ == "__main__":
    unittest.main()
