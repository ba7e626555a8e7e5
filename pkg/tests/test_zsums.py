from __future__ import annotations

import itertools
import unittest
from fractions import Fraction

from genocchi.errors import ParameterError
from genocchi.exact import LAMBDA
from genocchi.zsums import composition_count, z_sum, z_sum_multi, z_sum_multi_gf


class TestZSums(unittest.TestCase):
    def test_plain_sum(self) -> None:
        self.assertEqual(z_sum(2, 3, 1), 6)
        self.assertEqual(z_sum(0, 4, 1), 0)
        self.assertEqual(z_sum(1, 0, 5), 0)
        self.assertEqual(z_sum(1, 2, Fraction(1, 2)), Fraction(1, 2) - Fraction(1, 2))
        self.assertEqual(z_sum(1, 2, LAMBDA), LAMBDA - LAMBDA**2 * 2)

    def test_order_one_matches_plain_sum(self) -> None:
        for k, m in itertools.product(range(4), range(1, 4)):
            with self.subTest(k=k, m=m):
                self.assertEqual(z_sum_multi(k, 1, m, 2), z_sum(k, m, 2))

    def test_enumeration_matches_generating_function(self) -> None:
        for k, l, m in itertools.product(range(4), range(1, 4), range(1, 4)):
            with self.subTest(k=k, l=l, m=m):
                self.assertEqual(
                    z_sum_multi(k, l, m, Fraction(1, 3)),
                    z_sum_multi_gf(k, l, m, Fraction(1, 3)),
                )

    def test_symbolic_lambda(self) -> None:
        self.assertEqual(z_sum_multi(2, 2, 2, LAMBDA), z_sum_multi_gf(2, 2, 2, LAMBDA))

    def test_zero_power_convention(self) -> None:
        # 0**0 = 1: with l = 0 only the empty weight contributes
        self.assertEqual(z_sum_multi(0, 0, 3, 1), 1)
        self.assertEqual(z_sum_multi_gf(0, 0, 3, 1), 1)

    def test_composition_count(self) -> None:
        self.assertEqual(composition_count(4, 3), 15)
        self.assertEqual(composition_count(0, 0), 1)

    def test_negative_arguments(self) -> None:
        with self.assertRaises(ParameterError):
            z_sum(-1, 2, 1)
        with self.assertRaises(ParameterError):
            z_sum_multi(1, -1, 2, 1)


if __name__ == "__main__":
    unittest.main()
