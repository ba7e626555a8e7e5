from __future__ import annotations

import unittest
from dataclasses import replace
from fractions import Fraction

from genocchi.errors import ParameterError, PrecisionError, SingularParameterError
from genocchi.exact import LAMBDA, RatFun, XPoly
from genocchi.families import (
    Family,
    FamilySpec,
    apostol_genocchi_table,
    bernoulli_table,
    build_table,
    euler_numbers,
    euler_table,
    gandhi_genocchi,
    genocchi_abc_table,
    genocchi_from_euler,
    genocchi_table,
    hermite_genocchi,
    hermite_genocchi_ab,
    hermite_genocchi_ab_sum,
    hermite_genocchi_sum,
    lambda_power_table,
    luo_bernoulli_abc_table,
    luo_euler_ab,
    signed_genocchi_from_unsigned,
    tanh_genocchi,
    two_var_genocchi_sum_table,
    two_var_genocchi_table,
    unsigned_genocchi,
)

GENOCCHI_NUMBERS = (0, 1, -1, 0, 1, 0, -3, 0, 17, 0, -155, 0, 2073)


class TestGenocchi(unittest.TestCase):
    def test_numbers(self) -> None:
        self.assertEqual(genocchi_table(12).numbers(), GENOCCHI_NUMBERS)

    def test_rows(self) -> None:
        table = genocchi_table(6)
        expected = {
            1: (1,),
            2: (-1, 2),
            3: (0, -3, 3),
            4: (1, 0, -6, 4),
            5: (0, 5, 0, -10, 5),
            6: (-3, 0, 15, 0, -15, 6),
        }
        for n, coeffs in expected.items():
            with self.subTest(n=n):
                self.assertEqual(table.row(n).coeffs, coeffs)
        self.assertEqual(table.value(3, Fraction(1, 2)), Fraction(-3, 4))
        with self.assertRaises(PrecisionError):
            table.row(7)

    def test_independent_constructions_agree(self) -> None:
        signed = GENOCCHI_NUMBERS[:9]
        self.assertEqual(signed_genocchi_from_unsigned(unsigned_genocchi(8)), signed)
        self.assertEqual(tanh_genocchi(8)[2::2], signed[2::2])
        self.assertEqual(gandhi_genocchi(8), tuple(abs(g) for g in signed))
        for n in range(1, 5):
            with self.subTest(n=n):
                self.assertEqual(genocchi_from_euler(n), abs(GENOCCHI_NUMBERS[2 * n]))

    def test_euler_conventions(self) -> None:
        self.assertEqual(euler_numbers(6), (1, 0, -1, 0, 5, 0, -61))
        # the signed sum drifts once E_2 enters with its own sign
        self.assertNotEqual(genocchi_from_euler(2, convention="signed"), 1)
        with self.assertRaises(ParameterError):
            genocchi_from_euler(2, convention="other")
        with self.assertRaises(ParameterError):
            genocchi_from_euler(0)


class TestOtherFamilies(unittest.TestCase):
    def test_bernoulli_and_euler(self) -> None:
        b = bernoulli_table(1, 4)
        self.assertEqual(b.numbers(), (1, Fraction(-1, 2), Fraction(1, 6), 0, Fraction(-1, 30)))
        self.assertEqual(b.row(2).coeffs, (Fraction(1, 6), -1, 1))
        e = euler_table(1, 3)
        self.assertEqual(e.row(1).coeffs, (Fraction(-1, 2), 1))
        self.assertEqual(e.row(2).coeffs, (0, -1, 1))

    def test_log_families_reduce_to_classical(self) -> None:
        logs = (0, 1, 1)
        self.assertEqual(genocchi_abc_table(1, 1, logs, 6).rows, genocchi_table(6).rows)
        self.assertEqual(luo_bernoulli_abc_table(logs, 6).rows, bernoulli_table(1, 6).rows)
        self.assertEqual(luo_euler_ab(0, 1, 3), (1, Fraction(-1, 2), 0, Fraction(1, 4)))

    def test_row_scale_uses_ln_c(self) -> None:
        t = genocchi_abc_table(1, 1, (0, 1, 2), 2)
        self.assertEqual(t.row(2), genocchi_table(2).row(2).scale_x(2))

    def test_symbolic_apostol_genocchi(self) -> None:
        t1 = apostol_genocchi_table(1, LAMBDA, 3)
        self.assertEqual(t1.number(1), 2 / (LAMBDA + 1))
        self.assertEqual(t1.number(1).evaluate(1), 1)
        t2 = apostol_genocchi_table(2, LAMBDA, 3)
        self.assertEqual(t2.number(0), 0)
        self.assertEqual(t2.number(2), 8 / (LAMBDA + 1) ** 2)

    def test_symbolic_order_two_table_at_full_depth(self) -> None:
        # the gcds here defeat sympy's heuristic integer gcd
        t2 = apostol_genocchi_table(2, LAMBDA, 12)
        self.assertEqual(len(t2.rows), 13)
        rational = apostol_genocchi_table(2, 1, 12)
        self.assertEqual(t2.number(2), 8 / (LAMBDA + 1) ** 2)
        for n in range(13):
            with self.subTest(n=n):
                value = t2.number(n)
                if isinstance(value, RatFun):
                    value = value.evaluate(1)
                self.assertEqual(value, rational.number(n))

    def test_lambda_power_table_matches_direct_build(self) -> None:
        spec = FamilySpec(Family.APOSTOL_GENOCCHI, lam=LAMBDA, max_n=4)
        remapped = lambda_power_table(spec, 2, 10)
        direct = build_table(replace(spec, lam=LAMBDA**2), 10)
        self.assertEqual(remapped.rows, direct.rows)
        rational = FamilySpec(Family.APOSTOL_GENOCCHI, lam=2, max_n=4)
        self.assertEqual(lambda_power_table(rational, 2, 10).spec.lam, 4)
        with self.assertRaises(ParameterError):
            lambda_power_table(spec, 0, 10)

    def test_hermite_forms_match_convolutions(self) -> None:
        self.assertEqual(hermite_genocchi(1, 8), hermite_genocchi_sum(1, 8))
        half = Fraction(1, 2)
        self.assertEqual(hermite_genocchi_ab(half, 2, 1, 8), hermite_genocchi_ab_sum(half, 2, 1, 8))

    def test_two_var_matches_sum(self) -> None:
        self.assertEqual(
            two_var_genocchi_table(1, 2, 6).rows,
            two_var_genocchi_sum_table(1, 2, 6),
        )
        # y = 0 collapses to the one-variable rows
        self.assertEqual(two_var_genocchi_table(1, 0, 5).rows, genocchi_table(5).rows)


class TestFamilySpecValidation(unittest.TestCase):
    def test_rejections(self) -> None:
        cases = [
            (FamilySpec(Family.GENOCCHI, lam=2), ParameterError),
            (FamilySpec(Family.GENOCCHI, order=2), ParameterError),
            (FamilySpec(Family.APOSTOL_GENOCCHI, lam=-1), SingularParameterError),
            (FamilySpec(Family.GENOCCHI_ABC), ParameterError),
            (FamilySpec(Family.LUO_BERNOULLI_ABC, logs=(1, 1, 1)), SingularParameterError),
            (FamilySpec(Family.TWO_VAR_GENOCCHI), ParameterError),
            (FamilySpec(Family.HERMITE_GENOCCHI_AB, ab=(0, 1)), ParameterError),
            (FamilySpec(Family.EULER, logs=(0, 1, 1)), ParameterError),
            (FamilySpec(Family.GENOCCHI, max_n=20), PrecisionError),
        ]
        for spec, error in cases:
            with self.subTest(family=spec.family.value):
                with self.assertRaises(error):
                    build_table(spec, 20)

    def test_unknown_family_and_bad_groups(self) -> None:
        with self.assertRaises(ParameterError):
            FamilySpec("not-a-family")
        with self.assertRaises(ParameterError):
            FamilySpec(Family.GENOCCHI_ABC, logs=(0, 1))

    def test_singular_parameter_is_a_parameter_error(self) -> None:
        self.assertTrue(issubclass(SingularParameterError, ParameterError))

    def test_tables_are_cached(self) -> None:
        spec = FamilySpec(Family.EULER, order=2, max_n=5)
        self.assertIs(build_table(spec, 12), build_table(spec, 12))
        self.assertIsInstance(build_table(spec, 12).row(0), XPoly)


if __name__ == "__main__":
    unittest.main()
