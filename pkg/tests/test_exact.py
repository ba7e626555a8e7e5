from __future__ import annotations

import unittest
from fractions import Fraction

from genocchi.exact import (
    LAMBDA,
    ZERO,
    RatFun,
    XPoly,
    as_exact,
    binomial,
    compositions,
    exact_div,
    exact_sum,
    is_lambda_generator,
    is_symbolic,
    lambda_power,
    multinomial,
    ratfun_normalize,
    rising_factorial,
    sign,
)


class TestCombinatorics(unittest.TestCase):
    def test_binomial_out_of_range_is_zero(self) -> None:
        self.assertEqual(binomial(5, 2), 10)
        self.assertEqual(binomial(5, 6), 0)
        self.assertEqual(binomial(5, -1), 0)
        self.assertEqual(binomial(0, 0), 1)

    def test_multinomial(self) -> None:
        self.assertEqual(multinomial(4, (2, 1, 1)), 12)
        self.assertEqual(multinomial(0, ()), 1)
        with self.assertRaises(ValueError):
            multinomial(3, (1, 1))
        with self.assertRaises(ValueError):
            multinomial(1, (2, -1))

    def test_compositions_order_and_count(self) -> None:
        self.assertEqual(list(compositions(2, 2)), [(2, 0), (1, 1), (0, 2)])
        self.assertEqual(list(compositions(0, 0)), [()])
        self.assertEqual(list(compositions(1, 0)), [])
        # C(l+m-1, m-1)
        self.assertEqual(sum(1 for _ in compositions(4, 3)), 15)

    def test_small_helpers(self) -> None:
        self.assertEqual(sign(3), -1)
        self.assertEqual(sign(-2), 1)
        self.assertEqual(rising_factorial(3, 0), 1)
        self.assertEqual(rising_factorial(3, 2), 12)
        self.assertEqual(exact_div(1, 3), Fraction(1, 3))
        self.assertIsInstance(as_exact(2), Fraction)
        with self.assertRaises(TypeError):
            as_exact(True)


class TestRatFun(unittest.TestCase):
    def test_canonical_form(self) -> None:
        f = ratfun_normalize([2, 2], [4])
        self.assertEqual(f.num, (Fraction(1, 2), Fraction(1, 2)))
        self.assertEqual(f.den, (Fraction(1),))
        g = (LAMBDA + 1) / (LAMBDA * 2 + 2)
        self.assertEqual(g, Fraction(1, 2))
        self.assertEqual(g.constant_value(), Fraction(1, 2))

    def test_products_keep_denominators_monic(self) -> None:
        half = (LAMBDA + 1) / (LAMBDA * 2 + 2)
        self.assertEqual(half.den, (Fraction(1),))
        self.assertEqual(hash(half), hash(Fraction(1, 2)))
        self.assertEqual({half: "x"}[Fraction(1, 2)], "x")
        f = (LAMBDA / 3) * (Fraction(3, 2) / (LAMBDA * 4 + 1))
        self.assertEqual(f.den[-1], 1)
        self.assertEqual(f, LAMBDA / (LAMBDA * 8 + 2))
        self.assertEqual(f.evaluate(1), Fraction(1, 10))
        s = RatFun.total([1 / (LAMBDA * 2 + 2), 1 / (LAMBDA * 3 + 3)])
        self.assertEqual(s.den, (Fraction(1), Fraction(1)))
        self.assertEqual(s, Fraction(5, 6) / (LAMBDA + 1))

    def test_constants_match_fractions(self) -> None:
        c = RatFun.constant(Fraction(3, 4))
        self.assertEqual(c, Fraction(3, 4))
        self.assertEqual(hash(c), hash(Fraction(3, 4)))
        self.assertFalse(ZERO)
        self.assertEqual(LAMBDA - LAMBDA, 0)

    def test_arithmetic(self) -> None:
        f = 1 / (LAMBDA + 1)
        self.assertEqual(f * (LAMBDA + 1), 1)
        self.assertEqual(f + f, 2 / (LAMBDA + 1))
        self.assertEqual((LAMBDA**2 - 1) / (LAMBDA - 1), LAMBDA + 1)
        self.assertEqual(LAMBDA ** -1, (1 / LAMBDA))
        self.assertEqual(f.degree(), (0, 1))
        self.assertIsNone(LAMBDA.constant_value())
        with self.assertRaises(ZeroDivisionError):
            ZERO.inverse()

    def test_total_matches_pairwise_sum(self) -> None:
        items = [1 / (LAMBDA + 1), LAMBDA / (LAMBDA + 1) ** 2, RatFun.constant(2)]
        self.assertEqual(RatFun.total(items), items[0] + items[1] + items[2])
        self.assertEqual(exact_sum([Fraction(1, 2), *items]), RatFun.total(items) + Fraction(1, 2))

    def test_compose_power_and_evaluate(self) -> None:
        f = (LAMBDA + 1).compose_power(2)
        self.assertEqual(f.num, (Fraction(1), Fraction(0), Fraction(1)))
        self.assertEqual(f.evaluate(2), 5)
        self.assertEqual((1 / (LAMBDA + 1)).evaluate(Fraction(1, 2)), Fraction(2, 3))
        with self.assertRaises(ZeroDivisionError):
            (1 / (LAMBDA + 1)).evaluate(-1)
        with self.assertRaises(ValueError):
            LAMBDA.compose_power(0)

    def test_lambda_helpers(self) -> None:
        self.assertTrue(is_symbolic(LAMBDA))
        self.assertFalse(is_symbolic(Fraction(1)))
        self.assertTrue(is_lambda_generator(LAMBDA))
        self.assertFalse(is_lambda_generator(LAMBDA + 1))
        self.assertEqual(lambda_power(LAMBDA, 3), LAMBDA**3)
        self.assertEqual(lambda_power(2, 3), 8)
        self.assertEqual(lambda_power(LAMBDA + 1, 2), (LAMBDA + 1) ** 2)


class TestXPoly(unittest.TestCase):
    def setUp(self) -> None:
        self.x = XPoly.x()

    def test_trimming_and_indexing(self) -> None:
        p = XPoly([1, 0, 0])
        self.assertEqual(p.degree, 0)
        self.assertEqual(XPoly().degree, -1)
        self.assertEqual(p[5], 0)
        self.assertEqual(p, 1)
        self.assertFalse(XPoly([0, 0]))

    def test_ring_operations(self) -> None:
        p = (self.x + 1) ** 2
        self.assertEqual(p.coeffs, (1, 2, 1))
        self.assertEqual(p - self.x * self.x, self.x * 2 + 1)
        self.assertEqual((p / 2)[2], Fraction(1, 2))
        self.assertEqual(XPoly.monomial(3, 5)[3], 5)
        self.assertEqual(XPoly.total([self.x, self.x, XPoly.constant(1)]), self.x * 2 + 1)

    def test_evaluation_and_calculus(self) -> None:
        p = self.x**3 - self.x
        self.assertEqual(p(2), 6)
        self.assertEqual(p.evaluate(Fraction(1, 2)), Fraction(-3, 8))
        self.assertEqual(p.derivative(2), self.x * 6)
        self.assertEqual(p.derivative(4), XPoly())
        self.assertEqual(self.x.definite_integral(0, 1), Fraction(1, 2))
        self.assertEqual(self.x.antiderivative().derivative(), self.x)
        with self.assertRaises(ValueError):
            p.derivative(-1)

    def test_substitutions(self) -> None:
        sq = self.x**2
        self.assertEqual(sq.shift(1).coeffs, (1, 2, 1))
        self.assertEqual(sq.compose_affine(2, 1).coeffs, (1, 4, 4))
        self.assertEqual(sq.scale_x(Fraction(1, 2)).coeffs, (0, 0, Fraction(1, 4)))
        self.assertEqual((self.x**3 - self.x).reflect(), self.x - self.x**3)

    def test_symbolic_coefficients(self) -> None:
        p = self.x * LAMBDA + 1
        q = p * (1 / LAMBDA)
        self.assertEqual(q[1], 1)
        self.assertEqual(q[0], 1 / LAMBDA)
        self.assertEqual(p.evaluate(2), LAMBDA * 2 + 1)


if __name__ == "__main__":
    unittest.main()
