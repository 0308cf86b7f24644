"""Tests for the exact arithmetic core."""

from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from cycloknot.exactring import (
    CycNumber,
    InexactDivisionError,
    LaurentPoly,
    cyclotomic_coeffs,
    cyclotomic_polynomial,
    euler_phi,
    eval_at_root,
    exact_div,
    zeta,
)


def tpoly(d):
    return LaurentPoly.univar("t", {2 * e: c for e, c in d.items()})


class TestCyclotomic:
    def test_base_cases(self):
        assert cyclotomic_polynomial(1) == tpoly({1: 1, 0: -1})
        assert cyclotomic_polynomial(2) == tpoly({1: 1, 0: 1})

    def test_m6_against_division_oracle(self):
        # divide t^6 - 1 by Phi_1 Phi_2 Phi_3, all written out literally
        t6m1 = tpoly({6: 1, 0: -1})
        phi1 = tpoly({1: 1, 0: -1})
        phi2 = tpoly({1: 1, 0: 1})
        phi3 = tpoly({2: 1, 1: 1, 0: 1})
        oracle = exact_div(t6m1, phi1 * phi2 * phi3)
        assert oracle == tpoly({2: 1, 1: -1, 0: 1})
        assert cyclotomic_polynomial(6) == oracle

    def test_product_over_divisors_recovers_t_m_minus_1(self):
        for m in (1, 2, 3, 4, 6, 8, 12, 30):
            prod = tpoly({0: 1})
            for d in range(1, m + 1):
                if m % d == 0:
                    prod = prod * cyclotomic_polynomial(d)
            assert prod == tpoly({m: 1, 0: -1})

    def test_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        t = sympy.Symbol("t")
        for m in range(1, 31):
            expected = sympy.Poly(sympy.cyclotomic_poly(m, t), t).all_coeffs()[::-1]
            assert list(cyclotomic_coeffs(m)) == [int(c) for c in expected]

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            cyclotomic_polynomial(0)


class TestCycNumber:
    def test_root_of_unity_power(self):
        z3 = zeta(3)
        assert z3 * z3 * z3 == 1
        assert zeta(7) ** 7 == 1

    def test_reduction_examples(self):
        assert zeta(3) + zeta(3, 2) == -1
        assert zeta(4) * zeta(4) == -1

    def test_prime_root_sum_vanishes(self):
        for p in (2, 3, 5, 7, 11):
            total = CycNumber.zero(p)
            for k in range(p):
                total = total + zeta(p, k)
            assert total.is_zero()

    def test_order_mismatch_is_error(self):
        with pytest.raises(ValueError):
            zeta(3) + zeta(4)
        with pytest.raises(ValueError):
            zeta(3) * zeta(6)

    def test_embed_examples(self):
        assert CycNumber.from_int(2, 1).embed(6) == 1
        assert zeta(2).embed(6) == -1  # zeta_6^3
        assert (zeta(3) + zeta(3, 2)).embed(6) == -1

    def test_embed_requires_divisibility(self):
        with pytest.raises(ValueError):
            zeta(4).embed(6)

    def test_cross_order_equality(self):
        assert zeta(3) == zeta(3).embed(6)
        assert zeta(3) != zeta(6)

    def test_galois(self):
        a = zeta(5) + 2 * zeta(5, 2)
        assert a.galois(2) == zeta(5, 2) + 2 * zeta(5, 4)
        with pytest.raises(ValueError):
            zeta(6).galois(2)

    def test_exact_div_and_inverse(self):
        a = (zeta(5) - zeta(5, 4)) ** 2
        b = zeta(5, 2) + zeta(5, 3) - 2
        assert a.exact_div(b) == 1
        assert zeta(7, 3).inverse() == zeta(7, -3)
        with pytest.raises(InexactDivisionError):
            CycNumber.from_int(5, 3).exact_div(CycNumber.from_int(5, 2))
        with pytest.raises(ZeroDivisionError):
            CycNumber.from_int(5, 1).exact_div(CycNumber.zero(5))

    def test_serialization_round_trip(self):
        a = zeta(12, 5) - 3 * zeta(12, 2) + 7
        blob = json.dumps(a.to_json_obj())
        assert CycNumber.from_json_obj(json.loads(blob)) == a


orders = st.integers(min_value=1, max_value=12)
small_ints = st.integers(min_value=-6, max_value=6)


def cyc_numbers(order):
    return st.lists(small_ints, min_size=euler_phi(order), max_size=euler_phi(order)).map(
        lambda cs: CycNumber(order, tuple(cs))
    )


@st.composite
def cyc_triples(draw):
    m = draw(orders)
    return tuple(draw(cyc_numbers(m)) for _ in range(3))


class TestCycProperties:
    @settings(deadline=None)
    @given(cyc_triples())
    def test_ring_axioms(self, triple):
        a, b, c = triple
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @settings(deadline=None)
    @given(st.integers(min_value=1, max_value=12), st.data())
    def test_group_algebra_reduction_is_multiplicative(self, m, data):
        # multiplying power expansions before or after reduction agrees
        d1 = data.draw(st.dictionaries(st.integers(0, 2 * m), small_ints, max_size=4))
        d2 = data.draw(st.dictionaries(st.integers(0, 2 * m), small_ints, max_size=4))
        conv: dict[int, int] = {}
        for e1, c1 in d1.items():
            for e2, c2 in d2.items():
                conv[e1 + e2] = conv.get(e1 + e2, 0) + c1 * c2
        lhs = CycNumber.from_powers(m, d1) * CycNumber.from_powers(m, d2)
        assert lhs == CycNumber.from_powers(m, conv)

    @settings(deadline=None)
    @given(st.integers(1, 6), st.integers(1, 4), st.data())
    def test_embed_is_injective_ring_map(self, d, k, data):
        m = d * k
        a = data.draw(cyc_numbers(d))
        b = data.draw(cyc_numbers(d))
        assert (a + b).embed(m) == a.embed(m) + b.embed(m)
        assert (a * b).embed(m) == a.embed(m) * b.embed(m)
        assert (a.embed(m) == b.embed(m)) == (a == b)


def xq_polys(order=None):
    exps = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
    return st.dictionaries(exps, small_ints, max_size=5).map(
        lambda d: LaurentPoly.make(("x", "q"), {(2 * a, 2 * b): c for (a, b), c in d.items()}, order)
    )


class TestLaurentPoly:
    def test_canonical_zero_and_stripping(self):
        f = LaurentPoly.make(("x",), {(2,): 1, (0,): 0})
        assert f.terms == (((2,), 1),)
        assert (f - f).is_zero()

    def test_equality_against_scalars(self):
        assert LaurentPoly.univar("q", {0: 5}) == 5
        assert LaurentPoly.univar("q", {0: 5}).with_order(4) == 5
        assert LaurentPoly.zero(("q",)) == 0
        assert LaurentPoly.univar("q", {2: 1}) != 1

    def test_substitute_examples(self):
        f = LaurentPoly.univar("x", {2: 1, -2: 1})
        assert f.substitute("x", new_var="u", exp2=4) == LaurentPoly.univar("u", {4: 1, -4: 1})
        # x^p with x -> zeta_p^(2n+1) u^2 gives u^(2p)
        p, n = 5, 2
        g = LaurentPoly.univar("x", {2 * p: 1})
        img = g.substitute("x", coeff=zeta(p, 2 * n + 1), new_var="u", exp2=4)
        assert img == LaurentPoly.univar("u", {4 * p: 1}).with_order(p)

    def test_substitute_sigma1_cancellation(self):
        # sigma_1(x, q) at q = zeta_3, x -> zeta_3 collapses to 0
        sigma1 = LaurentPoly.univar("x", {2: 1, -2: 1, 0: -(zeta(3) + zeta(3, -1))})
        val = sigma1.evaluate({"x": zeta(3)})
        assert val == 0

    def test_substitute_round_trip_identity(self):
        f = LaurentPoly.make(("x", "q"), {(2, 4): 3, (-2, 0): -1, (0, -2): 2})
        assert f.substitute("x", new_var="x", exp2=2) == f

    def test_substitute_rejects_bad_exponents(self):
        half = LaurentPoly.univar("x", {1: 1})
        with pytest.raises(ValueError):
            half.substitute("x", coeff=-1, new_var="x", exp2=2)
        with pytest.raises(ValueError):
            half.substitute("x", new_var="u", exp2=1)

    def test_constant_substitution_drops_variable(self):
        f = LaurentPoly.make(("x", "q"), {(2, 2): 1})
        g = f.substitute("x", coeff=zeta(3))
        assert g == LaurentPoly.univar("q", {2: zeta(3)})

    def test_mul_against_rational_point_oracle(self):
        from fractions import Fraction

        f = LaurentPoly.make(("x", "q"), {(2, 0): 3, (-2, 2): -1, (0, 4): 2})
        g = LaurentPoly.make(("x", "q"), {(0, -2): 1, (4, 0): 5})

        def at(h, xv, qv):
            total = Fraction(0)
            for (a, b), c in h.terms:
                total += c * Fraction(xv) ** (a // 2) * Fraction(qv) ** (b // 2)
            return total

        prod = f * g
        for xv, qv in [(2, 3), (-2, 5), (7, -3)]:
            assert at(prod, xv, qv) == at(f, xv, qv) * at(g, xv, qv)

    def test_pow_matches_repeated_mul(self):
        f = LaurentPoly.univar("x", {2: 1, 0: -2, -2: 1})
        assert f**3 == f * f * f
        assert f**0 == 1

    def test_variable_mismatch_is_error(self):
        with pytest.raises(ValueError):
            LaurentPoly.univar("x", {0: 1}) + LaurentPoly.univar("q", {0: 1})

    def test_order_mixing_is_explicit(self):
        f = LaurentPoly.univar("x", {0: zeta(3)})
        g = LaurentPoly.univar("x", {0: zeta(4)})
        with pytest.raises(ValueError):
            f + g
        assert f.with_order(12) + g.with_order(12) == LaurentPoly.univar(
            "x", {0: zeta(12, 4) + zeta(12, 3)}
        )

    def test_serialization_round_trip_bit_exact(self):
        f = LaurentPoly.make(("x", "q"), {(1, -2): 4, (0, 0): -7, (3, 5): 1})
        blob = json.dumps(f.to_json_obj())
        g = LaurentPoly.from_json_obj(json.loads(blob))
        assert g == f and g.to_json_obj() == f.to_json_obj()
        h = LaurentPoly.univar("u", {2: zeta(6), -2: -1}).with_order(6)
        blob2 = json.dumps(h.to_json_obj())
        assert LaurentPoly.from_json_obj(json.loads(blob2)) == h

    def test_serialized_terms_sorted(self):
        f = LaurentPoly.make(("x", "q"), {(2, 0): 1, (-2, 4): 2, (2, -2): 3})
        exps = [tuple(e) for e, _ in f.to_json_obj()["terms"]]
        assert exps == sorted(exps)


@st.composite
def q_polys(draw):
    d = draw(st.dictionaries(st.integers(-5, 5), small_ints, max_size=5))
    return LaurentPoly.univar("q", {2 * e: c for e, c in d.items()})


class TestLaurentProperties:
    @settings(deadline=None)
    @given(xq_polys(), xq_polys(), xq_polys())
    def test_ring_axioms(self, f, g, h):
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert f * g == g * f

    @settings(deadline=None, max_examples=60)
    @given(q_polys(), q_polys(), st.integers(1, 10), st.integers(-3, 3))
    def test_eval_at_root_is_ring_hom(self, f, g, m, k):
        assert eval_at_root(f * g, m, k) == eval_at_root(f, m, k) * eval_at_root(g, m, k)
        assert eval_at_root(f + g, m, k) == eval_at_root(f, m, k) + eval_at_root(g, m, k)

    @settings(deadline=None, max_examples=60)
    @given(q_polys(), q_polys())
    def test_exact_div_round_trip(self, f, g):
        if g.is_zero():
            return
        assert exact_div(f * g, g) == f


class TestEvalAtRoot:
    def test_examples(self):
        f = LaurentPoly.univar("q", {2: 1, -2: 1})
        assert eval_at_root(f, 3, 1) == -1
        for p in (2, 3, 5, 7):
            g = LaurentPoly.univar("q", {2 * p: 1, -2 * p: 1, 0: -2})
            assert eval_at_root(g, p, 1).is_zero()
        assert eval_at_root(LaurentPoly.univar("q", {0: 1, 2: 1}), 2, 1).is_zero()

    def test_half_exponents_lift_to_even_order(self):
        f = LaurentPoly.univar("q", {1: 1})  # q^(1/2)
        v = eval_at_root(f, 3, 1)
        assert v.order == 6 and v == zeta(6)
        with pytest.raises(ValueError):
            eval_at_root(f, 3, 1, order=3)

    def test_declared_higher_order(self):
        f = LaurentPoly.univar("q", {2: 1})
        assert eval_at_root(f, 3, 1, order=12) == zeta(12, 4)


class TestExactDivErrors:
    def test_inexact_division_raises(self):
        num = LaurentPoly.univar("x", {2: 1, 0: 1})  # x + 1
        den = LaurentPoly.univar("x", {2: 1, 0: -1})  # x - 1
        with pytest.raises(InexactDivisionError):
            exact_div(num, den)

    def test_laurent_shifts(self):
        num = LaurentPoly.univar("x", {-2: 1, 4: 1})  # x^-1 + x^2
        den = LaurentPoly.univar("x", {0: 1, 2: 1})  # 1 + x
        assert exact_div(num, den) == LaurentPoly.univar("x", {2: 1, 0: -1, -2: 1})

    def test_scalar_denominator(self):
        num = LaurentPoly.univar("x", {2: 4, 0: -6})
        den = LaurentPoly.univar("x", {0: 2})
        assert exact_div(num, den) == LaurentPoly.univar("x", {2: 2, 0: -3})
        with pytest.raises(InexactDivisionError):
            exact_div(LaurentPoly.univar("x", {0: 3}), den)
