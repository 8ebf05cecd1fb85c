#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/series.hpp"

#include <random>

using namespace skeinlab;

namespace {

AlphaPoly c0(const Rational& r) { return AlphaPoly::constant(r, 0); }

HbarSeries random_series(std::mt19937& rng, unsigned arity, int order, bool zero_const) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 5), deg(0, 2);
    HbarSeries s(arity, order);
    for (int n = zero_const ? 1 : 0; n <= order; ++n) {
        AlphaPoly p(arity);
        AlphaPoly::Exponents e(arity, 0);
        for (unsigned i = 0; i < arity; ++i) e[i] = deg(rng);
        p.add_term(e, Rational(num(rng), den(rng)));
        s.set_coeff(n, p);
    }
    return s;
}

} // namespace

TEST_CASE("alpha polynomials: arithmetic and degrees") {
    AlphaPoly a = AlphaPoly::variable(0, 2); // a1
    AlphaPoly b = AlphaPoly::variable(1, 2); // a2
    AlphaPoly p = (a + b) * (a - b);
    CHECK(p == a * a - b * b);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 2);
    CHECK(p.total_degree() == 2);
    CHECK(AlphaPoly(2).total_degree() == -1);
    CHECK((p - p).is_zero());
    CHECK(AlphaPoly::constant(Rational(5), 3).is_constant());
    CHECK_THROWS_AS(a + AlphaPoly::variable(0, 3), ArityMismatch);

    // (a1 + a2)^2 evaluated at (2, 3) = 25
    AlphaPoly q = (a + b) * (a + b);
    CHECK(q.evaluate({Rational(2), Rational(3)}) == Rational(25));
    CHECK_THROWS_AS(q.evaluate({Rational(2)}), ArityMismatch);
}

TEST_CASE("alpha polynomials: shift is substitution a_i -> a_i + c_i") {
    AlphaPoly a = AlphaPoly::variable(0, 1);
    AlphaPoly sq = a * a;
    AlphaPoly shifted = sq.shift({Rational(1)});
    AlphaPoly expect = a * a + Rational(2) * a + AlphaPoly::constant(Rational(1), 1);
    CHECK(shifted == expect);

    CHECK(a.shift({Rational(1, 2)}) == a + AlphaPoly::constant(Rational(1, 2), 1));

    // shift composes: shifting by c then -c is the identity
    AlphaPoly p = sq * sq + Rational(3) * a;
    CHECK(p.shift({Rational(5, 7)}).shift({Rational(-5, 7)}) == p);
}

TEST_CASE("alpha polynomial printing and parsing round-trip") {
    AlphaPoly a = AlphaPoly::variable(0, 2);
    AlphaPoly b = AlphaPoly::variable(1, 2);
    AlphaPoly p = a * a * b * Rational(-1, 24) + b + AlphaPoly::constant(Rational(3, 2), 2);
    CHECK(p.str() == "3/2 + a2 - 1/24*a1^2*a2");
    CHECK(AlphaPoly::parse(p.str(), 2) == p);
    CHECK(AlphaPoly(2).str() == "0");
    CHECK(AlphaPoly::parse("0", 2).is_zero());
    CHECK(AlphaPoly::parse("-a1", 2) == -a);
    CHECK(AlphaPoly::parse("2*a1*a1", 2) == Rational(2) * a * a);
    CHECK(AlphaPoly::parse(" a1^2 + 1/3 ", 1).degree_in(0) == 2);
    CHECK_THROWS_AS(AlphaPoly::parse("a3", 2), Malformed);
    CHECK_THROWS_AS(AlphaPoly::parse("a1^-2", 1), Malformed);
    CHECK_THROWS_AS(AlphaPoly::parse("", 1), Malformed);
    CHECK_THROWS_AS(AlphaPoly::parse("1 +", 1), Malformed);
    CHECK_THROWS_AS(AlphaPoly::parse("b1", 1), Malformed);
}

TEST_CASE("series multiplication: truncated Cauchy product") {
    // (1 + hbar)(1 - hbar) = 1 - hbar^2 at order 2
    HbarSeries one_plus(0, 2), one_minus(0, 2);
    one_plus.set_coeff(0, c0(1));
    one_plus.set_coeff(1, c0(1));
    one_minus.set_coeff(0, c0(1));
    one_minus.set_coeff(1, c0(-1));
    HbarSeries prod = one_plus * one_minus;
    CHECK(prod.order() == 2);
    CHECK(prod.coeff(0) == c0(1));
    CHECK(prod.coeff(1) == c0(0));
    CHECK(prod.coeff(2) == c0(-1));

    // (alpha + hbar)^2 = alpha^2 + 2 hbar alpha + hbar^2
    HbarSeries s(1, 2);
    s.set_coeff(0, AlphaPoly::variable(0, 1));
    s.set_coeff(1, AlphaPoly::constant(Rational(1), 1));
    HbarSeries sq = s * s;
    CHECK(sq.coeff(0) == AlphaPoly::variable(0, 1) * AlphaPoly::variable(0, 1));
    CHECK(sq.coeff(1) == Rational(2) * AlphaPoly::variable(0, 1));
    CHECK(sq.coeff(2) == AlphaPoly::constant(Rational(1), 1));

    // truncation order never silently grows: min order rule
    HbarSeries a(0, 5), b(0, 3);
    a.set_coeff(0, c0(1));
    b.set_coeff(0, c0(1));
    CHECK((a * b).order() == 3);
    CHECK((a + b).order() == 3);

    // order bookkeeping with valuations: min(Na + val b, Nb + val a)
    HbarSeries h(0, 3);
    h.set_coeff(1, c0(1)); // hbar, trusted through hbar^3
    CHECK((a * h).order() == 3);
    CHECK((h * h).order() == 4);
    CHECK(HbarSeries::monomial(2, c0(5), 2).shift_hbar(3).order() == 5);
}

TEST_CASE("series exponential") {
    HbarSeries half(0, 3);
    half.set_coeff(1, c0(Rational(1, 2))); // hbar/2
    HbarSeries e = series_exp(half);
    CHECK(e.coeff(0) == c0(1));
    CHECK(e.coeff(1) == c0(Rational(1, 2)));
    CHECK(e.coeff(2) == c0(Rational(1, 8)));
    CHECK(e.coeff(3) == c0(Rational(1, 48)));

    HbarSeries zero(0, 4);
    CHECK(series_exp(zero) == HbarSeries::constant(Rational(1), 0, 4));

    HbarSeries ha(1, 2);
    ha.set_coeff(1, AlphaPoly::variable(0, 1)); // hbar*a1
    CHECK(series_exp(ha).coeff(2) ==
          AlphaPoly::variable(0, 1) * AlphaPoly::variable(0, 1) * Rational(1, 2));

    HbarSeries bad(0, 2);
    bad.set_coeff(0, c0(1));
    CHECK_THROWS_AS(series_exp(bad), NonzeroConstantTerm);

    // exp(a) exp(-a) = 1 for random a with zero constant term
    std::mt19937 rng(20260815);
    for (int trial = 0; trial < 20; ++trial) {
        HbarSeries a = random_series(rng, trial % 3 == 0 ? 1 : 0, 6, true);
        HbarSeries prod = series_exp(a) * series_exp(-a);
        CHECK(prod.truncate(6) == HbarSeries::constant(Rational(1), a.arity(), 6));
    }
}

TEST_CASE("series division by units and by valuation shift") {
    // 1/(1 - hbar) = sum hbar^n
    HbarSeries d(0, 5);
    d.set_coeff(0, c0(1));
    d.set_coeff(1, c0(-1));
    HbarSeries inv = d.reciprocal();
    for (int n = 0; n <= 5; ++n) CHECK(inv.coeff(n) == c0(1));

    // reciprocal * original = 1
    std::mt19937 rng(7);
    for (int trial = 0; trial < 15; ++trial) {
        HbarSeries a = random_series(rng, 0, 6, false);
        if (a.coeff(0).constant_term() == 0) continue;
        CHECK((a * a.reciprocal()).truncate(6) == HbarSeries::constant(Rational(1), 0, 6));
    }

    // division by a pure hbar power shifts degrees
    HbarSeries h(0, 4);
    h.set_coeff(1, c0(2)); // 2 hbar
    HbarSeries q = HbarSeries::monomial(2, c0(6), 4) / h; // 6 hbar^2 / 2 hbar = 3 hbar
    CHECK(q.coeff(1) == c0(3));
    CHECK_FALSE(q.has_negative_part());

    // leading coefficient must be a nonzero constant
    HbarSeries zero(0, 3);
    CHECK_THROWS_AS(zero.reciprocal(), ZeroDenominator);
    HbarSeries nonconst(1, 3);
    nonconst.set_coeff(0, AlphaPoly::variable(0, 1));
    CHECK_THROWS_AS(nonconst.reciprocal(), NonzeroConstantTerm);
}

TEST_CASE("sinh ratio closed cases") {
    CHECK(sinh_ratio(Rational(1), 6) == HbarSeries::constant(Rational(1), 0, 6));

    HbarSeries two = sinh_ratio(Rational(2), 6); // 2 cosh(hbar/2)
    CHECK(two.coeff(0) == c0(2));
    CHECK(two.coeff(1) == c0(0));
    CHECK(two.coeff(2) == c0(Rational(1, 4)));
    CHECK(two.coeff(4) == c0(Rational(1, 192)));

    HbarSeries half = sinh_ratio(Rational(1, 2), 6);
    CHECK(half.coeff(0) == c0(Rational(1, 2)));
    CHECK(half.coeff(2) == c0(Rational(-1, 64)));

    // antisymmetry: sinh_ratio(-u) = -sinh_ratio(u)
    CHECK(sinh_ratio(Rational(-3), 5) == -sinh_ratio(Rational(3), 5) * Rational(1));
}

TEST_CASE("alpha substitution on series") {
    HbarSeries s(1, 2);
    s.set_coeff(0, AlphaPoly::variable(0, 1) * AlphaPoly::variable(0, 1));
    s.set_coeff(2, AlphaPoly::variable(0, 1));
    HbarSeries shifted = s.shift_alpha({Rational(1)});
    AlphaPoly a = AlphaPoly::variable(0, 1);
    CHECK(shifted.coeff(0) == a * a + Rational(2) * a + AlphaPoly::constant(Rational(1), 1));
    CHECK(shifted.coeff(2) == a + AlphaPoly::constant(Rational(1), 1));

    HbarSeries at2 = s.evaluate_alpha({Rational(2)});
    CHECK(at2.arity() == 0);
    CHECK(at2.coeff(0) == c0(4));
    CHECK(at2.coeff(2) == c0(2));
    CHECK_THROWS_AS(s.evaluate_alpha({}), ArityMismatch);
}

TEST_CASE("series printing and parsing round-trip") {
    HbarSeries s(2, 3);
    s.set_coeff(0, AlphaPoly::constant(Rational(1, 2), 2));
    s.set_coeff(2, AlphaPoly::variable(0, 2) * AlphaPoly::variable(1, 2) * Rational(-3, 4));
    const std::string text = s.str();
    CHECK(text == "hbar^0: 1/2\nhbar^1: 0\nhbar^2: -3/4*a1*a2\nhbar^3: 0");
    CHECK(HbarSeries::parse(text, 2) == s);

    // negative residues refuse to print
    HbarSeries neg = HbarSeries::monomial(2, c0(1), 3).shift_hbar(-3);
    CHECK(neg.has_negative_part());
    CHECK_THROWS_AS(neg.str(), NegativeDegreeResidue);
    CHECK_FALSE(HbarSeries::monomial(2, c0(1), 3).shift_hbar(-2).has_negative_part());

    CHECK_THROWS_AS(HbarSeries::parse("", 0), Malformed);
    CHECK_THROWS_AS(HbarSeries::parse("hbar^0: 1\nhbar^0: 2", 0), Malformed);
    CHECK_THROWS_AS(HbarSeries::parse("x: 1", 0), Malformed);

    // parse with a gap fills zeros and keeps the max order
    HbarSeries g = HbarSeries::parse("hbar^2: 5\nhbar^0: 1", 0);
    CHECK(g.order() == 2);
    CHECK(g.coeff(1) == c0(0));
}

TEST_CASE("mod-p reduction of series") {
    PrimeContext c7(7);

    HbarSeries s(0, 5);
    s.set_coeff(0, c0(Rational(3, 4)));
    s.set_coeff(1, c0(Rational(1, 5)));
    FpSeries r = reduce_series(s, c7);
    CHECK(r.order() == 2); // truncation at N_p = 2
    CHECK(r.coeff(0) == FpElem(6, 7));
    CHECK(r.coeff(1) == FpElem(3, 7));

    PrimeContext c5(5);
    CHECK_THROWS_WITH_AS(reduce_series(s, c5),
                         doctest::Contains("hbar^1"), DenominatorDivisibleByP);

    CHECK(reduce_series(HbarSeries(0, 4), c7).is_zero());

    // homomorphism: reduce(a*b) = reduce(a)*reduce(b) on the common window
    std::mt19937 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        HbarSeries a = random_series(rng, 0, 4, false);
        HbarSeries b = random_series(rng, 0, 4, false);
        FpSeries lhs = reduce_series(a * b, c7);
        FpSeries rhs = reduce_series(a, c7) * reduce_series(b, c7);
        CHECK(lhs.truncate(2) == rhs.truncate(2));
    }

    HbarSeries witharity(1, 2);
    CHECK_THROWS_AS(reduce_series(witharity, c7), ArityMismatch);
}

TEST_CASE("mod-p series arithmetic") {
    FpSeries a(7, 2), b(7, 2);
    a.set_coeff(0, FpElem(3, 7));
    a.set_coeff(1, FpElem(5, 7));
    b.set_coeff(1, FpElem(4, 7));
    FpSeries prod = a * b;
    CHECK(prod.coeff(1) == FpElem(5, 7)); // 3*4 = 12
    CHECK(prod.coeff(2) == FpElem(6, 7)); // 5*4 = 20
    CHECK((a + b).coeff(1) == FpElem(2, 7));
    CHECK((a - b).coeff(1) == FpElem(1, 7));
    CHECK(a.shift_hbar(-1).has_negative_part());
    CHECK(a.shift_hbar(1).coeff(1) == FpElem(3, 7));
    CHECK(a.str() == "hbar^0: 3\nhbar^1: 5\nhbar^2: 0");
}
