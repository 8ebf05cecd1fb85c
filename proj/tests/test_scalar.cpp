#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/fields.hpp"
#include "skeinlab/modp.hpp"
#include "skeinlab/rational.hpp"

#include <set>

using namespace skeinlab;

TEST_CASE("rational printing and parsing round-trip") {
    CHECK(to_string(Rational(0)) == "0");
    CHECK(to_string(Rational(-7)) == "-7");
    CHECK(to_string(Rational(10, 3)) == "10/3");
    CHECK(to_string(Rational(-4, 6)) == "-2/3");

    CHECK(parse_rational("10/3") == Rational(10, 3));
    CHECK(parse_rational("-2/3") == Rational(-2, 3));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational("-0") == Rational(0));
    CHECK(parse_rational("6/4") == Rational(3, 2)); // normalizes

    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parse_rational("a"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ZeroDenominator);

    for (const char* s : {"0", "-1", "10/3", "-23/48", "123456789123456789/2"})
        CHECK(to_string(parse_rational(s)) == s);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == Integer("2432902008176640000"));
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 0) == 1);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(int_pow(Integer(-2), 5) == -32);

    CHECK(rational_pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(rational_pow(Rational(5), 0) == 1);
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), ZeroDenominator);
}

TEST_CASE("modulus context validates odd primes >= 5") {
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 31u}) CHECK(PrimeContext(p).p() == p);
    CHECK(PrimeContext(7).n_p() == 2);
    CHECK(PrimeContext(11).n_p() == 4);
    for (std::uint32_t bad : {0u, 1u, 2u, 3u, 4u, 9u, 15u, 21u})
        CHECK_THROWS_AS(PrimeContext{bad}, std::invalid_argument);
}

TEST_CASE("psi_p is a homomorphism on p-admissible rationals") {
    for (std::uint32_t pv : {5u, 7u, 13u}) {
        PrimeContext ctx(pv);
        const Rational xs[] = {Rational(3, 4), Rational(-7, 2), Rational(22, 3),
                               Rational(0), Rational(9)};
        for (const auto& a : xs)
            for (const auto& b : xs) {
                CHECK(psi_p(a + b, ctx) == psi_p(a, ctx) + psi_p(b, ctx));
                CHECK(psi_p(a * b, ctx) == psi_p(a, ctx) * psi_p(b, ctx));
            }
    }
    PrimeContext c7(7);
    CHECK(psi_p(Rational(1, 2), c7) == FpElem(4, 7));
    CHECK(psi_p(Rational(10, 3), c7) == FpElem(1, 7)); // 10 * 3^{-1} = 3 * 5 = 15
    CHECK_THROWS_AS(psi_p(Rational(1, 7), c7), DenominatorDivisibleByP);
    CHECK_THROWS_AS(psi_p(Rational(3, 14), c7), DenominatorDivisibleByP);
    CHECK_THROWS_AS(inverse(FpElem(0, 7)), DenominatorDivisibleByP);
    CHECK_THROWS_AS(FpElem(1, 5) + FpElem(1, 7), std::logic_error);
}

TEST_CASE("legendre symbol matches the table of squares") {
    for (std::uint32_t pv : {5u, 7u, 11u, 13u, 31u}) {
        PrimeContext ctx(pv);
        std::set<std::uint32_t> squares;
        for (std::uint32_t k = 1; k < pv; ++k) squares.insert(k * k % pv);
        for (std::uint32_t a = 0; a < pv; ++a) {
            int expect = (a == 0) ? 0 : (squares.count(a) ? 1 : -1);
            CHECK(legendre(Integer(a), ctx) == expect);
            CHECK(legendre(Integer(a) - pv, ctx) == expect); // negative reps
        }
        // multiplicativity
        for (std::uint32_t a = 1; a < pv; ++a)
            for (std::uint32_t b = 1; b < pv; ++b)
                CHECK(legendre(Integer(a) * b, ctx) ==
                      legendre(Integer(a), ctx) * legendre(Integer(b), ctx));
    }
    PrimeContext c7(7);
    CHECK(legendre(Integer(2), c7) == 1);
    CHECK(legendre(Integer(-1), c7) == -1);
    PrimeContext c5(5);
    CHECK(legendre(Integer(2), c5) == -1);
}

TEST_CASE("power sums reduce to epsilon_int (von Staudt)") {
    for (std::uint32_t pv : {5u, 7u, 11u, 13u}) {
        PrimeContext ctx(pv);
        FpField F(pv);
        for (unsigned long i = 0; i <= 2 * (pv - 1) + 3; ++i) {
            FpElem expect = F.from_long(epsilon_int(i, ctx));
            CHECK(power_sum(i, ctx) == expect);
        }
        // sum over odd u of u^{2i} = epsilon_int(2i)/2
        for (unsigned long i = 0; i <= pv; ++i) {
            FpElem expect = F.from_long(epsilon_int(2 * i, ctx)) / F.from_long(2);
            CHECK(even_power_sum(i, ctx) == expect);
        }
    }
    // epsilon counts i = 0 as divisible by p - 1
    PrimeContext c7(7);
    CHECK(epsilon_int(0, c7) == -1);
    CHECK(epsilon_int(6, c7) == -1);
    CHECK(epsilon_int(12, c7) == -1);
    CHECK(epsilon_int(3, c7) == 0);
    CHECK(epsilon_p(6, c7) == FpElem(6, 7));
    CHECK(epsilon_p(4, c7) == FpElem(0, 7));
    CHECK(power_sum(6, c7) == FpElem(6, 7));
    PrimeContext c5(5);
    CHECK(power_sum(2, c5) == FpElem(0, 5));
    CHECK(even_power_sum(3, c7) == FpElem(3, 7)); // 1^6 + 3^6 + 5^6 mod 7
    CHECK(even_power_sum(1, c7) == FpElem(0, 7)); // 1 + 9 + 25 = 35
    CHECK(even_power_sum(0, c5) == FpElem(2, 5)); // two even k in 0..3
}

TEST_CASE("factorial identities at the truncation depth") {
    // 1/(N_p - k)! = (1/(N_p+1)!) * (-1/4)^{k+1} * (2(k+1))!/(k+1)!  mod p
    for (std::uint32_t pv : {5u, 7u, 11u, 13u, 31u}) {
        PrimeContext ctx(pv);
        FpField F(pv);
        const unsigned np = ctx.n_p();
        for (unsigned k = 0; k <= np; ++k) {
            FpElem lhs = inverse_factorial_mod(np - k, ctx);
            FpElem quarter = F.inv(F.from_long(-4));
            FpElem rhs = inverse_factorial_mod(np + 1, ctx) * fp_pow(quarter, k + 1) *
                     factorial_mod(2 * (k + 1), ctx) / factorial_mod(k + 1, ctx);
            CHECK(lhs == rhs);
        }
        // 4^{N_p + 1} = 2^{p-1} = 1
        CHECK(fp_pow(FpElem(4, pv), np + 1) == FpElem(1, pv));
        // Wilson
        CHECK(factorial_mod(pv - 1, ctx) == FpElem(pv - 1, pv));
    }
    // the packaged identity op returns both sides
    for (std::uint32_t pv : {5u, 7u, 11u, 13u}) {
        PrimeContext ctx(pv);
        for (unsigned k = 0; k <= ctx.n_p(); ++k) {
            auto [lhs, rhs] = factorial_inverse_identity(k, ctx);
            CHECK(lhs == rhs);
        }
        CHECK_THROWS_AS(factorial_inverse_identity(ctx.n_p() + 1, ctx), OutOfRange);
        // k = N_p: left side is 1/0! = 1
        CHECK(factorial_inverse_identity(ctx.n_p(), ctx).first == FpElem(1, pv));
    }

    // hand value: p = 7, k = 0: 1/2! = 4 and (1/3!)(-1/4)(2!/1!)... both 4
    PrimeContext c7(7);
    CHECK(inverse_factorial_mod(2, c7) == FpElem(4, 7));
    CHECK(factorial_inverse_identity(0, c7).first == FpElem(4, 7));
    CHECK(psi_p(Rational(3, 5), c7) == FpElem(2, 7));
    CHECK_THROWS_AS(factorial_mod(7, c7), DenominatorDivisibleByP);
}

TEST_CASE("field policies expose a uniform surface") {
    QField Q;
    CHECK(Q.from_rational(parse_rational("3/4")) == Rational(3, 4));
    CHECK(Q.is_zero(Q.zero()));
    CHECK(Q.str(Rational(-1, 2)) == "-1/2");
    CHECK(Q.inv(Rational(2, 3)) == Rational(3, 2));
    CHECK_THROWS_AS(Q.inv(Q.zero()), ZeroDenominator);

    FpField F(11);
    CHECK(F.prime() == 11);
    CHECK(F.from_long(-1) == FpElem(10, 11));
    CHECK(F.from_rational(Rational(1, 2)) == FpElem(6, 11));
    CHECK(F.is_zero(F.from_long(22)));
    CHECK(F.str(F.from_long(7)) == "7");
    CHECK(F.inv(F.from_long(3)) == FpElem(4, 11));
}
