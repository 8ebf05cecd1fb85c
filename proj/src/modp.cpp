#include "skeinlab/modp.hpp"

#include <stdexcept>

namespace skeinlab {

namespace {

bool is_odd_prime_ge_5(std::uint32_t p) {
    if (p < 5 || p % 2 == 0) return false;
    for (std::uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

void require_same_prime(FpElem a, FpElem b) {
    if (a.p != b.p)
        throw std::logic_error("mixed primes in mod-p arithmetic");
}

} // namespace

PrimeContext::PrimeContext(std::uint32_t p) : p_(p) {
    if (!is_odd_prime_ge_5(p))
        throw std::invalid_argument("modulus must be an odd prime >= 5, got " +
                                    std::to_string(p));
    fact_.resize(p);
    fact_[0] = 1;
    for (std::uint32_t n = 1; n < p; ++n)
        fact_[n] = static_cast<std::uint32_t>(
            static_cast<std::uint64_t>(fact_[n - 1]) * n % p);
}

std::uint32_t PrimeContext::factorial(unsigned n) const {
    if (n >= p_)
        throw DenominatorDivisibleByP("factorial " + std::to_string(n) +
                                      "! reduces to 0 mod " + std::to_string(p_));
    return fact_[n];
}

FpElem operator+(FpElem a, FpElem b) {
    require_same_prime(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + b.v;
    return FpElem(static_cast<std::uint32_t>(s % a.p), a.p);
}

FpElem operator-(FpElem a, FpElem b) {
    require_same_prime(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v) + a.p - b.v;
    return FpElem(static_cast<std::uint32_t>(s % a.p), a.p);
}

FpElem operator*(FpElem a, FpElem b) {
    require_same_prime(a, b);
    std::uint64_t s = static_cast<std::uint64_t>(a.v) * b.v;
    return FpElem(static_cast<std::uint32_t>(s % a.p), a.p);
}

FpElem operator-(FpElem a) { return FpElem(a.v == 0 ? 0 : a.p - a.v, a.p); }

FpElem fp_pow(FpElem a, unsigned long e) {
    FpElem r(1, a.p);
    while (e) {
        if (e & 1UL) r = r * a;
        a = a * a;
        e >>= 1;
    }
    return r;
}

FpElem inverse(FpElem a) {
    if (a.v == 0)
        throw DenominatorDivisibleByP("inverse of 0 mod " + std::to_string(a.p));
    return fp_pow(a, a.p - 2); // Fermat
}

FpElem operator/(FpElem a, FpElem b) {
    require_same_prime(a, b);
    return a * inverse(b);
}

bool operator==(FpElem a, FpElem b) {
    require_same_prime(a, b);
    return a.v == b.v;
}

FpElem psi_p(const Integer& n, const PrimeContext& ctx) {
    Integer r = n % ctx.p();
    if (r < 0) r += ctx.p();
    return FpElem(static_cast<std::uint32_t>(r), ctx.p());
}

FpElem psi_p(const Rational& r, const PrimeContext& ctx) {
    FpElem den = psi_p(denominator(r), ctx);
    if (den.v == 0)
        throw DenominatorDivisibleByP("denominator of " + to_string(r) +
                                      " divisible by " + std::to_string(ctx.p()));
    return psi_p(numerator(r), ctx) / den;
}

int legendre(const Integer& a, const PrimeContext& ctx) {
    FpElem r = psi_p(a, ctx);
    if (r.v == 0) return 0;
    FpElem e = fp_pow(r, (ctx.p() - 1) / 2); // Euler criterion
    if (e.v == 1) return 1;
    return -1; // e == p - 1
}

int epsilon_int(unsigned long i, const PrimeContext& ctx) {
    return (i % (ctx.p() - 1) == 0) ? -1 : 0;
}

FpElem epsilon_p(unsigned long i, const PrimeContext& ctx) {
    return epsilon_int(i, ctx) == -1 ? FpElem(ctx.p() - 1, ctx.p()) : FpElem(0, ctx.p());
}

FpElem power_sum(unsigned long i, const PrimeContext& ctx) {
    FpElem s(0, ctx.p());
    for (std::uint32_t k = 1; k < ctx.p(); ++k) s = s + fp_pow(FpElem(k, ctx.p()), i);
    return s;
}

FpElem even_power_sum(unsigned long i, const PrimeContext& ctx) {
    FpElem s(0, ctx.p());
    for (std::uint32_t u = 1; u <= ctx.p() - 2; u += 2)
        s = s + fp_pow(FpElem(u, ctx.p()), 2 * i);
    return s;
}

FpElem factorial_mod(unsigned n, const PrimeContext& ctx) {
    return FpElem(ctx.factorial(n), ctx.p());
}

FpElem inverse_factorial_mod(unsigned n, const PrimeContext& ctx) {
    return inverse(factorial_mod(n, ctx));
}

std::pair<FpElem, FpElem> factorial_inverse_identity(unsigned k, const PrimeContext& ctx) {
    const unsigned np = ctx.n_p();
    if (k > np)
        throw OutOfRange("factorial identity needs k <= N_p = " + std::to_string(np) +
                         ", got k = " + std::to_string(k));
    FpElem lhs = inverse_factorial_mod(np - k, ctx);
    FpElem minus_quarter = -inverse(FpElem(4, ctx.p()));
    FpElem rhs = inverse_factorial_mod(np + 1, ctx) * fp_pow(minus_quarter, k + 1) *
                 factorial_mod(2 * (k + 1), ctx) / factorial_mod(k + 1, ctx);
    return {lhs, rhs};
}

} // namespace skeinlab
