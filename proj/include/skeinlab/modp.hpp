#pragma once

// Mod-p layer: the reduction homomorphism psi_p on p-admissible rationals,
// Legendre symbols, von Staudt power sums, and the factorial identities used
// by the modular truncation depth N_p = (p-3)/2.

#include "skeinlab/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace skeinlab {

// Validated odd prime p >= 5, with the factorial table mod p.
class PrimeContext {
public:
    explicit PrimeContext(std::uint32_t p);
    std::uint32_t p() const { return p_; }
    std::uint32_t n_p() const { return (p_ - 3) / 2; } // N_p
    std::uint32_t factorial(unsigned n) const;         // n! mod p, requires n < p
private:
    std::uint32_t p_;
    std::vector<std::uint32_t> fact_; // fact_[n] = n! mod p for n < p
};

// Element of Z/pZ carrying its prime.  Mixing primes is a programming error
// and throws std::logic_error.
struct FpElem {
    std::uint32_t v = 0;
    std::uint32_t p = 0;

    FpElem() = default;
    FpElem(std::uint32_t value, std::uint32_t prime) : v(value % prime), p(prime) {}
};

FpElem operator+(FpElem a, FpElem b);
FpElem operator-(FpElem a, FpElem b);
FpElem operator*(FpElem a, FpElem b);
FpElem operator-(FpElem a);
FpElem inverse(FpElem a);
FpElem operator/(FpElem a, FpElem b);
bool operator==(FpElem a, FpElem b);
inline bool operator!=(FpElem a, FpElem b) { return !(a == b); }
inline bool is_zero(FpElem a) { return a.v == 0; }

FpElem fp_pow(FpElem a, unsigned long e);

// psi_p: { a/b : gcd(p, b) = 1 } -> Z/pZ.  Throws DenominatorDivisibleByP
// when p | b.
FpElem psi_p(const Rational& r, const PrimeContext& ctx);
FpElem psi_p(const Integer& n, const PrimeContext& ctx);

// Legendre symbol (a/p) in {-1, 0, +1} via the Euler criterion.
int legendre(const Integer& a, const PrimeContext& ctx);

// epsilon_p(i) = -1 mod p if (p-1) | i, else 0.  (i = 0 counts as divisible.)
FpElem epsilon_p(unsigned long i, const PrimeContext& ctx);
// Same value as a plain integer in {-1, 0}.
int epsilon_int(unsigned long i, const PrimeContext& ctx);

// sum_{k=0}^{p-2} (k+1)^i mod p; equals epsilon_p(i).
FpElem power_sum(unsigned long i, const PrimeContext& ctx);
// sum over even k in 0..p-2 of (k+1)^{2i} mod p; equals epsilon_p(2i)/2.
FpElem even_power_sum(unsigned long i, const PrimeContext& ctx);

FpElem factorial_mod(unsigned n, const PrimeContext& ctx);          // n! mod p, n < p
FpElem inverse_factorial_mod(unsigned n, const PrimeContext& ctx);  // 1/n! mod p, n < p

// Both sides of  1/(N_p - k)!  =  (1/(N_p+1)!) (-1/4)^{k+1} (2(k+1))!/(k+1)!
// as elements of Z/pZ; their equality is the tested contract.  Throws
// OutOfRange when k > N_p.
std::pair<FpElem, FpElem> factorial_inverse_identity(unsigned k, const PrimeContext& ctx);

} // namespace skeinlab
