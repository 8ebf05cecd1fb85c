#pragma once

// Exact scalar layer: arbitrary-precision integers and rationals.
//
// Rational is boost::multiprecision::cpp_rational, which maintains the
// invariants we rely on everywhere (numerator/denominator coprime,
// denominator > 0) and streams as "a/b", or "a" when the denominator is 1.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace skeinlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error types shared across the library.  All derive from std exceptions so
// callers that do not care about the fine-grained class can catch
// std::runtime_error / std::invalid_argument.
struct ZeroDenominator : std::domain_error {
    ZeroDenominator() : std::domain_error("rational with zero denominator") {}
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};
// Reduction mod p applied to a rational whose denominator p divides.
struct DenominatorDivisibleByP : std::domain_error {
    explicit DenominatorDivisibleByP(const std::string& what) : std::domain_error(what) {}
};
struct OutOfRange : std::out_of_range {
    explicit OutOfRange(const std::string& what) : std::out_of_range(what) {}
};
struct ArityMismatch : std::invalid_argument {
    explicit ArityMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct NonzeroConstantTerm : std::invalid_argument {
    explicit NonzeroConstantTerm(const std::string& what) : std::invalid_argument(what) {}
};
struct SizeMismatch : std::invalid_argument {
    explicit SizeMismatch(const std::string& what) : std::invalid_argument(what) {}
};
struct NotSquare : std::invalid_argument {
    explicit NotSquare(const std::string& what) : std::invalid_argument(what) {}
};
struct ColorOutOfRange : std::invalid_argument {
    explicit ColorOutOfRange(const std::string& what) : std::invalid_argument(what) {}
};
struct NotAdmissible : std::invalid_argument {
    explicit NotAdmissible(const std::string& what) : std::invalid_argument(what) {}
};
struct NotPAdmissible : std::invalid_argument {
    explicit NotPAdmissible(const std::string& what) : std::invalid_argument(what) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};
// File-level parse failure (diagram / net / series files).
struct Malformed : ParseError {
    explicit Malformed(const std::string& what) : ParseError(what) {}
};
struct NotInternal : std::invalid_argument {
    explicit NotInternal(const std::string& what) : std::invalid_argument(what) {}
};
struct DisconnectedFromCircle : std::invalid_argument {
    explicit DisconnectedFromCircle(const std::string& what) : std::invalid_argument(what) {}
};
struct InterpolationInconsistent : std::logic_error {
    explicit InterpolationInconsistent(const std::string& what) : std::logic_error(what) {}
};
struct LegCountTooLarge : std::invalid_argument {
    explicit LegCountTooLarge(const std::string& what) : std::invalid_argument(what) {}
};
struct ZeroFraming : std::invalid_argument {
    ZeroFraming() : std::invalid_argument("framing must be nonzero") {}
};
struct NegativeDegreeResidue : std::domain_error {
    explicit NegativeDegreeResidue(const std::string& what) : std::domain_error(what) {}
};
struct DegreeShortfall : std::invalid_argument {
    explicit DegreeShortfall(const std::string& what) : std::invalid_argument(what) {}
};

inline Integer int_pow(Integer base, unsigned e)
{
    Integer r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline Integer factorial(unsigned n)
{
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (unsigned j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

// r^e for integer e; negative exponents invert (throws on r = 0).
inline Rational rational_pow(const Rational& r, long e)
{
    if (e == 0) return Rational(1);
    if (r == 0 && e < 0) throw ZeroDenominator();
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    Rational out = 1;
    while (k) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// Parses "a", "-a", "a/b" with optional sign; rejects b = 0 and garbage.
Rational parse_rational(const std::string& text);

} // namespace skeinlab
