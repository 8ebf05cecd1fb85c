#pragma once

// Field policies.  Engines that work both over Q and over F_p are templated
// on one of these.  Both expose the same surface; FpField carries its prime.
// Elements themselves also support the usual operators, so templated code can
// mix `field.from_rational(...)` seeds with plain arithmetic.

#include "skeinlab/modp.hpp"
#include "skeinlab/rational.hpp"

#include <string>

namespace skeinlab {

struct QField {
    using Elem = Rational;
    static constexpr bool modular = false;

    Elem zero() const { return Rational(0); }
    Elem one() const { return Rational(1); }
    Elem from_long(long n) const { return Rational(n); }
    Elem from_rational(const Rational& r) const { return r; }
    bool is_zero(const Elem& x) const { return x == 0; }
    bool equal(const Elem& x, const Elem& y) const { return x == y; }
    Elem inv(const Elem& x) const {
        if (x == 0) throw ZeroDenominator("division by zero in Q");
        return Rational(1) / x;
    }
    std::string str(const Elem& x) const { return to_string(x); }
};

class FpField {
public:
    explicit FpField(std::uint32_t p) : ctx_(p) {}

    using Elem = FpElem;
    static constexpr bool modular = true;

    Elem zero() const { return FpElem(0, ctx_.p()); }
    Elem one() const { return FpElem(1, ctx_.p()); }
    Elem from_long(long n) const {
        long p = static_cast<long>(ctx_.p());
        long v = n % p;
        if (v < 0) v += p;
        return FpElem(static_cast<std::uint32_t>(v), ctx_.p());
    }
    Elem from_rational(const Rational& r) const { return psi_p(r, ctx_); }
    bool is_zero(const Elem& x) const { return x.v == 0; }
    bool equal(const Elem& x, const Elem& y) const { return x == y; }
    Elem inv(const Elem& x) const { return inverse(x); }
    std::string str(const Elem& x) const { return std::to_string(x.v); }

    const PrimeContext& context() const { return ctx_; }
    std::uint32_t prime() const { return ctx_.p(); }

private:
    PrimeContext ctx_;
};

} // namespace skeinlab
