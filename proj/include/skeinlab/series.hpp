#pragma once

// Truncated formal power series in hbar whose coefficients are multivariate
// polynomials over Q in color variables a1..aL.  This is the carrier for the
// whole asymptotic pipeline; everything is exact, no floating point.
//
// Serialization: one line per hbar-degree, "hbar^n: <polynomial>", degrees
// ascending and contiguous from 0; polynomial terms sorted lexicographically
// by exponent vector, monomials written like "-1/24*a1^3*a2".

#include "skeinlab/modp.hpp"
#include "skeinlab/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace skeinlab {

// Polynomial in a1..aL with Rational coefficients; L = arity (0 = scalar).
class AlphaPoly {
public:
    using Exponents = std::vector<int>;

    explicit AlphaPoly(unsigned arity = 0) : arity_(arity) {}
    static AlphaPoly constant(const Rational& c, unsigned arity = 0);
    static AlphaPoly variable(unsigned i, unsigned arity); // a_{i+1}, 0-based i
    static AlphaPoly monomial(const Exponents& e, const Rational& c);

    unsigned arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    int degree_in(unsigned i) const; // max exponent of a_{i+1}; -1 for the zero poly
    int total_degree() const;        // -1 for the zero poly

    void add_term(const Exponents& e, const Rational& c);

    AlphaPoly& operator+=(const AlphaPoly& o);
    AlphaPoly& operator-=(const AlphaPoly& o);
    AlphaPoly operator-() const;
    friend AlphaPoly operator+(AlphaPoly a, const AlphaPoly& b) { return a += b; }
    friend AlphaPoly operator-(AlphaPoly a, const AlphaPoly& b) { return a -= b; }
    friend AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b);
    AlphaPoly& operator*=(const Rational& c);
    friend AlphaPoly operator*(AlphaPoly a, const Rational& c) { return a *= c; }
    friend AlphaPoly operator*(const Rational& c, AlphaPoly a) { return a *= c; }
    friend bool operator==(const AlphaPoly& a, const AlphaPoly& b);
    friend bool operator!=(const AlphaPoly& a, const AlphaPoly& b) { return !(a == b); }

    AlphaPoly shift(const std::vector<Rational>& c) const; // a_i -> a_i + c_i
    Rational evaluate(const std::vector<Rational>& v) const;

    std::string str() const;
    static AlphaPoly parse(const std::string& text, unsigned arity);

private:
    unsigned arity_;
    std::map<Exponents, Rational> terms_; // no zero coefficients stored
};

// Power series in hbar truncated at a known order: coefficients of hbar^k are
// recorded (and trusted) exactly for lo() <= k <= order().  The public format
// has lo() >= 0; a negative window only appears transiently inside the
// Gaussian-integration plumbing, and any nonzero residue there is an error.
class HbarSeries {
public:
    HbarSeries(unsigned arity, int order) : arity_(arity), lo_(0), order_(order) {
        if (order < -1) throw OutOfRange("series order must be >= -1");
        coeffs_.assign(order >= 0 ? order + 1 : 0, AlphaPoly(arity));
    }
    static HbarSeries constant(const AlphaPoly& c, int order);
    static HbarSeries constant(const Rational& c, unsigned arity, int order);
    // c * hbar^n
    static HbarSeries monomial(int n, const AlphaPoly& c, int order);

    unsigned arity() const { return arity_; }
    int order() const { return order_; }
    int lo() const { return lo_; }
    bool is_zero() const;

    const AlphaPoly& coeff(int n) const; // zero outside [lo, order]; throws above order
    void set_coeff(int n, const AlphaPoly& c);

    friend HbarSeries operator+(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator-(const HbarSeries& a, const HbarSeries& b);
    friend HbarSeries operator*(const HbarSeries& a, const HbarSeries& b);
    HbarSeries operator-() const;
    friend HbarSeries operator*(const HbarSeries& a, const Rational& c);
    friend HbarSeries operator*(const Rational& c, const HbarSeries& a) { return a * c; }
    friend HbarSeries operator/(const HbarSeries& a, const HbarSeries& b);
    // Equality = same arity, same order, same coefficients everywhere.
    friend bool operator==(const HbarSeries& a, const HbarSeries& b);
    friend bool operator!=(const HbarSeries& a, const HbarSeries& b) { return !(a == b); }

    // 1/this; the lowest nonzero coefficient must be a nonzero constant.
    HbarSeries reciprocal() const;
    HbarSeries truncate(int new_order) const;
    HbarSeries shift_hbar(int s) const; // multiply by hbar^s (s may be negative)
    HbarSeries power(unsigned e) const;

    HbarSeries shift_alpha(const std::vector<Rational>& c) const;    // a_i -> a_i + c_i
    HbarSeries evaluate_alpha(const std::vector<Rational>& v) const; // arity -> 0

    bool has_negative_part() const;
    // Drops an all-zero negative window; throws NegativeDegreeResidue otherwise.
    HbarSeries canonical() const;

    int true_valuation() const; // first nonzero degree; order_ + 1 if zero

    std::string str() const; // the "hbar^n: ..." block, one line per degree 0..order
    static HbarSeries parse(const std::string& text, unsigned arity);

private:
    unsigned arity_;
    int lo_;    // degree of coeffs_[0]
    int order_; // highest trusted degree; coeffs_.size() == order_ - lo_ + 1
    std::vector<AlphaPoly> coeffs_;
};

// exp(a); requires zero coefficient in hbar^0 and below.
HbarSeries series_exp(const HbarSeries& a);
// sinh(u*hbar/2)/sinh(hbar/2) to the given order (arity 0).
HbarSeries sinh_ratio(const Rational& u, int order);

// Series over Z/pZ truncated at order <= N_p (scalars only, arity 0).
class FpSeries {
public:
    FpSeries(std::uint32_t p, int order) : p_(p), lo_(0), order_(order) {
        coeffs_.assign(order >= 0 ? order + 1 : 0, FpElem(0, p));
    }
    std::uint32_t prime() const { return p_; }
    int order() const { return order_; }
    int lo() const { return lo_; }
    bool is_zero() const;

    FpElem coeff(int n) const;
    void set_coeff(int n, FpElem c);

    friend FpSeries operator+(const FpSeries& a, const FpSeries& b);
    friend FpSeries operator-(const FpSeries& a, const FpSeries& b);
    friend FpSeries operator*(const FpSeries& a, const FpSeries& b);
    friend FpSeries operator*(const FpSeries& a, FpElem c);
    friend bool operator==(const FpSeries& a, const FpSeries& b);
    friend bool operator!=(const FpSeries& a, const FpSeries& b) { return !(a == b); }

    FpSeries truncate(int new_order) const;
    FpSeries shift_hbar(int s) const;

    bool has_negative_part() const;
    FpSeries canonical() const;

    std::string str() const;

private:
    std::uint32_t p_;
    int lo_;
    int order_;
    std::vector<FpElem> coeffs_;
};

// Coefficientwise psi_p, truncated at N_p; arity must be 0.  Throws
// DenominatorDivisibleByP naming the offending degree.
FpSeries reduce_series(const HbarSeries& a, const PrimeContext& ctx);

} // namespace skeinlab
