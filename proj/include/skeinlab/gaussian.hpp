#pragma once

// Formal Gaussian integration over the color variables of a truncated
// hbar-series, the associated shift identity, and per-prime comparison of a
// mod-p series family against a rational limit series.
//
// The integral acts monomial by monomial:
//     prod_i (hbar a_i)^{k_i}  |->  prod_i (-hbar/f_i)^{k_i/2} k_i!/(k_i/2)!
// when every k_i is even, and 0 otherwise.  Bare powers of a_i (without the
// matching hbar) therefore produce negative hbar-degrees; they are carried in
// a transient Laurent window inside formal_integrate only, and the operation
// throws NegativeDegreeResidue if any nonzero negative coefficient survives.
// Callers with hbar^{|L|}-style prefactors fold them into the integrand
// first (the integral is Q[[hbar]]-linear).

#include "skeinlab/series.hpp"

namespace skeinlab {

// One framing per color variable; zero framings are rejected.
using FramingVector = std::vector<long>;

// The monomial rule above, extended linearly; arity of the result is 0.
// Applied per hbar-coefficient of the known window, and the result reports
// the input's order: a term hbar^n a^k lands at degree n - k/2, so the
// caller must supply input depth matching the a-structure of the integrand
// (e.g. depth 2N when every a carries an hbar, to trust the result to N).
// Throws ZeroFraming, SizeMismatch (arity vs framings), and
// NegativeDegreeResidue when the result is not a power series.
HbarSeries formal_integrate(const HbarSeries& P, const FramingVector& framings);

// Verifies, through min(order, P.order()), the completed-square identity
//     I(e^{q hbar a} P(a)) == e^{-q^2 hbar / f} I(P(a - 2q/f))
// for an arity-1 series P, comparing transient Laurent windows coefficient by
// coefficient so that bare powers of a are covered too.
bool gaussian_shift_check(const Rational& q, long framing, const HbarSeries& P, int order);

// Per-prime truncated series family, each entry at its prime's depth N_p.
struct FermatSequence {
    std::map<std::uint32_t, FpSeries> entries;

    // Validates order == N_p and that the prime is new; throws Malformed.
    void add(const FpSeries& s);
};

enum class FermatStatus { pass, fail, excluded };

struct FermatRow {
    std::uint32_t prime = 0;
    FermatStatus status = FermatStatus::pass;
    int mismatch_degree = -1;  // set when status == fail
    std::string detail;        // reduction failure message when excluded
};

struct FermatReport {
    std::vector<FermatRow> rows; // ascending prime order
    bool all_pass = true;        // no failed row
    std::uint32_t threshold = 0; // every tested prime above this passes
};

// For each prime in the sequence: reduce the limit coefficientwise to depth
// N_p and compare against the sequence entry.  A prime whose reduction hits a
// denominator divisible by p is excluded rather than failed.  Throws
// DegreeShortfall when the limit is not known to depth N_p.
FermatReport fermat_compare(const FermatSequence& seq, const HbarSeries& limit);

} // namespace skeinlab
