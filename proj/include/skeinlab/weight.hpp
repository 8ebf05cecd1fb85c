#pragma once

// sl(2) weight systems on chord diagrams, by two independent routes.
//
//  * omega_sl2 contracts tensors over the irreducible module V_lambda with
//    basis (v_0..v_lambda) and action e v_i = (lambda-i+1) v_{i-1},
//    f v_i = (i+1) v_{i+1}, h v_i = (lambda-2i) v_i.  Every chord inserts the
//    quadratic Casimir C = e(x)f + f(x)e + 1/2 h(x)h at its two endpoints;
//    internal vertices are removed by STU reduction first.  The value is the
//    product over circles of traces of the position-ordered generator words.
//
//  * omega_T evaluates the associated spin network: circle i becomes a cycle
//    of lambda_i-colored edges broken at each leg by a (lambda, lambda, 2)
//    vertex, diagram edges become color-2 edges, internal vertices become
//    (2,2,2) network vertices.  Calibration (frozen): each leg on circle i
//    contributes a factor lambda_i and each internal vertex a factor -2, so
//
//        omega_T(D) = prod_i lambda_i^{n_i} * (-2)^{#internal} * <net(D)>.
//
//    The two evaluators are related by
//        omega_sl2(D) = (-1)^{sum lambda_i} (-1)^{deg D} * omega_T(D),
//    which the tests verify degree by degree.
//
// For a fixed diagram, omega_sl2 is an odd polynomial in each shifted color
// mu_i = lambda_i + 1 of degree at most n_i(D)+1, and
// 2^{deg D} * prod_i (n_i+1)! clears all denominators.
// extract_weight_polynomial recovers the polynomial by exact
// divided-difference interpolation on integer nodes and verifies all three
// structural facts.

#include "skeinlab/chord.hpp"
#include "skeinlab/fields.hpp"
#include "skeinlab/spinnet.hpp"

#include <functional>

namespace skeinlab {

// ---------------------------------------------------------------------------
// Tensor-contraction evaluator
// ---------------------------------------------------------------------------

namespace detail {

// Trace over V_lambda of the product of generator actions, applied in
// increasing position order (word[0] acts first).  Generators are encoded
// 0 = e, 1 = f, 2 = h.  Every generator maps a basis vector to a multiple of
// a single basis vector, so each starting vector is tracked as one
// (index, coefficient) pair.
template <class F>
typename F::Elem trace_word(const std::vector<unsigned>& word, unsigned lambda, const F& field) {
    typename F::Elem total = field.zero();
    for (unsigned s = 0; s <= lambda; ++s) {
        unsigned idx = s;
        bool dead = false;
        typename F::Elem c = field.one();
        for (unsigned g : word) {
            if (g == 0) { // e
                if (idx == 0) { dead = true; break; }
                c = c * field.from_long(static_cast<long>(lambda) - static_cast<long>(idx) + 1);
                --idx;
            } else if (g == 1) { // f
                if (idx == lambda) { dead = true; break; }
                c = c * field.from_long(static_cast<long>(idx) + 1);
                ++idx;
            } else { // h
                c = c * field.from_long(static_cast<long>(lambda) - 2 * static_cast<long>(idx));
            }
        }
        if (!dead && idx == s) total = total + c;
    }
    return total;
}

// Casimir decomposition: term a assigns generator first[a] to the side-0 end
// of a chord and second[a] to the side-1 end, weighted by kappa[a].
inline constexpr std::array<unsigned, 3> kCasimirFirst = {0, 1, 2};  // e, f, h
inline constexpr std::array<unsigned, 3> kCasimirSecond = {1, 0, 2}; // f, e, h

template <class F>
typename F::Elem casimir_kappa(unsigned a, const F& field) {
    return a == 2 ? field.from_rational(Rational(1, 2)) : field.one();
}

template <class F>
typename F::Elem omega_sl2_pure(const ChordDiagram& d, const std::vector<unsigned>& colors,
                                const F& field) {
    const unsigned k = d.edge_count();
    std::vector<unsigned> assign(k, 0);
    typename F::Elem total = field.zero();
    std::vector<std::vector<unsigned>> words(d.circles);
    for (;;) {
        typename F::Elem term = field.one();
        for (unsigned a : assign) term = term * casimir_kappa(a, field);
        for (unsigned c = 0; c < d.circles; ++c) {
            auto& w = words[c];
            w.clear();
            for (const DiagEnd& de : d.legs[c]) {
                const unsigned a = assign[de.edge];
                w.push_back(de.side == 0 ? kCasimirFirst[a] : kCasimirSecond[a]);
            }
            term = term * trace_word(w, colors[c], field);
        }
        total = total + term;
        unsigned i = 0;
        while (i < k && assign[i] == 2) assign[i++] = 0;
        if (i == k) break;
        ++assign[i];
    }
    return total;
}

} // namespace detail

// Value of the weight system in the field F; colors[i] is lambda for circle
// i.  Diagrams with internal vertices are STU-reduced first; sum coefficients
// pass through F::from_rational (mod p this can throw
// DenominatorDivisibleByP).
template <class F>
typename F::Elem omega_sl2_in(const ChordDiagram& d, const std::vector<unsigned>& colors,
                              const F& field) {
    if (colors.size() != d.circles)
        throw SizeMismatch("color vector has " + std::to_string(colors.size()) +
                           " entries for " + std::to_string(d.circles) + " circles");
    if (d.internal_vertex_count() == 0) return detail::omega_sl2_pure(d, colors, field);
    typename F::Elem total = field.zero();
    for (const auto& [pure, coeff] : stu_reduce(d).terms)
        total = total + field.from_rational(coeff) * detail::omega_sl2_pure(pure, colors, field);
    return total;
}

template <class F>
typename F::Elem omega_sl2_in(const DiagramSum& s, const std::vector<unsigned>& colors,
                              const F& field) {
    typename F::Elem total = field.zero();
    for (const auto& [d, coeff] : s.terms)
        total = total + field.from_rational(coeff) * omega_sl2_in(d, colors, field);
    return total;
}

Rational omega_sl2(const ChordDiagram& d, const std::vector<unsigned>& colors);
Rational omega_sl2(const DiagramSum& s, const std::vector<unsigned>& colors);

// Direct contraction of structure constants: internal vertices with
// counterclockwise ends (u, v, w) contribute -B([u,v], w), where B is the
// trace form in the two-dimensional representation, instead of being
// STU-reduced.  Exponential in the edge count; kept as an independent
// cross-check for low-degree diagrams.
Rational omega_sl2_direct(const ChordDiagram& d, const std::vector<unsigned>& colors);

// ---------------------------------------------------------------------------
// Spin-network evaluator
// ---------------------------------------------------------------------------

// The trivalent graph underlying omega_T.  Purely structural: admissibility
// is checked at evaluation time.
AbstractNet diagram_net(const ChordDiagram& d, const std::vector<unsigned>& colors);

template <class F>
typename F::Elem omega_T(const ChordDiagram& d, const std::vector<unsigned>& colors,
                         SkeinContext<F>& ctx, unsigned seed = 0) {
    if (colors.size() != d.circles)
        throw SizeMismatch("color vector has " + std::to_string(colors.size()) +
                           " entries for " + std::to_string(d.circles) + " circles");
    const F& field = ctx.field();
    if constexpr (F::modular) {
        for (unsigned c : colors)
            if (c + 2 > field.prime())
                throw ColorOutOfRange("color " + std::to_string(c) + " exceeds p-2 at p = " +
                                      std::to_string(field.prime()));
    }
    typename F::Elem pre = field.one();
    const std::vector<unsigned> n = d.leg_counts();
    for (unsigned c = 0; c < d.circles; ++c) {
        if (n[c] == 0) continue;
        if (colors[c] == 0) return field.zero();
        for (unsigned t = 0; t < n[c]; ++t) pre = pre * field.from_long(colors[c]);
    }
    for (unsigned v = 0; v < d.internal_vertex_count(); ++v) pre = pre * field.from_long(-2);
    // Colors beyond the p-admissible window still evaluate (to the reduction
    // of the rational value); the full-window color sums downstream need this.
    return pre * evaluate_net(diagram_net(d, colors), ctx, seed, /*require_p_admissible=*/false);
}

template <class F>
typename F::Elem omega_T(const DiagramSum& s, const std::vector<unsigned>& colors,
                         SkeinContext<F>& ctx, unsigned seed = 0) {
    typename F::Elem total = ctx.field().zero();
    for (const auto& [d, coeff] : s.terms)
        total = total + ctx.field().from_rational(coeff) * omega_T(d, colors, ctx, seed);
    return total;
}

// ---------------------------------------------------------------------------
// Weight polynomials
// ---------------------------------------------------------------------------

// The value of the weight system as a polynomial in the shifted colors
// mu_i = lambda_i + 1, stored as exponent vector -> coefficient.
struct WeightPolynomial {
    unsigned circles = 0;
    std::map<std::vector<unsigned>, Rational> coeff;

    bool operator==(const WeightPolynomial&) const = default;

    bool is_zero() const { return coeff.empty(); }
    unsigned degree_in(unsigned circle) const;
    // Evaluate at integer colors (mu_i = colors[i] + 1).
    Rational at_colors(const std::vector<unsigned>& colors) const;
    // Evaluate at rational shifted colors mu.
    Rational at_shifted(const std::vector<Rational>& mu) const;

    WeightPolynomial& operator+=(const WeightPolynomial& o);
    WeightPolynomial& scale(const Rational& c);
    friend WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b);
};

// Deterministic line-oriented rendering: one `a <k_1> ... <k_L> = <value>`
// line per monomial.
std::string weight_polynomial_str(const WeightPolynomial& w);

// Interpolate omega_sl2 on the grid lambda_i in {0..n_i+1} by exact divided
// differences, then verify the result: odd in every mu_i, degree at most
// n_i+1, denominators cleared by 2^{deg} prod (n_i+1)!, and agreement with
// direct evaluation on the shifted grid lambda_i in {1..n_i+2}.  Violations
// throw InterpolationInconsistent; diagrams of degree above the bound throw
// OutOfRange.
WeightPolynomial extract_weight_polynomial(const ChordDiagram& d, unsigned degree_bound = 4);
WeightPolynomial extract_weight_polynomial(const DiagramSum& s, unsigned degree_bound = 4);

// The weight polynomial divided by mu_i (exact by oddness): the circle-i
// infinitesimal character.  Multiplicative under connected sum on circle i.
WeightPolynomial infinitesimal_character(const ChordDiagram& d, unsigned circle,
                                         unsigned degree_bound = 4);

} // namespace skeinlab
