#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "skeinlab/weight.hpp"

#include <array>

using namespace skeinlab;

namespace {

Rational casimir(unsigned lambda) { return Rational(lambda) * Rational(lambda + 2) / 2; }

ChordDiagram one_theta() { return theta_power(0, 1, 1); }

// Two chords on one circle in crossing position: ends at 0,2 and 1,3.
ChordDiagram crossing_diagram() {
    ChordDiagram d;
    d.circles = 1;
    d.legs = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    d.validate();
    return d;
}

// One chord joining two circles, one leg on each.
ChordDiagram bridge_diagram() {
    ChordDiagram d;
    d.circles = 2;
    d.legs = {{{0, 0}}, {{0, 1}}};
    d.validate();
    return d;
}

// Two circles joined by two chords, with one extra chord on circle 0.
ChordDiagram chained_pair() {
    ChordDiagram d;
    d.circles = 2;
    d.legs = {{{0, 0}, {0, 1}, {1, 0}, {2, 0}}, {{1, 1}, {2, 1}}};
    d.validate();
    return d;
}

// Double-vertex diagram on one circle with 4 legs: stems from legs 0..3 are
// edges 0..3, the bridge is edge 4 with side 0 at the first vertex.
ChordDiagram two_vertex(std::array<unsigned, 2> at_u, std::array<unsigned, 2> at_w) {
    ChordDiagram d;
    d.circles = 1;
    d.legs = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}}};
    d.ivertices.push_back({DiagEnd{at_u[0], 1}, DiagEnd{at_u[1], 1}, DiagEnd{4, 0}});
    d.ivertices.push_back({DiagEnd{4, 1}, DiagEnd{at_w[0], 1}, DiagEnd{at_w[1], 1}});
    d.validate();
    return d;
}

Rational lemma_sign(unsigned lambda_sum, unsigned degree) {
    return ((lambda_sum + degree) % 2) ? Rational(-1) : Rational(1);
}

WeightPolynomial poly_of(std::initializer_list<std::pair<std::vector<unsigned>, Rational>> terms,
                         unsigned circles = 1) {
    WeightPolynomial w;
    w.circles = circles;
    for (const auto& [k, c] : terms) w.coeff.emplace(k, c);
    return w;
}

} // namespace

TEST_CASE("tensor contraction on basic diagrams") {
    for (unsigned l = 0; l <= 6; ++l) {
        CHECK(omega_sl2(empty_diagram(1), {l}) == Rational(l + 1));
        CHECK(omega_sl2(one_theta(), {l}) == Rational(l + 1) * casimir(l));
    }
    CHECK(omega_sl2(one_theta(), {1}) == 3);

    // Powers of the single chord multiply the Casimir eigenvalue.
    for (unsigned l = 0; l <= 4; ++l)
        for (unsigned e = 0; e <= 3; ++e)
            CHECK(omega_sl2(theta_power(0, e, 1), {l}) ==
                  Rational(l + 1) * rational_pow(casimir(l), e));

    // Hand-contracted values for the crossing-chords diagram.
    CHECK(omega_sl2(crossing_diagram(), {1}) == Rational(-3, 2));
    CHECK(omega_sl2(crossing_diagram(), {2}) == 24);

    // The one-vertex diagram contracts to -2 times the single chord.
    CHECK(omega_sl2(tripod(), {1}) == -6);
    CHECK(omega_sl2(tripod(), {2}) == -24);
    CHECK(omega_sl2(tripod(), {3}) == -60);
    for (unsigned l = 0; l <= 4; ++l)
        CHECK(omega_sl2(tripod(), {l}) == Rational(-2) * omega_sl2(one_theta(), {l}));

    // Disjoint circles multiply; a single leg traces a lone generator to 0.
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b) {
            CHECK(omega_sl2(empty_diagram(2), {a, b}) == Rational((a + 1) * (b + 1)));
            CHECK(omega_sl2(theta_power(0, 1, 2), {a, b}) ==
                  Rational(a + 1) * casimir(a) * Rational(b + 1));
            CHECK(omega_sl2(bridge_diagram(), {a, b}) == 0);
        }

    // Linearity over sums.
    DiagramSum s;
    s.add(one_theta(), Rational(2));
    s.add(empty_diagram(1), Rational(-3));
    CHECK(omega_sl2(s, {2}) == Rational(2) * 12 - Rational(3) * 3);

    CHECK_THROWS_AS(omega_sl2(one_theta(), {1, 2}), SizeMismatch);
    CHECK_THROWS_AS(omega_sl2(empty_diagram(2), {1}), SizeMismatch);
}

TEST_CASE("direct structure-constant contraction agrees") {
    // Degree <= 2, with internal vertices.
    for (unsigned l = 0; l <= 4; ++l) {
        CHECK(omega_sl2_direct(tripod(), {l}) == omega_sl2(tripod(), {l}));
        for (unsigned b = 0; b <= 2; ++b)
            CHECK(omega_sl2_direct(tripod(2, 0, 0, 1), {l, b}) ==
                  omega_sl2(tripod(2, 0, 0, 1), {l, b}));
    }
    CHECK(omega_sl2_direct(tripod(), {1}) == -6);
    CHECK(omega_sl2_direct(tripod(2, 0, 0, 1), {3, 2}) == 0);

    // On pure diagrams both contractions coincide by construction.
    for (unsigned l = 0; l <= 3; ++l) {
        CHECK(omega_sl2_direct(one_theta(), {l}) == omega_sl2(one_theta(), {l}));
        CHECK(omega_sl2_direct(crossing_diagram(), {l}) == omega_sl2(crossing_diagram(), {l}));
    }

    // Still agrees above the promised degree.
    for (unsigned l = 1; l <= 3; ++l) {
        CHECK(omega_sl2_direct(h_diagram(), {l}) == omega_sl2(h_diagram(), {l}));
        CHECK(omega_sl2_direct(wheel3(), {l}) == omega_sl2(wheel3(), {l}));
    }
}

TEST_CASE("spin network route matches closed forms") {
    QField q;
    SkeinContext<QField> ctx(q);

    for (unsigned l = 0; l <= 5; ++l) {
        Rational sign = (l % 2) ? -1 : 1;
        CHECK(omega_T(empty_diagram(1), {l}, ctx) == sign * Rational(l + 1));
    }
    for (unsigned l = 0; l <= 4; ++l) {
        Rational sign = (l % 2) ? 1 : -1; // (-1)^{l+1}
        CHECK(omega_T(one_theta(), {l}, ctx) == sign * Rational(l + 1) * casimir(l));
    }
    CHECK(omega_T(tripod(), {1}, ctx) == 6);
    CHECK(omega_T(tripod(), {2}, ctx) == -24);
    CHECK(omega_T(tripod(), {3}, ctx) == 60);

    // Legs on a 0-colored circle kill the value.
    CHECK(omega_T(one_theta(), {0}, ctx) == 0);
    CHECK(omega_T(crossing_diagram(), {0}, ctx) == 0);

    // One-leg circles close a lone color-2 edge back onto the projector loop.
    CHECK(omega_T(bridge_diagram(), {2, 3}, ctx) == 0);

    // The layout seed must not matter.
    for (unsigned seed = 1; seed <= 3; ++seed) {
        CHECK(omega_T(wheel3(), {3}, ctx, seed) == omega_T(wheel3(), {3}, ctx, 0));
        CHECK(omega_T(theta_power(0, 2, 1), {2}, ctx, seed) ==
              omega_T(theta_power(0, 2, 1), {2}, ctx, 0));
    }

    // Sums evaluate term by term; reducing first changes nothing.
    CHECK(omega_T(stu_reduce(tripod()), {2}, ctx) == omega_T(tripod(), {2}, ctx));
    CHECK(omega_T(stu_reduce(wheel3()), {2}, ctx) == omega_T(wheel3(), {2}, ctx));
}

TEST_CASE("spin network route mod p") {
    FpField f5(5), f7(7);
    SkeinContext<FpField> ctx5(f5), ctx7(f7);

    CHECK(omega_T(one_theta(), {2}, ctx7).v == 2); // psi_7(-12)

    // Colors at the edge of the window evaluate to the reduction of the
    // rational value, here zero.
    CHECK(omega_T(one_theta(), {3}, ctx5).v == 0);
    CHECK(omega_T(one_theta(), {5}, ctx7).v == 0);
    CHECK(omega_T(tripod(), {3}, ctx5).v == psi_p(Rational(60), f5.context()).v);

    CHECK_THROWS_AS(omega_T(one_theta(), {6}, ctx7), ColorOutOfRange);
    CHECK_THROWS_AS(omega_T(empty_diagram(1), {4}, ctx5), ColorOutOfRange);

    // Native evaluation equals the reduction of the rational one.
    for (unsigned l = 0; l <= 3; ++l) {
        QField q;
        SkeinContext<QField> ctxq(q);
        for (const ChordDiagram& d : {one_theta(), tripod(), crossing_diagram()}) {
            CHECK(omega_T(d, {l}, ctx5) == psi_p(omega_T(d, {l}, ctxq), f5.context()));
            CHECK(omega_sl2_in(d, {l}, f5) == psi_p(omega_sl2(d, {l}), f5.context()));
            CHECK(omega_sl2_in(d, {l}, f7) == psi_p(omega_sl2(d, {l}), f7.context()));
        }
    }

    // Coefficients with p in the denominator cannot reduce.
    DiagramSum s;
    s.add(one_theta(), Rational(1, 5));
    CHECK_THROWS_AS(omega_sl2_in(s, {1}, f5), DenominatorDivisibleByP);
}

TEST_CASE("sign lemma ties the two evaluators") {
    QField q;
    SkeinContext<QField> ctx(q);

    // All pure one-circle diagrams of degree <= 3.
    for (unsigned deg = 0; deg <= 3; ++deg)
        for (const ChordDiagram& d : all_pure_diagrams(deg, 1))
            for (unsigned l = 1; l <= 4; ++l)
                CHECK(omega_sl2(d, {l}) == lemma_sign(l, d.degree()) * omega_T(d, {l}, ctx));

    // Two-circle families.
    std::vector<ChordDiagram> twos = all_pure_diagrams(2, 2);
    for (const ChordDiagram& d : all_pure_diagrams(1, 2)) twos.push_back(d);
    twos.push_back(bridge_diagram());
    twos.push_back(chained_pair());
    twos.push_back(tripod(2, 0, 0, 1));
    for (const ChordDiagram& d : twos)
        for (unsigned a = 1; a <= 3; ++a)
            for (unsigned b = 1; b <= 3; ++b)
                CHECK(omega_sl2(d, {a, b}) == lemma_sign(a + b, d.degree()) * omega_T(d, {a, b}, ctx));

    // Internal-vertex diagrams.
    for (const ChordDiagram& d : {tripod(), h_diagram(), wheel3()})
        for (unsigned l = 1; l <= 4; ++l)
            CHECK(omega_sl2(d, {l}) == lemma_sign(l, d.degree()) * omega_T(d, {l}, ctx));

    // The relation persists mod p.
    FpField f7(7);
    SkeinContext<FpField> ctx7(f7);
    for (const ChordDiagram& d : {one_theta(), tripod()})
        for (unsigned l = 1; l <= 4; ++l) {
            FpElem lhs = omega_sl2_in(d, {l}, f7);
            FpElem rhs = f7.from_rational(lemma_sign(l, d.degree())) * omega_T(d, {l}, ctx7);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("STU, AS, and IHX instances are in the kernel") {
    QField q;
    SkeinContext<QField> ctx(q);

    // STU: replacing a vertex by the two leg orderings preserves both
    // independent evaluations.
    for (const ChordDiagram& d : {tripod(), h_diagram(), wheel3()}) {
        DiagramSum reduced = stu_reduce(d);
        for (unsigned l = 1; l <= 3; ++l) {
            CHECK(omega_T(d, {l}, ctx) == omega_T(reduced, {l}, ctx));
            Rational direct = 0;
            for (const auto& [t, c] : reduced.terms) direct += c * omega_sl2_direct(t, {l});
            CHECK(omega_sl2_direct(d, {l}) == direct);
        }
    }

    // AS: a reversed vertex negates the value, so d + reversed is killed.
    for (const ChordDiagram& d : {tripod(), h_diagram(), wheel3()})
        for (unsigned v = 0; v < d.internal_vertex_count(); ++v) {
            DiagramSum kernel = as_rewrite(d, v); // reversed, coefficient -1
            kernel.scale(Rational(-1));
            kernel.add(d, Rational(1));
            for (unsigned l = 1; l <= 3; ++l) {
                CHECK(omega_sl2(kernel, {l}) == 0);
                CHECK(omega_T(kernel, {l}, ctx) == 0);
                Rational direct = 0;
                for (const auto& [t, c] : kernel.terms) direct += c * omega_sl2_direct(t, {l});
                CHECK(direct == 0);
            }
        }

    // IHX: the three ways of bridging four stems, alternating.
    ChordDiagram I = two_vertex({0, 1}, {2, 3});
    ChordDiagram H = two_vertex({0, 2}, {1, 3});
    ChordDiagram X = two_vertex({1, 2}, {0, 3});
    CHECK(canonicalize(I) == h_diagram());
    DiagramSum ihx;
    ihx.add(I, Rational(1));
    ihx.add(H, Rational(-1));
    ihx.add(X, Rational(1));
    for (unsigned l = 1; l <= 4; ++l) {
        CHECK(omega_sl2(ihx, {l}) == 0);
        CHECK(omega_T(ihx, {l}, ctx) == 0);
        Rational direct = 0;
        for (const auto& [t, c] : ihx.terms) direct += c * omega_sl2_direct(t, {l});
        CHECK(direct == 0);
    }

    // STU-reducing the IHX element lands in the four-term span: nonzero as a
    // free combination of pure diagrams, but killed by the weight system.
    DiagramSum four_term = stu_reduce(ihx);
    CHECK(!four_term.is_zero());
    for (unsigned l = 1; l <= 4; ++l) CHECK(omega_sl2(four_term, {l}) == 0);
}

TEST_CASE("weight polynomial extraction") {
    CHECK(extract_weight_polynomial(empty_diagram(1)) == poly_of({{{1}, Rational(1)}}));
    WeightPolynomial theta = extract_weight_polynomial(one_theta());
    CHECK(theta == poly_of({{{1}, Rational(-1, 2)}, {{3}, Rational(1, 2)}}));
    CHECK(theta.at_colors({0}) == 0);
    CHECK(theta.at_colors({1}) == 3);
    CHECK(theta.at_colors({2}) == 12);

    CHECK(extract_weight_polynomial(tripod()) ==
          poly_of({{{1}, Rational(1)}, {{3}, Rational(-1)}}));
    CHECK(extract_weight_polynomial(crossing_diagram()) ==
          poly_of({{{1}, Rational(5, 4)}, {{3}, Rational(-3, 2)}, {{5}, Rational(1, 4)}}));
    CHECK(extract_weight_polynomial(theta_power(0, 2, 1)) ==
          poly_of({{{1}, Rational(1, 4)}, {{3}, Rational(-1, 2)}, {{5}, Rational(1, 4)}}));
    CHECK(extract_weight_polynomial(wheel4()) ==
          poly_of({{{1}, Rational(2)}, {{3}, Rational(-4)}, {{5}, Rational(2)}}));

    // The two-circle one-vertex diagram vanishes identically (a lone
    // generator is traceless).
    CHECK(extract_weight_polynomial(tripod(2, 0, 0, 1)).is_zero());

    // Polynomials evaluate like the contraction off the grid.
    WeightPolynomial w3 = extract_weight_polynomial(wheel3());
    for (unsigned l = 0; l <= 7; ++l) CHECK(w3.at_colors({l}) == omega_sl2(wheel3(), {l}));
    CHECK(w3.degree_in(0) <= 4);

    // Sums extract linearly; reducing first changes nothing.
    CHECK(extract_weight_polynomial(stu_reduce(tripod())) == extract_weight_polynomial(tripod()));

    // Degree gate.
    CHECK_THROWS_AS(extract_weight_polynomial(multiply(wheel4(), one_theta())), OutOfRange);
    CHECK_THROWS_AS(extract_weight_polynomial(wheel3(), 2), OutOfRange);
    CHECK(extract_weight_polynomial(multiply(wheel4(), one_theta()), 5).degree_in(0) <= 7);

    // The clearing normalization: 2^{deg} prod (n_i+1)! wipes denominators.
    for (const ChordDiagram& d :
         {one_theta(), theta_power(0, 2, 1), crossing_diagram(), tripod(), h_diagram(), wheel3(),
          wheel4(), chained_pair()}) {
        WeightPolynomial w = extract_weight_polynomial(d);
        Rational clear(int_pow(Integer(2), d.degree()));
        for (unsigned n : d.leg_counts()) clear *= Rational(factorial(n + 1));
        for (const auto& [k, c] : w.coeff) {
            CHECK(boost::multiprecision::denominator(Rational(clear * c)) == 1);
            for (unsigned e : k) CHECK(e % 2 == 1);
        }
    }

    // Multivariate case: legs on both circles.
    WeightPolynomial cp = extract_weight_polynomial(chained_pair());
    CHECK(!cp.is_zero());
    for (unsigned a = 0; a <= 4; ++a)
        for (unsigned b = 0; b <= 4; ++b)
            CHECK(cp.at_colors({a, b}) == omega_sl2(chained_pair(), {a, b}));
}

TEST_CASE("infinitesimal characters") {
    CHECK(infinitesimal_character(empty_diagram(1), 0) == poly_of({{{0}, Rational(1)}}));
    WeightPolynomial chi_theta = infinitesimal_character(one_theta(), 0);
    CHECK(chi_theta == poly_of({{{0}, Rational(-1, 2)}, {{2}, Rational(1, 2)}}));
    for (unsigned l = 0; l <= 4; ++l) CHECK(chi_theta.at_colors({l}) == casimir(l));

    // Multiplicative under connected sum on the circle.
    CHECK(infinitesimal_character(theta_power(0, 2, 1), 0) == chi_theta * chi_theta);
    CHECK(infinitesimal_character(multiply(theta_power(0, 2, 1), one_theta()), 0) ==
          infinitesimal_character(theta_power(0, 2, 1), 0) * chi_theta);
    CHECK(infinitesimal_character(multiply(tripod(), one_theta()), 0) ==
          infinitesimal_character(tripod(), 0) * chi_theta);

    // Independent of the basepoint used for the connected sum.
    ChordDiagram prod = multiply(theta_power(0, 2, 1), one_theta());
    for (unsigned shift = 1; shift < 6; ++shift)
        CHECK(infinitesimal_character(rotate_circle(prod, 0, shift), 0) ==
              infinitesimal_character(prod, 0));

    CHECK_THROWS_AS(infinitesimal_character(one_theta(), 1), OutOfRange);
}
