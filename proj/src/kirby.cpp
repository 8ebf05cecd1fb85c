#include "skeinlab/kirby.hpp"

#include <algorithm>
#include <thread>

namespace skeinlab {

namespace {

// STU-reduced pure terms with mod-p coefficients.  In the Kirby trace
// normalization the signed dimensions Delta_lambda pair against the trace
// system so that the (-1)^lambda factors cancel, leaving
//   omega_p = sum_lambda prod_i (lambda_i+1) * coeff * omega_sl2.
struct PureTerm {
    ChordDiagram d;
    FpElem coeff;
};

unsigned common_circles(const DiagramSum& s) {
    unsigned circles = s.terms.begin()->first.circles;
    for (const auto& [d, c] : s.terms)
        if (d.circles != circles)
            throw SizeMismatch("diagram sum mixes different circle counts");
    return circles;
}

std::vector<PureTerm> pure_terms(const DiagramSum& s, const FpField& field) {
    std::vector<PureTerm> out;
    DiagramSum reduced = stu_reduce(s);
    out.reserve(reduced.terms.size());
    for (const auto& [d, c] : reduced.terms)
        out.push_back({d, field.from_rational(c)});
    return out;
}

unsigned long colors_per_circle(std::uint32_t p, KirbyFlavor flavor) {
    return flavor == KirbyFlavor::so3 ? (p - 1) / 2 : p - 1;
}

unsigned long coloring_count(unsigned circles, unsigned long m) {
    unsigned long total = 1;
    for (unsigned i = 0; i < circles; ++i) total *= m;
    return total;
}

// Sequential brute contraction over the flat coloring indices [lo, hi).
FpElem contraction_block(const std::vector<PureTerm>& terms, unsigned circles,
                         const FpField& field, KirbyFlavor flavor, unsigned long lo,
                         unsigned long hi) {
    const unsigned long m = colors_per_circle(field.prime(), flavor);
    std::vector<unsigned> colors(circles, 0);
    FpElem total = field.zero();
    for (unsigned long idx = lo; idx < hi; ++idx) {
        unsigned long rest = idx;
        FpElem mu = field.one();
        for (unsigned c = 0; c < circles; ++c) {
            unsigned lambda = static_cast<unsigned>(rest % m);
            rest /= m;
            if (flavor == KirbyFlavor::so3) lambda *= 2;
            colors[c] = lambda;
            mu = mu * field.from_long(static_cast<long>(lambda) + 1);
        }
        FpElem per = field.zero();
        for (const PureTerm& t : terms)
            per = per + t.coeff * detail::omega_sl2_pure(t.d, colors, field);
        total = total + mu * per;
    }
    return total;
}

// The raw spin-network evaluator carries (-1)^{deg} relative to the Kirby
// trace normalization (the sign rule of the weight layer), so the pairing
// against Delta_lambda compensates per diagram degree.
FpElem spin_net_sum(const DiagramSum& s, unsigned circles, const FpField& field,
                    KirbyFlavor flavor) {
    FpField local(field.prime());
    SkeinContext<FpField> ctx(local);
    const unsigned long m = colors_per_circle(field.prime(), flavor);
    const unsigned long total_colorings = coloring_count(circles, m);
    std::vector<unsigned> colors(circles, 0);
    FpElem total = field.zero();
    for (unsigned long idx = 0; idx < total_colorings; ++idx) {
        unsigned long rest = idx;
        FpElem delta = field.one();
        for (unsigned c = 0; c < circles; ++c) {
            unsigned lambda = static_cast<unsigned>(rest % m);
            rest /= m;
            if (flavor == KirbyFlavor::so3) lambda *= 2;
            colors[c] = lambda;
            long dim = static_cast<long>(lambda) + 1;
            delta = delta * field.from_long(lambda % 2 ? -dim : dim);
        }
        FpElem per = field.zero();
        for (const auto& [d, c] : s.terms) {
            FpElem v = field.from_rational(c) * omega_T(d, colors, ctx);
            per = per + (d.degree() % 2 ? -v : v);
        }
        total = total + delta * per;
    }
    return total;
}

// Fast route for a single diagram: collapse the color sum to power sums of
// the weight-polynomial coefficients.  Falls back to the brute contraction
// when the polynomial is unavailable (degree beyond the extraction bound, or
// p divides a clearing factorial).
FpElem omega_p_single(const ChordDiagram& d, const FpField& field, KirbyFlavor flavor) {
    try {
        WeightPolynomial w = extract_weight_polynomial(d);
        const PrimeContext& ctx = field.context();
        FpElem acc = field.zero();
        for (const auto& [k, c] : w.coeff) {
            FpElem term = field.from_rational(c);
            for (unsigned e : k) {
                unsigned long power = e + 1; // even, since e is odd
                term = term * (flavor == KirbyFlavor::so3 ? even_power_sum(power / 2, ctx)
                                                          : epsilon_p(power, ctx));
            }
            acc = acc + term;
        }
        return acc;
    } catch (const OutOfRange&) {
    } catch (const DenominatorDivisibleByP&) {
    }
    DiagramSum single;
    single.add(d, Rational(1));
    std::vector<PureTerm> terms = pure_terms(single, field);
    unsigned long m = colors_per_circle(field.prime(), flavor);
    return contraction_block(terms, d.circles, field, flavor, 0, coloring_count(d.circles, m));
}

} // namespace

KirbyValue omega_p(const ChordDiagram& d, const FpField& field, KirbyFlavor flavor) {
    return {omega_p_single(d, field, flavor), flavor, field.prime()};
}

KirbyValue omega_p(const DiagramSum& s, const FpField& field, KirbyFlavor flavor) {
    FpElem total = field.zero();
    for (const auto& [d, c] : s.terms)
        total = total + field.from_rational(c) * omega_p_single(d, field, flavor);
    return {total, flavor, field.prime()};
}

KirbyValue omega_p_brute(const ChordDiagram& d, const FpField& field, KirbyFlavor flavor,
                         BruteRoute route) {
    DiagramSum single;
    single.add(d, Rational(1));
    return omega_p_brute(single, field, flavor, route);
}

KirbyValue omega_p_brute(const DiagramSum& s, const FpField& field, KirbyFlavor flavor,
                         BruteRoute route) {
    if (s.terms.empty()) return {field.zero(), flavor, field.prime()};
    unsigned circles = common_circles(s);
    if (route == BruteRoute::spin_net)
        return {spin_net_sum(s, circles, field, flavor), flavor, field.prime()};
    std::vector<PureTerm> terms = pure_terms(s, field);
    unsigned long m = colors_per_circle(field.prime(), flavor);
    FpElem value =
        contraction_block(terms, circles, field, flavor, 0, coloring_count(circles, m));
    return {value, flavor, field.prime()};
}

KirbyValue omega_p_partitioned(const DiagramSum& s, const FpField& field, KirbyFlavor flavor,
                               unsigned blocks) {
    if (blocks == 0 || blocks > 64)
        throw OutOfRange("partitioned sum wants 1..64 blocks, got " + std::to_string(blocks));
    if (s.terms.empty()) return {field.zero(), flavor, field.prime()};
    unsigned circles = common_circles(s);
    std::vector<PureTerm> terms = pure_terms(s, field);
    unsigned long total_colorings =
        coloring_count(circles, colors_per_circle(field.prime(), flavor));
    if (blocks > total_colorings) blocks = static_cast<unsigned>(total_colorings);

    std::vector<FpElem> partial(blocks, field.zero());
    std::vector<std::thread> pool;
    pool.reserve(blocks);
    for (unsigned b = 0; b < blocks; ++b) {
        unsigned long lo = total_colorings * b / blocks;
        unsigned long hi = total_colorings * (b + 1) / blocks;
        pool.emplace_back([&, b, lo, hi] {
            partial[b] = contraction_block(terms, circles, field, flavor, lo, hi);
        });
    }
    for (std::thread& t : pool) t.join();

    FpElem total = field.zero();
    for (const FpElem& x : partial) total = total + x;
    return {total, flavor, field.prime()};
}

ChordDiagram reverse_circle(const ChordDiagram& d, unsigned circle) {
    if (circle >= d.circles)
        throw OutOfRange("reverse_circle: circle " + std::to_string(circle) + " of " +
                         std::to_string(d.circles));
    ChordDiagram r = d;
    std::reverse(r.legs[circle].begin(), r.legs[circle].end());
    return r;
}

bool orientation_reversal_check(const ChordDiagram& d, unsigned circle, const FpField& field) {
    ChordDiagram rev = reverse_circle(d, circle);
    bool odd = d.legs[circle].size() % 2;
    for (KirbyFlavor flavor : {KirbyFlavor::sl2, KirbyFlavor::so3}) {
        FpElem lhs = omega_p(d, field, flavor).value;
        FpElem rhs = omega_p(rev, field, flavor).value;
        if (odd) rhs = -rhs;
        if (lhs != rhs) return false;
    }
    return true;
}

DiagramSum handle_slide(const ChordDiagram& d, unsigned donor, unsigned receiver) {
    if (donor >= d.circles || receiver >= d.circles)
        throw OutOfRange("handle slide: circle index out of range");
    if (donor == receiver) throw OutOfRange("handle slide: donor and receiver must differ");
    const std::vector<DiagEnd> src = d.legs[donor];
    if (src.size() > 20) throw OutOfRange("handle slide: too many donor legs");
    DiagramSum out;
    for (unsigned long mask = 0; mask < (1ul << src.size()); ++mask) {
        ChordDiagram t = d;
        std::vector<DiagEnd> stay, moved;
        for (unsigned i = 0; i < src.size(); ++i)
            ((mask >> i) & 1 ? moved : stay).push_back(src[i]);
        t.legs[donor] = stay;
        moved.insert(moved.end(), d.legs[receiver].begin(), d.legs[receiver].end());
        t.legs[receiver] = moved;
        out.add(t, Rational(1));
    }
    return out;
}

DiagramSum handle_slide(const DiagramSum& s, unsigned donor, unsigned receiver) {
    DiagramSum out;
    for (const auto& [d, c] : s.terms) {
        DiagramSum slid = handle_slide(d, donor, receiver);
        slid.scale(c);
        out += slid;
    }
    return out;
}

bool check_kirby_pair(const DiagramSum& a, const DiagramSum& b, const FpField& field,
                      KirbyFlavor flavor) {
    return omega_p(a, field, flavor).value == omega_p(b, field, flavor).value;
}

bool check_kirby_pair(const ChordDiagram& a, const DiagramSum& b, const FpField& field,
                      KirbyFlavor flavor) {
    DiagramSum lhs;
    lhs.add(a, Rational(1));
    return check_kirby_pair(lhs, b, field, flavor);
}

bool so3_sl2_relation_check(const ChordDiagram& d, const FpField& field) {
    unsigned limit = 2 * field.context().n_p() + 1;
    for (unsigned n : d.leg_counts())
        if (n > limit)
            throw LegCountTooLarge("a circle carries " + std::to_string(n) + " legs, limit " +
                                   std::to_string(limit) + " at p = " +
                                   std::to_string(field.prime()));
    FpElem lhs = omega_p(d, field, KirbyFlavor::sl2).value;
    FpElem two_pow = fp_pow(field.from_long(2), d.circles);
    return lhs == two_pow * omega_p(d, field, KirbyFlavor::so3).value;
}

bool phi_stability_check(const ChordDiagram& d, const FpField& field) {
    DiagramSum projected = phi_n(d, field.context().n_p());
    for (KirbyFlavor flavor : {KirbyFlavor::sl2, KirbyFlavor::so3})
        if (omega_p(d, field, flavor).value != omega_p(projected, field, flavor).value)
            return false;
    return true;
}

ChordDiagram slide_family(unsigned n) {
    ChordDiagram d;
    d.circles = 2;
    d.legs.resize(2);
    for (unsigned i = 0; i < n; ++i) {
        d.legs[0].push_back({i, 0});
        d.legs[1].push_back({i, 1});
    }
    d.validate();
    return d;
}

} // namespace skeinlab
