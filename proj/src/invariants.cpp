#include "skeinlab/invariants.hpp"

#include <algorithm>
#include <sstream>

namespace skeinlab {

namespace {

void validate_framings(const FramingVector& framings) {
    for (long f : framings)
        if (f == 0) throw ZeroFraming();
}

void count_eigenvalues(const FramingVector& framings, unsigned& plus, unsigned& minus) {
    plus = minus = 0;
    for (long f : framings) (f > 0 ? plus : minus) += 1;
}

// sinh(hbar a_i / 2) / sinh(hbar / 2) for component i, arity-n, order exact.
HbarSeries jones_component(unsigned i, unsigned arity, int order) {
    const int deep = order + 1;
    AlphaPoly::Exponents e(arity, 0);
    e[i] = 1;
    const AlphaPoly half_alpha = AlphaPoly::monomial(e, Rational(1, 2));
    const AlphaPoly half = AlphaPoly::constant(Rational(1, 2), arity);
    const HbarSeries num = series_exp(HbarSeries::monomial(1, half_alpha, deep)) -
                           series_exp(HbarSeries::monomial(1, half_alpha * Rational(-1), deep));
    const HbarSeries den = series_exp(HbarSeries::monomial(1, half, deep)) -
                           series_exp(HbarSeries::monomial(1, half * Rational(-1), deep));
    return num / den; // valuation-1 quotient lands exactly on `order`
}

// (-2 hbar / (e^{hbar/2} - e^{-hbar/2}))^{count}, a unit with constant -2.
HbarSeries global_prefactor(unsigned count, int order) {
    const int deep = order + 1;
    const AlphaPoly half = AlphaPoly::constant(Rational(1, 2), 0);
    const HbarSeries den = series_exp(HbarSeries::monomial(1, half, deep)) -
                           series_exp(HbarSeries::monomial(1, half * Rational(-1), deep));
    const HbarSeries one =
        HbarSeries::monomial(1, AlphaPoly::constant(Rational(-2)), deep - 1) * den.reciprocal();
    return one.power(count);
}

// prod_i a_i * omega~_a(hbar^{deg D} D) as a single exact monomial block at
// hbar^{deg D + |L|} (the hbar^{|L|} prefactor folded in), integrated.
HbarSeries limit_integral(const ChordDiagram& D, const FramingVector& framings, int order) {
    const unsigned n = static_cast<unsigned>(framings.size());
    if (D.circles != n) {
        std::ostringstream os;
        os << "diagram has " << D.circles << " circles but " << n << " framings given";
        throw SizeMismatch(os.str());
    }
    validate_framings(framings);
    const WeightPolynomial wp = extract_weight_polynomial(D, std::max(4u, D.degree()));
    AlphaPoly poly(n);
    for (const auto& [exps, c] : wp.coeff) {
        AlphaPoly::Exponents e(n, 0);
        for (unsigned i = 0; i < n; ++i) e[i] = static_cast<int>(exps[i]) + 1;
        poly.add_term(e, c);
    }
    const int block = static_cast<int>(D.degree() + n);
    const int deep = std::max(order, block);
    HbarSeries integrand(n, deep);
    integrand.set_coeff(block, poly);
    return formal_integrate(integrand, framings);
}

FpSeries modular_series(const DiagramSeries& zero_framed, const FramingVector& framings,
                        const PrimeContext& ctx, KirbyFlavor flavor, unsigned cap) {
    const unsigned n = static_cast<unsigned>(framings.size());
    const std::vector<long long> fll(framings.begin(), framings.end());
    const DiagramSeries full =
        series_multiply(framing_exponential(fll, cap, n), zero_framed, cap);
    DiagramSeries projected = phi_n(full, ctx.n_p());
    projected.ensure_order(cap);
    const FpField field(ctx.p());
    FpSeries out(ctx.p(), static_cast<int>(cap));
    for (unsigned m = 0; m <= cap; ++m)
        out.set_coeff(static_cast<int>(m), omega_p(projected.slots[m], field, flavor).value);
    return out;
}

} // namespace

LinkPresentation LinkPresentation::unknot(long f) {
    LinkPresentation L;
    L.kind = LinkKind::unknot;
    L.framings = {f};
    validate_framings(L.framings);
    count_eigenvalues(L.framings, L.sigma_plus, L.sigma_minus);
    return L;
}

LinkPresentation LinkPresentation::disjoint_union(const std::vector<LinkPresentation>& parts) {
    LinkPresentation L;
    L.kind = LinkKind::disjoint_union;
    for (const LinkPresentation& part : parts) {
        if (part.kind == LinkKind::user_series)
            throw Malformed("disjoint unions are built from built-in components");
        L.framings.insert(L.framings.end(), part.framings.begin(), part.framings.end());
    }
    validate_framings(L.framings);
    count_eigenvalues(L.framings, L.sigma_plus, L.sigma_minus);
    return L;
}

LinkPresentation LinkPresentation::user_series(DiagramSeries z, FramingVector fs) {
    if (z.circles != fs.size()) {
        std::ostringstream os;
        os << "payload has " << z.circles << " circles but " << fs.size() << " framings given";
        throw SizeMismatch(os.str());
    }
    LinkPresentation L;
    L.kind = LinkKind::user_series;
    L.framings = std::move(fs);
    validate_framings(L.framings);
    count_eigenvalues(L.framings, L.sigma_plus, L.sigma_minus);
    L.payload = std::move(z);
    return L;
}

HbarSeries colored_jones_unknot(int order) { return jones_component(0, 1, order); }

OhtsukiSeries F_asymptotic(const LinkPresentation& L, int order) {
    validate_framings(L.framings);
    if (L.kind == LinkKind::user_series)
        throw Malformed("user-series links carry no closed-form colored Jones payload");
    const unsigned n = L.components();
    // The integral sends hbar^m a^k (k <= m in every Jones factor) to degree
    // m - k/2 >= m/2, so depth 2*order + 2 makes every degree <= order exact.
    const int deep = 2 * order + 2;

    HbarSeries jones = HbarSeries::constant(Rational(1), n, deep);
    std::vector<Rational> shifts;
    Rational expo(0);
    for (unsigned i = 0; i < n; ++i) {
        jones = jones * jones_component(i, n, deep);
        const Rational f(L.framings[i]);
        shifts.push_back(Rational(1) / f);
        expo -= (f + Rational(1) / f) / Rational(4);
    }
    const HbarSeries integral = formal_integrate(jones.shift_alpha(shifts), L.framings);

    const HbarSeries series = global_prefactor(n, deep) *
                              series_exp(HbarSeries::monomial(1, AlphaPoly::constant(expo), deep)) *
                              integral;
    return {series.truncate(order)};
}

OhtsukiSeries O_asymptotic(const LinkPresentation& L, int order) {
    HbarSeries value = F_asymptotic(L, order).series;
    if (L.sigma_plus > 0)
        value = value * F_asymptotic(LinkPresentation::unknot(1), order)
                            .series.power(L.sigma_plus)
                            .reciprocal();
    if (L.sigma_minus > 0)
        value = value * F_asymptotic(LinkPresentation::unknot(-1), order)
                            .series.power(L.sigma_minus)
                            .reciprocal();
    return {value};
}

OhtsukiSeries lens_closed_form(long n, int order) {
    if (n == 0) throw ZeroFraming();
    const long sign = n > 0 ? 1 : -1;
    const Rational expo =
        (Rational(n) + Rational(2) / Rational(n) - Rational(3 * sign)) * Rational(-1, 4);
    const HbarSeries gauss = series_exp(HbarSeries::monomial(1, AlphaPoly::constant(expo), order));
    return {gauss * sinh_ratio(Rational(1, n * sign), order)};
}

FpSeries F_p_modular(const LinkPresentation& L, const PrimeContext& ctx, KirbyFlavor flavor) {
    if (L.kind != LinkKind::user_series)
        throw Malformed("the modular invariant needs a user-series diagram payload");
    validate_framings(L.framings);
    const unsigned n = L.components();
    const unsigned np = ctx.n_p();
    const unsigned cap = np * (n + 1);
    if (L.payload.order() < cap) {
        std::ostringstream os;
        os << "payload supplied through degree " << L.payload.order() << " but p = " << ctx.p()
           << " needs degree N_p(|L|+1) = " << cap;
        throw DegreeShortfall(os.str());
    }
    const FpSeries graded = modular_series(L.payload, L.framings, ctx, flavor, cap);
    // Degrees below N_p|L| are killed by phi_{N_p}; the window that survives
    // is exactly the hbar^{-N_p|L|}-normalized series of order N_p.
    return graded.shift_hbar(-static_cast<int>(np * n)).canonical();
}

StrongFermatReport strong_fermat_case(const ChordDiagram& D, const FramingVector& framings,
                                      const std::vector<std::uint32_t>& primes,
                                      KirbyFlavor flavor) {
    const unsigned n = static_cast<unsigned>(framings.size());
    unsigned max_np = 0;
    for (std::uint32_t p : primes) max_np = std::max(max_np, PrimeContext(p).n_p());

    const int limit_order = static_cast<int>(std::max<unsigned>(max_np, D.degree() + n));
    Rational quarter_sum(0);
    for (long f : framings) quarter_sum += Rational(f, 4);
    const HbarSeries limit =
        series_exp(HbarSeries::monomial(1, AlphaPoly::constant(quarter_sum), limit_order)) *
        limit_integral(D, framings, limit_order);

    FermatSequence seq;
    for (std::uint32_t p : primes) {
        const PrimeContext ctx(p);
        const unsigned np = ctx.n_p();
        const unsigned cap = np * (n + 1);

        FpElem scale = fp_pow(factorial_mod(np + 1, ctx) /
                                  psi_p(flavor == KirbyFlavor::sl2 ? Rational(-1) : Rational(-1, 2),
                                        ctx),
                              n);
        for (long f : framings) {
            const int chi = legendre(Integer(f), ctx);
            if (chi == 0) {
                std::ostringstream os;
                os << "framing " << f << " is divisible by p = " << p;
                throw DenominatorDivisibleByP(os.str());
            }
            if (chi < 0) scale = scale / FpElem(p - 1, p);
        }

        DiagramSeries base;
        base.circles = n;
        base.ensure_order(cap);
        if (D.degree() <= cap) base.slots[D.degree()].add(D, Rational(1));
        const FpSeries graded = modular_series(base, framings, ctx, flavor, cap);
        seq.add((graded * scale).shift_hbar(-static_cast<int>(np * n)).canonical());
    }
    return {limit, fermat_compare(seq, limit)};
}

ValuationBound i1_valuation_bound(const ChordDiagram& D, const FramingVector& framings) {
    const int order = static_cast<int>(D.degree() + framings.size()) + 1;
    const HbarSeries value = limit_integral(D, framings, order);
    ValuationBound out;
    out.valuation = value.true_valuation();
    out.internal_vertices = static_cast<int>(D.internal_vertex_count());
    out.satisfied = 2 * out.valuation >= out.internal_vertices;
    return out;
}

} // namespace skeinlab
