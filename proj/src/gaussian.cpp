#include "skeinlab/gaussian.hpp"

#include <algorithm>
#include <sstream>

namespace skeinlab {

namespace {

void validate_framings(const FramingVector& framings, unsigned arity) {
    if (framings.size() != arity) {
        std::ostringstream os;
        os << "framing vector has " << framings.size() << " entries but series arity is "
           << arity;
        throw SizeMismatch(os.str());
    }
    for (long f : framings)
        if (f == 0) throw ZeroFraming();
}

// (-1/f)^{k/2} * k! / (k/2)! for even k >= 0.
Rational monomial_factor(int k, long f) {
    const Rational minus_inv = Rational(-1) / Rational(f); // f < 0 allowed
    Rational r(1);
    for (int j = 0; j < k / 2; ++j) r = r * minus_inv;
    for (int j = k / 2 + 1; j <= k; ++j) r = r * Rational(j);
    return r;
}

// The monomial rule extended linearly, keeping whatever negative hbar-degrees
// arise in the result's Laurent window.  Framings assumed validated.
HbarSeries integrate_laurent(const HbarSeries& P, const FramingVector& framings) {
    std::map<int, Rational> out;
    int min_deg = 0;
    for (int n = P.lo(); n <= P.order(); ++n) {
        for (const auto& [exps, c] : P.coeff(n).terms()) {
            bool even = true;
            int half_sum = 0;
            for (int e : exps) {
                if (e % 2 != 0) { even = false; break; }
                half_sum += e / 2;
            }
            if (!even) continue;
            Rational factor = c;
            for (std::size_t i = 0; i < exps.size(); ++i)
                factor = factor * monomial_factor(exps[i], framings[i]);
            const int deg = n - half_sum;
            min_deg = std::min(min_deg, deg);
            auto [it, inserted] = out.emplace(deg, factor);
            if (!inserted) it->second = it->second + factor;
        }
    }
    HbarSeries base(0, P.order() - min_deg);
    for (const auto& [deg, c] : out) base.set_coeff(deg - min_deg, AlphaPoly::constant(c));
    return base.shift_hbar(min_deg);
}

} // namespace

HbarSeries formal_integrate(const HbarSeries& P, const FramingVector& framings) {
    validate_framings(framings, P.arity());
    return integrate_laurent(P, framings).canonical();
}

bool gaussian_shift_check(const Rational& q, long framing, const HbarSeries& P, int order) {
    if (P.arity() != 1) {
        std::ostringstream os;
        os << "shift identity is stated for a single color variable, got arity " << P.arity();
        throw SizeMismatch(os.str());
    }
    if (framing == 0) throw ZeroFraming();
    const FramingVector fv{framing};
    const int eff = std::min(order, P.order());

    // The identity is verified for the truncation of P as exact polynomial
    // data.  Since the integral sends hbar^n a^k to degree n - k/2, degrees
    // <= eff of either side draw on integrand degrees up to 2*eff plus the
    // a-degree of P, so both exponentials are expanded to that depth and the
    // truncation of P is re-declared at it.
    int alpha_deg = 0;
    for (int n = P.lo(); n <= eff; ++n)
        alpha_deg = std::max(alpha_deg, P.coeff(n).total_degree());
    const int deep = 2 * eff + alpha_deg;
    HbarSeries pt(1, deep);
    for (int n = std::max(P.lo(), 0); n <= eff; ++n) pt.set_coeff(n, P.coeff(n));

    const HbarSeries expo =
        series_exp(HbarSeries::monomial(1, AlphaPoly::monomial({1}, q), deep));
    const HbarSeries lhs = integrate_laurent(expo * pt, fv);

    const Rational shift = q * Rational(-2) / Rational(framing);
    const Rational quad = q * q * Rational(-1) / Rational(framing);
    const HbarSeries gauss_factor =
        series_exp(HbarSeries::monomial(1, AlphaPoly::constant(quad), deep));
    const HbarSeries rhs = integrate_laurent(pt.shift_alpha({shift}), fv) * gauss_factor;

    const int lo = std::min(lhs.lo(), rhs.lo());
    const int hi = std::min({eff, lhs.order(), rhs.order()});
    for (int n = lo; n <= hi; ++n)
        if (!(lhs.coeff(n) == rhs.coeff(n))) return false;
    return true;
}

void FermatSequence::add(const FpSeries& s) {
    const PrimeContext ctx(s.prime());
    if (s.order() != static_cast<int>(ctx.n_p())) {
        std::ostringstream os;
        os << "entry for p = " << s.prime() << " has order " << s.order() << " but N_p = "
           << ctx.n_p();
        throw Malformed(os.str());
    }
    if (entries.count(s.prime())) {
        std::ostringstream os;
        os << "duplicate entry for p = " << s.prime();
        throw Malformed(os.str());
    }
    entries.emplace(s.prime(), s);
}

FermatReport fermat_compare(const FermatSequence& seq, const HbarSeries& limit) {
    FermatReport report;
    for (const auto& [p, entry] : seq.entries) {
        const PrimeContext ctx(p);
        const int np = static_cast<int>(ctx.n_p());
        if (limit.order() < np) {
            std::ostringstream os;
            os << "limit series has order " << limit.order() << " but p = " << p
               << " needs depth N_p = " << np;
            throw DegreeShortfall(os.str());
        }
        FermatRow row;
        row.prime = p;
        try {
            const FpSeries reduced = reduce_series(limit, ctx);
            for (int n = 0; n <= np; ++n) {
                if (!(reduced.coeff(n) == entry.coeff(n))) {
                    row.status = FermatStatus::fail;
                    row.mismatch_degree = n;
                    break;
                }
            }
        } catch (const DenominatorDivisibleByP& e) {
            row.status = FermatStatus::excluded;
            row.detail = e.what();
        }
        if (row.status == FermatStatus::fail) report.all_pass = false;
        if (row.status != FermatStatus::pass) report.threshold = std::max(report.threshold, p);
        report.rows.push_back(row);
    }
    return report;
}

} // namespace skeinlab
