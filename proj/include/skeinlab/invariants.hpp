#pragma once

// Asymptotic 3-manifold invariants of algebraically split framed links:
// the colored Jones series of built-in unknot components, the rational
// asymptotic series F and its normalization O, closed forms for lens
// spaces L(n,1), the mod-p truncated invariant F_p for diagram payloads,
// and the per-prime comparison of the normalized mod-p values against
// their Gaussian-integral limit.

#include "skeinlab/gaussian.hpp"
#include "skeinlab/kirby.hpp"
#include "skeinlab/weight.hpp"

namespace skeinlab {

enum class LinkKind { unknot, disjoint_union, user_series };

// Framed link with diagonal linking matrix (the framings are the diagonal).
// Built-in kinds carry closed-form colored Jones series; user_series carries
// a diagram series for the zero-framed part of the link.
struct LinkPresentation {
    LinkKind kind = LinkKind::unknot;
    FramingVector framings;   // one nonzero entry per component
    unsigned sigma_plus = 0;  // positive linking-matrix eigenvalues
    unsigned sigma_minus = 0; // negative linking-matrix eigenvalues
    DiagramSeries payload;    // user_series only

    static LinkPresentation unknot(long f);
    // Split union of built-in unknots.
    static LinkPresentation disjoint_union(const std::vector<LinkPresentation>& parts);
    static LinkPresentation user_series(DiagramSeries z, FramingVector fs);

    unsigned components() const { return static_cast<unsigned>(framings.size()); }
};

// Truncated rational invariant series (arity 0).
struct OhtsukiSeries {
    HbarSeries series;
    int order() const { return series.order(); }
};

// sinh(hbar a / 2) / sinh(hbar / 2) as an arity-1 series; a -> 1 gives 1.
HbarSeries colored_jones_unknot(int order);

// F(L) = [-2 hbar / (e^{hbar/2} - e^{-hbar/2})]^{|L|}
//        e^{-(hbar/4) sum_i (f_i + 1/f_i)} I_{f,hbar}(J_{a+1/f}(L))
// for built-in links (the global factor is per component, which is what
// makes F multiplicative over split unions).  Throws ZeroFraming, and
// Malformed for user_series inputs (no closed-form colored Jones payload).
OhtsukiSeries F_asymptotic(const LinkPresentation& L, int order);

// O(L) = F(L) / (F(U+)^{sigma_+} F(U-)^{sigma_-}).
OhtsukiSeries O_asymptotic(const LinkPresentation& L, int order);

// e^{-(hbar/4)(n + 2/n - 3 sgn n)} sinh(hbar/(2|n|))/sinh(hbar/2); equals
// O_asymptotic of the framing-n unknot.  Throws ZeroFraming for n = 0.
OhtsukiSeries lens_closed_form(long n, int order);

// F_p(L) = hbar^{-N_p |L|} omega^{(p)}(Z(L) mod hbar^{N_p(|L|+1)+1}) for a
// user_series link: framing exponential times payload, phi_{N_p}, then the
// mod-p weight system per degree.  The payload must be supplied through
// degree N_p(|L|+1) (DegreeShortfall) with coefficients reducible mod p
// (DenominatorDivisibleByP).
FpSeries F_p_modular(const LinkPresentation& L, const PrimeContext& ctx, KirbyFlavor flavor);

struct StrongFermatReport {
    HbarSeries limit;        // the Gaussian-integral limit (flavor independent)
    FermatReport comparison; // per-prime normalized LHS vs the reduced limit
};

// For each prime p: computes
//   [(N_p+1)!/(eps hbar^{N_p})]^{|L|} (1/prod (f_i/p))
//     omega^{(p)}(prod e^{(hbar f_i/2) theta_i} hbar^{deg D} D mod hbar^{N_p(|L|+1)+1})
// with eps = -1 (sl2) or -1/2 (so3), and compares it against the reduction of
//   (prod e^{hbar f_i/4}) hbar^{|L|} I_{f,hbar}(prod a_i omega~_a(hbar^{deg D} D)).
// Throws DenominatorDivisibleByP when p divides a framing (vanishing
// Legendre symbol).
StrongFermatReport strong_fermat_case(const ChordDiagram& D, const FramingVector& framings,
                                      const std::vector<std::uint32_t>& primes,
                                      KirbyFlavor flavor);

// hbar-valuation of hbar^{|L|} I(prod a_i omega~_a(hbar^{deg D} D)) against
// half the internal vertex count; a vanishing polynomial reports the
// valuation sentinel order+1 and satisfies the bound.
struct ValuationBound {
    int valuation = 0;
    int internal_vertices = 0;
    bool satisfied = false;
};
ValuationBound i1_valuation_bound(const ChordDiagram& D, const FramingVector& framings);

} // namespace skeinlab
