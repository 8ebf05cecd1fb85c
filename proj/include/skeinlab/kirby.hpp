#pragma once

// Mod-p Kirby weight systems.  omega_p sums the colored weights over the
// finite color window I_p = {0,...,p-2} (all colors for sl2, even colors for
// so3) against the signed dimensions Delta_lambda = (-1)^lambda (lambda+1),
// pairing Delta with the trace system in the Kirby normalization.  Since that
// normalization differs from the raw spin-network evaluator omega_T by
// exactly the sign rule's (-1)^{sum lambda} (-1)^{deg}, the sum collapses to
// the plain sl2 coloring sum
//
//     omega_p(D) = sum_{lambda in I_p^L} prod_i (lambda_i+1)
//                  * omega_sl2_lambda(D)                        in F_p.
//
// (Concretely: the empty diagram on one lambda-colored circle contributes
// (lambda+1)^2 per color, so omega_p(empty) = epsilon_p(2) = 0.)  The result
// is independent of circle orientation up to (-1)^{#legs} and is invariant
// under the chord-diagram shadow of the second Kirby move: the 2^n lift-sum
// that re-attaches each subset of a donor circle's legs to a receiver circle
// (handle_slide below).
//
// Evaluation routes:
//  * omega_p: through the weight polynomial when its degree bound allows;
//    the color sum then collapses to power sums (epsilon_p / even_power_sum)
//    applied to the coefficients.  Falls back to the brute sum per term.
//  * omega_p_brute: literal per-coloring summation, natively in F_p.  The
//    contraction route sums prod(lambda_i+1) * omega_sl2 directly; the
//    spin_net route drives the skein evaluator per coloring, compensating
//    its (-1)^{deg} relative sign, and is practical only for small primes.

#include "skeinlab/weight.hpp"

namespace skeinlab {

enum class KirbyFlavor { sl2, so3 };

struct KirbyValue {
    FpElem value;
    KirbyFlavor flavor = KirbyFlavor::sl2;
    std::uint32_t prime = 0;
};

enum class BruteRoute { contraction, spin_net };

KirbyValue omega_p(const ChordDiagram& d, const FpField& field, KirbyFlavor flavor);
KirbyValue omega_p(const DiagramSum& s, const FpField& field, KirbyFlavor flavor);

KirbyValue omega_p_brute(const ChordDiagram& d, const FpField& field, KirbyFlavor flavor,
                         BruteRoute route = BruteRoute::contraction);
KirbyValue omega_p_brute(const DiagramSum& s, const FpField& field, KirbyFlavor flavor,
                         BruteRoute route = BruteRoute::contraction);

// Brute contraction sum with the coloring range split into `blocks` contiguous
// index blocks, each summed in its own thread when blocks > 1 and combined in
// block order.  Exactly equal to the sequential sum for every block count.
KirbyValue omega_p_partitioned(const DiagramSum& s, const FpField& field, KirbyFlavor flavor,
                               unsigned blocks);

// The diagram with the cyclic order of legs on one circle reversed (the
// diagrammatic effect of reversing that circle's orientation).
ChordDiagram reverse_circle(const ChordDiagram& d, unsigned circle);

// omega_p(D) == (-1)^{n_i} omega_p(reverse_circle(D, i)) for both flavors.
bool orientation_reversal_check(const ChordDiagram& d, unsigned circle, const FpField& field);

// Lift-sum of the second Kirby move: the sum over all subsets S of the donor
// circle's legs of the diagram where the legs in S are re-attached to the
// receiver circle, order-preservingly, as a block at the receiver's basepoint.
// Throws OutOfRange for bad indices, donor == receiver, or > 20 donor legs.
DiagramSum handle_slide(const ChordDiagram& d, unsigned donor, unsigned receiver);
DiagramSum handle_slide(const DiagramSum& s, unsigned donor, unsigned receiver);

bool check_kirby_pair(const DiagramSum& a, const DiagramSum& b, const FpField& field,
                      KirbyFlavor flavor);
bool check_kirby_pair(const ChordDiagram& a, const DiagramSum& b, const FpField& field,
                      KirbyFlavor flavor);

// omega_p^{sl2}(D) == 2^L omega_p^{so3}(D); requires every circle to carry at
// most 2 N_p + 1 legs, else throws LegCountTooLarge.
bool so3_sl2_relation_check(const ChordDiagram& d, const FpField& field);

// omega_p(D) == omega_p(phi_{N_p}(D)) for both flavors.
bool phi_stability_check(const ChordDiagram& d, const FpField& field);

// Built-in slide test family: n parallel chords from the donor circle 1 to
// the receiver circle 0 (n legs on the donor).
ChordDiagram slide_family(unsigned n);

} // namespace skeinlab
