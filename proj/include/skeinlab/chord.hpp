#pragma once

// Chord diagrams on oriented circles with internal trivalent graphs, the
// AS/STU rewriting calculus, degree bookkeeping, the phi_n projections,
// framing exponentials, and a text file format for diagrams and sums.
//
// Representation.  A diagram on L circles is stored as
//   - per circle, the cyclic sequence of edge-ends attached to it (the legs);
//     index in the list is the position, position 0 is the basepoint;
//   - a list of internal trivalent vertices, each a triple of edge-ends in
//     counterclockwise cyclic order;
//   - edges are abstract: edge e has exactly two ends (e,0) and (e,1), and
//     every end is attached at exactly one leg slot or vertex slot.
// Circles are oriented and labeled (they are link components): neither
// reversing a circle nor permuting circles is quotiented by canonicalize.
// Reversing a vertex's cyclic order is the AS move and carries a sign.

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "skeinlab/rational.hpp"

namespace skeinlab {

// One end of a diagram edge.
struct DiagEnd {
  unsigned edge = 0;
  unsigned side = 0;  // 0 or 1
  auto operator<=>(const DiagEnd&) const = default;
};

struct ChordDiagram {
  unsigned circles = 0;
  std::vector<std::vector<DiagEnd>> legs;        // size == circles
  std::vector<std::array<DiagEnd, 3>> ivertices; // ccw cyclic order

  auto operator<=>(const ChordDiagram&) const = default;

  unsigned edge_count() const;
  // Degree: (number of univalent + number of trivalent vertices) / 2.
  unsigned degree() const;
  unsigned internal_vertex_count() const;
  // Number of legs on each circle.
  std::vector<unsigned> leg_counts() const;
  // Throws Malformed unless every end (e,0),(e,1), e < edge_count(), is
  // attached exactly once.
  void validate() const;
};

// Deterministic normal form: the lexicographically least partner encoding
// over all circle rotations, internal-vertex orderings, and vertex-triple
// rotations.  Diagram equality after canonicalize is structural equality.
ChordDiagram canonicalize(const ChordDiagram& d);

// Formal linear combination with canonicalized keys and no zero terms.
struct DiagramSum {
  std::map<ChordDiagram, Rational> terms;

  bool operator==(const DiagramSum&) const = default;
  void add(const ChordDiagram& d, const Rational& c);
  DiagramSum& operator+=(const DiagramSum& o);
  DiagramSum& operator-=(const DiagramSum& o);
  DiagramSum& scale(const Rational& c);
  bool is_zero() const { return terms.empty(); }
};

// Reverse the cyclic order at one internal vertex, with coefficient -1.
// Throws NotInternal if the vertex index is out of range.
DiagramSum as_rewrite(const ChordDiagram& d, unsigned vertex);

// Repeatedly rewrite an internal vertex attached to a leg as the difference
// of the two leg-orderings until only chords remain.  Throws
// DisconnectedFromCircle if a connected internal component never reaches a
// leg (vacuum graphs).
DiagramSum stu_reduce(const ChordDiagram& d);
DiagramSum stu_reduce(const DiagramSum& s);

// True when some circle carries fewer than 2n legs (such diagrams are killed
// by the projection phi_n).
bool phi_kills(const ChordDiagram& d, unsigned n);
DiagramSum phi_n(const ChordDiagram& d, unsigned n);
DiagramSum phi_n(const DiagramSum& s, unsigned n);

// Builders.  All return canonical forms.
ChordDiagram empty_diagram(unsigned circles);
// l side-by-side chords on the given circle (the l-th power of the one-chord
// diagram under connected multiplication).
ChordDiagram theta_power(unsigned circle, unsigned l, unsigned circles);
// One internal vertex with three stems to legs appended to circles c0,c1,c2
// (in the vertex's ccw order).
ChordDiagram tripod(unsigned circles = 1, unsigned c0 = 0, unsigned c1 = 0,
                    unsigned c2 = 0);
// Two internal vertices joined by an edge, each with two stems to the circle:
// legs at positions 0,1 belong to one vertex, 2,3 to the other.
ChordDiagram h_diagram();
// Triangle of internal vertices with three spokes to the circle.
ChordDiagram wheel3();
// Square of internal vertices with four spokes to the circle.
ChordDiagram wheel4();

// All pure chord diagrams of the exact given degree on `circles` circles, up
// to canonical equivalence (every distribution of the 2*degree legs over the
// circles, every pairing).
std::vector<ChordDiagram> all_pure_diagrams(unsigned degree, unsigned circles);
// Hand-built diagrams of degree <= max_degree whose internal components each
// touch at least one trivalent vertex (single-circle plus a two-circle
// tripod); used for the internal-vertex valuation bound.
std::vector<ChordDiagram> i1_catalog(unsigned max_degree);

// Connected sum along every circle: cut each circle of both diagrams at its
// basepoint and concatenate (a's legs first).  The factors are used as
// stored, so different representatives model different basepoint choices;
// the result is canonicalized.
ChordDiagram multiply(const ChordDiagram& a, const ChordDiagram& b);
// Same, documenting intent for a factor supported on one circle: throws
// Malformed if b has legs on any other circle.
ChordDiagram multiply_on_circle(const ChordDiagram& a, const ChordDiagram& b,
                                unsigned circle);
// A representative of d with circle `circle` cut at a different basepoint
// (shifted by `shift` positions).  Not canonicalized: feeding it to multiply
// exercises basepoint dependence.
ChordDiagram rotate_circle(const ChordDiagram& d, unsigned circle,
                           unsigned shift);

// Degree-graded series of diagram sums: slot m holds degree-m diagrams and is
// the coefficient of the m-th power of the deformation parameter.
struct DiagramSeries {
  unsigned circles = 0;
  std::vector<DiagramSum> slots;

  bool operator==(const DiagramSeries&) const = default;
  unsigned order() const {
    return slots.empty() ? 0u : static_cast<unsigned>(slots.size()) - 1;
  }
  void ensure_order(unsigned m);
};

DiagramSeries series_multiply(const DiagramSeries& a, const DiagramSeries& b,
                              unsigned order);
DiagramSeries phi_n(const DiagramSeries& s, unsigned n);
// Product over circles of exp((f_i/2) * theta_i), truncated at the given
// order: slot m collects prod (f_i/2)^{l_i} theta_i^{l_i} / l_i! over
// multi-indices with |l| = m.
DiagramSeries framing_exponential(const std::vector<long long>& framings,
                                  unsigned order, unsigned circles);

// Text format.
//
//   circles L
//   leg <id> circle <c> pos <j>
//   ivertex <id> cyclic <e1> <e2> <e3>
//   edge <id1> <id2>
//
// Legs and internal vertices share one id namespace; `edge` lines connect two
// node ids and are implicitly numbered 1.. in file order; `cyclic` lists a
// vertex's incident edge numbers in ccw order.  Circle indices and positions
// are 0-based; positions on each circle must be exactly 0..n-1.  '#' starts a
// comment.  Edges with both ends at one node are rejected.  parse returns the
// canonical form; print of a canonical form parses back to it bit-exactly.
std::string print_diagram(const ChordDiagram& d);
ChordDiagram parse_diagram(const std::string& text);

// Sums are `coeff a/b` lines each followed by a diagram block; a file with no
// coeff line is a single diagram with coefficient 1.
std::string print_diagram_sum(const DiagramSum& s);
DiagramSum parse_diagram_sum(const std::string& text);

}  // namespace skeinlab
