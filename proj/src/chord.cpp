#include "skeinlab/chord.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace skeinlab {

unsigned ChordDiagram::edge_count() const {
    std::size_t ends = 3 * ivertices.size();
    for (const auto& ring : legs) ends += ring.size();
    return static_cast<unsigned>(ends / 2);
}

unsigned ChordDiagram::degree() const {
    std::size_t uni = 0;
    for (const auto& ring : legs) uni += ring.size();
    return static_cast<unsigned>((uni + ivertices.size()) / 2);
}

unsigned ChordDiagram::internal_vertex_count() const {
    return static_cast<unsigned>(ivertices.size());
}

std::vector<unsigned> ChordDiagram::leg_counts() const {
    std::vector<unsigned> n;
    n.reserve(legs.size());
    for (const auto& ring : legs) n.push_back(static_cast<unsigned>(ring.size()));
    return n;
}

void ChordDiagram::validate() const {
    if (legs.size() != circles)
        throw Malformed("chord diagram: leg table does not match circle count");
    std::size_t ends = 3 * ivertices.size();
    for (const auto& ring : legs) ends += ring.size();
    if (ends % 2 != 0) throw Malformed("chord diagram: odd number of edge ends");
    const unsigned e_count = static_cast<unsigned>(ends / 2);
    std::vector<std::array<bool, 2>> seen(e_count, {false, false});
    auto visit = [&](const DiagEnd& e) {
        if (e.edge >= e_count || e.side > 1)
            throw Malformed("chord diagram: edge end out of range");
        if (seen[e.edge][e.side])
            throw Malformed("chord diagram: edge end attached twice");
        seen[e.edge][e.side] = true;
    };
    for (const auto& ring : legs)
        for (const auto& e : ring) visit(e);
    for (const auto& tri : ivertices)
        for (const auto& e : tri) visit(e);
}

namespace {

struct ScanChoice {
    std::vector<unsigned> rot;    // rotation per circle
    std::vector<unsigned> vperm;  // order in which vertices are scanned
    std::vector<unsigned> vrot;   // rotation of each scanned vertex triple
};

// Relabel edges by first encounter along the scan (first encounter is side
// 0).  The output depends only on the encoding, so ties between minimizing
// choices rebuild identically.
ChordDiagram rebuild(const ChordDiagram& d, const ScanChoice& ch) {
    const unsigned e_count = d.edge_count();
    constexpr unsigned kUnset = ~0u;
    std::vector<unsigned> new_id(e_count, kUnset);
    unsigned next = 0;
    auto renamed = [&](const DiagEnd& e) {
        if (new_id[e.edge] == kUnset) {
            new_id[e.edge] = next++;
            return DiagEnd{new_id[e.edge], 0};
        }
        return DiagEnd{new_id[e.edge], 1};
    };
    ChordDiagram r;
    r.circles = d.circles;
    r.legs.resize(d.circles);
    for (unsigned c = 0; c < d.circles; ++c) {
        const auto& ring = d.legs[c];
        const unsigned n = static_cast<unsigned>(ring.size());
        r.legs[c].reserve(n);
        for (unsigned t = 0; t < n; ++t)
            r.legs[c].push_back(renamed(ring[(ch.rot[c] + t) % n]));
    }
    r.ivertices.reserve(d.ivertices.size());
    for (unsigned k = 0; k < d.ivertices.size(); ++k) {
        const auto& tri = d.ivertices[ch.vperm[k]];
        std::array<DiagEnd, 3> out;
        for (unsigned s = 0; s < 3; ++s) out[s] = renamed(tri[(ch.vrot[k] + s) % 3]);
        r.ivertices.push_back(out);
    }
    return r;
}

bool next_mixed(std::vector<unsigned>& v, const std::vector<unsigned>& radix) {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (++v[i] < radix[i]) return true;
        v[i] = 0;
    }
    return false;
}

constexpr unsigned kPending = ~0u;

// Depth-first minimization over vertex orders and triple rotations for one
// fixed set of circle rotations.  `enc` holds the partner encoding built so
// far (kPending where the partner is not yet placed); a branch is abandoned
// as soon as its defined prefix is certainly worse than the best complete
// encoding.
struct VertexSearch {
    const ChordDiagram& d;
    std::vector<std::array<unsigned, 2>>& at;  // placed position per end
    std::vector<unsigned>& enc;
    std::vector<unsigned>& best_enc;
    ScanChoice& best;
    bool& have_best;
    const ScanChoice& rot_part;  // currently tried circle rotations
    std::vector<unsigned> vperm, vrot;
    std::vector<bool> used;
    unsigned base;  // number of leg positions

    // Worse-than-best test on the first `placed` positions.  Entries still
    // pending resolve to >= placed, so they beat any resolved best entry that
    // is < placed and are undecided against larger ones.
    bool certainly_worse(unsigned placed) const {
        if (!have_best) return false;
        for (unsigned i = 0; i < placed; ++i) {
            if (enc[i] == kPending) {
                if (best_enc[i] < placed) return true;
                return false;  // undecided
            }
            if (enc[i] != best_enc[i]) return enc[i] > best_enc[i];
        }
        return false;
    }

    void place_end(const DiagEnd& e, unsigned pos) {
        at[e.edge][e.side] = pos;
        const unsigned other = at[e.edge][1 - e.side];
        if (other != kPending) {
            enc[pos] = other;
            enc[other] = pos;
        } else {
            enc[pos] = kPending;
        }
    }

    void unplace_end(const DiagEnd& e, unsigned pos) {
        const unsigned other = at[e.edge][1 - e.side];
        if (other != kPending && other != pos) enc[other] = kPending;
        enc[pos] = kPending;
        at[e.edge][e.side] = kPending;
    }

    void run(unsigned depth) {
        const unsigned v_count = static_cast<unsigned>(d.ivertices.size());
        if (depth == v_count) {
            if (!have_best || enc < best_enc) {
                best_enc = enc;
                best = rot_part;
                best.vperm = vperm;
                best.vrot = vrot;
                have_best = true;
            }
            return;
        }
        const unsigned pos = base + 3 * depth;
        for (unsigned v = 0; v < v_count; ++v) {
            if (used[v]) continue;
            used[v] = true;
            vperm[depth] = v;
            for (unsigned r = 0; r < 3; ++r) {
                vrot[depth] = r;
                for (unsigned s = 0; s < 3; ++s)
                    place_end(d.ivertices[v][(r + s) % 3], pos + s);
                if (!certainly_worse(pos + 3)) run(depth + 1);
                for (unsigned s = 3; s-- > 0;)
                    unplace_end(d.ivertices[v][(r + s) % 3], pos + s);
            }
            used[v] = false;
        }
    }
};

}  // namespace

ChordDiagram canonicalize(const ChordDiagram& d) {
    d.validate();
    const unsigned v_count = static_cast<unsigned>(d.ivertices.size());
    const unsigned e_count = d.edge_count();
    unsigned base = 0;
    std::vector<unsigned> rot_radix(d.circles);
    for (unsigned c = 0; c < d.circles; ++c) {
        rot_radix[c] = std::max<unsigned>(1, static_cast<unsigned>(d.legs[c].size()));
        base += static_cast<unsigned>(d.legs[c].size());
    }

    std::vector<std::array<unsigned, 2>> at(e_count, {kPending, kPending});
    std::vector<unsigned> enc(2 * e_count, kPending);
    std::vector<unsigned> best_enc;
    ScanChoice rot_part;
    rot_part.rot.assign(d.circles, 0);
    ScanChoice best;
    bool have_best = false;

    VertexSearch search{d,       at,   enc,      best_enc,
                        best,    have_best, rot_part, {},
                        {},      {},   base};
    search.vperm.assign(v_count, 0);
    search.vrot.assign(v_count, 0);
    search.used.assign(v_count, false);

    do {
        unsigned pos = 0;
        for (unsigned c = 0; c < d.circles; ++c) {
            const auto& ring = d.legs[c];
            const unsigned n = static_cast<unsigned>(ring.size());
            for (unsigned t = 0; t < n; ++t)
                search.place_end(ring[(rot_part.rot[c] + t) % n], pos++);
        }
        if (!search.certainly_worse(base)) search.run(0);
        for (unsigned c = d.circles; c-- > 0;) {
            const auto& ring = d.legs[c];
            const unsigned n = static_cast<unsigned>(ring.size());
            for (unsigned t = n; t-- > 0;)
                search.unplace_end(ring[(rot_part.rot[c] + t) % n], --pos);
        }
    } while (next_mixed(rot_part.rot, rot_radix));
    return rebuild(d, best);
}

void DiagramSum::add(const ChordDiagram& d, const Rational& c) {
    if (c.is_zero()) return;
    ChordDiagram key = canonicalize(d);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

DiagramSum& DiagramSum::operator+=(const DiagramSum& o) {
    for (const auto& [d, c] : o.terms) {
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

DiagramSum& DiagramSum::operator-=(const DiagramSum& o) {
    for (const auto& [d, c] : o.terms) {
        auto it = terms.find(d);
        if (it == terms.end()) {
            terms.emplace(d, -c);
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    return *this;
}

DiagramSum& DiagramSum::scale(const Rational& c) {
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [d, coeff] : terms) coeff *= c;
    return *this;
}

DiagramSum as_rewrite(const ChordDiagram& d, unsigned vertex) {
    if (vertex >= d.ivertices.size())
        throw NotInternal("orientation reversal: vertex index out of range");
    ChordDiagram r = d;
    std::swap(r.ivertices[vertex][0], r.ivertices[vertex][2]);
    DiagramSum s;
    s.add(r, Rational(-1));
    return s;
}

namespace {

// Where each edge end lives: on a circle (circle/pos) or at a vertex
// (vertex/slot).
struct EndLoc {
    bool on_circle = false;
    unsigned a = 0;
    unsigned b = 0;
};

std::vector<std::array<EndLoc, 2>> locate_ends(const ChordDiagram& d) {
    std::vector<std::array<EndLoc, 2>> loc(d.edge_count());
    for (unsigned c = 0; c < d.circles; ++c)
        for (unsigned t = 0; t < d.legs[c].size(); ++t) {
            const DiagEnd& e = d.legs[c][t];
            loc[e.edge][e.side] = {true, c, static_cast<unsigned>(t)};
        }
    for (unsigned v = 0; v < d.ivertices.size(); ++v)
        for (unsigned s = 0; s < 3; ++s) {
            const DiagEnd& e = d.ivertices[v][s];
            loc[e.edge][e.side] = {false, v, s};
        }
    return loc;
}

// Remove vertex v by the STU move at the stem in slot `slot`, whose far end
// is the leg at (ci, pj).  Writing the vertex's cyclic order as (x, y, stem),
// the first returned diagram attaches x then y along the circle where the leg
// was; the second attaches y then x.
std::pair<ChordDiagram, ChordDiagram> stu_once(const ChordDiagram& d, unsigned v,
                                               unsigned slot, unsigned ci,
                                               unsigned pj) {
    const auto tri = d.ivertices[v];
    const DiagEnd stem = tri[slot];
    const DiagEnd x = tri[(slot + 1) % 3];
    const DiagEnd y = tri[(slot + 2) % 3];
    auto build = [&](DiagEnd first, DiagEnd second) {
        ChordDiagram r;
        r.circles = d.circles;
        r.legs = d.legs;
        r.ivertices = d.ivertices;
        r.ivertices.erase(r.ivertices.begin() + v);
        auto& ring = r.legs[ci];
        ring[pj] = first;
        ring.insert(ring.begin() + pj + 1, second);
        auto fix = [&](DiagEnd& e) {
            if (e.edge > stem.edge) --e.edge;
        };
        for (auto& rr : r.legs)
            for (auto& e : rr) fix(e);
        for (auto& t2 : r.ivertices)
            for (auto& e : t2) fix(e);
        return r;
    };
    return {build(x, y), build(y, x)};
}

void stu_reduce_impl(const ChordDiagram& d, const Rational& coeff,
                     DiagramSum& out) {
    if (d.ivertices.empty()) {
        out.add(d, coeff);
        return;
    }
    const auto loc = locate_ends(d);
    for (unsigned v = 0; v < d.ivertices.size(); ++v) {
        for (unsigned slot = 0; slot < 3; ++slot) {
            const DiagEnd& e = d.ivertices[v][slot];
            const EndLoc& far = loc[e.edge][1 - e.side];
            if (!far.on_circle) continue;
            auto [t_term, u_term] = stu_once(d, v, slot, far.a, far.b);
            stu_reduce_impl(t_term, coeff, out);
            stu_reduce_impl(u_term, -coeff, out);
            return;
        }
    }
    throw DisconnectedFromCircle(
        "stu reduction: internal component with no leg on any circle");
}

}  // namespace

DiagramSum stu_reduce(const ChordDiagram& d) {
    d.validate();
    DiagramSum out;
    stu_reduce_impl(d, Rational(1), out);
    return out;
}

DiagramSum stu_reduce(const DiagramSum& s) {
    DiagramSum out;
    for (const auto& [d, c] : s.terms) stu_reduce_impl(d, c, out);
    return out;
}

bool phi_kills(const ChordDiagram& d, unsigned n) {
    if (n == 0) return false;
    for (const auto& ring : d.legs)
        if (ring.size() < 2 * static_cast<std::size_t>(n)) return true;
    return false;
}

DiagramSum phi_n(const ChordDiagram& d, unsigned n) {
    DiagramSum s;
    if (!phi_kills(d, n)) s.add(d, Rational(1));
    return s;
}

DiagramSum phi_n(const DiagramSum& s, unsigned n) {
    DiagramSum r;
    for (const auto& [d, c] : s.terms)
        if (!phi_kills(d, n)) r.terms.emplace(d, c);
    return r;
}

ChordDiagram empty_diagram(unsigned circles) {
    ChordDiagram d;
    d.circles = circles;
    d.legs.resize(circles);
    return d;
}

ChordDiagram theta_power(unsigned circle, unsigned l, unsigned circles) {
    if (circle >= circles) throw OutOfRange("theta power: circle index out of range");
    ChordDiagram d = empty_diagram(circles);
    for (unsigned j = 0; j < l; ++j) {
        d.legs[circle].push_back({j, 0});
        d.legs[circle].push_back({j, 1});
    }
    return canonicalize(d);
}

ChordDiagram tripod(unsigned circles, unsigned c0, unsigned c1, unsigned c2) {
    if (c0 >= circles || c1 >= circles || c2 >= circles)
        throw OutOfRange("tripod: circle index out of range");
    ChordDiagram d = empty_diagram(circles);
    d.legs[c0].push_back({0, 0});
    d.legs[c1].push_back({1, 0});
    d.legs[c2].push_back({2, 0});
    d.ivertices.push_back({DiagEnd{0, 1}, DiagEnd{1, 1}, DiagEnd{2, 1}});
    return canonicalize(d);
}

ChordDiagram h_diagram() {
    ChordDiagram d = empty_diagram(1);
    d.legs[0] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    d.ivertices.push_back({DiagEnd{0, 1}, DiagEnd{1, 1}, DiagEnd{4, 0}});
    d.ivertices.push_back({DiagEnd{4, 1}, DiagEnd{2, 1}, DiagEnd{3, 1}});
    return canonicalize(d);
}

ChordDiagram wheel3() {
    ChordDiagram d = empty_diagram(1);
    d.legs[0] = {{0, 0}, {1, 0}, {2, 0}};
    // spokes 0,1,2; rim 3=(v0,v1), 4=(v1,v2), 5=(v2,v0)
    d.ivertices.push_back({DiagEnd{0, 1}, DiagEnd{3, 0}, DiagEnd{5, 1}});
    d.ivertices.push_back({DiagEnd{1, 1}, DiagEnd{4, 0}, DiagEnd{3, 1}});
    d.ivertices.push_back({DiagEnd{2, 1}, DiagEnd{5, 0}, DiagEnd{4, 1}});
    return canonicalize(d);
}

ChordDiagram wheel4() {
    ChordDiagram d = empty_diagram(1);
    d.legs[0] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}};
    // spokes 0..3; rim 4=(v0,v1), 5=(v1,v2), 6=(v2,v3), 7=(v3,v0)
    d.ivertices.push_back({DiagEnd{0, 1}, DiagEnd{4, 0}, DiagEnd{7, 1}});
    d.ivertices.push_back({DiagEnd{1, 1}, DiagEnd{5, 0}, DiagEnd{4, 1}});
    d.ivertices.push_back({DiagEnd{2, 1}, DiagEnd{6, 0}, DiagEnd{5, 1}});
    d.ivertices.push_back({DiagEnd{3, 1}, DiagEnd{7, 0}, DiagEnd{6, 1}});
    return canonicalize(d);
}

namespace {

// Chain of three vertices: the ends carry two legs each, the middle one.
ChordDiagram long_h() {
    ChordDiagram d = empty_diagram(1);
    d.legs[0] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    // bridges 5=(v0,v1), 6=(v1,v2)
    d.ivertices.push_back({DiagEnd{0, 1}, DiagEnd{1, 1}, DiagEnd{5, 0}});
    d.ivertices.push_back({DiagEnd{5, 1}, DiagEnd{2, 1}, DiagEnd{6, 0}});
    d.ivertices.push_back({DiagEnd{6, 1}, DiagEnd{3, 1}, DiagEnd{4, 1}});
    return canonicalize(d);
}

void pairings_rec(std::vector<unsigned>& partner, unsigned total,
                  const std::vector<std::pair<unsigned, unsigned>>& place,
                  unsigned circles, std::set<ChordDiagram>& out) {
    constexpr unsigned kFree = ~0u;
    unsigned first = total;
    for (unsigned i = 0; i < total; ++i)
        if (partner[i] == kFree) {
            first = i;
            break;
        }
    if (first == total) {
        ChordDiagram d = empty_diagram(circles);
        d.legs.assign(circles, {});
        unsigned edge = 0;
        std::vector<DiagEnd> at(total);
        for (unsigned i = 0; i < total; ++i)
            if (partner[i] > i) {
                at[i] = {edge, 0};
                at[partner[i]] = {edge, 1};
                ++edge;
            }
        for (unsigned i = 0; i < total; ++i) d.legs[place[i].first].push_back(at[i]);
        out.insert(canonicalize(d));
        return;
    }
    for (unsigned j = first + 1; j < total; ++j) {
        if (partner[j] != kFree) continue;
        partner[first] = j;
        partner[j] = first;
        pairings_rec(partner, total, place, circles, out);
        partner[first] = kFree;
        partner[j] = kFree;
    }
}

}  // namespace

std::vector<ChordDiagram> all_pure_diagrams(unsigned degree, unsigned circles) {
    std::set<ChordDiagram> out;
    const unsigned total = 2 * degree;
    std::vector<unsigned> counts(circles, 0);
    // enumerate distributions of `total` legs over the circles
    auto rec = [&](auto&& self, unsigned c, unsigned left) -> void {
        if (c + 1 == circles) {
            counts[c] = left;
            std::vector<std::pair<unsigned, unsigned>> place;
            for (unsigned ci = 0; ci < circles; ++ci)
                for (unsigned t = 0; t < counts[ci]; ++t) place.push_back({ci, t});
            std::vector<unsigned> partner(total, ~0u);
            pairings_rec(partner, total, place, circles, out);
            return;
        }
        for (unsigned take = 0; take <= left; ++take) {
            counts[c] = take;
            self(self, c + 1, left - take);
        }
    };
    if (circles == 0) {
        if (degree == 0) out.insert(empty_diagram(0));
    } else {
        rec(rec, 0, total);
    }
    return {out.begin(), out.end()};
}

std::vector<ChordDiagram> i1_catalog(unsigned max_degree) {
    std::vector<ChordDiagram> v;
    if (max_degree >= 2) {
        v.push_back(tripod());
        v.push_back(tripod(2, 0, 0, 1));
    }
    if (max_degree >= 3) {
        v.push_back(h_diagram());
        v.push_back(wheel3());
    }
    if (max_degree >= 4) {
        v.push_back(multiply(tripod(), tripod()));
        v.push_back(wheel4());
        v.push_back(long_h());
    }
    return v;
}

ChordDiagram multiply(const ChordDiagram& a, const ChordDiagram& b) {
    if (a.circles != b.circles)
        throw SizeMismatch("diagram product: circle counts differ");
    const unsigned ea = a.edge_count();
    ChordDiagram r = a;
    for (unsigned c = 0; c < b.circles; ++c)
        for (DiagEnd e : b.legs[c]) r.legs[c].push_back({e.edge + ea, e.side});
    for (const auto& tri : b.ivertices) {
        std::array<DiagEnd, 3> t2;
        for (unsigned s = 0; s < 3; ++s) t2[s] = {tri[s].edge + ea, tri[s].side};
        r.ivertices.push_back(t2);
    }
    return canonicalize(r);
}

ChordDiagram multiply_on_circle(const ChordDiagram& a, const ChordDiagram& b,
                                unsigned circle) {
    if (circle >= a.circles) throw OutOfRange("diagram product: circle index");
    for (unsigned c = 0; c < b.circles; ++c)
        if (c != circle && !b.legs[c].empty())
            throw Malformed("diagram product: factor has legs off the chosen circle");
    return multiply(a, b);
}

ChordDiagram rotate_circle(const ChordDiagram& d, unsigned circle, unsigned shift) {
    if (circle >= d.circles) throw OutOfRange("rotate: circle index");
    ChordDiagram r = d;
    auto& ring = r.legs[circle];
    if (!ring.empty())
        std::rotate(ring.begin(), ring.begin() + (shift % ring.size()), ring.end());
    return r;
}

void DiagramSeries::ensure_order(unsigned m) {
    if (slots.size() <= m) slots.resize(m + 1);
}

DiagramSeries series_multiply(const DiagramSeries& a, const DiagramSeries& b,
                              unsigned order) {
    if (a.circles != b.circles)
        throw SizeMismatch("diagram series product: circle counts differ");
    DiagramSeries r;
    r.circles = a.circles;
    r.ensure_order(order);
    for (unsigned u = 0; u < a.slots.size() && u <= order; ++u)
        for (unsigned w = 0; w < b.slots.size() && u + w <= order; ++w)
            for (const auto& [da, ca] : a.slots[u].terms)
                for (const auto& [db, cb] : b.slots[w].terms)
                    r.slots[u + w].add(multiply(da, db), ca * cb);
    return r;
}

DiagramSeries phi_n(const DiagramSeries& s, unsigned n) {
    DiagramSeries r;
    r.circles = s.circles;
    r.slots.reserve(s.slots.size());
    for (const auto& sum : s.slots) r.slots.push_back(phi_n(sum, n));
    return r;
}

DiagramSeries framing_exponential(const std::vector<long long>& framings,
                                  unsigned order, unsigned circles) {
    if (framings.size() != circles)
        throw SizeMismatch("framing exponential: framing count does not match circles");
    DiagramSeries acc;
    acc.circles = circles;
    acc.ensure_order(order);
    acc.slots[0].add(empty_diagram(circles), Rational(1));
    for (unsigned i = 0; i < circles; ++i) {
        DiagramSeries e;
        e.circles = circles;
        e.ensure_order(order);
        Rational coeff(1);
        const Rational half_f(framings[i], 2);
        for (unsigned l = 0; l <= order; ++l) {
            if (l > 0) coeff = coeff * half_f / Rational(l);
            e.slots[l].add(theta_power(i, l, circles), coeff);
        }
        acc = series_multiply(acc, e, order);
    }
    return acc;
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    const std::string no_comment = line.substr(0, line.find('#'));
    std::istringstream is(no_comment);
    std::vector<std::string> toks;
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

std::vector<std::vector<std::string>> token_lines(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        auto toks = tokenize(line);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

unsigned parse_uint(const std::string& s, const char* what) {
    if (s.empty() || s[0] == '-' || s[0] == '+')
        throw Malformed(std::string("diagram file: bad number for ") + what + ": " + s);
    try {
        std::size_t used = 0;
        const unsigned long v = std::stoul(s, &used);
        if (used != s.size() || v > 0xffffffffUL) throw std::invalid_argument("");
        return static_cast<unsigned>(v);
    } catch (...) {
        throw Malformed(std::string("diagram file: bad number for ") + what + ": " + s);
    }
}

struct NodeDecl {
    bool is_leg = false;
    unsigned circle = 0;
    unsigned pos = 0;
    std::array<unsigned, 3> cyc{};  // 1-based edge numbers, vertices only
};

using TokenLines = std::vector<std::vector<std::string>>;

ChordDiagram parse_diagram_lines(const TokenLines& lines) {
    if (lines.empty() || lines[0][0] != "circles" || lines[0].size() != 2)
        throw Malformed("diagram file: expected 'circles L' header");
    const unsigned circles = parse_uint(lines[0][1], "circle count");

    std::map<unsigned, NodeDecl> nodes;
    std::vector<std::pair<unsigned, unsigned>> edge_nodes;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& t = lines[li];
        if (t[0] == "leg") {
            if (t.size() != 6 || t[2] != "circle" || t[4] != "pos")
                throw Malformed("diagram file: leg line must be 'leg <id> circle <c> pos <j>'");
            const unsigned id = parse_uint(t[1], "leg id");
            NodeDecl n;
            n.is_leg = true;
            n.circle = parse_uint(t[3], "circle index");
            n.pos = parse_uint(t[5], "position");
            if (n.circle >= circles)
                throw Malformed("diagram file: leg circle index out of range");
            if (!nodes.emplace(id, n).second)
                throw Malformed("diagram file: duplicate node id");
        } else if (t[0] == "ivertex") {
            if (t.size() != 6 || t[2] != "cyclic")
                throw Malformed(
                    "diagram file: ivertex line must be 'ivertex <id> cyclic <e1> <e2> <e3>'");
            const unsigned id = parse_uint(t[1], "vertex id");
            NodeDecl n;
            for (unsigned s = 0; s < 3; ++s) n.cyc[s] = parse_uint(t[3 + s], "edge number");
            if (!nodes.emplace(id, n).second)
                throw Malformed("diagram file: duplicate node id");
        } else if (t[0] == "edge") {
            if (t.size() != 3)
                throw Malformed("diagram file: edge line must be 'edge <id1> <id2>'");
            edge_nodes.push_back({parse_uint(t[1], "edge endpoint"),
                                  parse_uint(t[2], "edge endpoint")});
        } else {
            throw Malformed("diagram file: unknown directive '" + t[0] + "'");
        }
    }

    const unsigned e_count = static_cast<unsigned>(edge_nodes.size());
    // gather the ends attached at each node
    std::map<unsigned, std::vector<DiagEnd>> at_node;
    for (unsigned e = 0; e < e_count; ++e) {
        const auto [a, b] = edge_nodes[e];
        if (a == b) throw Malformed("diagram file: edge with both ends at one node");
        if (!nodes.count(a) || !nodes.count(b))
            throw Malformed("diagram file: edge references undeclared node");
        at_node[a].push_back({e, 0});
        at_node[b].push_back({e, 1});
    }

    ChordDiagram d = empty_diagram(circles);
    // legs, ordered by position
    std::vector<std::map<unsigned, DiagEnd>> ring(circles);
    std::vector<unsigned> vert_ids;
    for (const auto& [id, n] : nodes) {
        const auto it = at_node.find(id);
        const std::size_t arity = it == at_node.end() ? 0 : it->second.size();
        if (n.is_leg) {
            if (arity != 1) throw Malformed("diagram file: leg must have exactly one edge");
            if (!ring[n.circle].emplace(n.pos, it->second[0]).second)
                throw Malformed("diagram file: duplicate position on circle");
        } else {
            if (arity != 3)
                throw Malformed("diagram file: internal vertex must have exactly three edges");
            vert_ids.push_back(id);
        }
    }
    for (unsigned c = 0; c < circles; ++c) {
        unsigned want = 0;
        for (const auto& [pos, e] : ring[c]) {
            if (pos != want++)
                throw Malformed("diagram file: circle positions must be 0..n-1");
            d.legs[c].push_back(e);
        }
    }
    for (unsigned id : vert_ids) {
        const NodeDecl& n = nodes[id];
        const auto& incident = at_node[id];
        std::array<DiagEnd, 3> tri;
        std::set<unsigned> used;
        for (unsigned s = 0; s < 3; ++s) {
            const unsigned e = n.cyc[s];
            if (e == 0 || e > e_count)
                throw Malformed("diagram file: cyclic entry references missing edge");
            if (!used.insert(e).second)
                throw Malformed("diagram file: cyclic entry repeated");
            bool found = false;
            for (const DiagEnd& end : incident)
                if (end.edge == e - 1) {
                    tri[s] = end;
                    found = true;
                }
            if (!found)
                throw Malformed("diagram file: cyclic entry is not incident to the vertex");
        }
        d.ivertices.push_back(tri);
    }
    d.validate();
    return canonicalize(d);
}

}  // namespace

std::string print_diagram(const ChordDiagram& d0) {
    const ChordDiagram d = canonicalize(d0);
    std::ostringstream os;
    os << "circles " << d.circles << "\n";
    const unsigned e_count = d.edge_count();
    std::vector<std::array<unsigned, 2>> node_of(e_count);
    unsigned next_id = 1;
    std::ostringstream vertex_lines;
    for (unsigned c = 0; c < d.circles; ++c)
        for (unsigned t = 0; t < d.legs[c].size(); ++t) {
            const DiagEnd& e = d.legs[c][t];
            node_of[e.edge][e.side] = next_id;
            os << "leg " << next_id << " circle " << c << " pos " << t << "\n";
            ++next_id;
        }
    for (const auto& tri : d.ivertices) {
        for (unsigned s = 0; s < 3; ++s) node_of[tri[s].edge][tri[s].side] = next_id;
        vertex_lines << "ivertex " << next_id << " cyclic " << tri[0].edge + 1 << " "
                     << tri[1].edge + 1 << " " << tri[2].edge + 1 << "\n";
        ++next_id;
    }
    os << vertex_lines.str();
    for (unsigned e = 0; e < e_count; ++e)
        os << "edge " << node_of[e][0] << " " << node_of[e][1] << "\n";
    return os.str();
}

ChordDiagram parse_diagram(const std::string& text) {
    return parse_diagram_lines(token_lines(text));
}

std::string print_diagram_sum(const DiagramSum& s) {
    std::ostringstream os;
    for (const auto& [d, c] : s.terms) os << "coeff " << to_string(c) << "\n" << print_diagram(d);
    return os.str();
}

DiagramSum parse_diagram_sum(const std::string& text) {
    const TokenLines lines = token_lines(text);
    DiagramSum out;
    if (lines.empty()) return out;
    if (lines[0][0] != "coeff") {
        out.add(parse_diagram_lines(lines), Rational(1));
        return out;
    }
    std::size_t i = 0;
    while (i < lines.size()) {
        if (lines[i][0] != "coeff" || lines[i].size() != 2)
            throw Malformed("diagram file: expected 'coeff a/b' block header");
        const Rational c = parse_rational(lines[i][1]);
        std::size_t j = i + 1;
        while (j < lines.size() && lines[j][0] != "coeff") ++j;
        if (j == i + 1) throw Malformed("diagram file: empty coeff block");
        out.add(parse_diagram_lines(TokenLines(lines.begin() + i + 1, lines.begin() + j)), c);
        i = j;
    }
    return out;
}

}  // namespace skeinlab
