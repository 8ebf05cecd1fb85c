#include "skeinlab/spinnet.hpp"

#include <algorithm>
#include <sstream>

namespace skeinlab {

namespace {

std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

std::uint32_t parse_pos(const std::string& tok) {
    if (tok.size() < 2 || tok[0] != '@')
        throw Malformed("expected a position of the form @pos, got '" + tok + "'");
    try {
        return static_cast<std::uint32_t>(std::stoul(tok.substr(1)));
    } catch (const std::exception&) {
        throw Malformed("bad position '" + tok + "'");
    }
}

std::uint32_t parse_edge(const std::string& tok, std::size_t edge_count) {
    unsigned long v = 0;
    try {
        v = std::stoul(tok);
    } catch (const std::exception&) {
        throw Malformed("bad edge id '" + tok + "'");
    }
    if (v < 1 || v > edge_count)
        throw Malformed("edge id " + tok + " out of range (header declares " +
                        std::to_string(edge_count) + " edges)");
    return static_cast<std::uint32_t>(v - 1);
}

} // namespace

SpinMovie parse_movie(const std::string& text) {
    SpinMovie movie;
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::vector<std::string> toks = tokenize_line(line);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks[0] != "colors")
                throw Malformed("movie must start with a 'colors' header line");
            for (std::size_t q = 1; q < toks.size(); ++q) {
                long c = 0;
                try {
                    c = std::stol(toks[q]);
                } catch (const std::exception&) {
                    throw Malformed("bad color '" + toks[q] + "' in header");
                }
                if (c < 0) throw Malformed("negative edge color in header");
                movie.colors.push_back(static_cast<unsigned>(c));
            }
            have_header = true;
            continue;
        }
        SpinMovie::Slice s;
        const std::string& op = toks[0];
        if (op == "id") {
            if (toks.size() != 1) throw Malformed("'id' takes no arguments");
            s.kind = SpinMovie::Kind::Id;
        } else if (op == "cup") {
            if (toks.size() != 3) throw Malformed("expected: cup <edge> @pos");
            s.kind = SpinMovie::Kind::Cup;
            s.edge[0] = parse_edge(toks[1], movie.colors.size());
            s.pos = parse_pos(toks[2]);
        } else if (op == "cap") {
            if (toks.size() != 2) throw Malformed("expected: cap @pos");
            s.kind = SpinMovie::Kind::Cap;
            s.pos = parse_pos(toks[1]);
        } else if (op == "cross") {
            if (toks.size() != 2) throw Malformed("expected: cross @pos");
            s.kind = SpinMovie::Kind::Cross;
            s.pos = parse_pos(toks[1]);
        } else if (op == "split" || op == "merge") {
            if (toks.size() != 5)
                throw Malformed("expected: " + op + " <e1> <e2> <e3> @pos");
            s.kind = op == "split" ? SpinMovie::Kind::Split : SpinMovie::Kind::Merge;
            for (int q = 0; q < 3; ++q)
                s.edge[static_cast<std::size_t>(q)] =
                    parse_edge(toks[static_cast<std::size_t>(q) + 1], movie.colors.size());
            s.pos = parse_pos(toks[4]);
        } else {
            throw Malformed("unknown slice '" + op + "'");
        }
        movie.slices.push_back(s);
    }
    if (!have_header) throw Malformed("movie file is missing the 'colors' header");
    return movie;
}

std::string movie_str(const SpinMovie& movie) {
    std::ostringstream out;
    out << "colors";
    for (unsigned c : movie.colors) out << ' ' << c;
    out << '\n';
    for (const auto& s : movie.slices) {
        switch (s.kind) {
        case SpinMovie::Kind::Id: out << "id"; break;
        case SpinMovie::Kind::Cup: out << "cup " << s.edge[0] + 1 << " @" << s.pos; break;
        case SpinMovie::Kind::Cap: out << "cap @" << s.pos; break;
        case SpinMovie::Kind::Cross: out << "cross @" << s.pos; break;
        case SpinMovie::Kind::Split:
            out << "split " << s.edge[0] + 1 << ' ' << s.edge[1] + 1 << ' ' << s.edge[2] + 1
                << " @" << s.pos;
            break;
        case SpinMovie::Kind::Merge:
            out << "merge " << s.edge[0] + 1 << ' ' << s.edge[1] + 1 << ' ' << s.edge[2] + 1
                << " @" << s.pos;
            break;
        }
        out << '\n';
    }
    return out.str();
}

namespace {

using End = AbstractNet::End;

End partner(const End& e) { return End{e.edge, 1 - e.side}; }

struct Layout {
    const AbstractNet& net;
    SpinMovie movie;
    std::vector<End> awaiting; // boundary stub at position q waits for this end
    std::mt19937 rng;
    bool randomized;

    Layout(const AbstractNet& n, unsigned seed)
        : net(n), rng(seed), randomized(seed != 0) {
        movie.colors = n.edge_color;
        for (unsigned c : n.circles) {
            movie.colors.push_back(c);
            const auto e = static_cast<std::uint32_t>(movie.colors.size() - 1);
            const auto pos = static_cast<std::uint32_t>(awaiting.size());
            emit_cup(e, pos);
            emit_cap(pos);
        }
    }

    void emit_cup(std::uint32_t edge, std::uint32_t pos) {
        movie.slices.push_back({SpinMovie::Kind::Cup, pos, {edge, 0, 0}});
        awaiting.insert(awaiting.begin() + pos, 2, End{edge, 0});
    }

    void emit_cross(std::uint32_t pos) {
        movie.slices.push_back({SpinMovie::Kind::Cross, pos, {0, 0, 0}});
        std::swap(awaiting[pos], awaiting[pos + 1]);
    }

    void emit_cap(std::uint32_t pos) {
        movie.slices.push_back({SpinMovie::Kind::Cap, pos, {0, 0, 0}});
        awaiting.erase(awaiting.begin() + pos, awaiting.begin() + pos + 2);
    }

    // Move the entry at `from` so the pair (entry originally at `keep`,
    // entry originally at `from`) becomes adjacent in that order; returns
    // the position of the left element of the pair.
    std::uint32_t make_adjacent(std::uint32_t keep, std::uint32_t from) {
        if (from > keep) {
            while (from > keep + 1) { emit_cross(from - 1); --from; }
            return keep;
        }
        // Walk the entry rightwards; the final cross carries it past the kept
        // entry, leaving the pair ordered (kept, moved) at keep-1, keep.
        for (std::uint32_t q = from; q < keep; ++q) emit_cross(q);
        return keep - 1;
    }

    std::optional<std::uint32_t> stub_position(const End& e) const {
        for (std::size_t q = 0; q < awaiting.size(); ++q)
            if (awaiting[q] == e) return static_cast<std::uint32_t>(q);
        return std::nullopt;
    }

    bool self_loop_pair(const End& a, const End& b) const {
        return a.edge == b.edge && a.side != b.side;
    }

    unsigned stub_count(const AbstractNet::Vertex& v) const {
        unsigned s = 0;
        for (const auto& e : v.cyc)
            if (stub_position(e)) ++s;
        return s;
    }

    void place(const AbstractNet::Vertex& v) {
        std::array<End, 3> cyc = v.cyc;
        std::array<bool, 3> has{};
        unsigned s = 0;
        for (int q = 0; q < 3; ++q) {
            has[static_cast<std::size_t>(q)] = stub_position(cyc[static_cast<std::size_t>(q)]).has_value();
            if (has[static_cast<std::size_t>(q)]) ++s;
        }
        auto rot = [&](int r) {
            std::rotate(cyc.begin(), cyc.begin() + r, cyc.end());
            std::rotate(has.begin(), has.begin() + r, has.end());
        };
        if (s == 0) {
            // bootstrap: bend the first non-loop leg down through a minimum
            for (int r = 0; r < 3; ++r) {
                if (!self_loop_pair(cyc[0], cyc[1]) && !self_loop_pair(cyc[0], cyc[2])) break;
                rot(1);
            }
            const auto pos = static_cast<std::uint32_t>(awaiting.size());
            emit_cup(cyc[0].edge, pos);
            awaiting[pos] = partner(cyc[0]);
            awaiting[pos + 1] = cyc[0]; // consumed by the split now
            split_at(pos + 1, cyc);
        } else if (s == 1) {
            for (int r = 0; r < 3 && !has[0]; ++r) rot(1);
            split_at(*stub_position(cyc[0]), cyc);
        } else if (s == 2) {
            while (has[2]) rot(1); // put the stubless end last
            merge_at(cyc);
        } else {
            const std::uint32_t out = merge_at(cyc);
            // the produced leg joins the third stub with a cap
            const std::uint32_t pz = *stub_position(cyc[2]);
            const std::uint32_t left = make_adjacent(out, pz);
            emit_cap(left);
        }
    }

    // Emit `split` consuming the stub at pos for cyclic order (cyc0,cyc1,cyc2):
    // left outgoing leg = cyc2's edge, right = cyc1's edge.
    void split_at(std::uint32_t pos, const std::array<End, 3>& cyc) {
        movie.slices.push_back({SpinMovie::Kind::Split, pos,
                                {cyc[0].edge, cyc[2].edge, cyc[1].edge}});
        awaiting[pos] = partner(cyc[2]);
        awaiting.insert(awaiting.begin() + pos + 1, partner(cyc[1]));
        if (self_loop_pair(cyc[1], cyc[2])) emit_cap(pos); // lollipop closes now
    }

    // Emit `merge` consuming the stubs of cyc0, cyc1 (in that order) and
    // producing a leg of cyc2's edge; returns the produced position.
    std::uint32_t merge_at(const std::array<End, 3>& cyc) {
        std::uint32_t p0 = *stub_position(cyc[0]);
        const std::uint32_t p1 = *stub_position(cyc[1]);
        const std::uint32_t left = make_adjacent(p0, p1);
        movie.slices.push_back({SpinMovie::Kind::Merge, left,
                                {cyc[0].edge, cyc[1].edge, cyc[2].edge}});
        awaiting[left] = partner(cyc[2]);
        awaiting.erase(awaiting.begin() + left + 1);
        return left;
    }

    void run() {
        std::vector<bool> placed(net.vertices.size(), false);
        for (std::size_t done = 0; done < net.vertices.size(); ++done) {
            std::vector<std::size_t> best;
            unsigned best_s = 0;
            for (std::size_t q = 0; q < net.vertices.size(); ++q) {
                if (placed[q]) continue;
                const unsigned s = stub_count(net.vertices[q]);
                if (best.empty() || s > best_s) {
                    best = {q};
                    best_s = s;
                } else if (s == best_s) {
                    best.push_back(q);
                }
            }
            std::size_t pick = best.front();
            if (randomized && best.size() > 1)
                pick = best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
            place(net.vertices[pick]);
            placed[pick] = true;
        }
        if (!awaiting.empty())
            throw Malformed("net does not close up; is an edge end repeated?");
    }
};

} // namespace

SpinMovie planarize(const AbstractNet& net, unsigned seed) {
    Layout layout(net, seed);
    layout.run();
    return layout.movie;
}

AbstractNet circle_net(unsigned color) {
    AbstractNet n;
    n.circles.push_back(color);
    return n;
}

AbstractNet theta_net(unsigned i, unsigned j, unsigned k) {
    AbstractNet n;
    n.edge_color = {i, j, k};
    n.vertices.push_back({{End{0, 0}, End{1, 0}, End{2, 0}}});
    n.vertices.push_back({{End{0, 1}, End{2, 1}, End{1, 1}}});
    return n;
}

AbstractNet tetrahedron_net(const std::array<unsigned, 6>& c) {
    AbstractNet n;
    n.edge_color.assign(c.begin(), c.end());
    // edges: 0=AB 1=AC 2=AD 3=BC 4=BD 5=CD; planar drawing with A inside BCD
    n.vertices.push_back({{End{0, 0}, End{1, 0}, End{2, 0}}}); // A: AB, AC, AD
    n.vertices.push_back({{End{0, 1}, End{4, 0}, End{3, 0}}}); // B: BA, BD, BC
    n.vertices.push_back({{End{5, 0}, End{1, 1}, End{3, 1}}}); // C: CD, CA, CB
    n.vertices.push_back({{End{4, 1}, End{2, 1}, End{5, 1}}}); // D: DB, DA, DC
    return n;
}

} // namespace skeinlab
