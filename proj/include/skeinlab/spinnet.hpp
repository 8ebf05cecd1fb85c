#pragma once

// Spin networks: closed trivalent graphs with cyclically ordered vertices and
// admissibly colored edges, evaluated in the skein module at loop value -2.
//
// A network is presented as a "movie": a sequence of elementary slices read
// bottom to top, each acting on a horizontal boundary of colored strands.
// Slices:
//   cup e @pos      minimum of edge e: two new ends of e appear at pos, pos+1
//   cap @pos        maximum joining the ends at pos, pos+1 (equal colors)
//   split i j k @pos  trivalent vertex; edge i comes in at pos, edges j (left)
//                     and k (right) leave.  Realizes the counterclockwise
//                     cyclic order (i, k, j) around the vertex.
//   merge j k i @pos  trivalent vertex; edges j, k at pos, pos+1 merge into i.
//                     Realizes the counterclockwise cyclic order (j, k, i).
//   cross @pos      the two strands at pos, pos+1 cross (resolved in the
//                   skein module; crossings are involutive, so no over/under)
//   id              no-op
// A header names the edge colors; edge ids are 1-based in files.
//
// Evaluation: every edge carries its Jones-Wenzl projector (inserted at cups
// and supplied by the vertex tangles), vertices expand to the Y tangles, and
// the slices compose in the skein module; a closed movie yields a scalar.

#include "skeinlab/skein.hpp"

#include <optional>
#include <random>
#include <sstream>

namespace skeinlab {

struct SpinMovie {
    enum class Kind { Cup, Cap, Split, Merge, Cross, Id };
    struct Slice {
        Kind kind = Kind::Id;
        std::uint32_t pos = 0;
        std::array<std::uint32_t, 3> edge = {0, 0, 0}; // 0-based edge ids
    };
    std::vector<unsigned> colors; // by 0-based edge id
    std::vector<Slice> slices;
};

// Parse / print the movie file format (round-trip on canonical spacing).
SpinMovie parse_movie(const std::string& text);
std::string movie_str(const SpinMovie& movie);

// Abstract closed trivalent graph with cyclic vertex orientations; the
// planarizer below lays it out as a movie.
struct AbstractNet {
    struct End {
        std::uint32_t edge = 0; // 0-based
        std::uint32_t side = 0; // 0 or 1
        friend bool operator==(const End& a, const End& b) {
            return a.edge == b.edge && a.side == b.side;
        }
    };
    struct Vertex {
        std::array<End, 3> cyc; // counterclockwise cyclic order
    };
    std::vector<unsigned> edge_color;
    std::vector<Vertex> vertices;
    std::vector<unsigned> circles; // colors of vertex-free loops
};

// Lay an abstract net out as a movie.  Distinct seeds give genuinely
// different immersions of the same net (vertex order, crossing routes);
// evaluation must not depend on the choice.
SpinMovie planarize(const AbstractNet& net, unsigned seed = 0);

// Standard test families.
AbstractNet circle_net(unsigned color);
AbstractNet theta_net(unsigned i, unsigned j, unsigned k);
// Tetrahedron on vertices A,B,C,D; edge colors in the order
// AB, AC, AD, BC, BD, CD.
AbstractNet tetrahedron_net(const std::array<unsigned, 6>& c);

namespace detail {

template <class F>
SkeinElement<F> plain_cup(const F& field, unsigned c) {
    std::vector<std::int32_t> pr(2 * c);
    for (unsigned t = 0; t < 2 * c; ++t) pr[t] = static_cast<std::int32_t>(2 * c - 1 - t);
    SkeinElement<F> e = skein_zero<F>(0, 2 * c);
    e.terms.emplace(make_matching(0, 2 * c, pr), field.one());
    return e;
}

template <class F>
SkeinElement<F> colored_cup(SkeinContext<F>& ctx, unsigned c) {
    SkeinElement<F> proj = tensor(ctx.jones_wenzl(c), ctx.identity(c), ctx.field());
    return compose(proj, plain_cup(ctx.field(), c), ctx.field());
}

template <class F>
SkeinElement<F> plain_caps(const F& field, unsigned c) {
    std::vector<std::int32_t> pr(2 * c);
    for (unsigned t = 0; t < 2 * c; ++t) pr[t] = static_cast<std::int32_t>(2 * c - 1 - t);
    SkeinElement<F> e = skein_zero<F>(2 * c, 0);
    e.terms.emplace(make_matching(2 * c, 0, pr), field.one());
    return e;
}


template <class F>
void check_vertex_colors([[maybe_unused]] const F& field, unsigned i, unsigned j, unsigned k,
                         [[maybe_unused]] bool require_p_admissible) {
    require_admissible(i, j, k);
    if constexpr (F::modular) {
        if (require_p_admissible && !p_admissible(i, j, k, field.prime()))
            throw NotPAdmissible("(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                 std::to_string(k) + ") is not p-admissible at p = " +
                                 std::to_string(field.prime()));
    }
}

} // namespace detail

// Compose the slices of a closed movie; returns the scalar value.  Mod p the
// vertices are gated on p-admissibility by default; callers summing over the
// full color window may relax the gate (the Wenzl coefficients only divide by
// integers < p, so the relaxed evaluation is still the reduction of the
// rational value — typically zero at the window's edge).
template <class F>
typename F::Elem evaluate_movie(const SpinMovie& movie, SkeinContext<F>& ctx,
                                bool require_p_admissible = true) {
    const F& field = ctx.field();
    auto color = [&](std::uint32_t e) -> unsigned {
        if (e >= movie.colors.size()) throw Malformed("slice references edge " + std::to_string(e + 1) + " beyond the header");
        return movie.colors[e];
    };

    SkeinElement<F> cur = skein_zero<F>(0, 0);
    cur.terms.emplace(make_matching(0, 0, {}), field.one());
    std::vector<std::uint32_t> bd; // edge ids on the boundary

    // Every edge must pass through its projector once.  Vertices carry the
    // projectors of their three edges, so a cup only needs one when no
    // vertex slice ever touches its edge (a bare circle).
    std::vector<char> projected(movie.colors.size(), 0);
    for (const auto& s : movie.slices)
        if (s.kind == SpinMovie::Kind::Split || s.kind == SpinMovie::Kind::Merge)
            for (std::uint32_t e : s.edge)
                if (e < projected.size()) projected[e] = 1;

    auto offset = [&](std::uint32_t pos) {
        unsigned off = 0;
        for (std::uint32_t q = 0; q < pos; ++q) off += color(bd[q]);
        return off;
    };
    auto width = [&]() { return offset(static_cast<std::uint32_t>(bd.size())); };
    auto apply = [&](const SkeinElement<F>& center, unsigned off, unsigned rest) {
        SkeinElement<F> piece =
            tensor(tensor(ctx.identity(off), center, field), ctx.identity(rest), field);
        cur = compose(piece, cur, field);
    };

    for (const auto& s : movie.slices) {
        const unsigned W = width();
        switch (s.kind) {
        case SpinMovie::Kind::Id:
            break;
        case SpinMovie::Kind::Cup: {
            if (s.pos > bd.size()) throw Malformed("cup position out of range");
            const unsigned c = color(s.edge[0]);
            const unsigned off = offset(s.pos);
            if (projected[s.edge[0]])
                apply(detail::plain_cup(field, c), off, W - off);
            else
                apply(detail::colored_cup(ctx, c), off, W - off);
            bd.insert(bd.begin() + s.pos, 2, s.edge[0]);
            break;
        }
        case SpinMovie::Kind::Cap: {
            if (s.pos + 1 >= bd.size()) throw Malformed("cap position out of range");
            const unsigned c = color(bd[s.pos]);
            if (c != color(bd[s.pos + 1]))
                throw Malformed("cap joins strands of different colors");
            const unsigned off = offset(s.pos);
            apply(detail::plain_caps(field, c), off, W - off - 2 * c);
            bd.erase(bd.begin() + s.pos, bd.begin() + s.pos + 2);
            break;
        }
        case SpinMovie::Kind::Split: {
            if (s.pos >= bd.size()) throw Malformed("split position out of range");
            if (bd[s.pos] != s.edge[0])
                throw Malformed("split expects its incoming edge on the boundary");
            const unsigned ci = color(s.edge[0]), cj = color(s.edge[1]), ck = color(s.edge[2]);
            detail::check_vertex_colors(field, ci, cj, ck, require_p_admissible);
            const unsigned off = offset(s.pos);
            // vertex = (f_j x f_k) . triad . f_i, applied factor by factor to
            // keep the pairwise composition products small
            apply(ctx.jones_wenzl(ci), off, W - off - ci);
            apply(ctx.triad(ci, cj, ck), off, W - off - ci);
            apply(ctx.jones_wenzl(cj), off, W - off - ci + ck);
            apply(ctx.jones_wenzl(ck), off + cj, W - off - ci);
            bd[s.pos] = s.edge[1];
            bd.insert(bd.begin() + s.pos + 1, s.edge[2]);
            break;
        }
        case SpinMovie::Kind::Merge: {
            if (s.pos + 1 >= bd.size()) throw Malformed("merge position out of range");
            if (bd[s.pos] != s.edge[0] || bd[s.pos + 1] != s.edge[1])
                throw Malformed("merge expects its two incoming edges on the boundary");
            const unsigned cj = color(s.edge[0]), ck = color(s.edge[1]), ci = color(s.edge[2]);
            detail::check_vertex_colors(field, ci, cj, ck, require_p_admissible);
            const unsigned off = offset(s.pos);
            apply(ctx.jones_wenzl(cj), off, W - off - cj);
            apply(ctx.jones_wenzl(ck), off + cj, W - off - cj - ck);
            apply(transpose(ctx.triad(ci, cj, ck)), off, W - off - cj - ck);
            apply(ctx.jones_wenzl(ci), off, W - off - cj - ck);
            bd[s.pos] = s.edge[2];
            bd.erase(bd.begin() + s.pos + 1);
            break;
        }
        case SpinMovie::Kind::Cross: {
            if (s.pos + 1 >= bd.size()) throw Malformed("cross position out of range");
            const unsigned a = color(bd[s.pos]), b = color(bd[s.pos + 1]);
            const unsigned off = offset(s.pos);
            // cable crossing as a braid word of strand crossings, each a
            // two-term element
            const SkeinElement<F>& x2 = ctx.permutation_to_skein({1, 0});
            for (unsigned i = a; i-- > 0;)
                for (unsigned j = 0; j < b; ++j)
                    apply(x2, off + i + j, W - off - i - j - 2);
            std::swap(bd[s.pos], bd[s.pos + 1]);
            break;
        }
        }
    }
    if (!bd.empty()) throw Malformed("movie does not close: boundary is nonempty at the end");
    if (cur.terms.empty()) return field.zero();
    return cur.terms.begin()->second;
}

// Evaluate an abstract net (lay out, then run the movie).
template <class F>
typename F::Elem evaluate_net(const AbstractNet& net, SkeinContext<F>& ctx, unsigned seed = 0,
                              bool require_p_admissible = true) {
    return evaluate_movie(planarize(net, seed), ctx, require_p_admissible);
}

} // namespace skeinlab
