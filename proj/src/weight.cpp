#include "skeinlab/weight.hpp"

#include <sstream>

namespace skeinlab {

namespace {

struct BracketEntry {
    long coef = 0;
    unsigned idx = 0;
};

// [x_a, x_b] in the basis 0 = e, 1 = f, 2 = h; every bracket of basis
// elements is a multiple of a single basis element.
BracketEntry bracket(unsigned a, unsigned b) {
    static const BracketEntry table[3][3] = {
        {{0, 0}, {1, 2}, {-2, 0}},  // [e,e], [e,f]=h,  [e,h]=-2e
        {{-1, 2}, {0, 0}, {2, 1}},  // [f,e]=-h, [f,f], [f,h]=2f
        {{2, 0}, {-2, 1}, {0, 0}},  // [h,e]=2e, [h,f]=-2f, [h,h]
    };
    return table[a][b];
}

// Trace form in the two-dimensional representation: B(e,f) = B(f,e) = 1,
// B(h,h) = 2.
long trace_form(unsigned a, unsigned b) {
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return 1;
    if (a == 2 && b == 2) return 2;
    return 0;
}

} // namespace

Rational omega_sl2(const ChordDiagram& d, const std::vector<unsigned>& colors) {
    QField q;
    return omega_sl2_in(d, colors, q);
}

Rational omega_sl2(const DiagramSum& s, const std::vector<unsigned>& colors) {
    QField q;
    return omega_sl2_in(s, colors, q);
}

Rational omega_sl2_direct(const ChordDiagram& d, const std::vector<unsigned>& colors) {
    if (colors.size() != d.circles)
        throw SizeMismatch("color vector has " + std::to_string(colors.size()) +
                           " entries for " + std::to_string(d.circles) + " circles");
    d.validate();
    const unsigned k = d.edge_count();
    QField q;
    std::vector<unsigned> assign(k, 0);
    Rational total = 0;
    std::vector<std::vector<unsigned>> words(d.circles);
    auto generator_at = [&](const DiagEnd& de) {
        const unsigned a = assign[de.edge];
        return de.side == 0 ? detail::kCasimirFirst[a] : detail::kCasimirSecond[a];
    };
    for (;;) {
        Rational term = 1;
        for (unsigned a : assign)
            if (a == 2) term /= 2;
        for (const auto& triple : d.ivertices) {
            const unsigned u = generator_at(triple[0]);
            const unsigned v = generator_at(triple[1]);
            const unsigned w = generator_at(triple[2]);
            const BracketEntry br = bracket(u, v);
            const long factor = -br.coef * trace_form(br.idx, w);
            if (factor == 0) {
                term = 0;
                break;
            }
            term *= factor;
        }
        if (term != 0) {
            for (unsigned c = 0; c < d.circles && term != 0; ++c) {
                auto& w = words[c];
                w.clear();
                for (const DiagEnd& de : d.legs[c]) w.push_back(generator_at(de));
                term *= detail::trace_word(w, colors[c], q);
            }
            total += term;
        }
        unsigned i = 0;
        while (i < k && assign[i] == 2) assign[i++] = 0;
        if (i == k) break;
        ++assign[i];
    }
    return total;
}

AbstractNet diagram_net(const ChordDiagram& d, const std::vector<unsigned>& colors) {
    if (colors.size() != d.circles)
        throw SizeMismatch("color vector has " + std::to_string(colors.size()) +
                           " entries for " + std::to_string(d.circles) + " circles");
    d.validate();
    AbstractNet net;
    net.edge_color.assign(d.edge_count(), 2u);
    for (unsigned c = 0; c < d.circles; ++c) {
        const unsigned n = static_cast<unsigned>(d.legs[c].size());
        if (n == 0) {
            net.circles.push_back(colors[c]);
            continue;
        }
        const unsigned base = static_cast<unsigned>(net.edge_color.size());
        for (unsigned p = 0; p < n; ++p) net.edge_color.push_back(colors[c]);
        for (unsigned p = 0; p < n; ++p) {
            AbstractNet::Vertex v;
            v.cyc = {AbstractNet::End{base + (p + n - 1) % n, 1},
                     AbstractNet::End{base + p, 0},
                     AbstractNet::End{d.legs[c][p].edge, d.legs[c][p].side}};
            net.vertices.push_back(v);
        }
    }
    for (const auto& triple : d.ivertices) {
        AbstractNet::Vertex v;
        for (unsigned t = 0; t < 3; ++t) v.cyc[t] = AbstractNet::End{triple[t].edge, triple[t].side};
        net.vertices.push_back(v);
    }
    return net;
}

// ---------------------------------------------------------------------------
// Weight polynomials
// ---------------------------------------------------------------------------

unsigned WeightPolynomial::degree_in(unsigned circle) const {
    if (circle >= circles) throw OutOfRange("circle index out of range");
    unsigned deg = 0;
    for (const auto& [k, c] : coeff) deg = std::max(deg, k[circle]);
    return deg;
}

Rational WeightPolynomial::at_colors(const std::vector<unsigned>& colors) const {
    if (colors.size() != circles)
        throw SizeMismatch("color vector size does not match the polynomial arity");
    std::vector<Rational> mu(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) mu[i] = Rational(colors[i] + 1);
    return at_shifted(mu);
}

Rational WeightPolynomial::at_shifted(const std::vector<Rational>& mu) const {
    if (mu.size() != circles)
        throw SizeMismatch("evaluation point size does not match the polynomial arity");
    Rational total = 0;
    for (const auto& [k, c] : coeff) {
        Rational term = c;
        for (std::size_t i = 0; i < mu.size(); ++i)
            term *= rational_pow(mu[i], static_cast<long>(k[i]));
        total += term;
    }
    return total;
}

WeightPolynomial& WeightPolynomial::operator+=(const WeightPolynomial& o) {
    if (o.coeff.empty()) return *this;
    if (coeff.empty()) {
        *this = o;
        return *this;
    }
    if (circles != o.circles)
        throw SizeMismatch("adding weight polynomials of different arity");
    for (const auto& [k, c] : o.coeff) {
        Rational& slot = coeff[k];
        slot += c;
        if (slot == 0) coeff.erase(k);
    }
    return *this;
}

WeightPolynomial& WeightPolynomial::scale(const Rational& c) {
    if (c == 0) {
        coeff.clear();
        return *this;
    }
    for (auto& [k, v] : coeff) v *= c;
    return *this;
}

WeightPolynomial operator*(const WeightPolynomial& a, const WeightPolynomial& b) {
    if (!a.coeff.empty() && !b.coeff.empty() && a.circles != b.circles)
        throw SizeMismatch("multiplying weight polynomials of different arity");
    WeightPolynomial out;
    out.circles = a.coeff.empty() ? b.circles : a.circles;
    for (const auto& [ka, ca] : a.coeff)
        for (const auto& [kb, cb] : b.coeff) {
            std::vector<unsigned> k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            Rational& slot = out.coeff[k];
            slot += ca * cb;
            if (slot == 0) out.coeff.erase(k);
        }
    return out;
}

std::string weight_polynomial_str(const WeightPolynomial& w) {
    std::ostringstream os;
    for (const auto& [k, c] : w.coeff) {
        os << 'a';
        for (unsigned e : k) os << ' ' << e;
        os << " = " << to_string(c) << '\n';
    }
    return os.str();
}

namespace {

// Exact monomial coefficients of the polynomial through the points
// (t+1, values[t]), by divided differences on the unit-spaced nodes.
std::vector<Rational> newton_monomials(std::vector<Rational> dd) {
    const std::size_t m = dd.size();
    for (std::size_t level = 1; level < m; ++level)
        for (std::size_t j = m - 1; j >= level; --j) {
            dd[j] = (dd[j] - dd[j - 1]) / Rational(static_cast<long>(level));
            if (j == level) break;
        }
    std::vector<Rational> mono(m, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // prod_{t<j} (x - (t+1))
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t t = 0; t < basis.size(); ++t) mono[t] += dd[j] * basis[t];
        std::vector<Rational> next(basis.size() + 1, Rational(0));
        const Rational node(static_cast<long>(j + 1));
        for (std::size_t t = 0; t < basis.size(); ++t) {
            next[t + 1] += basis[t];
            next[t] -= node * basis[t];
        }
        basis = std::move(next);
    }
    return mono;
}

WeightPolynomial interpolate_reduced(const DiagramSum& reduced, unsigned circles,
                                     const std::vector<unsigned>& legs, unsigned diagram_degree) {
    QField q;
    auto value_at = [&](const std::vector<unsigned>& lambdas) {
        return omega_sl2_in(reduced, lambdas, q);
    };

    std::vector<std::size_t> sizes(circles), stride(circles);
    std::size_t total = 1;
    for (unsigned i = 0; i < circles; ++i) {
        sizes[i] = legs[i] + 2;
        stride[i] = total;
        total *= sizes[i];
    }

    std::vector<Rational> flat(total);
    std::vector<unsigned> digits(circles, 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        flat[idx] = value_at(digits);
        for (unsigned i = 0; i < circles; ++i) {
            if (++digits[i] < sizes[i]) break;
            digits[i] = 0;
        }
    }

    // One axis at a time, replace values at mu = 1..m by monomial
    // coefficients in that variable.
    for (unsigned axis = 0; axis < circles; ++axis) {
        const std::size_t m = sizes[axis], st = stride[axis];
        std::vector<Rational> line(m);
        for (std::size_t idx = 0; idx < total; ++idx) {
            if ((idx / st) % m != 0) continue;
            for (std::size_t t = 0; t < m; ++t) line[t] = flat[idx + t * st];
            line = newton_monomials(std::move(line));
            for (std::size_t t = 0; t < m; ++t) flat[idx + t * st] = line[t];
        }
    }

    WeightPolynomial w;
    w.circles = circles;
    std::fill(digits.begin(), digits.end(), 0);
    for (std::size_t idx = 0; idx < total; ++idx) {
        if (flat[idx] != 0) w.coeff.emplace(digits, flat[idx]);
        for (unsigned i = 0; i < circles; ++i) {
            if (++digits[i] < sizes[i]) break;
            digits[i] = 0;
        }
    }

    // Structural verification.  Oddness in every shifted color:
    for (const auto& [k, c] : w.coeff)
        for (unsigned e : k)
            if (e % 2 == 0)
                throw InterpolationInconsistent("even power " + std::to_string(e) +
                                                " with coefficient " + to_string(c));
    // Denominators cleared by 2^deg * prod (n_i+1)!:
    Rational clear(int_pow(Integer(2), diagram_degree));
    for (unsigned i = 0; i < circles; ++i) clear *= Rational(factorial(legs[i] + 1));
    for (const auto& [k, c] : w.coeff)
        if (boost::multiprecision::denominator(Rational(clear * c)) != 1)
            throw InterpolationInconsistent("coefficient " + to_string(c) +
                                            " survives the clearing scale");
    // Agreement with direct evaluation off the interpolation grid:
    std::fill(digits.begin(), digits.end(), 1);
    for (std::size_t count = 0; count < total; ++count) {
        if (w.at_colors(digits) != value_at(digits))
            throw InterpolationInconsistent("shifted-grid value mismatch");
        for (unsigned i = 0; i < circles; ++i) {
            if (++digits[i] < sizes[i] + 1) break;
            digits[i] = 1;
        }
    }
    return w;
}

} // namespace

WeightPolynomial extract_weight_polynomial(const ChordDiagram& d, unsigned degree_bound) {
    if (d.degree() > degree_bound)
        throw OutOfRange("diagram degree " + std::to_string(d.degree()) +
                         " exceeds the interpolation bound " + std::to_string(degree_bound));
    d.validate();
    DiagramSum reduced;
    if (d.internal_vertex_count() == 0)
        reduced.add(d, Rational(1));
    else
        reduced = stu_reduce(d);
    return interpolate_reduced(reduced, d.circles, d.leg_counts(), d.degree());
}

WeightPolynomial extract_weight_polynomial(const DiagramSum& s, unsigned degree_bound) {
    WeightPolynomial out;
    for (const auto& [d, c] : s.terms) {
        WeightPolynomial w = extract_weight_polynomial(d, degree_bound);
        w.scale(c);
        out += w;
    }
    return out;
}

WeightPolynomial infinitesimal_character(const ChordDiagram& d, unsigned circle,
                                         unsigned degree_bound) {
    if (circle >= d.circles) throw OutOfRange("circle index out of range");
    WeightPolynomial w = extract_weight_polynomial(d, degree_bound);
    WeightPolynomial out;
    out.circles = w.circles;
    for (const auto& [k, c] : w.coeff) {
        std::vector<unsigned> q = k;
        if (q[circle] == 0)
            throw InterpolationInconsistent("weight polynomial not divisible by the shifted color");
        --q[circle];
        out.coeff.emplace(std::move(q), c);
    }
    return out;
}

} // namespace skeinlab
