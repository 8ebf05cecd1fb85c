#include "skeinlab/series.hpp"

#include <algorithm>
#include <sstream>

namespace skeinlab {

// ---------------------------------------------------------------- AlphaPoly

AlphaPoly AlphaPoly::constant(const Rational& c, unsigned arity) {
    AlphaPoly p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

AlphaPoly AlphaPoly::variable(unsigned i, unsigned arity) {
    if (i >= arity) throw ArityMismatch("variable index out of range");
    Exponents e(arity, 0);
    e[i] = 1;
    return monomial(e, Rational(1));
}

AlphaPoly AlphaPoly::monomial(const Exponents& e, const Rational& c) {
    AlphaPoly p(static_cast<unsigned>(e.size()));
    p.add_term(e, c);
    return p;
}

bool AlphaPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(arity_, 0);
}

Rational AlphaPoly::constant_term() const {
    auto it = terms_.find(Exponents(arity_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

int AlphaPoly::degree_in(unsigned i) const {
    if (i >= arity_) throw ArityMismatch("variable index out of range");
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
    return d;
}

int AlphaPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (int k : e) t += k;
        d = std::max(d, t);
    }
    return d;
}

void AlphaPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != arity_) throw ArityMismatch("exponent vector length != arity");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

AlphaPoly& AlphaPoly::operator+=(const AlphaPoly& o) {
    if (o.arity_ != arity_) throw ArityMismatch("adding polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

AlphaPoly& AlphaPoly::operator-=(const AlphaPoly& o) {
    if (o.arity_ != arity_) throw ArityMismatch("subtracting polynomials of different arity");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

AlphaPoly operator*(const AlphaPoly& a, const AlphaPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("multiplying polynomials of different arity");
    AlphaPoly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            AlphaPoly::Exponents e(a.arity_);
            for (unsigned i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

AlphaPoly& AlphaPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

bool operator==(const AlphaPoly& a, const AlphaPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
}

AlphaPoly AlphaPoly::shift(const std::vector<Rational>& c) const {
    if (c.size() != arity_) throw ArityMismatch("shift vector length != arity");
    AlphaPoly r(arity_);
    for (const auto& [e, coef] : terms_) {
        AlphaPoly term = AlphaPoly::constant(coef, arity_);
        for (unsigned i = 0; i < arity_; ++i) {
            AlphaPoly base = variable(i, arity_) + constant(c[i], arity_);
            for (int k = 0; k < e[i]; ++k) term = term * base;
        }
        r += term;
    }
    return r;
}

Rational AlphaPoly::evaluate(const std::vector<Rational>& v) const {
    if (v.size() != arity_) throw ArityMismatch("evaluation vector length != arity");
    Rational r(0);
    for (const auto& [e, coef] : terms_) {
        Rational t = coef;
        for (unsigned i = 0; i < arity_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= v[i];
        r += t;
    }
    return r;
}

std::string AlphaPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, coef] : terms_) {
        Rational c = coef;
        if (first) {
            first = false;
        } else if (numerator(c) < 0) {
            out += " - ";
            c = -c;
        } else {
            out += " + ";
        }
        std::string vars;
        for (unsigned i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "a" + std::to_string(i + 1);
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += to_string(c);
        } else if (c == 1) {
            out += vars;
        } else if (c == -1) {
            out += "-" + vars;
        } else {
            out += to_string(c) + "*" + vars;
        }
    }
    return out;
}

namespace {

// One '*'-separated factor of a monomial: either a rational or "aK[^E]".
void apply_factor(const std::string& f, unsigned arity, AlphaPoly::Exponents& e,
                  Rational& coef) {
    if (f.empty()) throw Malformed("empty factor in polynomial");
    if (f[0] == 'a' && f.size() > 1 && std::isdigit(static_cast<unsigned char>(f[1]))) {
        const auto caret = f.find('^');
        const std::string idx = f.substr(1, caret == std::string::npos ? std::string::npos
                                                                       : caret - 1);
        unsigned long var = 0;
        try {
            var = std::stoul(idx);
        } catch (...) {
            throw Malformed("bad variable '" + f + "'");
        }
        if (var < 1 || var > arity)
            throw Malformed("variable a" + std::to_string(var) + " out of arity " +
                            std::to_string(arity));
        long exp = 1;
        if (caret != std::string::npos) {
            try {
                exp = std::stol(f.substr(caret + 1));
            } catch (...) {
                throw Malformed("bad exponent in '" + f + "'");
            }
            if (exp < 0) throw Malformed("negative exponent in '" + f + "'");
        }
        e[var - 1] += static_cast<int>(exp);
    } else {
        try {
            coef *= parse_rational(f);
        } catch (const ZeroDenominator&) {
            throw;
        } catch (const ParseError&) {
            throw Malformed("bad coefficient '" + f + "'");
        }
    }
}

} // namespace

AlphaPoly AlphaPoly::parse(const std::string& text, unsigned arity) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw Malformed("empty polynomial");

    AlphaPoly out(arity);
    std::size_t pos = 0;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw Malformed("dangling sign in polynomial '" + text + "'");
        Exponents e(arity, 0);
        Rational coef(sign);
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            const auto star = term.find('*', fpos);
            const std::string factor =
                term.substr(fpos, star == std::string::npos ? std::string::npos : star - fpos);
            apply_factor(factor, arity, e, coef);
            if (star == std::string::npos) break;
            fpos = star + 1;
        }
        out.add_term(e, coef);
        pos = end;
    }
    return out;
}

// --------------------------------------------------------------- HbarSeries

HbarSeries HbarSeries::constant(const AlphaPoly& c, int order) {
    return monomial(0, c, order);
}

HbarSeries HbarSeries::constant(const Rational& c, unsigned arity, int order) {
    return monomial(0, AlphaPoly::constant(c, arity), order);
}

HbarSeries HbarSeries::monomial(int n, const AlphaPoly& c, int order) {
    HbarSeries s(c.arity(), order);
    if (n <= order) s.set_coeff(n, c);
    return s;
}

bool HbarSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

const AlphaPoly& HbarSeries::coeff(int n) const {
    if (n > order_)
        throw OutOfRange("coefficient of hbar^" + std::to_string(n) +
                         " beyond truncation order " + std::to_string(order_));
    static const AlphaPoly zero0(0);
    if (n < lo_ || coeffs_.empty()) {
        if (arity_ == 0) return zero0;
        // a per-arity zero is needed; keep a small sticky cache
        thread_local std::map<unsigned, AlphaPoly> zeros;
        auto [it, fresh] = zeros.emplace(arity_, AlphaPoly(arity_));
        return it->second;
    }
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

void HbarSeries::set_coeff(int n, const AlphaPoly& c) {
    if (c.arity() != arity_) throw ArityMismatch("coefficient arity != series arity");
    if (n > order_)
        throw OutOfRange("setting coefficient beyond truncation order");
    if (coeffs_.empty()) {
        lo_ = n;
        coeffs_.assign(static_cast<std::size_t>(order_ - n + 1), AlphaPoly(arity_));
    }
    if (n < lo_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - n), AlphaPoly(arity_));
        lo_ = n;
    }
    coeffs_[static_cast<std::size_t>(n - lo_)] = c;
}

int HbarSeries::true_valuation() const {
    for (int n = lo_; n <= order_; ++n)
        if (!coeff(n).is_zero()) return n;
    return order_ + 1;
}

HbarSeries operator+(const HbarSeries& a, const HbarSeries& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("adding series of different arity");
    HbarSeries r(a.arity_, std::min(a.order_, b.order_));
    for (int n = std::min(a.lo_, b.lo_); n <= r.order_; ++n) {
        AlphaPoly c = a.coeff(n) + b.coeff(n);
        if (!c.is_zero() || (n >= 0 && n <= r.order_)) r.set_coeff(n, c);
    }
    return r;
}

HbarSeries operator-(const HbarSeries& a, const HbarSeries& b) { return a + (-b); }

HbarSeries HbarSeries::operator-() const {
    HbarSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

HbarSeries operator*(const HbarSeries& a, const HbarSeries& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("multiplying series of different arity");
    const int va = a.true_valuation(), vb = b.true_valuation();
    const int order = std::min(a.order_ + vb, b.order_ + va);
    HbarSeries r(a.arity_, order);
    if (va > a.order_ || vb > b.order_) return r; // a zero factor
    r.lo_ = std::min(va + vb, 0);
    r.coeffs_.assign(static_cast<std::size_t>(order - r.lo_ + 1), AlphaPoly(a.arity_));
    for (int i = va; i <= a.order_; ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = vb; j <= b.order_ && i + j <= order; ++j) {
            if (b.coeff(j).is_zero()) continue;
            AlphaPoly prod = a.coeff(i) * b.coeff(j);
            r.set_coeff(i + j, r.coeff(i + j) + prod);
        }
    }
    return r;
}

HbarSeries operator*(const HbarSeries& a, const Rational& c) {
    HbarSeries r = a;
    for (auto& t : r.coeffs_) t *= c;
    return r;
}

HbarSeries operator/(const HbarSeries& a, const HbarSeries& b) {
    return a * b.reciprocal();
}

bool operator==(const HbarSeries& a, const HbarSeries& b) {
    if (a.arity_ != b.arity_ || a.order_ != b.order_) return false;
    for (int n = std::min(a.lo_, b.lo_); n <= a.order_; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

HbarSeries HbarSeries::reciprocal() const {
    const int v = true_valuation();
    if (v > order_) throw ZeroDenominator("reciprocal of the zero series");
    const AlphaPoly& lead = coeff(v);
    if (!lead.is_constant())
        throw NonzeroConstantTerm("series reciprocal needs a constant leading coefficient, got " +
                                  lead.str());
    const int m = order_ - v; // the unit part u is trusted to degree m
    // u = sum_{k=0..m} coeff(v+k) hbar^k;  Newton: w <- w(2 - u w)
    HbarSeries u(arity_, m);
    for (int k = 0; k <= m; ++k) u.set_coeff(k, coeff(v + k));
    HbarSeries w = HbarSeries::constant(AlphaPoly::constant(Rational(1) / lead.constant_term(),
                                                            arity_),
                                        m);
    const HbarSeries two = HbarSeries::constant(Rational(2), arity_, m);
    int correct = 0; // w matches u^{-1} through hbar^correct
    while (correct < m) {
        w = w * (two - u * w);
        w = w.truncate(m);
        correct = std::min(2 * correct + 1, m);
    }
    return w.shift_hbar(-v).truncate(order_ - 2 * v);
}

HbarSeries HbarSeries::truncate(int new_order) const {
    if (new_order >= order_) {
        if (new_order == order_) return *this;
        throw OutOfRange("cannot extend a truncated series (order " + std::to_string(order_) +
                         " -> " + std::to_string(new_order) + ")");
    }
    HbarSeries r(arity_, new_order);
    r.lo_ = std::min(lo_, 0);
    r.coeffs_.assign(static_cast<std::size_t>(std::max(new_order - r.lo_ + 1, 0)),
                     AlphaPoly(arity_));
    for (int n = lo_; n <= new_order; ++n) r.set_coeff(n, coeff(n));
    return r;
}

HbarSeries HbarSeries::shift_hbar(int s) const {
    HbarSeries r(arity_, order_ + s);
    r.lo_ = lo_ + s;
    r.coeffs_ = coeffs_;
    if (r.coeffs_.empty()) r.lo_ = std::min(0, r.order_);
    return r;
}

HbarSeries HbarSeries::power(unsigned e) const {
    HbarSeries r = HbarSeries::constant(Rational(1), arity_, order_);
    for (unsigned k = 0; k < e; ++k) r = (r * *this).truncate(std::min(r.order_, order_));
    return r;
}

HbarSeries HbarSeries::shift_alpha(const std::vector<Rational>& c) const {
    HbarSeries r(arity_, order_);
    for (int n = lo_; n <= order_; ++n)
        if (!coeff(n).is_zero()) r.set_coeff(n, coeff(n).shift(c));
    return r;
}

HbarSeries HbarSeries::evaluate_alpha(const std::vector<Rational>& v) const {
    HbarSeries r(0, order_);
    for (int n = lo_; n <= order_; ++n)
        if (!coeff(n).is_zero())
            r.set_coeff(n, AlphaPoly::constant(coeff(n).evaluate(v), 0));
    return r;
}

bool HbarSeries::has_negative_part() const {
    for (int n = lo_; n < 0; ++n)
        if (!coeff(n).is_zero()) return true;
    return false;
}

HbarSeries HbarSeries::canonical() const {
    if (has_negative_part())
        throw NegativeDegreeResidue("series has a nonzero coefficient at negative hbar-degree " +
                                    std::to_string(true_valuation()));
    if (lo_ >= 0) return *this;
    HbarSeries r(arity_, order_);
    for (int n = 0; n <= order_; ++n) r.set_coeff(n, coeff(n));
    return r;
}

std::string HbarSeries::str() const {
    const HbarSeries c = canonical();
    std::string out;
    for (int n = 0; n <= c.order_; ++n) {
        out += "hbar^" + std::to_string(n) + ": " + c.coeff(n).str();
        if (n < c.order_) out += "\n";
    }
    return out;
}

HbarSeries HbarSeries::parse(const std::string& text, unsigned arity) {
    std::istringstream in(text);
    std::string line;
    std::map<int, AlphaPoly> found;
    int order = -1;
    while (std::getline(in, line)) {
        std::string t = line;
        const auto b = t.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = t.find_last_not_of(" \t\r");
        t = t.substr(b, e - b + 1);
        if (t.empty() || t[0] == '#') continue;
        if (t.rfind("hbar^", 0) != 0) throw Malformed("expected 'hbar^n:' line, got '" + t + "'");
        const auto colon = t.find(':');
        if (colon == std::string::npos) throw Malformed("missing ':' in series line");
        int n = 0;
        try {
            n = std::stoi(t.substr(5, colon - 5));
        } catch (...) {
            throw Malformed("bad hbar exponent in '" + t + "'");
        }
        if (n < 0) throw Malformed("negative hbar exponent");
        if (found.count(n)) throw Malformed("duplicate hbar^" + std::to_string(n) + " line");
        found.emplace(n, AlphaPoly::parse(t.substr(colon + 1), arity));
        order = std::max(order, n);
    }
    if (order < 0) throw Malformed("empty series text");
    HbarSeries s(arity, order);
    for (const auto& [n, c] : found) s.set_coeff(n, c);
    return s;
}

HbarSeries series_exp(const HbarSeries& a) {
    const int v = a.true_valuation();
    if (v <= 0 && v <= a.order())
        throw NonzeroConstantTerm("series_exp needs positive valuation, got hbar^" +
                                  std::to_string(v) + " term " + a.coeff(v).str());
    const int N = a.order();
    HbarSeries r = HbarSeries::constant(Rational(1), a.arity(), N);
    HbarSeries acc = r;
    Rational nfac(1);
    for (int n = 1; v * n <= N; ++n) {
        acc = (acc * a).truncate(N);
        nfac *= n;
        r = r + acc * (Rational(1) / nfac);
        if (acc.is_zero()) break;
    }
    return r;
}

HbarSeries sinh_ratio(const Rational& u, int order) {
    // sinh(u hbar/2) / sinh(hbar/2), computed on windows one degree past the
    // requested order so the valuation-1 division lands exactly on `order`.
    const int N = order + 1;
    auto sinh_half = [&](const Rational& c) {
        HbarSeries s(0u, N);
        Rational fac(1);
        Rational cp = c / 2;
        for (int n = 1; n <= N; n += 2) {
            fac = factorial(static_cast<unsigned>(n));
            s.set_coeff(n, AlphaPoly::constant(cp / fac, 0));
            cp *= (c / 2) * (c / 2);
        }
        return s;
    };
    return (sinh_half(u) / sinh_half(Rational(1))).truncate(order).canonical();
}

// ----------------------------------------------------------------- FpSeries

bool FpSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (c.v != 0) return false;
    return true;
}

FpElem FpSeries::coeff(int n) const {
    if (n > order_)
        throw OutOfRange("coefficient of hbar^" + std::to_string(n) +
                         " beyond truncation order " + std::to_string(order_));
    if (n < lo_ || coeffs_.empty()) return FpElem(0, p_);
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

void FpSeries::set_coeff(int n, FpElem c) {
    if (c.p != p_) throw std::logic_error("mixed primes in FpSeries");
    if (n > order_) throw OutOfRange("setting coefficient beyond truncation order");
    if (coeffs_.empty()) {
        lo_ = n;
        coeffs_.assign(static_cast<std::size_t>(order_ - n + 1), FpElem(0, p_));
    }
    if (n < lo_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(lo_ - n), FpElem(0, p_));
        lo_ = n;
    }
    coeffs_[static_cast<std::size_t>(n - lo_)] = c;
}

FpSeries operator+(const FpSeries& a, const FpSeries& b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed primes in FpSeries addition");
    FpSeries r(a.p_, std::min(a.order_, b.order_));
    for (int n = std::min(a.lo_, b.lo_); n <= r.order_; ++n) r.set_coeff(n, a.coeff(n) + b.coeff(n));
    return r;
}

FpSeries operator-(const FpSeries& a, const FpSeries& b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed primes in FpSeries subtraction");
    FpSeries r(a.p_, std::min(a.order_, b.order_));
    for (int n = std::min(a.lo_, b.lo_); n <= r.order_; ++n) r.set_coeff(n, a.coeff(n) - b.coeff(n));
    return r;
}

FpSeries operator*(const FpSeries& a, const FpSeries& b) {
    if (a.p_ != b.p_) throw std::logic_error("mixed primes in FpSeries multiplication");
    auto val = [](const FpSeries& s) {
        for (int n = s.lo_; n <= s.order_; ++n)
            if (s.coeff(n).v != 0) return n;
        return s.order_ + 1;
    };
    const int va = val(a), vb = val(b);
    const int order = std::min(a.order_ + vb, b.order_ + va);
    FpSeries r(a.p_, order);
    if (va > a.order_ || vb > b.order_) return r;
    for (int i = va; i <= a.order_; ++i)
        for (int j = vb; j <= b.order_ && i + j <= order; ++j)
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
    return r;
}

FpSeries operator*(const FpSeries& a, FpElem c) {
    FpSeries r = a;
    for (auto& t : r.coeffs_) t = t * c;
    return r;
}

bool operator==(const FpSeries& a, const FpSeries& b) {
    if (a.p_ != b.p_ || a.order_ != b.order_) return false;
    for (int n = std::min(a.lo_, b.lo_); n <= a.order_; ++n)
        if (a.coeff(n) != b.coeff(n)) return false;
    return true;
}

FpSeries FpSeries::truncate(int new_order) const {
    if (new_order >= order_) {
        if (new_order == order_) return *this;
        throw OutOfRange("cannot extend a truncated series");
    }
    FpSeries r(p_, new_order);
    r.lo_ = std::min(lo_, 0);
    r.coeffs_.assign(static_cast<std::size_t>(std::max(new_order - r.lo_ + 1, 0)), FpElem(0, p_));
    for (int n = lo_; n <= new_order; ++n) r.set_coeff(n, coeff(n));
    return r;
}

FpSeries FpSeries::shift_hbar(int s) const {
    FpSeries r(p_, order_ + s);
    r.lo_ = lo_ + s;
    r.coeffs_ = coeffs_;
    if (r.coeffs_.empty()) r.lo_ = std::min(0, r.order_);
    return r;
}

bool FpSeries::has_negative_part() const {
    for (int n = lo_; n < 0; ++n)
        if (coeff(n).v != 0) return true;
    return false;
}

FpSeries FpSeries::canonical() const {
    if (has_negative_part())
        throw NegativeDegreeResidue("mod-p series has a nonzero coefficient at negative degree");
    if (lo_ >= 0) return *this;
    FpSeries r(p_, order_);
    for (int n = 0; n <= order_; ++n) r.set_coeff(n, coeff(n));
    return r;
}

std::string FpSeries::str() const {
    const FpSeries c = canonical();
    std::string out;
    for (int n = 0; n <= c.order_; ++n) {
        out += "hbar^" + std::to_string(n) + ": " + std::to_string(c.coeff(n).v);
        if (n < c.order_) out += "\n";
    }
    return out;
}

FpSeries reduce_series(const HbarSeries& a, const PrimeContext& ctx) {
    if (a.arity() != 0)
        throw ArityMismatch("mod-p reduction needs a scalar series (arity 0)");
    const HbarSeries c = a.canonical();
    const int order = std::min<int>(c.order(), static_cast<int>(ctx.n_p()));
    FpSeries r(ctx.p(), order);
    for (int n = 0; n <= order; ++n) {
        try {
            r.set_coeff(n, psi_p(c.coeff(n).constant_term(), ctx));
        } catch (const DenominatorDivisibleByP&) {
            throw DenominatorDivisibleByP("coefficient of hbar^" + std::to_string(n) + " (" +
                                          to_string(c.coeff(n).constant_term()) +
                                          ") not reducible mod " + std::to_string(ctx.p()));
        }
    }
    return r;
}

} // namespace skeinlab
