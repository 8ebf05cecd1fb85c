#include "skeinlab/rational.hpp"

#include <cctype>
#include <sstream>

namespace skeinlab {

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
    // Canonical form: "a" when the denominator is 1, else "a/b" with b > 0
    // and gcd(a, b) = 1 (cpp_rational keeps that invariant).
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
    // Accepts "a" or "a/b" with optional leading '-' on a, digits only
    // otherwise.  Anything else is a ParseError; b = 0 is ZeroDenominator.
    auto is_int = [](const std::string& s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };

    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_int(text)) throw ParseError("bad rational: '" + text + "'");
        return Rational(Integer(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw ParseError("bad rational: '" + text + "'");
    Integer b(den);
    if (b == 0) throw ZeroDenominator("zero denominator in '" + text + "'");
    return Rational(Integer(num), b);
}

} // namespace skeinlab
