#include "skeinlab/skein.hpp"

namespace skeinlab {

namespace {

using PairList = std::vector<std::pair<std::size_t, std::size_t>>;

// All non-crossing perfect matchings of the ordered point list `pts`
// (positions on a circle arc): the first point pairs with a point at odd
// offset, splitting the rest into independent inside / outside blocks.
std::vector<PairList> noncrossing(const std::vector<std::size_t>& pts) {
    if (pts.empty()) return {PairList{}};
    std::vector<PairList> out;
    for (std::size_t idx = 1; idx < pts.size(); idx += 2) {
        const std::vector<std::size_t> inside(pts.begin() + 1, pts.begin() + idx);
        const std::vector<std::size_t> outside(pts.begin() + idx + 1, pts.end());
        for (const PairList& mi : noncrossing(inside))
            for (const PairList& mo : noncrossing(outside)) {
                PairList m;
                m.reserve(mi.size() + mo.size() + 1);
                m.emplace_back(pts[0], pts[idx]);
                m.insert(m.end(), mi.begin(), mi.end());
                m.insert(m.end(), mo.begin(), mo.end());
                out.push_back(std::move(m));
            }
    }
    return out;
}

} // namespace

std::vector<PlanarMatching> enumerate_matchings(unsigned bottom, unsigned top) {
    const std::size_t n = static_cast<std::size_t>(bottom) + top;
    std::vector<PlanarMatching> result;
    if (n % 2 != 0) return result;
    if (n == 0) {
        result.push_back(PlanarMatching{bottom, top, {}});
        return result;
    }
    std::vector<std::size_t> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = i; // counterclockwise positions
    auto geometric = [&](std::size_t pos) -> std::size_t {
        return pos < bottom ? pos : bottom + (n - 1 - pos);
    };
    for (const PairList& pl : noncrossing(pts)) {
        PlanarMatching m{bottom, top, std::vector<std::int32_t>(n, -1)};
        for (const auto& [a, b] : pl) {
            m.pair[geometric(a)] = static_cast<std::int32_t>(geometric(b));
            m.pair[geometric(b)] = static_cast<std::int32_t>(geometric(a));
        }
        result.push_back(std::move(m));
    }
    std::sort(result.begin(), result.end());
    return result;
}

Rational theta_closed_form(long i, long j, long k) {
    require_admissible(i, j, k);
    const long a = (-i + j + k) / 2;
    const long b = (i - j + k) / 2;
    const long c = (i + j - k) / 2;
    const long m = (i + j + k) / 2;
    const Integer num = factorial(static_cast<unsigned>(m + 1)) *
                        factorial(static_cast<unsigned>(a)) *
                        factorial(static_cast<unsigned>(b)) *
                        factorial(static_cast<unsigned>(c));
    const Integer den = factorial(static_cast<unsigned>(i)) *
                        factorial(static_cast<unsigned>(j)) *
                        factorial(static_cast<unsigned>(k));
    Rational r(num, den);
    return (m % 2 == 0) ? r : -r;
}

} // namespace skeinlab
