#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skeinlab/spinnet.hpp"

using namespace skeinlab;

namespace {

const char* kTheta222 =
    "# theta, all edges colored 2\n"
    "colors 2 2 2\n"
    "cup 1 @0\n"
    "split 1 2 3 @1\n"
    "merge 2 3 1 @1\n"
    "cap @0\n";

Rational eval_q(const std::string& text) {
    QField Q;
    SkeinContext<QField> ctx(Q);
    SpinMovie m = parse_movie(text);
    return evaluate_movie(m, ctx);
}

Rational eval_q(const AbstractNet& net, unsigned seed = 0) {
    QField Q;
    SkeinContext<QField> ctx(Q);
    return evaluate_net(net, ctx, seed);
}

FpElem eval_p(const AbstractNet& net, std::uint32_t p, unsigned seed = 0) {
    FpField F(p);
    SkeinContext<FpField> ctx(F);
    return evaluate_net(net, ctx, seed);
}

} // namespace

TEST_CASE("movie parsing and printing") {
    SpinMovie m = parse_movie(kTheta222);
    REQUIRE(m.colors == std::vector<unsigned>{2, 2, 2});
    REQUIRE(m.slices.size() == 4);
    CHECK(m.slices[0].kind == SpinMovie::Kind::Cup);
    CHECK(m.slices[1].kind == SpinMovie::Kind::Split);
    CHECK(m.slices[1].pos == 1);
    CHECK(m.slices[1].edge == std::array<std::uint32_t, 3>{0, 1, 2});

    // canonical print round-trips
    const std::string canon = movie_str(m);
    CHECK(movie_str(parse_movie(canon)) == canon);

    CHECK_THROWS_AS(parse_movie("cup 1 @0\n"), Malformed);          // missing header
    CHECK_THROWS_AS(parse_movie("colors 2\ncup 2 @0\n"), Malformed); // edge out of range
    CHECK_THROWS_AS(parse_movie("colors 2\ncup 1 0\n"), Malformed);  // position lacks @
    CHECK_THROWS_AS(parse_movie("colors -1\n"), Malformed);
    CHECK_THROWS_AS(parse_movie("colors 2\nsplit 1 1 @0\n"), Malformed);
    CHECK_THROWS_AS(parse_movie("colors 2\nwobble @0\n"), Malformed);
}

TEST_CASE("movie evaluation: structural errors") {
    QField Q;
    SkeinContext<QField> ctx(Q);
    // does not close
    SpinMovie open = parse_movie("colors 1\ncup 1 @0\n");
    CHECK_THROWS_AS(evaluate_movie(open, ctx), Malformed);
    // cap of different colors
    SpinMovie bad = parse_movie("colors 1 2\ncup 1 @0\ncup 2 @2\ncap @1\ncap @0\n");
    CHECK_THROWS_AS(evaluate_movie(bad, ctx), Malformed);
    // positions out of range
    SpinMovie oor = parse_movie("colors 1\ncup 1 @3\n");
    CHECK_THROWS_AS(evaluate_movie(oor, ctx), Malformed);
    // split expects its own edge under it
    SpinMovie wrong = parse_movie("colors 1 1 2\ncup 2 @0\nsplit 1 2 3 @0\n");
    CHECK_THROWS_AS(evaluate_movie(wrong, ctx), Malformed);
    // non-admissible vertex
    SpinMovie inadm = parse_movie(
        "colors 1 1 1\ncup 1 @0\nsplit 1 2 3 @1\nmerge 2 3 1 @1\ncap @0\n");
    CHECK_THROWS_AS(evaluate_movie(inadm, ctx), NotAdmissible);
}

TEST_CASE("hand-written movies evaluate to the closed forms") {
    CHECK(eval_q("colors 3\ncup 1 @0\ncap @0\n") == delta_n(3)); // circle
    CHECK(eval_q("colors 0\ncup 1 @0\ncap @0\n") == Rational(1));
    CHECK(eval_q(kTheta222) == Rational(-3));
    CHECK(eval_q("colors 1 1 2\ncup 1 @0\nsplit 1 2 3 @1\nmerge 2 3 1 @1\ncap @0\n") ==
          Rational(3));
    // an id slice changes nothing
    CHECK(eval_q("colors 2\nid\ncup 1 @0\nid\ncap @0\n") == delta_n(2));
    // two circles multiply
    CHECK(eval_q("colors 1 2\ncup 1 @0\ncup 2 @2\ncap @2\ncap @0\n") ==
          delta_n(1) * delta_n(2));
}

TEST_CASE("cabled crossings: involution and slide past caps") {
    // crossing twice between the split and the merge is invisible
    const char* r2 =
        "colors 1 1 2\n"
        "cup 1 @0\n"
        "split 1 2 3 @1\n"
        "cross @1\n"
        "cross @1\n"
        "merge 2 3 1 @1\n"
        "cap @0\n";
    CHECK(eval_q(r2) == Rational(3));

    // a crossed immersion of theta: route one leg around with a crossing,
    // flipping one vertex; theta is symmetric so the value is unchanged
    const char* crossed =
        "colors 1 1 2\n"
        "cup 1 @0\n"
        "split 1 2 3 @1\n"
        "cross @0\n"
        "cross @1\n"
        "merge 2 3 1 @0\n"
        "cap @0\n";
    CHECK(eval_q(crossed) == Rational(3));

    // crossing a strand over a circle changes nothing
    const char* over_circle =
        "colors 2 3\n"
        "cup 1 @0\n"
        "cup 2 @1\n"
        "cross @1\n"
        "cross @1\n"
        "cap @1\n"
        "cap @0\n";
    CHECK(eval_q(over_circle) == delta_n(2) * delta_n(3));
}

TEST_CASE("circles through the planarizer") {
    for (unsigned n = 0; n <= 6; ++n) CHECK(eval_q(circle_net(n)) == delta_n(n));
    for (std::uint32_t p : {5u, 7u, 11u}) {
        // circle colored p-2 evaluates to 1 mod p
        CHECK(eval_p(circle_net(p - 2), p).v == 1);
        CHECK_THROWS_AS(eval_p(circle_net(p - 1), p), ColorOutOfRange);
    }
}

TEST_CASE("theta through the planarizer") {
    CHECK(eval_q(theta_net(2, 2, 2)) == Rational(-3));
    CHECK(eval_q(theta_net(1, 1, 2)) == Rational(3));
    CHECK(eval_q(theta_net(3, 3, 2)) == Rational(10, 3));
    CHECK_THROWS_AS(eval_q(theta_net(1, 1, 1)), NotAdmissible);

    // a 0-colored edge collapses the theta to a circle
    for (unsigned j = 0; j <= 5; ++j) CHECK(eval_q(theta_net(0, j, j)) == delta_n(j));

    // full closed-form sweep
    for (unsigned i = 0; i <= 6; ++i)
        for (unsigned j = 0; j <= 6; ++j)
            for (unsigned k = 0; k <= 6; ++k) {
                if (!admissible(i, j, k)) continue;
                CHECK(eval_q(theta_net(i, j, k)) == theta_closed_form(i, j, k));
            }
}

TEST_CASE("characteristic p agrees with the reduced characteristic 0 value") {
    CHECK(eval_p(theta_net(1, 1, 2), 5).v == 3); // psi_5(3)
    for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
        FpField F(p);
        for (unsigned i = 0; i <= 6; ++i)
            for (unsigned j = 0; j <= 6; ++j)
                for (unsigned k = 0; k <= 6; ++k) {
                    if (!admissible(i, j, k) || !p_admissible(i, j, k, p)) continue;
                    CHECK(eval_p(theta_net(i, j, k), p) ==
                          F.from_rational(eval_q(theta_net(i, j, k))));
                }
    }
    // not p-admissible vertices are rejected
    CHECK_THROWS_AS(eval_p(theta_net(3, 3, 2), 5), NotPAdmissible);
    CHECK_THROWS_AS(eval_p(theta_net(4, 4, 4), 7), NotPAdmissible);
}

TEST_CASE("immersion independence") {
    // different seeds lay the same net out differently; values agree
    const Rational t = eval_q(theta_net(2, 2, 2));
    for (unsigned seed = 1; seed <= 4; ++seed)
        CHECK(eval_q(theta_net(2, 2, 2), seed) == t);

    const std::array<unsigned, 6> all2 = {2, 2, 2, 2, 2, 2};
    const Rational tet = eval_q(tetrahedron_net(all2));
    bool movies_differ = false;
    const std::string base = movie_str(planarize(tetrahedron_net(all2), 0));
    for (unsigned seed = 1; seed <= 4; ++seed) {
        if (movie_str(planarize(tetrahedron_net(all2), seed)) != base) movies_differ = true;
        CHECK(eval_q(tetrahedron_net(all2), seed) == tet);
    }
    CHECK(movies_differ);

    const std::array<unsigned, 6> mixed = {2, 1, 1, 1, 1, 2};
    const Rational tet2 = eval_q(tetrahedron_net(mixed));
    for (unsigned seed = 1; seed <= 4; ++seed)
        CHECK(eval_q(tetrahedron_net(mixed), seed) == tet2);

    // characteristic p through two different immersions
    for (std::uint32_t p : {5u, 7u}) {
        const FpElem a = eval_p(tetrahedron_net(all2), p, 0);
        const FpElem b = eval_p(tetrahedron_net(all2), p, 3);
        CHECK(a == b);
        CHECK(a == FpField(p).from_rational(tet));
    }
}

TEST_CASE("tetrahedra with a 0-colored edge reduce to thetas") {
    // CD = 0 merges the C and D legs pairwise
    CHECK(eval_q(tetrahedron_net({2, 1, 1, 1, 1, 0})) == theta_closed_form(2, 1, 1));
    CHECK(eval_q(tetrahedron_net({2, 2, 2, 2, 2, 0})) == theta_closed_form(2, 2, 2));
    // AB = 0 fuses the A and B vertices
    CHECK(eval_q(tetrahedron_net({0, 1, 1, 1, 1, 2})) == theta_closed_form(1, 1, 2));
    CHECK(eval_q(tetrahedron_net({0, 2, 2, 2, 2, 2})) == theta_closed_form(2, 2, 2));
}
