#include <doctest.h>

#include "kvpoly/webcore.hpp"
#include "support/local_configs.hpp"

using namespace kvpoly;
using kvpoly::testing::theta;

namespace {

Scalar qi(int n) { return Scalar(quantum_int(n)); }

Assembly kink(bool positive) {
    Builder b;
    int x = b.crossing(positive ? "-++-" : "--++");
    if (positive) {
        b.link({x, 1}, {x, 0});
        b.link({x, 2}, {x, 3});
    } else {
        b.link({x, 3}, {x, 0});
        b.link({x, 2}, {x, 1});
    }
    return b.finish();
}

// Two strands, the left one over both crossings; boundary "++--".
Assembly reidemeister2() {
    Builder b("++--");
    int x1 = b.crossing("-++-"), x2 = b.crossing("--++");
    b.link(b.bd(2), {x1, 3});
    b.link({x1, 1}, {x2, 1});
    b.link({x2, 3}, b.bd(1));
    b.link(b.bd(3), {x1, 0});
    b.link({x1, 2}, {x2, 0});
    b.link({x2, 2}, b.bd(0));
    return b.finish();
}

WebSum two_strands() {
    Builder b("++--");
    b.link(b.bd(2), b.bd(1));
    b.link(b.bd(3), b.bd(0));
    return reduce_in_disk(b.finish().diagram);
}

}  // namespace

TEST_CASE("theta web evaluates to [2][3]") {
    CHECK(evaluate_closed(theta()) == qi(2) * qi(3));
}

TEST_CASE("bigon and square reductions") {
    CHECK(testing::bigon() == testing::strand() * qi(2));
    CHECK(testing::square() == testing::square_resolutions());
    CHECK(local::clasp_loop(1) == qi(3));
}

TEST_CASE("kinks pick up v^{+-8} times the loop value") {
    CHECK(evaluate_closed(kink(true)) == Scalar::v_pow(8) * qi(3));
    CHECK(evaluate_closed(kink(false)) == Scalar::v_pow(-8) * qi(3));
}

TEST_CASE("crossing expansions have the expected shape") {
    for (bool pos : {true, false}) {
        auto w = crossing_expansion(pos);
        CHECK(w->signs == (pos ? "-++-" : "--++"));
        REQUIRE(w->terms.size() == 2);
        for (const auto& [c, d] : w->terms) {
            CHECK(d.boundary_signs() == w->signs);
            CHECK(is_basis_web(d));
        }
    }
}

TEST_CASE("second Reidemeister move is the identity in the disk") {
    WebSum r = evaluate(reidemeister2());
    CHECK(r == two_strands());
    REQUIRE(r.terms.size() == 1);
    CHECK(r.terms[0].first == Scalar(1));
}

TEST_CASE("builder rejects non-planar wiring") {
    Builder b;
    int sc = b.source(), sk = b.sink();
    b.link({sc, 0}, {sk, 0});
    b.link({sc, 1}, {sk, 1});
    b.link({sc, 2}, {sk, 2});
    CHECK_THROWS_AS(b.finish(), std::logic_error);
}

TEST_CASE("randomized reduction agrees with the worklist reducer") {
    std::mt19937_64 rng(7);
    Assembly k = kink(true);
    for (int i = 0; i < 5; ++i) CHECK(reduce_closed_randomized(k.diagram, rng) == Scalar::v_pow(8) * qi(3));
    CHECK(reduce_closed_randomized(theta().diagram, rng) == qi(2) * qi(3));
}

TEST_CASE("symmetries preserve closed values up to the expected change") {
    Diagram k = kink(true).diagram;
    CHECK(reduce_closed(mirrored(k)) == Scalar::v_pow(-8) * qi(3));
    CHECK(reduce_closed(reversed(k)) == Scalar::v_pow(8) * qi(3));
}
