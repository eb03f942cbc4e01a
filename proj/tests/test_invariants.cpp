#include <doctest.h>

#include "kvpoly/clasps.hpp"
#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"
#include "kvpoly/oracles.hpp"

using namespace kvpoly;

namespace {

Scalar qi(int n) { return Scalar(quantum_int(n)); }

}  // namespace

TEST_CASE("unknot values") {
    CHECK(kv_oriented(unknot(), 2) == qi(3) * qi(4) / qi(2));
    CHECK(kv_oriented(unknot(), 2).str() == "1*v^-12 + 1*v^-6 + 2 + 1*v^6 + 1*v^12");
    CHECK(kv_oriented(unknot(), 4) == oracles::loop_value(4));
    CHECK(kv_singular(unknot(), 1) == qi(3));
    CHECK(kv_unoriented(unknot(false), 1) == qi(2) * qi(4));
    CHECK(kv_unoriented(unknot(false), 2) == qi(3) * qi(3) * qi(6) / qi(2));
}

TEST_CASE("unoriented twist closure matches the closed sum") {
    CHECK(kv_unoriented(twist_closure_unoriented(1, 2), 1) == oracles::st_unoriented(1, 1));
}

TEST_CASE("singular twist closures against the closed formula") {
    // The engine carries the value of the closed clasped loop that the
    // formula leaves out; the remaining factor matches exactly.
    for (int m = 1; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
            for (int l = 0; l <= 2; ++l) {
                CAPTURE(m);
                CAPTURE(k);
                CAPTURE(l);
                CHECK(kv_singular(twist_closure(k, l), m) == oracles::st_oriented(k, l, m) * oracles::loop_value(m));
            }
}

TEST_CASE("crossing next to a vertex scales by the twist coefficient") {
    Scalar base = kv_singular(twist_closure(1, 0), 1);
    CHECK(kv_singular(twist_closure(1, 1), 1) == base * oracles::vertex_crossing_coeff(1, -1));
    CHECK(kv_singular(twist_closure(1, 2), 1) == base * oracles::vertex_crossing_coeff(1, -1).pow(2));
}

TEST_CASE("distant union multiplies") {
    CHECK(kv_oriented(disjoint_union(unknot(), unknot()), 2) == oracles::loop_value(2) * oracles::loop_value(2));
    CHECK(kv_unoriented(disjoint_union(unknot(false), unknot(false)), 1) ==
          oracles::double_loop_value(1) * oracles::double_loop_value(1));
    GraphDiagram a = random_diagram(5, 3), b = random_diagram(6, 2);
    CHECK(kv_oriented(disjoint_union(a, b), 2) == kv_oriented(a, 2) * kv_oriented(b, 2));
    RandomOptions o;
    o.oriented = false;
    GraphDiagram c = random_diagram(5, 3, o), d = random_diagram(7, 2, o);
    CHECK(kv_unoriented(disjoint_union(c, d), 1) == kv_unoriented(c, 1) * kv_unoriented(d, 1));
}

TEST_CASE("alternating vertex agrees with the direct double clasp closure") {
    // one vertex (out, in, out, in) with each out joined to the next in
    GraphDiagram g = parse_diagram("V >a <a >b <b");
    REQUIRE(g.pattern(0) == VertexPattern::Alternating);
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        Sheet s(Frame::of(0, 0, 0, 0));
        int h = s.inlined(double_clasp_term(2 * n, 2 * n, n), corner_frame(2 * n));
        s.join(s.ccw(h, RIGHT, 0, 2 * n), s.ccw(h, RIGHT, 2 * n, 2 * n));
        s.join(s.ccw(h, LEFT, 0, 2 * n), s.ccw(h, LEFT, 2 * n, 2 * n));
        CHECK(kv_oriented(g, 2 * n) == evaluate_closed(s.finish()));
    }
}

TEST_CASE("orientation reversal") {
    for (uint64_t seed = 1; seed <= 4; ++seed) {
        GraphDiagram g = random_diagram(seed, 3);
        CHECK(kv_oriented(reversed(g), 2) == kv_oriented(g, 2));
    }
}

TEST_CASE("wrong inputs are rejected") {
    CHECK_THROWS_AS(kv_oriented(unknot(), 3), std::invalid_argument);
    CHECK_THROWS_AS(kv_oriented(twist_closure_unoriented(0, 1), 2), std::invalid_argument);
    CHECK_THROWS_AS(kv_unoriented(twist_closure(0, 1), 1), std::invalid_argument);
    CHECK_THROWS_AS(kv_singular(parse_diagram("V >a <a >b <b"), 1), std::invalid_argument);
}

TEST_CASE("writhe normalisation removes kink factors") {
    GraphDiagram g = parse_diagram("X+ <a >a >b <b");
    Scalar raw = kv_oriented(g, 2);
    CHECK(raw == oracles::loop_value(2) * oracles::clasp_curl_coeff(2, 1));
    CHECK(writhe_normalized(g, 2, raw) == oracles::loop_value(2));
}
