#include <doctest.h>

#include "kvpoly/graph.hpp"
#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"

#include <string>

using namespace kvpoly;

namespace {

std::string parse_error(const std::string& text) {
    try {
        parse_diagram(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("single vertex with two loops") {
    // loops on opposite slots cannot be drawn without a crossing
    CHECK_THROWS_AS(parse_diagram("V >a <b <a >b\n"), ParseError);
    GraphDiagram g = parse_diagram("V >a >b <b <a\n");
    CHECK(g.oriented);
    REQUIRE(g.size() == 1);
    CHECK(g.kinds[0] == NodeKind::Vertex);
    // out, in, in, out: the two ins are adjacent
    CHECK(g.pattern(0) == VertexPattern::Adjacent);
    CHECK(parse_diagram("V >a <a >b <b").pattern(0) == VertexPattern::Alternating);
}

TEST_CASE("empty file is the empty diagram") {
    GraphDiagram g = parse_diagram("# nothing here\n\n");
    CHECK(g.size() == 0);
    CHECK(g.free_loops == 0);
    CHECK(kv_oriented(g, 2) == Scalar(1));
}

TEST_CASE("parse errors name the problem and the line") {
    std::string e = parse_error("V >a <b <c >b\n");
    CHECK(e.find("'a'") != std::string::npos);
    CHECK(e.find("line 1") != std::string::npos);
    CHECK(parse_error("X a b a b").find("planar") != std::string::npos);
    CHECK(parse_error("V a b c").find("4 darts") != std::string::npos);
    CHECK(parse_error("V >a <a b c\n").find("mixes") != std::string::npos);
    CHECK(parse_error("V >a >a >b <b").find("once as >a") != std::string::npos);
    CHECK(parse_error("\nQ a b c d").find("line 2") != std::string::npos);
    CHECK(parse_error("V >a >b <b <a").empty());
}

TEST_CASE("crossing tags must agree with the orientation") {
    // under strand in at position 1, over strand leaving at position 2
    CHECK(parse_error("X+ <a >a >b <b").empty());
    CHECK(parse_error("X- <a >a >b <b").find("positive") != std::string::npos);
    CHECK(parse_error("X- <a <b >b >a").empty());
    CHECK(parse_error("X+ <a >b <b >a").find("straight") != std::string::npos);
    GraphDiagram g = parse_diagram("X+ <a >a >b <b");
    CHECK(g.crossing_positive(0));
    CHECK(g.writhe() == 1);
}

TEST_CASE("unoriented files ignore crossing tags") {
    GraphDiagram g = parse_diagram("V a b c d\nX+ e b a f\nX- c e f d\n");
    CHECK_FALSE(g.oriented);
    CHECK(g.size() == 3);
    CHECK(serialize(g).find("X+") == std::string::npos);
    CHECK(serialize(g).find("X-") == std::string::npos);
}

TEST_CASE("free loops") {
    GraphDiagram g = parse_diagram("O\nO\n");
    CHECK(g.free_loops == 2);
    CHECK(serialize(g) == "O\nO\n");
}

TEST_CASE("serialize and parse round trip") {
    for (uint64_t seed = 1; seed <= 20; ++seed)
        for (bool oriented : {true, false}) {
            RandomOptions o;
            o.oriented = oriented;
            GraphDiagram g = random_diagram(seed, 1 + static_cast<int>(seed % 6), o);
            GraphDiagram h = parse_diagram(serialize(g));
            CAPTURE(serialize(g));
            CHECK(isomorphic(g, h));
            CHECK(serialize(h) == serialize(parse_diagram(serialize(h))));
        }
}

TEST_CASE("isomorphism distinguishes layers and directions") {
    GraphDiagram g = twist_closure(1, 2);
    CHECK(isomorphic(g, parse_diagram(serialize(g))));
    CHECK_FALSE(isomorphic(parse_diagram("X+ <a >a >b <b"), parse_diagram("X- <a <b >b >a")));
    CHECK(isomorphic(parse_diagram("X+ <a >a >b <b"), parse_diagram("X+ >b <b <a >a")));
    CHECK_FALSE(isomorphic(twist_closure(1, 2), twist_closure(2, 1)));
    CHECK_FALSE(isomorphic(twist_closure(0, 3), unoriented(twist_closure(0, 3))));
}

TEST_CASE("twist closures are valid") {
    for (int k = 0; k <= 3; ++k)
        for (int l = 0; l <= 3; ++l) {
            CHECK_NOTHROW(twist_closure(k, l).validate());
            CHECK_NOTHROW(twist_closure_unoriented(k, l).validate());
        }
    GraphDiagram g = twist_closure(0, 3);
    CHECK(g.writhe() == 3);
    CHECK(twist_closure(2, 0).pattern(0) == VertexPattern::Adjacent);
}
