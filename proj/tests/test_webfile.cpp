#include <doctest.h>

#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"
#include "kvpoly/webfile.hpp"

#include <random>

using namespace kvpoly;

namespace {

Scalar qi(int n) { return Scalar(quantum_int(n)); }

}  // namespace

TEST_CASE("web files") {
    CHECK(evaluate_closed(parse_web("")) == Scalar(1));
    CHECK(evaluate_closed(parse_web("O\nO\n")) == qi(3) * qi(3));
    CHECK(evaluate_closed(parse_web("T3s >a >b >c\nT3k <a <c <b\n")) == qi(2) * qi(3));
    CHECK(evaluate_closed(parse_web("X+ <a >a >b <b\n")) == Scalar::v_pow(8) * qi(3));
    CHECK(evaluate_closed(parse_web("X <a >a >b <b  # untagged\n")) == Scalar::v_pow(8) * qi(3));
    CHECK(evaluate_closed(parse_web("X- <a <b >b >a\n")) == Scalar::v_pow(-8) * qi(3));
    // the same crossing listed from the other end of the under strand
    CHECK(evaluate_closed(parse_web("X+ >b <b <a >a\n")) == Scalar::v_pow(8) * qi(3));
}

TEST_CASE("web file errors") {
    CHECK_THROWS_AS(parse_web("T3s >a >b\n"), ParseError);
    CHECK_THROWS_AS(parse_web("T3s >a >b <c\n"), ParseError);
    CHECK_THROWS_AS(parse_web("T3s >a >b >c\nT3k <a <b <d\n"), ParseError);
    CHECK_THROWS_AS(parse_web("X- <a >a >b <b\n"), ParseError);
    CHECK_THROWS_AS(parse_web("Q >a <a\n"), ParseError);
    try {
        parse_web("T3s >a >b >c\n\nT3k <a <b <c <d\n");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("random closed webs reduce the same in any order") {
    std::mt19937_64 rng(11);
    for (uint64_t seed = 1; seed <= 20; ++seed) {
        CAPTURE(seed);
        Diagram d = random_closed_web(seed, 1 + static_cast<int>(seed % 6));
        const Scalar ref = reduce_closed(d);
        for (int k = 0; k < 3; ++k) CHECK(reduce_closed_randomized(d, rng) == ref);
    }
}

TEST_CASE("graph webs agree with the singular invariant at color one") {
    // at color one the full ladder of a vertex is the H web
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        CAPTURE(seed);
        RandomOptions o;
        o.adjacent_only = true;
        GraphDiagram g = random_diagram(seed, 4, o);
        CHECK(reduce_closed(web_of_graph(g)) == evaluate_closed(oriented_web(g, 1, 1, true)));
    }
}
