#include <doctest.h>

#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"

#include <sstream>

using namespace kvpoly;

namespace {

// First site of the given kind and direction whose result is isomorphic to
// `target`.
bool undoes(const GraphDiagram& g, MoveKind kind, MoveDirection dir, const GraphDiagram& target) {
    // the a/b label of a turned vertex depends on which leg names the site
    auto same = [&](MoveKind k) {
        if (kind == MoveKind::RV_a || kind == MoveKind::RV_b) return k == MoveKind::RV_a || k == MoveKind::RV_b;
        return k == kind;
    };
    for (const auto& s : enumerate_move_sites(g))
        if (same(s.move) && s.direction == dir && isomorphic(apply_move(g, s), target)) return true;
    return false;
}

GraphDiagram sample(uint64_t seed, int size, bool oriented) {
    RandomOptions o;
    o.oriented = oriented;
    return random_diagram(seed, size, o);
}

}  // namespace

TEST_CASE("random diagrams") {
    GraphDiagram u = random_diagram(1, 0);
    CHECK(u.size() == 0);
    CHECK(u.free_loops == 1);
    for (uint64_t seed = 1; seed <= 30; ++seed) {
        GraphDiagram g = sample(seed, 6, true);
        CHECK(g.size() == 6);
        CHECK_NOTHROW(g.validate());
        CHECK(serialize(g) == serialize(sample(seed, 6, true)));
    }
    RandomOptions o;
    o.adjacent_only = true;
    o.vertex_fraction = 1.0;
    GraphDiagram s = random_diagram(3, 5, o);
    for (int v = 0; v < s.size(); ++v) CHECK(s.pattern(v) == VertexPattern::Adjacent);
}

TEST_CASE("RII then its undo gives back the diagram") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        GraphDiagram g = sample(seed, 3, seed % 2);
        int tried = 0;
        for (const auto& s : enumerate_move_sites(g)) {
            if (s.move != MoveKind::RII || s.direction != MoveDirection::Apply || tried >= 6) continue;
            ++tried;
            GraphDiagram h = apply_move(g, s);
            CHECK(h.size() == g.size() + 2);
            CHECK(undoes(h, MoveKind::RII, MoveDirection::Undo, g));
        }
        CHECK(tried > 0);
    }
}

TEST_CASE("RI adds a pair of opposite kinks") {
    GraphDiagram g = twist_closure(1, 1);
    for (int option = 0; option < 4; ++option) {
        GraphDiagram h = apply_move(g, {MoveKind::RI, MoveDirection::Apply, {0}, option});
        CHECK(h.size() == g.size() + 2);
        CHECK(h.writhe() == g.writhe());
        CHECK(undoes(h, MoveKind::RI, MoveDirection::Undo, g));
    }
}

TEST_CASE("RV turns a vertex over with two crossings") {
    GraphDiagram g = twist_closure(2, 1);
    for (MoveKind k : {MoveKind::RV_a, MoveKind::RV_b})
        for (int s = 0; s < 2; ++s) {
            GraphDiagram h = apply_move(g, {k, MoveDirection::Apply, {s}, 0});
            CHECK(h.size() == g.size() + 2);
            CHECK(h.vertex_count() == g.vertex_count());
            CHECK(undoes(h, k, MoveDirection::Undo, g));
        }
}

TEST_CASE("RIII and RIV are involutions") {
    int riii = 0, riv = 0;
    for (uint64_t seed = 1; seed <= 40; ++seed) {
        GraphDiagram g = sample(seed, 5, true);
        for (const auto& s : enumerate_move_sites(g)) {
            bool tri = s.move == MoveKind::RIII;
            bool vert = s.move == MoveKind::RIV_a || s.move == MoveKind::RIV_b;
            if (!tri && !vert) continue;
            GraphDiagram h = apply_move(g, s);
            if (tri) CHECK_FALSE(isomorphic(g, h));
            CHECK(undoes(h, s.move, MoveDirection::Apply, g));
            (tri ? riii : riv)++;
        }
    }
    CHECK(riii > 0);
    CHECK(riv > 0);
}

TEST_CASE("sites that do not match are rejected") {
    GraphDiagram g = twist_closure(1, 1);
    CHECK_THROWS_AS(apply_move(g, {MoveKind::RII, MoveDirection::Undo, {0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(g, {MoveKind::RV_a, MoveDirection::Apply, {4}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(g, {MoveKind::RIII, MoveDirection::Apply, {0}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_move(g, {MoveKind::RI, MoveDirection::Undo, {0}, 0}), std::invalid_argument);
}

TEST_CASE("two-node twist closure has no triangle") {
    // every face of the closure of a vertex and a crossing has two sides
    int riv = 0;
    for (const auto& s : enumerate_move_sites(twist_closure(1, 1)))
        riv += s.move == MoveKind::RIV_a || s.move == MoveKind::RIV_b;
    CHECK(riv == 0);
}

TEST_CASE("invariants are unchanged by every move") {
    for (uint64_t seed = 1; seed <= 3; ++seed)
        for (bool oriented : {true, false}) {
            GraphDiagram g = sample(seed, 3, oriented);
            CAPTURE(serialize(g));
            Scalar base = oriented ? kv_oriented(g, 2) : kv_unoriented(g, 1);
            for (const auto& s : enumerate_move_sites(g)) {
                CAPTURE(s.str());
                GraphDiagram h = apply_move(g, s);
                CHECK((oriented ? kv_oriented(h, 2) : kv_unoriented(h, 1)) == base);
            }
        }
}

TEST_CASE("changing a crossing is detected") {
    // negative control: the invariant does see over and under
    std::string text = serialize(twist_closure(0, 3));
    std::istringstream lines(text);
    std::string first, rest, line;
    std::getline(lines, first);
    while (std::getline(lines, line)) rest += line + "\n";
    std::istringstream toks(first);
    std::string tag, a, b, c, d;
    toks >> tag >> a >> b >> c >> d;
    GraphDiagram changed = parse_diagram("X " + b + " " + c + " " + d + " " + a + "\n" + rest);
    CHECK(changed.writhe() == 1);
    CHECK_FALSE(kv_oriented(changed, 2) == kv_oriented(twist_closure(0, 3), 2));
}
