#include <doctest.h>

#include "kvpoly/clasps.hpp"

using namespace kvpoly;

namespace {

Signs rep(char c, int n) { return Signs(static_cast<size_t>(n), c); }

// Two vertices facing each other across their double lines.
WebSum joined(int n, int i, const WebSumPtr& left, const WebSumPtr& right, const Signs& sg) {
    Sheet s(Frame::of(2 * n, 0, 2 * n, 0), sg);
    Frame f = colored_vertex_frame(n, i);
    int a = s.box(left, f, 0);
    int b = s.box(right, f, 2);
    s.join(s.ccw(a, LEFT), s.bd_ccw(LEFT));
    s.join(s.ccw(b, RIGHT), s.bd_ccw(RIGHT));
    if (i > 0) s.join(s.ccw(a, RIGHT), s.ccw(b, LEFT));
    return evaluate(s.finish());
}

}  // namespace

TEST_CASE("vertex with a zero double line is a bent clasp") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        CHECK(*white_vertex(n, 0) == *clasp(n));
        CHECK(*black_vertex(n, 0) == rotated(*clasp(n), n));
    }
}

TEST_CASE("white vertex with a full double line is the double clasp") {
    for (int n = 1; n <= 2; ++n) CHECK(*white_vertex(n, n) == *double_clasp(n, n));
}

TEST_CASE("bar reverses the vertex") {
    CHECK(*white_vertex(2, 1, true) == reversed(*white_vertex(2, 1)));
    CHECK(*black_vertex(2, 1, true) == reversed(*black_vertex(2, 1)));
}

TEST_CASE("pairs of vertices change color") {
    for (int n = 1; n <= 2; ++n)
        for (int i = 0; i <= n; ++i) {
            CAPTURE(n);
            CAPTURE(i);
            Signs up = rep('+', n) + rep('-', n) + rep('+', n) + rep('-', n);
            Signs down = rep('-', n) + rep('+', n) + rep('-', n) + rep('+', n);
            CHECK(joined(n, i, black_vertex(n, i, true), black_vertex(n, i, true), up) ==
                  joined(n, i, white_vertex(n, i), white_vertex(n, i), up));
            CHECK(joined(n, i, black_vertex(n, i), black_vertex(n, i), down) ==
                  joined(n, i, white_vertex(n, i, true), white_vertex(n, i, true), down));
        }
}

TEST_CASE("vertex webs are cached") {
    auto a = white_vertex(2, 1);
    auto b = white_vertex(2, 1);
    CHECK(a.get() == b.get());
    CHECK(unoriented_vertex_web(1).get() == unoriented_vertex_web(1).get());
}

TEST_CASE("unoriented node webs close up consistently") {
    // A single vertex with its legs joined pairwise around the outside is
    // the same closed web whichever adjacent pairs are chosen, by symmetry.
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        const int B = 2 * n;
        auto close = [&](int shift) {
            Builder b("");
            int v = b.box(unoriented_vertex_web(n));
            for (int c = 0; c < 4; c += 2)
                for (int p = 0; p < B; ++p) {
                    int x = (c + shift) % 4, y = (c + shift + 1) % 4;
                    b.connect({v, x * B + p}, {v, y * B + B - 1 - p});
                }
            return evaluate(b.finish());
        };
        CHECK(close(0) == close(1));
    }
}
