#pragma once

#include "kvpoly/clasps.hpp"
#include "kvpoly/identities.hpp"
#include "kvpoly/oracles.hpp"

#include <memory>

namespace kvpoly::testing {

// Source and sink joined by all three edges.
inline Assembly theta() {
    Builder b;
    int sc = b.source(), sk = b.sink();
    b.link({sc, 0}, {sk, 0});
    b.link({sc, 1}, {sk, 2});
    b.link({sc, 2}, {sk, 1});
    return b.finish();
}

// Source and sink joined by two edges, one leg each; boundary "+-".
inline WebSum bigon() {
    Builder b("+-");
    int x = b.source(), y = b.sink();
    b.link({x, 0}, b.bd(0));
    b.link(b.bd(1), {y, 0});
    b.link({x, 1}, {y, 2});
    b.link({x, 2}, {y, 1});
    return evaluate(b.finish());
}

inline WebSum strand() {
    Builder b("+-");
    b.link(b.bd(1), b.bd(0));
    return evaluate(b.finish());
}

// Four-cycle of alternating sources and sinks, one leg each; boundary "+-+-".
inline WebSum square() {
    Builder b("+-+-");
    int a = b.source(), k = b.sink(), c = b.source(), d = b.sink();
    b.link({a, 0}, b.bd(0));
    b.link(b.bd(1), {k, 0});
    b.link({c, 0}, b.bd(2));
    b.link(b.bd(3), {d, 0});
    b.link({a, 1}, {k, 2});
    b.link({c, 2}, {k, 1});
    b.link({c, 1}, {d, 2});
    b.link({a, 2}, {d, 1});
    return evaluate(b.finish());
}

// The two ways to join the legs of the square without vertices.
inline WebSum square_resolutions() {
    Builder p("+-+-"), q("+-+-");
    p.link(p.bd(1), p.bd(0));
    p.link(p.bd(3), p.bd(2));
    q.link(q.bd(3), q.bd(0));
    q.link(q.bd(1), q.bd(2));
    WebSum r = evaluate(p.finish());
    r += evaluate(q.finish());
    return r;
}

// Closures of four-corner webs (corners BR, TR, TL, BL of n points each).
inline std::vector<Port> corner(int h, int j, int n) {
    std::vector<Port> p;
    for (int k = 0; k < n; ++k) p.push_back({h, j * n + k});
    return p;
}

inline void ribbon(Builder& b, const std::vector<Port>& x, const std::vector<Port>& y) {
    for (size_t p = 0; p < x.size(); ++p) b.connect(x[p], y[x.size() - 1 - p]);
}

// Right corners joined to each other, left corners likewise.
inline Scalar side_closure(const Assembly& web, int n) {
    Builder b;
    int h = b.inlined(web);
    ribbon(b, corner(h, 0, n), corner(h, 1, n));
    ribbon(b, corner(h, 2, n), corner(h, 3, n));
    return evaluate_closed(b.finish());
}

// Paired with a half-turned copy of diamond_web(n, j) placed to the right.
inline Scalar diamond_closure(const Assembly& web, int n, int j) {
    Builder b;
    int h = b.inlined(web);
    int o = b.box(std::make_shared<const WebSum>(rotated(evaluate(diamond_web(n, j)), 2 * n)));
    ribbon(b, corner(h, 1, n), corner(o, 2, n));
    ribbon(b, corner(h, 0, n), corner(o, 3, n));
    ribbon(b, corner(h, 2, n), corner(o, 1, n));
    ribbon(b, corner(o, 0, n), corner(h, 3, n));
    return evaluate_closed(b.finish());
}

// Both sides of the colored skein relation under one closure.
template <class Close>
bool skein_holds(int n, bool positive, Close close) {
    Scalar rhs;
    for (const auto& [k, c] : oracles::colored_skein_coeffs(n, positive ? 1 : -1)) rhs += c * close(diamond_web(n, k));
    return close(crossing_web(n, positive)) == rhs;
}

}  // namespace kvpoly::testing
