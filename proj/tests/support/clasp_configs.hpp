#pragma once

#include "kvpoly/clasps.hpp"

// Configurations shared by the unit tests and the acceptance run.
namespace kvpoly::testing {

inline Signs rep(char c, int n) { return Signs(static_cast<size_t>(n), c); }

inline WebSum compose_clasps(int n) {
    Sheet s(clasp_frame(n), rep('+', n) + rep('-', n));
    int a = s.box(clasp(n), clasp_frame(n));
    int b = s.box(clasp(n), clasp_frame(n));
    s.connect(s.bds(LEFT), s.side(a, LEFT));
    s.connect(s.side(a, RIGHT), s.side(b, LEFT));
    s.connect(s.side(b, RIGHT), s.bds(RIGHT));
    return evaluate(s.finish());
}

// Two adjacent outputs (below the top `top` strands) merged into a sink.
inline WebSum clasp_turnback(int n, int top) {
    const int bottom = n - top - 2;
    Frame f = Frame::of(n - 1, 0, n, 0);
    Sheet s(f, rep('+', bottom) + "-" + rep('+', top) + rep('-', n));
    int c = s.box(clasp(n), clasp_frame(n));
    s.connect(s.bds(LEFT), s.side(c, LEFT));
    s.connect(s.side(c, RIGHT, 0, top), s.bds(RIGHT, 0, top));
    int k = s.sink();
    s.connect(s.bd(RIGHT, top), {k, 0});
    s.connect(s.at(c, RIGHT, top), {k, 1});
    s.connect(s.at(c, RIGHT, top + 1), {k, 2});
    s.connect(s.side(c, RIGHT, top + 2, bottom), s.bds(RIGHT, top + 1, bottom));
    return evaluate(s.finish());
}

inline WebSum double_clasp_cap(int n, int m) {
    Frame f = Frame::of(n + m - 2, 0, n + m, 0);
    Sheet s(f, rep('+', m - 1) + rep('-', n - 1) + rep('+', n) + rep('-', m));
    int c = s.box(double_clasp(n, m), double_clasp_frame(n, m));
    s.connect(s.bds(LEFT), s.side(c, LEFT));
    s.connect(s.side(c, RIGHT, 0, n - 1), s.bds(RIGHT, 0, n - 1));
    s.connect(s.at(c, RIGHT, n - 1), s.at(c, RIGHT, n));
    s.connect(s.side(c, RIGHT, n + 1, m - 1), s.bds(RIGHT, n - 1, m - 1));
    return evaluate(s.finish());
}

}  // namespace kvpoly::testing
