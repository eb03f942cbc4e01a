#include "kvpoly/identities.hpp"

#include "kvpoly/oracles.hpp"

#include <stdexcept>

namespace kvpoly::local {

namespace {

Signs rep(char c, int n) { return Signs(static_cast<size_t>(n), c); }

Ports slice(const Ports& p, int from, int count) { return Ports(p.begin() + from, p.begin() + from + count); }

int clasp_box(Sheet& s, int n, int rot) { return s.box(clasp(n), clasp_frame(n), rot); }

}  // namespace

WebSum clasp_with_crossing(int n, int k, bool top_over) {
    if (k < 0 || k > n) throw std::invalid_argument("clasp_with_crossing: bad k");
    Sheet s(clasp_frame(n), rep('+', n) + rep('-', n));
    int c = clasp_box(s, n, 0);
    s.join(s.ccw(c, LEFT), s.bd_ccw(LEFT));
    // grid: the top group enters on the left and leaves on the right side,
    // the bottom group enters at the bottom and leaves at the top
    int g = s.inlined(cable_crossing(n - k, k, true, true, top_over), cable_crossing_frame(n - k, k));
    Ports out = s.ccw(c, RIGHT);  // bottom to top
    s.join(s.ccw(g, LEFT), slice(out, k, n - k));
    s.join(s.ccw(g, BOTTOM), slice(out, 0, k));
    Ports bd = s.bd_ccw(RIGHT);  // top to bottom
    s.join(s.ccw(g, TOP), slice(bd, 0, k));
    s.join(s.ccw(g, RIGHT), slice(bd, k, n - k));
    return evaluate(s.finish());
}

WebSum clasp_partial_closure(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("clasp_partial_closure: bad k");
    const int r = n - k;
    Sheet s(clasp_frame(r), rep('+', r) + rep('-', r));
    int c = clasp_box(s, n, 0);
    Ports in = s.ccw(c, LEFT), out = s.ccw(c, RIGHT);
    s.join(slice(in, 0, r), s.bd_ccw(LEFT));
    s.join(slice(out, k, r), s.bd_ccw(RIGHT));
    s.join(slice(out, 0, k), slice(in, r, k));
    return evaluate(s.finish());
}

WebSum clasp_with_curl(int n, bool positive) {
    Sheet s(clasp_frame(n), rep('+', n) + rep('-', n));
    int c = clasp_box(s, n, 0);
    s.join(s.ccw(c, LEFT), s.bd_ccw(LEFT));
    int g = s.inlined(cable_crossing(n, n, true, true, positive), cable_crossing_frame(n, n));
    s.join(s.ccw(g, LEFT), s.ccw(c, RIGHT));
    s.join(s.ccw(g, RIGHT), s.ccw(g, BOTTOM));
    s.join(s.ccw(g, TOP), s.bd_ccw(RIGHT));
    return evaluate(s.finish());
}

namespace {

// Double clasp on the left, `middle` (corner layout, unclasped) in the
// centre, single clasps on the two right groups.
WebSum double_clasp_then(int n, const Assembly& middle) {
    Sheet s(corner_frame(n), corner_signs(n));
    int dc = s.box(double_clasp(n, n), double_clasp_frame(n, n));
    s.join(s.ccw(dc, LEFT), s.bd_ccw(LEFT));
    int x = s.inlined(middle, corner_frame(n));
    s.join(s.ccw(x, LEFT), s.ccw(dc, RIGHT));
    Ports right = s.ccw(x, RIGHT);  // bottom group first
    int tr = clasp_box(s, n, 0), br = clasp_box(s, n, 2);
    s.join(s.ccw(tr, LEFT), slice(right, n, n));
    s.join(s.ccw(br, LEFT), slice(right, 0, n));
    Ports bd = s.bd_ccw(RIGHT);
    s.join(s.ccw(tr, RIGHT), slice(bd, 0, n));
    s.join(s.ccw(br, RIGHT), slice(bd, n, n));
    return evaluate(s.finish());
}

WebSum triangle_then(int n, const Assembly* grid) {
    Sheet s(Frame::of(2 * n, 0, n, 0), rep('+', 3 * n));
    int t = s.box(trivalent_y(n, true), triangle_frame(n));
    int lc = clasp_box(s, n, 2);
    s.join(s.ccw(lc, RIGHT), s.ccw(t, LEFT));
    s.join(s.ccw(lc, LEFT), s.bd_ccw(LEFT));
    int uc = clasp_box(s, n, 0), dc = clasp_box(s, n, 0);
    if (grid) {
        int g = s.inlined(*grid, cable_crossing_frame(n, n));
        s.join(s.ccw(g, LEFT), s.ccw(t, RIGHT));
        s.join(s.ccw(g, BOTTOM), s.ccw(t, BOTTOM));
        s.join(s.ccw(uc, LEFT), s.ccw(g, TOP));
        s.join(s.ccw(dc, LEFT), s.ccw(g, RIGHT));
    } else {
        s.join(s.ccw(uc, LEFT), s.ccw(t, RIGHT));
        s.join(s.ccw(dc, LEFT), s.ccw(t, BOTTOM));
    }
    Ports bd = s.bd_ccw(RIGHT);
    s.join(s.ccw(uc, RIGHT), slice(bd, 0, n));
    s.join(s.ccw(dc, RIGHT), slice(bd, n, n));
    return evaluate(s.finish());
}

}  // namespace

WebSum double_clasp_with_crossing(int n, bool positive) {
    return double_clasp_then(n, crossing_web(n, positive, false));
}

WebSum double_clasp_with_diamond(int n) { return double_clasp_then(n, diamond_web(n, n, false)); }

WebSum triangle_with_crossing(int n, bool positive) {
    // the upper leg runs down across the lower one; over when positive
    Assembly g = cable_crossing(n, n, true, true, positive);
    return triangle_then(n, &g);
}

WebSum triangle_with_legs(int n) { return triangle_then(n, nullptr); }

WebSum skein_expansion(int n, bool positive) {
    WebSum rhs;
    for (const auto& [k, c] : oracles::colored_skein_coeffs(n, positive ? 1 : -1)) {
        Assembly a = diamond_web(n, k);
        a.factor *= c;
        rhs += evaluate(a);
    }
    return rhs;
}

WebSum triangle_bubble(int n) {
    Sheet s(clasp_frame(n), rep('+', n) + rep('-', n));
    int lc = clasp_box(s, n, 0), rc = clasp_box(s, n, 0);
    int up = clasp_box(s, n, 2), lo = clasp_box(s, n, 2);
    int lt = s.box(trivalent_y(n, false), triangle_frame(n));
    int rt = s.box(trivalent_y(n, true), triangle_frame(n));
    s.join(s.ccw(lc, LEFT), s.bd_ccw(LEFT));
    s.join(s.ccw(lc, RIGHT), s.ccw(lt, LEFT));
    s.join(s.ccw(up, LEFT), s.ccw(lt, RIGHT));
    s.join(s.ccw(lo, LEFT), s.ccw(lt, BOTTOM));
    s.join(s.ccw(up, RIGHT), s.ccw(rt, LEFT));
    s.join(s.ccw(lo, RIGHT), s.ccw(rt, BOTTOM));
    s.join(s.ccw(rc, LEFT), s.ccw(rt, RIGHT));
    s.join(s.ccw(rc, RIGHT), s.bd_ccw(RIGHT));
    return evaluate(s.finish());
}

WebSum triangle_square(int n) {
    Sheet s(double_clasp_frame(n, n), double_clasp_signs(n, n));
    int tl = clasp_box(s, n, 2), bl = clasp_box(s, n, 0), tr = clasp_box(s, n, 2), br = clasp_box(s, n, 0);
    int vl = clasp_box(s, n, 3), vr = clasp_box(s, n, 1), mt = clasp_box(s, n, 0), mb = clasp_box(s, n, 2);
    int ua = s.box(trivalent_y(n, true), triangle_frame(n));
    int lb = s.box(trivalent_y(n, false), triangle_frame(n));
    int ru = s.box(trivalent_y(n, false), triangle_frame(n));
    int rd = s.box(trivalent_y(n, true), triangle_frame(n));
    s.join(s.ccw(tl, LEFT), s.bd_ccw(LEFT, 0, n));
    s.join(s.ccw(bl, LEFT), s.bd_ccw(LEFT, n, n));
    s.join(s.ccw(tr, RIGHT), s.bd_ccw(RIGHT, 0, n));
    s.join(s.ccw(br, RIGHT), s.bd_ccw(RIGHT, n, n));
    s.join(s.ccw(tl, RIGHT), s.ccw(ua, LEFT));
    s.join(s.ccw(ua, RIGHT), s.ccw(mt, LEFT));
    s.join(s.ccw(ua, BOTTOM), s.ccw(vl, TOP));
    s.join(s.ccw(vl, BOTTOM), s.ccw(lb, LEFT));
    s.join(s.ccw(lb, RIGHT), s.ccw(mb, LEFT));
    s.join(s.ccw(lb, BOTTOM), s.ccw(bl, RIGHT));
    s.join(s.ccw(mt, RIGHT), s.ccw(ru, LEFT));
    s.join(s.ccw(ru, RIGHT), s.ccw(tr, LEFT));
    s.join(s.ccw(ru, BOTTOM), s.ccw(vr, TOP));
    s.join(s.ccw(vr, BOTTOM), s.ccw(rd, RIGHT));
    s.join(s.ccw(rd, LEFT), s.ccw(mb, RIGHT));
    s.join(s.ccw(rd, BOTTOM), s.ccw(br, LEFT));
    return evaluate(s.finish());
}

WebSum triangle_square_expansion(int n) {
    WebSum rhs;
    for (int k = 0; k <= n; ++k) rhs += evaluate(double_clasp_term(n, n, k));
    return rhs;
}

Scalar clasp_loop(int n) {
    Sheet s(Frame{});
    int h = clasp_box(s, n, 0);
    s.join(s.ccw(h, RIGHT), s.ccw(h, LEFT));
    return evaluate_closed(s.finish());
}

Scalar double_clasp_loop(int n) {
    Sheet s(Frame{});
    int h = s.box(double_clasp(n, n), double_clasp_frame(n, n));
    s.join(s.ccw(h, RIGHT), s.ccw(h, LEFT));
    return evaluate_closed(s.finish());
}

WebSum full_twists(int n, int l) {
    Sheet s(double_clasp_frame(n, n), double_clasp_signs(n, n));
    int tl = clasp_box(s, n, 2), bl = clasp_box(s, n, 0), tr = clasp_box(s, n, 2), br = clasp_box(s, n, 0);
    s.join(s.ccw(tl, LEFT), s.bd_ccw(LEFT, 0, n));
    s.join(s.ccw(bl, LEFT), s.bd_ccw(LEFT, n, n));
    s.join(s.ccw(tr, RIGHT), s.bd_ccw(RIGHT, 0, n));
    s.join(s.ccw(br, RIGHT), s.bd_ccw(RIGHT, n, n));
    // a half twist is a negative crossing of the two cables; every second
    // one is placed upside down
    Ports open = concat(s.ccw(bl, RIGHT), s.ccw(tl, RIGHT));
    for (int h = 0; h < 2 * l; ++h) {
        int x = s.inlined(crossing_web(n, false, false), corner_frame(n), (h % 2) * 2);
        s.join(s.ccw(x, LEFT), open);
        open = s.ccw(x, RIGHT);
    }
    Ports right = concat(s.ccw(tr, LEFT), s.ccw(br, LEFT));
    s.join(open, right);
    return evaluate(s.finish());
}

WebSum twist_basis_term(int n, int k) { return evaluate(double_clasp_term(n, n, n - k)); }

namespace {

void check_bubble(int n, int m, int k, int l) {
    if (k < 0 || l < 0 || k > std::min(n, m) || l > std::min(n, m))
        throw std::invalid_argument("bubble: need 0 <= k, l <= min(n, m)");
}

}  // namespace

WebSum bubble(int n, int m, int k, int l) {
    check_bubble(n, m, k, l);
    const int tl = n - k, tr = n - l, bl = m - k, br = m - l;
    Sheet s(Frame::of(tr + br, 0, tl + bl, 0), rep('+', br) + rep('-', tr) + rep('+', tl) + rep('-', bl));
    Ports ptl, ptr, pbl, pbr;
    auto corner = [&](Side outer, int from, int size, int rot) {
        if (size == 0) return Ports{};
        int h = clasp_box(s, size, rot);
        s.join(s.ccw(h, outer), s.bd_ccw(outer, from, size));
        return s.ccw(h, outer == LEFT ? RIGHT : LEFT);
    };
    ptl = corner(LEFT, 0, tl, 2);
    pbl = corner(LEFT, tl, bl, 0);
    ptr = corner(RIGHT, 0, tr, 2);
    pbr = corner(RIGHT, tr, br, 0);
    int top = clasp_box(s, n, 2), bot = clasp_box(s, m, 0);
    Ports tin = s.ccw(top, RIGHT);   // bottom to top: l from below, then n - l from the right
    Ports tout = s.ccw(top, LEFT);   // top to bottom: n - k to the left, then k down
    Ports bin = s.ccw(bot, LEFT);    // top to bottom: k from above, then m - k from the left
    Ports bout = s.ccw(bot, RIGHT);  // bottom to top: m - l to the right, then l up
    s.join(slice(tin, l, n - l), ptr);
    s.join(slice(tout, 0, n - k), ptl);
    s.join(slice(bin, k, m - k), pbl);
    s.join(slice(bout, 0, m - l), pbr);
    s.join(slice(tout, n - k, k), slice(bin, 0, k));
    s.join(slice(bout, m - l, l), slice(tin, 0, l));
    return evaluate(s.finish());
}

WebSum bubble_term(int n, int m, int k, int l, int t) {
    check_bubble(n, m, k, l);
    return evaluate(turnback_web(n - k, n - l, m - k, m - l, n - t, m - t));
}

}  // namespace kvpoly::local
