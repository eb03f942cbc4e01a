#include "kvpoly/clasps.hpp"

#include <mutex>
#include <stdexcept>

namespace kvpoly {

namespace {

Signs repeat(char c, int n) { return Signs(static_cast<size_t>(n), c); }

WebSumPtr share(WebSum w) { return std::make_shared<const WebSum>(std::move(w)); }

Scalar qratio(int a, int b) { return Scalar(quantum_int(a), quantum_int(b)); }

Scalar qbrack(int n, int k) { return Scalar(quantum_binom(n, k)); }

}  // namespace

Frame clasp_frame(int n) { return Frame::of(n, 0, n, 0); }
Frame double_clasp_frame(int n, int m) { return Frame::of(n + m, 0, n + m, 0); }
Frame ladder_frame(int n, int m) { return Frame::of(n, m, n, m); }
Frame triangle_frame(int n) { return Frame::of(n, 0, n, n); }

Frame cable_crossing_frame(int a, int b) { return Frame::of(a, b, a, b); }

ClaspCache& ClaspCache::instance() {
    static ClaspCache cache;
    return cache;
}

WebSumPtr ClaspCache::get(const ClaspKey& key, const std::function<WebSum()>& make) {
    {
        std::shared_lock lock(mu_);
        auto it = table_.find(key);
        if (it != table_.end()) return it->second;
    }
    WebSumPtr value = share(make());
    std::unique_lock lock(mu_);
    auto [it, fresh] = table_.emplace(key, value);
    return it->second;
}

size_t ClaspCache::size() const {
    std::shared_lock lock(mu_);
    return table_.size();
}

void ClaspCache::clear() {
    std::unique_lock lock(mu_);
    table_.clear();
}

WebSum mirror_in_frame(const WebSum& w, const Frame& f) {
    const int M = f.total();
    if (f.n[RIGHT] <= 0) throw std::invalid_argument("mirror_in_frame: empty right side");
    return rotated(mirrored(w), (M - f.n[RIGHT] + 1) % M);
}

// ---------------------------------------------------------------- single clasp

WebSumPtr clasp(int n) {
    if (n < 0) throw std::invalid_argument("clasp: negative size");
    return ClaspCache::instance().get({ClaspKind::Single, n}, [n] {
        if (n == 0) return WebSum::from_scalar(Scalar(1));
        const Frame F = clasp_frame(n);
        const Signs sg = repeat('+', n) + repeat('-', n);
        if (n == 1) {
            Sheet s(F, sg);
            s.connect(s.bd(LEFT, 0), s.bd(RIGHT, 0));
            return reduce_in_disk(s.finish().diagram);
        }
        const Frame Fp = clasp_frame(n - 1);
        WebSum result;
        {
            Sheet s(F, sg);
            int p = s.box(clasp(n - 1), Fp);
            s.connect(s.side(p, LEFT), s.bds(LEFT, 0, n - 1));
            s.connect(s.side(p, RIGHT), s.bds(RIGHT, 0, n - 1));
            s.connect(s.bd(LEFT, n - 1), s.bd(RIGHT, n - 1));
            result = evaluate(s.finish());
        }
        {
            Sheet s(F, sg);
            int l = s.box(clasp(n - 1), Fp);
            int r = s.box(clasp(n - 1), Fp);
            s.connect(s.side(l, LEFT), s.bds(LEFT, 0, n - 1));
            s.connect(s.side(r, RIGHT), s.bds(RIGHT, 0, n - 1));
            s.connect(s.side(l, RIGHT, 0, n - 2), s.side(r, LEFT, 0, n - 2));
            int sk = s.sink(), sc = s.source();
            s.connect({sk, 1}, s.at(l, RIGHT, n - 2));
            s.connect({sk, 2}, s.bd(LEFT, n - 1));
            s.connect({sc, 1}, {sk, 0});
            s.connect({sc, 0}, s.at(r, LEFT, n - 2));
            s.connect({sc, 2}, s.bd(RIGHT, n - 1));
            result += evaluate(s.finish(-qratio(n - 1, n)));
        }
        return result;
    });
}

// ---------------------------------------------------------------- double clasp

Signs double_clasp_signs(int n, int m) {
    return repeat('+', m) + repeat('-', n) + repeat('+', n) + repeat('-', m);
}

namespace {

// Inner port group of a corner, counterclockwise as seen from the middle of
// the picture. `rightward` is the flow direction through the corner.
Ports corner(Sheet& s, Side outer, int from, int size, bool rightward, bool clasped) {
    if (!clasped || size == 0) return s.bd_ccw(outer, from, size);
    int h = s.box(clasp(size), clasp_frame(size), rightward ? 0 : 2);
    s.join(s.ccw(h, outer), s.bd_ccw(outer, from, size));
    return s.ccw(h, outer == LEFT ? RIGHT : LEFT);
}

Ports slice(const Ports& p, int from, int count) {
    return Ports(p.begin() + from, p.begin() + from + count);
}

}  // namespace

Assembly turnback_web(int tl, int tr, int bl, int br, int top, int bottom, bool clasped) {
    const int lt = tl - top, rt = tr - top;
    if (top < 0 || bottom < 0 || lt < 0 || rt < 0 || bl - bottom != lt || br - bottom != rt)
        throw std::invalid_argument("turnback_web: inconsistent strand counts");
    Frame f = Frame::of(tr + br, 0, tl + bl, 0);
    Sheet s(f, repeat('+', br) + repeat('-', tr) + repeat('+', tl) + repeat('-', bl));
    Ports ptl = corner(s, LEFT, 0, tl, false, clasped);
    Ports ptr = corner(s, RIGHT, 0, tr, false, clasped);
    Ports pbl = corner(s, LEFT, tl, bl, true, clasped);
    Ports pbr = corner(s, RIGHT, tr, br, true, clasped);
    // right corners list top to bottom, left corners bottom to top
    s.join(slice(ptr, 0, top), slice(ptl, lt, top));
    s.join(slice(pbl, 0, bottom), slice(pbr, rt, bottom));
    s.join(slice(ptr, top, rt), slice(pbr, 0, rt));
    s.join(slice(ptl, 0, lt), slice(pbl, bottom, lt));
    return s.finish();
}

Assembly double_clasp_term(int n, int m, int k, bool clasped) {
    if (k < 0 || k > std::min(n, m)) throw std::invalid_argument("double_clasp_term: bad index");
    return turnback_web(n, n, m, m, n - k, m - k, clasped);
}

WebSumPtr double_clasp(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("double_clasp: negative size");
    return ClaspCache::instance().get({ClaspKind::Double, n, m}, [n, m] {
        if (n + m == 0) return WebSum::from_scalar(Scalar(1));
        WebSum result;
        for (int k = 0; k <= std::min(n, m); ++k) {
            Scalar coeff = qbrack(n, k) * qbrack(m, k) / qbrack(n + m + 1, k);
            if (k % 2) coeff = -coeff;
            Assembly a = double_clasp_term(n, m, k);
            a.factor *= coeff;
            result += evaluate(a);
        }
        return result;
    });
}

Frame corner_frame(int n) { return Frame::of(2 * n, 0, 2 * n, 0); }

Signs corner_signs(int n) { return repeat('-', n) + repeat('+', 2 * n) + repeat('-', n); }

Assembly diamond_web(int n, int k, bool clasped) {
    if (k < 0 || k > n) throw std::invalid_argument("diamond_web: bad index");
    Sheet s(corner_frame(n), corner_signs(n));
    Ports tl = corner(s, LEFT, 0, n, false, clasped);
    Ports tr = corner(s, RIGHT, 0, n, true, clasped);
    Ports bl = corner(s, LEFT, n, n, true, clasped);
    Ports br = corner(s, RIGHT, n, n, false, clasped);
    s.join(slice(tl, 0, n - k), slice(bl, k, n - k));
    s.join(slice(tr, k, n - k), slice(br, 0, n - k));
    if (k > 0) {
        int d = s.box(ladder(k, k), ladder_frame(k, k));
        s.join(s.ccw(d, LEFT), slice(bl, 0, k));
        s.join(s.ccw(d, BOTTOM), slice(br, n - k, k));
        s.join(s.ccw(d, RIGHT), slice(tr, 0, k));
        s.join(s.ccw(d, TOP), slice(tl, n - k, k));
    }
    return s.finish();
}

Assembly crossing_web(int n, bool positive, bool clasped) {
    if (n < 1) throw std::invalid_argument("crossing_web: size must be positive");
    Sheet s(corner_frame(n), corner_signs(n));
    Ports tl = corner(s, LEFT, 0, n, false, clasped);
    Ports tr = corner(s, RIGHT, 0, n, true, clasped);
    Ports bl = corner(s, LEFT, n, n, true, clasped);
    Ports br = corner(s, RIGHT, n, n, false, clasped);
    int c = s.inlined(cable_crossing(n, n, true, true, positive), cable_crossing_frame(n, n));
    s.join(s.ccw(c, RIGHT), tr);
    s.join(s.ccw(c, TOP), tl);
    s.join(s.ccw(c, LEFT), bl);
    s.join(s.ccw(c, BOTTOM), br);
    return s.finish();
}

// ---------------------------------------------------------------- ladders

WebSumPtr ladder(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("ladder: negative size");
    return ClaspCache::instance().get({ClaspKind::Ladder, n, m}, [n, m] {
        const Frame F = ladder_frame(n, m);
        const Signs sg = repeat('+', n + m) + repeat('-', n + m);
        Sheet s(F, sg);
        if (n == 0 || m == 0) {
            s.connect(s.bds(LEFT), s.bds(RIGHT));
            s.connect(s.bds(BOTTOM), s.bds(TOP));
            return reduce_in_disk(s.finish().diagram);
        }
        // line i counted from the top; the vertical strand of each column
        // climbs from the bottom line to the top line.
        std::vector<std::vector<int>> sk(m, std::vector<int>(n)), sc(m, std::vector<int>(n));
        for (int c = 0; c < m; ++c)
            for (int i = 0; i < n; ++i) {
                sk[c][i] = s.sink();
                sc[c][i] = s.source();
                // sink darts: [segment (E), line in (W), vertical in (S)]
                // source darts: [line out (E), vertical out (N), segment (W)]
                s.connect({sc[c][i], 2}, {sk[c][i], 0});
            }
        for (int i = 0; i < n; ++i) {
            s.connect(s.bd(LEFT, i), {sk[0][i], 1});
            for (int c = 0; c + 1 < m; ++c) s.connect({sc[c][i], 0}, {sk[c + 1][i], 1});
            s.connect({sc[m - 1][i], 0}, s.bd(RIGHT, i));
        }
        for (int c = 0; c < m; ++c) {
            s.connect(s.bd(BOTTOM, c), {sk[c][n - 1], 2});
            for (int i = n - 1; i > 0; --i) s.connect({sc[c][i], 1}, {sk[c][i - 1], 2});
            s.connect({sc[c][0], 1}, s.bd(TOP, c));
        }
        return reduce_in_disk(s.finish().diagram);
    });
}

WebSumPtr ladder_down(int n, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("ladder_down: negative size");
    return ClaspCache::instance().get({ClaspKind::LadderDown, n, m}, [n, m] {
        if (n == 0) {
            Sheet s(ladder_frame(0, m), repeat('-', m) + repeat('+', m));
            s.connect(s.bds(TOP), s.bds(BOTTOM));
            return reduce_in_disk(s.finish().diagram);
        }
        return mirror_in_frame(*ladder(n, m), ladder_frame(n, m));
    });
}

// ---------------------------------------------------------------- triangle

WebSumPtr trivalent_y(int n, bool source) {
    if (n < 1) throw std::invalid_argument("trivalent_y: size must be positive");
    return ClaspCache::instance().get({ClaspKind::Triangle, n, source ? 1 : 0}, [n, source] {
        if (!source) return reversed(*trivalent_y(n, true));
        const Frame F = triangle_frame(n);
        Sheet s(F, repeat('+', 3 * n));
        int v = s.source();  // darts: [right, left, down]
        if (n == 1) {
            s.connect({v, 0}, s.bd(RIGHT, 0));
            s.connect({v, 1}, s.bd(LEFT, 0));
            s.connect({v, 2}, s.bd(BOTTOM, 0));
            return reduce_in_disk(s.finish().diagram);
        }
        const int a = n - 1;
        int t = s.box(trivalent_y(a, true), triangle_frame(a));
        int x = s.box(ladder(a, 1), ladder_frame(a, 1), 2);
        s.connect({v, 0}, s.bd(RIGHT, 0));
        s.connect(s.side(t, RIGHT), s.bds(RIGHT, 1, a));
        s.connect({v, 1}, s.bd(LEFT, 0));
        s.connect(s.side(t, LEFT), s.side(x, RIGHT));
        s.connect(s.side(x, LEFT), s.bds(LEFT, 1, a));
        s.connect({v, 2}, s.at(x, TOP, 0));
        s.connect(s.at(x, BOTTOM, 0), s.bd(BOTTOM, 0));
        s.connect(s.side(t, BOTTOM), s.bds(BOTTOM, 1, a));
        return evaluate(s.finish());
    });
}

// ---------------------------------------------------------------- cable crossings

Assembly strand_grid(const std::vector<bool>& a_right, const std::vector<bool>& b_up, bool a_over) {
    const int a = static_cast<int>(a_right.size()), b = static_cast<int>(b_up.size());
    const Frame F = cable_crossing_frame(a, b);
    // counterclockwise: RIGHT bottom to top, TOP right to left, LEFT top to
    // bottom, BOTTOM left to right
    Signs sg;
    for (int i = a - 1; i >= 0; --i) sg += a_right[i] ? '+' : '-';
    for (int j = b - 1; j >= 0; --j) sg += b_up[j] ? '+' : '-';
    for (int i = 0; i < a; ++i) sg += a_right[i] ? '-' : '+';
    for (int j = 0; j < b; ++j) sg += b_up[j] ? '-' : '+';
    Sheet s(F, sg);
    // direction indices E=0, N=1, W=2, S=3; slot order starts at under-in
    struct Cell {
        int v;
        std::array<int, 4> slot;
    };
    std::vector<std::vector<Cell>> x(a, std::vector<Cell>(b));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            int under_in = a_over ? (b_up[j] ? 3 : 1) : (a_right[i] ? 2 : 0);
            Cell& c = x[i][j];
            for (int k = 0; k < 4; ++k) c.slot[(under_in + k) % 4] = k;
            Signs xs(4, '-');
            xs[c.slot[0]] = a_right[i] ? '+' : '-';
            xs[c.slot[2]] = a_right[i] ? '-' : '+';
            xs[c.slot[1]] = b_up[j] ? '+' : '-';
            xs[c.slot[3]] = b_up[j] ? '-' : '+';
            c.v = s.crossing(xs);
        }
    auto P = [&](int i, int j, int dir) { return Port{x[i][j].v, x[i][j].slot[dir]}; };
    for (int i = 0; i < a; ++i) {
        if (b == 0) {
            s.connect(s.bd(LEFT, i), s.bd(RIGHT, i));
            continue;
        }
        s.connect(s.bd(LEFT, i), P(i, 0, 2));
        for (int j = 0; j + 1 < b; ++j) s.connect(P(i, j, 0), P(i, j + 1, 2));
        s.connect(P(i, b - 1, 0), s.bd(RIGHT, i));
    }
    for (int j = 0; j < b; ++j) {
        if (a == 0) {
            s.connect(s.bd(BOTTOM, j), s.bd(TOP, j));
            continue;
        }
        s.connect(s.bd(BOTTOM, j), P(a - 1, j, 3));
        for (int i = a - 1; i > 0; --i) s.connect(P(i, j, 1), P(i - 1, j, 3));
        s.connect(P(0, j, 1), s.bd(TOP, j));
    }
    return s.finish();
}

Assembly cable_crossing(int a, int b, bool a_rightward, bool b_upward, bool a_over) {
    return strand_grid(std::vector<bool>(a, a_rightward), std::vector<bool>(b, b_upward), a_over);
}

Assembly colored_crossing(int n, int m, bool positive, bool parallel) {
    if (n < 1 || m < 1) throw std::invalid_argument("colored_crossing: sizes must be positive");
    return cable_crossing(n, m, true, parallel, parallel ? positive : !positive);
}

// ---------------------------------------------------------------- white and black vertices

Frame colored_vertex_frame(int n, int i) { return Frame::of(2 * i, 0, 2 * n, 0); }

namespace {

void check_vertex(int n, int i) {
    if (n < 0 || i < 0 || i > n) throw std::invalid_argument("colored vertex: need 0 <= i <= n");
}

WebSum white_plain(int n, int i) {
    Sheet s(colored_vertex_frame(n, i), repeat('+', i) + repeat('-', i) + repeat('+', n) + repeat('-', n));
    Ports ul = corner(s, LEFT, 0, n, false, true);  // bottom to top
    Ports ll = corner(s, LEFT, n, n, true, true);
    if (i > 0) {
        int dc = s.box(double_clasp(i, i), double_clasp_frame(i, i));
        s.join(s.ccw(dc, RIGHT), s.bd_ccw(RIGHT));
        Ports d = s.ccw(dc, LEFT);  // top to bottom
        s.join(slice(ul, n - i, i), slice(d, 0, i));
        s.join(slice(ll, 0, i), slice(d, i, i));
    }
    s.join(slice(ul, 0, n - i), slice(ll, i, n - i));
    return evaluate(s.finish());
}

WebSum black_plain(int n, int i) {
    Sheet s(colored_vertex_frame(n, i), repeat('+', i) + repeat('-', i) + repeat('-', n) + repeat('+', n));
    Ports ul = corner(s, LEFT, 0, n, true, true);
    Ports ll = corner(s, LEFT, n, n, false, true);
    if (i > 0) {
        int dc = s.box(double_clasp(i, i), double_clasp_frame(i, i));
        s.join(s.ccw(dc, RIGHT), s.bd_ccw(RIGHT));
        Ports d = s.ccw(dc, LEFT);
        // the ladder sits turned by an eighth: LEFT faces the double clasp's
        // top group, BOTTOM the upper leg, RIGHT the lower leg
        int x = s.box(ladder(i, i), ladder_frame(i, i));
        s.join(s.ccw(x, LEFT), slice(d, 0, i));
        s.join(s.ccw(x, TOP), slice(d, i, i));
        s.join(s.ccw(x, BOTTOM), slice(ul, n - i, i));
        s.join(s.ccw(x, RIGHT), slice(ll, 0, i));
    }
    s.join(slice(ul, 0, n - i), slice(ll, i, n - i));
    return evaluate(s.finish());
}

}  // namespace

WebSumPtr white_vertex(int n, int i, bool bar) {
    check_vertex(n, i);
    return ClaspCache::instance().get({ClaspKind::White, n, i, bar ? 1 : 0}, [n, i, bar] {
        return bar ? reversed(*white_vertex(n, i, false)) : white_plain(n, i);
    });
}

WebSumPtr black_vertex(int n, int i, bool bar) {
    check_vertex(n, i);
    return ClaspCache::instance().get({ClaspKind::Black, n, i, bar ? 1 : 0}, [n, i, bar] {
        return bar ? reversed(*black_vertex(n, i, false)) : black_plain(n, i);
    });
}

Assembly unoriented_crossing_web(int n, bool horizontal_over) {
    if (n < 1) throw std::invalid_argument("unoriented_crossing_web: n must be positive");
    std::vector<bool> dirs(2 * n, false);
    for (int k = n; k < 2 * n; ++k) dirs[k] = true;
    return strand_grid(dirs, dirs, horizontal_over);
}

namespace {

// Four vertices at the corners, each turned so that its double line points
// out of the picture; the upper leg of each faces the next corner
// counterclockwise.
WebSum vertex_square(int n, bool white) {
    const int B = 2 * n;
    Signs sg;
    for (int c = 0; c < 4; ++c) sg += repeat('+', n) + repeat('-', n);
    Builder b(sg);
    WebSumPtr w = white ? white_vertex(n, n) : black_vertex(n, n);
    std::array<int, 4> v{};
    for (int c = 0; c < 4; ++c) v[c] = b.box(w);
    auto group = [&](int h, int from, int size) {
        Ports p;
        for (int k = 0; k < size; ++k) p.push_back({h, from + k});
        return p;
    };
    auto join = [&](const Ports& x, const Ports& y) {
        for (size_t p = 0; p < x.size(); ++p) b.connect(x[p], y[x.size() - 1 - p]);
    };
    for (int c = 0; c < 4; ++c) {
        Ports outer;  // clockwise around the disk
        for (int k = B - 1; k >= 0; --k) outer.push_back(b.bd(c * B + k));
        join(group(v[c], 0, B), outer);
        join(group(v[c], B, n), group(v[(c + 1) % 4], B + n, n));
    }
    return evaluate(b.finish());
}

}  // namespace

WebSumPtr unoriented_vertex_web(int n) {
    if (n < 1) throw std::invalid_argument("unoriented_vertex_web: n must be positive");
    return ClaspCache::instance().get({ClaspKind::RigidVertex, n}, [n] {
        WebSum w = vertex_square(n, true);
        w += vertex_square(n, false);
        return w;
    });
}

}  // namespace kvpoly
