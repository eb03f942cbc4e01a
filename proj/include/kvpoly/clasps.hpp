#pragma once

#include "kvpoly/sheet.hpp"
#include "kvpoly/webcore.hpp"

#include <functional>
#include <map>
#include <shared_mutex>
#include <tuple>

namespace kvpoly {

// Standard frames (see Sheet for the numbering convention).
// clasp(n): RIGHT n outgoing, LEFT n incoming; strands run left to right.
Frame clasp_frame(int n);
// double_clasp(n, m): RIGHT and LEFT carry n + m points each; the top n
// strands run right to left, the bottom m strands left to right.
Frame double_clasp_frame(int n, int m);
// ladder(n, m): RIGHT n, TOP m outgoing; LEFT n, BOTTOM m incoming.
Frame ladder_frame(int n, int m);
// trivalent_y(n, .): RIGHT n, LEFT n, BOTTOM n.
Frame triangle_frame(int n);

enum class ClaspKind { Single, Double, Ladder, LadderDown, Triangle, White, Black, RigidVertex };

struct ClaspKey {
    ClaspKind kind;
    int a = 0, b = 0, c = 0;
    friend bool operator<(const ClaspKey& x, const ClaspKey& y) {
        return std::tie(x.kind, x.a, x.b, x.c) < std::tie(y.kind, y.a, y.b, y.c);
    }
};

// Memo table of expanded clasp webs. Concurrent readers, exclusive writers;
// values are computed outside the lock.
class ClaspCache {
public:
    static ClaspCache& instance();
    WebSumPtr get(const ClaspKey& key, const std::function<WebSum()>& make);
    size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mu_;
    std::map<ClaspKey, WebSumPtr> table_;
};

WebSumPtr clasp(int n);
WebSumPtr double_clasp(int n, int m);
// Ladder web: n horizontal strands crossed by m vertical ones, each meeting
// realised as a sink/source pair. ladder_down has the vertical strands
// running downward (signs n+ m- n- m+).
WebSumPtr ladder(int n, int m);
WebSumPtr ladder_down(int n, int m);
// The colored trivalent vertex; `source` selects W_{n+ n+ n+}.
WebSumPtr trivalent_y(int n, bool source);

// Grid of elementary crossings between a horizontal cable of `a` strands
// (LEFT to RIGHT, reading order preserved) and a vertical cable of `b`
// strands (BOTTOM to TOP). Frame: RIGHT a, TOP b, LEFT a, BOTTOM b.
Assembly cable_crossing(int a, int b, bool a_rightward, bool b_upward, bool a_over);
// Same grid with a direction per strand, in reading order.
Assembly strand_grid(const std::vector<bool>& a_right, const std::vector<bool>& b_up, bool a_over);
Frame cable_crossing_frame(int a, int b);
// Convenience form: parallel means the vertical cable runs upward.
Assembly colored_crossing(int n, int m, bool positive, bool parallel);

// Four-corner layouts. corner_frame(n): RIGHT 2n, LEFT 2n; the bottom corners
// carry n incoming strands each and the top corners n outgoing ones.
// Without corner clasps the corners are plain boundary groups.
Frame corner_frame(int n);
Signs corner_signs(int n);
// Side turnbacks of n - k strands and a ladder L(k, k) joining the crossing
// k-cables bottom-left to top-right and bottom-right to top-left.
Assembly diamond_web(int n, int k, bool corner_clasps = true);
// Clasped cable crossing; bottom-left to top-right is the over cable when
// `positive`.
Assembly crossing_web(int n, bool positive, bool corner_clasps = true);
// The k-th term of the double clasp sum: n - k straight strands on top,
// m - k on the bottom, turnbacks of k strands on both sides. Layout and signs
// as double_clasp(n, m).
Assembly double_clasp_term(int n, int m, int k, bool corner_clasps = true);
Signs double_clasp_signs(int n, int m);
// General form: corner sizes tl, tr, bl, br; `top` strands run from the top
// right corner to the top left one, `bottom` from bottom left to bottom right,
// and the rest turn back on each side (downward on the right, upward on the
// left).
Assembly turnback_web(int tl, int tr, int bl, int br, int top, int bottom, bool corner_clasps = true);

// Trivalent vertices joining two n-legs to an (i, i) double line. Frame
// RIGHT 2i (the double line, laid out as double_clasp(i, i)), LEFT 2n (upper
// leg, then lower leg). The plain white vertex has its upper leg outgoing;
// the plain black vertex has it incoming and crosses the i-cables through a
// ladder. `bar` selects the reversed double line, which reverses every edge.
Frame colored_vertex_frame(int n, int i);
WebSumPtr white_vertex(int n, int i, bool bar = false);
WebSumPtr black_vertex(int n, int i, bool bar = false);

// Node webs for unoriented diagrams. Each of the four legs is an (n, n) pair
// laid out as a block of 2n points whose counterclockwise signs are n '+'
// then n '-'. Blocks follow counterclockwise; for the crossing the blocks are
// the sides RIGHT, TOP, LEFT, BOTTOM of a grid and the TOP/BOTTOM pair passes
// over unless `horizontal_over`. The vertex is the sum of the white and black
// squares.
Assembly unoriented_crossing_web(int n, bool horizontal_over);
WebSumPtr unoriented_vertex_web(int n);

// Reflection across the horizontal axis, renumbered so that the result is
// again laid out in `f` with TOP and BOTTOM counts swapped. Requires f.n[RIGHT] > 0.
WebSum mirror_in_frame(const WebSum& w, const Frame& f);

}  // namespace kvpoly
