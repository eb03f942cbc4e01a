#pragma once

#include "kvpoly/webcore.hpp"

#include <array>
#include <vector>

namespace kvpoly {

// Layout helper for building assemblies from rectangular pieces. A frame
// gives the number of marked points on each side; counterclockwise numbering
// starts at the bottom of the right side. Ports on a side are addressed in
// reading order: top to bottom on vertical sides, left to right on
// horizontal ones.
enum Side : int { RIGHT = 0, TOP = 1, LEFT = 2, BOTTOM = 3 };

struct Frame {
    std::array<int, 4> n{};
    static Frame of(int right, int top, int left, int bottom) { return Frame{{right, top, left, bottom}}; }
    int total() const { return n[0] + n[1] + n[2] + n[3]; }
    // Counterclockwise point index of reading position j on side s.
    int point(Side s, int j) const;
};

using Ports = std::vector<Port>;

Ports reversed(Ports p);
Ports concat(const Ports& a, const Ports& b);

class Sheet {
public:
    explicit Sheet(const Frame& outer, const Signs& signs = "");
    // A box placed with `rot` counterclockwise quarter turns. Returns -1 for
    // an empty frame.
    int box(WebSumPtr ws, const Frame& f, int rot = 0);
    int inlined(const Assembly& a, const Frame& f, int rot = 0);
    int sink() { return b_.sink(); }
    int source() { return b_.source(); }
    int crossing(const Signs& slots) { return b_.crossing(slots); }

    Port at(int h, Side s, int j) const;
    Ports side(int h, Side s, int from = 0, int count = -1) const;
    Port bd(Side s, int j) const;
    Ports bds(Side s, int from = 0, int count = -1) const;

    // Port groups in counterclockwise order around their owner; for the
    // outer boundary the order is clockwise around the disk, which is the
    // same thing seen from outside. A ribbon of parallel strands between two
    // such groups is made by join().
    Ports ccw(int h, Side s, int from = 0, int count = -1) const;
    Ports bd_ccw(Side s, int from = 0, int count = -1) const;
    void join(const Ports& a, const Ports& b);

    void connect(Port a, Port b) { b_.connect(a, b); }
    void connect(const Ports& a, const Ports& b);
    Assembly finish(const Scalar& factor = Scalar(1)) { return b_.finish(factor); }
    Builder& builder() { return b_; }

private:
    struct Placed {
        int v;
        Frame f;
        int rot;
    };
    int add(int v, const Frame& f, int rot);
    Builder b_;
    Frame outer_;
    std::vector<Placed> placed_;
};

}  // namespace kvpoly
