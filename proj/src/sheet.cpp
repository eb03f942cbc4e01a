#include "kvpoly/sheet.hpp"

#include <algorithm>
#include <stdexcept>

namespace kvpoly {

int Frame::point(Side s, int j) const {
    const int size = n[s];
    if (j < 0 || j >= size) throw std::out_of_range("frame reading index out of range");
    int base = 0;
    for (int i = 0; i < s; ++i) base += n[i];
    const int off = (s == RIGHT || s == TOP) ? size - 1 - j : j;
    return base + off;
}

Ports reversed(Ports p) {
    std::reverse(p.begin(), p.end());
    return p;
}

Ports concat(const Ports& a, const Ports& b) {
    Ports r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

Sheet::Sheet(const Frame& outer, const Signs& signs) : b_(signs), outer_(outer) {
    if (static_cast<int>(signs.size()) != outer.total()) throw std::invalid_argument("sheet: frame and signs disagree");
}

int Sheet::add(int v, const Frame& f, int rot) {
    placed_.push_back({v, f, ((rot % 4) + 4) % 4});
    return static_cast<int>(placed_.size()) - 1;
}

int Sheet::box(WebSumPtr ws, const Frame& f, int rot) {
    if (f.total() == 0) return -1;
    if (static_cast<int>(ws->signs.size()) != f.total()) throw std::invalid_argument("sheet: box frame size mismatch");
    return add(b_.box(std::move(ws)), f, rot);
}

int Sheet::inlined(const Assembly& a, const Frame& f, int rot) {
    if (f.total() == 0) return -1;
    if (a.diagram.boundary_size() != f.total()) throw std::invalid_argument("sheet: inlined frame size mismatch");
    return add(b_.inlined(a), f, rot);
}

Port Sheet::at(int h, Side s, int j) const {
    const Placed& p = placed_.at(h);
    const Side own = static_cast<Side>((s - p.rot + 4) % 4);
    const int size = p.f.n[own];
    if (j < 0 || j >= size) throw std::out_of_range("sheet: port index out of range");
    // counterclockwise offsets are preserved by rotation
    const int off = (s == RIGHT || s == TOP) ? size - 1 - j : j;
    int base = 0;
    for (int i = 0; i < own; ++i) base += p.f.n[i];
    return {p.v, base + off};
}

Ports Sheet::side(int h, Side s, int from, int count) const {
    Ports r;
    if (count == 0 || (h < 0 && count < 0)) return r;
    if (h < 0) throw std::logic_error("sheet: ports requested on an empty box");
    const Placed& p = placed_.at(h);
    const int size = p.f.n[(s - p.rot + 4) % 4];
    if (count < 0) count = size - from;
    for (int j = from; j < from + count; ++j) r.push_back(at(h, s, j));
    return r;
}

Port Sheet::bd(Side s, int j) const { return b_.bd(outer_.point(s, j)); }

Ports Sheet::bds(Side s, int from, int count) const {
    Ports r;
    if (count < 0) count = outer_.n[s] - from;
    for (int j = from; j < from + count; ++j) r.push_back(bd(s, j));
    return r;
}

Ports Sheet::ccw(int h, Side s, int from, int count) const {
    Ports r = side(h, s, from, count);
    if (s == RIGHT || s == TOP) std::reverse(r.begin(), r.end());
    return r;
}

Ports Sheet::bd_ccw(Side s, int from, int count) const {
    Ports r = bds(s, from, count);
    if (s == LEFT || s == BOTTOM) std::reverse(r.begin(), r.end());
    return r;
}

void Sheet::join(const Ports& a, const Ports& b) {
    if (a.size() != b.size()) throw std::logic_error("sheet: joining port groups of different sizes");
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) b_.connect(a[i], b[n - 1 - i]);
}

void Sheet::connect(const Ports& a, const Ports& b) {
    if (a.size() != b.size()) throw std::logic_error("sheet: connecting port groups of different sizes");
    for (size_t i = 0; i < a.size(); ++i) b_.connect(a[i], b[i]);
}

}  // namespace kvpoly
