#pragma once

#include "kvpoly/qscalar.hpp"

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace kvpoly {

// Boundary signature: one char per marked point in counterclockwise order.
// '+' means the edge at that point leaves the disk interior, '-' that it enters.
using Signs = std::string;

enum class VKind : uint8_t { Sink, Source, Crossing, Box, Boundary };

// A planar directed graph stored as a rotation system. Darts of a vertex are
// contiguous and listed counterclockwise. The boundary vertex (the outside of
// the disk) is stored with reversed rotation; use boundary_dart() to address
// marked points. Crossings list darts starting at the under-strand entry.
struct Diagram {
    struct Vertex {
        int32_t first = 0;
        int16_t deg = 0;
        VKind kind = VKind::Sink;
        bool alive = true;
        int32_t tag = -1;  // anchor id for boxes and crossings
    };
    std::vector<Vertex> verts;
    std::vector<int32_t> twin;
    std::vector<int32_t> owner;
    std::vector<uint8_t> out;  // 1 when the edge leaves the owning vertex
    int32_t boundary = -1;

    int add_vertex(VKind kind, int deg, int tag = -1);
    int dart(int v, int slot) const { return verts[v].first + slot; }
    int slot_of(int d) const { return d - verts[owner[d]].first; }
    int ccw_next(int d) const;
    int ccw_prev(int d) const;
    // Face walk with the face on the left.
    int face_next(int d) const { return ccw_prev(twin[d]); }
    void link(int from, int to);  // directed edge: from-dart is the tail

    Signs boundary_signs() const;
    int boundary_size() const { return boundary < 0 ? 0 : verts[boundary].deg; }
    int boundary_dart(int point) const;
    int boundary_point(int d) const;

    bool alive_dart(int d) const { return verts[owner[d]].alive; }
    int live_vertex_count() const;
    bool crossing_positive(int v) const { return out[dart(v, 1)] != 0; }
    void check() const;  // structural invariants (twins, directions, degrees)
    int euler_defect() const;  // 0 iff every component is planar
    std::string debug_string() const;
};

struct Face {
    std::vector<int> darts;
    bool touches_boundary = false;
    bool pure = true;  // only trivalent vertices
    int sides() const { return static_cast<int>(darts.size()); }
};

std::vector<Face> faces(const Diagram& d);
bool is_basis_web(const Diagram& d);

// Formal linear combination of disk diagrams sharing a boundary signature.
struct WebSum {
    Signs signs;
    std::vector<std::pair<Scalar, Diagram>> terms;

    bool is_zero() const { return terms.empty(); }
    // Value of a closed WebSum (empty boundary).
    Scalar scalar() const;
    static WebSum from_scalar(const Scalar& s);
    WebSum& operator+=(const WebSum& o);
    WebSum operator*(const Scalar& s) const;
    friend WebSum operator-(const WebSum& a, const WebSum& b);
    friend bool operator==(const WebSum& a, const WebSum& b);
    std::string debug_string() const;
};

using WebSumPtr = std::shared_ptr<const WebSum>;

// Canonical relabeling; all components must contain an anchor (boundary, box
// or crossing). The key identifies the diagram up to anchor-preserving isomorphism.
struct Canonical {
    Diagram diagram;
    std::string key;
};
Canonical canonicalize(const Diagram& d);

// Elementary crossing expansions in the crossing frame
// [under-in, over, under-out, over]; signs "-++-" positive, "--++" negative.
WebSumPtr crossing_expansion(bool positive);

// A diagram with pending boxes. Box vertex with tag t is replaced by *boxes[t].
struct Assembly {
    Diagram diagram;
    std::vector<WebSumPtr> boxes;
    Scalar factor = Scalar(1);
};

struct EvalStats {
    size_t max_states = 0;
    size_t expansions = 0;
};

// Expands every box and crossing, reducing to basis webs (or a scalar for
// closed assemblies).
WebSum evaluate(const Assembly& a, EvalStats* stats = nullptr);
Scalar evaluate_closed(const Assembly& a, EvalStats* stats = nullptr);

// Reduction entry points on plain diagrams (crossings allowed, no boxes).
WebSum reduce_in_disk(const Diagram& d);
Scalar reduce_closed(const Diagram& d);
WebSum resolve_crossing(const Diagram& d, int crossing_vertex);
// Reduction with a randomized choice of reduction site at every step.
Scalar reduce_closed_randomized(const Diagram& d, std::mt19937_64& rng);

// Builder for assemblies: vertices expose ports; a port on the boundary is a
// marked point index.
struct Port {
    int v = -1;
    int i = 0;
};

class Builder {
public:
    explicit Builder(const Signs& boundary = "");
    int sink();
    int source();
    int box(WebSumPtr ws);
    int crossing(const Signs& slots);  // slots in CCW order from under-in
    // Places a copy of `sub` whose boundary points become ports of the
    // returned vertex; it is spliced in by finish().
    int inlined(const Assembly& sub);
    Port bd(int point) const { return {boundary_, point}; }
    void link(Port from, Port to);
    // Links two ports, taking the direction from their orientations.
    void connect(Port a, Port b);
    Assembly finish(const Scalar& factor = Scalar(1));
    const Signs& box_signs(int v) const;

private:
    int port_dart(Port p) const;
    Assembly a_;
    int boundary_ = -1;
    std::vector<int> box_index_;  // vertex -> tag
    std::vector<std::pair<int, Assembly>> inlined_;
};

// Gluing: replace the box vertex `hole` of `outer` by `inner`.
WebSum glue(const Diagram& outer, int hole, const WebSum& inner);

// Orientation reversal and reflection of webs.
Diagram reversed(const Diagram& d);
WebSum reversed(const WebSum& w);
Diagram mirrored(const Diagram& d);
WebSum mirrored(const WebSum& w);
// Rotates the boundary labelling so that old point k becomes point 0.
Diagram rotated(const Diagram& d, int k);
WebSum rotated(const WebSum& w, int k);

}  // namespace kvpoly
