#include "kvpoly/invariants.hpp"

#include "kvpoly/clasps.hpp"
#include "kvpoly/oracles.hpp"

#include <array>
#include <stdexcept>

namespace kvpoly {

namespace {

using Block = std::array<bool, 4>;  // out flags per corner, BR TR TL BL

// Corner patterns of the node webs laid out in corner_frame.
constexpr Block kCrossingCorners{false, true, true, false};
constexpr Block kAlternatingCorners{true, false, true, false};

// Rotation r such that corner j of the web sits at slot (r + j) of node v.
int match_rotation(const GraphDiagram& g, int v, const Block& corners) {
    for (int r = 0; r < 4; ++r) {
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) ok = (g.out[GraphDiagram::dart(v, r + j)] != 0) == corners[j];
        if (ok) return r;
    }
    throw std::invalid_argument("node " + std::to_string(v) + " has no matching orientation pattern");
}

// Ports of one side of an edge box.
std::vector<Port> box_block(int h, int from, int size) {
    std::vector<Port> p;
    for (int k = 0; k < size; ++k) p.push_back({h, from + k});
    return p;
}

// Ribbon between two groups listed counterclockwise around their owners.
void ribbon(Builder& b, const std::vector<Port>& x, const std::vector<Port>& y) {
    for (size_t p = 0; p < x.size(); ++p) b.connect(x[p], y[x.size() - 1 - p]);
}

// Node webs expose four blocks of `block` points; slot_block[d] gives the
// port group attached to dart d.
struct NodeBlocks {
    std::vector<std::vector<Port>> at;
};

}  // namespace

Assembly oriented_web(const GraphDiagram& g, int color, int variant_k, bool singular) {
    if (!g.oriented && g.size()) throw std::invalid_argument("oriented invariant of an unoriented diagram");
    g.validate();
    const int N = color;
    Builder b("");
    NodeBlocks nb;
    nb.at.resize(g.dart_count());
    for (int v = 0; v < g.size(); ++v) {
        Assembly web;
        int r = 0;
        if (g.kinds[v] == NodeKind::Crossing) {
            r = match_rotation(g, v, kCrossingCorners);
            // over strand on corners 1, 3 of the positive web
            const bool positive = r % 2 == 0;
            if (positive != g.crossing_positive(v))
                throw std::logic_error("crossing sign convention mismatch at node " + std::to_string(v));
            web = crossing_web(N, positive, false);
        } else if (g.pattern(v) == VertexPattern::Adjacent) {
            r = match_rotation(g, v, kCrossingCorners);
            web = diamond_web(N, singular ? N : variant_k, false);
        } else {
            if (singular) throw std::invalid_argument("singular invariant needs every vertex to have adjacent ins");
            if (N % 2) throw std::invalid_argument("alternating vertex needs an even color");
            r = match_rotation(g, v, kAlternatingCorners);
            web = double_clasp_term(N, N, N / 2, false);
        }
        int h = b.inlined(web);
        for (int j = 0; j < 4; ++j) nb.at[GraphDiagram::dart(v, r + j)] = box_block(h, j * N, N);
    }
    for (int d = 0; d < g.dart_count(); ++d) {
        if (!g.out[d]) continue;
        int c = b.box(clasp(N));
        ribbon(b, nb.at[d], box_block(c, N, N));
        ribbon(b, box_block(c, 0, N), nb.at[g.link[d]]);
    }
    for (int i = 0; i < g.free_loops; ++i) {
        int c = b.box(clasp(N));
        ribbon(b, box_block(c, 0, N), box_block(c, N, N));
    }
    return b.finish();
}

Scalar kv_oriented(const GraphDiagram& g, int two_n, int variant_k) {
    if (two_n < 2 || two_n % 2) throw std::invalid_argument("kv_oriented: color must be even and at least 2");
    if (variant_k < 0) variant_k = two_n / 2;
    if (variant_k > two_n) throw std::invalid_argument("kv_oriented: variant out of range");
    return evaluate_closed(oriented_web(g, two_n, variant_k, false));
}

Scalar kv_singular(const GraphDiagram& g, int m) {
    if (m < 1) throw std::invalid_argument("kv_singular: color must be positive");
    return evaluate_closed(oriented_web(g, m, m, true));
}

Assembly unoriented_web(const GraphDiagram& g, int n) {
    if (g.oriented && g.size()) throw std::invalid_argument("unoriented invariant of an oriented diagram");
    if (n < 1) throw std::invalid_argument("kv_unoriented: n must be positive");
    g.validate();
    const int B = 2 * n;
    Builder b("");
    NodeBlocks nb;
    nb.at.resize(g.dart_count());
    for (int v = 0; v < g.size(); ++v) {
        int h = g.kinds[v] == NodeKind::Crossing ? b.inlined(unoriented_crossing_web(n, false))
                                                 : b.box(unoriented_vertex_web(n));
        for (int j = 0; j < 4; ++j) nb.at[GraphDiagram::dart(v, j)] = box_block(h, j * B, B);
    }
    for (int d = 0; d < g.dart_count(); ++d) {
        if (g.link[d] < d) continue;
        int c = b.box(double_clasp(n, n));
        ribbon(b, nb.at[d], box_block(c, B, B));
        ribbon(b, box_block(c, 0, B), nb.at[g.link[d]]);
    }
    for (int i = 0; i < g.free_loops; ++i) {
        int c = b.box(double_clasp(n, n));
        ribbon(b, box_block(c, 0, B), box_block(c, B, B));
    }
    return b.finish();
}

Scalar kv_unoriented(const GraphDiagram& g, int n) { return evaluate_closed(unoriented_web(g, n)); }

Scalar writhe_normalized(const GraphDiagram& g, int color, const Scalar& value) {
    const int w = g.writhe();
    return value * oracles::clasp_curl_coeff(color, w > 0 ? -1 : 1).pow(w > 0 ? w : -w);
}

GraphDiagram unknot(bool oriented) {
    GraphDiagram g;
    g.oriented = oriented;
    g.free_loops = 1;
    return g;
}

namespace {

// Slots of the four corners of a node in the row.
struct Corners {
    int br, tr, tl, bl;
};

GraphDiagram closure(int vertices, int crossings, bool oriented) {
    if (vertices < 0 || crossings < 0) throw std::invalid_argument("twist_closure: negative count");
    GraphDiagram g;
    g.oriented = oriented;
    if (vertices + crossings == 0) {
        g.free_loops = 2;
        return g;
    }
    std::vector<Corners> c;
    for (int i = 0; i < vertices + crossings; ++i) {
        bool vert = i < vertices;
        int v = g.add_node(vert ? NodeKind::Vertex : NodeKind::Crossing);
        // crossings: the under strand runs bottom-left to top-right
        c.push_back(vert ? Corners{4 * v, 4 * v + 1, 4 * v + 2, 4 * v + 3}
                         : Corners{4 * v + 3, 4 * v, 4 * v + 1, 4 * v + 2});
    }
    const int m = static_cast<int>(c.size());
    for (int i = 0; i < m; ++i) {
        const Corners& a = c[i];
        const Corners& z = c[(i + 1) % m];
        g.connect_directed(a.tr, z.tl);
        g.connect_directed(a.br, z.bl);
    }
    if (!oriented) std::fill(g.out.begin(), g.out.end(), 0);
    return g;
}

}  // namespace

GraphDiagram twist_closure(int vertices, int crossings) { return closure(vertices, crossings, true); }

GraphDiagram twist_closure_unoriented(int vertices, int crossings) { return closure(vertices, crossings, false); }

}  // namespace kvpoly
