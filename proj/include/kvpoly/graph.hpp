#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace kvpoly {

enum class NodeKind : uint8_t { Crossing, Vertex };

// In/out pattern of an oriented rigid vertex, read cyclically.
// Adjacent: (in, in, out, out). Alternating: (in, out, in, out).
enum class VertexPattern : uint8_t { Adjacent, Alternating };

// A 4-valent rigid-vertex graph diagram on the sphere, stored as a rotation
// system. Dart 4v + s is slot s of node v; slots are counterclockwise. At a
// crossing the under-strand uses slots 0 and 2 and the over-strand 1 and 3.
// In oriented mode out[d] is 1 when the edge at d leaves the node.
struct GraphDiagram {
    bool oriented = false;
    std::vector<NodeKind> kinds;
    std::vector<int> link;
    std::vector<uint8_t> out;
    int free_loops = 0;

    int size() const { return static_cast<int>(kinds.size()); }
    int dart_count() const { return 4 * size(); }
    static int node_of(int d) { return d / 4; }
    static int slot_of(int d) { return d % 4; }
    static int dart(int v, int s) { return 4 * v + ((s % 4) + 4) % 4; }
    // Next dart counterclockwise around the same node, shifted by k.
    static int turn(int d, int k) { return dart(node_of(d), slot_of(d) + k); }

    int add_node(NodeKind k);
    void connect(int a, int b);  // plain link, no orientation
    void connect_directed(int from, int to);

    // Positive: the over strand crosses from right to left as seen walking
    // along the under strand. Oriented diagrams only.
    bool crossing_positive(int v) const;
    int writhe() const;
    VertexPattern pattern(int v) const;
    int vertex_count() const;
    int crossing_count() const;

    // Face permutation with the face on the left: a dart maps to the dart
    // leaving its partner's node clockwise-next.
    int face_next(int d) const;
    std::vector<std::vector<int>> faces() const;
    // Connected components of the node graph (free loops excluded).
    std::vector<int> components(int* count) const;

    // Throws std::invalid_argument describing the first violation.
    void validate() const;
};

GraphDiagram disjoint_union(const GraphDiagram& a, const GraphDiagram& b);
// Same diagram with every edge reversed.
GraphDiagram reversed(const GraphDiagram& g);
// Same diagram with orientation dropped.
GraphDiagram unoriented(const GraphDiagram& g);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

// Text format, one record per line:
//   X+ a b c d / X- a b c d / X a b c d   crossing; darts counterclockwise,
//                                         the under strand at positions 1, 3
//   V a b c d                             rigid vertex, darts counterclockwise
//   O                                     a free loop
// Oriented files mark every label as >a (edge leaves here) or <a (enters).
// Text after # is ignored.
GraphDiagram parse_diagram(std::istream& in);
GraphDiagram parse_diagram(const std::string& text);
std::string serialize(const GraphDiagram& g);

// Combinatorial isomorphism (node relabeling and cyclic slot shifts that keep
// the crossing structure), including orientation and free loops.
bool isomorphic(const GraphDiagram& a, const GraphDiagram& b);

}  // namespace kvpoly
