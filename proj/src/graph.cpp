#include "kvpoly/graph.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <sstream>

namespace kvpoly {

int GraphDiagram::add_node(NodeKind k) {
    kinds.push_back(k);
    link.insert(link.end(), 4, -1);
    out.insert(out.end(), 4, 0);
    return size() - 1;
}

void GraphDiagram::connect(int a, int b) {
    link[a] = b;
    link[b] = a;
}

void GraphDiagram::connect_directed(int from, int to) {
    connect(from, to);
    out[from] = 1;
    out[to] = 0;
}

bool GraphDiagram::crossing_positive(int v) const { return out[dart(v, 0)] != out[dart(v, 1)]; }

int GraphDiagram::writhe() const {
    int w = 0;
    for (int v = 0; v < size(); ++v)
        if (kinds[v] == NodeKind::Crossing) w += crossing_positive(v) ? 1 : -1;
    return w;
}

VertexPattern GraphDiagram::pattern(int v) const {
    return out[dart(v, 0)] == out[dart(v, 2)] ? VertexPattern::Alternating : VertexPattern::Adjacent;
}

int GraphDiagram::vertex_count() const {
    return static_cast<int>(std::count(kinds.begin(), kinds.end(), NodeKind::Vertex));
}

int GraphDiagram::crossing_count() const { return size() - vertex_count(); }

int GraphDiagram::face_next(int d) const { return turn(link[d], -1); }

std::vector<std::vector<int>> GraphDiagram::faces() const {
    std::vector<std::vector<int>> res;
    std::vector<char> seen(dart_count(), 0);
    for (int d = 0; d < dart_count(); ++d) {
        if (seen[d]) continue;
        std::vector<int> f;
        for (int e = d; !seen[e]; e = face_next(e)) {
            seen[e] = 1;
            f.push_back(e);
        }
        res.push_back(std::move(f));
    }
    return res;
}

std::vector<int> GraphDiagram::components(int* count) const {
    std::vector<int> comp(size(), -1);
    int c = 0;
    for (int s = 0; s < size(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int k = 0; k < 4; ++k) {
                int w = node_of(link[dart(v, k)]);
                if (comp[w] < 0) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

void GraphDiagram::validate() const {
    auto fail = [](const std::string& m) { throw std::invalid_argument(m); };
    if (link.size() != kinds.size() * 4 || out.size() != link.size()) fail("inconsistent array sizes");
    if (free_loops < 0) fail("negative free loop count");
    for (int d = 0; d < dart_count(); ++d) {
        int e = link[d];
        if (e < 0 || e >= dart_count()) fail("dart " + std::to_string(d) + " is unlinked");
        if (e == d || link[e] != d) fail("dart " + std::to_string(d) + " has an asymmetric link");
        if (oriented && out[d] == out[e]) fail("edge at dart " + std::to_string(d) + " has inconsistent direction");
    }
    if (oriented) {
        for (int v = 0; v < size(); ++v) {
            int outs = 0;
            for (int k = 0; k < 4; ++k) outs += out[dart(v, k)];
            if (outs != 2) fail("node " + std::to_string(v) + " does not have two incoming and two outgoing edges");
            if (kinds[v] == NodeKind::Crossing &&
                (out[dart(v, 0)] == out[dart(v, 2)] || out[dart(v, 1)] == out[dart(v, 3)]))
                fail("crossing " + std::to_string(v) + " has a strand that does not pass through");
        }
    }
    int nc = 0;
    std::vector<int> comp = components(&nc);
    std::vector<int> nodes(nc, 0), fcount(nc, 0);
    for (int v = 0; v < size(); ++v) ++nodes[comp[v]];
    for (const auto& f : faces()) ++fcount[comp[node_of(f[0])]];
    // V - E + F = 2 with E = 2V
    for (int c = 0; c < nc; ++c)
        if (fcount[c] != nodes[c] + 2) fail("diagram is not planar");
}

GraphDiagram disjoint_union(const GraphDiagram& a, const GraphDiagram& b) {
    if (a.oriented != b.oriented && a.size() && b.size())
        throw std::invalid_argument("disjoint_union: orientation mismatch");
    GraphDiagram g = a;
    g.oriented = a.size() ? a.oriented : b.oriented;
    const int off = a.dart_count();
    g.kinds.insert(g.kinds.end(), b.kinds.begin(), b.kinds.end());
    for (int e : b.link) g.link.push_back(e + off);
    g.out.insert(g.out.end(), b.out.begin(), b.out.end());
    g.free_loops += b.free_loops;
    return g;
}

GraphDiagram reversed(const GraphDiagram& g) {
    GraphDiagram r = g;
    for (auto& o : r.out) o = !o;
    return r;
}

GraphDiagram unoriented(const GraphDiagram& g) {
    GraphDiagram r = g;
    r.oriented = false;
    std::fill(r.out.begin(), r.out.end(), 0);
    return r;
}

// ---------------------------------------------------------------- text format

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Token {
    std::string label;
    int mark = 0;  // +1 leaves, -1 enters, 0 bare
};

struct Record {
    int line;
    NodeKind kind;
    int tag_sign;  // +1, -1, or 0 for an untagged crossing and for vertices
    std::vector<Token> darts;
};

}  // namespace

GraphDiagram parse_diagram(std::istream& in) {
    std::vector<Record> recs;
    int loops = 0;
    std::string raw;
    int lineno = 0;
    bool any_marked = false, any_bare = false;
    int first_marked = 0, first_bare = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "O") {
            std::string extra;
            if (ls >> extra) throw ParseError(lineno, "free loop record takes no arguments");
            ++loops;
            continue;
        }
        Record r{lineno, NodeKind::Crossing, 0, {}};
        if (head == "X+") r.tag_sign = 1;
        else if (head == "X-") r.tag_sign = -1;
        else if (head == "X") r.tag_sign = 0;
        else if (head == "V") r.kind = NodeKind::Vertex;
        else throw ParseError(lineno, "unknown record '" + head + "'");
        std::string tok;
        while (ls >> tok) {
            Token t;
            if (tok[0] == '>' || tok[0] == '<') {
                t.mark = tok[0] == '>' ? 1 : -1;
                t.label = tok.substr(1);
                if (!any_marked) first_marked = lineno;
                any_marked = true;
            } else {
                t.label = tok;
                if (!any_bare) first_bare = lineno;
                any_bare = true;
            }
            if (t.label.empty()) throw ParseError(lineno, "empty label");
            r.darts.push_back(t);
        }
        if (r.darts.size() != 4)
            throw ParseError(lineno, "expected 4 darts, found " + std::to_string(r.darts.size()));
        recs.push_back(std::move(r));
    }
    if (any_marked && any_bare)
        throw ParseError(std::max(first_marked, first_bare), "mixes oriented and unoriented labels");

    GraphDiagram g;
    g.oriented = any_marked;
    g.free_loops = loops;
    struct Use {
        int dart, line, mark;
    };
    std::map<std::string, std::vector<Use>> uses;
    std::vector<std::string> order;
    for (const auto& r : recs) {
        int v = g.add_node(r.kind);
        for (int k = 0; k < 4; ++k) {
            // file positions 1, 3 hold the under strand; stored slots 0, 2
            const Token& t = r.darts[k];
            auto [it, fresh] = uses.try_emplace(t.label);
            if (fresh) order.push_back(t.label);
            it->second.push_back({GraphDiagram::dart(v, k), r.line, t.mark});
        }
    }
    for (const auto& label : order) {
        const auto& u = uses[label];
        if (u.size() != 2)
            throw ParseError(u.back().line, "label '" + label + "' appears " + std::to_string(u.size()) +
                                                " time" + (u.size() == 1 ? "" : "s") + ", expected 2");
        if (u[0].dart == u[1].dart) throw ParseError(u[0].line, "label '" + label + "' links a dart to itself");
        if (g.oriented) {
            if (u[0].mark == u[1].mark)
                throw ParseError(u[1].line, "label '" + label + "' must appear once as >" + label + " and once as <" +
                                                label);
            const Use& tail = u[0].mark > 0 ? u[0] : u[1];
            const Use& head = u[0].mark > 0 ? u[1] : u[0];
            g.connect_directed(tail.dart, head.dart);
        } else {
            g.connect(u[0].dart, u[1].dart);
        }
    }
    if (g.oriented) {
        for (size_t i = 0; i < recs.size(); ++i) {
            const int v = static_cast<int>(i);
            int outs = 0;
            for (int k = 0; k < 4; ++k) outs += g.out[GraphDiagram::dart(v, k)];
            if (outs != 2) throw ParseError(recs[i].line, "node needs two incoming and two outgoing edges");
            if (recs[i].kind == NodeKind::Crossing) {
                if (g.out[GraphDiagram::dart(v, 0)] == g.out[GraphDiagram::dart(v, 2)] ||
                    g.out[GraphDiagram::dart(v, 1)] == g.out[GraphDiagram::dart(v, 3)])
                    throw ParseError(recs[i].line, "crossing strands must pass straight through");
                const int derived = g.crossing_positive(v) ? 1 : -1;
                if (recs[i].tag_sign != 0 && recs[i].tag_sign != derived)
                    throw ParseError(recs[i].line, std::string("crossing is ") + (derived > 0 ? "positive" : "negative") +
                                                       " but tagged " + (recs[i].tag_sign > 0 ? "X+" : "X-"));
            }
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, e.what());
    }
    return g;
}

GraphDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    return parse_diagram(in);
}

std::string serialize(const GraphDiagram& g) {
    std::vector<int> label(g.dart_count(), -1);
    int next = 0;
    for (int d = 0; d < g.dart_count(); ++d)
        if (label[d] < 0) label[d] = label[g.link[d]] = ++next;
    std::ostringstream os;
    for (int v = 0; v < g.size(); ++v) {
        int shift = 0;
        if (g.kinds[v] == NodeKind::Crossing) {
            if (g.oriented) {
                if (g.out[GraphDiagram::dart(v, 0)]) shift = 2;
                os << (g.crossing_positive(v) ? "X+" : "X-");
            } else {
                os << "X";
            }
        } else {
            os << "V";
        }
        for (int k = 0; k < 4; ++k) {
            int d = GraphDiagram::dart(v, k + shift);
            os << ' ';
            if (g.oriented) os << (g.out[d] ? '>' : '<');
            os << 'e' << label[d];
        }
        os << '\n';
    }
    for (int i = 0; i < g.free_loops; ++i) os << "O\n";
    return os.str();
}

// ---------------------------------------------------------------- isomorphism

namespace {

// Canonical code of the component containing `start`, traversed from the
// given node with the given slot shift.
std::vector<int> component_code(const GraphDiagram& g, int start, int shift) {
    std::vector<int> order(g.size(), -1), rot(g.size(), 0);
    std::vector<int> queue{start};
    order[start] = 0;
    rot[start] = shift;
    std::vector<int> code;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        code.push_back(g.kinds[v] == NodeKind::Crossing ? -1 : -2);
        for (int k = 0; k < 4; ++k) {
            int d = GraphDiagram::dart(v, k + rot[v]);
            int e = g.link[d];
            int w = GraphDiagram::node_of(e);
            if (order[w] < 0) {
                order[w] = static_cast<int>(queue.size());
                // enter the neighbour so that e becomes its slot 0, or slot 0/2
                // parity-preserving for crossings
                int s = GraphDiagram::slot_of(e);
                rot[w] = g.kinds[w] == NodeKind::Crossing ? s - s % 2 : s;
                queue.push_back(w);
            }
            int slot = ((GraphDiagram::slot_of(e) - rot[w]) % 4 + 4) % 4;
            code.push_back(order[w] * 4 + slot);
            if (g.oriented) code.push_back(g.out[d]);
        }
    }
    return code;
}

std::vector<std::vector<int>> canonical_codes(const GraphDiagram& g) {
    int nc = 0;
    std::vector<int> comp = g.components(&nc);
    std::vector<std::vector<int>> best(nc);
    for (int v = 0; v < g.size(); ++v) {
        int step = g.kinds[v] == NodeKind::Crossing ? 2 : 1;
        for (int s = 0; s < 4; s += step) {
            auto c = component_code(g, v, s);
            auto& b = best[comp[v]];
            if (b.empty() || c < b) b = std::move(c);
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

}  // namespace

bool isomorphic(const GraphDiagram& a, const GraphDiagram& b) {
    if (a.oriented != b.oriented || a.size() != b.size() || a.free_loops != b.free_loops) return false;
    return canonical_codes(a) == canonical_codes(b);
}

}  // namespace kvpoly
