#include "kvpoly/moves.hpp"

#include <array>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace kvpoly {

namespace {

using G = GraphDiagram;

[[noreturn]] void mismatch(const char* what) { throw std::invalid_argument(std::string("move site mismatch: ") + what); }

// Local picture for a rewrite. Ext points are the darts where the picture
// meets the rest of the diagram: a dart of a removed node whose partner stays
// outside, or an outside dart whose edge is cut open. Node entries are ext
// indices (>= 0) or internal edges encoded as -(id + 1); each internal id
// appears twice. `straight` joins two ext points directly.
struct Local {
    struct Ext {
        int dart;
        bool region;
    };
    std::vector<int> removed;
    std::vector<Ext> ext;
    std::vector<std::pair<NodeKind, std::array<int, 4>>> nodes;
    std::vector<std::pair<int, int>> straight;
};

constexpr int in(int id) { return -(id + 1); }

std::array<int, 4> turned(const std::array<int, 4>& a) { return {a[1], a[2], a[3], a[0]}; }

G rewrite(const G& g, const Local& L) {
    const int m = static_cast<int>(L.ext.size());
    std::vector<char> gone(g.size(), 0);
    for (int v : L.removed) gone[v] = 1;
    std::map<int, int> ext_at;
    for (int k = 0; k < m; ++k)
        if (L.ext[k].region) ext_at[L.ext[k].dart] = k;

    struct Out {
        bool ext;
        int v;
    };
    auto outside = [&](int k) -> Out {
        if (!L.ext[k].region) return {false, L.ext[k].dart};
        int p = g.link[L.ext[k].dart];
        if (auto it = ext_at.find(p); it != ext_at.end()) return {true, it->second};
        if (gone[G::node_of(p)]) throw std::logic_error("rewrite: region dart linked inside the region");
        return {false, p};
    };

    G h = g;
    const int base = h.size();
    for (const auto& [kind, entries] : L.nodes) h.add_node(kind);
    std::vector<int> inside_new(m, -1), partner(m, -1);
    // a new dart at a region ext point inherits the direction of the old end
    std::vector<char> preset(h.dart_count(), 0);
    std::map<int, std::vector<int>> inner;
    for (size_t i = 0; i < L.nodes.size(); ++i)
        for (int s = 0; s < 4; ++s) {
            int e = L.nodes[i].second[s];
            int d = G::dart(base + static_cast<int>(i), s);
            if (e >= 0) {
                inside_new[e] = d;
                if (L.ext[e].region) {
                    h.out[d] = g.out[L.ext[e].dart];
                    preset[d] = 1;
                }
            } else {
                inner[e].push_back(d);
            }
        }
    for (const auto& [id, ds] : inner) {
        if (ds.size() != 2) throw std::logic_error("rewrite: internal edge used " + std::to_string(ds.size()) + " times");
        h.connect(ds[0], ds[1]);
    }
    for (auto [a, b] : L.straight) {
        partner[a] = b;
        partner[b] = a;
    }
    for (int k = 0; k < m; ++k)
        if ((inside_new[k] >= 0) == (partner[k] >= 0)) throw std::logic_error("rewrite: ext point attached twice or never");

    std::vector<char> seen(m, 0);
    // From ext point k heading outward, the dart where the strand lands.
    auto land = [&](int k) {
        for (;;) {
            seen[k] = 1;
            Out o = outside(k);
            if (!o.ext) return o.v;
            seen[o.v] = 1;
            if (inside_new[o.v] >= 0) return inside_new[o.v];
            k = partner[o.v];
        }
    };
    for (int k = 0; k < m; ++k)
        if (inside_new[k] >= 0 && !seen[k]) h.connect(inside_new[k], land(k));
    for (int k = 0; k < m; ++k) {
        if (seen[k] || partner[k] < 0) continue;
        Out o = outside(k);
        if (o.ext) continue;
        seen[k] = 1;
        h.connect(o.v, land(partner[k]));
    }
    for (int k = 0; k < m; ++k) {
        if (seen[k]) continue;
        // closed strand made only of straight pieces and outer ext-ext edges
        int j = k;
        do {
            seen[j] = 1;
            int o = outside(j).v;
            seen[o] = 1;
            j = partner[o];
        } while (!seen[j]);
        ++h.free_loops;
    }

    // drop removed nodes
    std::vector<int> idx(h.size(), -1);
    G r;
    r.oriented = h.oriented;
    r.free_loops = h.free_loops;
    for (int v = 0; v < h.size(); ++v)
        if (v >= static_cast<int>(gone.size()) || !gone[v]) idx[v] = r.add_node(h.kinds[v]);
    std::vector<char> known(4 * r.size(), 0);
    for (int v = 0; v < h.size(); ++v) {
        if (idx[v] < 0) continue;
        for (int s = 0; s < 4; ++s) {
            int d = G::dart(v, s), e = h.link[d];
            if (idx[G::node_of(e)] < 0) throw std::logic_error("rewrite: dangling link");
            int nd = G::dart(idx[v], s);
            r.link[nd] = G::dart(idx[G::node_of(e)], G::slot_of(e));
            r.out[nd] = h.out[d];
            known[nd] = v < base || preset[d];
        }
    }
    if (r.oriented) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int d = 0; d < r.dart_count(); ++d) {
                if (known[d]) continue;
                int from = -1;
                if (known[r.link[d]]) from = r.link[d];
                else if (r.kinds[G::node_of(d)] == NodeKind::Crossing && known[G::turn(d, 2)]) from = G::turn(d, 2);
                if (from < 0) continue;
                r.out[d] = !r.out[from];
                known[d] = 1;
                changed = true;
            }
        }
        for (int d = 0; d < r.dart_count(); ++d)
            if (!known[d]) throw std::logic_error("rewrite: orientation did not propagate");
    }
    r.validate();
    return r;
}

std::vector<int> face_orbit(const G& g, int d) {
    std::vector<int> f;
    int e = d;
    do {
        f.push_back(e);
        e = g.face_next(e);
    } while (e != d);
    return f;
}

bool odd(int s) { return G::slot_of(s) % 2 == 1; }

// ---------------------------------------------------------------- RI

struct Kinks {
    int k1 = -1, entry = 0, side = 0, k2 = -1, entry2 = 0;
};

// A kink entered at dart a: the strand passes through, loops back into the
// adjacent slot and leaves at entry + side.
bool kink_side(const G& g, int a, int* side) {
    int v = G::node_of(a);
    if (g.kinds[v] != NodeKind::Crossing) return false;
    for (int s : {1, -1}) {
        int loop = G::turn(a, 2);
        if (g.link[loop] == G::turn(a, 2 + s) && g.link[a] != G::turn(a, s)) {
            *side = s;
            return true;
        }
    }
    return false;
}

bool find_kinks(const G& g, int a, Kinks& K) {
    int s1 = 0;
    if (!kink_side(g, a, &s1)) return false;
    int exit = G::turn(a, s1);
    int b = g.link[exit];
    if (G::node_of(b) == G::node_of(a)) return false;
    int s2 = 0;
    if (!kink_side(g, b, &s2) || s2 != s1) return false;
    if (odd(a) == odd(b)) return false;
    K = {G::node_of(a), a, s1, G::node_of(b), b};
    return true;
}

G ri_apply(const G& g, int d, int option) {
    if (d < 0 || d >= g.dart_count()) mismatch("RI dart out of range");
    const int side = option & 1 ? -1 : 1;
    const bool first_over = option & 2;
    Local L;
    L.ext = {{d, false}, {g.link[d], false}};
    auto kink = [&](int entry, int to_prev, int to_next, int loop_id) {
        std::array<int, 4> e{};
        e[entry] = to_prev;
        e[(entry + side + 4) % 4] = to_next;
        e[(entry + 2) % 4] = in(loop_id);
        e[(entry + 2 + side + 4) % 4] = in(loop_id);
        return e;
    };
    const int i1 = first_over ? 1 : 0, i2 = first_over ? 0 : 1;
    L.nodes.push_back({NodeKind::Crossing, kink(i1, 0, in(0), 1)});
    L.nodes.push_back({NodeKind::Crossing, kink(i2, in(0), 1, 2)});
    return rewrite(g, L);
}

G ri_undo(const G& g, int a) {
    Kinks K;
    if (a < 0 || a >= g.dart_count() || !find_kinks(g, a, K)) mismatch("no cancelling kink pair at RI site");
    Local L;
    L.removed = {K.k1, K.k2};
    L.ext = {{a, true}, {G::turn(K.entry2, K.side), true}};
    L.straight = {{0, 1}};
    return rewrite(g, L);
}

// ---------------------------------------------------------------- RII

G rii_apply(const G& g, int d, int f, int option) {
    if (d < 0 || f < 0 || d >= g.dart_count() || f >= g.dart_count()) mismatch("RII dart out of range");
    const int e = g.link[d], h = g.link[f];
    if (f == d || f == e) mismatch("RII needs two different edges");
    bool same_face = false;
    for (int x : face_orbit(g, d)) same_face |= x == f;
    if (!same_face) mismatch("RII edges do not share a face");
    // ext 0..3: d, e, f, h. The edge of d is pushed across the edge of f,
    // making crossings A then B along it.
    Local L;
    L.ext = {{d, false}, {e, false}, {f, false}, {h, false}};
    std::array<int, 4> A{in(0), in(1), 3, 0};  // east, north, west, south
    std::array<int, 4> B{2, in(1), in(0), 1};
    if (option == 1) {
        A = turned(A);
        B = turned(B);
    }
    L.nodes = {{NodeKind::Crossing, A}, {NodeKind::Crossing, B}};
    return rewrite(g, L);
}

bool bigon(const G& g, int a, int* b) {
    int x = g.face_next(a);
    if (g.face_next(x) != a || x == a) return false;
    int A = G::node_of(a), B = G::node_of(x);
    if (A == B || g.kinds[A] != NodeKind::Crossing || g.kinds[B] != NodeKind::Crossing) return false;
    // edge a -> B.(tb+1) must have the same layer at both ends
    if (odd(a) != odd(G::turn(x, 1))) return false;
    *b = x;
    return true;
}

G rii_undo(const G& g, int a) {
    int b = -1;
    if (a < 0 || a >= g.dart_count() || !bigon(g, a, &b)) mismatch("no removable bigon at RII site");
    Local L;
    L.removed = {G::node_of(a), G::node_of(b)};
    L.ext = {{G::turn(a, 2), true}, {G::turn(b, 3), true}, {G::turn(a, 3), true}, {G::turn(b, 2), true}};
    L.straight = {{0, 1}, {2, 3}};
    return rewrite(g, L);
}

// ---------------------------------------------------------------- triangles

struct Tri {
    std::array<int, 3> node{}, t{};
};

bool triangle(const G& g, int a, Tri& T) {
    auto f = face_orbit(g, a);
    if (f.size() != 3) return false;
    for (int i = 0; i < 3; ++i) {
        T.node[i] = G::node_of(f[i]);
        T.t[i] = G::slot_of(f[i]);
    }
    return T.node[0] != T.node[1] && T.node[1] != T.node[2] && T.node[0] != T.node[2];
}

// Side i runs from node i (slot t_i) to node i+1 (slot t_{i+1} + 1).
bool side_over_at_start(const Tri& T, int i) { return T.t[i] % 2 == 1; }
bool side_over_at_end(const Tri& T, int i) { return (T.t[(i + 1) % 3] + 1) % 2 == 1; }

std::vector<Local::Ext> triangle_ext(const Tri& T) {
    std::vector<Local::Ext> e;
    for (int i = 0; i < 3; ++i) {
        e.push_back({G::dart(T.node[i], T.t[i] + 2), true});
        e.push_back({G::dart(T.node[i], T.t[i] + 3), true});
    }
    return e;
}

bool riii_site(const G& g, int a, Tri& T) {
    if (a < 0 || a >= g.dart_count() || !triangle(g, a, T)) return false;
    for (int v : T.node)
        if (g.kinds[v] != NodeKind::Crossing) return false;
    for (int i = 0; i < 3; ++i)
        if (side_over_at_start(T, i) && side_over_at_end(T, i)) return true;
    return false;
}

G riii(const G& g, int a) {
    Tri T;
    if (!riii_site(g, a, T)) mismatch("no RIII triangle at site");
    Local L;
    L.removed = {T.node[0], T.node[1], T.node[2]};
    L.ext = triangle_ext(T);
    // strand i joins ext 2i and 2i+3; the new crossing of strands i and i+1
    // sits near ext 2i and lists strand i first
    std::array<int, 4> m01{0, in(0), in(1), 5}, m12{2, in(2), in(0), 1}, m20{4, in(1), in(2), 3};
    // strand 0 over strand 1 was decided at node 1, and so on
    if (side_over_at_end(T, 0)) m01 = turned(m01);
    if (side_over_at_end(T, 1)) m12 = turned(m12);
    if (side_over_at_end(T, 2)) m20 = turned(m20);
    L.nodes = {{NodeKind::Crossing, m01}, {NodeKind::Crossing, m12}, {NodeKind::Crossing, m20}};
    return rewrite(g, L);
}

// Triangle with the vertex first; returns +1 when the far side passes over
// both crossings, -1 under both, 0 otherwise.
int riv_site(const G& g, int a, Tri& T) {
    if (a < 0 || a >= g.dart_count() || !triangle(g, a, T)) return 0;
    if (g.kinds[T.node[0]] != NodeKind::Vertex || g.kinds[T.node[1]] != NodeKind::Crossing ||
        g.kinds[T.node[2]] != NodeKind::Crossing)
        return 0;
    bool s = side_over_at_start(T, 1), e = side_over_at_end(T, 1);
    if (s != e) return 0;
    return s ? 1 : -1;
}

G riv(const G& g, int a, bool over) {
    Tri T;
    int r = riv_site(g, a, T);
    if (r == 0 || (r > 0) != over) mismatch("no RIV triangle of this kind at site");
    Local L;
    L.removed = {T.node[0], T.node[1], T.node[2]};
    L.ext = triangle_ext(T);
    // the vertex keeps its legs toward ext 3, 4 and now reaches ext 0, 1
    // through the moved strand (ext 2 to ext 5)
    std::array<int, 4> v{3, 4, in(0), in(1)};
    std::array<int, 4> x{in(0), 5, 0, in(2)};
    std::array<int, 4> y{in(1), in(2), 1, 2};
    if (!over) {
        x = turned(x);
        y = turned(y);
    }
    L.nodes = {{NodeKind::Vertex, v}, {NodeKind::Crossing, x}, {NodeKind::Crossing, y}};
    return rewrite(g, L);
}

// ---------------------------------------------------------------- RV

G rv_apply(const G& g, int a, bool upper_over) {
    if (a < 0 || a >= g.dart_count() || g.kinds[G::node_of(a)] != NodeKind::Vertex) mismatch("RV needs a vertex");
    Local L;
    L.removed = {G::node_of(a)};
    for (int k = 0; k < 4; ++k) L.ext.push_back({G::turn(a, k), true});
    // legs of the turned vertex, counterclockwise: toward ext 0 and 3 on the
    // near side, 2 and 1 beyond; each neighbouring pair crosses once
    std::array<int, 4> v{in(0), in(1), in(2), in(3)};
    std::array<int, 4> x{1, in(0), in(3), 0};
    std::array<int, 4> y{in(1), 2, 3, in(2)};
    if (upper_over) x = turned(x);
    else y = turned(y);
    L.nodes = {{NodeKind::Vertex, v}, {NodeKind::Crossing, x}, {NodeKind::Crossing, y}};
    return rewrite(g, L);
}

struct Turned {
    int x = -1, k = 0, y = -1, m = 0;
    bool upper_over = false;
};

bool turned_vertex(const G& g, int a, Turned& R) {
    if (a < 0 || a >= g.dart_count()) return false;
    int v = G::node_of(a);
    if (g.kinds[v] != NodeKind::Vertex) return false;
    int l0 = g.link[a], l1 = g.link[G::turn(a, 1)], l2 = g.link[G::turn(a, 2)], l3 = g.link[G::turn(a, 3)];
    int X = G::node_of(l0), Y = G::node_of(l2);
    if (X == v || Y == v || X == Y || G::node_of(l1) != X || G::node_of(l3) != Y) return false;
    if (g.kinds[X] != NodeKind::Crossing || g.kinds[Y] != NodeKind::Crossing) return false;
    if (l0 != G::turn(l1, 1) || l2 != G::turn(l3, 1)) return false;
    // leg a at X and leg a+3 at Y share their layer
    if (odd(l0) != odd(l3)) return false;
    R = {X, G::slot_of(l1), Y, G::slot_of(l3), odd(l0)};
    return true;
}

G rv_undo(const G& g, int a, bool upper_over) {
    Turned R;
    if (!turned_vertex(g, a, R) || R.upper_over != upper_over) mismatch("no turned vertex of this kind at RV site");
    Local L;
    L.removed = {G::node_of(a), R.x, R.y};
    L.ext = {{G::dart(R.x, R.k + 2), true},
             {G::dart(R.x, R.k + 3), true},
             {G::dart(R.y, R.m + 2), true},
             {G::dart(R.y, R.m + 3), true}};
    L.nodes = {{NodeKind::Vertex, {0, 1, 2, 3}}};
    return rewrite(g, L);
}

uint64_t below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Rotates the slots of node v by k (new slot s is old slot s + k).
void rotate_node(G& g, int v, int k) {
    auto perm = [&](int d) {
        if (G::node_of(d) != v) return d;
        return G::dart(v, G::slot_of(d) - k);
    };
    std::vector<int> link(g.link.size());
    std::vector<uint8_t> out(g.out.size());
    for (int d = 0; d < g.dart_count(); ++d) {
        link[perm(d)] = perm(g.link[d]);
        out[perm(d)] = g.out[d];
    }
    g.link = std::move(link);
    g.out = std::move(out);
}

}  // namespace

const char* move_name(MoveKind k) {
    switch (k) {
        case MoveKind::RI: return "RI";
        case MoveKind::RII: return "RII";
        case MoveKind::RIII: return "RIII";
        case MoveKind::RIV_a: return "RIV_a";
        case MoveKind::RIV_b: return "RIV_b";
        case MoveKind::RV_a: return "RV_a";
        case MoveKind::RV_b: return "RV_b";
    }
    return "?";
}

std::string MoveSpec::str() const {
    std::ostringstream os;
    os << move_name(move) << (direction == MoveDirection::Apply ? " apply" : " undo") << " at";
    for (int d : site) os << ' ' << d;
    if (option) os << " option " << option;
    return os.str();
}

GraphDiagram apply_move(const GraphDiagram& g, const MoveSpec& s) {
    auto need = [&](size_t n) {
        if (s.site.size() != n) mismatch("wrong number of site darts");
    };
    const bool apply = s.direction == MoveDirection::Apply;
    switch (s.move) {
        case MoveKind::RI:
            need(1);
            return apply ? ri_apply(g, s.site[0], s.option) : ri_undo(g, s.site[0]);
        case MoveKind::RII:
            if (apply) {
                need(2);
                return rii_apply(g, s.site[0], s.site[1], s.option);
            }
            need(1);
            return rii_undo(g, s.site[0]);
        case MoveKind::RIII:
            need(1);
            return riii(g, s.site[0]);
        case MoveKind::RIV_a:
        case MoveKind::RIV_b:
            need(1);
            return riv(g, s.site[0], s.move == MoveKind::RIV_a);
        case MoveKind::RV_a:
        case MoveKind::RV_b:
            need(1);
            return apply ? rv_apply(g, s.site[0], s.move == MoveKind::RV_a)
                         : rv_undo(g, s.site[0], s.move == MoveKind::RV_a);
    }
    mismatch("unknown move");
}

std::vector<MoveSpec> enumerate_move_sites(const GraphDiagram& g) {
    using D = MoveDirection;
    std::vector<MoveSpec> res;
    for (int d = 0; d < g.dart_count(); ++d)
        if (d < g.link[d])
            for (int o = 0; o < 4; ++o) res.push_back({MoveKind::RI, D::Apply, {d}, o});
    Kinks K;
    for (int d = 0; d < g.dart_count(); ++d)
        if (find_kinks(g, d, K)) res.push_back({MoveKind::RI, D::Undo, {d}, 0});
    auto fs = g.faces();
    for (const auto& f : fs)
        for (size_t i = 0; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j) {
                if (f[j] == g.link[f[i]]) continue;
                for (int o = 0; o < 2; ++o) res.push_back({MoveKind::RII, D::Apply, {f[i], f[j]}, o});
            }
    int b = -1;
    Tri T;
    for (const auto& f : fs) {
        if (f.size() == 2 && bigon(g, f[0], &b)) res.push_back({MoveKind::RII, D::Undo, {f[0]}, 0});
        if (f.size() != 3) continue;
        if (riii_site(g, f[0], T)) res.push_back({MoveKind::RIII, D::Apply, {f[0]}, 0});
        for (int a : f)
            if (int r = riv_site(g, a, T))
                res.push_back({r > 0 ? MoveKind::RIV_a : MoveKind::RIV_b, D::Apply, {a}, 0});
    }
    Turned R;
    for (int v = 0; v < g.size(); ++v) {
        if (g.kinds[v] != NodeKind::Vertex) continue;
        for (int s = 0; s < 2; ++s) {
            int a = G::dart(v, s);
            res.push_back({MoveKind::RV_a, D::Apply, {a}, 0});
            res.push_back({MoveKind::RV_b, D::Apply, {a}, 0});
            if (turned_vertex(g, a, R))
                res.push_back({R.upper_over ? MoveKind::RV_a : MoveKind::RV_b, D::Undo, {a}, 0});
        }
    }
    return res;
}

GraphDiagram random_diagram(uint64_t seed, int size, const RandomOptions& o) {
    std::mt19937_64 rng(seed);
    G g;
    g.oriented = o.oriented;
    if (size <= 0) {
        g.free_loops = 1;
        return g;
    }
    auto kind = [&] { return unit(rng) < o.vertex_fraction ? NodeKind::Vertex : NodeKind::Crossing; };
    g.add_node(kind());
    g.connect(0, 1);
    g.connect(2, 3);
    while (g.size() < size) {
        auto fs = g.faces();
        const auto& f = fs[below(rng, fs.size())];
        if (f.size() < 2) continue;
        int d = f[below(rng, f.size())], x = f[below(rng, f.size())];
        if (x == d || x == g.link[d]) continue;
        int e = g.link[d], h = g.link[x];
        int v = g.add_node(kind());
        g.connect(G::dart(v, 0), e);
        g.connect(G::dart(v, 1), x);
        g.connect(G::dart(v, 2), h);
        g.connect(G::dart(v, 3), d);
    }
    for (int v = 0; v < g.size(); ++v)
        if (g.kinds[v] == NodeKind::Crossing && below(rng, 2)) rotate_node(g, v, 1);
    if (o.oriented) {
        // strands pair the slots of every node; crossings and straight-through
        // vertices pair opposite slots
        std::vector<int> pair(g.dart_count());
        for (int v = 0; v < g.size(); ++v) {
            int style = g.kinds[v] == NodeKind::Crossing || o.adjacent_only ? 0 : static_cast<int>(below(rng, 3));
            static constexpr int kPair[3][4] = {{2, 3, 0, 1}, {1, 0, 3, 2}, {3, 2, 1, 0}};
            for (int s = 0; s < 4; ++s) pair[G::dart(v, s)] = G::dart(v, kPair[style][s]);
        }
        std::vector<char> done(g.dart_count(), 0);
        for (int d0 = 0; d0 < g.dart_count(); ++d0) {
            if (done[d0]) continue;
            int x = below(rng, 2) ? d0 : pair[d0];
            const int start = x;
            do {
                g.out[x] = 1;
                done[x] = 1;
                int y = g.link[x];
                g.out[y] = 0;
                done[y] = 1;
                x = pair[y];
            } while (x != start);
        }
    }
    g.validate();
    return g;
}

}  // namespace kvpoly
