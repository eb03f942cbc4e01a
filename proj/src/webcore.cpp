#include "kvpoly/webcore.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kvpoly {

// ---------------------------------------------------------------- Diagram

int Diagram::add_vertex(VKind kind, int deg, int tag) {
    Vertex v;
    v.first = static_cast<int32_t>(twin.size());
    v.deg = static_cast<int16_t>(deg);
    v.kind = kind;
    v.tag = tag;
    int id = static_cast<int>(verts.size());
    verts.push_back(v);
    for (int i = 0; i < deg; ++i) {
        twin.push_back(-1);
        owner.push_back(id);
        out.push_back(kind == VKind::Source ? 1 : 0);
    }
    if (kind == VKind::Boundary) boundary = id;
    return id;
}

int Diagram::ccw_next(int d) const {
    const Vertex& v = verts[owner[d]];
    int s = d - v.first + 1;
    return v.first + (s == v.deg ? 0 : s);
}

int Diagram::ccw_prev(int d) const {
    const Vertex& v = verts[owner[d]];
    int s = d - v.first;
    return v.first + (s == 0 ? v.deg - 1 : s - 1);
}

void Diagram::link(int from, int to) {
    twin[from] = to;
    twin[to] = from;
    out[from] = 1;
    out[to] = 0;
}

int Diagram::boundary_dart(int point) const {
    const Vertex& b = verts[boundary];
    return b.first + (b.deg - point) % b.deg;
}

int Diagram::boundary_point(int d) const {
    const Vertex& b = verts[boundary];
    return (b.deg - (d - b.first)) % b.deg;
}

Signs Diagram::boundary_signs() const {
    Signs s;
    for (int i = 0; i < boundary_size(); ++i) s += out[boundary_dart(i)] ? '-' : '+';
    return s;
}

int Diagram::live_vertex_count() const {
    int n = 0;
    for (const auto& v : verts)
        if (v.alive && v.kind != VKind::Boundary) ++n;
    return n;
}

void Diagram::check() const {
    for (size_t v = 0; v < verts.size(); ++v) {
        const Vertex& V = verts[v];
        if (!V.alive) continue;
        for (int s = 0; s < V.deg; ++s) {
            int d = V.first + s;
            int t = twin[d];
            if (t < 0 || t >= static_cast<int>(twin.size())) throw std::logic_error("dart without twin");
            if (twin[t] != d) throw std::logic_error("twin of twin is not identity");
            if (!alive_dart(t)) throw std::logic_error("dart linked to a removed vertex");
            if (out[d] == out[t]) throw std::logic_error("inconsistent edge direction");
        }
        switch (V.kind) {
            case VKind::Sink:
            case VKind::Source:
                if (V.deg != 3) throw std::logic_error("trivalent vertex with wrong degree");
                for (int s = 0; s < 3; ++s)
                    if ((out[V.first + s] != 0) != (V.kind == VKind::Source))
                        throw std::logic_error("sink/source with wrong edge direction");
                break;
            case VKind::Crossing:
                if (V.deg != 4) throw std::logic_error("crossing with wrong degree");
                if (out[V.first] || !out[V.first + 2] || out[V.first + 1] == out[V.first + 3])
                    throw std::logic_error("crossing strands inconsistently directed");
                break;
            default:
                break;
        }
    }
}

int Diagram::euler_defect() const {
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    long V = 0, E = 0, F = 0;
    for (size_t v = 0; v < verts.size(); ++v)
        if (verts[v].alive) ++V;
    std::vector<char> seen(twin.size(), 0);
    for (size_t d = 0; d < twin.size(); ++d) {
        if (!alive_dart(static_cast<int>(d))) continue;
        ++E;
        parent[find(owner[d])] = find(owner[twin[d]]);
        if (seen[d]) continue;
        ++F;
        int x = static_cast<int>(d);
        do {
            seen[x] = 1;
            x = face_next(x);
        } while (x != static_cast<int>(d));
    }
    E /= 2;
    long C = 0;
    for (size_t v = 0; v < verts.size(); ++v)
        if (verts[v].alive && find(static_cast<int>(v)) == static_cast<int>(v)) ++C;
    return static_cast<int>(V - E + F - 2 * C);
}

std::string Diagram::debug_string() const {
    static const char* names[] = {"sink", "source", "crossing", "box", "boundary"};
    std::ostringstream os;
    for (size_t v = 0; v < verts.size(); ++v) {
        const Vertex& V = verts[v];
        if (!V.alive) continue;
        os << v << ' ' << names[static_cast<int>(V.kind)];
        if (V.tag >= 0) os << '#' << V.tag;
        os << " [";
        for (int s = 0; s < V.deg; ++s) {
            int d = V.first + s;
            os << (s ? " " : "") << (out[d] ? '>' : '<') << owner[twin[d]] << '.' << slot_of(twin[d]);
        }
        os << "]\n";
    }
    return os.str();
}

std::vector<Face> faces(const Diagram& d) {
    std::vector<Face> out;
    std::vector<char> seen(d.twin.size(), 0);
    for (size_t s = 0; s < d.twin.size(); ++s) {
        if (seen[s] || !d.alive_dart(static_cast<int>(s))) continue;
        Face f;
        int x = static_cast<int>(s);
        do {
            seen[x] = 1;
            f.darts.push_back(x);
            VKind k = d.verts[d.owner[x]].kind;
            if (k == VKind::Boundary) f.touches_boundary = true;
            if (k != VKind::Sink && k != VKind::Source) f.pure = false;
            x = d.face_next(x);
        } while (x != static_cast<int>(s));
        out.push_back(std::move(f));
    }
    return out;
}

bool is_basis_web(const Diagram& d) {
    for (const auto& v : d.verts)
        if (v.alive && (v.kind == VKind::Crossing || v.kind == VKind::Box))
            throw std::invalid_argument("is_basis_web: diagram contains crossings or boxes");
    for (const auto& f : faces(d))
        if (!f.touches_boundary && f.sides() < 6) return false;
    return true;
}

namespace {

// Rebuilds a diagram keeping only vertices in `order`, with each vertex's
// darts listed as given by `rot` (old dart ids).
Diagram rebuild(const Diagram& d, const std::vector<int>& order, const std::vector<std::vector<int>>& rot) {
    Diagram r;
    std::vector<int32_t> newdart(d.twin.size(), -1);
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& V = d.verts[order[i]];
        r.add_vertex(V.kind, V.deg, V.tag);
        for (int s = 0; s < V.deg; ++s) newdart[rot[i][s]] = r.verts.back().first + s;
    }
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& V = d.verts[order[i]];
        for (int s = 0; s < V.deg; ++s) {
            int od = rot[i][s];
            int nd = r.verts[i].first + s;
            r.twin[nd] = newdart[d.twin[od]];
            r.out[nd] = d.out[od];
        }
    }
    return r;
}

Diagram compacted(const Diagram& d) {
    std::vector<int> order;
    std::vector<std::vector<int>> rot;
    if (d.boundary >= 0) order.push_back(d.boundary);
    for (size_t v = 0; v < d.verts.size(); ++v)
        if (d.verts[v].alive && static_cast<int>(v) != d.boundary) order.push_back(static_cast<int>(v));
    for (int v : order) {
        std::vector<int> r(d.verts[v].deg);
        std::iota(r.begin(), r.end(), d.verts[v].first);
        rot.push_back(std::move(r));
    }
    return rebuild(d, order, rot);
}

struct Splicer {
    std::vector<int32_t> partner;
    std::vector<char> done;

    // `through` pairs darts of removed vertices: the strand arriving at the
    // first continues from the second. Returns the number of closed loops.
    int run(Diagram& g, const std::vector<std::pair<int, int>>& through, std::vector<int>* touched) {
        if (partner.size() < g.twin.size()) {
            partner.resize(g.twin.size(), -1);
            done.resize(g.twin.size(), 0);
        }
        for (auto [p, q] : through) {
            partner[p] = q;
            partner[q] = p;
        }
        int loops = 0;
        for (auto [p, q] : through) {
            if (done[p]) continue;
            done[p] = done[q] = 1;
            bool loop = false;
            int x = g.twin[q];
            while (!g.alive_dart(x)) {
                if (x == p) {
                    loop = true;
                    break;
                }
                int y = partner[x];
                if (y < 0) throw std::logic_error("splice reached an unpaired removed dart");
                done[x] = done[y] = 1;
                x = g.twin[y];
            }
            if (loop) {
                ++loops;
                continue;
            }
            int b = x;
            x = g.twin[p];
            while (!g.alive_dart(x)) {
                int y = partner[x];
                if (y < 0) throw std::logic_error("splice reached an unpaired removed dart");
                done[x] = done[y] = 1;
                x = g.twin[y];
            }
            int a = x;
            g.twin[a] = b;
            g.twin[b] = a;
            if (touched) {
                touched->push_back(g.owner[a]);
                touched->push_back(g.owner[b]);
            }
        }
        for (auto [p, q] : through) {
            partner[p] = partner[q] = -1;
            done[p] = done[q] = 0;
        }
        return loops;
    }
};

thread_local Splicer splicer;

// Inserts `term` (a disk diagram) in place of the 4-valent or box vertex `v`.
int insert_term(Diagram& g, int v, const Diagram& term, std::vector<int>* touched) {
    const int voff = static_cast<int>(g.verts.size());
    const int doff = static_cast<int>(g.twin.size());
    for (const auto& V : term.verts) {
        Diagram::Vertex n = V;
        n.first += doff;
        g.verts.push_back(n);
    }
    for (size_t d = 0; d < term.twin.size(); ++d) {
        g.twin.push_back(term.twin[d] + doff);
        g.owner.push_back(term.owner[d] + voff);
        g.out.push_back(term.out[d]);
    }
    const int tb = term.boundary + voff;
    g.verts[tb].alive = false;
    g.verts[v].alive = false;
    std::vector<std::pair<int, int>> through;
    const int m = g.verts[v].deg;
    if (term.boundary_size() != m) throw std::logic_error("box and term boundary sizes differ");
    for (int i = 0; i < m; ++i) through.emplace_back(g.dart(v, i), term.boundary_dart(i) + doff);
    return splicer.run(g, through, touched);
}

// ---------------------------------------------------------------- reduction

struct RState {
    Diagram g;
    int n2 = 0;  // factors of [2]
    int n3 = 0;  // factors of [3]
    std::vector<int> work;
    std::vector<char> queued;

    void push(int v) {
        if (queued.size() < g.verts.size()) queued.resize(g.verts.size(), 0);
        const auto& V = g.verts[v];
        if (!V.alive || (V.kind != VKind::Sink && V.kind != VKind::Source) || queued[v]) return;
        queued[v] = 1;
        work.push_back(v);
    }
};

bool trivalent(const Diagram& g, int v) {
    VKind k = g.verts[v].kind;
    return k == VKind::Sink || k == VKind::Source;
}

// Finds a reducible face through v; returns its darts (2 or 4) or empty.
bool find_face(const Diagram& g, int v, int fd[4], int& len) {
    int best = 0;
    int cand[4];
    for (int s = 0; s < 3; ++s) {
        int d = g.dart(v, s);
        int x = d, n = 0;
        bool ok = true;
        do {
            if (!trivalent(g, g.owner[x]) || n == 4) {
                ok = false;
                break;
            }
            cand[n++] = x;
            x = g.face_next(x);
        } while (x != d);
        if (!ok) continue;
        if (n == 2) {
            fd[0] = cand[0];
            fd[1] = cand[1];
            len = 2;
            return true;
        }
        if (n == 4 && best == 0) {
            best = 4;
            std::memcpy(fd, cand, sizeof(cand));
        }
    }
    len = best;
    return best != 0;
}

int third_dart(const Diagram& g, int v, int a, int b) {
    for (int s = 0; s < 3; ++s) {
        int d = g.dart(v, s);
        if (d != a && d != b) return d;
    }
    throw std::logic_error("vertex without a third dart");
}

void kill(Diagram& g, int v) { g.verts[v].alive = false; }

void push_touched(RState& s, const std::vector<int>& touched) {
    for (int v : touched) s.push(v);
}

// Fully reduces a state, appending the resulting branches to out.
void reduce_state(RState st, std::vector<RState>& out) {
    std::vector<RState> stack;
    stack.push_back(std::move(st));
    std::vector<int> touched;
    while (!stack.empty()) {
        RState s = std::move(stack.back());
        stack.pop_back();
        bool branched = false;
        while (!s.work.empty()) {
            int v = s.work.back();
            s.work.pop_back();
            s.queued[v] = 0;
            if (!s.g.verts[v].alive) continue;
            int fd[4], len = 0;
            if (!find_face(s.g, v, fd, len)) continue;
            if (len == 2) {
                int u0 = s.g.owner[fd[0]], u1 = s.g.owner[fd[1]];
                int e0 = third_dart(s.g, u0, fd[0], s.g.twin[fd[1]]);
                int e1 = third_dart(s.g, u1, fd[1], s.g.twin[fd[0]]);
                kill(s.g, u0);
                kill(s.g, u1);
                touched.clear();
                s.n3 += splicer.run(s.g, {{e0, e1}}, &touched);
                s.n2 += 1;
                push_touched(s, touched);
                continue;
            }
            int e[4];
            for (int i = 0; i < 4; ++i) {
                int u = s.g.owner[fd[i]];
                e[i] = third_dart(s.g, u, fd[i], s.g.twin[fd[(i + 3) % 4]]);
            }
            RState other = s;
            for (int i = 0; i < 4; ++i) {
                kill(s.g, s.g.owner[fd[i]]);
                kill(other.g, other.g.owner[fd[i]]);
            }
            touched.clear();
            s.n3 += splicer.run(s.g, {{e[0], e[1]}, {e[2], e[3]}}, &touched);
            push_touched(s, touched);
            touched.clear();
            other.n3 += splicer.run(other.g, {{e[1], e[2]}, {e[3], e[0]}}, &touched);
            push_touched(other, touched);
            stack.push_back(std::move(other));
            stack.push_back(std::move(s));
            branched = true;
            break;
        }
        if (!branched) out.push_back(std::move(s));
    }
}

const LaurentPoly& qint_pow(int base, int k) {
    static thread_local std::vector<LaurentPoly> p2{LaurentPoly(1)}, p3{LaurentPoly(1)};
    auto& tab = base == 2 ? p2 : p3;
    while (static_cast<int>(tab.size()) <= k) tab.push_back(tab.back() * quantum_int(base));
    return tab[k];
}

}  // namespace

// ---------------------------------------------------------------- canonical form

Canonical canonicalize(const Diagram& d) {
    const int nv = static_cast<int>(d.verts.size());
    std::vector<int> label(nv, -1), start(nv, 0), order;
    std::vector<int> anchors;
    for (int v = 0; v < nv; ++v) {
        const auto& V = d.verts[v];
        if (!V.alive || V.kind == VKind::Boundary) continue;
        if (V.kind == VKind::Box || V.kind == VKind::Crossing) anchors.push_back(v);
    }
    std::sort(anchors.begin(), anchors.end(), [&](int a, int b) {
        if (d.verts[a].tag != d.verts[b].tag) return d.verts[a].tag < d.verts[b].tag;
        return a < b;
    });
    if (d.boundary >= 0) anchors.insert(anchors.begin(), d.boundary);
    size_t head = 0;
    for (int a : anchors) {
        if (label[a] >= 0) continue;
        label[a] = static_cast<int>(order.size());
        start[a] = 0;
        order.push_back(a);
        while (head < order.size()) {
            int v = order[head++];
            const auto& V = d.verts[v];
            for (int i = 0; i < V.deg; ++i) {
                int dd = V.first + (start[v] + i) % V.deg;
                int t = d.twin[dd];
                int w = d.owner[t];
                if (label[w] >= 0) continue;
                label[w] = static_cast<int>(order.size());
                VKind k = d.verts[w].kind;
                start[w] = (k == VKind::Sink || k == VKind::Source) ? d.slot_of(t) : 0;
                order.push_back(w);
            }
        }
    }
    for (int v = 0; v < nv; ++v)
        if (d.verts[v].alive && label[v] < 0)
            throw std::logic_error("closed web component without anchor survived reduction");
    std::vector<std::vector<int>> rot;
    rot.reserve(order.size());
    for (int v : order) {
        const auto& V = d.verts[v];
        std::vector<int> r(V.deg);
        for (int i = 0; i < V.deg; ++i) r[i] = V.first + (start[v] + i) % V.deg;
        rot.push_back(std::move(r));
    }
    Canonical c;
    c.diagram = rebuild(d, order, rot);
    if (d.boundary >= 0) c.diagram.boundary = 0;
    const Diagram& r = c.diagram;
    std::vector<int32_t> code;
    code.reserve(2 + r.verts.size() * 3 + r.twin.size() * 2);
    code.push_back(static_cast<int32_t>(r.verts.size()));
    for (const auto& V : r.verts) {
        code.push_back(static_cast<int32_t>(V.kind) | (V.deg << 4));
        code.push_back(V.tag);
        for (int s = 0; s < V.deg; ++s) {
            int dd = V.first + s;
            code.push_back(r.twin[dd] * 2 + r.out[dd]);
        }
    }
    c.key.assign(reinterpret_cast<const char*>(code.data()), code.size() * sizeof(int32_t));
    return c;
}

// ---------------------------------------------------------------- WebSum

Scalar WebSum::scalar() const {
    if (!signs.empty()) throw std::logic_error("scalar() on a WebSum with boundary");
    if (terms.empty()) return Scalar(0);
    if (terms.size() != 1 || terms[0].second.live_vertex_count() != 0)
        throw std::logic_error("closed WebSum not fully reduced");
    return terms[0].first;
}

WebSum WebSum::from_scalar(const Scalar& s) {
    WebSum w;
    if (!s.is_zero()) w.terms.emplace_back(s, Diagram());
    return w;
}

namespace {
void merge_terms(WebSum& w) {
    std::map<std::string, size_t> index;
    std::vector<std::pair<Scalar, Diagram>> merged;
    for (auto& [c, d] : w.terms) {
        Canonical k = canonicalize(d);
        auto it = index.find(k.key);
        if (it == index.end()) {
            index.emplace(k.key, merged.size());
            merged.emplace_back(c, std::move(k.diagram));
        } else {
            merged[it->second].first += c;
        }
    }
    std::vector<std::pair<std::string, size_t>> keys(index.begin(), index.end());
    w.terms.clear();
    for (auto& [key, i] : keys)
        if (!merged[i].first.is_zero()) w.terms.push_back(std::move(merged[i]));
}
}  // namespace

WebSum& WebSum::operator+=(const WebSum& o) {
    if (o.terms.empty()) return *this;
    if (terms.empty()) signs = o.signs;
    if (signs != o.signs) throw std::invalid_argument("adding WebSums with different boundaries");
    terms.insert(terms.end(), o.terms.begin(), o.terms.end());
    merge_terms(*this);
    return *this;
}

WebSum WebSum::operator*(const Scalar& s) const {
    WebSum r;
    r.signs = signs;
    if (s.is_zero()) return r;
    for (const auto& [c, d] : terms) r.terms.emplace_back(c * s, d);
    return r;
}

WebSum operator-(const WebSum& a, const WebSum& b) {
    WebSum r = a;
    WebSum nb = b * Scalar(-1);
    if (r.terms.empty()) r.signs = b.signs;
    r += nb;
    return r;
}

bool operator==(const WebSum& a, const WebSum& b) {
    if (a.terms.size() != b.terms.size()) return false;
    if (a.terms.empty()) return true;
    if (a.signs != b.signs) return false;
    std::map<std::string, Scalar> ka;
    for (const auto& [c, d] : a.terms) ka[canonicalize(d).key] += c;
    for (const auto& [c, d] : b.terms) {
        auto it = ka.find(canonicalize(d).key);
        if (it == ka.end() || it->second != c) return false;
    }
    return true;
}

std::string WebSum::debug_string() const {
    std::ostringstream os;
    os << "signs " << signs << ", " << terms.size() << " terms\n";
    for (const auto& [c, d] : terms) os << "coeff " << c.str() << '\n' << d.debug_string();
    return os.str();
}

// ---------------------------------------------------------------- crossings

namespace {
WebSumPtr make_crossing_expansion(bool pos) {
    Signs sg = pos ? "-++-" : "--++";
    // ins a, b consecutive counterclockwise; outs c, d.
    const int a = pos ? 3 : 0, b = pos ? 0 : 1, c = pos ? 1 : 2, d = pos ? 2 : 3;
    WebSum w;
    w.signs = sg;
    {
        Builder bl(sg);
        bl.link(bl.bd(b), bl.bd(c));
        bl.link(bl.bd(a), bl.bd(d));
        w.terms.emplace_back(Scalar::v_pow(pos ? 2 : -2), bl.finish().diagram);
    }
    {
        Builder bl(sg);
        int sk = bl.sink(), sc = bl.source();
        bl.link(bl.bd(a), {sk, 0});
        bl.link(bl.bd(b), {sk, 1});
        bl.link({sc, 2}, {sk, 2});
        bl.link({sc, 0}, bl.bd(c));
        bl.link({sc, 1}, bl.bd(d));
        w.terms.emplace_back(-Scalar::v_pow(pos ? -1 : 1), bl.finish().diagram);
    }
    for (auto& t : w.terms) t.second = canonicalize(t.second).diagram;
    return std::make_shared<const WebSum>(std::move(w));
}
}  // namespace

WebSumPtr crossing_expansion(bool positive) {
    static const WebSumPtr neg = make_crossing_expansion(false), pos = make_crossing_expansion(true);
    return positive ? pos : neg;
}

// ---------------------------------------------------------------- evaluation

namespace {

// Coefficients are numerators over one denominator shared by the whole
// table, so the inner loop only adds Laurent polynomials.
struct StateTable {
    std::unordered_map<std::string, size_t> index;
    std::vector<std::pair<LaurentPoly, Diagram>> items;

    void add(Canonical&& c, const LaurentPoly& coeff) {
        auto [it, fresh] = index.emplace(std::move(c.key), items.size());
        if (fresh)
            items.emplace_back(coeff, std::move(c.diagram));
        else
            items[it->second].first += coeff;
    }
};

void absorb(StateTable& table, RState st, const LaurentPoly& coeff) {
    std::vector<RState> branches;
    reduce_state(std::move(st), branches);
    for (auto& b : branches) {
        LaurentPoly c = coeff;
        if (b.n2 || b.n3) c *= qint_pow(2, b.n2) * qint_pow(3, b.n3);
        if (c.is_zero()) continue;
        table.add(canonicalize(b.g), c);
    }
}

// Greedy expansion order keeping the frontier between expanded and pending
// anchors small.
std::vector<int> expansion_order(const Diagram& g, int ntags) {
    std::vector<std::map<int, int>> adj(ntags);
    std::vector<int> outside(ntags, 0);
    std::vector<int> tag_vertex(ntags, -1);
    for (size_t v = 0; v < g.verts.size(); ++v) {
        const auto& V = g.verts[v];
        if (!V.alive || V.kind != VKind::Box) continue;
        tag_vertex[V.tag] = static_cast<int>(v);
        for (int s = 0; s < V.deg; ++s) {
            const auto& W = g.verts[g.owner[g.twin[V.first + s]]];
            if (W.kind == VKind::Box)
                adj[V.tag][W.tag] += 1;
            else
                outside[V.tag] += 1;
        }
    }
    std::vector<char> done(ntags, 0);
    std::vector<int> order;
    for (int step = 0; step < ntags; ++step) {
        int best = -1;
        long best_delta = 0, best_conn = 0;
        for (int t = 0; t < ntags; ++t) {
            if (done[t] || tag_vertex[t] < 0) continue;
            long to_done = outside[t], to_pending = 0;
            for (auto [u, k] : adj[t]) {
                if (u == t) continue;
                (done[u] ? to_done : to_pending) += k;
            }
            long delta = to_pending - to_done;
            if (best < 0 || delta < best_delta || (delta == best_delta && to_done > best_conn)) {
                best = t;
                best_delta = delta;
                best_conn = to_done;
            }
        }
        if (best < 0) break;
        done[best] = 1;
        order.push_back(best);
    }
    return order;
}

LaurentPoly poly_lcm(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_one()) return b;
    if (b.is_one()) return a;
    return a * *LaurentPoly::divexact(b, poly_gcd(a, b));
}

RState fresh_state(Diagram g) {
    RState s;
    s.g = std::move(g);
    s.queued.assign(s.g.verts.size(), 0);
    for (size_t v = 0; v < s.g.verts.size(); ++v) s.push(static_cast<int>(v));
    return s;
}

}  // namespace

WebSum evaluate(const Assembly& a, EvalStats* stats) {
    Diagram g = a.diagram;
    std::vector<WebSumPtr> items = a.boxes;
    for (auto& V : g.verts) {
        if (!V.alive || V.kind != VKind::Crossing) continue;
        bool pos = g.out[V.first + 1] != 0;
        V.kind = VKind::Box;
        V.tag = static_cast<int>(items.size());
        items.push_back(crossing_expansion(pos));
    }
    for (const auto& V : g.verts)
        if (V.alive && V.kind == VKind::Box && (V.tag < 0 || V.tag >= static_cast<int>(items.size()) || !items[V.tag]))
            throw std::logic_error("box without expansion");
    Signs signs = g.boundary >= 0 ? g.boundary_signs() : Signs();

    StateTable table;
    LaurentPoly den = a.factor.den();
    if (!a.factor.is_zero()) absorb(table, fresh_state(std::move(g)), a.factor.num());
    const std::vector<int> order = expansion_order(table.items.empty() ? Diagram() : table.items[0].second,
                                                   static_cast<int>(items.size()));
    for (int tag : order) {
        StateTable next;
        const WebSum& ws = *items[tag];
        LaurentPoly l = 1;
        for (const auto& t : ws.terms) l = poly_lcm(l, t.first.den());
        std::vector<LaurentPoly> scaled;
        for (const auto& t : ws.terms) scaled.push_back(t.first.num() * *LaurentPoly::divexact(l, t.first.den()));
        den *= l;
        for (auto& [coeff, d] : table.items) {
            if (coeff.is_zero()) continue;
            int bv = -1;
            for (size_t v = 0; v < d.verts.size(); ++v)
                if (d.verts[v].kind == VKind::Box && d.verts[v].tag == tag) bv = static_cast<int>(v);
            if (bv < 0) throw std::logic_error("pending box vanished");
            for (size_t ti = 0; ti < ws.terms.size(); ++ti) {
                const auto& term = ws.terms[ti].second;
                RState s;
                s.g = d;
                std::vector<int> touched;
                s.n3 = insert_term(s.g, bv, term, &touched);
                s.queued.assign(s.g.verts.size(), 0);
                for (int v : touched) s.push(v);
                absorb(next, std::move(s), coeff * scaled[ti]);
                if (stats) stats->expansions++;
            }
        }
        table = std::move(next);
        if (stats) stats->max_states = std::max(stats->max_states, table.items.size());
    }
    // Anchors not reached by the greedy order (components without boxes
    // never occur; this guards against stray tags).
    WebSum w;
    w.signs = signs;
    std::vector<std::pair<std::string, size_t>> keys(table.index.begin(), table.index.end());
    std::sort(keys.begin(), keys.end());
    for (auto& [key, i] : keys) {
        auto& item = table.items[i];
        if (item.first.is_zero()) continue;
        for (const auto& V : item.second.verts)
            if (V.kind == VKind::Box) throw std::logic_error("unexpanded box after evaluation");
        w.terms.emplace_back(Scalar(std::move(item.first), den), std::move(item.second));
    }
    return w;
}

Scalar evaluate_closed(const Assembly& a, EvalStats* stats) {
    if (a.diagram.boundary >= 0) throw std::invalid_argument("evaluate_closed: diagram has a boundary");
    return evaluate(a, stats).scalar();
}

WebSum reduce_in_disk(const Diagram& d) {
    for (const auto& V : d.verts)
        if (V.alive && V.kind == VKind::Box) throw std::invalid_argument("reduce_in_disk: diagram contains boxes");
    Assembly a;
    a.diagram = d;
    return evaluate(a);
}

Scalar reduce_closed(const Diagram& d) {
    if (d.boundary >= 0) throw std::invalid_argument("reduce_closed: diagram has a boundary");
    return reduce_in_disk(d).scalar();
}

WebSum resolve_crossing(const Diagram& d, int c) {
    if (c < 0 || c >= static_cast<int>(d.verts.size()) || !d.verts[c].alive || d.verts[c].kind != VKind::Crossing)
        throw std::invalid_argument("resolve_crossing: not a crossing");
    const WebSum& ws = *crossing_expansion(d.crossing_positive(c));
    WebSum r;
    r.signs = d.boundary >= 0 ? d.boundary_signs() : Signs();
    for (const auto& [tc, term] : ws.terms) {
        Diagram g = d;
        int loops = insert_term(g, c, term, nullptr);
        Scalar k = tc;
        if (loops) k *= Scalar(qint_pow(3, loops));
        r.terms.emplace_back(k, compacted(g));
    }
    return r;
}

namespace {

Scalar random_reduce(Diagram g, std::mt19937_64& rng) {
    // Resolve crossings first, in random order.
    std::vector<int> xs;
    for (size_t v = 0; v < g.verts.size(); ++v)
        if (g.verts[v].alive && g.verts[v].kind == VKind::Crossing) xs.push_back(static_cast<int>(v));
    if (!xs.empty()) {
        int c = xs[rng() % xs.size()];
        const WebSum& ws = *crossing_expansion(g.crossing_positive(c));
        Scalar total;
        for (const auto& [tc, term] : ws.terms) {
            Diagram h = g;
            int loops = insert_term(h, c, term, nullptr);
            Scalar k = tc;
            if (loops) k *= Scalar(qint_pow(3, loops));
            total += k * random_reduce(compacted(h), rng);
        }
        return total;
    }
    std::vector<std::pair<int, std::vector<int>>> sites;
    for (const auto& f : faces(g)) {
        if (!f.pure) continue;
        if (f.sides() == 2 || f.sides() == 4) sites.emplace_back(f.sides(), f.darts);
    }
    if (sites.empty()) {
        if (g.live_vertex_count() != 0) throw std::logic_error("closed web without a reducible face");
        return Scalar(1);
    }
    const auto& site = sites[rng() % sites.size()];
    const auto& fd = site.second;
    if (site.first == 2) {
        int u0 = g.owner[fd[0]], u1 = g.owner[fd[1]];
        int e0 = third_dart(g, u0, fd[0], g.twin[fd[1]]);
        int e1 = third_dart(g, u1, fd[1], g.twin[fd[0]]);
        kill(g, u0);
        kill(g, u1);
        int loops = splicer.run(g, {{e0, e1}}, nullptr);
        Scalar k = Scalar(quantum_int(2));
        if (loops) k *= Scalar(qint_pow(3, loops));
        return k * random_reduce(compacted(g), rng);
    }
    int e[4];
    for (int i = 0; i < 4; ++i) e[i] = third_dart(g, g.owner[fd[i]], fd[i], g.twin[fd[(i + 3) % 4]]);
    Scalar total;
    for (int branch = 0; branch < 2; ++branch) {
        Diagram h = g;
        for (int i = 0; i < 4; ++i) kill(h, h.owner[fd[i]]);
        int loops = branch == 0 ? splicer.run(h, {{e[0], e[1]}, {e[2], e[3]}}, nullptr)
                                : splicer.run(h, {{e[1], e[2]}, {e[3], e[0]}}, nullptr);
        Scalar k(1);
        if (loops) k = Scalar(qint_pow(3, loops));
        total += k * random_reduce(compacted(h), rng);
    }
    return total;
}

}  // namespace

Scalar reduce_closed_randomized(const Diagram& d, std::mt19937_64& rng) {
    if (d.boundary >= 0) throw std::invalid_argument("reduce_closed_randomized: diagram has a boundary");
    return random_reduce(compacted(d), rng);
}

// ---------------------------------------------------------------- Builder

Builder::Builder(const Signs& boundary) {
    if (!boundary.empty()) {
        boundary_ = a_.diagram.add_vertex(VKind::Boundary, static_cast<int>(boundary.size()));
        for (size_t i = 0; i < boundary.size(); ++i) {
            char c = boundary[i];
            if (c != '+' && c != '-') throw std::invalid_argument("boundary signs must be '+' or '-'");
            a_.diagram.out[a_.diagram.boundary_dart(static_cast<int>(i))] = c == '-' ? 1 : 0;
        }
    }
}

int Builder::sink() { return a_.diagram.add_vertex(VKind::Sink, 3); }
int Builder::source() { return a_.diagram.add_vertex(VKind::Source, 3); }

int Builder::box(WebSumPtr ws) {
    if (!ws) throw std::invalid_argument("null box");
    if (ws->signs.empty()) {
        a_.factor *= ws->scalar();
        return -1;
    }
    int tag = static_cast<int>(a_.boxes.size());
    int v = a_.diagram.add_vertex(VKind::Box, static_cast<int>(ws->signs.size()), tag);
    for (size_t i = 0; i < ws->signs.size(); ++i) a_.diagram.out[a_.diagram.dart(v, static_cast<int>(i))] = ws->signs[i] == '+';
    a_.boxes.push_back(std::move(ws));
    if (box_index_.size() <= static_cast<size_t>(v)) box_index_.resize(v + 1, -1);
    box_index_[v] = tag;
    return v;
}

int Builder::crossing(const Signs& slots) {
    if (slots.size() != 4) throw std::invalid_argument("crossing needs four slots");
    int v = a_.diagram.add_vertex(VKind::Crossing, 4);
    for (int i = 0; i < 4; ++i) a_.diagram.out[a_.diagram.dart(v, i)] = slots[i] == '+';
    return v;
}

int Builder::inlined(const Assembly& sub) {
    if (sub.diagram.boundary < 0) {
        a_.factor *= evaluate_closed(sub);
        return -1;
    }
    const Diagram& d = sub.diagram;
    const int m = d.boundary_size();
    int v = a_.diagram.add_vertex(VKind::Box, m, -2);
    for (int i = 0; i < m; ++i) a_.diagram.out[a_.diagram.dart(v, i)] = d.out[d.boundary_dart(i)] ? 0 : 1;
    inlined_.emplace_back(v, sub);
    return v;
}

void Builder::connect(Port a, Port b) {
    const Diagram& g = a_.diagram;
    int x = port_dart(a), y = port_dart(b);
    if (g.out[x] && !g.out[y])
        link(a, b);
    else if (g.out[y] && !g.out[x])
        link(b, a);
    else
        throw std::logic_error("connect: ports have the same orientation");
}

const Signs& Builder::box_signs(int v) const { return a_.boxes.at(box_index_.at(v))->signs; }

int Builder::port_dart(Port p) const {
    const Diagram& g = a_.diagram;
    if (p.v < 0 || p.v >= static_cast<int>(g.verts.size())) throw std::invalid_argument("port on unknown vertex");
    if (p.i < 0 || p.i >= g.verts[p.v].deg) throw std::invalid_argument("port index out of range");
    return p.v == boundary_ ? g.boundary_dart(p.i) : g.dart(p.v, p.i);
}

void Builder::link(Port from, Port to) {
    Diagram& g = a_.diagram;
    int a = port_dart(from), b = port_dart(to);
    if (g.twin[a] >= 0 || g.twin[b] >= 0) throw std::logic_error("port linked twice");
    if (!g.out[a] || g.out[b]) throw std::logic_error("link direction does not match port orientation");
    g.twin[a] = b;
    g.twin[b] = a;
}

Assembly Builder::finish(const Scalar& factor) {
    for (size_t d = 0; d < a_.diagram.twin.size(); ++d)
        if (a_.diagram.twin[d] < 0) throw std::logic_error("unlinked port in assembly");
    if (!inlined_.empty()) {
        int loops = 0;
        for (auto& [v, sub] : inlined_) {
            Diagram d = sub.diagram;
            const int off = static_cast<int>(a_.boxes.size());
            for (auto& V : d.verts)
                if (V.kind == VKind::Box) V.tag += off;
            a_.boxes.insert(a_.boxes.end(), sub.boxes.begin(), sub.boxes.end());
            a_.factor *= sub.factor;
            loops += insert_term(a_.diagram, v, d, nullptr);
        }
        if (loops) a_.factor *= Scalar(qint_pow(3, loops));
        a_.diagram = compacted(a_.diagram);
        inlined_.clear();
    }
    a_.diagram.check();
    if (a_.diagram.euler_defect() != 0) throw std::logic_error("assembly is not planar");
    a_.factor *= factor;
    return a_;
}

WebSum glue(const Diagram& outer, int hole, const WebSum& inner) {
    if (hole < 0 || hole >= static_cast<int>(outer.verts.size()) || outer.verts[hole].kind != VKind::Box)
        throw std::invalid_argument("glue: hole is not a box vertex");
    Assembly a;
    a.diagram = outer;
    const auto& H = outer.verts[hole];
    Signs expect;
    for (int s = 0; s < H.deg; ++s) expect += outer.out[H.first + s] ? '+' : '-';
    if (!inner.terms.empty() && inner.signs != expect) throw std::invalid_argument("glue: signature mismatch");
    for (auto& V : a.diagram.verts)
        if (V.kind == VKind::Box) V.tag = -1;
    a.diagram.verts[hole].tag = 0;
    WebSum in = inner;
    in.signs = expect;
    a.boxes.push_back(std::make_shared<const WebSum>(std::move(in)));
    for (const auto& V : a.diagram.verts)
        if (V.alive && V.kind == VKind::Box && V.tag < 0) throw std::invalid_argument("glue: outer has other boxes");
    return evaluate(a);
}

// ---------------------------------------------------------------- symmetries

Diagram reversed(const Diagram& d) {
    std::vector<int> order;
    std::vector<std::vector<int>> rot;
    for (size_t v = 0; v < d.verts.size(); ++v) {
        const auto& V = d.verts[v];
        if (!V.alive) continue;
        order.push_back(static_cast<int>(v));
        std::vector<int> r(V.deg);
        int shift = V.kind == VKind::Crossing ? 2 : 0;
        for (int s = 0; s < V.deg; ++s) r[s] = V.first + (s + shift) % V.deg;
        rot.push_back(std::move(r));
    }
    Diagram r = rebuild(d, order, rot);
    for (auto& x : r.out) x = !x;
    for (size_t i = 0; i < r.verts.size(); ++i) {
        auto& V = r.verts[i];
        if (V.kind == VKind::Sink)
            V.kind = VKind::Source;
        else if (V.kind == VKind::Source)
            V.kind = VKind::Sink;
        if (V.kind == VKind::Boundary) r.boundary = static_cast<int>(i);
    }
    return r;
}

Diagram mirrored(const Diagram& d) {
    std::vector<int> order;
    std::vector<std::vector<int>> rot;
    for (size_t v = 0; v < d.verts.size(); ++v) {
        const auto& V = d.verts[v];
        if (!V.alive) continue;
        order.push_back(static_cast<int>(v));
        std::vector<int> r(V.deg);
        for (int s = 0; s < V.deg; ++s) r[s] = V.first + (V.deg - s) % V.deg;
        rot.push_back(std::move(r));
    }
    Diagram r = rebuild(d, order, rot);
    for (size_t i = 0; i < r.verts.size(); ++i)
        if (r.verts[i].kind == VKind::Boundary) r.boundary = static_cast<int>(i);
    return r;
}

Diagram rotated(const Diagram& d, int k) {
    if (d.boundary < 0) return d;
    const int m = d.boundary_size();
    k = ((k % m) + m) % m;
    std::vector<int> order;
    std::vector<std::vector<int>> rot;
    for (size_t v = 0; v < d.verts.size(); ++v) {
        const auto& V = d.verts[v];
        if (!V.alive) continue;
        order.push_back(static_cast<int>(v));
        std::vector<int> r(V.deg);
        for (int s = 0; s < V.deg; ++s)
            r[s] = static_cast<int>(v) == d.boundary ? V.first + ((s - k) % m + m) % m : V.first + s;
        rot.push_back(std::move(r));
    }
    Diagram r = rebuild(d, order, rot);
    for (size_t i = 0; i < r.verts.size(); ++i)
        if (r.verts[i].kind == VKind::Boundary) r.boundary = static_cast<int>(i);
    return r;
}

namespace {
template <class F>
WebSum map_terms(const WebSum& w, Signs signs, F f) {
    WebSum r;
    r.signs = std::move(signs);
    for (const auto& [c, d] : w.terms) r.terms.emplace_back(c, canonicalize(f(d)).diagram);
    return r;
}
}  // namespace

WebSum reversed(const WebSum& w) {
    Signs s = w.signs;
    for (auto& c : s) c = c == '+' ? '-' : '+';
    return map_terms(w, s, [](const Diagram& d) { return reversed(d); });
}

WebSum mirrored(const WebSum& w) {
    const size_t m = w.signs.size();
    Signs s = w.signs;
    for (size_t j = 0; j < m; ++j) s[j] = w.signs[(m - j) % m];
    return map_terms(w, s, [](const Diagram& d) { return mirrored(d); });
}

WebSum rotated(const WebSum& w, int k) {
    const int m = static_cast<int>(w.signs.size());
    if (m == 0) return w;
    k = ((k % m) + m) % m;
    Signs s = w.signs;
    for (int j = 0; j < m; ++j) s[j] = w.signs[(j + k) % m];
    return map_terms(w, s, [k](const Diagram& d) { return rotated(d, k); });
}

}  // namespace kvpoly
