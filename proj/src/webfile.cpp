#include "kvpoly/webfile.hpp"

#include "kvpoly/moves.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kvpoly {

namespace {

struct End {
    Port port;
    int line;
};

}  // namespace

Assembly parse_web(std::istream& in) {
    Builder b("");
    std::map<std::string, std::vector<End>> tails, heads;
    std::vector<std::string> order;
    int loops = 0;
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        std::istringstream ls(raw);
        std::string head;
        if (!(ls >> head)) continue;
        std::vector<std::pair<int, std::string>> toks;  // +1 leaving, -1 entering
        std::string tok;
        while (ls >> tok) {
            if (tok.size() < 2 || (tok[0] != '>' && tok[0] != '<'))
                throw ParseError(lineno, "labels must be marked >label or <label, got '" + tok + "'");
            toks.emplace_back(tok[0] == '>' ? 1 : -1, tok.substr(1));
        }
        auto arity = [&](size_t k) {
            if (toks.size() != k)
                throw ParseError(lineno, "expected " + std::to_string(k) + " darts, found " + std::to_string(toks.size()));
        };
        int v = -1;
        std::vector<int> slot_of(toks.size());
        if (head == "O") {
            arity(0);
            ++loops;
            continue;
        } else if (head == "T3s" || head == "T3k") {
            arity(3);
            const int want = head == "T3s" ? 1 : -1;
            for (const auto& [m, l] : toks)
                if (m != want) throw ParseError(lineno, head + " needs every dart marked " + (want > 0 ? ">" : "<"));
            v = want > 0 ? b.source() : b.sink();
            for (int k = 0; k < 3; ++k) slot_of[k] = k;
        } else if (head == "X+" || head == "X-" || head == "X") {
            arity(4);
            if (toks[0].first == toks[2].first || toks[1].first == toks[3].first)
                throw ParseError(lineno, "crossing strands must pass through");
            const int start = toks[0].first < 0 ? 0 : 2;  // under strand entering
            Signs s;
            for (int k = 0; k < 4; ++k) s += toks[(start + k) % 4].first > 0 ? '+' : '-';
            const bool positive = s[1] == '+';
            if ((head == "X+" && !positive) || (head == "X-" && positive))
                throw ParseError(lineno, "crossing tag " + head + " disagrees with its orientation");
            v = b.crossing(s);
            for (int k = 0; k < 4; ++k) slot_of[k] = ((k - start) % 4 + 4) % 4;
        } else {
            throw ParseError(lineno, "unknown record '" + head + "'");
        }
        for (size_t k = 0; k < toks.size(); ++k) {
            const auto& [m, label] = toks[k];
            if (label.empty()) throw ParseError(lineno, "empty label");
            if (!tails.count(label) && !heads.count(label)) order.push_back(label);
            (m > 0 ? tails : heads)[label].push_back({{v, slot_of[k]}, lineno});
        }
    }
    for (const auto& label : order) {
        auto& t = tails[label];
        auto& h = heads[label];
        if (t.size() != 1 || h.size() != 1) {
            int line = 0;
            for (const auto& e : t) line = std::max(line, e.line);
            for (const auto& e : h) line = std::max(line, e.line);
            throw ParseError(line, "label '" + label + "' must appear once as >" + label + " and once as <" + label);
        }
        b.link(t[0].port, h[0].port);
    }
    Assembly a;
    try {
        a = b.finish(Scalar(quantum_int(3)).pow(loops));
    } catch (const std::logic_error& e) {
        throw ParseError(lineno, e.what());
    }
    return a;
}

Assembly parse_web(const std::string& text) {
    std::istringstream in(text);
    return parse_web(in);
}

Diagram web_of_graph(const GraphDiagram& g) {
    if (!g.oriented && g.size()) throw std::invalid_argument("web_of_graph: diagram must be oriented");
    if (g.free_loops) throw std::invalid_argument("web_of_graph: free loops are not supported");
    g.validate();
    Builder b("");
    std::vector<Port> at(g.dart_count());
    for (int v = 0; v < g.size(); ++v) {
        auto out = [&](int s) { return g.out[GraphDiagram::dart(v, s)] != 0; };
        if (g.kinds[v] == NodeKind::Crossing) {
            const int start = out(0) ? 2 : 0;
            Signs s;
            for (int k = 0; k < 4; ++k) s += out(start + k) ? '+' : '-';
            int x = b.crossing(s);
            for (int k = 0; k < 4; ++k) at[GraphDiagram::dart(v, start + k)] = {x, k};
            continue;
        }
        if (g.pattern(v) != VertexPattern::Adjacent)
            throw std::invalid_argument("web_of_graph: vertex " + std::to_string(v) + " has alternating ins");
        int r = 0;
        while (out(r) || out(r + 1)) ++r;
        int k = b.sink(), s = b.source();
        at[GraphDiagram::dart(v, r)] = {k, 0};
        at[GraphDiagram::dart(v, r + 1)] = {k, 1};
        b.link({s, 0}, {k, 2});
        at[GraphDiagram::dart(v, r + 2)] = {s, 1};
        at[GraphDiagram::dart(v, r + 3)] = {s, 2};
    }
    for (int d = 0; d < g.dart_count(); ++d)
        if (g.out[d]) b.link(at[d], at[g.link[d]]);
    return b.finish().diagram;
}

Diagram random_closed_web(uint64_t seed, int size) {
    RandomOptions opts;
    opts.adjacent_only = true;
    return web_of_graph(random_diagram(seed, size, opts));
}

}  // namespace kvpoly
