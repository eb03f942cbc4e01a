#include "kvpoly/graph.hpp"
#include "kvpoly/invariants.hpp"
#include "kvpoly/moves.hpp"
#include "kvpoly/oracles.hpp"
#include "kvpoly/webfile.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace kvpoly;
namespace orc = kvpoly::oracles;

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool as_q = false;

std::string show(const Scalar& s) { return as_q ? s.q_str() : s.str(); }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphDiagram load_diagram(const std::string& path) {
    try {
        return parse_diagram(read_file(path));
    } catch (const ParseError& e) {
        throw FileParseError(path + ": " + e.what());
    }
}

int parse_int(const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("expected an integer, got '" + s + "'");
    return v;
}

int parse_sign(const std::string& s) {
    if (s == "+" || s == "1" || s == "+1") return 1;
    if (s == "-" || s == "-1") return -1;
    throw UsageError("expected a sign (+ or -), got '" + s + "'");
}

// Invariant selection shared by eval and check-moves.
struct InvariantArgs {
    int color = 2;
    int variant = -1;
    bool unoriented = false;
    bool singular = false;
};

std::function<Scalar(const GraphDiagram&)> invariant(const InvariantArgs& a, const GraphDiagram& g) {
    if (a.unoriented && a.singular) throw UsageError("--unoriented and --singular exclude each other");
    if (a.unoriented) {
        if (a.variant >= 0) throw UsageError("--variant applies to the oriented invariant only");
        const int n = a.color;
        return [n](const GraphDiagram& h) { return kv_unoriented(h.oriented ? unoriented(h) : h, n); };
    }
    if (!g.oriented && g.size()) throw UsageError("diagram has no orientation; pass --unoriented");
    if (a.singular) {
        if (a.variant >= 0) throw UsageError("--variant applies to the oriented invariant only");
        const int m = a.color;
        return [m](const GraphDiagram& h) { return kv_singular(h, m); };
    }
    const int c = a.color, k = a.variant;
    return [c, k](const GraphDiagram& h) { return kv_oriented(h, c, k); };
}

int cmd_eval(const InvariantArgs& a, const std::string& path) {
    GraphDiagram g = load_diagram(path);
    Scalar s = invariant(a, g)(g);
    std::cout << show(s) << "\n";
    if (!s.is_laurent()) {
        std::cerr << "error: value is not a Laurent polynomial\n";
        return kInternal;
    }
    return kOk;
}

int cmd_check_moves(const InvariantArgs& a, int trials, uint64_t seed, const std::string& path) {
    GraphDiagram g = load_diagram(path);
    if (a.unoriented && g.oriented) g = unoriented(g);
    auto f = invariant(a, g);
    const Scalar base = f(g);
    const int cap = g.size() + 4;
    std::mt19937_64 rng(seed);
    int failures = 0;
    for (int t = 1; t <= trials; ++t) {
        auto sites = enumerate_move_sites(g);
        // keep the diagram small: past the cap only moves that do not grow it
        if (g.size() >= cap) {
            std::vector<MoveSpec> keep;
            for (const auto& s : sites)
                if (s.direction == MoveDirection::Undo || s.move == MoveKind::RIII || s.move == MoveKind::RIV_a ||
                    s.move == MoveKind::RIV_b)
                    keep.push_back(s);
            sites.swap(keep);
        }
        if (sites.empty()) {
            std::cout << "trial " << t << ": no applicable move\n";
            break;
        }
        const MoveSpec& m = sites[rng() % sites.size()];
        g = apply_move(g, m);
        Scalar s = f(g);
        if (s == base) {
            std::cout << "trial " << t << ": " << m.str() << " PASS\n";
        } else {
            ++failures;
            std::cout << "trial " << t << ": " << m.str() << " FAIL\n"
                      << "  expected " << show(base) << "\n  got      " << show(s) << "\n  diff     "
                      << show(s - base) << "\n";
        }
    }
    std::cout << (failures ? "FAIL" : "PASS") << " " << failures << " failure" << (failures == 1 ? "" : "s") << "\n";
    return failures ? kInternal : kOk;
}

struct Oracle {
    int arity;
    std::string params;
    std::function<std::string(const std::vector<std::string>&)> run;
};

std::string list(const orc::Expansion& e, const char* index) {
    std::string s;
    for (const auto& [k, c] : e) s += std::string(index) + "=" + std::to_string(k) + ": " + show(c) + "\n";
    return s;
}

const std::map<std::string, Oracle>& oracle_table() {
    using Args = std::vector<std::string>;
    auto I = [](const Args& a, int i) { return parse_int(a[i]); };
    auto S = [](const Args& a, int i) { return parse_sign(a[i]); };
    static const std::map<std::string, Oracle> t = {
        {"loop", {1, "N", [=](const Args& a) { return show(orc::loop_value(I(a, 0))); }}},
        {"double-loop", {1, "N", [=](const Args& a) { return show(orc::double_loop_value(I(a, 0))); }}},
        {"clasp-crossing",
         {3, "N K SIGN", [=](const Args& a) { return show(orc::clasp_crossing_coeff(I(a, 0), I(a, 1), S(a, 2))); }}},
        {"partial-closure",
         {2, "N K", [=](const Args& a) { return show(orc::partial_closure_coeff(I(a, 0), I(a, 1))); }}},
        {"clasp-curl", {2, "N SIGN", [=](const Args& a) { return show(orc::clasp_curl_coeff(I(a, 0), S(a, 1))); }}},
        {"double-clasp-crossing",
         {2, "N SIGN", [=](const Args& a) { return show(orc::double_clasp_crossing_coeff(I(a, 0), S(a, 1))); }}},
        {"vertex-crossing",
         {2, "N SIGN", [=](const Args& a) { return show(orc::vertex_crossing_coeff(I(a, 0), S(a, 1))); }}},
        {"skein", {2, "N SIGN", [=](const Args& a) { return list(orc::colored_skein_coeffs(I(a, 0), S(a, 1)), "k"); }}},
        {"full-twist", {2, "N L", [=](const Args& a) { return list(orc::full_twist_expansion(I(a, 0), I(a, 1)), "k"); }}},
        {"bubble",
         {4, "N M K L",
          [=](const Args& a) { return list(orc::bubble_expansion(I(a, 0), I(a, 1), I(a, 2), I(a, 3)), "t"); }}},
        {"bubble-coeff",
         {5, "N M K L T",
          [=](const Args& a) { return show(orc::bubble_coeff(I(a, 0), I(a, 1), I(a, 2), I(a, 3), I(a, 4))); }}},
        {"st-oriented",
         {3, "K L M", [=](const Args& a) { return show(orc::st_oriented(I(a, 0), I(a, 1), I(a, 2))); }}},
        {"st-unoriented", {2, "L N", [=](const Args& a) { return show(orc::st_unoriented(I(a, 0), I(a, 1))); }}},
    };
    return t;
}

std::string oracle_names() {
    std::string s;
    for (const auto& [name, o] : oracle_table()) s += "  " + name + " " + o.params + "\n";
    return s;
}

const Oracle& find_oracle(const std::string& name, size_t nargs) {
    auto it = oracle_table().find(name);
    if (it == oracle_table().end()) throw UsageError("unknown oracle '" + name + "'; known oracles:\n" + oracle_names());
    if (nargs != static_cast<size_t>(it->second.arity))
        throw UsageError("oracle " + name + " takes " + it->second.params);
    return it->second;
}

int cmd_oracle(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("oracle needs a name; known oracles:\n" + oracle_names());
    std::vector<std::string> params(args.begin() + 1, args.end());
    std::string out = find_oracle(args[0], params.size()).run(params);
    std::cout << out;
    if (out.empty() || out.back() != '\n') std::cout << "\n";
    return kOk;
}

// Oracles that are the value of a closed diagram, with the invariant that
// computes it from the file.
int cmd_compare(const std::vector<std::string>& args) {
    if (args.size() < 2) throw UsageError("compare needs an oracle name, its parameters and a file");
    const std::string& name = args[0];
    const std::string& path = args.back();
    std::vector<std::string> params(args.begin() + 1, args.end() - 1);
    find_oracle(name, params.size());
    GraphDiagram g = load_diagram(path);
    Scalar expected, got;
    if (name == "st-oriented") {
        expected = orc::st_oriented(parse_int(params[0]), parse_int(params[1]), parse_int(params[2]));
        got = kv_singular(g, parse_int(params[2]));
    } else if (name == "st-unoriented") {
        expected = orc::st_unoriented(parse_int(params[0]), parse_int(params[1]));
        got = kv_unoriented(g.oriented ? unoriented(g) : g, parse_int(params[1]));
    } else if (name == "loop") {
        expected = orc::loop_value(parse_int(params[0]));
        got = kv_singular(g, parse_int(params[0]));
    } else if (name == "double-loop") {
        expected = orc::double_loop_value(parse_int(params[0]));
        got = kv_unoriented(g.oriented ? unoriented(g) : g, parse_int(params[0]));
    } else {
        throw UsageError("oracle " + name + " is a local coefficient, not the value of a closed diagram");
    }
    const bool ok = expected == got;
    std::cout << (ok ? "PASS" : "FAIL") << "\n  engine " << show(got) << "\n  oracle " << show(expected) << "\n";
    return ok ? kOk : kInternal;
}

int cmd_reduce(const std::string& path) {
    Assembly a;
    try {
        a = parse_web(read_file(path));
    } catch (const ParseError& e) {
        throw FileParseError(path + ": " + e.what());
    }
    Scalar s = evaluate_closed(a);
    std::cout << show(s) << "\n";
    if (!s.is_laurent()) {
        std::cerr << "error: value is not a Laurent polynomial\n";
        return kInternal;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored A2 invariants of rigid-vertex graph diagrams", "kvpoly"};
    app.require_subcommand(1);
    app.add_flag("--as-q", as_q, "print exponents of q instead of v = q^(1/6)");

    InvariantArgs inv;
    std::string file;
    auto add_invariant_opts = [&](CLI::App* c) {
        c->add_option("--color", inv.color, "edge color")->required();
        c->add_flag("--unoriented", inv.unoriented, "unoriented invariant");
        c->add_flag("--singular", inv.singular, "singular-link invariant (any color)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate the invariant of a diagram file");
    add_invariant_opts(eval);
    eval->add_option("--variant", inv.variant, "ladder size at vertices with adjacent ins (default color/2)");
    eval->add_option("file", file, "diagram file")->required();

    int trials = 20;
    uint64_t seed = 1;
    auto* check = app.add_subcommand("check-moves", "apply random moves and compare invariants");
    add_invariant_opts(check);
    check->add_option("--trials", trials, "number of moves")->check(CLI::NonNegativeNumber);
    check->add_option("--seed", seed, "seed for std::mt19937_64");
    check->add_option("file", file, "diagram file")->required();

    // arguments pass through untouched so that "-" and "-1" work as signs
    auto* oracle = app.add_subcommand("oracle", "print a closed-form value: NAME PARAMS...");
    oracle->prefix_command();
    auto* compare = app.add_subcommand("compare", "compare an engine value with a closed form: NAME PARAMS... FILE");
    compare->prefix_command();
    auto* reduce = app.add_subcommand("reduce", "evaluate a closed trivalent web file");
    reduce->add_option("file", file, "web file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*eval) return cmd_eval(inv, file);
        if (*check) return cmd_check_moves(inv, trials, seed, file);
        if (*oracle) return cmd_oracle(oracle->remaining());
        if (*compare) return cmd_compare(compare->remaining());
        if (*reduce) return cmd_reduce(file);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FileParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
    return kUsage;
}
