#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loclab/graph.hpp"
#include "loclab/graph_ops.hpp"

namespace loclab {

using Label = std::int64_t;
using Labeling = std::vector<Label>;

// Edge inside an extracted ball. Ports index the endpoints' adjacency lists
// in the ORIGINAL graph, so per-port labels (orientation vectors) stay
// meaningful even when a ball vertex is missing some of its neighbors.
struct BallEdge {
    int a = 0, b = 0;       // ball-local endpoints
    int port_a = 0, port_b = 0;
    int color = 0;          // input edge color, 0 if absent
};

struct LabeledBall {
    int center = 0;
    std::vector<Vertex> orig;   // ball index -> original vertex
    std::vector<int> degree;    // original degrees
    std::vector<Label> labels;
    std::vector<BallEdge> edges;

    // neighbors of the center, as (ball index, edge) pairs
    std::vector<std::pair<int, const BallEdge*>> center_edges() const {
        std::vector<std::pair<int, const BallEdge*>> out;
        for (const auto& e : edges) {
            if (e.a == center) out.push_back({e.b, &e});
            else if (e.b == center) out.push_back({e.a, &e});
        }
        return out;
    }
};

struct Violation {
    Vertex center = 0;
    std::string reason;
    std::vector<Vertex> witness;
};

// A locally checkable labeling: radius, alphabet membership, and an
// acceptance predicate over the centered labeled ball. The ball predicate is
// the ground truth; there are no per-problem verifier code paths.
struct LclProblem {
    std::string name;
    int radius = 1;
    std::function<bool(Label, int degree)> in_alphabet;
    std::function<bool(const LabeledBall&)> accepts;
    // empty string = instance fine; otherwise reason for up-front rejection
    std::function<std::string(const Graph&)> instance_check;
    // short reason used in Violation when the predicate rejects
    std::function<std::string(const LabeledBall&)> explain;
    // text form of a label (labeling file format); decimal by default
    std::function<std::string(Label, int degree)> format_label;
    std::function<Label(const std::string&, int degree)> parse_label;
};

inline LabeledBall extract_labeled_ball(const Graph& g, Vertex v, int r, const Labeling& lab) {
    auto b = ball(g, v, r);
    LabeledBall out;
    out.center = b.center;
    out.orig = b.orig;
    int bn = b.graph.n();
    out.degree.resize(bn);
    out.labels.resize(bn);
    for (int i = 0; i < bn; ++i) {
        out.degree[i] = g.degree(out.orig[i]);
        out.labels[i] = lab[out.orig[i]];
    }
    for (const auto& e : b.graph.edges()) {
        Vertex ou = out.orig[e.u], ov = out.orig[e.v];
        BallEdge be;
        be.a = e.u;
        be.b = e.v;
        be.port_a = g.port_of(ou, ov);
        be.port_b = g.port_of(ov, ou);
        be.color = g.has_edge_colors() ? g.edge_color(ou, ov) : 0;
        out.edges.push_back(be);
    }
    return out;
}

// Every violating center appears exactly once; empty result iff legal.
inline std::vector<Violation> verify(const Graph& g, const LclProblem& p, const Labeling& lab) {
    if (p.instance_check) {
        std::string why = p.instance_check(g);
        require(why.empty(), "verify: instance rejected: " + why);
    }
    require(int(lab.size()) == g.n(), "verify: labeling does not cover all vertices");
    for (Vertex v = 0; v < g.n(); ++v)
        require(p.in_alphabet(lab[v], g.degree(v)),
                "verify: label outside alphabet at vertex " + std::to_string(v));
    std::vector<Violation> out;
    for (Vertex v = 0; v < g.n(); ++v) {
        LabeledBall b = extract_labeled_ball(g, v, p.radius, lab);
        if (!p.accepts(b)) {
            Violation viol;
            viol.center = v;
            viol.reason = p.explain ? p.explain(b) : "ball predicate rejected";
            viol.witness = b.orig;
            out.push_back(viol);
        }
    }
    return out;
}

// --- Built-in problems -------------------------------------------------------

// MIS as an LCL: label 1 = in the set. In the set: no neighbor in the set.
// Out of the set: some neighbor in the set (maximality).
inline LclProblem mis_problem() {
    LclProblem p;
    p.name = "mis";
    p.radius = 1;
    p.in_alphabet = [](Label l, int) { return l == 0 || l == 1; };
    p.accepts = [](const LabeledBall& b) {
        bool in = b.labels[b.center] == 1;
        bool dominated = false;
        for (auto [u, e] : b.center_edges()) {
            (void)e;
            if (b.labels[u] == 1) {
                if (in) return false;
                dominated = true;
            }
        }
        return in || dominated;
    };
    p.explain = [](const LabeledBall& b) {
        return b.labels[b.center] == 1 ? "neighbor also in MIS" : "no vertex in MIS dominates v";
    };
    return p;
}

inline LclProblem coloring_problem(int k) {
    require(k >= 1, "coloring_problem: k must be >= 1");
    LclProblem p;
    p.name = "coloring-" + std::to_string(k);
    p.radius = 1;
    p.in_alphabet = [k](Label l, int) { return l >= 1 && l <= k; };
    p.accepts = [](const LabeledBall& b) {
        for (auto [u, e] : b.center_edges()) {
            (void)e;
            if (b.labels[u] == b.labels[b.center]) return false;
        }
        return true;
    };
    p.explain = [](const LabeledBall&) { return "monochromatic edge"; };
    return p;
}

inline std::string require_regular_edge_colored(const Graph& g) {
    if (!g.has_edge_colors()) return "missing edge colors";
    if (!g.is_regular()) return "graph is not Delta-regular";
    return "";
}

// Sinkless coloring: vertex Delta-coloring of an edge-colored Delta-regular
// graph where no edge has both endpoints and the edge itself the same color.
inline LclProblem sinkless_coloring_problem(const Graph& g) {
    std::string why = require_regular_edge_colored(g);
    require(why.empty(), "sinkless_coloring_problem: " + why);
    int delta = g.delta();
    LclProblem p;
    p.name = "sinkless-coloring";
    p.radius = 1;
    p.in_alphabet = [delta](Label l, int) { return l >= 1 && l <= delta; };
    p.instance_check = [](const Graph& gg) { return require_regular_edge_colored(gg); };
    p.accepts = [](const LabeledBall& b) {
        for (auto [u, e] : b.center_edges())
            if (b.labels[b.center] == b.labels[u] && b.labels[u] == e->color) return false;
        return true;
    };
    p.explain = [](const LabeledBall&) { return "edge with endpoints and edge color equal"; };
    return p;
}

// Sinkless orientation. Labels are per-port direction vectors packed into an
// integer: bit p set = edge at port p oriented outward. The predicate checks
// cross-edge consistency and that at least one incident edge leaves v.
inline LclProblem sinkless_orientation_problem(const Graph& g) {
    std::string why = require_regular_edge_colored(g);
    require(why.empty(), "sinkless_orientation_problem: " + why);
    LclProblem p;
    p.name = "sinkless-orientation";
    p.radius = 1;
    p.in_alphabet = [](Label l, int degree) {
        require(degree <= 62, "sinkless_orientation: degree too large for packed labels");
        return l >= 0 && l < (Label(1) << degree);
    };
    p.instance_check = [](const Graph& gg) { return require_regular_edge_colored(gg); };
    p.accepts = [](const LabeledBall& b) {
        Label mine = b.labels[b.center];
        bool has_out = false;
        for (auto [u, e] : b.center_edges()) {
            int my_port = (e->a == b.center) ? e->port_a : e->port_b;
            int their_port = (e->a == b.center) ? e->port_b : e->port_a;
            bool my_out = (mine >> my_port) & 1;
            bool their_out = (b.labels[u] >> their_port) & 1;
            if (my_out == their_out) return false; // both claim out or both claim in
            has_out = has_out || my_out;
        }
        return has_out;
    };
    p.explain = [](const LabeledBall& b) {
        Label mine = b.labels[b.center];
        for (auto [u, e] : b.center_edges()) {
            int my_port = (e->a == b.center) ? e->port_a : e->port_b;
            int their_port = (e->a == b.center) ? e->port_b : e->port_a;
            if (((mine >> my_port) & 1) == ((b.labels[u] >> their_port) & 1))
                return std::string("inconsistent orientation on an incident edge");
        }
        return std::string("sink: all incident edges oriented inward");
    };
    p.format_label = [](Label l, int degree) {
        std::string s;
        for (int port = 0; port < degree; ++port) s += ((l >> port) & 1) ? '>' : '<';
        return s;
    };
    p.parse_label = [](const std::string& s, int degree) {
        require(int(s.size()) == degree, "orientation label arity mismatch");
        Label l = 0;
        for (int port = 0; port < degree; ++port) {
            require(s[port] == '<' || s[port] == '>', "orientation label: bad character");
            if (s[port] == '>') l |= Label(1) << port;
        }
        return l;
    };
    return p;
}

// Accept-everything problem over a single label; useful as a pipeline stub.
inline LclProblem trivial_problem(Label only = 0) {
    LclProblem p;
    p.name = "trivial";
    p.radius = 1;
    p.in_alphabet = [only](Label l, int) { return l == only; };
    p.accepts = [](const LabeledBall&) { return true; };
    return p;
}

// --- Labeling text format ----------------------------------------------------
// One line per vertex: `vertex label`. Orientation labels render as {<,>}
// strings over ports in sorted-adjacency order.

inline void write_labeling(std::ostream& out, const Graph& g, const LclProblem& p,
                           const Labeling& lab) {
    for (Vertex v = 0; v < g.n(); ++v) {
        out << v << ' ';
        if (p.format_label) out << p.format_label(lab[v], g.degree(v));
        else out << lab[v];
        out << '\n';
    }
}

inline std::string labeling_to_string(const Graph& g, const LclProblem& p, const Labeling& lab) {
    std::ostringstream os;
    write_labeling(os, g, p, lab);
    return os.str();
}

inline Labeling read_labeling(std::istream& in, const Graph& g, const LclProblem& p) {
    Labeling lab(g.n(), 0);
    std::vector<char> seen(g.n(), 0);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long v;
        std::string tok;
        ls >> v >> tok;
        require(bool(ls) && v >= 0 && v < g.n(), "labeling format: bad line: " + line);
        if (p.parse_label) lab[v] = p.parse_label(tok, g.degree(int(v)));
        else lab[v] = std::stoll(tok);
        seen[v] = 1;
    }
    for (Vertex v = 0; v < g.n(); ++v)
        require(seen[v], "labeling format: vertex " + std::to_string(v) + " missing");
    return lab;
}

} // namespace loclab
