#include "hybridcd/graph.hpp"

#include <algorithm>
#include <queue>
#include <unordered_set>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

void check_names(const std::vector<std::string>& vars) {
    std::unordered_set<std::string> seen;
    for (const auto& v : vars) {
        if (v.empty()) throw InvalidArgument("empty variable name");
        if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name: " + v);
    }
}

void check_var(int v, int d, const char* what) {
    if (v < 0 || v >= d) {
        throw InvalidArgument(std::string(what) + ": variable index " + std::to_string(v) +
                              " out of range");
    }
}

void check_inst(const std::set<DirectedPair>& inst, int d) {
    for (const auto& e : inst) {
        check_var(e.src, d, "instantaneous edge");
        check_var(e.dst, d, "instantaneous edge");
        if (e.src == e.dst) throw InvalidArgument("self instantaneous edge on variable " + std::to_string(e.src));
    }
    if (has_directed_cycle(d, inst)) throw InvalidArgument("instantaneous subgraph has a cycle");
}

void check_unoriented(const std::set<UndirectedPair>& unoriented, const std::set<DirectedPair>& inst,
                      int d) {
    for (const auto& u : unoriented) {
        check_var(u.a, d, "unoriented edge");
        check_var(u.b, d, "unoriented edge");
        if (u.a == u.b) throw InvalidArgument("self unoriented edge");
        if (inst.count({u.a, u.b}) || inst.count({u.b, u.a})) {
            throw InvalidArgument("pair is both oriented and unoriented");
        }
    }
}

}  // namespace

int find_var(const std::vector<std::string>& vars, const std::string& name) {
    auto it = std::find(vars.begin(), vars.end(), name);
    return it == vars.end() ? -1 : static_cast<int>(it - vars.begin());
}

bool has_directed_cycle(int num_vars, const std::set<DirectedPair>& edges) {
    std::vector<int> indeg(num_vars, 0);
    std::vector<std::vector<int>> out(num_vars);
    for (const auto& e : edges) {
        out[e.src].push_back(e.dst);
        ++indeg[e.dst];
    }
    std::queue<int> ready;
    for (int v = 0; v < num_vars; ++v)
        if (indeg[v] == 0) ready.push(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop();
        ++seen;
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    return seen != num_vars;
}

std::vector<int> topological_order(int num_vars, const std::set<DirectedPair>& edges,
                                   const std::vector<int>& nodes) {
    std::vector<char> keep(num_vars, 0);
    for (int v : nodes) keep[v] = 1;
    std::vector<int> indeg(num_vars, 0);
    std::vector<std::vector<int>> out(num_vars);
    // Reachability through dropped nodes still constrains the order.
    for (const auto& e : edges) {
        out[e.src].push_back(e.dst);
        ++indeg[e.dst];
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int v = 0; v < num_vars; ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<int> order;
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        ++seen;
        if (keep[v]) order.push_back(v);
        for (int w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (seen != num_vars) throw InvalidArgument("instantaneous subgraph has a cycle");
    return order;
}

void WindowGraph::validate() const {
    if (gamma < 1) throw InvalidArgument("gamma must be >= 1");
    check_names(vars);
    const int d = num_vars();
    for (const auto& e : lagged) {
        check_var(e.src, d, "lagged edge");
        check_var(e.dst, d, "lagged edge");
        if (e.lag < 1 || e.lag > gamma) {
            throw InvalidArgument("lagged edge lag " + std::to_string(e.lag) + " outside [1, gamma]");
        }
    }
    check_inst(inst, d);
}

void PartialWindowGraph::validate() const {
    oriented.validate();
    check_unoriented(unoriented, oriented.inst, num_vars());
}

void ExtendedGraph::validate() const {
    check_names(vars);
    const int d = num_vars();
    for (const auto& e : lagged) {
        check_var(e.src, d, "lagged edge");
        check_var(e.dst, d, "lagged edge");
    }
    check_inst(inst, d);
}

void PartialExtendedGraph::validate() const {
    oriented.validate();
    check_unoriented(unoriented, oriented.inst, num_vars());
}

void SummaryGraph::validate() const {
    check_names(vars);
    const int d = num_vars();
    for (const auto& e : edges) {
        check_var(e.src, d, "summary edge");
        check_var(e.dst, d, "summary edge");
        if (e.src == e.dst) throw InvalidArgument("self cause stored as an edge");
    }
    for (int v : self_loops) check_var(v, d, "self loop");
}

ExtendedGraph ecg_from_wcg(const WindowGraph& g) {
    ExtendedGraph out;
    out.vars = g.vars;
    out.inst = g.inst;
    for (const auto& e : g.lagged) out.lagged.insert({e.src, e.dst});
    return out;
}

SummaryGraph scg_from_wcg(const WindowGraph& g) {
    SummaryGraph out;
    out.vars = g.vars;
    for (const auto& e : g.lagged) {
        if (e.src == e.dst)
            out.self_loops.insert(e.src);
        else
            out.edges.insert({e.src, e.dst});
    }
    out.edges.insert(g.inst.begin(), g.inst.end());
    return out;
}

SummaryGraph scg_from_ecg(const ExtendedGraph& g) {
    SummaryGraph out;
    out.vars = g.vars;
    for (const auto& e : g.lagged) {
        if (e.src == e.dst)
            out.self_loops.insert(e.src);
        else
            out.edges.insert(e);
    }
    out.edges.insert(g.inst.begin(), g.inst.end());
    return out;
}

SummaryGraph scg_from_partial(const PartialWindowGraph& g) { return scg_from_wcg(g.oriented); }

SummaryGraph scg_from_partial(const PartialExtendedGraph& g) { return scg_from_ecg(g.oriented); }

PartialWindowGraph pcpo_from_wcg(const WindowGraph& g) {
    PartialWindowGraph out;
    out.oriented = g;
    out.oriented.inst.clear();
    for (const auto& e : g.inst) out.unoriented.insert({e.src, e.dst});
    return out;
}

PartialExtendedGraph pcpo_from_ecg(const ExtendedGraph& g) {
    PartialExtendedGraph out;
    out.oriented = g;
    out.oriented.inst.clear();
    for (const auto& e : g.inst) out.unoriented.insert({e.src, e.dst});
    return out;
}

}  // namespace hcd
