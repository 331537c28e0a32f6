#pragma once

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace hcd {

// A time series at a given lag; lag 0 is the present slice.
struct LaggedNode {
    int var = 0;
    int lag = 0;

    auto operator<=>(const LaggedNode&) const = default;
};

// src_{t-lag} -> dst_t with lag >= 1. src == dst encodes a self cause.
struct LaggedEdge {
    int src = 0;
    int lag = 1;
    int dst = 0;

    auto operator<=>(const LaggedEdge&) const = default;
};

struct DirectedPair {
    int src = 0;
    int dst = 0;

    auto operator<=>(const DirectedPair&) const = default;
};

// Unordered pair, always stored with a < b.
struct UndirectedPair {
    int a = 0;
    int b = 0;

    UndirectedPair() = default;
    UndirectedPair(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}

    bool contains(int v) const { return a == v || b == v; }
    int other(int v) const { return v == a ? b : a; }

    auto operator<=>(const UndirectedPair&) const = default;
};

/// Window causal graph. Each entry stands for the edge at every window
/// position, so consistency throughout time holds by construction.
struct WindowGraph {
    int gamma = 1;
    std::vector<std::string> vars;
    std::set<LaggedEdge> lagged;
    std::set<DirectedPair> inst;

    int num_vars() const { return static_cast<int>(vars.size()); }

    /// Throws InvalidArgument on out-of-range ids/lags, self instantaneous
    /// edges, duplicate names, or an instantaneous cycle.
    void validate() const;

    bool operator==(const WindowGraph&) const = default;
};

/// Window graph whose instantaneous part may be partly unoriented.
struct PartialWindowGraph {
    WindowGraph oriented;
    std::set<UndirectedPair> unoriented;

    int gamma() const { return oriented.gamma; }
    const std::vector<std::string>& vars() const { return oriented.vars; }
    int num_vars() const { return oriented.num_vars(); }

    // True when no instantaneous edge is left unoriented.
    bool complete() const { return unoriented.empty(); }

    void validate() const;

    bool operator==(const PartialWindowGraph&) const = default;
};

/// Two-slice graph: lagged edges mean src_{t-} -> dst_t without a lag value.
struct ExtendedGraph {
    std::vector<std::string> vars;
    std::set<DirectedPair> lagged;
    std::set<DirectedPair> inst;

    int num_vars() const { return static_cast<int>(vars.size()); }
    void validate() const;

    bool operator==(const ExtendedGraph&) const = default;
};

struct PartialExtendedGraph {
    ExtendedGraph oriented;
    std::set<UndirectedPair> unoriented;

    const std::vector<std::string>& vars() const { return oriented.vars; }
    int num_vars() const { return oriented.num_vars(); }
    bool complete() const { return unoriented.empty(); }

    void validate() const;

    bool operator==(const PartialExtendedGraph&) const = default;
};

/// Summary graph. X <-> Y is stored as both directed pairs; self causes live
/// in self_loops and never in edges.
struct SummaryGraph {
    std::vector<std::string> vars;
    std::set<DirectedPair> edges;
    std::set<int> self_loops;

    int num_vars() const { return static_cast<int>(vars.size()); }
    void validate() const;

    bool operator==(const SummaryGraph&) const = default;
};

ExtendedGraph ecg_from_wcg(const WindowGraph& g);
SummaryGraph scg_from_wcg(const WindowGraph& g);
SummaryGraph scg_from_ecg(const ExtendedGraph& g);

// Unoriented instantaneous edges carry no direction and are left out.
SummaryGraph scg_from_partial(const PartialWindowGraph& g);
SummaryGraph scg_from_partial(const PartialExtendedGraph& g);

// Drops the orientation of every instantaneous edge.
PartialWindowGraph pcpo_from_wcg(const WindowGraph& g);
PartialExtendedGraph pcpo_from_ecg(const ExtendedGraph& g);

// Kahn order of the instantaneous subgraph restricted to `nodes`; ties go to
// the smallest index. Throws InvalidArgument on a cycle.
std::vector<int> topological_order(int num_vars, const std::set<DirectedPair>& edges,
                                   const std::vector<int>& nodes);

bool has_directed_cycle(int num_vars, const std::set<DirectedPair>& edges);

// Index of `name` in `vars`, or -1.
int find_var(const std::vector<std::string>& vars, const std::string& name);

}  // namespace hcd
