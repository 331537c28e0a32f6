#pragma once

#include <set>
#include <vector>

#include "hybridcd/graph.hpp"

namespace hcd {

/// Ordered list of present-slice variables; no variable causes one that
/// precedes it.
struct CausalOrder {
    std::vector<int> nodes;

    bool operator==(const CausalOrder&) const = default;
};

/// Present-slice variables and the unoriented edges that belong together for
/// orientation.
struct UndirectedCycleGroup {
    std::set<int> nodes;
    std::set<UndirectedPair> edges;

    bool operator==(const UndirectedCycleGroup&) const = default;
};

// Fundamental cycle basis of an undirected simple graph (Paton's spanning
// tree method). Each cycle is a closed vertex walk without the repeated end.
std::vector<std::vector<int>> paton_cycle_basis(int num_vars, const std::set<UndirectedPair>& edges);

/// Groups over the unoriented edges. Cycles of the basis that share an edge
/// are merged transitively; edges on no cycle are grouped per connected
/// component of the cycle-free remainder. The groups partition `edges` and are
/// returned sorted by their smallest edge.
std::vector<UndirectedCycleGroup> find_ucgs(int num_vars, const std::set<UndirectedPair>& edges);
std::vector<UndirectedCycleGroup> find_ucgs(const PartialWindowGraph& g);
std::vector<UndirectedCycleGroup> find_ucgs(const PartialExtendedGraph& g);

// Orients every unoriented edge of `group` along `order`; other edges are
// left alone. Throws InvalidArgument("incomplete order") when a group node is
// missing from the order.
PartialWindowGraph orient_group(const PartialWindowGraph& g, const UndirectedCycleGroup& group,
                                const CausalOrder& order);
PartialExtendedGraph orient_group(const PartialExtendedGraph& g, const UndirectedCycleGroup& group,
                                  const CausalOrder& order);

}  // namespace hcd
