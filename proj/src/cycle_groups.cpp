#include "hybridcd/cycle_groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

std::vector<std::set<int>> adjacency(int n, const std::set<UndirectedPair>& edges) {
    std::vector<std::set<int>> adj(n);
    for (const auto& e : edges) {
        adj[e.a].insert(e.b);
        adj[e.b].insert(e.a);
    }
    return adj;
}

template <class Partial>
Partial orient_impl(const Partial& g, const UndirectedCycleGroup& group, const CausalOrder& order) {
    std::map<int, std::size_t> rank;
    for (std::size_t i = 0; i < order.nodes.size(); ++i) rank.emplace(order.nodes[i], i);
    for (int v : group.nodes)
        if (!rank.count(v)) throw InvalidArgument("incomplete order");

    Partial out = g;
    for (const auto& e : group.edges) {
        if (!out.unoriented.erase(e)) continue;
        if (rank.at(e.a) < rank.at(e.b))
            out.oriented.inst.insert({e.a, e.b});
        else
            out.oriented.inst.insert({e.b, e.a});
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> paton_cycle_basis(int num_vars, const std::set<UndirectedPair>& edges) {
    const auto adj = adjacency(num_vars, edges);
    std::vector<std::vector<int>> cycles;
    std::vector<char> visited(num_vars, 0);

    for (int root = 0; root < num_vars; ++root) {
        if (visited[root] || adj[root].empty()) continue;
        // pred: spanning-tree parent; used[z]: neighbours of z already closed
        // through z.
        std::map<int, int> pred{{root, root}};
        std::map<int, std::set<int>> used{{root, {}}};
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int z = stack.back();
            stack.pop_back();
            for (int nbr : adj[z]) {
                if (!used.count(nbr)) {
                    pred[nbr] = z;
                    stack.push_back(nbr);
                    used[nbr] = {z};
                } else if (nbr != z && !used[z].count(nbr)) {
                    // Non-tree edge z-nbr: walk z's tree path until it meets
                    // a vertex already adjacent (through `used`) to nbr.
                    const auto& pn = used[nbr];
                    std::vector<int> cycle{nbr, z};
                    int p = pred[z];
                    while (!pn.count(p)) {
                        cycle.push_back(p);
                        p = pred[p];
                    }
                    cycle.push_back(p);
                    cycles.push_back(std::move(cycle));
                    used[nbr].insert(z);
                }
            }
        }
        for (const auto& kv : pred) visited[kv.first] = 1;
    }
    return cycles;
}

std::vector<UndirectedCycleGroup> find_ucgs(int num_vars, const std::set<UndirectedPair>& edges) {
    if (edges.empty()) return {};
    std::vector<UndirectedPair> edge_list(edges.begin(), edges.end());
    std::map<UndirectedPair, std::size_t> edge_index;
    for (std::size_t i = 0; i < edge_list.size(); ++i) edge_index[edge_list[i]] = i;

    // Merging cycles that share an edge is the same as merging the edges of
    // every cycle into one class.
    DisjointSets classes(edge_list.size());
    std::vector<char> on_cycle(edge_list.size(), 0);
    for (const auto& cycle : paton_cycle_basis(num_vars, edges)) {
        std::size_t first = edge_index.at({cycle.front(), cycle.back()});
        on_cycle[first] = 1;
        for (std::size_t i = 0; i + 1 < cycle.size(); ++i) {
            std::size_t e = edge_index.at({cycle[i], cycle[i + 1]});
            on_cycle[e] = 1;
            classes.unite(first, e);
        }
    }

    // Cycle-free edges: one group per connected component of those edges.
    std::vector<std::vector<std::size_t>> incident(num_vars);
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        if (on_cycle[i]) continue;
        incident[edge_list[i].a].push_back(i);
        incident[edge_list[i].b].push_back(i);
    }
    for (const auto& list : incident)
        for (std::size_t k = 1; k < list.size(); ++k) classes.unite(list[0], list[k]);

    std::map<std::size_t, UndirectedCycleGroup> by_root;
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        auto& group = by_root[classes.find(i)];
        group.edges.insert(edge_list[i]);
        group.nodes.insert(edge_list[i].a);
        group.nodes.insert(edge_list[i].b);
    }
    std::vector<UndirectedCycleGroup> out;
    for (auto& kv : by_root) out.push_back(std::move(kv.second));
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) {
        return *l.edges.begin() < *r.edges.begin();
    });
    return out;
}

std::vector<UndirectedCycleGroup> find_ucgs(const PartialWindowGraph& g) {
    return find_ucgs(g.num_vars(), g.unoriented);
}

std::vector<UndirectedCycleGroup> find_ucgs(const PartialExtendedGraph& g) {
    return find_ucgs(g.num_vars(), g.unoriented);
}

PartialWindowGraph orient_group(const PartialWindowGraph& g, const UndirectedCycleGroup& group,
                                const CausalOrder& order) {
    return orient_impl(g, group, order);
}

PartialExtendedGraph orient_group(const PartialExtendedGraph& g, const UndirectedCycleGroup& group,
                                  const CausalOrder& order) {
    return orient_impl(g, group, order);
}

}  // namespace hcd
