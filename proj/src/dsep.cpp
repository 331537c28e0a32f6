#include "hybridcd/dsep.hpp"

#include <vector>

#include "hybridcd/error.hpp"

namespace hcd {

UnrolledDag::UnrolledDag(const WindowGraph& g, int horizon)
    : d_(g.num_vars()), horizon_(horizon < 0 ? 2 * g.gamma : horizon) {
    g.validate();
    parents_.resize(size());
    children_.resize(size());
    auto link = [this](int from, int to) {
        parents_[to].push_back(from);
        children_[from].push_back(to);
    };
    for (int k = 0; k <= horizon_; ++k) {
        for (const auto& e : g.inst) link(id({e.src, k}), id({e.dst, k}));
        for (const auto& e : g.lagged)
            if (k + e.lag <= horizon_) link(id({e.src, k + e.lag}), id({e.dst, k}));
    }
}

int UnrolledDag::id(const LaggedNode& n) const {
    if (n.var < 0 || n.var >= d_ || n.lag < 0 || n.lag > horizon_) {
        throw InvalidArgument("node (" + std::to_string(n.var) + ", lag " + std::to_string(n.lag) +
                              ") outside unrolled range");
    }
    return n.lag * d_ + n.var;
}

bool UnrolledDag::d_separated(const std::vector<LaggedNode>& xs, const std::vector<LaggedNode>& ys,
                              const std::vector<LaggedNode>& zs) const {
    const int n = size();
    std::vector<char> observed(n, 0);
    for (const auto& z : zs) observed[id(z)] = 1;

    // Nodes that are observed or have an observed descendant.
    std::vector<char> opens_collider(n, 0);
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (observed[v]) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (opens_collider[v]) continue;
        opens_collider[v] = 1;
        for (int p : parents_[v]) stack.push_back(p);
    }

    // State: (node, arrived from a child = going up) vs (from a parent = down).
    std::vector<char> seen_up(n, 0), seen_down(n, 0), reachable(n, 0);
    std::vector<std::pair<int, bool>> frontier;
    for (const auto& x : xs) frontier.push_back({id(x), true});
    while (!frontier.empty()) {
        auto [v, up] = frontier.back();
        frontier.pop_back();
        auto& seen = up ? seen_up : seen_down;
        if (seen[v]) continue;
        seen[v] = 1;
        if (!observed[v]) reachable[v] = 1;
        if (up) {
            if (observed[v]) continue;
            for (int p : parents_[v]) frontier.push_back({p, true});
            for (int c : children_[v]) frontier.push_back({c, false});
        } else {
            if (!observed[v])
                for (int c : children_[v]) frontier.push_back({c, false});
            if (opens_collider[v])
                for (int p : parents_[v]) frontier.push_back({p, true});
        }
    }
    for (const auto& y : ys)
        if (reachable[id(y)]) return false;
    return true;
}

bool d_separated(const WindowGraph& g, const LaggedNode& x, const LaggedNode& y,
                 const std::vector<LaggedNode>& s, int horizon) {
    UnrolledDag dag(g, horizon);
    for (const auto& z : s)
        if (z == x || z == y) throw InvalidArgument("query node inside the conditioning set");
    return dag.d_separated({x}, {y}, s);
}

}  // namespace hcd
