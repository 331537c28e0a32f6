#pragma once

#include <vector>

#include "hybridcd/graph.hpp"

namespace hcd {

/// The window graph repeated over lags 0..horizon. Node (var, lag) has id
/// lag * num_vars + var.
class UnrolledDag {
public:
    // horizon < 0 selects the default 2 * gamma.
    explicit UnrolledDag(const WindowGraph& g, int horizon = -1);

    int horizon() const { return horizon_; }
    int num_vars() const { return d_; }
    int size() const { return d_ * (horizon_ + 1); }

    // Throws InvalidArgument when the node is outside the unrolled range.
    int id(const LaggedNode& n) const;
    LaggedNode node(int id) const { return {id % d_, id / d_}; }

    const std::vector<int>& parents(int id) const { return parents_[id]; }
    const std::vector<int>& children(int id) const { return children_[id]; }

    /// True when every node of xs is d-separated from every node of ys given
    /// zs. Reachability over active trails (Bayes ball).
    bool d_separated(const std::vector<LaggedNode>& xs, const std::vector<LaggedNode>& ys,
                     const std::vector<LaggedNode>& zs) const;

private:
    int d_;
    int horizon_;
    std::vector<std::vector<int>> parents_;
    std::vector<std::vector<int>> children_;
};

/// Standard d-separation of x and y given s on the window graph unrolled over
/// lags 0..horizon (default 2 * gamma).
bool d_separated(const WindowGraph& g, const LaggedNode& x, const LaggedNode& y,
                 const std::vector<LaggedNode>& s, int horizon = -1);

}  // namespace hcd
