#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "hybridcd/cycle_groups.hpp"
#include "hybridcd/dataset.hpp"
#include "hybridcd/graph.hpp"
#include "hybridcd/stats.hpp"

namespace hcd {

/// Restricted VLiNGAM ordering of the present-slice `targets`.
///
/// Every target is first residualized on the lagged nodes `past` (rows
/// gamma..T-1). The DirectLiNGAM loop then scores each remaining candidate X
/// by h = sum over the other candidates Y of measure(xi_X, eps_Y), where eps_Y
/// is xi_Y minus its single-regressor fit on xi_X. The argmin (smallest
/// variable index on ties) is appended, regressed out of the others, and the
/// loop repeats; the last candidate is appended unconditionally.
///
/// `alpha` is accepted for interface uniformity; no hypothesis test runs
/// here. `data` should already be standardized. Throws DegenerateSeries naming
/// the variable whose residual has no variance left.
CausalOrder rest_vlingam(const Dataset& data, int gamma, double alpha, const std::vector<int>& targets,
                         const std::vector<LaggedNode>& past,
                         const IndependenceMeasure& measure = independence_measure);

/// Source of causal orders for the hybrid frameworks.
class CausalOrderer {
public:
    virtual ~CausalOrderer() = default;

    virtual CausalOrder order(const std::vector<int>& targets, const std::vector<LaggedNode>& past) = 0;

    std::size_t calls() const { return calls_; }

protected:
    std::size_t calls_ = 0;
};

class VlingamOrderer final : public CausalOrderer {
public:
    VlingamOrderer(const Dataset& standardized, int gamma, double alpha,
                   IndependenceMeasure measure = independence_measure);

    CausalOrder order(const std::vector<int>& targets, const std::vector<LaggedNode>& past) override;

private:
    const Dataset& data_;
    int gamma_;
    double alpha_;
    IndependenceMeasure measure_;
};

// Population ordering: the topological order of the true instantaneous
// subgraph restricted to the targets.
class OracleOrderer final : public CausalOrderer {
public:
    explicit OracleOrderer(const WindowGraph& truth);

    CausalOrder order(const std::vector<int>& targets, const std::vector<LaggedNode>& past) override;

private:
    int d_;
    std::set<DirectedPair> inst_;
};

}  // namespace hcd
