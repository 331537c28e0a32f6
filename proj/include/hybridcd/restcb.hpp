#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybridcd/ci_test.hpp"
#include "hybridcd/cycle_groups.hpp"
#include "hybridcd/dataset.hpp"
#include "hybridcd/graph.hpp"

namespace hcd {

/// Bookkeeping of the lagged skeleton phase. b_hat[y] holds the surviving
/// lagged candidate parents of y_t, sorted by i_min descending.
struct PruneState {
    std::map<int, std::vector<LaggedNode>> b_hat;
    std::map<std::pair<LaggedNode, LaggedNode>, double> i_min;
};

/// Restricted PCMCI+ over the window [t-gamma, t].
///
/// Lagged phase: for each y_t, candidates in b_hat are tested against the
/// first n other members of b_hat (n = 0, 1, ...); removals of one level are
/// applied together, then b_hat is re-sorted by i_min.
/// Contemporaneous phase: every remaining edge X_{t-l} -> Y_t (and each
/// present-slice edge, from both endpoints when unoriented) is tested given
/// S united with b_hat(Y)\{X} and b_hat(X) shifted by l, for S ranging over
/// size-n subsets of GET(Y) in the present slice. GET returns parents when an
/// order is given and adjacencies otherwise. Removals of one level are applied
/// at the end of the level.
///
/// The CI test must accept lags up to 2*gamma. With an order the result is
/// complete; otherwise present-slice edges are left unoriented. `state`, when
/// given, receives the lagged-phase bookkeeping.
PartialWindowGraph rest_pcmci_plus(WindowCiTest& ci, const std::vector<std::string>& vars, int gamma,
                                   double alpha, const std::optional<CausalOrder>& order,
                                   PruneState* state = nullptr);

// Partial correlation test over `data` (standardized internally).
PartialWindowGraph rest_pcmci_plus(const Dataset& data, int gamma, double alpha,
                                   const std::optional<CausalOrder>& order);

/// Restricted PCGCE over present nodes and past blocks.
///
/// At each level n, the statistic of every (edge, S) with S a size-n subset of
/// GET(Y)\{X} is computed first; the entries are then visited by increasing
/// |statistic| and the p-value test runs unless the edge is already gone or S
/// is no longer inside GET(Y). Removals take effect immediately.
PartialExtendedGraph rest_pcgce(ExtendedCiTest& ci, const std::vector<std::string>& vars, double alpha,
                                const std::optional<CausalOrder>& order);

// Past blocks are the first principal component of lags 1..gamma.
PartialExtendedGraph rest_pcgce(const Dataset& data, int gamma, double alpha,
                                const std::optional<CausalOrder>& order);

// Throws InvalidArgument unless `order` is a permutation of 0..d-1.
void check_full_order(const CausalOrder& order, int d);

}  // namespace hcd
