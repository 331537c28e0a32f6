#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "hybridcd/ci_test.hpp"
#include "hybridcd/cycle_groups.hpp"
#include "hybridcd/dataset.hpp"
#include "hybridcd/graph.hpp"
#include "hybridcd/graph_json.hpp"
#include "hybridcd/restnb.hpp"

namespace hcd {

enum class Variant { Window, Extended };
enum class Framework { Nbcb, Cbnb };

struct DiscoveryConfig {
    int gamma = 5;
    double alpha = 0.05;
    Variant variant = Variant::Window;
    std::string ci_test = "partial-corr";
    std::string order_tiebreak = "smallest-index";
};

using DetailGraph = std::variant<PartialWindowGraph, PartialExtendedGraph>;

struct Diagnostics {
    std::size_t ci_calls = 0;
    std::size_t orderer_calls = 0;
    std::size_t groups = 0;
    // Groups whose ordering failed; their edges stay unoriented.
    std::size_t failed_groups = 0;
    std::vector<std::string> warnings;
    double seconds = 0.0;
};

struct DiscoveryResult {
    SummaryGraph scg;
    DetailGraph detail;
    std::vector<CausalOrder> order_log;
    Diagnostics diagnostics;
};

/// Test and ordering back ends for one run. Only the CI test matching the
/// configured variant is used.
struct Engines {
    WindowCiTest* window_ci = nullptr;
    ExtendedCiTest* extended_ci = nullptr;
    CausalOrderer* orderer = nullptr;
};

/// Noise-based ordering of the whole present slice given every lagged node up
/// to gamma, then constraint-based pruning given that order.
DiscoveryResult nbcb(const Dataset& data, const DiscoveryConfig& cfg);
DiscoveryResult nbcb(const std::vector<std::string>& vars, const DiscoveryConfig& cfg, const Engines& engines);

/// Constraint-based pruning without order, then one restricted ordering per
/// group of unoriented edges, conditioned on the group's lagged parents.
DiscoveryResult cbnb(const Dataset& data, const DiscoveryConfig& cfg);
DiscoveryResult cbnb(const std::vector<std::string>& vars, const DiscoveryConfig& cfg, const Engines& engines);

DiscoveryResult discover(Framework fw, const Dataset& data, const DiscoveryConfig& cfg);

// Population oracles built from the true window graph: d-separation CI test
// and the true instantaneous order.
DiscoveryResult discover_oracle(Framework fw, const WindowGraph& truth, const DiscoveryConfig& cfg);

// "nbcb-w", "nbcb-e", "cbnb-w", "cbnb-e".
std::string method_name(Framework fw, Variant v);
// Throws InvalidArgument on an unknown id.
std::pair<Framework, Variant> parse_method(const std::string& id);

// {method, scg, detail, order_log, diagnostics}
Json result_to_json(const DiscoveryResult& r, const std::string& method);

// Horizon used by the d-separation oracles for a given gamma.
int oracle_horizon(int gamma);

}  // namespace hcd
