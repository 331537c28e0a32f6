#include "hybridcd/hybrid.hpp"

#include <algorithm>
#include <chrono>
#include <memory>
#include <optional>
#include <set>

#include "hybridcd/error.hpp"
#include "hybridcd/restcb.hpp"

namespace hcd {

namespace {

using Clock = std::chrono::steady_clock;

void check_config(const DiscoveryConfig& cfg) {
    if (cfg.gamma < 1) throw InvalidArgument("gamma must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
}

void check_engines(const DiscoveryConfig& cfg, const Engines& e) {
    if (!e.orderer) throw InvalidArgument("no causal orderer supplied");
    if (cfg.variant == Variant::Window && !e.window_ci) throw InvalidArgument("no window CI test supplied");
    if (cfg.variant == Variant::Extended && !e.extended_ci) throw InvalidArgument("no extended CI test supplied");
}

std::size_t ci_calls(const DiscoveryConfig& cfg, const Engines& e) {
    return cfg.variant == Variant::Window ? e.window_ci->calls() : e.extended_ci->calls();
}

DetailGraph prune(const std::vector<std::string>& vars, const DiscoveryConfig& cfg, const Engines& e,
                  const std::optional<CausalOrder>& order) {
    if (cfg.variant == Variant::Window) return rest_pcmci_plus(*e.window_ci, vars, cfg.gamma, cfg.alpha, order);
    return rest_pcgce(*e.extended_ci, vars, cfg.alpha, order);
}

SummaryGraph summarize(const DetailGraph& g) {
    return std::visit([](const auto& x) { return scg_from_partial(x); }, g);
}

std::vector<LaggedNode> all_lagged(int d, int gamma) {
    std::vector<LaggedNode> out;
    for (int lag = 1; lag <= gamma; ++lag)
        for (int v = 0; v < d; ++v) out.push_back({v, lag});
    return out;
}

std::vector<LaggedNode> lagged_parents(const PartialWindowGraph& g, const std::set<int>& nodes, int) {
    std::set<LaggedNode> out;
    for (const auto& e : g.oriented.lagged)
        if (nodes.count(e.dst)) out.insert({e.src, e.lag});
    return {out.begin(), out.end()};
}

// A past block stands for all of its lags.
std::vector<LaggedNode> lagged_parents(const PartialExtendedGraph& g, const std::set<int>& nodes, int gamma) {
    std::set<LaggedNode> out;
    for (const auto& e : g.oriented.lagged)
        if (nodes.count(e.dst))
            for (int lag = 1; lag <= gamma; ++lag) out.insert({e.src, lag});
    return {out.begin(), out.end()};
}

template <class Fn>
DiscoveryResult timed(Fn&& fn) {
    auto start = Clock::now();
    DiscoveryResult r = fn();
    r.diagnostics.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return r;
}

struct DataEngines {
    Dataset z;
    std::unique_ptr<WindowCiTest> window;
    std::unique_ptr<ExtendedCiTest> extended;
    std::unique_ptr<CausalOrderer> orderer;
    Engines engines;
    std::vector<std::string> warnings;
};

std::unique_ptr<DataEngines> make_engines(const Dataset& data, const DiscoveryConfig& cfg) {
    check_config(cfg);
    data.validate();
    if (data.d() < 1) throw DataError("dataset has no variables");
    auto out = std::make_unique<DataEngines>();
    out->z = standardize(data);
    if (cfg.variant == Variant::Window) {
        out->window = std::make_unique<PartialCorrWindowCi>(out->z, 2 * cfg.gamma);
        out->engines.window_ci = out->window.get();
    } else {
        out->extended = std::make_unique<PartialCorrExtendedCi>(out->z, cfg.gamma);
        out->engines.extended_ci = out->extended.get();
    }
    out->orderer = std::make_unique<VlingamOrderer>(out->z, cfg.gamma, cfg.alpha);
    out->engines.orderer = out->orderer.get();
    if (data.T() <= (cfg.gamma + 1) * data.d())
        out->warnings.push_back("T=" + std::to_string(data.T()) + " is small for gamma=" +
                                std::to_string(cfg.gamma) + " and d=" + std::to_string(data.d()));
    return out;
}

DiscoveryResult with_warnings(DiscoveryResult r, const std::vector<std::string>& warnings) {
    r.diagnostics.warnings.insert(r.diagnostics.warnings.begin(), warnings.begin(), warnings.end());
    return r;
}

}  // namespace

DiscoveryResult nbcb(const std::vector<std::string>& vars, const DiscoveryConfig& cfg, const Engines& e) {
    check_config(cfg);
    check_engines(cfg, e);
    return timed([&] {
        const int d = static_cast<int>(vars.size());
        std::vector<int> targets(static_cast<std::size_t>(d));
        for (int v = 0; v < d; ++v) targets[static_cast<std::size_t>(v)] = v;

        DiscoveryResult r;
        const std::size_t calls0 = ci_calls(cfg, e), order0 = e.orderer->calls();
        CausalOrder order = e.orderer->order(targets, all_lagged(d, cfg.gamma));
        r.order_log.push_back(order);
        r.detail = prune(vars, cfg, e, order);
        r.scg = summarize(r.detail);
        r.diagnostics.ci_calls = ci_calls(cfg, e) - calls0;
        r.diagnostics.orderer_calls = e.orderer->calls() - order0;
        return r;
    });
}

DiscoveryResult cbnb(const std::vector<std::string>& vars, const DiscoveryConfig& cfg, const Engines& e) {
    check_config(cfg);
    check_engines(cfg, e);
    return timed([&] {
        DiscoveryResult r;
        const std::size_t calls0 = ci_calls(cfg, e), order0 = e.orderer->calls();
        r.detail = prune(vars, cfg, e, std::nullopt);
        std::visit(
            [&](auto& g) {
                const auto groups = find_ucgs(g);
                r.diagnostics.groups = groups.size();
                for (std::size_t i = 0; i < groups.size(); ++i) {
                    const auto& group = groups[i];
                    std::vector<int> targets(group.nodes.begin(), group.nodes.end());
                    try {
                        CausalOrder order =
                            e.orderer->order(targets, lagged_parents(g, group.nodes, cfg.gamma));
                        r.order_log.push_back(order);
                        g = orient_group(g, group, order);
                    } catch (const Error& err) {
                        ++r.diagnostics.failed_groups;
                        r.diagnostics.warnings.push_back("group " + std::to_string(i) +
                                                         " left unoriented: " + err.what());
                    }
                }
            },
            r.detail);
        r.scg = summarize(r.detail);
        r.diagnostics.ci_calls = ci_calls(cfg, e) - calls0;
        r.diagnostics.orderer_calls = e.orderer->calls() - order0;
        return r;
    });
}

DiscoveryResult nbcb(const Dataset& data, const DiscoveryConfig& cfg) {
    return discover(Framework::Nbcb, data, cfg);
}

DiscoveryResult cbnb(const Dataset& data, const DiscoveryConfig& cfg) {
    return discover(Framework::Cbnb, data, cfg);
}

DiscoveryResult discover(Framework fw, const Dataset& data, const DiscoveryConfig& cfg) {
    auto start = Clock::now();
    auto en = make_engines(data, cfg);
    DiscoveryResult r = fw == Framework::Nbcb ? nbcb(en->z.names, cfg, en->engines)
                                              : cbnb(en->z.names, cfg, en->engines);
    r.diagnostics.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return with_warnings(std::move(r), en->warnings);
}

int oracle_horizon(int gamma) { return 4 * gamma + 2; }

DiscoveryResult discover_oracle(Framework fw, const WindowGraph& truth, const DiscoveryConfig& cfg) {
    check_config(cfg);
    truth.validate();
    const int horizon = std::max(oracle_horizon(cfg.gamma), oracle_horizon(truth.gamma));
    DSepWindowCi wci(truth, 2 * cfg.gamma, horizon);
    DSepExtendedCi eci(truth, cfg.gamma, horizon);
    OracleOrderer orderer(truth);
    Engines e{&wci, &eci, &orderer};
    return fw == Framework::Nbcb ? nbcb(truth.vars, cfg, e) : cbnb(truth.vars, cfg, e);
}

std::string method_name(Framework fw, Variant v) {
    return std::string(fw == Framework::Nbcb ? "nbcb" : "cbnb") + (v == Variant::Window ? "-w" : "-e");
}

std::pair<Framework, Variant> parse_method(const std::string& id) {
    for (Framework fw : {Framework::Nbcb, Framework::Cbnb})
        for (Variant v : {Variant::Window, Variant::Extended})
            if (method_name(fw, v) == id) return {fw, v};
    throw InvalidArgument("unknown method '" + id + "' (expected nbcb-w, nbcb-e, cbnb-w or cbnb-e)");
}

Json result_to_json(const DiscoveryResult& r, const std::string& method) {
    Json j;
    j["method"] = method;
    j["scg"] = to_json(r.scg);
    j["detail"] = std::visit([](const auto& g) { return to_json(g); }, r.detail);
    const auto& vars = r.scg.vars;
    Json orders = Json::array();
    for (const auto& o : r.order_log) {
        Json names = Json::array();
        for (int v : o.nodes) names.push_back(vars.at(static_cast<std::size_t>(v)));
        orders.push_back(names);
    }
    j["order_log"] = orders;
    const auto& dg = r.diagnostics;
    j["diagnostics"] = {{"ci_calls", dg.ci_calls},         {"orderer_calls", dg.orderer_calls},
                        {"groups", dg.groups},             {"failed_groups", dg.failed_groups},
                        {"warnings", dg.warnings},         {"seconds", dg.seconds}};
    return j;
}

}  // namespace hcd
