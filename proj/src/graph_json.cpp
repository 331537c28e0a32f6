#include "hybridcd/graph_json.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

struct EdgeRecord {
    int src;
    int dst;
    std::optional<int> lag;
    bool oriented;

    auto key() const { return std::make_tuple(src, dst, lag.has_value(), lag.value_or(0)); }
};

Json emit(const std::string& type, std::optional<int> gamma, const std::vector<std::string>& vars,
          std::vector<EdgeRecord> edges, const std::set<int>& self_loops) {
    std::sort(edges.begin(), edges.end(), [](const auto& l, const auto& r) { return l.key() < r.key(); });
    Json j;
    j["type"] = type;
    j["gamma"] = gamma ? Json(*gamma) : Json(nullptr);
    j["vars"] = vars;
    Json arr = Json::array();
    for (const auto& e : edges) {
        Json je;
        je["src"] = vars[e.src];
        je["dst"] = vars[e.dst];
        je["lag"] = e.lag ? Json(*e.lag) : Json(nullptr);
        je["oriented"] = e.oriented;
        arr.push_back(std::move(je));
    }
    j["edges"] = std::move(arr);
    Json loops = Json::array();
    for (int v : self_loops) loops.push_back(vars[v]);
    j["self_loops"] = std::move(loops);
    return j;
}

std::vector<EdgeRecord> window_edges(const WindowGraph& g) {
    std::vector<EdgeRecord> out;
    for (const auto& e : g.lagged) out.push_back({e.src, e.dst, e.lag, true});
    for (const auto& e : g.inst) out.push_back({e.src, e.dst, 0, true});
    return out;
}

std::vector<EdgeRecord> extended_edges(const ExtendedGraph& g) {
    std::vector<EdgeRecord> out;
    for (const auto& e : g.lagged) out.push_back({e.src, e.dst, std::nullopt, true});
    for (const auto& e : g.inst) out.push_back({e.src, e.dst, 0, true});
    return out;
}

void append_unoriented(std::vector<EdgeRecord>& out, const std::set<UndirectedPair>& u) {
    for (const auto& e : u) out.push_back({e.a, e.b, 0, false});
}

int lookup(const std::vector<std::string>& vars, const Json& name) {
    if (!name.is_string()) throw DataError("graph json: edge endpoint must be a string");
    int v = find_var(vars, name.get<std::string>());
    if (v < 0) throw DataError("graph json: unknown variable " + name.get<std::string>());
    return v;
}

}  // namespace

Json to_json(const WindowGraph& g) { return emit("wcg", g.gamma, g.vars, window_edges(g), {}); }

Json to_json(const PartialWindowGraph& g) {
    auto edges = window_edges(g.oriented);
    append_unoriented(edges, g.unoriented);
    return emit("pcpo-wcg", g.gamma(), g.vars(), std::move(edges), {});
}

Json to_json(const ExtendedGraph& g) { return emit("ecg", std::nullopt, g.vars, extended_edges(g), {}); }

Json to_json(const PartialExtendedGraph& g) {
    auto edges = extended_edges(g.oriented);
    append_unoriented(edges, g.unoriented);
    return emit("pcpo-ecg", std::nullopt, g.vars(), std::move(edges), {});
}

Json to_json(const SummaryGraph& g) {
    std::vector<EdgeRecord> edges;
    for (const auto& e : g.edges) edges.push_back({e.src, e.dst, std::nullopt, true});
    return emit("scg", std::nullopt, g.vars, std::move(edges), g.self_loops);
}

Json to_json(const AnyGraph& g) {
    return std::visit([](const auto& x) { return to_json(x); }, g);
}

AnyGraph graph_from_json(const Json& j) {
    if (!j.is_object()) throw DataError("graph json: expected an object");
    for (const char* key : {"type", "vars", "edges"})
        if (!j.contains(key)) throw DataError(std::string("graph json: missing key ") + key);
    const auto type = j.at("type").get<std::string>();
    const auto vars = j.at("vars").get<std::vector<std::string>>();
    std::optional<int> gamma;
    if (j.contains("gamma") && !j.at("gamma").is_null()) gamma = j.at("gamma").get<int>();

    std::set<LaggedEdge> lagged;
    std::set<DirectedPair> past, inst, summary;
    std::set<UndirectedPair> unoriented;
    for (const auto& e : j.at("edges")) {
        int src = lookup(vars, e.at("src"));
        int dst = lookup(vars, e.at("dst"));
        bool oriented = e.value("oriented", true);
        const Json lag = e.contains("lag") ? e.at("lag") : Json(nullptr);
        if (!oriented) {
            if (!lag.is_null() && lag.get<int>() != 0) throw DataError("graph json: unoriented lagged edge");
            unoriented.insert({src, dst});
        } else if (lag.is_null()) {
            if (type == "scg")
                summary.insert({src, dst});
            else
                past.insert({src, dst});
        } else if (lag.get<int>() == 0) {
            inst.insert({src, dst});
        } else {
            lagged.insert({src, lag.get<int>(), dst});
        }
    }
    std::set<int> loops;
    if (j.contains("self_loops"))
        for (const auto& s : j.at("self_loops")) loops.insert(lookup(vars, s));

    auto no_partial = [&] {
        if (!unoriented.empty()) throw DataError("graph json: unoriented edge in a " + type);
    };
    if (type == "wcg" || type == "pcpo-wcg") {
        if (!gamma) throw DataError("graph json: window graph needs gamma");
        if (!past.empty()) throw DataError("graph json: window graph edge without lag");
        WindowGraph w{*gamma, vars, lagged, inst};
        if (type == "wcg") {
            no_partial();
            w.validate();
            return w;
        }
        PartialWindowGraph p{w, unoriented};
        p.validate();
        return p;
    }
    if (type == "ecg" || type == "pcpo-ecg") {
        if (!lagged.empty()) throw DataError("graph json: extended graph edge with a lag value");
        ExtendedGraph e{vars, past, inst};
        if (type == "ecg") {
            no_partial();
            e.validate();
            return e;
        }
        PartialExtendedGraph p{e, unoriented};
        p.validate();
        return p;
    }
    if (type == "scg") {
        no_partial();
        if (!lagged.empty() || !inst.empty()) throw DataError("graph json: summary edges carry no lag");
        SummaryGraph s{vars, summary, loops};
        s.validate();
        return s;
    }
    throw DataError("graph json: unknown type " + type);
}

SummaryGraph summary_of(const AnyGraph& g) {
    struct Visitor {
        SummaryGraph operator()(const WindowGraph& x) const { return scg_from_wcg(x); }
        SummaryGraph operator()(const PartialWindowGraph& x) const { return scg_from_partial(x); }
        SummaryGraph operator()(const ExtendedGraph& x) const { return scg_from_ecg(x); }
        SummaryGraph operator()(const PartialExtendedGraph& x) const { return scg_from_partial(x); }
        SummaryGraph operator()(const SummaryGraph& x) const { return x; }
    };
    return std::visit(Visitor{}, g);
}

std::string graph_type_name(const AnyGraph& g) {
    static const char* names[] = {"wcg", "pcpo-wcg", "ecg", "pcpo-ecg", "scg"};
    return names[g.index()];
}

}  // namespace hcd
