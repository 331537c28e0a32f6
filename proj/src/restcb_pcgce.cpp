#include <algorithm>
#include <cmath>
#include <set>

#include "hybridcd/error.hpp"
#include "hybridcd/restcb.hpp"
#include "subsets.hpp"

namespace hcd {

namespace {

struct ExtendedState {
    bool ordered = false;
    int d = 0;
    std::set<DirectedPair> lagged;
    std::set<DirectedPair> directed;
    std::set<UndirectedPair> undirected;

    bool has(const ExtendedNode& x, int y) const {
        if (x.past) return lagged.count({x.var, y}) > 0;
        return ordered ? directed.count({x.var, y}) > 0 : undirected.count({x.var, y}) > 0;
    }

    void remove(const ExtendedNode& x, int y) {
        if (x.past)
            lagged.erase({x.var, y});
        else if (ordered)
            directed.erase({x.var, y});
        else
            undirected.erase({x.var, y});
    }

    // Sorted by (var, past).
    std::vector<ExtendedNode> get(int y) const {
        std::vector<ExtendedNode> out;
        for (int v = 0; v < d; ++v) {
            if (v != y && has({v, false}, y)) out.push_back({v, false});
            if (has({v, true}, y)) out.push_back({v, true});
        }
        return out;
    }
};

struct Entry {
    ExtendedNode x;
    int y;
    std::vector<ExtendedNode> s;
    double h;
};

}  // namespace

PartialExtendedGraph rest_pcgce(ExtendedCiTest& ci, const std::vector<std::string>& vars, double alpha,
                                const std::optional<CausalOrder>& order) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    const int d = static_cast<int>(vars.size());
    if (order) check_full_order(*order, d);

    ExtendedState g;
    g.ordered = order.has_value();
    g.d = d;
    for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) g.lagged.insert({x, y});
    if (order) {
        const auto& o = order->nodes;
        for (std::size_t i = 0; i < o.size(); ++i)
            for (std::size_t j = i + 1; j < o.size(); ++j) g.directed.insert({o[i], o[j]});
    } else {
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) g.undirected.insert({a, b});
    }

    for (std::size_t n = 0;; ++n) {
        bool any = false;
        std::vector<Entry> entries;
        for (int y = 0; y < d; ++y) {
            const std::vector<ExtendedNode> get = g.get(y);
            for (const auto& x : get) {
                std::vector<ExtendedNode> cand;
                for (const auto& c : get)
                    if (c != x) cand.push_back(c);
                if (cand.size() < n) continue;
                any = true;
                detail::for_each_subset(cand, n, [&](const std::vector<ExtendedNode>& s) {
                    TestResult r = ci.test(x, {y, false}, s, false);
                    entries.push_back({x, y, s, std::abs(r.statistic)});
                    return true;
                });
            }
        }
        if (!any) break;

        std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.h < b.h; });
        for (const auto& e : entries) {
            if (!g.has(e.x, e.y)) continue;
            const std::vector<ExtendedNode> get = g.get(e.y);
            bool inside = std::all_of(e.s.begin(), e.s.end(), [&](const ExtendedNode& z) {
                return std::find(get.begin(), get.end(), z) != get.end();
            });
            if (!inside) continue;
            TestResult r = ci.test(e.x, {e.y, false}, e.s, true);
            if (r.p_value > alpha) g.remove(e.x, e.y);
        }
    }

    PartialExtendedGraph out;
    out.oriented.vars = vars;
    out.oriented.lagged = std::move(g.lagged);
    out.oriented.inst = std::move(g.directed);
    out.unoriented = std::move(g.undirected);
    return out;
}

PartialExtendedGraph rest_pcgce(const Dataset& data, int gamma, double alpha,
                                const std::optional<CausalOrder>& order) {
    Dataset z = standardize(data);
    PartialCorrExtendedCi ci(z, gamma);
    return rest_pcgce(ci, z.names, alpha, order);
}

}  // namespace hcd
