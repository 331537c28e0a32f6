#include <algorithm>
#include <limits>
#include <set>

#include "hybridcd/error.hpp"
#include "hybridcd/restcb.hpp"
#include "subsets.hpp"

namespace hcd {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using IMin = std::map<std::pair<LaggedNode, LaggedNode>, double>;

double imin_of(const IMin& m, const LaggedNode& x, const LaggedNode& y) {
    auto it = m.find({x, y});
    return it == m.end() ? kInf : it->second;
}

void update_imin(IMin& m, const LaggedNode& x, const LaggedNode& y, double h) {
    auto [it, fresh] = m.try_emplace({x, y}, std::abs(h));
    if (!fresh) it->second = std::min(it->second, std::abs(h));
}

// Stable sort by i_min descending.
void sort_by_imin(std::vector<LaggedNode>& nodes, const IMin& m, const LaggedNode& y) {
    std::stable_sort(nodes.begin(), nodes.end(), [&](const LaggedNode& a, const LaggedNode& b) {
        return imin_of(m, a, y) > imin_of(m, b, y);
    });
}

struct PresentSlice {
    bool ordered = false;
    std::set<DirectedPair> directed;
    std::set<UndirectedPair> undirected;

    bool has(int x, int y) const {
        return ordered ? directed.count({x, y}) > 0 : undirected.count({x, y}) > 0;
    }

    void remove(int x, int y) {
        if (ordered)
            directed.erase({x, y});
        else
            undirected.erase({x, y});
    }

    std::vector<int> get(int y, int d) const {
        std::vector<int> out;
        for (int x = 0; x < d; ++x)
            if (x != y && has(x, y)) out.push_back(x);
        return out;
    }
};

void lagged_phase(WindowCiTest& ci, int d, int gamma, double alpha, PruneState& st) {
    for (int y = 0; y < d; ++y) {
        const LaggedNode yt{y, 0};
        auto& b = st.b_hat[y];
        b.clear();
        for (int lag = 1; lag <= gamma; ++lag)
            for (int v = 0; v < d; ++v) b.push_back({v, lag});
        for (std::size_t n = 0; !b.empty() && b.size() - 1 >= n; ++n) {
            std::vector<LaggedNode> marked;
            for (const auto& x : b) {
                std::vector<LaggedNode> s;
                for (const auto& c : b) {
                    if (s.size() == n) break;
                    if (c != x) s.push_back(c);
                }
                TestResult r = ci.test(x, yt, s);
                update_imin(st.i_min, x, yt, r.statistic);
                if (r.p_value > alpha) marked.push_back(x);
            }
            for (const auto& x : marked) b.erase(std::find(b.begin(), b.end(), x));
            sort_by_imin(b, st.i_min, yt);
        }
    }
}

// One test direction of a remaining edge: x_{t-lag} against y_t.
struct Probe {
    LaggedNode x;
    int y;
};

}  // namespace

void check_full_order(const CausalOrder& order, int d) {
    std::vector<int> sorted = order.nodes;
    std::sort(sorted.begin(), sorted.end());
    bool ok = static_cast<int>(sorted.size()) == d;
    for (int i = 0; ok && i < d; ++i) ok = sorted[static_cast<std::size_t>(i)] == i;
    if (!ok) throw InvalidArgument("causal order must list every variable exactly once");
}

PartialWindowGraph rest_pcmci_plus(WindowCiTest& ci, const std::vector<std::string>& vars, int gamma,
                                   double alpha, const std::optional<CausalOrder>& order, PruneState* state) {
    if (gamma < 1) throw InvalidArgument("gamma must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
    if (ci.max_lag() < 2 * gamma) throw InvalidArgument("ci test must cover lags up to 2*gamma");
    const int d = static_cast<int>(vars.size());
    if (order) check_full_order(*order, d);

    PruneState local;
    PruneState& st = state ? *state : local;
    st = PruneState{};
    lagged_phase(ci, d, gamma, alpha, st);

    std::set<LaggedEdge> lagged;
    for (const auto& [y, b] : st.b_hat)
        for (const auto& x : b) lagged.insert({x.var, x.lag, y});

    PresentSlice present;
    present.ordered = order.has_value();
    if (order) {
        const auto& o = order->nodes;
        for (std::size_t i = 0; i < o.size(); ++i)
            for (std::size_t j = i + 1; j < o.size(); ++j) present.directed.insert({o[i], o[j]});
    } else {
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b) present.undirected.insert({a, b});
    }

    IMin imin;
    // Present-slice candidates per target, kept sorted by i_min descending.
    auto get_sorted = [&](int y) {
        std::vector<int> g = present.get(y, d);
        std::stable_sort(g.begin(), g.end(), [&](int a, int b) {
            return imin_of(imin, {a, 0}, {y, 0}) > imin_of(imin, {b, 0}, {y, 0});
        });
        return g;
    };

    for (std::size_t n = 0;; ++n) {
        std::vector<Probe> probes;
        for (const auto& e : lagged) probes.push_back({{e.src, e.lag}, e.dst});
        for (int y = 0; y < d; ++y)
            for (int x = 0; x < d; ++x)
                if (x != y && present.has(x, y)) probes.push_back({{x, 0}, y});

        std::map<int, std::vector<int>> get;
        for (int y = 0; y < d; ++y) get[y] = get_sorted(y);

        bool any = false;
        std::set<LaggedEdge> drop_lagged;
        std::set<std::pair<int, int>> drop_present;
        auto dropped = [&](const Probe& p) {
            if (p.x.lag > 0) return drop_lagged.count({p.x.var, p.x.lag, p.y}) > 0;
            return drop_present.count({p.x.var, p.y}) > 0 || (!present.ordered && drop_present.count({p.y, p.x.var}));
        };

        for (const auto& p : probes) {
            std::vector<int> cand;
            for (int z : get[p.y])
                if (!(p.x.lag == 0 && z == p.x.var)) cand.push_back(z);
            if (cand.size() < n) continue;
            any = true;
            if (dropped(p)) continue;

            const LaggedNode yt{p.y, 0};
            std::set<LaggedNode> base;
            for (const auto& b : st.b_hat[p.y])
                if (b != p.x) base.insert(b);
            for (const auto& b : st.b_hat[p.x.var]) base.insert({b.var, b.lag + p.x.lag});
            base.erase(p.x);
            base.erase(yt);

            detail::for_each_subset(cand, n, [&](const std::vector<int>& s) {
                std::set<LaggedNode> cond = base;
                for (int z : s) cond.insert({z, 0});
                cond.erase(p.x);
                TestResult r = ci.test(yt, p.x, std::vector<LaggedNode>(cond.begin(), cond.end()));
                update_imin(imin, p.x, yt, r.statistic);
                if (r.p_value > alpha) {
                    if (p.x.lag > 0)
                        drop_lagged.insert({p.x.var, p.x.lag, p.y});
                    else
                        drop_present.insert({p.x.var, p.y});
                    return false;
                }
                return true;
            });
        }
        if (!any) break;
        for (const auto& e : drop_lagged) lagged.erase(e);
        for (const auto& [x, y] : drop_present) present.remove(x, y);
    }

    PartialWindowGraph out;
    out.oriented.gamma = gamma;
    out.oriented.vars = vars;
    out.oriented.lagged = std::move(lagged);
    out.oriented.inst = std::move(present.directed);
    out.unoriented = std::move(present.undirected);
    return out;
}

PartialWindowGraph rest_pcmci_plus(const Dataset& data, int gamma, double alpha,
                                   const std::optional<CausalOrder>& order) {
    Dataset z = standardize(data);
    PartialCorrWindowCi ci(z, 2 * gamma);
    return rest_pcmci_plus(ci, z.names, gamma, alpha, order);
}

}  // namespace hcd
