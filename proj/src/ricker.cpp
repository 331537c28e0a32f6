#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hybridcd/datagen.hpp"
#include "hybridcd/error.hpp"

namespace hcd {

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

bool connected(int n, const std::set<UndirectedPair>& links) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& l : links) parent[static_cast<std::size_t>(find_root(parent, l.a))] = find_root(parent, l.b);
    for (int v = 1; v < n; ++v)
        if (find_root(parent, v) != find_root(parent, 0)) return false;
    return true;
}

}  // namespace

RickerModel draw_ricker_model(const RickerParams& p, std::mt19937_64& rng) {
    if (p.S < 1) throw InvalidArgument("species count must be >= 1");
    RickerModel m;
    m.S = p.S;
    m.a = Eigen::MatrixXd::Zero(p.S, p.S);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> strength(p.strength_min, p.strength_max);
    m.optimum.resize(static_cast<std::size_t>(p.S));
    for (auto& o : m.optimum) o = unit(rng);

    if (p.no_interactions) {
        m.level.assign(static_cast<std::size_t>(p.S), 0);
        for (int v = 0; v < p.S; ++v) m.a(v, v) = p.self_effect;
        return m;
    }

    const int levels = std::min(3, p.S);
    std::vector<std::vector<int>> members(static_cast<std::size_t>(levels));
    for (int v = 0, l = 0; l < levels; ++l) {
        int size = p.S / levels + (l < p.S % levels ? 1 : 0);
        for (int k = 0; k < size; ++k, ++v) {
            members[static_cast<std::size_t>(l)].push_back(v);
            m.level.push_back(l);
        }
    }

    // Each link joins adjacent levels; lower end is the prey.
    std::set<UndirectedPair> links;
    for (int l = 1; l < levels; ++l) {
        const auto& below = members[static_cast<std::size_t>(l - 1)];
        for (int v : members[static_cast<std::size_t>(l)]) {
            std::uniform_int_distribution<std::size_t> pick(0, below.size() - 1);
            links.insert({v, below[pick(rng)]});
        }
    }
    std::vector<UndirectedPair> candidates;
    for (int l = 1; l < levels; ++l)
        for (int v : members[static_cast<std::size_t>(l)])
            for (int u : members[static_cast<std::size_t>(l - 1)]) candidates.push_back({u, v});
    while (!connected(p.S, links)) {
        std::vector<UndirectedPair> open;
        for (const auto& c : candidates)
            if (!links.count(c)) open.push_back(c);
        std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
        links.insert(open[pick(rng)]);
    }

    for (const auto& l : links) {
        int prey = m.level[static_cast<std::size_t>(l.a)] < m.level[static_cast<std::size_t>(l.b)] ? l.a : l.b;
        int pred = l.other(prey);
        m.a(pred, prey) = -strength(rng);
        m.a(prey, pred) = strength(rng);
    }
    for (int v = 0; v < p.S; ++v) m.a(v, v) = -strength(rng);
    return m;
}

Dataset simulate_ricker(const RickerModel& m, const RickerParams& p, std::mt19937_64& rng) {
    if (p.T < 1) throw InvalidArgument("T must be >= 1");
    const int S = m.S;
    const int rows = p.burn_in + p.T;
    std::normal_distribution<double> eps(0.0, p.sigma_r);
    Eigen::VectorXd growth(S);
    for (int y = 0; y < S; ++y) {
        if (m.level[static_cast<std::size_t>(y)] == 0) {
            double dev = m.optimum[static_cast<std::size_t>(y)] - p.x;
            growth(y) = p.y_bar * (-m.a(y, y)) * std::exp(-dev * dev / (2.0 * p.sigma_y * p.sigma_y));
        } else {
            growth(y) = -p.mu;
        }
    }
    Eigen::MatrixXd n(rows, S);
    n.row(0).setConstant(p.y_bar);
    for (int t = 1; t < rows; ++t) {
        Eigen::RowVectorXd drive = n.row(t - 1) * m.a;
        for (int y = 0; y < S; ++y) {
            double e = eps(rng);
            n(t, y) = n(t - 1, y) * std::exp(p.delta_t * (drive(y) + growth(y)) + e);
        }
    }
    Dataset out;
    out.values = n.bottomRows(p.T);
    for (int y = 0; y < S; ++y) out.names.push_back("S" + std::to_string(y + 1));
    return out;
}

SimulatedRicker gen_ricker(const RickerParams& p) {
    std::mt19937_64 rng(p.seed);
    for (int attempt = 0; attempt < std::max(1, p.max_retries); ++attempt) {
        SimulatedRicker out;
        out.model = draw_ricker_model(p, rng);
        out.data = simulate_ricker(out.model, p, rng);
        if (!out.data.values.allFinite()) continue;

        out.scg.vars = out.data.names;
        for (int x = 0; x < p.S; ++x) {
            if (out.model.a(x, x) != 0.0) out.scg.self_loops.insert(x);
            for (int y = 0; y < p.S; ++y)
                if (x != y && out.model.a(x, y) != 0.0) out.scg.edges.insert({x, y});
        }
        if ((out.data.values.row(p.T - 1).array() == 0.0).all())
            out.warnings.push_back("every species went extinct");
        return out;
    }
    throw InvalidArgument("Ricker simulation kept producing non-finite values");
}

}  // namespace hcd
