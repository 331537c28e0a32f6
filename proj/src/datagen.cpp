#include "hybridcd/datagen.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hybridcd/error.hpp"

namespace hcd {

namespace {

struct Named {
    Structure s;
    const char* name;
};

constexpr Named kStructures[] = {
    {Structure::VStructure, "v-structure"},
    {Structure::Fork, "fork"},
    {Structure::Diamond, "diamond"},
    {Structure::UnfaithfulDiamond, "unfaithful-diamond"},
    {Structure::CyclicFork, "cyclic-fork"},
    {Structure::CyclicDiamond, "cyclic-diamond"},
};

double draw_coefficient(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> mag(0.1, 1.0);
    std::bernoulli_distribution neg(0.5);
    double a = mag(rng);
    return neg(rng) ? -a : a;
}

std::vector<std::string> names_of(Structure s) {
    if (s == Structure::VStructure || s == Structure::Fork || s == Structure::CyclicFork) return {"X", "Y", "Z"};
    return {"X", "Y", "Z", "W"};
}

// Cross edges of the summary pattern; cyclic pairs are listed once.
std::vector<DirectedPair> pattern_of(Structure s) {
    enum { X, Y, Z, W };
    switch (s) {
        case Structure::VStructure: return {{X, Z}, {Y, Z}};
        case Structure::Fork: return {{X, Y}, {X, Z}};
        case Structure::Diamond:
        case Structure::UnfaithfulDiamond: return {{X, Y}, {X, Z}, {Y, W}, {Z, W}};
        case Structure::CyclicFork: return {{X, Y}, {X, Z}};
        case Structure::CyclicDiamond: return {{X, Y}, {X, Z}, {Y, W}, {Z, W}};
    }
    return {};
}

bool is_cyclic(Structure s) { return s == Structure::CyclicFork || s == Structure::CyclicDiamond; }

void add_edge(WindowGraph& g, int src, int dst, int lag) {
    if (lag == 0)
        g.inst.insert({src, dst});
    else
        g.lagged.insert({src, lag, dst});
}

}  // namespace

std::string structure_name(Structure s) {
    for (const auto& n : kStructures)
        if (n.s == s) return n.name;
    throw InvalidArgument("unknown structure");
}

Structure parse_structure(const std::string& id) {
    for (const auto& n : kStructures)
        if (id == n.name) return n.s;
    throw InvalidArgument("unknown structure '" + id + "'");
}

std::string noise_name(Noise n) { return n == Noise::Uniform ? "uniform" : "gaussian"; }

Noise parse_noise(const std::string& id) {
    if (id == "uniform") return Noise::Uniform;
    if (id == "gaussian") return Noise::Gaussian;
    throw InvalidArgument("unknown noise '" + id + "' (expected uniform or gaussian)");
}

const std::vector<Structure>& all_structures() {
    static const std::vector<Structure> all = {Structure::VStructure,        Structure::Fork,
                                               Structure::Diamond,           Structure::UnfaithfulDiamond,
                                               Structure::CyclicFork,        Structure::CyclicDiamond};
    return all;
}

WindowGraph running_example_wcg() {
    enum { X, Y, Z, W, U };
    WindowGraph g;
    g.gamma = 2;
    g.vars = {"X", "Y", "Z", "W", "U"};
    for (int v = 0; v < 5; ++v) g.lagged.insert({v, 1, v});
    g.inst = {{Y, X}, {Z, X}, {Y, Z}, {Y, W}, {Z, W}, {W, U}};
    g.lagged.insert({X, 1, Y});
    g.lagged.insert({W, 2, Y});
    g.lagged.insert({X, 1, Z});
    g.lagged.insert({W, 1, Z});
    return g;
}

WindowGraph draw_structure(Structure s, std::mt19937_64& rng, std::optional<int> forced_lag) {
    if (forced_lag && (*forced_lag < 0 || *forced_lag > 1)) throw InvalidArgument("forced lag must be 0 or 1");
    WindowGraph g;
    g.gamma = 1;
    g.vars = names_of(s);
    const int d = g.num_vars();
    const auto pattern = pattern_of(s);

    if (s == Structure::UnfaithfulDiamond) {
        for (const auto& e : pattern) g.inst.insert(e);
        return g;
    }
    for (int v = 0; v < d; ++v) g.lagged.insert({v, 1, v});

    std::bernoulli_distribution coin(0.5);
    auto lag = [&] { return forced_lag ? *forced_lag : (coin(rng) ? 1 : 0); };
    if (!is_cyclic(s)) {
        for (const auto& e : pattern) add_edge(g, e.src, e.dst, lag());
        return g;
    }
    for (int attempt = 0; attempt < 10000; ++attempt) {
        WindowGraph c = g;
        for (const auto& e : pattern) {
            int l1 = 1, l2 = 1;
            if (!forced_lag) {
                // Uniform over {(0,1), (1,0), (1,1)}.
                int pick = std::uniform_int_distribution<int>(0, 2)(rng);
                l1 = pick == 0 ? 0 : 1;
                l2 = pick == 1 ? 0 : 1;
            } else if (*forced_lag == 0) {
                throw InvalidArgument("a cyclic pair cannot be fully instantaneous");
            }
            add_edge(c, e.src, e.dst, l1);
            add_edge(c, e.dst, e.src, l2);
        }
        if (!has_directed_cycle(d, c.inst)) return c;
    }
    throw InvalidArgument("could not draw an acyclic instantaneous part");
}

double spectral_radius(const LinearScm& scm) {
    const int d = scm.graph.num_vars();
    const int gamma = std::max(1, scm.graph.gamma);
    Eigen::MatrixXd a0 = Eigen::MatrixXd::Zero(d, d);
    for (const auto& [e, c] : scm.inst) a0(e.dst, e.src) = c;
    Eigen::MatrixXd inv = (Eigen::MatrixXd::Identity(d, d) - a0).inverse();
    Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(d * gamma, d * gamma);
    for (const auto& [e, c] : scm.lagged) comp(e.dst, (e.lag - 1) * d + e.src) += c;
    comp.topRows(d) = inv * comp.topRows(d);
    if (gamma > 1) comp.bottomLeftCorner(d * (gamma - 1), d * (gamma - 1)).setIdentity();
    Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

LinearScm sample_coefficients(const WindowGraph& g, std::mt19937_64& rng, std::optional<double> fixed,
                              int max_retries) {
    g.validate();
    for (int attempt = 0; attempt < std::max(1, max_retries); ++attempt) {
        LinearScm scm;
        scm.graph = g;
        for (const auto& e : g.lagged) scm.lagged[e] = fixed ? *fixed : draw_coefficient(rng);
        for (const auto& e : g.inst) scm.inst[e] = fixed ? *fixed : draw_coefficient(rng);
        if (spectral_radius(scm) < 1.0) return scm;
        if (fixed) throw InvalidArgument("fixed coefficient gives a non-stationary process");
    }
    throw InvalidArgument("no stable coefficient draw after " + std::to_string(max_retries) + " attempts");
}

Dataset simulate_linear(const LinearScm& scm, const SimulationOptions& opt, std::mt19937_64& rng) {
    if (opt.T < 1) throw InvalidArgument("T must be >= 1");
    if (opt.burn_in < 0) throw InvalidArgument("burn-in must be >= 0");
    const WindowGraph& g = scm.graph;
    const int d = g.num_vars();
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) all[static_cast<std::size_t>(v)] = v;
    const std::vector<int> topo = topological_order(d, g.inst, all);

    std::vector<std::vector<std::pair<LaggedEdge, double>>> lag_in(static_cast<std::size_t>(d));
    for (const auto& [e, c] : scm.lagged) lag_in[static_cast<std::size_t>(e.dst)].push_back({e, c});
    std::vector<std::vector<std::pair<int, double>>> inst_in(static_cast<std::size_t>(d));
    for (const auto& [e, c] : scm.inst) inst_in[static_cast<std::size_t>(e.dst)].push_back({e.src, c});

    const int rows = opt.burn_in + opt.T;
    Eigen::MatrixXd x(rows, d);
    x.row(0).setConstant(opt.initial_value);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXd xi(d);
    for (int t = 1; t < rows; ++t) {
        for (int v = 0; v < d; ++v) {
            double e = opt.noise == Noise::Uniform ? unif(rng) : gauss(rng);
            xi(v) = opt.zero_noise ? 0.0 : opt.noise_scale * e;
        }
        for (int v : topo) {
            double val = xi(v);
            for (const auto& [e, c] : lag_in[static_cast<std::size_t>(v)])
                val += c * (t - e.lag >= 0 ? x(t - e.lag, e.src) : opt.initial_value);
            for (const auto& [src, c] : inst_in[static_cast<std::size_t>(v)]) val += c * x(t, src);
            x(t, v) = val;
        }
    }
    Dataset out;
    out.values = x.bottomRows(opt.T);
    out.names = g.vars;
    return out;
}

SimulatedScm gen_structure(const ScmSpec& spec) {
    if (spec.T < 1) throw InvalidArgument("T must be >= 1");
    std::mt19937_64 rng(spec.seed);
    SimulationOptions opt{spec.noise, spec.noise_scale, spec.T, spec.burn_in, spec.zero_noise, spec.initial_value};
    for (int attempt = 0; attempt < std::max(1, spec.max_retries); ++attempt) {
        SimulatedScm out;
        out.wcg = draw_structure(spec.structure, rng, spec.forced_lag);
        if (spec.structure == Structure::UnfaithfulDiamond) {
            enum { X, Y, Z, W };
            LinearScm scm;
            scm.graph = out.wcg;
            auto coef = [&] { return spec.fixed_coefficient ? *spec.fixed_coefficient : draw_coefficient(rng); };
            double a_xy = coef(), a_xz = coef(), a_zw = coef();
            scm.inst[{X, Y}] = a_xy;
            scm.inst[{X, Z}] = a_xz;
            scm.inst[{Z, W}] = a_zw;
            scm.inst[{Y, W}] = -a_xz * a_zw / a_xy;
            out.scm = scm;
        } else {
            out.scm = sample_coefficients(out.wcg, rng, spec.fixed_coefficient, spec.max_retries);
        }
        out.data = simulate_linear(out.scm, opt, rng);
        if (!out.data.values.allFinite()) continue;
        out.scg = scg_from_wcg(out.wcg);
        return out;
    }
    throw InvalidArgument("simulation kept producing non-finite values");
}

}  // namespace hcd
