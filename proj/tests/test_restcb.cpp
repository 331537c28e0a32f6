#include <gtest/gtest.h>

#include <random>

#include "hybridcd/datagen.hpp"
#include "hybridcd/error.hpp"
#include "hybridcd/restcb.hpp"
#include "oracles.hpp"

using namespace hcd;

namespace {

enum { X, Y, Z, W, U };

const CausalOrder kRunningOrder{{Y, Z, W, X, U}};

CausalOrder true_order(const WindowGraph& g) {
    return {topological_order(g.num_vars(), g.inst, oracle::iota_vec(g.num_vars()))};
}

}  // namespace

// Running example with every coefficient 0.3; random coefficients often give
// near-deterministic instantaneous relations that no CI-based method resolves.
Dataset running_data(std::uint64_t seed) {
    return oracle::simulate(running_example_wcg(), seed, 1000, Noise::Uniform, 0.3);
}

TEST(RestPcmci, RunningExampleWithOrder) {
    const WindowGraph truth = running_example_wcg();
    int good = 0;
    for (int seed = 0; seed < 20; ++seed) {
        PartialWindowGraph g = rest_pcmci_plus(running_data(static_cast<std::uint64_t>(seed)), 2, 0.05, kRunningOrder);
        ASSERT_TRUE(g.complete());
        if (oracle::edge_errors(g.oriented, truth) <= 1) ++good;
    }
    EXPECT_GE(good, 16);
}

TEST(RestPcgce, RunningExampleWithOrder) {
    const ExtendedGraph truth = ecg_from_wcg(running_example_wcg());
    int good = 0;
    for (int seed = 0; seed < 20; ++seed) {
        PartialExtendedGraph g = rest_pcgce(running_data(static_cast<std::uint64_t>(seed)), 2, 0.05, kRunningOrder);
        ASSERT_TRUE(g.complete());
        if (oracle::edge_errors(g.oriented, truth) <= 1) ++good;
    }
    EXPECT_GE(good, 16);
}

// Skeletons from tigramite's PCMCI+ (ParCorr, tau_max 2, pc_alpha 0.05) on
// the standardized running-example data with random coefficients, seeds 0..7.
// Entries are {a, lag, b}: a_{t-lag} -> b_t, or the adjacency a - b when lag is 0.
const std::vector<std::set<LaggedEdge>> kReferenceSkeletons = {
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {1, 0, 2}, {1, 0, 3}, {2, 0, 3}, {2, 1, 2}, {3, 0, 4}, {3, 1, 2}, {3, 2, 1}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 0, 2}, {1, 0, 3}, {1, 1, 1}, {1, 1, 3}, {2, 0, 3}, {2, 1, 2}, {3, 0, 4}, {3, 1, 2}, {3, 2, 3}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {1, 0, 2}, {1, 0, 3}, {1, 1, 1}, {2, 0, 3}, {2, 1, 2}, {2, 1, 3}, {3, 0, 4}, {3, 1, 3}, {3, 2, 1}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 0}, {1, 1, 1}, {2, 0, 3}, {2, 1, 2}, {3, 0, 4}, {3, 1, 2}, {3, 1, 3}, {3, 2, 1}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}, {1, 0, 3}, {2, 0, 3}, {2, 1, 2}, {3, 0, 4}, {3, 1, 2}, {3, 1, 3}, {3, 2, 1}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 1, 3}, {1, 0, 2}, {2, 0, 3}, {2, 1, 2}, {3, 0, 4}, {3, 2, 1}, {3, 2, 3}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 1, 1}, {0, 2, 1}, {1, 0, 2}, {1, 0, 3}, {2, 0, 3}, {2, 1, 2}, {2, 2, 1}, {3, 0, 4}, {3, 1, 3}, {3, 2, 1}, {4, 1, 4}},
    {{0, 0, 1}, {0, 0, 2}, {0, 1, 0}, {0, 2, 2}, {1, 0, 2}, {1, 0, 3}, {2, 0, 3}, {2, 1, 1}, {2, 1, 2}, {3, 0, 4}, {3, 1, 0}, {3, 1, 2}, {3, 1, 3}, {3, 2, 1}, {4, 1, 4}},
};

TEST(RestPcmci, MatchesReferenceSkeletonWithoutOrder) {
    for (std::size_t seed = 0; seed < kReferenceSkeletons.size(); ++seed) {
        Dataset data = oracle::simulate(running_example_wcg(), seed, 1000);
        PartialWindowGraph g = rest_pcmci_plus(data, 2, 0.05, std::nullopt);
        std::set<LaggedEdge> got = g.oriented.lagged;
        for (const auto& e : g.unoriented) got.insert({e.a, 0, e.b});
        for (const auto& e : g.oriented.inst) got.insert({std::min(e.src, e.dst), 0, std::max(e.src, e.dst)});
        EXPECT_EQ(got, kReferenceSkeletons[seed]) << "seed " << seed;
    }
}

TEST(RestPcmci, PureNoiseFalsePositiveRate) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const int d = 3, gamma = 2;
    int candidates = 0, spurious = 0;
    for (int rep = 0; rep < 20; ++rep) {
        Dataset data;
        data.names = {"A", "B", "C"};
        data.values.resize(500, d);
        for (int t = 0; t < 500; ++t)
            for (int v = 0; v < d; ++v) data.values(t, v) = u(rng);
        PartialWindowGraph g = rest_pcmci_plus(data, gamma, 0.05, std::nullopt);
        candidates += d * d * gamma + d * (d - 1) / 2;
        spurious += static_cast<int>(g.oriented.lagged.size() + g.oriented.inst.size() + g.unoriented.size());
    }
    EXPECT_LE(static_cast<double>(spurious) / candidates, 0.08) << spurious << " of " << candidates;
}

TEST(RestCb, OracleRecoversTableStructures) {
    for (Structure s : all_structures()) {
        for (int seed = 0; seed < 10; ++seed) {
            std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
            WindowGraph truth = draw_structure(s, rng);
            const int gamma = 3;
            DSepWindowCi wci(truth, 2 * gamma, 4 * gamma + 2);
            DSepExtendedCi eci(truth, gamma, 4 * gamma + 2);

            PartialWindowGraph w = rest_pcmci_plus(wci, truth.vars, gamma, 0.05, true_order(truth));
            EXPECT_EQ(w.oriented.lagged, truth.lagged) << structure_name(s);
            EXPECT_EQ(w.oriented.inst, truth.inst) << structure_name(s);

            PartialWindowGraph wu = rest_pcmci_plus(wci, truth.vars, gamma, 0.05, std::nullopt);
            EXPECT_EQ(wu.oriented.lagged, truth.lagged);
            EXPECT_EQ(wu.unoriented, pcpo_from_wcg(truth).unoriented);

            PartialExtendedGraph e = rest_pcgce(eci, truth.vars, 0.05, true_order(truth));
            EXPECT_EQ(e.oriented, ecg_from_wcg(truth)) << structure_name(s);
            PartialExtendedGraph eu = rest_pcgce(eci, truth.vars, 0.05, std::nullopt);
            EXPECT_EQ(eu, pcpo_from_ecg(ecg_from_wcg(truth))) << structure_name(s);
        }
    }
}

TEST(RestCb, OracleRecoversRunningExample) {
    const WindowGraph truth = running_example_wcg();
    DSepWindowCi wci(truth, 4, 10);
    PartialWindowGraph w = rest_pcmci_plus(wci, truth.vars, 2, 0.05, kRunningOrder);
    EXPECT_EQ(w.oriented, truth);
    DSepExtendedCi eci(truth, 2, 10);
    EXPECT_EQ(rest_pcgce(eci, truth.vars, 0.05, kRunningOrder).oriented, ecg_from_wcg(truth));
}

TEST(RestCb, SingleVariable) {
    Dataset data = oracle::simulate(WindowGraph{1, {"A"}, {{0, 1, 0}}, {}}, 4, 500);
    PartialWindowGraph w = rest_pcmci_plus(data, 3, 0.05, std::nullopt);
    EXPECT_TRUE(w.unoriented.empty());
    EXPECT_TRUE(w.oriented.inst.empty());
    EXPECT_TRUE(w.oriented.lagged.count({0, 1, 0}));
    PartialExtendedGraph e = rest_pcgce(data, 3, 0.05, std::nullopt);
    EXPECT_EQ(e.oriented.lagged, (std::set<DirectedPair>{{0, 0}}));
}

TEST(RestCb, OutputRespectsOrderAndInitialGraph) {
    Dataset data = oracle::simulate(running_example_wcg(), 5, 600);
    CausalOrder o{{U, W, X, Z, Y}};
    PartialWindowGraph w = rest_pcmci_plus(data, 2, 0.05, o);
    auto pos = [&](int v) { return std::find(o.nodes.begin(), o.nodes.end(), v) - o.nodes.begin(); };
    for (const auto& e : w.oriented.inst) EXPECT_LT(pos(e.src), pos(e.dst));
    for (const auto& e : w.oriented.lagged) {
        EXPECT_GE(e.lag, 1);
        EXPECT_LE(e.lag, 2);
    }
    PartialExtendedGraph g = rest_pcgce(data, 2, 0.05, o);
    for (const auto& e : g.oriented.inst) EXPECT_LT(pos(e.src), pos(e.dst));
}

TEST(RestCb, ExposesPruneState) {
    const WindowGraph truth = running_example_wcg();
    DSepWindowCi wci(truth, 4, 10);
    PruneState st;
    rest_pcmci_plus(wci, truth.vars, 2, 0.05, kRunningOrder, &st);
    EXPECT_EQ(st.b_hat.size(), 5u);
    // Lagged candidates that survive the first phase include the true parents.
    for (const auto& e : truth.lagged) {
        const auto& b = st.b_hat.at(e.dst);
        EXPECT_NE(std::find(b.begin(), b.end(), LaggedNode{e.src, e.lag}), b.end());
    }
}

TEST(RestCb, RejectsBadParameters) {
    const WindowGraph truth = running_example_wcg();
    DSepWindowCi wci(truth, 4, 10);
    EXPECT_THROW(rest_pcmci_plus(wci, truth.vars, 3, 0.05, std::nullopt), InvalidArgument);
    EXPECT_THROW(rest_pcmci_plus(wci, truth.vars, 2, 1.5, std::nullopt), InvalidArgument);
    EXPECT_THROW(rest_pcmci_plus(wci, truth.vars, 2, 0.05, CausalOrder{{X, Y}}), InvalidArgument);
}
