#include <gtest/gtest.h>

#include <algorithm>

#include "hybridcd/datagen.hpp"
#include "hybridcd/error.hpp"
#include "hybridcd/restnb.hpp"
#include "oracles.hpp"

using namespace hcd;

namespace {

enum { X, Y, Z, W, U };

std::vector<LaggedNode> lags_of(int d, int gamma) {
    std::vector<LaggedNode> out;
    for (int lag = 1; lag <= gamma; ++lag)
        for (int v = 0; v < d; ++v) out.push_back({v, lag});
    return out;
}

bool precedes(const CausalOrder& o, int a, int b) {
    auto pa = std::find(o.nodes.begin(), o.nodes.end(), a);
    auto pb = std::find(o.nodes.begin(), o.nodes.end(), b);
    return pa < pb;
}

}  // namespace

TEST(RestVlingam, SingletonNeedsNoData) {
    Dataset empty;
    EXPECT_EQ(rest_vlingam(empty, 5, 0.05, {2}, {}).nodes, std::vector<int>{2});
}

TEST(RestVlingam, RejectsBadTargets) {
    Dataset empty;
    EXPECT_THROW(rest_vlingam(empty, 5, 0.05, {}, {}), InvalidArgument);
    EXPECT_THROW(rest_vlingam(empty, 5, 0.05, {1, 1}, {}), InvalidArgument);
}

TEST(RestVlingam, ForkRootComesFirst) {
    int correct = 0;
    for (int seed = 0; seed < 20; ++seed) {
        ScmSpec spec;
        spec.structure = Structure::Fork;
        spec.forced_lag = 0;
        spec.seed = static_cast<std::uint64_t>(seed);
        Dataset z = standardize(gen_structure(spec).data);
        CausalOrder o = rest_vlingam(z, 1, 0.05, {X, Y, Z}, lags_of(3, 1));
        ASSERT_EQ(o.nodes.size(), 3u);
        if (o.nodes.front() == X) ++correct;
    }
    EXPECT_GE(correct, 18);
}

TEST(RestVlingam, RunningExampleOrderIsValid) {
    const WindowGraph truth = running_example_wcg();
    int valid = 0;
    const int seeds = 20;
    for (int seed = 0; seed < seeds; ++seed) {
        Dataset z = standardize(oracle::simulate(truth, static_cast<std::uint64_t>(seed), 1000));
        CausalOrder o = rest_vlingam(z, 2, 0.05, {X, Y, Z, W, U}, lags_of(5, 2));
        bool ok = true;
        for (const auto& e : truth.inst) ok = ok && precedes(o, e.src, e.dst);
        valid += ok ? 1 : 0;
    }
    EXPECT_GE(valid, 16);
}

TEST(RestVlingam, OutputIsDeterministicPermutation) {
    Dataset z = standardize(oracle::simulate(running_example_wcg(), 3, 500));
    CausalOrder a = rest_vlingam(z, 2, 0.05, {U, X, W}, {{X, 1}, {W, 1}});
    CausalOrder b = rest_vlingam(z, 2, 0.05, {W, X, U}, {{X, 1}, {W, 1}});
    EXPECT_EQ(a, b);
    std::vector<int> sorted = a.nodes;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{X, W, U}));
}

TEST(RestVlingam, DegenerateResidualNamesVariable) {
    Dataset d;
    d.names = {"A", "B"};
    d.values.resize(100, 2);
    for (int t = 0; t < 100; ++t) {
        d.values(t, 0) = (t % 2 == 0) ? 1.0 : -1.0;
        d.values(t, 1) = std::sin(0.3 * t);
    }
    // A_t is a deterministic function of A_{t-1}.
    try {
        rest_vlingam(d, 1, 0.05, {0, 1}, {{0, 1}});
        FAIL() << "expected DegenerateSeries";
    } catch (const DegenerateSeries& e) {
        EXPECT_EQ(e.variable(), "A");
    }
}

TEST(RestVlingam, CustomMeasureIsUsed) {
    Dataset z = standardize(oracle::simulate(running_example_wcg(), 1, 300));
    // Constant measure: every h ties, so the order is by index.
    auto flat = [](const Eigen::VectorXd&, const Eigen::VectorXd&) { return 1.0; };
    EXPECT_EQ(rest_vlingam(z, 2, 0.05, {U, Y, X}, {}, flat).nodes, (std::vector<int>{X, Y, U}));
}

TEST(Orderers, OracleUsesTrueInstantaneousOrder) {
    OracleOrderer o(running_example_wcg());
    EXPECT_EQ(o.order({X, Y, Z, W, U}, {}).nodes, (std::vector<int>{Y, Z, X, W, U}));
    EXPECT_EQ(o.order({U, W}, {}).nodes, (std::vector<int>{W, U}));
    EXPECT_EQ(o.calls(), 2u);
}

TEST(Orderers, VlingamOrdererCountsCalls) {
    Dataset z = standardize(oracle::simulate(running_example_wcg(), 2, 300));
    VlingamOrderer o(z, 2, 0.05);
    o.order({X, Y}, {});
    o.order({Z}, {});
    EXPECT_EQ(o.calls(), 2u);
}
