#include <gtest/gtest.h>

#include <random>

#include "hybridcd/cycle_groups.hpp"
#include "hybridcd/datagen.hpp"
#include "hybridcd/error.hpp"
#include "oracles.hpp"

using namespace hcd;

namespace {

enum { X, Y, Z, W, U };

// Every basis cycle is a closed walk over existing edges.
void expect_valid_cycles(const std::vector<std::vector<int>>& cycles, const std::set<UndirectedPair>& edges) {
    for (const auto& c : cycles) {
        ASSERT_GE(c.size(), 3u);
        for (std::size_t i = 0; i < c.size(); ++i) EXPECT_TRUE(edges.count({c[i], c[(i + 1) % c.size()]}));
    }
}

}  // namespace

TEST(CycleGroups, BasisSizeIsCyclomaticNumber) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        auto edges = oracle::random_undirected(rng, n, 0.4);
        auto basis = paton_cycle_basis(n, edges);
        expect_valid_cycles(basis, edges);
        // Components of the edge graph over all n nodes.
        std::vector<int> comp(static_cast<std::size_t>(n));
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> root = [&](int v) {
            return comp[static_cast<std::size_t>(v)] == v ? v : root(comp[static_cast<std::size_t>(v)]);
        };
        for (const auto& e : edges) comp[static_cast<std::size_t>(root(e.a))] = root(e.b);
        int components = 0;
        for (int v = 0; v < n; ++v) components += root(v) == v ? 1 : 0;
        EXPECT_EQ(static_cast<int>(basis.size()), static_cast<int>(edges.size()) - n + components);
    }
}

TEST(CycleGroups, MatchesBruteForceCycleClosure) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        double p = 0.15 + 0.5 * static_cast<double>(rng() % 100) / 100.0;
        auto edges = oracle::random_undirected(rng, n, p);
        ASSERT_EQ(find_ucgs(n, edges), oracle::brute_force_groups(n, edges)) << "case " << i;
    }
}

TEST(CycleGroups, RunningExampleHasTwoGroups) {
    PartialWindowGraph p = pcpo_from_wcg(running_example_wcg());
    auto groups = find_ucgs(p);
    ASSERT_EQ(groups.size(), 2u);
    EXPECT_EQ(groups[0].nodes, (std::set<int>{X, Y, Z, W}));
    EXPECT_EQ(groups[1].nodes, (std::set<int>{W, U}));
    EXPECT_EQ(groups[0].edges.size(), 5u);
}

TEST(CycleGroups, OrientGroupFollowsOrder) {
    PartialWindowGraph p = pcpo_from_wcg(running_example_wcg());
    auto groups = find_ucgs(p);
    PartialWindowGraph q = orient_group(p, groups[1], CausalOrder{{W, U}});
    EXPECT_TRUE(q.oriented.inst.count({W, U}));
    EXPECT_EQ(q.unoriented.size(), 5u);
    q = orient_group(q, groups[0], CausalOrder{{Y, Z, W, X}});
    EXPECT_TRUE(q.complete());
    EXPECT_EQ(q.oriented, running_example_wcg());
}

TEST(CycleGroups, OrientGroupNeedsEveryNode) {
    PartialWindowGraph p = pcpo_from_wcg(running_example_wcg());
    auto groups = find_ucgs(p);
    EXPECT_THROW(orient_group(p, groups[0], CausalOrder{{Y, Z}}), InvalidArgument);
}

TEST(CycleGroups, ExtendedGraphGroups) {
    PartialExtendedGraph p = pcpo_from_ecg(ecg_from_wcg(running_example_wcg()));
    auto groups = find_ucgs(p);
    ASSERT_EQ(groups.size(), 2u);
    PartialExtendedGraph q = orient_group(p, groups[0], CausalOrder{{Y, Z, X, W}});
    q = orient_group(q, groups[1], CausalOrder{{W, U}});
    EXPECT_EQ(q.oriented, ecg_from_wcg(running_example_wcg()));
}

TEST(CycleGroups, NoEdgesNoGroups) { EXPECT_TRUE(find_ucgs(4, {}).empty()); }
