#include <doctest.h>

#include <random>
#include <sstream>

#include "d2dsim/clustering.hpp"
#include "d2dsim/errors.hpp"
#include "d2dsim/rng.hpp"

using namespace d2dsim;

TEST_CASE("interference graph is the cross-gain matrix with a zero diagonal") {
    SystemConfig cfg;
    cfg.m = 1;
    cfg.k = 2;
    cfg.n = 1;
    ScenarioDrop drop = drop_from_positions(cfg, {{900, 2}}, {{100, 2}, {300, 2}},
                                            {{110, 2}, {310, 2}});
    Eigen::MatrixXd w = build_interference_graph(drop);
    CHECK(w(0, 0) == 0.0);
    CHECK(w(1, 1) == 0.0);
    CHECK(w(0, 1) == drop.due_cross_gain(0, 1));
    CHECK(w(1, 0) == drop.due_cross_gain(1, 0));

    SUBCASE("asymmetric weights are preserved") {
        Eigen::MatrixXd m(2, 2);
        m << 0.0, 0.3, 0.4, 0.0;
        drop.due_cross_gain = m;
        Eigen::MatrixXd w2 = build_interference_graph(drop);
        CHECK(w2(0, 1) == doctest::Approx(0.3));
        CHECK(w2(1, 0) == doctest::Approx(0.4));
    }
}

TEST_CASE("greedy clustering examples") {
    SUBCASE("two DUEs, two clusters: singletons") {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
        auto c = cluster_dues(w, 2);
        CHECK(c.cluster_of == std::vector<int>{0, 1});
        CHECK(intra_cluster_weight(w, c) == 0.0);
    }
    SUBCASE("interfering pair split by the seeds, third DUE ties to cluster 0") {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(3, 3);
        w(0, 1) = w(1, 0) = 5.0;
        auto c = cluster_dues(w, 2);
        CHECK(c.cluster_of == std::vector<int>{0, 1, 0});
        CHECK(intra_cluster_weight(w, c) == 0.0);
        auto [best, weight] = brute_force_partition_oracle(w, 2);
        CHECK(weight == 0.0);
    }
    SUBCASE("two strong pairs end up separated") {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(4, 4);
        w(0, 1) = w(1, 0) = 10.0;
        w(2, 3) = w(3, 2) = 10.0;
        auto c = cluster_dues(w, 2);
        CHECK(c.cluster_of == std::vector<int>{0, 1, 0, 1});
        CHECK(intra_cluster_weight(w, c) == 0.0);
        auto [best, weight] = brute_force_partition_oracle(w, 2);
        CHECK(weight == 0.0);
    }
    SUBCASE("domain errors") {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
        CHECK_THROWS_AS(cluster_dues(w, 3), DomainError);
        CHECK_THROWS_AS(cluster_dues(w, 0), DomainError);
    }
}

TEST_CASE("partition oracle examples") {
    SUBCASE("as many clusters as DUEs: everything is a singleton") {
        auto eng = make_engine(3);
        Eigen::MatrixXd w(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                w(i, j) = i == j ? 0.0 : std::uniform_real_distribution<>(0, 1)(eng);
        auto [best, weight] = brute_force_partition_oracle(w, 3);
        CHECK(weight == 0.0);
    }
    SUBCASE("uniform weights, K=4, N=2: balanced split with both ordered pairs per cluster") {
        const double g = 0.7;
        Eigen::MatrixXd w = Eigen::MatrixXd::Constant(4, 4, g);
        w.diagonal().setZero();
        auto [best, weight] = brute_force_partition_oracle(w, 2);
        CHECK(weight == doctest::Approx(4.0 * g));
        CHECK(best.members[0].size() == 2);
        CHECK(best.members[1].size() == 2);
    }
    SUBCASE("scale guard") {
        Eigen::MatrixXd w = Eigen::MatrixXd::Zero(11, 11);
        CHECK_THROWS_AS(brute_force_partition_oracle(w, 2), ScaleError);
        Eigen::MatrixXd w2 = Eigen::MatrixXd::Zero(5, 5);
        CHECK_THROWS_AS(brute_force_partition_oracle(w2, 4), ScaleError);
    }
}

TEST_CASE("greedy quality and determinism on random instances") {
    auto eng = make_engine(29);
    std::uniform_int_distribution<int> k_dist(3, 8), n_dist(2, 3);
    double greedy_total = 0.0, oracle_total = 0.0, worst_ratio = 1.0;
    for (int trial = 0; trial < 60; ++trial) {
        const int k = k_dist(eng);
        const int n = std::min(n_dist(eng), k);
        Eigen::MatrixXd w(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                w(i, j) = i == j ? 0.0 : std::uniform_real_distribution<>(0.0, 1.0)(eng);

        auto greedy = cluster_dues(w, n);
        auto greedy2 = cluster_dues(w, n);
        CHECK(greedy.cluster_of == greedy2.cluster_of); // deterministic

        for (const auto& members : greedy.members) CHECK(!members.empty());

        const double gw = intra_cluster_weight(w, greedy);
        auto [best, ow] = brute_force_partition_oracle(w, n);
        CHECK(gw >= ow - 1e-12); // oracle is the exact optimum
        greedy_total += gw;
        oracle_total += ow;
        if (ow > 0.0) worst_ratio = std::max(worst_ratio, gw / ow);

        // never worse than everyone sharing one cluster
        ClusterAssignment lumped;
        lumped.cluster_of.assign(k, 0);
        lumped.members.resize(1);
        for (int i = 0; i < k; ++i) lumped.members[0].push_back(i);
        CHECK(gw <= intra_cluster_weight(w, lumped) + 1e-12);
    }
    MESSAGE("suite greedy/oracle weight ratio ", greedy_total / oracle_total,
            ", worst single-instance ratio ", worst_ratio);
    CHECK(greedy_total <= 3.0 * oracle_total); // loose heuristic-quality guard
}

TEST_CASE("assignment CSV") {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(3, 3);
    auto c = cluster_dues(w, 2);
    std::ostringstream os;
    write_assignment_csv(os, c);
    CHECK(os.str() == "due_index,cluster_index\n0,0\n1,1\n2,0\n");
}
