#include <doctest.h>

#include <cmath>

#include "d2dsim/errors.hpp"
#include "d2dsim/power_control.hpp"
#include "d2dsim/rng.hpp"
#include "support/instances.hpp"

using namespace d2dsim;

TEST_CASE("gamma_bar") {
    CHECK(gamma_bar(0.0, 0.5) == 0.0);
    CHECK(gamma_bar(2.0, 1.0 - std::exp(-1.0)) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(gamma_bar(1.0, 0.01) == doctest::Approx(99.499).epsilon(1e-4));
    CHECK_THROWS_AS(gamma_bar(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(gamma_bar(1.0, 1.0), DomainError);
    CHECK_THROWS_AS(gamma_bar(-1.0, 0.5), DomainError);
}

TEST_CASE("phi system construction") {
    SUBCASE("single DUE") {
        Eigen::VectorXd own(1);
        own << 1.0;
        PhiSystem sys = build_phi_core(own, Eigen::MatrixXd::Zero(1, 1), 2.0);
        CHECK(sys.phi(0, 0) == doctest::Approx(1.0));
        CHECK(sys.phi_inv(0, 0) == doctest::Approx(1.0));
    }
    SUBCASE("two symmetric DUEs") {
        Eigen::VectorXd own(2);
        own << 1.0, 1.0;
        Eigen::MatrixXd cross(2, 2);
        cross << 0.0, 0.1, 0.1, 0.0;
        PhiSystem sys = build_phi_core(own, cross, 2.0);
        CHECK(sys.phi(0, 0) == doctest::Approx(1.0));
        CHECK(sys.phi(0, 1) == doctest::Approx(-0.2));
        CHECK(sys.phi(1, 0) == doctest::Approx(-0.2));
        CHECK(sys.phi(1, 1) == doctest::Approx(1.0));
    }
    SUBCASE("zero threshold keeps only the diagonal") {
        Eigen::VectorXd own(2);
        own << 0.5, 2.0;
        Eigen::MatrixXd cross(2, 2);
        cross << 0.0, 0.4, 0.9, 0.0;
        PhiSystem sys = build_phi_core(own, cross, 0.0);
        CHECK(sys.phi.isApprox(Eigen::MatrixXd(own.asDiagonal())));
    }
    SUBCASE("singular system is rejected") {
        Eigen::VectorXd own(2);
        own << 1.0, 1.0;
        Eigen::MatrixXd cross(2, 2);
        cross << 0.0, 1.0, 1.0, 0.0;
        CHECK_THROWS_AS(build_phi_core(own, cross, 1.0), SingularSystemError);
    }
    SUBCASE("empty cluster is a domain error") {
        CHECK_THROWS_AS(build_phi_core(Eigen::VectorXd(), Eigen::MatrixXd(), 1.0), DomainError);
    }
}

TEST_CASE("closed-form powers, single DUE") {
    Eigen::VectorXd own(1);
    own << 1.0;
    PhiSystem sys = build_phi_core(own, Eigen::MatrixXd::Zero(1, 1), 2.0);
    Eigen::VectorXd alpha_m(1);
    alpha_m << 0.5;

    SUBCASE("hand-substituted optimum") {
        PowerAllocation a = allocate_powers_core(sys, alpha_m, 0.1, 4.0, 10.0);
        CHECK(a.feasible);
        CHECK(a.p_c == doctest::Approx(4.0));
        CHECK(a.p_d(0) == doctest::Approx(4.2));
        CHECK(a.residual < 1e-12);
    }
    SUBCASE("cap bound from the DUE side") {
        // candidate (10 - 2*0.1)/ (2*0.5) = 9.8 binds below p_max_c = 20
        PowerAllocation a = allocate_powers_core(sys, alpha_m, 0.1, 20.0, 10.0);
        CHECK(a.feasible);
        CHECK(a.p_c == doctest::Approx(9.8));
        CHECK(a.p_d(0) == doctest::Approx(10.0));
    }
    SUBCASE("huge threshold is infeasible") {
        PhiSystem tight = build_phi_core(own, Eigen::MatrixXd::Zero(1, 1), 1000.0);
        PowerAllocation a = allocate_powers_core(tight, alpha_m, 0.1, 4.0, 10.0);
        CHECK_FALSE(a.feasible); // numerator 10 - 1000*0.1 < 0
        CHECK(a.p_c < 0.0);
    }
    SUBCASE("noise-free collapse") {
        PowerAllocation a = allocate_powers_core(sys, alpha_m, 0.0, 4.0, 100.0);
        CHECK(a.feasible);
        CHECK(a.p_d(0) == doctest::Approx(2.0 * a.p_c * 0.5).epsilon(1e-15));
        CHECK(a.residual < 1e-15);
    }
}

TEST_CASE("equality residual and bounds over random feasible instances") {
    auto eng = make_engine(41);
    int feasible = 0, attempts = 0;
    while (feasible < 1000 && attempts < 20000) {
        ++attempts;
        auto inst = test_support::random_pc_instance(eng);
        if (!inst) continue;
        PowerAllocation a =
            allocate_powers_core(inst->sys, inst->alpha_m, inst->sigma2, inst->p_max_c, inst->p_max_d);
        if (!a.feasible) continue;
        ++feasible;
        CHECK(a.residual < 1e-9);
        CHECK(a.p_c >= 0.0);
        CHECK(a.p_c <= inst->p_max_c);
        for (int i = 0; i < a.p_d.size(); ++i) {
            CHECK(a.p_d(i) >= -1e-9 * inst->p_max_d);
            CHECK(a.p_d(i) <= inst->p_max_d * (1.0 + 1e-9));
        }
    }
    REQUIRE(feasible == 1000);
    MESSAGE("needed ", attempts, " draws for 1000 feasible instances");
}

TEST_CASE("infeasibility is reported as a value, not an exception") {
    Eigen::VectorXd own(1);
    own << 1e-9;
    PhiSystem sys = build_phi_core(own, Eigen::MatrixXd::Zero(1, 1), 1e6);
    Eigen::VectorXd alpha_m(1);
    alpha_m << 1.0;
    PowerAllocation a;
    CHECK_NOTHROW(a = allocate_powers_core(sys, alpha_m, 1.0, 1.0, 1.0));
    CHECK_FALSE(a.feasible);
}

TEST_CASE("drop-level wrapper matches the core computation") {
    SystemConfig cfg;
    cfg.m = 1;
    cfg.k = 2;
    cfg.n = 1;
    ScenarioDrop drop = drop_from_positions(cfg, {{1500, 2}}, {{100, 2}, {700, 6}},
                                            {{108, 2}, {708, 6}});
    PowerAllocation a = allocate_powers(0, {0, 1}, drop, cfg);
    const double gb = gamma_bar(cfg.gamma0_d, cfg.p0);
    PhiSystem sys = build_phi({0, 1}, drop, gb);
    Eigen::VectorXd alpha_m(2);
    alpha_m << drop.cue_due_gain(0, 0), drop.cue_due_gain(0, 1);
    PowerAllocation b = allocate_powers_core(sys, alpha_m, cfg.sigma2, cfg.p_max_c, cfg.p_max_d);
    CHECK(a.p_c == doctest::Approx(b.p_c).epsilon(1e-15));
    CHECK(a.p_d.isApprox(b.p_d));
}
