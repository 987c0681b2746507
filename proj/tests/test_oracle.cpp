#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "modmin/oracle.hpp"
#include "modmin/solver.hpp"

using namespace modmin;
using namespace modmin::testing;

TEST_CASE("expand_alpha on hand-checkable instances") {
    SUBCASE("p = z at 1, direction -1: F = (1 - alpha)^2") {
        const Polynomial p({{0, 0}, {1, 0}});
        const AlphaExpansion e = expand_alpha(taylor_at(p, {1, 0}), {-1, 0});
        REQUIRE(e.b.size() == 3);
        CHECK(e.b[0] == doctest::Approx(1.0));
        CHECK(e.b[1] == doctest::Approx(-2.0));
        CHECK(e.b[2] == doctest::Approx(1.0));
    }

    SUBCASE("p = z^2 - 1 at 0, direction -1: F = (alpha^2 - 1)^2") {
        const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});
        const AlphaExpansion e = expand_alpha(taylor_at(p, {0, 0}), {-1, 0});
        REQUIRE(e.b.size() == 5);
        CHECK(e.b[0] == doctest::Approx(1.0));
        CHECK(e.b[1] == doctest::Approx(0.0));
        CHECK(e.b[2] == doctest::Approx(-2.0));
        CHECK(e.b[3] == doctest::Approx(0.0));
        CHECK(e.b[4] == doctest::Approx(1.0));
    }
}

TEST_CASE("check_leading_terms on the worked examples") {
    SUBCASE("z^2 - 1 at 0, theta = 0: b_2 = gamma |u|^2 = -2") {
        const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});
        const TaylorExpansion t = taylor_at(p, {0, 0});
        const DescentInfo info = descent_direction(t, ThetaMode::PaperTable);
        const AlphaExpansion e = expand_alpha(t, info.direction);
        CHECK(e.b[2] == doctest::Approx(-2.0));
        const LeadingTermReport rep = check_leading_terms(e, info, t.a[0]);
        CHECK(rep.pass);
    }

    SUBCASE("p = z at 1, theta = pi: b_1 = -2") {
        const Polynomial p({{0, 0}, {1, 0}});
        const TaylorExpansion t = taylor_at(p, {1, 0});
        const DescentInfo info = descent_direction(t, ThetaMode::PaperTable);
        const AlphaExpansion e = expand_alpha(t, info.direction);
        CHECK(e.b[1] == doctest::Approx(-2.0));
        CHECK(check_leading_terms(e, info, t.a[0]).pass);
    }
}

TEST_CASE("expansion coefficients and evaluation on random instances") {
    InstanceGen gen(301);
    for (int trial = 0; trial < 200; ++trial) {
        Polynomial p = gen.polynomial(1, 8);
        Complex z0 = gen.point_in_disc(1.0);
        TaylorExpansion t = taylor_at(p, z0);
        while (std::abs(t.a[0]) <= 1e-6 * max_abs(t.a)) {
            p = gen.polynomial(1, 8);
            z0 = gen.point_in_disc(1.0);
            t = taylor_at(p, z0);
        }
        const DescentInfo info = descent_direction(t, ThetaMode::PaperTable);
        const AlphaExpansion e = expand_alpha(t, info.direction);
        REQUIRE(static_cast<int>(e.b.size()) == 2 * p.degree() + 1);
        CHECK(e.b[0] >= 0.0);
        CHECK(check_leading_terms(e, info, t.a[0]).pass);

        // Evaluating the expansion must reproduce modulus_sq.
        const double alpha_init =
            std::pow(std::abs(t.a[0]) / std::abs(t.a[static_cast<size_t>(info.k)]),
                     1.0 / info.k);
        const double alpha = gen.uniform(0.05, 1.0) * alpha_init / std::abs(info.u);
        const double via_expansion = e.eval(alpha);
        const double via_eval = modulus_sq(p, z0 + alpha * info.direction);
        CHECK(std::abs(via_expansion - via_eval) <= 1e-10 * e.abs_eval(alpha));
    }
}

TEST_CASE("b_j vanish below k for exactly-critical instances") {
    InstanceGen gen(302);
    for (int trial = 0; trial < 50; ++trial) {
        const int m = gen.uniform_int(2, 6);
        const Complex c = gen.coeff();
        const Polynomial p = power_minus(m, c); // z^m - c, critical at 0
        const TaylorExpansion t = taylor_at(p, {0, 0});
        const DescentInfo info = descent_direction(t, ThetaMode::PaperTable);
        CHECK(info.k == m);
        const AlphaExpansion e = expand_alpha(t, info.direction);
        for (int j = 1; j < m; ++j) CHECK(e.b[static_cast<size_t>(j)] == 0.0);
        CHECK(check_leading_terms(e, info, t.a[0]).pass);
    }
}

TEST_CASE("numeric descent check") {
    SUBCASE("z^2 - 1 from 0 along -1") {
        const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});
        const DescentCheckReport rep =
            numeric_descent_check(p, {0, 0}, {-1, 0}, 1.0);
        CHECK(rep.all_negative);
        CHECK(rep.negative_prefix == 41);
        REQUIRE(rep.order_valid);
        CHECK(rep.empirical_order == doctest::Approx(2.0).epsilon(0.05));
    }

    SUBCASE("p = z from 1 along -1") {
        const Polynomial p({{0, 0}, {1, 0}});
        const DescentCheckReport rep =
            numeric_descent_check(p, {1, 0}, {-1, 0}, 1.0);
        CHECK(rep.all_negative);
        REQUIRE(rep.order_valid);
        CHECK(rep.empirical_order == doctest::Approx(1.0).epsilon(0.05));
    }

    SUBCASE("random instances descend along the constructed direction") {
        InstanceGen gen(303);
        SolverConfig cfg;
        for (int trial = 0; trial < 100; ++trial) {
            Polynomial p = gen.polynomial(1, 8);
            Complex z0 = gen.point_in_disc(1.0);
            TaylorExpansion t = taylor_at(p, z0);
            while (std::abs(t.a[0]) <= 1e-6 * max_abs(t.a)) {
                p = gen.polynomial(1, 8);
                z0 = gen.point_in_disc(1.0);
                t = taylor_at(p, z0);
            }
            const StepReport step = descent_step(p, t, cfg);
            const DescentCheckReport rep = numeric_descent_check(
                p, z0, step.info.unit_direction, step.alpha);
            CHECK(rep.diffs[0] < 0.0);       // the accepted step decreases
            CHECK(rep.negative_prefix >= 10); // and so does every small alpha
            if (rep.order_valid)
                CHECK(rep.empirical_order ==
                      doctest::Approx(step.info.k).epsilon(0.1));
        }
    }
}
