#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "modmin/roots.hpp"

using namespace modmin;
using namespace modmin::testing;

TEST_CASE("root_report on an exact factorization") {
    const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});
    const RootReport rep = root_report(p, {{1, 0}, {-1, 0}});
    CHECK(rep.residuals[0] == 0.0);
    CHECK(rep.residuals[1] == 0.0);
    CHECK(rep.reconstruction_error == 0.0);
}

TEST_CASE("root_report rejects wrong root counts") {
    const Polynomial p({{-1, 0}, {0, 0}, {1, 0}});
    CHECK_THROWS_AS(root_report(p, {{1, 0}}), std::invalid_argument);
}

TEST_CASE("pipeline quality on z^3 - 1") {
    const SolverConfig cfg;
    const Polynomial p = power_minus(3, {1, 0});
    const RootReport rep = find_and_report(p, cfg);
    for (double r : rep.residuals) CHECK(r <= 1e-8);
    CHECK(rep.reconstruction_error <= 1e-8);
}

TEST_CASE("pipeline quality on a double root") {
    const SolverConfig cfg;
    const Polynomial p = from_roots({{1, 0}, {1, 0}}); // (z - 1)^2
    const RootReport rep = find_and_report(p, cfg);
    for (Complex r : rep.roots) CHECK(std::abs(r - Complex{1, 0}) < 1e-3);
    CHECK(rep.reconstruction_error <= 1e-6);
}

TEST_CASE("reconstruction error is scale invariant") {
    InstanceGen gen(501);
    for (int trial = 0; trial < 50; ++trial) {
        const Polynomial p = gen.polynomial(2, 6);
        std::vector<Complex> roots;
        for (int j = 0; j <= p.degree() - 1; ++j)
            roots.push_back(gen.point_in_disc(2.0));
        const RootReport a = root_report(p, roots);

        std::vector<Complex> scaled = p.coeffs();
        for (Complex& v : scaled) v *= Complex{0, 4}; // times 4i
        const RootReport b = root_report(Polynomial(std::move(scaled)), roots);

        CHECK(a.reconstruction_error ==
              doctest::Approx(b.reconstruction_error).epsilon(1e-10));
    }
}

TEST_CASE("well-separated simple roots come back tight") {
    InstanceGen gen(502);
    const SolverConfig cfg;
    for (int trial = 0; trial < 20; ++trial) {
        // Roots on a coarse grid, pairwise distance >= 0.5.
        const int deg = gen.uniform_int(2, 8);
        std::vector<Complex> roots;
        while (static_cast<int>(roots.size()) < deg) {
            const Complex cand = gen.point_in_disc(2.0);
            bool ok = true;
            for (Complex r : roots)
                if (std::abs(cand - r) < 0.5) ok = false;
            if (ok) roots.push_back(cand);
        }
        const Polynomial p = from_roots(roots);
        const RootReport rep = find_and_report(p, cfg);
        for (double r : rep.residuals) CHECK(r <= 1e-8 * p.coeff_scale());
    }
}
