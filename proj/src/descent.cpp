#include "modmin/descent.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <tuple>

#include "modmin/errors.hpp"

namespace modmin {

int first_nonzero_index(const TaylorExpansion& t, double eps_rel) {
    const int n = t.degree();
    if (n < 1)
        throw ConstantPolynomialError("first_nonzero_index: degree-0 expansion");
    double maxmag = 0.0;
    for (const Complex& aj : t.a) maxmag = std::max(maxmag, std::abs(aj));
    const double tau = eps_rel * maxmag;
    for (int k = 1; k <= n; ++k)
        if (std::abs(t.a[static_cast<size_t>(k)]) > tau) return k;
    return n; // leading coefficient is nonzero by normalization
}

std::pair<double, double> gamma_delta(Complex u, int k) {
    // Real-by-construction forms of u^{k-1} + conj(u)^{k-1} and
    // i (u^{k-1} - conj(u)^{k-1}).
    const Complex w = ipow(u, k - 1);
    return {2.0 * w.real(), -2.0 * w.imag()};
}

double g_k_direct(Complex u, int k, Complex z) {
    const Complex g = std::conj(u) * ipow(z, k) + u * ipow(std::conj(z), k);
    if (std::abs(g.imag()) > 1e-12 * std::abs(g.real()) && g.imag() != 0.0)
        throw DegenerateDirectionError("g_k_direct: non-real value");
    return g.real();
}

double g_k_closed(Complex u, int k, double alpha, double theta) {
    const auto [gamma, delta] = gamma_delta(u, k);
    return std::pow(alpha, k) * std::norm(u) *
           (gamma * std::cos(k * theta) + delta * std::sin(k * theta));
}

double select_theta(double gamma, double delta, int k, ThetaMode mode) {
    if (gamma == 0.0 && delta == 0.0)
        throw DegenerateDirectionError("select_theta: gamma = delta = 0");
    const double pi = std::numbers::pi;
    if (mode == ThetaMode::OptimalLeading)
        return (pi + std::atan2(delta, gamma)) / k;

    // Candidates in the order the table lists them: the gamma rows first.
    const std::array<double, 4> candidates = {0.0, pi / k, pi / (2.0 * k),
                                              3.0 * pi / (2.0 * k)};
    double best_theta = candidates[0];
    double best_value = gamma; // value at theta = 0
    for (size_t i = 1; i < candidates.size(); ++i) {
        const double th = candidates[i];
        const double v =
            gamma * std::cos(k * th) + delta * std::sin(k * th);
        if (v < best_value) {
            best_value = v;
            best_theta = th;
        }
    }
    return best_theta;
}

DescentInfo descent_direction(const TaylorExpansion& t, ThetaMode mode,
                              double eps_rel, double root_tol) {
    if (t.degree() < 1)
        throw ConstantPolynomialError("descent_direction: degree-0 expansion");
    double maxmag = 0.0;
    for (const Complex& aj : t.a) maxmag = std::max(maxmag, std::abs(aj));
    const Complex a0 = t.a[0];
    if (std::abs(a0) <= root_tol * maxmag || a0 == Complex{0.0, 0.0})
        throw AlreadyAtRootError("descent_direction: expansion point is a root");

    DescentInfo info;
    info.k = first_nonzero_index(t, eps_rel);
    info.u = a0 * std::conj(t.a[static_cast<size_t>(info.k)]);
    std::tie(info.gamma, info.delta) = gamma_delta(info.u, info.k);
    info.theta = select_theta(info.gamma, info.delta, info.k, mode);
    const Complex rot{std::cos(info.theta), std::sin(info.theta)};
    info.direction = rot * info.u;
    info.unit_direction = rot * (info.u / std::abs(info.u));
    info.leading_coeff =
        std::norm(info.u) * (info.gamma * std::cos(info.k * info.theta) +
                             info.delta * std::sin(info.k * info.theta));
    return info;
}

} // namespace modmin
