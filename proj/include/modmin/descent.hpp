#ifndef MODMIN_DESCENT_HPP
#define MODMIN_DESCENT_HPP

#include <utility>

#include "modmin/complex_poly.hpp"

namespace modmin {

/// How the rotation angle theta is chosen.
///   PaperTable     -- most negative of the four candidates {0, pi/2k, pi/k, 3pi/2k}
///   OptimalLeading -- continuous minimizer (pi + atan2(delta, gamma)) / k
enum class ThetaMode { PaperTable, OptimalLeading };

/// The direction e^{i theta} u along which |p|^2 provably decreases,
/// together with everything that went into building it.
struct DescentInfo {
    int k = 0;               // smallest derivative order with a_k != 0
    Complex u;                // a_0 * conj(a_k)
    double gamma = 0.0;       // 2 Re(u^{k-1})
    double delta = 0.0;       // -2 Im(u^{k-1})
    double theta = 0.0;
    Complex direction;        // e^{i theta} u
    Complex unit_direction;   // e^{i theta} u / |u|, overflow-safe step direction
    double leading_coeff = 0.0; // |u|^2 (gamma cos k.theta + delta sin k.theta), < 0
};

/// Smallest k >= 1 with |a_k| > eps_rel * max_j |a_j|. Such k exists because
/// the leading coefficient is nonzero. Throws ConstantPolynomialError on
/// degree-0 expansions.
int first_nonzero_index(const TaylorExpansion& t, double eps_rel = 1e-12);

/// (gamma, delta) = (2 Re(u^{k-1}), -2 Im(u^{k-1})); never both zero for u != 0.
std::pair<double, double> gamma_delta(Complex u, int k);

/// conj(u) z^k + u conj(z)^k, evaluated literally. The imaginary part cancels
/// identically and is checked against 1e-12 of the real part before being
/// discarded.
double g_k_direct(Complex u, int k, Complex z);

/// Closed form alpha^k |u|^2 (gamma cos k.theta + delta sin k.theta) for
/// the same quantity at z = alpha e^{i theta} u.
double g_k_closed(Complex u, int k, double alpha, double theta);

/// Angle making the leading coefficient gamma cos k.theta + delta sin k.theta
/// negative. PaperTable picks the most negative of the four tabulated
/// candidates (exact ties broken in table order); OptimalLeading returns the
/// continuous minimizer with value -sqrt(gamma^2 + delta^2).
double select_theta(double gamma, double delta, int k, ThetaMode mode);

/// Full construction at the expansion point: k, u, (gamma, delta), theta and
/// the resulting direction. Throws AlreadyAtRootError when |a_0| is within
/// root_tol (relative to the largest Taylor coefficient) of zero.
DescentInfo descent_direction(const TaylorExpansion& t, ThetaMode mode,
                              double eps_rel = 1e-12, double root_tol = 0.0);

} // namespace modmin

#endif
