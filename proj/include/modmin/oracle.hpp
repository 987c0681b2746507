#ifndef MODMIN_ORACLE_HPP
#define MODMIN_ORACLE_HPP

#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/descent.hpp"

namespace modmin {

/// Coefficients b_m of F(z0 + alpha d) as a real polynomial in alpha,
/// built by brute-force convolution and independent of the descent code.
struct AlphaExpansion {
    std::vector<double> b; // b[m] multiplies alpha^m, length 2n+1

    double eval(double alpha) const;
    double abs_eval(double alpha) const; // sum |b_m| alpha^m, conditioning bound
    double max_abs() const;
};

/// Expand F(z0 + alpha d) in powers of alpha: with c_j = a_j d^j the result
/// is the coefficient list of (sum c_j alpha^j)(sum conj(c_j) alpha^j).
AlphaExpansion expand_alpha(const TaylorExpansion& t, Complex d);

struct LeadingTermReport {
    bool pass = false;
    double b0_residual = 0.0;      // |b_0 - |a_0|^2| relative
    double low_order_residual = 0.0; // max |b_j| for 1 <= j < k, over max|b|
    double bk_residual = 0.0;      // |b_k - leading_coeff| relative
};

/// Check the closed forms b_0 = |a_0|^2, b_j = 0 for 0 < j < k, and
/// b_k = |u|^2 (gamma cos k.theta + delta sin k.theta) against the
/// convolution expansion.
LeadingTermReport check_leading_terms(const AlphaExpansion& e,
                                      const DescentInfo& info, Complex a0);

struct DescentCheckReport {
    // grid is alpha0 * 2^-m for m = 0..levels
    std::vector<double> diffs;    // F(z0 + alpha d) - F(z0) per level
    int negative_prefix = 0;      // consecutive negative levels from smallest alpha
    bool all_negative = false;    // negative at every measurable level
    double empirical_order = 0.0; // slope of log2|diff| per halving, ~k
    bool order_valid = false;     // at least one ratio was above the noise floor
};

/// Sample F(z0 + alpha d) - F(z0) on a geometric grid and estimate the
/// leading order of the decrease.
DescentCheckReport numeric_descent_check(const Polynomial& p, Complex z0,
                                         Complex d, double alpha0,
                                         int levels = 40);

} // namespace modmin

#endif
