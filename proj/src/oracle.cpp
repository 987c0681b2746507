#include "modmin/oracle.hpp"

#include <cmath>
#include <limits>

namespace modmin {

double AlphaExpansion::eval(double alpha) const {
    double acc = 0.0;
    for (auto it = b.rbegin(); it != b.rend(); ++it) acc = acc * alpha + *it;
    return acc;
}

double AlphaExpansion::abs_eval(double alpha) const {
    double acc = 0.0;
    for (auto it = b.rbegin(); it != b.rend(); ++it)
        acc = acc * alpha + std::abs(*it);
    return acc;
}

double AlphaExpansion::max_abs() const {
    double m = 0.0;
    for (double v : b) m = std::max(m, std::abs(v));
    return m;
}

AlphaExpansion expand_alpha(const TaylorExpansion& t, Complex d) {
    const size_t n1 = t.a.size();
    std::vector<Complex> c(n1);
    Complex dj{1.0, 0.0};
    for (size_t j = 0; j < n1; ++j) {
        c[j] = t.a[j] * dj;
        dj *= d;
    }

    // (sum c_j alpha^j)(sum conj(c_j) alpha^j) by convolution.
    std::vector<Complex> full(2 * n1 - 1, Complex{0.0, 0.0});
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) full[i + j] += c[i] * std::conj(c[j]);

    AlphaExpansion e;
    e.b.resize(full.size());
    double maxmag = 0.0;
    for (const Complex& v : full) maxmag = std::max(maxmag, std::abs(v));
    for (size_t m = 0; m < full.size(); ++m) {
        // Imaginary residue must be rounding noise only.
        if (std::abs(full[m].imag()) > 1e-12 * maxmag)
            throw std::runtime_error("expand_alpha: non-real alpha coefficient");
        e.b[m] = full[m].real();
    }
    return e;
}

LeadingTermReport check_leading_terms(const AlphaExpansion& e,
                                      const DescentInfo& info, Complex a0) {
    LeadingTermReport r;
    const double maxb = e.max_abs();
    const double b0_expect = std::norm(a0);

    r.b0_residual = std::abs(e.b[0] - b0_expect) / std::max(b0_expect, 1e-300);
    for (int j = 1; j < info.k; ++j)
        r.low_order_residual = std::max(
            r.low_order_residual,
            std::abs(e.b[static_cast<size_t>(j)]) / std::max(maxb, 1e-300));
    const double bk = e.b[static_cast<size_t>(info.k)];
    r.bk_residual = std::abs(bk - info.leading_coeff) /
                    std::max(std::abs(info.leading_coeff), 1e-300);

    r.pass = r.b0_residual <= 1e-10 && r.low_order_residual <= 1e-12 &&
             r.bk_residual <= 1e-10;
    return r;
}

DescentCheckReport numeric_descent_check(const Polynomial& p, Complex z0,
                                         Complex d, double alpha0, int levels) {
    DescentCheckReport r;
    const double f0 = modulus_sq(p, z0);

    // Noise floor from the Horner error bound: the evaluation magnitude
    // sum |c_j| R^j controls the absolute rounding error, not F itself.
    const double eps = std::numeric_limits<double>::epsilon();
    const double radius = std::abs(z0) + alpha0 * std::abs(d);
    double ptilde = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        ptilde = ptilde * radius + std::abs(*it);
    const double n = static_cast<double>(p.degree());
    const double eval_err = 2.0 * (n + 1.0) * eps * ptilde;
    const double floor =
        64.0 * (std::sqrt(f0) * eval_err + eval_err * eval_err) + 1e-300;

    r.diffs.resize(static_cast<size_t>(levels) + 1);
    double alpha = alpha0;
    for (int m = 0; m <= levels; ++m) {
        r.diffs[static_cast<size_t>(m)] = modulus_sq(p, z0 + alpha * d) - f0;
        alpha *= 0.5;
    }

    r.all_negative = true;
    for (double diff : r.diffs)
        if (diff > floor) r.all_negative = false;

    r.negative_prefix = 0;
    for (int m = levels; m >= 0; --m) {
        const double diff = r.diffs[static_cast<size_t>(m)];
        if (diff > floor) break;
        ++r.negative_prefix;
    }

    // Order from the smallest alpha pair still above the noise floor.
    for (int m = levels - 1; m >= 0; --m) {
        const double hi = r.diffs[static_cast<size_t>(m)];
        const double lo = r.diffs[static_cast<size_t>(m) + 1];
        if (hi < -floor && lo < -floor) {
            r.empirical_order = std::log2(hi / lo);
            r.order_valid = true;
            break;
        }
    }
    return r;
}

} // namespace modmin
