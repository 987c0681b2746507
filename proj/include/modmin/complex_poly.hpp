#ifndef MODMIN_COMPLEX_POLY_HPP
#define MODMIN_COMPLEX_POLY_HPP

#include <complex>
#include <utility>
#include <vector>

namespace modmin {

using Complex = std::complex<double>;

/// Integer power by repeated multiplication. Unlike std::pow this commutes
/// exactly with conjugation, which some identity checks rely on.
Complex ipow(Complex z, int k);

/// Univariate complex polynomial, coefficients in ascending powers.
/// Normalized on construction: non-finite coefficients are rejected and
/// near-zero leading coefficients (relative to the largest magnitude) are
/// trimmed. Immutable after construction.
class Polynomial {
  public:
    explicit Polynomial(std::vector<Complex> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex coeff(int j) const { return coeffs_[static_cast<size_t>(j)]; }
    Complex leading() const { return coeffs_.back(); }

    /// max_j |coeff_j|; the scale used to make tolerances dimensionless.
    double coeff_scale() const { return scale_; }

    /// p(z) by Horner's rule.
    Complex eval(Complex z) const;

    /// Coefficient-wise derivative p'.
    Polynomial derivative() const;

  private:
    std::vector<Complex> coeffs_;
    double scale_ = 0.0;
};

/// Taylor coefficients a_j = p^(j)(z0)/j! of p about a recentering point,
/// so that p(z) = sum_j a[j] (z - z0)^j.
struct TaylorExpansion {
    Complex center;
    std::vector<Complex> a;

    int degree() const { return static_cast<int>(a.size()) - 1; }
};

/// F(z) = |p(z)|^2, the squared-modulus objective. Always >= 0.
double modulus_sq(const Polynomial& p, Complex z);

/// Recenter p at z0 by repeated synthetic division (Taylor shift).
TaylorExpansion taylor_at(const Polynomial& p, Complex z0);

/// Synthetic division by (z - r): p(z) = (z - r) q(z) + rho, rho = p(r).
std::pair<Polynomial, Complex> deflate(const Polynomial& p, Complex r);

} // namespace modmin

#endif
