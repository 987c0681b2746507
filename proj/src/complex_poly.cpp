#include "modmin/complex_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modmin {

Complex ipow(Complex z, int k) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= z;
    return r;
}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("polynomial needs at least one coefficient");

    double maxmag = 0.0;
    for (const Complex& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw std::invalid_argument("non-finite polynomial coefficient");
        maxmag = std::max(maxmag, std::abs(c));
    }

    // Trim spurious near-zero leading coefficients.
    const double trim = std::numeric_limits<double>::epsilon() * maxmag;
    while (coeffs_.size() > 1 && std::abs(coeffs_.back()) <= trim)
        coeffs_.pop_back();

    scale_ = 0.0;
    for (const Complex& c : coeffs_) scale_ = std::max(scale_, std::abs(c));
}

Complex Polynomial::eval(Complex z) const {
    Complex acc = coeffs_.back();
    for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (degree() == 0) return Polynomial({Complex{0.0, 0.0}});
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t j = 1; j < coeffs_.size(); ++j)
        d[j - 1] = static_cast<double>(j) * coeffs_[j];
    return Polynomial(std::move(d));
}

double modulus_sq(const Polynomial& p, Complex z) {
    return std::norm(p.eval(z));
}

TaylorExpansion taylor_at(const Polynomial& p, Complex z0) {
    // Repeated synthetic division by (z - z0); after pass j the constant of
    // the running quotient is a_j.
    std::vector<Complex> c = p.coeffs();
    const int n = p.degree();
    for (int j = 0; j < n; ++j)
        for (int i = n - 1; i >= j; --i)
            c[static_cast<size_t>(i)] += z0 * c[static_cast<size_t>(i) + 1];
    return TaylorExpansion{z0, std::move(c)};
}

std::pair<Polynomial, Complex> deflate(const Polynomial& p, Complex r) {
    if (p.degree() < 1)
        throw std::invalid_argument("cannot deflate a constant polynomial");
    const auto& c = p.coeffs();
    const int n = p.degree();
    std::vector<Complex> q(static_cast<size_t>(n));
    Complex carry = c[static_cast<size_t>(n)];
    for (int i = n - 1; i >= 0; --i) {
        q[static_cast<size_t>(i)] = carry;
        carry = c[static_cast<size_t>(i)] + r * carry;
    }
    return {Polynomial(std::move(q)), carry};
}

} // namespace modmin
