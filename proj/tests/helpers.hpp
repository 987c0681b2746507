#ifndef MODMIN_TESTS_HELPERS_HPP
#define MODMIN_TESTS_HELPERS_HPP

#include <cmath>
#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/random_gen.hpp"

namespace modmin::testing {

// Independent power-sum evaluation, the oracle Horner is checked against.
inline Complex naive_eval(const Polynomial& p, Complex z) {
    Complex acc{0.0, 0.0};
    for (size_t j = 0; j < p.coeffs().size(); ++j)
        acc += p.coeffs()[j] * ipow(z, static_cast<int>(j));
    return acc;
}

// Magnitude scale of an evaluation, for relative comparisons.
inline double eval_scale(const Polynomial& p, Complex z) {
    double acc = 0.0;
    for (size_t j = 0; j < p.coeffs().size(); ++j)
        acc += std::abs(p.coeffs()[j]) * std::pow(std::abs(z), static_cast<double>(j));
    return acc;
}

// Coefficients of sum_j a[j] (z - z0)^j, by explicit multiply-out.
inline std::vector<Complex> expand_shifted(const std::vector<Complex>& a,
                                           Complex z0) {
    std::vector<Complex> out(a.size(), Complex{0.0, 0.0});
    std::vector<Complex> power{Complex{1.0, 0.0}}; // (z - z0)^j
    for (size_t j = 0; j < a.size(); ++j) {
        for (size_t m = 0; m < power.size(); ++m) out[m] += a[j] * power[m];
        std::vector<Complex> next(power.size() + 1, Complex{0.0, 0.0});
        for (size_t m = 0; m < power.size(); ++m) {
            next[m + 1] += power[m];
            next[m] -= z0 * power[m];
        }
        power = std::move(next);
    }
    return out;
}

// Monic polynomial with the given roots.
inline Polynomial from_roots(const std::vector<Complex>& roots) {
    std::vector<Complex> c{Complex{1.0, 0.0}};
    for (Complex r : roots) {
        std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
        for (size_t j = 0; j < c.size(); ++j) {
            next[j + 1] += c[j];
            next[j] -= r * c[j];
        }
        c = std::move(next);
    }
    return Polynomial(std::move(c));
}

// z^n - c
inline Polynomial power_minus(int n, Complex c) {
    std::vector<Complex> coeffs(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
    coeffs[0] = -c;
    coeffs.back() = Complex{1.0, 0.0};
    return Polynomial(std::move(coeffs));
}

inline double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (const Complex& x : v) m = std::max(m, std::abs(x));
    return m;
}

} // namespace modmin::testing

#endif
