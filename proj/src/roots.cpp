#include "modmin/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace modmin {

RootReport root_report(const Polynomial& p, const std::vector<Complex>& roots) {
    if (static_cast<int>(roots.size()) != p.degree())
        throw std::invalid_argument("root_report: need degree-many roots");

    RootReport rep;
    rep.roots = roots;
    rep.residuals.reserve(roots.size());
    for (Complex r : roots)
        rep.residuals.push_back(std::sqrt(modulus_sq(p, r)));

    // Multiply back lead * prod (z - r_i) and compare coefficientwise.
    std::vector<Complex> recon{p.leading()};
    for (Complex r : roots) {
        std::vector<Complex> next(recon.size() + 1, Complex{0.0, 0.0});
        for (size_t j = 0; j < recon.size(); ++j) {
            next[j + 1] += recon[j];
            next[j] -= r * recon[j];
        }
        recon = std::move(next);
    }

    const double scale = p.coeff_scale();
    double maxdev = 0.0;
    for (size_t j = 0; j < recon.size(); ++j)
        maxdev = std::max(maxdev, std::abs(recon[j] - p.coeffs()[j]));
    rep.reconstruction_error = maxdev / scale;
    return rep;
}

RootReport find_and_report(const Polynomial& p, const SolverConfig& cfg) {
    return root_report(p, solve_all_roots(p, cfg).roots);
}

} // namespace modmin
