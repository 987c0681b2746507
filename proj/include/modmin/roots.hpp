#ifndef MODMIN_ROOTS_HPP
#define MODMIN_ROOTS_HPP

#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/solver.hpp"

namespace modmin {

/// Quality metrics for a claimed full root set.
struct RootReport {
    std::vector<Complex> roots;
    std::vector<double> residuals;     // |p(root)| on the original polynomial
    double reconstruction_error = 0.0; // max coeff deviation of lead*prod(z-r),
                                       // relative to max |coeff|
};

/// Residuals and multiply-back reconstruction error. Expects exactly
/// degree-many roots.
RootReport root_report(const Polynomial& p, const std::vector<Complex>& roots);

/// Convenience: solve_all_roots followed by root_report.
RootReport find_and_report(const Polynomial& p, const SolverConfig& cfg);

} // namespace modmin

#endif
