#ifndef MODMIN_SOLVER_HPP
#define MODMIN_SOLVER_HPP

#include <string>
#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/descent.hpp"

namespace modmin {

struct SolverConfig {
    double root_tol = 1e-12;      // stop when |p(z)| <= root_tol * coeff_scale
    int max_iters = 500;
    ThetaMode theta_mode = ThetaMode::PaperTable;
    double backtrack_factor = 0.5;
    int max_backtracks = 60;
    double derivative_tol = 1e-14; // classical Newton: |p'| <= this * coeff_scale
    double eps_rel = 1e-12;        // relative zero test for Taylor coefficients
};

struct TraceRecord {
    int iter = 0;
    Complex z;
    double abs_p = 0.0;
    double F = 0.0;
    int k = 0;          // 0 on the seed record
    double theta = 0.0;
    double alpha = 0.0; // accepted step length
    int backtracks = 0;
};

using SolverTrace = std::vector<TraceRecord>;

enum class SolveStatus { Converged, MaxIters, CriticalPoint, Stalled };

const char* to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::MaxIters;
    Complex root;       // best point found (the root when Converged)
    SolverTrace trace;
};

/// One accepted descent step, with everything the trace needs.
struct StepReport {
    DescentInfo info;
    double alpha_init = 0.0;  // |a0/ak|^(1/k), the generalized Newton magnitude
    double alpha = 0.0;       // accepted after backtracking
    int backtracks = 0;
    Complex trial_z;          // z0 + alpha_init * e^{i theta} u/|u|
    Complex next_z;           // accepted point, F(next_z) < F(z0)
    double next_F = 0.0;
};

/// Classical Newton z <- z - p(z)/p'(z). Not monotone in F; returns
/// CriticalPoint when p' vanishes at a non-root iterate.
SolveResult newton_classical(const Polynomial& p, Complex z0,
                             const SolverConfig& cfg);

/// One generalized Newton step from the expansion point: direction
/// e^{i theta} u/|u|, initial magnitude |a0/ak|^(1/k), halved until F
/// strictly decreases. Throws StallError when no decrease is found and
/// AlreadyAtRootError when the point is already a root. When k = 1 the
/// full step is the classical Newton step.
StepReport descent_step(const Polynomial& p, const TaylorExpansion& t,
                        const SolverConfig& cfg);

/// Monotone descent iteration; defined at every non-root point, critical
/// or not. Never returns CriticalPoint.
SolveResult newton_descent(const Polynomial& p, Complex z0,
                           const SolverConfig& cfg);

/// Find all degree-many roots by solve/deflate/repeat, polishing each root
/// against the original polynomial. Seeds default to 0 when empty.
struct AllRootsResult {
    std::vector<Complex> roots;
    bool complete = false;    // every root converged
    std::vector<std::string> warnings;
};

AllRootsResult solve_all_roots(const Polynomial& p, const SolverConfig& cfg,
                               const std::vector<Complex>& seeds = {});

} // namespace modmin

#endif
