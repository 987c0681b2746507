#ifndef MODMIN_VERIFY_SUITE_HPP
#define MODMIN_VERIFY_SUITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "modmin/descent.hpp"

namespace modmin {

struct VerifyOptions {
    int trials = 1000;
    std::uint64_t rng_seed = 20240801;
    ThetaMode theta_mode = ThetaMode::PaperTable;
};

/// Outcome of the randomized identity suite: the closed-form/direct
/// agreement, the gamma-delta identity, the alpha-expansion coefficient
/// checks, and the numeric descent checks.
struct VerifyReport {
    int trials_run = 0;

    double max_gk_residual = 0.0;       // direct vs closed form, amplitude-relative
    double max_identity_residual = 0.0; // gamma^2+delta^2 vs 4|u|^(2k-2)
    double max_b0_residual = 0.0;
    double max_low_order_residual = 0.0;
    double max_bk_residual = 0.0;
    double max_eval_residual = 0.0;     // expansion vs modulus_sq at random alpha
    double max_order_error = 0.0;       // |empirical order - k|
    int order_checked = 0;
    int order_skipped = 0;              // below the measurement noise floor

    int failures = 0;
    std::vector<std::string> failure_lines;

    bool pass() const { return failures == 0; }
};

VerifyReport run_verify_suite(const VerifyOptions& opts);

std::string format_verify_report(const VerifyReport& rep);

} // namespace modmin

#endif
