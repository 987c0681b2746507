#include "modmin/verify_suite.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "modmin/errors.hpp"
#include "modmin/oracle.hpp"
#include "modmin/random_gen.hpp"
#include "modmin/solver.hpp"

namespace modmin {

namespace {

void record_failure(VerifyReport& rep, int trial, const std::string& what,
                    double value) {
    ++rep.failures;
    if (rep.failure_lines.size() < 20) {
        std::ostringstream os;
        os << "trial " << trial << ": " << what << " residual " << value;
        rep.failure_lines.push_back(os.str());
    }
}

} // namespace

VerifyReport run_verify_suite(const VerifyOptions& opts) {
    VerifyReport rep;
    InstanceGen gen(opts.rng_seed);
    SolverConfig cfg;
    cfg.theta_mode = opts.theta_mode;

    for (int trial = 0; trial < opts.trials; ++trial) {
        // Instance with z0 bounded away from roots of p.
        Polynomial p = gen.polynomial(1, 10);
        Complex z0 = gen.point_in_disc(1.0);
        TaylorExpansion t = taylor_at(p, z0);
        double maxmag = 0.0;
        for (const Complex& aj : t.a) maxmag = std::max(maxmag, std::abs(aj));
        for (int retry = 0; retry < 100 && std::abs(t.a[0]) <= 1e-6 * maxmag;
             ++retry) {
            p = gen.polynomial(1, 10);
            z0 = gen.point_in_disc(1.0);
            t = taylor_at(p, z0);
            maxmag = 0.0;
            for (const Complex& aj : t.a) maxmag = std::max(maxmag, std::abs(aj));
        }
        ++rep.trials_run;

        const DescentInfo info = descent_direction(t, opts.theta_mode);
        const Complex u = info.u;
        const int k = info.k;

        // Closed form vs direct evaluation of G_k on an (alpha, theta) grid.
        const double amp =
            std::norm(u) * std::hypot(info.gamma, info.delta);
        const double alpha_g = gen.uniform(0.05, 4.0);
        for (int g = 0; g < 32; ++g) {
            const double th = 2.0 * std::numbers::pi * g / 32.0;
            const Complex z = alpha_g * std::polar(1.0, th) * u;
            const double direct = g_k_direct(u, k, z);
            const double closed = g_k_closed(u, k, alpha_g, th);
            const double res =
                std::abs(direct - closed) / (std::pow(alpha_g, k) * amp);
            rep.max_gk_residual = std::max(rep.max_gk_residual, res);
            if (res > 1e-10) record_failure(rep, trial, "g_k direct/closed", res);
        }

        // gamma^2 + delta^2 = 4 |u|^(2(k-1)).
        const double lhs = info.gamma * info.gamma + info.delta * info.delta;
        const double rhs = 4.0 * std::pow(std::norm(u), k - 1);
        const double ident_res = std::abs(lhs - rhs) / rhs;
        rep.max_identity_residual = std::max(rep.max_identity_residual, ident_res);
        if (ident_res > 1e-10)
            record_failure(rep, trial, "gamma^2+delta^2 identity", ident_res);

        if (!(info.leading_coeff < 0.0))
            record_failure(rep, trial, "leading coefficient sign",
                           info.leading_coeff);

        // Alpha-expansion coefficient checks (Taylor route vs convolution).
        const AlphaExpansion e = expand_alpha(t, info.direction);
        const LeadingTermReport lt = check_leading_terms(e, info, t.a[0]);
        rep.max_b0_residual = std::max(rep.max_b0_residual, lt.b0_residual);
        rep.max_low_order_residual =
            std::max(rep.max_low_order_residual, lt.low_order_residual);
        rep.max_bk_residual = std::max(rep.max_bk_residual, lt.bk_residual);
        if (!lt.pass)
            record_failure(rep, trial, "b-coefficient closed forms",
                           std::max({lt.b0_residual, lt.low_order_residual,
                                     lt.bk_residual}));

        // Evaluating the expansion at a random alpha must reproduce F.
        const double alpha_init =
            std::pow(std::abs(t.a[0]) / std::abs(t.a[static_cast<size_t>(k)]),
                     1.0 / k);
        const double alpha_nat = alpha_init / std::abs(u);
        const double alpha_e = gen.uniform(0.05, 1.0) * alpha_nat;
        const double via_expansion = e.eval(alpha_e);
        const double via_eval = modulus_sq(p, z0 + alpha_e * info.direction);
        const double eval_res =
            std::abs(via_expansion - via_eval) / e.abs_eval(alpha_e);
        rep.max_eval_residual = std::max(rep.max_eval_residual, eval_res);
        if (eval_res > 1e-10)
            record_failure(rep, trial, "expansion evaluation", eval_res);

        // Numeric descent over the accepted backtracking range.
        try {
            const StepReport step = descent_step(p, t, cfg);
            const DescentCheckReport dc = numeric_descent_check(
                p, z0, info.unit_direction, step.alpha);
            // Guaranteed: decrease at the accepted step and for all small
            // alpha. Mid-range sign wiggles along the ray are allowed.
            if (!(dc.diffs[0] < 0.0) || dc.negative_prefix < 10)
                record_failure(rep, trial, "descent negativity",
                               static_cast<double>(dc.negative_prefix));
            if (dc.order_valid) {
                ++rep.order_checked;
                const double err = std::abs(dc.empirical_order - k);
                rep.max_order_error = std::max(rep.max_order_error, err);
                if (err > 0.1)
                    record_failure(rep, trial, "empirical order", err);
            } else {
                ++rep.order_skipped;
            }
        } catch (const StallError&) {
            record_failure(rep, trial, "descent step stalled", 0.0);
        }
    }
    return rep;
}

std::string format_verify_report(const VerifyReport& rep) {
    std::ostringstream os;
    os << "verify: " << rep.trials_run << " trials\n";
    os << "  g_k direct vs closed        max residual " << rep.max_gk_residual
       << "\n";
    os << "  gamma^2+delta^2 identity    max residual "
       << rep.max_identity_residual << "\n";
    os << "  b0 closed form              max residual " << rep.max_b0_residual
       << "\n";
    os << "  b_j (j<k) vanishing         max residual "
       << rep.max_low_order_residual << "\n";
    os << "  b_k closed form             max residual " << rep.max_bk_residual
       << "\n";
    os << "  expansion evaluation        max residual " << rep.max_eval_residual
       << "\n";
    os << "  empirical descent order     max error " << rep.max_order_error
       << " (" << rep.order_checked << " checked, " << rep.order_skipped
       << " below noise floor)\n";
    os << "  result: " << (rep.pass() ? "PASS" : "FAIL") << " (" << rep.failures
       << " failures)\n";
    for (const std::string& line : rep.failure_lines) os << "  " << line << "\n";
    return os.str();
}

} // namespace modmin
