#include "modmin/solver.hpp"

#include <cmath>

#include "modmin/errors.hpp"

namespace modmin {

const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Converged: return "Converged";
        case SolveStatus::MaxIters: return "MaxIters";
        case SolveStatus::CriticalPoint: return "CriticalPoint";
        case SolveStatus::Stalled: return "Stalled";
    }
    return "Unknown";
}

namespace {

TraceRecord make_record(const Polynomial& p, int iter, Complex z) {
    TraceRecord r;
    r.iter = iter;
    r.z = z;
    r.F = modulus_sq(p, z);
    r.abs_p = std::sqrt(r.F);
    return r;
}

} // namespace

SolveResult newton_classical(const Polynomial& p, Complex z0,
                             const SolverConfig& cfg) {
    SolveResult res;
    const double scale = p.coeff_scale();
    const Polynomial dp = p.derivative();
    Complex z = z0;
    res.trace.push_back(make_record(p, 0, z));

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        if (res.trace.back().abs_p <= cfg.root_tol * scale) {
            res.status = SolveStatus::Converged;
            res.root = z;
            return res;
        }
        const Complex deriv = dp.eval(z);
        if (std::abs(deriv) <= cfg.derivative_tol * scale) {
            res.status = SolveStatus::CriticalPoint;
            res.root = z;
            return res;
        }
        const Complex step = -p.eval(z) / deriv;
        z += step;
        TraceRecord rec = make_record(p, iter, z);
        rec.k = 1;
        rec.alpha = std::abs(step);
        res.trace.push_back(rec);
    }

    if (res.trace.back().abs_p <= cfg.root_tol * scale) {
        res.status = SolveStatus::Converged;
    } else {
        res.status = SolveStatus::MaxIters;
    }
    res.root = z;
    return res;
}

StepReport descent_step(const Polynomial& p, const TaylorExpansion& t,
                        const SolverConfig& cfg) {
    const Complex z0 = t.center;
    const double f0 = modulus_sq(p, z0);
    if (std::sqrt(f0) <= cfg.root_tol * p.coeff_scale())
        throw AlreadyAtRootError("descent_step: already at a root");

    StepReport rep;
    rep.info = descent_direction(t, cfg.theta_mode, cfg.eps_rel);
    const int k = rep.info.k;
    const double ratio = std::abs(t.a[0]) / std::abs(t.a[static_cast<size_t>(k)]);
    rep.alpha_init = std::pow(ratio, 1.0 / k);
    rep.trial_z = z0 + rep.alpha_init * rep.info.unit_direction;

    double alpha = rep.alpha_init;
    for (int bt = 0; bt <= cfg.max_backtracks; ++bt) {
        const Complex trial = z0 + alpha * rep.info.unit_direction;
        const double ft = modulus_sq(p, trial);
        if (ft < f0) {
            rep.alpha = alpha;
            rep.backtracks = bt;
            rep.next_z = trial;
            rep.next_F = ft;
            return rep;
        }
        alpha *= cfg.backtrack_factor;
    }
    throw StallError("descent_step: no decrease after max_backtracks");
}

SolveResult newton_descent(const Polynomial& p, Complex z0,
                           const SolverConfig& cfg) {
    SolveResult res;
    const double scale = p.coeff_scale();
    Complex z = z0;
    res.trace.push_back(make_record(p, 0, z));

    for (int iter = 1; iter <= cfg.max_iters; ++iter) {
        if (res.trace.back().abs_p <= cfg.root_tol * scale) {
            res.status = SolveStatus::Converged;
            res.root = z;
            return res;
        }
        StepReport step;
        try {
            step = descent_step(p, taylor_at(p, z), cfg);
        } catch (const AlreadyAtRootError&) {
            res.status = SolveStatus::Converged;
            res.root = z;
            return res;
        } catch (const StallError&) {
            res.status = SolveStatus::Stalled;
            res.root = z;
            return res;
        }
        z = step.next_z;
        TraceRecord rec = make_record(p, iter, z);
        rec.k = step.info.k;
        rec.theta = step.info.theta;
        rec.alpha = step.alpha;
        rec.backtracks = step.backtracks;
        res.trace.push_back(rec);
    }

    if (res.trace.back().abs_p <= cfg.root_tol * scale) {
        res.status = SolveStatus::Converged;
    } else {
        res.status = SolveStatus::MaxIters;
    }
    res.root = z;
    return res;
}

AllRootsResult solve_all_roots(const Polynomial& p, const SolverConfig& cfg,
                               const std::vector<Complex>& seeds) {
    AllRootsResult out;
    out.complete = true;
    Polynomial work = p;

    size_t seed_idx = 0;
    while (work.degree() >= 1) {
        const Complex seed =
            seed_idx < seeds.size() ? seeds[seed_idx] : Complex{0.0, 0.0};
        ++seed_idx;

        SolveResult found = newton_descent(work, seed, cfg);
        Complex r = found.root;

        // Polish against the original polynomial to undo deflation drift.
        SolveResult polish = newton_descent(p, r, cfg);
        if (modulus_sq(p, polish.root) <= modulus_sq(p, r)) r = polish.root;

        const bool ok = found.status == SolveStatus::Converged ||
                        polish.status == SolveStatus::Converged ||
                        std::sqrt(modulus_sq(p, r)) <= cfg.root_tol * p.coeff_scale();
        if (!ok) {
            out.complete = false;
            out.warnings.push_back(std::string("root ") +
                                   std::to_string(out.roots.size()) +
                                   " did not converge: " +
                                   to_string(found.status));
        }

        out.roots.push_back(r);
        work = deflate(work, r).first;
    }
    return out;
}

} // namespace modmin
