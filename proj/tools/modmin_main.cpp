#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modmin/basin.hpp"
#include "modmin/complex_poly.hpp"
#include "modmin/io.hpp"
#include "modmin/random_gen.hpp"
#include "modmin/roots.hpp"
#include "modmin/solver.hpp"
#include "modmin/verify_suite.hpp"

namespace {

using namespace modmin;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;

struct GlobalOpts {
    double tol = 1e-12;
    int max_iters = 500;
    std::string theta_mode = "paper";
    std::uint64_t seed_rng = 20240801;
};

SolverConfig make_config(const GlobalOpts& g) {
    SolverConfig cfg;
    cfg.root_tol = g.tol;
    cfg.max_iters = g.max_iters;
    cfg.theta_mode = g.theta_mode == "optimal" ? ThetaMode::OptimalLeading
                                               : ThetaMode::PaperTable;
    return cfg;
}

struct PolyInput {
    std::string inline_poly;
    std::string coeff_file;

    Polynomial load() const {
        if (!inline_poly.empty()) return parse_inline_poly(inline_poly);
        if (!coeff_file.empty()) return read_coeff_file(coeff_file);
        throw std::invalid_argument("no polynomial given: use --poly or --coeff-file");
    }
};

void add_poly_options(CLI::App* cmd, PolyInput& in) {
    cmd->add_option("--poly", in.inline_poly,
                    "inline coefficients, ascending powers: \"re im, re im, ...\"");
    cmd->add_option("--coeff-file", in.coeff_file,
                    "coefficient file, one \"re im\" per line, '#' comments");
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const size_t n = v.size();
    return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int cmd_solve(const GlobalOpts& g, const PolyInput& in, const std::string& seed,
              const std::string& method, const std::string& out_path) {
    const Polynomial p = in.load();
    const Complex z0 = parse_complex_pair(seed);
    const SolverConfig cfg = make_config(g);
    const SolveResult res = method == "newton" ? newton_classical(p, z0, cfg)
                                               : newton_descent(p, z0, cfg);

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        out_file.open(out_path);
        if (!out_file) {
            std::cerr << "cannot open output file: " << out_path << "\n";
            return kExitUsage;
        }
        out = &out_file;
    }
    write_trace_jsonl(*out, res.trace);
    std::cerr << "status: " << to_string(res.status) << "  root: "
              << res.root.real() << " " << res.root.imag() << "  |p(root)|: "
              << res.trace.back().abs_p << "\n";
    return res.status == SolveStatus::Converged ? kExitOk : kExitNumeric;
}

int cmd_roots(const GlobalOpts& g, const PolyInput& in) {
    const Polynomial p = in.load();
    const SolverConfig cfg = make_config(g);
    const AllRootsResult all = solve_all_roots(p, cfg);
    const RootReport rep = root_report(p, all.roots);

    std::cout << "degree: " << p.degree() << "\n";
    for (size_t i = 0; i < rep.roots.size(); ++i)
        std::cout << "root " << i << ": " << rep.roots[i].real() << " "
                  << rep.roots[i].imag() << "  residual " << rep.residuals[i]
                  << "\n";
    std::cout << "reconstruction_error: " << rep.reconstruction_error << "\n";
    for (const std::string& w : all.warnings) std::cout << "warning: " << w << "\n";
    return all.complete ? kExitOk : kExitNumeric;
}

int cmd_basin(const GlobalOpts& g, const PolyInput& in, const std::string& center,
              double width, double height, int px_w, int px_h,
              const std::string& method, const std::string& out_path) {
    const Polynomial p = in.load();
    const SolverConfig cfg = make_config(g);
    Region region;
    region.center = parse_complex_pair(center);
    region.width = width;
    region.height = height > 0.0 ? height : width;
    region.px_w = px_w;
    region.px_h = px_h > 0 ? px_h : px_w;

    const BasinImage img = render_basin(
        p, region, method == "newton" ? Method::Newton : Method::Descent, cfg);

    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return kExitUsage;
    }
    write_ppm(out, region.px_w, region.px_h, img.to_rgb());
    if (!out) {
        std::cerr << "write failed: " << out_path << "\n";
        return kExitNumeric;
    }
    std::cerr << "wrote " << out_path << " (" << region.px_w << "x"
              << region.px_h << ", " << img.root_classes()
              << " root classes)\n";
    return kExitOk;
}

int cmd_bench(const GlobalOpts& g, const std::string& family, int degree,
              int grid) {
    const SolverConfig cfg = make_config(g);

    Polynomial p({Complex{1.0, 0.0}});
    if (family == "unity") {
        std::vector<Complex> c(static_cast<size_t>(degree) + 1, Complex{0.0, 0.0});
        c[0] = Complex{-1.0, 0.0};
        c.back() = Complex{1.0, 0.0};
        p = Polynomial(std::move(c));
    } else if (family == "wilkinson5") {
        std::vector<Complex> c{Complex{1.0, 0.0}};
        for (int r = 1; r <= 5; ++r) {
            std::vector<Complex> next(c.size() + 1, Complex{0.0, 0.0});
            for (size_t j = 0; j < c.size(); ++j) {
                next[j + 1] += c[j];
                next[j] -= static_cast<double>(r) * c[j];
            }
            c = std::move(next);
        }
        p = Polynomial(std::move(c));
    } else { // random
        InstanceGen gen(g.seed_rng);
        p = gen.polynomial(degree, degree);
    }

    std::cout << "family: " << family << "  degree: " << p.degree()
              << "  grid: " << grid << "x" << grid << " on [-2,2]^2\n";
    std::cout << "method    success   median_iters   median_backtracks\n";

    for (const std::string& method : {std::string("newton"), std::string("descent")}) {
        int success = 0;
        std::vector<double> iters, backtracks;
        for (int gy = 0; gy < grid; ++gy) {
            for (int gx = 0; gx < grid; ++gx) {
                const Complex seed{-2.0 + 4.0 * gx / (grid - 1.0),
                                   -2.0 + 4.0 * gy / (grid - 1.0)};
                const SolveResult res = method == "newton"
                                            ? newton_classical(p, seed, cfg)
                                            : newton_descent(p, seed, cfg);
                if (res.status == SolveStatus::Converged) {
                    ++success;
                    iters.push_back(static_cast<double>(res.trace.size()) - 1.0);
                    double bt = 0.0;
                    for (const TraceRecord& r : res.trace) bt += r.backtracks;
                    backtracks.push_back(bt);
                }
            }
        }
        const double rate = static_cast<double>(success) / (grid * grid);
        std::cout << method << (method == "newton" ? "    " : "   ") << rate
                  << "   " << median(iters) << "   " << median(backtracks)
                  << "\n";
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& g, int trials) {
    VerifyOptions opts;
    opts.trials = trials;
    opts.rng_seed = g.seed_rng;
    opts.theta_mode = make_config(g).theta_mode;
    const VerifyReport rep = run_verify_suite(opts);
    std::cout << format_verify_report(rep);
    return rep.pass() ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial root finding by modulus descent"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--tol", g.tol, "root tolerance relative to max |coeff|");
    app.add_option("--max-iters", g.max_iters, "iteration cap");
    app.add_option("--theta-mode", g.theta_mode, "theta selection: paper|optimal")
        ->check(CLI::IsMember({"paper", "optimal"}));
    app.add_option("--seed-rng", g.seed_rng, "RNG seed for verify/bench");

    // solve
    auto* solve = app.add_subcommand("solve", "run one solver, emit JSON-lines trace");
    PolyInput solve_poly;
    add_poly_options(solve, solve_poly);
    std::string solve_seed = "0 0", solve_method = "descent", solve_out;
    solve->add_option("--seed", solve_seed, "initial point \"re im\"");
    solve->add_option("--method", solve_method, "newton|descent")
        ->check(CLI::IsMember({"newton", "descent"}));
    solve->add_option("--out", solve_out, "trace output file (default stdout)");

    // roots
    auto* roots = app.add_subcommand("roots", "find all roots, print report");
    PolyInput roots_poly;
    add_poly_options(roots, roots_poly);

    // basin
    auto* basin = app.add_subcommand("basin", "render basins of attraction (PPM P6)");
    PolyInput basin_poly;
    add_poly_options(basin, basin_poly);
    std::string basin_center = "0 0", basin_method = "descent", basin_out;
    double basin_width = 4.0, basin_height = 0.0;
    int basin_pxw = 200, basin_pxh = 0;
    basin->add_option("--center", basin_center, "region center \"re im\"");
    basin->add_option("--width", basin_width, "region width");
    basin->add_option("--height", basin_height, "region height (default: width)");
    basin->add_option("--px-w", basin_pxw, "pixel width");
    basin->add_option("--px-h", basin_pxh, "pixel height (default: px-w)");
    basin->add_option("--method", basin_method, "newton|descent")
        ->check(CLI::IsMember({"newton", "descent"}));
    basin->add_option("--out", basin_out, "output PPM path")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "compare methods over a seed grid");
    std::string bench_family = "unity";
    int bench_degree = 3, bench_grid = 21;
    bench->add_option("--family", bench_family, "unity|wilkinson5|random")
        ->check(CLI::IsMember({"unity", "wilkinson5", "random"}));
    bench->add_option("--degree", bench_degree, "degree for unity/random families");
    bench->add_option("--grid", bench_grid, "seed grid side length");

    // verify
    auto* verify = app.add_subcommand("verify", "randomized identity suite");
    int verify_trials = 1000;
    verify->add_option("--trials", verify_trials, "number of randomized trials");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed())
            return cmd_solve(g, solve_poly, solve_seed, solve_method, solve_out);
        if (roots->parsed()) return cmd_roots(g, roots_poly);
        if (basin->parsed())
            return cmd_basin(g, basin_poly, basin_center, basin_width,
                             basin_height, basin_pxw, basin_pxh, basin_method,
                             basin_out);
        if (bench->parsed()) return cmd_bench(g, bench_family, bench_degree, bench_grid);
        if (verify->parsed()) return cmd_verify(g, verify_trials);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
