#include "modmin/basin.hpp"

#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace modmin {

namespace {

constexpr double kRootMatchTol = 1e-4;

// Fixed palette, cycled by root index. Non-converged pixels get dark gray.
constexpr std::array<std::array<unsigned char, 3>, 8> kPalette = {{
    {230, 60, 50},
    {60, 140, 230},
    {70, 200, 90},
    {235, 195, 50},
    {170, 80, 220},
    {60, 210, 200},
    {240, 130, 40},
    {200, 200, 210},
}};
constexpr std::array<unsigned char, 3> kFailColor = {25, 25, 30};

} // namespace

Complex pixel_seed(const Region& region, int col, int row) {
    const double x = region.center.real() - region.width / 2.0 +
                     (col + 0.5) * region.width / region.px_w;
    const double y = region.center.imag() + region.height / 2.0 -
                     (row + 0.5) * region.height / region.px_h;
    return {x, y};
}

int BasinImage::root_classes() const {
    std::set<int> seen;
    for (int idx : root_index)
        if (idx >= 0) seen.insert(idx);
    return static_cast<int>(seen.size());
}

std::vector<unsigned char> BasinImage::to_rgb() const {
    std::vector<unsigned char> rgb(root_index.size() * 3);
    for (size_t i = 0; i < root_index.size(); ++i) {
        std::array<unsigned char, 3> base = kFailColor;
        double shade = 1.0;
        if (root_index[i] >= 0) {
            base = kPalette[static_cast<size_t>(root_index[i]) % kPalette.size()];
            // Linear ramp on iteration count, clamped at max_iters.
            const int it = std::min(iters[i], max_iters);
            shade = 1.0 - 0.75 * static_cast<double>(it) /
                              static_cast<double>(std::max(max_iters, 1));
        }
        for (int c = 0; c < 3; ++c)
            rgb[3 * i + static_cast<size_t>(c)] =
                static_cast<unsigned char>(std::lround(base[static_cast<size_t>(c)] * shade));
    }
    return rgb;
}

BasinImage render_basin(const Polynomial& p, const Region& region,
                        Method method, const SolverConfig& cfg) {
    if (region.px_w <= 0 || region.px_h <= 0 || region.width <= 0.0 ||
        region.height <= 0.0)
        throw std::invalid_argument("render_basin: region extents must be positive");

    BasinImage img;
    img.region = region;
    img.max_iters = cfg.max_iters;
    img.roots = solve_all_roots(p, cfg).roots;

    const size_t npx = static_cast<size_t>(region.px_w) * region.px_h;
    img.root_index.assign(npx, -1);
    img.iters.assign(npx, 0);
    img.status.assign(npx, SolveStatus::MaxIters);

    for (int row = 0; row < region.px_h; ++row) {
        for (int col = 0; col < region.px_w; ++col) {
            const size_t i = static_cast<size_t>(row) * region.px_w + col;
            const Complex seed = pixel_seed(region, col, row);
            const SolveResult res = method == Method::Newton
                                        ? newton_classical(p, seed, cfg)
                                        : newton_descent(p, seed, cfg);
            img.status[i] = res.status;
            img.iters[i] = static_cast<int>(res.trace.size()) - 1;
            if (res.status != SolveStatus::Converged) continue;
            int best = -1;
            double best_dist = kRootMatchTol;
            for (size_t r = 0; r < img.roots.size(); ++r) {
                const double dist = std::abs(res.root - img.roots[r]);
                if (dist <= best_dist) {
                    best_dist = dist;
                    best = static_cast<int>(r);
                }
            }
            img.root_index[i] = best;
        }
    }
    return img;
}

} // namespace modmin
