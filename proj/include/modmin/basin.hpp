#ifndef MODMIN_BASIN_HPP
#define MODMIN_BASIN_HPP

#include <vector>

#include "modmin/complex_poly.hpp"
#include "modmin/solver.hpp"

namespace modmin {

struct Region {
    Complex center;
    double width = 0.0;
    double height = 0.0;
    int px_w = 0;
    int px_h = 0;
};

enum class Method { Newton, Descent };

/// Per-pixel outcome of running a solver from the pixel's seed: index of the
/// nearest reference root (-1 when not converged), iteration count, status.
struct BasinImage {
    Region region;
    std::vector<Complex> roots; // reference roots, index space of root_index
    std::vector<int> root_index;
    std::vector<int> iters;
    std::vector<SolveStatus> status;
    int max_iters = 0;

    int root_classes() const;
    std::vector<unsigned char> to_rgb() const;
};

/// Seed of a pixel: centers of a uniform grid over the region, row-major,
/// top row at maximum imaginary part.
Complex pixel_seed(const Region& region, int col, int row);

/// Render by running the chosen method from every pixel seed, coloring by
/// nearest computed root within 1e-4 absolute. Deterministic.
BasinImage render_basin(const Polynomial& p, const Region& region,
                        Method method, const SolverConfig& cfg);

} // namespace modmin

#endif
