#ifndef MODMIN_RANDOM_GEN_HPP
#define MODMIN_RANDOM_GEN_HPP

#include <cstdint>
#include <random>

#include "modmin/complex_poly.hpp"

namespace modmin {

/// Deterministic instance generator shared by the verify suite and tests.
class InstanceGen {
  public:
    explicit InstanceGen(std::uint64_t seed) : eng_(seed) {}

    /// Magnitude log-uniform over 10^[-3, 3], uniform phase.
    Complex coeff();

    /// Uniform in the disc of the given radius.
    Complex point_in_disc(double radius);

    /// Random polynomial, degree uniform in [min_deg, max_deg], log-uniform
    /// coefficients, nonzero leading coefficient.
    Polynomial polynomial(int min_deg, int max_deg);

    double uniform(double lo, double hi);
    int uniform_int(int lo, int hi);

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

} // namespace modmin

#endif
