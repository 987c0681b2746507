#include "modmin/random_gen.hpp"

#include <cmath>
#include <numbers>

namespace modmin {

double InstanceGen::uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng_);
}

int InstanceGen::uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
}

Complex InstanceGen::coeff() {
    const double mag = std::pow(10.0, uniform(-3.0, 3.0));
    const double phase = uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(mag, phase);
}

Complex InstanceGen::point_in_disc(double radius) {
    const double r = radius * std::sqrt(uniform(0.0, 1.0));
    const double phase = uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, phase);
}

Polynomial InstanceGen::polynomial(int min_deg, int max_deg) {
    const int deg = uniform_int(min_deg, max_deg);
    std::vector<Complex> c(static_cast<size_t>(deg) + 1);
    for (auto& v : c) v = coeff();
    return Polynomial(std::move(c));
}

} // namespace modmin
