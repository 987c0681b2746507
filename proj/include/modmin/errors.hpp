#ifndef MODMIN_ERRORS_HPP
#define MODMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace modmin {

struct ConstantPolynomialError : std::domain_error {
    explicit ConstantPolynomialError(const std::string& what)
        : std::domain_error(what) {}
};

struct AlreadyAtRootError : std::domain_error {
    explicit AlreadyAtRootError(const std::string& what)
        : std::domain_error(what) {}
};

// Cannot occur for u != 0; kept as a guard.
struct DegenerateDirectionError : std::domain_error {
    explicit DegenerateDirectionError(const std::string& what)
        : std::domain_error(what) {}
};

// Backtracking exhausted without a strict decrease; usually means the
// floating-point floor of |p|^2 has been reached.
struct StallError : std::runtime_error {
    explicit StallError(const std::string& what)
        : std::runtime_error(what) {}
};

} // namespace modmin

#endif
