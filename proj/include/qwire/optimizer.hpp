#pragma once

// Derivative-free search for line-chain coupling profiles that maximize
// end-to-end transfer fidelity at a fixed time.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qwire::optimizer {

/// Search box: every coupling is clamped to [-kCouplingBound, kCouplingBound].
inline constexpr double kCouplingBound = 10.0;

struct OptimizeConfig {
    std::size_t d;
    double t_target;
    std::size_t max_iters = 20000;
    double tol = 1e-10;
    std::uint64_t seed = 0;

    /// Throws DimensionTooSmall / InvalidArgument.
    void validate() const;
};

struct OptimizeResult {
    /// |A_j| / max_k |A_k|: the profile with the scale and sign gauges removed.
    std::vector<double> couplings;
    /// Best raw couplings found, as searched at t_target.
    std::vector<double> raw_couplings;
    /// max_k |A_k| of raw_couplings, so objective(couplings, scale * t_target) == fidelity.
    double scale;
    double fidelity;
    std::size_t iterations;
    bool converged;
    /// Best objective after each iteration.
    std::vector<double> history;
};

/// Fidelity of 0 -> d-1 transfer at time t for the line chain with these
/// couplings (E0 = 0, hbar = 1). Throws BadCouplingCount unless the list
/// has d - 1 entries.
double objective(std::span<const double> couplings, double t, std::size_t d);

/// Nelder-Mead on the negated objective, restarted from the best point with
/// seeded jitter whenever the simplex collapses short of fidelity 1. One
/// sweep is d - 1 iterations. Converged when, at the end of a sweep, either
/// the simplex diameter is below tol, or the sweep improved the best value
/// by less than tol while 1 - best < tol (no further gain is possible).
/// A collapse followed by a restart that fails to improve also counts as
/// converged. Running out of iterations reports converged = false.
OptimizeResult optimize_couplings(const OptimizeConfig& config, std::span<const double> initial);

} // namespace qwire::optimizer
