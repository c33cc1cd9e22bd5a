#pragma once

// Perfect-state-transfer chains: couplings A_j = A sqrt(j (d - j)), the
// tridiagonal Hamiltonian they define (proportional to J_x of spin
// (d-1)/2), and the transfer fidelity |<target| exp(-iHt/hbar) |source>|^2.
//
// Sites are 0-based; bond j (1-based, j = 1..d-1) joins sites j-1 and j.

#include <cstddef>
#include <span>
#include <vector>

#include "qwire/numerics.hpp"

namespace qwire::pst {

struct FidelityCurve {
    std::vector<double> times;
    std::vector<double> fidelities;
    std::size_t source;
    std::size_t target;
};

struct TransferReport {
    std::size_t d;
    double vartheta;
    double t_star;
    double peak_fidelity;
    double period;
};

/// A * sqrt(j (d - j)) for j = 1..d-1. Throws DimensionTooSmall.
std::vector<double> pst_couplings(std::size_t d, double amplitude);

/// Zero diagonal, off-diagonals vartheta * hbar * sqrt(j (d - j)).
/// Throws DimensionTooSmall, InvalidArgument for vartheta <= 0.
Operator pst_hamiltonian(std::size_t d, double vartheta, double hbar = 1.0);

/// Spin-s J_x in the |s, m> basis ordered m = s, s-1, ..., -s, in units of hbar.
Operator spin_jx(std::size_t d, double hbar = 1.0);

/// R(t) = exp(-i H t / hbar) for H = pst_hamiltonian(d, vartheta, hbar).
Operator evolution(std::size_t d, double vartheta, double t, double hbar = 1.0);

/// |<target| exp(-iHt/hbar) |source>|^2. Throws IndexOutOfRange.
double transfer_fidelity(const Operator& h, double t, std::size_t source, std::size_t target,
                         double hbar = 1.0);

/// Pointwise transfer_fidelity over an ascending time grid. The
/// eigendecomposition of H is computed once and reused for every sample.
/// Throws InvalidArgument if t_grid is not strictly increasing.
FidelityCurve fidelity_curve(const Operator& h, std::span<const double> t_grid, std::size_t source,
                             std::size_t target, double hbar = 1.0);

/// n evenly spaced points on [t0, t1], endpoints included (n >= 2).
std::vector<double> linspace(double t0, double t1, std::size_t n);

/// End-to-end transfer of the PST chain: t_star = pi / (2 vartheta),
/// period = pi / vartheta, peak fidelity evaluated at t_star.
TransferReport transfer_time(std::size_t d, double vartheta, double hbar = 1.0);

/// J H J == H within 1e-12, J the site-reversal permutation.
bool mirror_check(const Operator& h);

} // namespace qwire::pst
