#pragma once

// Discrete Weyl pair on d sites: the cyclic shift U|l> = |l+1 mod d>, the
// clock V|l> = exp(2 pi i l / d)|l>, their Fourier eigenbasis, and the
// equidistant-spectrum Hamiltonian whose evolution over one time step is
// exactly the cyclic shift.

#include <cstddef>

#include "qwire/numerics.hpp"

namespace qwire::weyl {

struct WeylPair {
    std::size_t dim;
    Operator shift;
    Operator clock;
    /// Measured lambda with shift * clock = lambda * clock * shift.
    Complex commutation_phase;
};

/// Throws DimensionTooSmall for d < 2.
Operator shift_matrix(std::size_t d);
Operator clock_matrix(std::size_t d);

/// Builds both operators and measures their commutation phase.
WeylPair weyl_pair(std::size_t d);

/// Scalar lambda with U V = lambda V U. The up-shift / clock pair gives
/// lambda = exp(-2 pi i / d); the reverse ordering gives the conjugate.
/// Throws NotProportional if no such lambda exists within 1e-12, and
/// DimensionMismatch if the operators differ in size.
Complex commutation_phase(const Operator& u, const Operator& v);

/// True iff lambda^k != 1 for k = 1..d-1 and lambda^d == 1 (both within tol).
bool is_primitive_root(Complex lambda, std::size_t d, double tol = tol::kExact);

/// Column j is (1/sqrt d) sum_l exp(-2 pi i l j / d)|l>, chosen so that
/// shift_matrix(d) * column_j = exp(2 pi i j / d) * column_j.
Operator momentum_basis(std::size_t d);

/// Hermitian matrix with spectrum {0, hbar theta, ..., (d-1) hbar theta},
/// diagonal in the momentum basis. The eigenvalue hbar*theta*j sits on the
/// Fourier mode sum_l exp(+2 pi i l j / d)|l> (momentum column (d-j) mod d),
/// which makes evolve(H, time_step(d, theta)) equal to shift_matrix(d).
/// Throws DimensionTooSmall, ZeroTheta.
Operator equidistant_hamiltonian(std::size_t d, double theta, double hbar = 1.0);

/// 2 pi / (theta d). Throws ZeroTheta for theta == 0, InvalidArgument for
/// theta < 0, DimensionTooSmall for d < 2.
double time_step(std::size_t d, double theta);

struct ShiftIdentity {
    bool holds;
    Complex global_phase;
    double residual;
};

/// Compares evolve(equidistant_hamiltonian(d, theta), time_step(d, theta))
/// with shift_matrix(d) up to one global phase, read off the entry where
/// |R_ij * U_ij| is largest.
ShiftIdentity verify_shift_identity(std::size_t d, double theta, double hbar = 1.0);

} // namespace qwire::weyl
