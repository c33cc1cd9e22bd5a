#pragma once

// n-qubit registers built from single-site ladder operators, the XY
// exchange chain on all 2^n basis states, and its reduction to the
// single-excitation sector.
//
// Bit convention is big-endian: site 0 is the most significant bit of the
// basis index, so |1 0 ... 0> = index 2^(n-1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qwire/numerics.hpp"

namespace qwire::spinchain {

inline constexpr std::size_t kMaxQubits = 12;

struct QubitRegister {
    std::size_t n;

    /// Throws InvalidArgument for n == 0, RegisterTooLarge above kMaxQubits.
    explicit QubitRegister(std::size_t qubits);
    std::size_t dim() const noexcept { return std::size_t{1} << n; }
};

/// Basis indices with exactly one excited qubit, ordered by excited site.
struct SectorMap {
    std::size_t n;
    std::vector<std::size_t> indices;

    static SectorMap single_excitation(std::size_t n);
};

/// a on `site` (a|1> = |0>, a|0> = 0) tensored with identity elsewhere.
Operator lowering_operator(std::size_t n, std::size_t site);
Operator raising_operator(std::size_t n, std::size_t site);

/// Sum_j a_j^dagger a_j, diagonal with the popcount of each basis index.
Operator number_operator(std::size_t n);

/// a^2 = 0, (a^dagger)^2 = 0 and a a^dagger + a^dagger a = 1, each within 1e-14.
bool ladder_algebra_check(const Operator& a);
bool ladder_algebra_check(std::size_t n, std::size_t site);

/// H = sum_j A_j (a_j^dagger a_{j+1} + a_{j+1}^dagger a_j) on 2^n states,
/// n = couplings.size() + 1. Couplings are energies. Off-diagonal elements
/// come out as +A_j; the lattice module uses -A_j, and the two are related
/// by the gauge |l> -> (-1)^l |l>.
Operator xy_chain_hamiltonian(std::span<const double> couplings);

/// Submatrix of h_full on the sector rows and columns. Throws
/// DimensionMismatch when h_full is not 2^n x 2^n.
Operator single_excitation_sector(const Operator& h_full, const SectorMap& map);

/// Basis state of the full register with one excitation on `site`.
StateVector single_excitation_state(std::size_t n, std::size_t site);

/// Applies the sign gauge |l> -> (-1)^l |l> to an n x n site operator.
Matrix sign_gauge(const Matrix& m);

struct ClassicalityGap {
    std::uint64_t quantum;
    std::uint64_t classical;
    std::uint64_t gap;
};

/// (2^N, 2N, 2^N - 2N). Throws InvalidArgument for N == 0, Overflow above 62.
ClassicalityGap classicality_gap(unsigned n);

} // namespace qwire::spinchain
