#pragma once

// Nearest-neighbour tight-binding chains (ring and open line) with on-site
// energy E0 and hopping amplitudes A_l, plus the closed-form band
// E_j = E0 - 2A cos(k_j b).

#include <cstddef>
#include <string_view>
#include <vector>

#include "qwire/numerics.hpp"

namespace qwire::lattice {

enum class Topology { ring, line };

std::string_view to_string(Topology t);
/// Parses "ring" / "line"; throws InvalidArgument otherwise.
Topology parse_topology(std::string_view name);

/// couplings[l] is the amplitude on the bond (l, l+1); for a ring the last
/// bond is (d-1, 0). Lengths: d for ring, d-1 for line.
struct ChainSpec {
    std::size_t d;
    Topology topology;
    double e0;
    std::vector<double> couplings;

    /// Throws DimensionTooSmall, BadCouplingCount, InvalidArgument (non-finite).
    void validate() const;
    static ChainSpec uniform(Topology topology, std::size_t d, double e0, double amplitude);
    static std::size_t bond_count(Topology topology, std::size_t d);
};

/// H[l][l] = E0, H[l][l+1] = H[l+1][l] = -A_l. On a ring of two sites both
/// bonds join the same pair and their amplitudes add.
Operator build_hamiltonian(const ChainSpec& spec);

/// E_j in j order: ring j = 0..d-1 with k_j b = 2 pi j / d, line j = 1..d
/// with k_j b = pi j / (d + 1).
std::vector<double> dispersion(Topology topology, std::size_t d, double e0, double amplitude);

/// k_j b for the same j ordering as dispersion().
std::vector<double> wave_numbers(Topology topology, std::size_t d);

/// max |sorted eig(H) - sorted dispersion|. Requires uniform couplings.
double dispersion_check(const ChainSpec& spec);

/// Standard deviation of q_l = 2 pi l / d under |a_l|^2, origin at site 0.
double ring_position_spread(const StateVector& state);

} // namespace qwire::lattice
