#include "qwire/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qwire::lattice {

std::string_view to_string(Topology t) {
    return t == Topology::ring ? "ring" : "line";
}

Topology parse_topology(std::string_view name) {
    if (name == "ring") return Topology::ring;
    if (name == "line") return Topology::line;
    throw Error(ErrorCode::InvalidArgument, "unknown topology '" + std::string(name) + "'");
}

std::size_t ChainSpec::bond_count(Topology topology, std::size_t d) {
    return topology == Topology::ring ? d : d - 1;
}

void ChainSpec::validate() const {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    const std::size_t expected = bond_count(topology, d);
    if (couplings.size() != expected) {
        throw Error(ErrorCode::BadCouplingCount,
                    std::string(to_string(topology)) + " of " + std::to_string(d) + " sites needs " +
                        std::to_string(expected) + " couplings, got " +
                        std::to_string(couplings.size()));
    }
    if (!std::isfinite(e0)) throw Error(ErrorCode::InvalidArgument, "E0 must be finite");
    for (double a : couplings) {
        if (!std::isfinite(a)) throw Error(ErrorCode::InvalidArgument, "couplings must be finite");
    }
}

ChainSpec ChainSpec::uniform(Topology topology, std::size_t d, double e0, double amplitude) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    return ChainSpec{d, topology, e0, std::vector<double>(bond_count(topology, d), amplitude)};
}

Operator build_hamiltonian(const ChainSpec& spec) {
    spec.validate();
    const auto n = static_cast<Eigen::Index>(spec.d);
    Matrix h = Matrix::Zero(n, n);
    h.diagonal().setConstant(spec.e0);
    for (std::size_t l = 0; l < spec.couplings.size(); ++l) {
        const auto a = static_cast<Eigen::Index>(l);
        const auto b = static_cast<Eigen::Index>((l + 1) % spec.d);
        h(a, b) -= spec.couplings[l];
        h(b, a) -= spec.couplings[l];
    }
    return Operator::hermitian(std::move(h));
}

std::vector<double> wave_numbers(Topology topology, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    std::vector<double> kb(d);
    const double dd = static_cast<double>(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (topology == Topology::ring) {
            kb[i] = 2.0 * std::numbers::pi * static_cast<double>(i) / dd;
        } else {
            kb[i] = std::numbers::pi * static_cast<double>(i + 1) / (dd + 1.0);
        }
    }
    return kb;
}

std::vector<double> dispersion(Topology topology, std::size_t d, double e0, double amplitude) {
    std::vector<double> energies = wave_numbers(topology, d);
    for (double& e : energies) e = e0 - 2.0 * amplitude * std::cos(e);
    return energies;
}

double dispersion_check(const ChainSpec& spec) {
    spec.validate();
    const double amplitude = spec.couplings.front();
    if (std::any_of(spec.couplings.begin(), spec.couplings.end(),
                    [&](double a) { return a != amplitude; })) {
        throw Error(ErrorCode::InvalidArgument, "dispersion_check needs uniform couplings");
    }
    const RealVector eig = hermitian_eig(build_hamiltonian(spec)).values;
    std::vector<double> closed = dispersion(spec.topology, spec.d, spec.e0, amplitude);
    std::sort(closed.begin(), closed.end());

    double deviation = 0.0;
    for (std::size_t i = 0; i < spec.d; ++i) {
        deviation = std::max(deviation, std::abs(eig(static_cast<Eigen::Index>(i)) - closed[i]));
    }
    return deviation;
}

double ring_position_spread(const StateVector& state) {
    const std::size_t d = state.dim();
    const double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    double mean = 0.0;
    for (std::size_t l = 0; l < d; ++l) mean += std::norm(state[l]) * step * static_cast<double>(l);
    double variance = 0.0;
    for (std::size_t l = 0; l < d; ++l) {
        const double dq = step * static_cast<double>(l) - mean;
        variance += std::norm(state[l]) * dq * dq;
    }
    return std::sqrt(variance);
}

} // namespace qwire::lattice
