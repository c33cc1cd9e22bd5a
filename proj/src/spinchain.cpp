#include "qwire/spinchain.hpp"

#include <bit>
#include <string>

namespace qwire::spinchain {

namespace {

std::size_t site_mask(std::size_t n, std::size_t site) {
    return std::size_t{1} << (n - 1 - site);
}

void require_site(std::size_t n, std::size_t site) {
    if (site >= n) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "site " + std::to_string(site) + " in a register of " + std::to_string(n));
    }
}

} // namespace

QubitRegister::QubitRegister(std::size_t qubits) : n(qubits) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "register needs at least one qubit");
    if (n > kMaxQubits) {
        throw Error(ErrorCode::RegisterTooLarge, std::to_string(n) + " qubits exceeds the cap of " +
                                                     std::to_string(kMaxQubits));
    }
}

SectorMap SectorMap::single_excitation(std::size_t n) {
    const QubitRegister reg(n);
    SectorMap map{reg.n, {}};
    map.indices.reserve(n);
    for (std::size_t k = 0; k < n; ++k) map.indices.push_back(site_mask(n, k));
    return map;
}

Operator lowering_operator(std::size_t n, std::size_t site) {
    const QubitRegister reg(n);
    require_site(n, site);
    const auto dim = static_cast<Eigen::Index>(reg.dim());
    const std::size_t mask = site_mask(n, site);
    Matrix a = Matrix::Zero(dim, dim);
    for (std::size_t b = 0; b < reg.dim(); ++b) {
        if (b & mask) a(static_cast<Eigen::Index>(b ^ mask), static_cast<Eigen::Index>(b)) = 1.0;
    }
    return Operator::general(std::move(a));
}

Operator raising_operator(std::size_t n, std::size_t site) {
    return Operator::general(lowering_operator(n, site).matrix().adjoint());
}

Operator number_operator(std::size_t n) {
    const QubitRegister reg(n);
    const auto dim = static_cast<Eigen::Index>(reg.dim());
    Matrix m = Matrix::Zero(dim, dim);
    for (std::size_t b = 0; b < reg.dim(); ++b) {
        m(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b)) = std::popcount(b);
    }
    return Operator::hermitian(std::move(m));
}

bool ladder_algebra_check(const Operator& a) {
    constexpr double kTol = 1e-14;
    const Matrix& m = a.matrix();
    const Matrix ad = m.adjoint();
    const Matrix id = Matrix::Identity(m.rows(), m.cols());
    return max_abs(m * m) <= kTol && max_abs(ad * ad) <= kTol &&
           max_abs(m * ad + ad * m - id) <= kTol;
}

bool ladder_algebra_check(std::size_t n, std::size_t site) {
    return ladder_algebra_check(lowering_operator(n, site));
}

Operator xy_chain_hamiltonian(std::span<const double> couplings) {
    const std::size_t n = couplings.size() + 1;
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "XY chain needs at least 2 qubits");
    const QubitRegister reg(n);
    const auto dim = static_cast<Eigen::Index>(reg.dim());
    Matrix h = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        const std::size_t pair = site_mask(n, j) | site_mask(n, j + 1);
        for (std::size_t b = 0; b < reg.dim(); ++b) {
            // Hopping only acts when exactly one of the two sites is excited.
            const std::size_t bits = b & pair;
            if (bits != 0 && bits != pair) {
                h(static_cast<Eigen::Index>(b ^ pair), static_cast<Eigen::Index>(b)) += couplings[j];
            }
        }
    }
    return Operator::hermitian(std::move(h));
}

Operator single_excitation_sector(const Operator& h_full, const SectorMap& map) {
    const std::size_t expected = std::size_t{1} << map.n;
    if (h_full.dim() != expected) {
        throw Error(ErrorCode::DimensionMismatch, "expected 2^" + std::to_string(map.n) + " = " +
                                                      std::to_string(expected) + ", got " +
                                                      std::to_string(h_full.dim()));
    }
    const auto n = static_cast<Eigen::Index>(map.indices.size());
    Matrix block(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        for (Eigen::Index c = 0; c < n; ++c) {
            block(r, c) = h_full(map.indices[static_cast<std::size_t>(r)],
                                 map.indices[static_cast<std::size_t>(c)]);
        }
    }
    return {std::move(block), h_full.tag() == Structure::unitary ? Structure::general : h_full.tag()};
}

StateVector single_excitation_state(std::size_t n, std::size_t site) {
    const QubitRegister reg(n);
    require_site(n, site);
    return StateVector::basis(reg.dim(), site_mask(n, site));
}

Matrix sign_gauge(const Matrix& m) {
    Matrix out = m;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if ((r + c) % 2 != 0) out(r, c) = -out(r, c);
        }
    }
    return out;
}

ClassicalityGap classicality_gap(unsigned n) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "N must be >= 1");
    if (n > 62) throw Error(ErrorCode::Overflow, "2^N overflows above N = 62");
    const std::uint64_t quantum = std::uint64_t{1} << n;
    const std::uint64_t classical = 2 * std::uint64_t{n};
    return {quantum, classical, quantum - classical};
}

} // namespace qwire::spinchain
