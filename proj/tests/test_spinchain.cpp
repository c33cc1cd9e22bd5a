#include "qwire/spinchain.hpp"

#include <bit>
#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "qwire/lattice.hpp"
#include "qwire/pst.hpp"

using namespace qwire;
using namespace qwire::spinchain;

namespace {

std::vector<double> random_couplings(std::size_t count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::vector<double> a(count);
    for (double& x : a) x = u(rng);
    return a;
}

// n x n hopping matrix with +A_j off-diagonals, built without the qubit layer.
Matrix hopping_matrix(const std::vector<double>& a) {
    const auto n = static_cast<Eigen::Index>(a.size() + 1);
    Matrix h = Matrix::Zero(n, n);
    for (Eigen::Index j = 0; j + 1 < n; ++j) {
        h(j, j + 1) = a[static_cast<std::size_t>(j)];
        h(j + 1, j) = a[static_cast<std::size_t>(j)];
    }
    return h;
}

} // namespace

TEST(qubit_register, bounds) {
    EXPECT_EQ(QubitRegister(3).dim(), 8u);
    EXPECT_THROW(QubitRegister(0), Error);
    try {
        QubitRegister r(13);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RegisterTooLarge);
    }
}

TEST(sector_map, big_endian_indices) {
    const SectorMap map = SectorMap::single_excitation(4);
    EXPECT_EQ(map.indices, (std::vector<std::size_t>{8, 4, 2, 1}));
}

TEST(lowering_operator, single_qubit) {
    const Operator a = lowering_operator(1, 0);
    Vector one(2);
    one << 0, 1;
    Vector zero(2);
    zero << 1, 0;
    EXPECT_EQ((qwire::apply(a, one) - zero).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_EQ(qwire::apply(a, zero).cwiseAbs().maxCoeff(), 0.0);
    const Matrix ad = a.matrix().adjoint();
    EXPECT_EQ(max_abs_diff(a.matrix() * ad + ad * a.matrix(), Matrix::Identity(2, 2)), 0.0);
}

TEST(lowering_operator, squares_vanish) {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (std::size_t site = 0; site < n; ++site) {
            const Matrix a = lowering_operator(n, site).matrix();
            EXPECT_EQ(max_abs(a * a), 0.0);
        }
    }
}

TEST(lowering_operator, acts_on_named_site) {
    // n = 3, site 1: |1 1 0> (index 6) -> |1 0 0> (index 4).
    const Matrix a = lowering_operator(3, 1).matrix();
    EXPECT_EQ(a(4, 6), Complex(1.0));
    EXPECT_EQ(a.cwiseAbs().sum(), 4.0);
    EXPECT_THROW(lowering_operator(3, 3), Error);
    EXPECT_THROW(lowering_operator(13, 0), Error);
}

TEST(lowering_operator, tensor_product_oracle) {
    Matrix a1(2, 2);
    a1 << 0, 1, 0, 0;
    const Matrix id = Matrix::Identity(2, 2);
    // site 1 of 3 = I (x) a (x) I, built with explicit Kronecker products.
    auto kron = [](const Matrix& x, const Matrix& y) {
        Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
        for (Eigen::Index i = 0; i < x.rows(); ++i) {
            for (Eigen::Index j = 0; j < x.cols(); ++j) {
                out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
            }
        }
        return out;
    };
    EXPECT_EQ(max_abs_diff(lowering_operator(3, 1).matrix(), kron(kron(id, a1), id)), 0.0);
}

TEST(ladder_algebra_check, holds_and_detects) {
    EXPECT_TRUE(ladder_algebra_check(1, 0));
    EXPECT_TRUE(ladder_algebra_check(3, 1));
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::size_t site = 0; site < n; ++site) EXPECT_TRUE(ladder_algebra_check(n, site));
    }
    Matrix perturbed = lowering_operator(2, 0).matrix();
    perturbed(0, 2) += 1e-6;
    EXPECT_FALSE(ladder_algebra_check(Operator::general(perturbed)));
}

TEST(xy_chain, two_qubits) {
    const Matrix h = xy_chain_hamiltonian(std::vector<double>{0.7}).matrix();
    Vector ket10 = Vector::Zero(4);
    ket10(2) = 1.0;
    Vector expected = Vector::Zero(4);
    expected(1) = 0.7;
    EXPECT_EQ((h * ket10 - expected).cwiseAbs().maxCoeff(), 0.0);
    // Explicit 4x4 form: only the |01> <-> |10> block is nonzero.
    Matrix explicit_h = Matrix::Zero(4, 4);
    explicit_h(1, 2) = 0.7;
    explicit_h(2, 1) = 0.7;
    EXPECT_EQ(max_abs_diff(h, explicit_h), 0.0);
}

TEST(xy_chain, vacuum_annihilated) {
    const Matrix h = xy_chain_hamiltonian(std::vector<double>{1.0, 2.0, 3.0}).matrix();
    EXPECT_EQ(h.col(0).cwiseAbs().maxCoeff(), 0.0);
}

TEST(xy_chain, excitation_sectors_decouple) {
    std::mt19937_64 rng(4);
    for (std::size_t n = 2; n <= 7; ++n) {
        const Operator h = xy_chain_hamiltonian(random_couplings(n - 1, rng));
        const Matrix& m = h.matrix();
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            for (Eigen::Index c = 0; c < m.cols(); ++c) {
                if (std::popcount(static_cast<unsigned>(r)) != std::popcount(static_cast<unsigned>(c))) {
                    EXPECT_EQ(m(r, c), Complex(0.0));
                }
            }
        }
        const Matrix number = number_operator(n).matrix();
        EXPECT_LE(max_abs(m * number - number * m), 1e-12);
    }
}

TEST(xy_chain, equals_ladder_operator_sum) {
    const std::vector<double> a{0.5, -1.5, 2.0};
    Matrix expected = Matrix::Zero(16, 16);
    for (std::size_t j = 0; j < 3; ++j) {
        const Matrix lj = lowering_operator(4, j).matrix();
        const Matrix lk = lowering_operator(4, j + 1).matrix();
        expected += a[j] * (lj.adjoint() * lk + lk.adjoint() * lj);
    }
    EXPECT_EQ(max_abs_diff(xy_chain_hamiltonian(a).matrix(), expected), 0.0);
    EXPECT_THROW(xy_chain_hamiltonian(std::vector<double>{}), Error);
}

TEST(single_excitation_sector, matches_lattice_models) {
    for (std::size_t n = 2; n <= 6; ++n) {
        const SectorMap map = SectorMap::single_excitation(n);
        const Operator uniform_block = single_excitation_sector(xy_chain_hamiltonian(std::vector<double>(n - 1, 1.3)), map);
        const Matrix lattice_h =
            lattice::build_hamiltonian(lattice::ChainSpec::uniform(lattice::Topology::line, n, 0.0, 1.3)).matrix();
        EXPECT_LE(max_abs(uniform_block.matrix().cwiseAbs() - lattice_h.cwiseAbs()), 1e-12);
        EXPECT_LE(max_abs_diff(uniform_block.matrix(), sign_gauge(lattice_h)), 1e-12);

        const Operator pst_block = single_excitation_sector(xy_chain_hamiltonian(pst::pst_couplings(n, 0.8)), map);
        EXPECT_LE(max_abs_diff(pst_block.matrix(), pst::pst_hamiltonian(n, 0.8).matrix()), 1e-12);
    }
}

TEST(single_excitation_sector, identity_and_mismatch) {
    const SectorMap map = SectorMap::single_excitation(3);
    EXPECT_EQ(max_abs_diff(single_excitation_sector(Operator::identity(8), map).matrix(), Matrix::Identity(3, 3)), 0.0);
    try {
        single_excitation_sector(Operator::identity(4), map);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(single_excitation_sector, random_couplings) {
    std::mt19937_64 rng(21);
    for (std::size_t n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const std::vector<double> a = random_couplings(n - 1, rng);
            const Operator block = single_excitation_sector(xy_chain_hamiltonian(a), SectorMap::single_excitation(n));
            EXPECT_LE(max_abs_diff(block.matrix(), hopping_matrix(a)), 1e-12);
        }
    }
}

TEST(single_excitation_sector, dynamics_agree) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> times(0.0, 10.0);
    for (std::size_t n = 2; n <= 7; ++n) {
        const std::vector<double> a = random_couplings(n - 1, rng);
        const EigenSystem full = hermitian_eig(xy_chain_hamiltonian(a));
        const EigenSystem reduced = hermitian_eig(Operator::hermitian(hopping_matrix(a)));
        const SectorMap map = SectorMap::single_excitation(n);
        const Vector start_full = single_excitation_state(n, 0).amplitudes();
        for (int k = 0; k < 5; ++k) {
            const double t = times(rng);
            const Vector psi_full = evolve(full, t, start_full);
            const Vector psi_reduced = evolve(reduced, t).matrix().col(0);
            for (std::size_t site = 0; site < n; ++site) {
                EXPECT_LE(std::abs(psi_full(static_cast<Eigen::Index>(map.indices[site])) -
                                   psi_reduced(static_cast<Eigen::Index>(site))),
                          1e-9);
            }
        }
    }
}

TEST(sign_gauge, preserves_transfer_probabilities) {
    const Operator h = lattice::build_hamiltonian({5, lattice::Topology::line, 0.0, {0.3, 1.0, 2.0, 0.5}});
    const Operator g = Operator::hermitian(sign_gauge(h.matrix()));
    for (double t : {0.4, 1.9, 5.5}) {
        EXPECT_NEAR(pst::transfer_fidelity(h, t, 0, 4), pst::transfer_fidelity(g, t, 0, 4), 1e-12);
    }
}

TEST(classicality_gap, values) {
    const ClassicalityGap one = classicality_gap(1);
    EXPECT_EQ(one.quantum, 2u);
    EXPECT_EQ(one.classical, 2u);
    EXPECT_EQ(one.gap, 0u);
    const ClassicalityGap byte = classicality_gap(8);
    EXPECT_EQ(byte.quantum, 256u);
    EXPECT_EQ(byte.classical, 16u);
    EXPECT_EQ(byte.gap, 240u);
    const ClassicalityGap ten = classicality_gap(10);
    EXPECT_EQ(ten.quantum, 1024u);
    EXPECT_EQ(ten.gap, 1004u);
    EXPECT_EQ(classicality_gap(62).quantum, std::uint64_t{1} << 62);
    try {
        classicality_gap(63);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Overflow);
    }
}
