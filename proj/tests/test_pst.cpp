#include "qwire/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gtest/gtest.h"

#include "oracles.hpp"
#include "qwire/lattice.hpp"

using namespace qwire;
using namespace qwire::pst;

namespace {

constexpr double kPi = std::numbers::pi;

Operator uniform_line(std::size_t d, double a) {
    return lattice::build_hamiltonian(lattice::ChainSpec::uniform(lattice::Topology::line, d, 0.0, a));
}

} // namespace

TEST(pst_couplings, values) {
    EXPECT_EQ(pst_couplings(2, 1.0), std::vector<double>{1.0});
    const std::vector<double> four = pst_couplings(4, 1.0);
    ASSERT_EQ(four.size(), 3u);
    EXPECT_DOUBLE_EQ(four[0], std::sqrt(3.0));
    EXPECT_DOUBLE_EQ(four[1], 2.0);
    EXPECT_DOUBLE_EQ(four[2], std::sqrt(3.0));
    EXPECT_THROW(pst_couplings(1, 1.0), Error);
}

TEST(pst_couplings, palindromic) {
    for (std::size_t d = 2; d <= 40; ++d) {
        const std::vector<double> a = pst_couplings(d, 0.7);
        EXPECT_TRUE(std::equal(a.begin(), a.end(), a.rbegin())) << d;
    }
}

TEST(pst_hamiltonian, small_cases) {
    Matrix two(2, 2);
    two << 0, 1, 1, 0;
    EXPECT_EQ(max_abs_diff(pst_hamiltonian(2, 1.0).matrix(), two), 0.0);

    const Matrix three = pst_hamiltonian(3, 1.0).matrix();
    EXPECT_DOUBLE_EQ(three(0, 1).real(), std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(three(1, 2).real(), std::sqrt(2.0));
    EXPECT_EQ(three(0, 2), Complex(0.0));
    EXPECT_EQ(three.diagonal().cwiseAbs().maxCoeff(), 0.0);

    // First rows follow sqrt(d-1), sqrt(2(d-2)).
    const Matrix seven = pst_hamiltonian(7, 2.0, 0.5).matrix();
    EXPECT_DOUBLE_EQ(seven(0, 1).real(), std::sqrt(6.0));
    EXPECT_DOUBLE_EQ(seven(1, 2).real(), std::sqrt(10.0));
}

TEST(pst_hamiltonian, proportional_to_jx) {
    for (std::size_t d = 2; d <= 12; ++d) {
        const double vartheta = 0.9;
        const Matrix expected = 2.0 * vartheta * spin_jx(d).matrix();
        EXPECT_LE(max_abs_diff(pst_hamiltonian(d, vartheta).matrix(), expected), 1e-12) << d;
    }
}

TEST(pst_hamiltonian, equidistant_spectrum) {
    for (std::size_t d = 2; d <= 32; ++d) {
        const double vartheta = 1.3;
        const RealVector e = hermitian_eig(pst_hamiltonian(d, vartheta)).values;
        for (std::size_t m = 0; m < d; ++m) {
            const double expected = vartheta * (2.0 * double(m) - double(d) + 1.0);
            EXPECT_NEAR(e(static_cast<Eigen::Index>(m)), expected, 1e-10 * vartheta * double(d)) << d;
        }
    }
}

TEST(pst_hamiltonian, rejects_bad_input) {
    EXPECT_THROW(pst_hamiltonian(1, 1.0), Error);
    EXPECT_THROW(pst_hamiltonian(3, 0.0), Error);
}

TEST(evolution, examples) {
    EXPECT_LE(max_abs_diff(evolution(5, 1.0, 0.0).matrix(), Matrix::Identity(5, 5)), 1e-14);
    Matrix x(2, 2);
    x << 0, 1, 1, 0;
    EXPECT_LE(max_abs_diff(evolution(2, 1.0, kPi / 2).matrix(), Complex(0, -1) * x), 1e-12);
    for (std::size_t d : {3u, 6u, 9u}) {
        const Operator r = evolution(d, 1.0, kPi / 2);
        EXPECT_NEAR(std::abs(r(d - 1, 0)), 1.0, 1e-10);
        EXPECT_LE(max_abs_diff(r.matrix(), oracle::expm_series(pst_hamiltonian(d, 1.0).matrix(), kPi / 2)), 1e-10);
    }
}

TEST(transfer_fidelity, trivial_times) {
    const Operator h = pst_hamiltonian(4, 1.0);
    EXPECT_EQ(transfer_fidelity(h, 0.0, 2, 2), 1.0);
    EXPECT_EQ(transfer_fidelity(h, 0.0, 0, 3), 0.0);
    try {
        transfer_fidelity(h, 1.0, 0, 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::IndexOutOfRange);
    }
}

TEST(transfer_fidelity, two_site_is_sine_squared) {
    const Operator h = pst_hamiltonian(2, 1.7);
    for (double t : {0.1, 0.4, 1.0, 2.5}) {
        EXPECT_NEAR(transfer_fidelity(h, t, 0, 1), std::pow(std::sin(1.7 * t), 2), 1e-12);
    }
}

TEST(transfer_fidelity, perfect_at_t_star) {
    EXPECT_GE(transfer_fidelity(pst_hamiltonian(5, 1.0), kPi / 2, 0, 4), 1.0 - 1e-10);
    for (std::size_t d = 2; d <= 32; ++d) {
        const double vartheta = 0.6;
        EXPECT_GE(transfer_fidelity(pst_hamiltonian(d, vartheta), kPi / (2 * vartheta), 0, d - 1), 1.0 - 1e-10) << d;
    }
}

TEST(transfer_fidelity, uniform_matches_closed_form) {
    const Operator h = uniform_line(6, 0.8);
    for (double t : {0.5, 2.0, 7.3}) {
        for (std::size_t target : {0u, 3u, 5u}) {
            EXPECT_NEAR(transfer_fidelity(h, t, 0, target),
                        std::norm(oracle::uniform_line_amplitude(6, 0.8, t, 0, target)), 1e-12);
        }
    }
}

TEST(transfer_time, t_star_is_the_first_maximum) {
    // Freeze t_star = pi/(2 vartheta) only after locating the first
    // maximum of the end-to-end fidelity on a dense grid.
    for (std::size_t d = 2; d <= 8; ++d) {
        const double vartheta = 1.0;
        const Operator h = pst_hamiltonian(d, vartheta);
        const auto [t_best, f_best] = oracle::grid_max(
            [&](double t) { return transfer_fidelity(h, t, 0, d - 1); }, 0.0, 0.75 * kPi / vartheta, 30001);
        EXPECT_NEAR(t_best, kPi / (2 * vartheta), 1e-4) << d;
        EXPECT_GE(f_best, 1.0 - 1e-8);
    }
}

TEST(transfer_time, reports) {
    const TransferReport two = transfer_time(2, 1.0);
    EXPECT_DOUBLE_EQ(two.t_star, kPi / 2);
    EXPECT_NEAR(two.peak_fidelity, 1.0, 1e-12);
    const TransferReport eight = transfer_time(8, 2.0);
    EXPECT_DOUBLE_EQ(eight.t_star, kPi / 4);
    EXPECT_GE(eight.peak_fidelity, 1.0 - 1e-10);
    for (double vartheta : {0.3, 1.0, 5.0}) {
        const TransferReport r = transfer_time(5, vartheta);
        EXPECT_DOUBLE_EQ(r.period, kPi / vartheta);
        EXPECT_NEAR(r.period, 2 * r.t_star, 1e-15 * r.period);
    }
}

TEST(fidelity_curve, zero_hamiltonian_is_flat) {
    const Operator zero = Operator::hermitian(Matrix::Zero(4, 4));
    const std::vector<double> grid = linspace(0.0, 3.0, 10);
    for (double f : fidelity_curve(zero, grid, 1, 1).fidelities) EXPECT_NEAR(f, 1.0, 1e-15);
    for (double f : fidelity_curve(zero, grid, 1, 2).fidelities) EXPECT_NEAR(f, 0.0, 1e-15);
}

TEST(fidelity_curve, pst_period) {
    const std::vector<double> grid = linspace(0.0, kPi, 201);
    const FidelityCurve curve = fidelity_curve(pst_hamiltonian(4, 1.0), grid, 0, 3);
    ASSERT_EQ(curve.fidelities.size(), 201u);
    EXPECT_GE(curve.fidelities[100], 1.0 - 1e-10);
    EXPECT_LE(curve.fidelities.back(), 1e-10);
    for (double f : curve.fidelities) {
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0 + 1e-12);
    }
}

TEST(fidelity_curve, matches_pointwise) {
    const Operator h = uniform_line(5, 1.0);
    const std::vector<double> grid = linspace(0.0, 6.0, 37);
    const FidelityCurve curve = fidelity_curve(h, grid, 1, 4);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(curve.fidelities[i], transfer_fidelity(h, grid[i], 1, 4), 1e-14);
    }
}

TEST(fidelity_curve, uniform_chain_never_perfect) {
    const std::vector<double> grid = linspace(0.0, 20.0, 2000);
    const FidelityCurve curve = fidelity_curve(uniform_line(5, 1.0), grid, 0, 4);
    const double peak = *std::max_element(curve.fidelities.begin(), curve.fidelities.end());
    EXPECT_LT(peak, 1.0 - 1e-3);
    for (std::size_t d = 4; d <= 8; ++d) {
        const FidelityCurve c = fidelity_curve(uniform_line(d, 1.0), grid, 0, d - 1);
        EXPECT_LT(*std::max_element(c.fidelities.begin(), c.fidelities.end()), 1.0 - 1e-3) << d;
    }
}

TEST(fidelity_curve, rejects_unsorted_grid) {
    const std::vector<double> grid{0.0, 1.0, 1.0};
    EXPECT_THROW(fidelity_curve(pst_hamiltonian(3, 1.0), grid, 0, 2), Error);
}

TEST(pst_properties, revival_after_one_period) {
    for (std::size_t d = 2; d <= 16; ++d) {
        const double vartheta = 1.1;
        EXPECT_GE(transfer_fidelity(pst_hamiltonian(d, vartheta), kPi / vartheta, 0, 0), 1.0 - 1e-9) << d;
    }
}

TEST(pst_properties, scaling_covariance) {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.1, 3.0);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t d = 2 + static_cast<std::size_t>(trial);
        const double vartheta = u(rng);
        const double c = u(rng);
        const double t = u(rng);
        EXPECT_NEAR(transfer_fidelity(pst_hamiltonian(d, c * vartheta), t / c, 0, d / 2),
                    transfer_fidelity(pst_hamiltonian(d, vartheta), t, 0, d / 2), 1e-10);
    }
}

TEST(pst_properties, mirror_covariance) {
    const Operator h = pst_hamiltonian(7, 1.0);
    for (double t : linspace(0.0, 4.0, 41)) {
        EXPECT_NEAR(transfer_fidelity(h, t, 0, 6), transfer_fidelity(h, t, 6, 0), 1e-12);
    }
}

TEST(mirror_check, examples) {
    for (std::size_t d = 2; d <= 20; ++d) EXPECT_TRUE(mirror_check(pst_hamiltonian(d, 1.0)));
    EXPECT_TRUE(mirror_check(uniform_line(6, 1.0)));
    EXPECT_FALSE(mirror_check(lattice::build_hamiltonian({3, lattice::Topology::line, 0.0, {1.0, 2.0}})));
}

TEST(linspace, endpoints) {
    const std::vector<double> g = linspace(0.0, 20.0, 2000);
    EXPECT_EQ(g.front(), 0.0);
    EXPECT_EQ(g.back(), 20.0);
    EXPECT_THROW(linspace(0.0, 1.0, 1), Error);
}
