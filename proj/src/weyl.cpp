#include "qwire/weyl.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwire::weyl {

namespace {

void require_dim(std::size_t d) {
    if (d < 2) {
        throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    }
}

// exp(2 pi i k / d) with k reduced mod d first, so large l*j products stay exact.
Complex root_of_unity(std::size_t k, std::size_t d) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k % d) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

} // namespace

Operator shift_matrix(std::size_t d) {
    require_dim(d);
    const auto n = static_cast<Eigen::Index>(d);
    Matrix m = Matrix::Zero(n, n);
    for (Eigen::Index l = 0; l < n; ++l) m((l + 1) % n, l) = 1.0;
    return Operator::unitary(std::move(m));
}

Operator clock_matrix(std::size_t d) {
    require_dim(d);
    const auto n = static_cast<Eigen::Index>(d);
    Matrix m = Matrix::Zero(n, n);
    for (std::size_t l = 0; l < d; ++l) {
        m(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(l)) = root_of_unity(l, d);
    }
    return Operator::unitary(std::move(m));
}

Complex commutation_phase(const Operator& u, const Operator& v) {
    if (u.dim() != v.dim()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(u.dim()) + " vs " + std::to_string(v.dim()));
    }
    const Matrix uv = u.matrix() * v.matrix();
    const Matrix vu = v.matrix() * u.matrix();

    Eigen::Index row = 0;
    Eigen::Index col = 0;
    vu.cwiseAbs().maxCoeff(&row, &col);
    if (std::abs(vu(row, col)) == 0.0) {
        throw Error(ErrorCode::NotProportional, "V U is the zero matrix");
    }
    const Complex lambda = uv(row, col) / vu(row, col);
    const double residual = max_abs(uv - lambda * vu);
    if (residual > tol::kExact) {
        throw Error(ErrorCode::NotProportional, "max |UV - lambda VU| = " + std::to_string(residual));
    }
    return lambda;
}

bool is_primitive_root(Complex lambda, std::size_t d, double tol) {
    Complex power = 1.0;
    for (std::size_t k = 1; k < d; ++k) {
        power *= lambda;
        if (std::abs(power - 1.0) <= tol) return false;
    }
    power *= lambda;
    return std::abs(power - 1.0) <= tol;
}

WeylPair weyl_pair(std::size_t d) {
    Operator u = shift_matrix(d);
    Operator v = clock_matrix(d);
    const Complex lambda = commutation_phase(u, v);
    return WeylPair{d, std::move(u), std::move(v), lambda};
}

Operator momentum_basis(std::size_t d) {
    require_dim(d);
    const auto n = static_cast<Eigen::Index>(d);
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    Matrix f(n, n);
    for (std::size_t l = 0; l < d; ++l) {
        for (std::size_t j = 0; j < d; ++j) {
            // exp(-2 pi i l j / d) == exp(2 pi i (d - lj mod d) / d)
            f(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(j)) =
                scale * root_of_unity(d - (l * j) % d, d);
        }
    }
    return Operator::unitary(std::move(f));
}

Operator equidistant_hamiltonian(std::size_t d, double theta, double hbar) {
    require_dim(d);
    if (theta == 0.0) throw Error(ErrorCode::ZeroTheta, "theta must be nonzero");
    const Matrix f = momentum_basis(d).matrix();
    const auto n = static_cast<Eigen::Index>(d);
    Eigen::VectorXd energies(n);
    for (std::size_t j = 0; j < d; ++j) {
        energies(static_cast<Eigen::Index>(j)) =
            hbar * theta * static_cast<double>((d - j) % d);
    }
    Matrix h = f * energies.cast<Complex>().asDiagonal() * f.adjoint();
    h = 0.5 * (h + h.adjoint()).eval();
    return Operator::hermitian(std::move(h));
}

double time_step(std::size_t d, double theta) {
    require_dim(d);
    if (theta == 0.0) throw Error(ErrorCode::ZeroTheta, "theta must be nonzero");
    if (theta < 0.0) throw Error(ErrorCode::InvalidArgument, "theta must be positive");
    return 2.0 * std::numbers::pi / (theta * static_cast<double>(d));
}

ShiftIdentity verify_shift_identity(std::size_t d, double theta, double hbar) {
    const Operator h = equidistant_hamiltonian(d, theta, hbar);
    const Operator r = evolve(h, time_step(d, theta), hbar);
    const Matrix target = shift_matrix(d).matrix();

    Eigen::Index row = 0;
    Eigen::Index col = 0;
    (r.matrix().cwiseAbs().cwiseProduct(target.cwiseAbs())).maxCoeff(&row, &col);
    Complex phase = r.matrix()(row, col) / target(row, col);
    phase /= std::abs(phase);

    const double residual = max_abs(r.matrix() - phase * target);
    return ShiftIdentity{residual <= tol::kSpectral, phase, residual};
}

} // namespace qwire::weyl
