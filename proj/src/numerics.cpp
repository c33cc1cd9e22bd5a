#include "qwire/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qwire {

double max_abs(const Matrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const Matrix& m) {
    return max_abs(m - m.adjoint());
}

double unitarity_residual(const Matrix& m) {
    return max_abs(m.adjoint() * m - Matrix::Identity(m.rows(), m.cols()));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::DimensionMismatch,
                    std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
                        std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    return max_abs(a - b);
}

Matrix matrix_power(const Matrix& m, unsigned exponent) {
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1u;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Operator::Operator(Matrix entries, Structure tag) : m_(std::move(entries)), tag_(tag) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "operator must be a non-empty square matrix, got " +
                                                      std::to_string(m_.rows()) + "x" +
                                                      std::to_string(m_.cols()));
    }
    switch (tag_) {
    case Structure::hermitian: {
        const double residual = hermiticity_residual(m_);
        if (residual > tol::kHermitian * max_abs(m_)) {
            throw Error(ErrorCode::NonHermitianInput,
                        "max |M - M^dagger| = " + std::to_string(residual));
        }
        break;
    }
    case Structure::unitary: {
        const double residual = unitarity_residual(m_);
        if (residual > tol::kUnitary) {
            throw Error(ErrorCode::NotUnitary, "max |M^dagger M - I| = " + std::to_string(residual));
        }
        break;
    }
    case Structure::general: break;
    }
}

Operator Operator::identity(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return {Matrix::Identity(n, n), Structure::unitary};
}

StateVector::StateVector(Vector amplitudes) : a_(std::move(amplitudes)) {
    if (a_.size() == 0) throw Error(ErrorCode::DimensionMismatch, "empty state vector");
    const double norm2 = a_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol::kNorm) {
        throw Error(ErrorCode::NotNormalized, "sum |a|^2 = " + std::to_string(norm2));
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    if (index >= dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "basis index " + std::to_string(index) + " in dimension " + std::to_string(dim));
    }
    Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v));
}

StateVector StateVector::uniform(std::size_t dim) {
    const auto n = static_cast<Eigen::Index>(dim);
    return StateVector(Vector::Constant(n, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)));
}

namespace {

void canonicalize_phases(Matrix& vectors) {
    for (Eigen::Index k = 0; k < vectors.cols(); ++k) {
        auto col = vectors.col(k);
        const double peak = col.cwiseAbs().maxCoeff();
        Eigen::Index pivot = 0;
        // Near-equal magnitudes are common (plane waves); the first entry
        // within relative 1e-9 of the peak is the pivot.
        while (std::abs(col(pivot)) < peak * (1.0 - 1e-9)) ++pivot;
        const Complex phase = std::conj(col(pivot)) / std::abs(col(pivot));
        col *= phase;
        col(pivot) = Complex(col(pivot).real(), 0.0);
    }
}

} // namespace

EigenSystem hermitian_eig(const Operator& h) {
    if (h.tag() != Structure::hermitian) {
        const double residual = hermiticity_residual(h.matrix());
        if (residual > tol::kHermitian * max_abs(h.matrix())) {
            throw Error(ErrorCode::NonHermitianInput,
                        "max |H - H^dagger| = " + std::to_string(residual));
        }
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::InvalidArgument, "eigensolver failed to converge");
    }
    // Eigen returns eigenvalues in ascending order already.
    Matrix vectors = solver.eigenvectors();
    canonicalize_phases(vectors);
    return EigenSystem{solver.eigenvalues(), Operator::unitary(std::move(vectors))};
}

Operator evolve(const EigenSystem& eig, double t, double hbar) {
    const auto n = eig.values.size();
    if (t == 0.0) return Operator::identity(static_cast<std::size_t>(n));
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
    if (!(hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");

    Vector phases(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        phases(k) = std::polar(1.0, -eig.values(k) * t / hbar);
    }
    const Matrix& v = eig.vectors.matrix();
    return Operator::unitary(v * phases.asDiagonal() * v.adjoint());
}

Vector evolve(const EigenSystem& eig, double t, const Vector& psi, double hbar) {
    const auto n = eig.values.size();
    if (psi.size() != n) {
        throw Error(ErrorCode::DimensionMismatch,
                    "eigensystem dim " + std::to_string(n) + ", vector dim " + std::to_string(psi.size()));
    }
    if (t == 0.0) return psi;
    if (!std::isfinite(t)) throw Error(ErrorCode::InvalidArgument, "time must be finite");
    if (!(hbar > 0.0)) throw Error(ErrorCode::InvalidArgument, "hbar must be positive");

    const Matrix& v = eig.vectors.matrix();
    Vector coeffs = v.adjoint() * psi;
    for (Eigen::Index k = 0; k < n; ++k) coeffs(k) *= std::polar(1.0, -eig.values(k) * t / hbar);
    return v * coeffs;
}

Operator evolve(const Operator& h, double t, double hbar) {
    if (t == 0.0) {
        // Still reject non-Hermitian generators.
        if (h.tag() != Structure::hermitian &&
            hermiticity_residual(h.matrix()) > tol::kHermitian * max_abs(h.matrix())) {
            throw Error(ErrorCode::NonHermitianInput, "evolve requires a Hermitian generator");
        }
        return Operator::identity(h.dim());
    }
    return evolve(hermitian_eig(h), t, hbar);
}

Vector apply(const Operator& m, const Vector& v) {
    if (static_cast<std::size_t>(v.size()) != m.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "operator dim " + std::to_string(m.dim()) +
                                                      ", vector dim " + std::to_string(v.size()));
    }
    return m.matrix() * v;
}

StateVector apply(const Operator& m, const StateVector& v) {
    return StateVector(apply(m, v.amplitudes()));
}

} // namespace qwire
