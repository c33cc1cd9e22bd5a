#pragma once

// Dense complex linear algebra shared by every model in the library:
// tagged square operators, normalized state vectors, Hermitian
// eigendecomposition and unitary time evolution exp(-iHt/hbar).

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qwire/error.hpp"

namespace qwire {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Exact algebraic identities at small dimension.
inline constexpr double kExact = 1e-12;
/// Spectral reconstructions, scaled by max(1, |M|_max).
inline constexpr double kSpectral = 1e-10;
/// Hermiticity check, scaled by the largest entry magnitude.
inline constexpr double kHermitian = 1e-12;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kNorm = 1e-10;
} // namespace tol

enum class Structure { general, hermitian, unitary };

/// Largest entry magnitude, max_ij |M_ij|.
double max_abs(const Matrix& m);

/// max_ij |M_ij - conj(M_ji)|.
double hermiticity_residual(const Matrix& m);

/// max_ij |(M^dagger M - I)_ij|.
double unitarity_residual(const Matrix& m);

/// A dim x dim complex matrix carrying a structural tag. The tag is checked
/// on construction, so a hermitian- or unitary-tagged Operator always
/// satisfies its invariant.
class Operator {
  public:
    /// Throws NonHermitianInput / NotUnitary when the tag does not hold,
    /// DimensionMismatch when the matrix is not square or empty.
    Operator(Matrix entries, Structure tag);

    static Operator general(Matrix entries) { return {std::move(entries), Structure::general}; }
    static Operator hermitian(Matrix entries) { return {std::move(entries), Structure::hermitian}; }
    static Operator unitary(Matrix entries) { return {std::move(entries), Structure::unitary}; }
    static Operator identity(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    Structure tag() const noexcept { return tag_; }
    const Matrix& matrix() const noexcept { return m_; }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

  private:
    Matrix m_;
    Structure tag_;
};

/// Unit-norm amplitude vector.
class StateVector {
  public:
    /// Throws NotNormalized unless sum |a_i|^2 = 1 within 1e-10.
    explicit StateVector(Vector amplitudes);

    /// |index> in a dim-dimensional space.
    static StateVector basis(std::size_t dim, std::size_t index);
    /// Equal-weight superposition over all dim entries.
    static StateVector uniform(std::size_t dim);

    std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.size()); }
    const Vector& amplitudes() const noexcept { return a_; }
    Complex operator[](std::size_t i) const { return a_(static_cast<Eigen::Index>(i)); }

  private:
    Vector a_;
};

/// Ascending eigenvalues; column k of `vectors` is the eigenvector for values[k].
struct EigenSystem {
    RealVector values;
    Operator vectors;
};

/// Eigendecomposition of a Hermitian operator. Each eigenvector is rescaled
/// so its largest-magnitude entry (first one on ties) is real and positive.
/// Throws NonHermitianInput if H is not Hermitian.
EigenSystem hermitian_eig(const Operator& h);

/// exp(-i H t / hbar), computed through the spectral decomposition of H.
/// t == 0 returns the identity exactly.
Operator evolve(const Operator& h, double t, double hbar = 1.0);
Operator evolve(const EigenSystem& eig, double t, double hbar = 1.0);
/// exp(-i H t / hbar) psi without forming the propagator; O(d^2) per call.
Vector evolve(const EigenSystem& eig, double t, const Vector& psi, double hbar = 1.0);

/// Plain matrix-vector product; no normalization is assumed or enforced.
Vector apply(const Operator& m, const Vector& v);
/// Product on a normalized state; throws NotNormalized if the result is not
/// unit norm (only possible for non-unitary m).
StateVector apply(const Operator& m, const StateVector& v);

/// max_ij |A_ij - B_ij|; throws DimensionMismatch on shape mismatch.
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Integer matrix power by repeated squaring.
Matrix matrix_power(const Matrix& m, unsigned exponent);

} // namespace qwire
