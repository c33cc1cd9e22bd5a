#include "qwire/pst.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qwire::pst {

namespace {

void require_dim(std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
}

void require_site(std::size_t site, std::size_t dim) {
    if (site >= dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "site " + std::to_string(site) + " in a chain of " + std::to_string(dim));
    }
}

Complex amplitude(const EigenSystem& eig, double t, std::size_t source, std::size_t target,
                  double hbar) {
    const Matrix& v = eig.vectors.matrix();
    const auto s = static_cast<Eigen::Index>(source);
    const auto r = static_cast<Eigen::Index>(target);
    Complex sum = 0.0;
    for (Eigen::Index k = 0; k < eig.values.size(); ++k) {
        sum += v(r, k) * std::conj(v(s, k)) * std::polar(1.0, -eig.values(k) * t / hbar);
    }
    return sum;
}

} // namespace

std::vector<double> pst_couplings(std::size_t d, double amplitude) {
    require_dim(d);
    std::vector<double> a(d - 1);
    for (std::size_t j = 1; j < d; ++j) {
        a[j - 1] = amplitude * std::sqrt(static_cast<double>(j * (d - j)));
    }
    return a;
}

Operator pst_hamiltonian(std::size_t d, double vartheta, double hbar) {
    require_dim(d);
    if (!(vartheta > 0.0)) throw Error(ErrorCode::InvalidArgument, "vartheta must be positive");
    const std::vector<double> a = pst_couplings(d, vartheta * hbar);
    const auto n = static_cast<Eigen::Index>(d);
    Matrix h = Matrix::Zero(n, n);
    for (Eigen::Index l = 0; l + 1 < n; ++l) {
        h(l, l + 1) = a[static_cast<std::size_t>(l)];
        h(l + 1, l) = a[static_cast<std::size_t>(l)];
    }
    return Operator::hermitian(std::move(h));
}

Operator spin_jx(std::size_t d, double hbar) {
    require_dim(d);
    const double s = 0.5 * static_cast<double>(d - 1);
    const auto n = static_cast<Eigen::Index>(d);
    Matrix jx = Matrix::Zero(n, n);
    // <m-1| J_x |m> = (hbar/2) sqrt(s(s+1) - m(m-1)) with m = s - row.
    for (Eigen::Index row = 0; row + 1 < n; ++row) {
        const double m = s - static_cast<double>(row);
        const double element = 0.5 * hbar * std::sqrt(s * (s + 1.0) - m * (m - 1.0));
        jx(row, row + 1) = element;
        jx(row + 1, row) = element;
    }
    return Operator::hermitian(std::move(jx));
}

Operator evolution(std::size_t d, double vartheta, double t, double hbar) {
    return evolve(pst_hamiltonian(d, vartheta, hbar), t, hbar);
}

double transfer_fidelity(const Operator& h, double t, std::size_t source, std::size_t target,
                         double hbar) {
    require_site(source, h.dim());
    require_site(target, h.dim());
    if (t == 0.0) return source == target ? 1.0 : 0.0;
    return std::min(1.0, std::norm(amplitude(hermitian_eig(h), t, source, target, hbar)));
}

FidelityCurve fidelity_curve(const Operator& h, std::span<const double> t_grid, std::size_t source,
                             std::size_t target, double hbar) {
    require_site(source, h.dim());
    require_site(target, h.dim());
    for (std::size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw Error(ErrorCode::InvalidArgument, "time grid must be strictly increasing");
        }
    }
    const EigenSystem eig = hermitian_eig(h);
    FidelityCurve curve{{t_grid.begin(), t_grid.end()}, {}, source, target};
    curve.fidelities.reserve(t_grid.size());
    for (double t : t_grid) {
        const double f = t == 0.0 ? (source == target ? 1.0 : 0.0)
                                  : std::norm(amplitude(eig, t, source, target, hbar));
        curve.fidelities.push_back(std::min(1.0, f));
    }
    return curve;
}

std::vector<double> linspace(double t0, double t1, std::size_t n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "linspace needs at least 2 points");
    std::vector<double> grid(n);
    const double step = (t1 - t0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) grid[i] = t0 + step * static_cast<double>(i);
    grid.back() = t1;
    return grid;
}

TransferReport transfer_time(std::size_t d, double vartheta, double hbar) {
    const Operator h = pst_hamiltonian(d, vartheta, hbar);
    const double t_star = std::numbers::pi / (2.0 * vartheta);
    return TransferReport{d, vartheta, t_star, transfer_fidelity(h, t_star, 0, d - 1, hbar),
                          std::numbers::pi / vartheta};
}

bool mirror_check(const Operator& h) {
    // (J H J)_{ij} = H_{n-1-i, n-1-j}
    const Matrix& m = h.matrix();
    return max_abs(m.reverse() - m) <= tol::kExact;
}

} // namespace qwire::pst
