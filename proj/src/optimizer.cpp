#include "qwire/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "qwire/lattice.hpp"
#include "qwire/pst.hpp"

namespace qwire::optimizer {

void OptimizeConfig::validate() const {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    if (!(t_target > 0.0) || !std::isfinite(t_target)) {
        throw Error(ErrorCode::InvalidArgument, "t_target must be positive and finite");
    }
    if (max_iters < 1) throw Error(ErrorCode::InvalidArgument, "max_iters must be >= 1");
    if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tol must be positive");
}

double objective(std::span<const double> couplings, double t, std::size_t d) {
    if (d < 2) throw Error(ErrorCode::DimensionTooSmall, "d must be >= 2, got " + std::to_string(d));
    lattice::ChainSpec spec{d, lattice::Topology::line, 0.0, {couplings.begin(), couplings.end()}};
    return pst::transfer_fidelity(lattice::build_hamiltonian(spec), t, 0, d - 1);
}

namespace {

using Point = std::vector<double>;

struct Vertex {
    Point x;
    double value; // negated fidelity
};

// Unit-interval doubles built from raw engine bits so the sequence does not
// depend on the standard library's distribution implementation.
class Jitter {
  public:
    explicit Jitter(std::uint64_t seed) : engine_(seed) {}
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  private:
    std::mt19937_64 engine_;
};

class NelderMead {
  public:
    NelderMead(std::size_t d, double t) : d_(d), t_(t) {}

    double evaluate(Point& x) const {
        for (double& v : x) v = std::clamp(v, -kCouplingBound, kCouplingBound);
        return -objective(x, t_, d_);
    }

    void reset(const Point& center, double center_value, const Point& steps) {
        simplex_.clear();
        simplex_.push_back({center, center_value});
        for (std::size_t i = 0; i < center.size(); ++i) {
            Point x = center;
            x[i] += steps[i];
            const double v = evaluate(x);
            simplex_.push_back({std::move(x), v});
        }
        order();
    }

    void step() {
        constexpr double kReflect = 1.0;
        constexpr double kExpand = 2.0;
        constexpr double kContract = 0.5;
        constexpr double kShrink = 0.5;

        const std::size_t m = simplex_.size() - 1;
        Point centroid(m, 0.0);
        for (std::size_t k = 0; k < m; ++k) {
            for (std::size_t i = 0; i < m; ++i) centroid[i] += simplex_[k].x[i] / static_cast<double>(m);
        }
        auto toward = [&](const Point& from, double coeff) {
            Point p(m);
            for (std::size_t i = 0; i < m; ++i) p[i] = centroid[i] + coeff * (from[i] - centroid[i]);
            return p;
        };

        Vertex& worst = simplex_.back();
        Point reflected = toward(worst.x, -kReflect);
        const double fr = evaluate(reflected);

        if (fr < simplex_.front().value) {
            Point expanded = toward(reflected, kExpand);
            const double fe = evaluate(expanded);
            worst = fe < fr ? Vertex{std::move(expanded), fe} : Vertex{std::move(reflected), fr};
        } else if (fr < simplex_[m - 1].value) {
            worst = {std::move(reflected), fr};
        } else {
            const bool outside = fr < worst.value;
            Point contracted = toward(outside ? reflected : worst.x, kContract);
            const double fc = evaluate(contracted);
            if (outside ? fc <= fr : fc < worst.value) {
                worst = {std::move(contracted), fc};
            } else {
                const Point best = simplex_.front().x;
                for (std::size_t k = 1; k <= m; ++k) {
                    for (std::size_t i = 0; i < m; ++i) {
                        simplex_[k].x[i] = best[i] + kShrink * (simplex_[k].x[i] - best[i]);
                    }
                    simplex_[k].value = evaluate(simplex_[k].x);
                }
            }
        }
        order();
    }

    const Vertex& best() const { return simplex_.front(); }

    double diameter() const {
        double diam = 0.0;
        for (const Vertex& v : simplex_) {
            for (std::size_t i = 0; i < v.x.size(); ++i) {
                diam = std::max(diam, std::abs(v.x[i] - simplex_.front().x[i]));
            }
        }
        return diam;
    }

  private:
    void order() {
        std::stable_sort(simplex_.begin(), simplex_.end(),
                         [](const Vertex& a, const Vertex& b) { return a.value < b.value; });
    }

    std::size_t d_;
    double t_;
    std::vector<Vertex> simplex_;
};

} // namespace

OptimizeResult optimize_couplings(const OptimizeConfig& config, std::span<const double> initial) {
    config.validate();
    const std::size_t m = config.d - 1;
    if (initial.size() != m) {
        throw Error(ErrorCode::BadCouplingCount, "expected " + std::to_string(m) + " couplings, got " +
                                                     std::to_string(initial.size()));
    }

    constexpr double kInitialStep = 0.1;
    constexpr std::size_t kMaxRestarts = 8;

    NelderMead search(config.d, config.t_target);
    Jitter jitter(config.seed);

    Point best_x(initial.begin(), initial.end());
    double best_value = search.evaluate(best_x);

    OptimizeResult result{};
    std::size_t iterations = 0;
    bool converged = false;
    search.reset(best_x, best_value, Point(m, kInitialStep));

    for (std::size_t restarts = 0;;) {
        const double run_start = best_value;
        bool collapsed = false;
        double sweep_start = best_value;

        while (iterations < config.max_iters) {
            search.step();
            ++iterations;
            if (search.best().value < best_value) {
                best_value = search.best().value;
                best_x = search.best().x;
            }
            result.history.push_back(-best_value);

            if (iterations % m != 0) continue;
            const double improvement = sweep_start - best_value;
            sweep_start = best_value;
            if (improvement < config.tol && 1.0 + best_value < config.tol) {
                converged = true;
                break;
            }
            if (search.diameter() < config.tol) {
                collapsed = true;
                break;
            }
        }
        if (converged || !collapsed) break;

        // Collapsed short of the bound: a restart that cannot improve
        // confirms the local optimum.
        if (restarts > 0 && run_start - best_value < config.tol) {
            converged = true;
            break;
        }
        if (restarts == kMaxRestarts) {
            converged = true;
            break;
        }
        ++restarts;
        Point steps(m);
        for (std::size_t i = 0; i < m; ++i) {
            const double magnitude = (0.05 + 0.25 * jitter.uniform()) * std::max(1.0, std::abs(best_x[i]));
            steps[i] = jitter.uniform() < 0.5 ? -magnitude : magnitude;
        }
        search.reset(best_x, best_value, steps);
    }

    result.raw_couplings = best_x;
    result.fidelity = -best_value;
    result.iterations = iterations;
    result.converged = converged;
    result.scale = 0.0;
    for (double a : best_x) result.scale = std::max(result.scale, std::abs(a));
    result.couplings.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        result.couplings[i] = result.scale > 0.0 ? std::abs(best_x[i]) / result.scale : 0.0;
    }
    return result;
}

} // namespace qwire::optimizer
