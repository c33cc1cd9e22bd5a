#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qwire/cli.hpp"
#include "qwire/lattice.hpp"
#include "qwire/optimizer.hpp"
#include "qwire/pst.hpp"
#include "qwire/spinchain.hpp"
#include "qwire/weyl.hpp"

namespace qwire::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { csv, json };

struct Common {
    std::string output;
    std::string format;
};

void add_common(CLI::App* cmd, Common& common) {
    cmd->add_option("--output", common.output, "Output path (default: stdout)");
    cmd->add_option("--format", common.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
}

Format resolve_format(const Common& common, Format fallback) {
    if (common.format.empty()) return fallback;
    return common.format == "json" ? Format::json : Format::csv;
}

void emit(const Common& common, const std::string& text, std::ostream& out) {
    if (common.output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(common.output, std::ios::binary | std::ios::trunc);
    if (!file) throw UsageError("cannot open output file '" + common.output + "'");
    file << text;
}

void emit_report(const Common& common, const Report& report, std::ostream& out) {
    emit(common, resolve_format(common, Format::json) == Format::json ? report.to_json() : report.to_csv(),
         out);
}

void require(bool condition, const std::string& message) {
    if (!condition) throw UsageError(message);
}

// ---------------------------------------------------------------------------

struct DispersionArgs {
    Common common;
    std::string topology = "ring";
    int d = 0;
    double e0 = 0.0;
    double amplitude = 1.0;
};

int cmd_dispersion(const DispersionArgs& args, std::ostream& out) {
    require(args.topology == "ring" || args.topology == "line",
            "--topology must be ring or line, got '" + args.topology + "'");
    require(args.d >= 2, "--d must be >= 2 (got " + std::to_string(args.d) + ")");
    require(std::isfinite(args.e0) && std::isfinite(args.amplitude), "--E0 and --A must be finite");
    if (args.d > 1024) throw ResourceError("--d above 1024 is not supported by the dense solver");

    const auto topology = lattice::parse_topology(args.topology);
    const auto d = static_cast<std::size_t>(args.d);
    const auto spec = lattice::ChainSpec::uniform(topology, d, args.e0, args.amplitude);
    const RealVector eig = hermitian_eig(lattice::build_hamiltonian(spec)).values;
    const std::vector<double> kb = lattice::wave_numbers(topology, d);
    const std::vector<double> energies = lattice::dispersion(topology, d, args.e0, args.amplitude);

    // Pair closed-form energies with eigenvalues by rank.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
    std::vector<double> matched(d);
    for (std::size_t rank = 0; rank < d; ++rank) {
        matched[order[rank]] = eig(static_cast<Eigen::Index>(rank));
    }

    Table table({"j", "kb", "E", "eigenvalue", "deviation"});
    double worst = 0.0;
    const std::size_t j0 = topology == lattice::Topology::ring ? 0 : 1;
    for (std::size_t i = 0; i < d; ++i) {
        const double deviation = std::abs(energies[i] - matched[i]);
        worst = std::max(worst, deviation);
        table.add_row({static_cast<double>(i + j0), kb[i], energies[i], matched[i], deviation});
    }

    if (resolve_format(args.common, Format::csv) == Format::csv) {
        emit(args.common, table.to_csv(), out);
    } else {
        Report report;
        report.add("d", static_cast<std::int64_t>(d)).add("residual", worst);
        emit(args.common, report.to_json(), out);
    }
    return worst <= tol::kSpectral ? kSuccess : kToleranceFailure;
}

// ---------------------------------------------------------------------------

struct WeylArgs {
    Common common;
    int d = 0;
    double theta = 1.0;
};

int cmd_weyl_check(const WeylArgs& args, std::ostream& out) {
    require(args.d >= 2, "--d must be >= 2 (got " + std::to_string(args.d) + ")");
    require(args.theta > 0.0 && std::isfinite(args.theta), "--theta must be positive");
    if (args.d > 1024) throw ResourceError("--d above 1024 is not supported by the dense solver");

    const auto d = static_cast<std::size_t>(args.d);
    const weyl::WeylPair pair = weyl::weyl_pair(d);
    const Matrix id = Matrix::Identity(args.d, args.d);
    const double shift_power = max_abs(matrix_power(pair.shift.matrix(), static_cast<unsigned>(d)) - id);
    const double clock_power = max_abs(matrix_power(pair.clock.matrix(), static_cast<unsigned>(d)) - id);
    const weyl::ShiftIdentity identity = weyl::verify_shift_identity(d, args.theta);
    const double residual = std::max({shift_power, clock_power, identity.residual});

    Report report;
    report.add("d", static_cast<std::int64_t>(d))
        .add("phase_re", pair.commutation_phase.real())
        .add("phase_im", pair.commutation_phase.imag())
        .add("residual", residual)
        .add("shift_power_residual", shift_power)
        .add("clock_power_residual", clock_power)
        .add("shift_identity_residual", identity.residual)
        .add("global_phase_re", identity.global_phase.real())
        .add("global_phase_im", identity.global_phase.imag());
    emit_report(args.common, report, out);
    return residual <= tol::kSpectral ? kSuccess : kToleranceFailure;
}

// ---------------------------------------------------------------------------

struct PstArgs {
    Common common;
    int d = 0;
    double vartheta = 1.0;
    double amplitude = 1.0;
    double t_max = -1.0;
    int samples = 400;
    bool uniform = false;
};

int cmd_pst(const PstArgs& args, std::ostream& out, std::ostream& err) {
    require(args.d >= 2, "--d must be >= 2 (got " + std::to_string(args.d) + ")");
    require(args.vartheta > 0.0 && std::isfinite(args.vartheta), "--vartheta must be positive");
    require(std::isfinite(args.amplitude), "--A must be finite");
    require(args.samples >= 2, "--samples must be >= 2 (got " + std::to_string(args.samples) + ")");
    const double t_max = args.t_max < 0.0 ? std::numbers::pi / args.vartheta : args.t_max;
    require(t_max > 0.0 && std::isfinite(t_max), "--t-max must be positive");
    if (args.d > 1024) throw ResourceError("--d above 1024 is not supported by the dense solver");

    const auto d = static_cast<std::size_t>(args.d);
    const Operator h =
        args.uniform
            ? lattice::build_hamiltonian(lattice::ChainSpec::uniform(lattice::Topology::line, d, 0.0, args.amplitude))
            : pst::pst_hamiltonian(d, args.vartheta);
    const std::vector<double> grid = pst::linspace(0.0, t_max, static_cast<std::size_t>(args.samples));
    const pst::FidelityCurve curve = pst::fidelity_curve(h, grid, 0, d - 1);

    Report report;
    report.add("d", static_cast<std::int64_t>(d));
    bool ok = true;
    if (args.uniform) {
        const auto peak = std::max_element(curve.fidelities.begin(), curve.fidelities.end());
        const auto index = static_cast<std::size_t>(peak - curve.fidelities.begin());
        report.add("t_star", curve.times[index]).add("peak_fidelity", *peak);
    } else {
        const pst::TransferReport transfer = pst::transfer_time(d, args.vartheta);
        report.add("vartheta", transfer.vartheta)
            .add("t_star", transfer.t_star)
            .add("peak_fidelity", transfer.peak_fidelity)
            .add("period", transfer.period);
        ok = transfer.peak_fidelity >= 1.0 - 1e-8;
    }

    if (resolve_format(args.common, Format::csv) == Format::csv) {
        Table table({"t", "fidelity"});
        for (std::size_t i = 0; i < curve.times.size(); ++i) {
            table.add_row({curve.times[i], curve.fidelities[i]});
        }
        emit(args.common, table.to_csv(), out);
    } else {
        emit(args.common, report.to_json(), out);
    }

    nlohmann::ordered_json summary = nlohmann::ordered_json::parse(report.to_json());
    err << summary.dump() << '\n';
    return ok ? kSuccess : kToleranceFailure;
}

// ---------------------------------------------------------------------------

struct SectorArgs {
    Common common;
    int n = 0;
    double amplitude = 1.0;
    bool pst = false;
};

int cmd_sector_check(const SectorArgs& args, std::ostream& out) {
    require(args.n >= 2, "--n must be >= 2 (got " + std::to_string(args.n) + ")");
    require(args.amplitude > 0.0 && std::isfinite(args.amplitude), "--A must be positive");
    if (static_cast<std::size_t>(args.n) > kSectorCheckMaxQubits) {
        throw ResourceError("--n must be <= " + std::to_string(kSectorCheckMaxQubits) + " (got " +
                            std::to_string(args.n) + ")");
    }

    const auto n = static_cast<std::size_t>(args.n);
    const std::vector<double> couplings =
        args.pst ? pst::pst_couplings(n, args.amplitude) : std::vector<double>(n - 1, args.amplitude);
    const Operator full = spinchain::xy_chain_hamiltonian(couplings);
    const Operator block = spinchain::single_excitation_sector(full, spinchain::SectorMap::single_excitation(n));

    // The XY block has +A hoppings; the lattice form -A is its sign-gauge image.
    const Matrix reference =
        args.pst ? pst::pst_hamiltonian(n, args.amplitude).matrix()
                 : spinchain::sign_gauge(lattice::build_hamiltonian(
                       lattice::ChainSpec::uniform(lattice::Topology::line, n, 0.0, args.amplitude)).matrix());
    const double residual = max_abs_diff(block.matrix(), reference);

    Report report;
    report.add("d", static_cast<std::int64_t>(n))
        .add("profile", std::string(args.pst ? "A*sqrt(j*(d-j))" : "uniform"))
        .add("couplings", couplings)
        .add("residual", residual);
    emit_report(args.common, report, out);
    return residual <= tol::kExact ? kSuccess : kToleranceFailure;
}

// ---------------------------------------------------------------------------

struct OptimizeArgs {
    Common common;
    int d = 0;
    double t_target = std::numbers::pi / 2.0;
    int max_iters = 20000;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    std::string init = "uniform";
};

int cmd_optimize(const OptimizeArgs& args, std::ostream& out) {
    require(args.d >= 2, "--d must be >= 2 (got " + std::to_string(args.d) + ")");
    require(args.t_target > 0.0 && std::isfinite(args.t_target), "--t-target must be positive");
    require(args.max_iters >= 1, "--max-iters must be >= 1");
    require(args.tol > 0.0, "--tol must be positive");
    require(args.init == "uniform" || args.init == "random", "--init must be uniform or random");
    if (args.d > 64) throw ResourceError("--d above 64 is not supported by the optimizer");

    const auto d = static_cast<std::size_t>(args.d);
    std::vector<double> initial(d - 1, 1.0);
    if (args.init == "random") {
        std::mt19937_64 engine(args.seed ^ 0x9e3779b97f4a7c15ULL);
        for (double& a : initial) a = 0.5 + static_cast<double>(engine() >> 11) * 0x1.0p-53;
    }
    optimizer::OptimizeConfig config{d, args.t_target, static_cast<std::size_t>(args.max_iters), args.tol,
                                     args.seed};
    const optimizer::OptimizeResult result = optimizer::optimize_couplings(config, initial);

    Report report;
    report.add("d", static_cast<std::int64_t>(d))
        .add("couplings", result.couplings)
        .add("fidelity", result.fidelity)
        .add("iterations", static_cast<std::int64_t>(result.iterations))
        .add("converged", result.converged);
    emit_report(args.common, report, out);
    return result.converged && result.fidelity >= 0.999 ? kSuccess : kToleranceFailure;
}

} // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quantum wire transfer simulator", "qwire"};
    app.require_subcommand(1);

    DispersionArgs dispersion;
    auto* dispersion_cmd = app.add_subcommand("dispersion", "Tight-binding band vs exact diagonalization");
    add_common(dispersion_cmd, dispersion.common);
    dispersion_cmd->add_option("--topology", dispersion.topology, "ring or line");
    dispersion_cmd->add_option("--d", dispersion.d, "Number of sites")->required();
    dispersion_cmd->add_option("--E0", dispersion.e0, "On-site energy");
    dispersion_cmd->add_option("--A", dispersion.amplitude, "Hopping amplitude");

    WeylArgs weyl_args;
    auto* weyl_cmd = app.add_subcommand("weyl-check", "Shift/clock algebra and the shift-from-Hamiltonian identity");
    add_common(weyl_cmd, weyl_args.common);
    weyl_cmd->add_option("--d", weyl_args.d, "Dimension")->required();
    weyl_cmd->add_option("--theta", weyl_args.theta, "Level spacing of the equidistant Hamiltonian");

    PstArgs pst_args;
    auto* pst_cmd = app.add_subcommand("pst", "End-to-end transfer fidelity curve");
    add_common(pst_cmd, pst_args.common);
    pst_cmd->add_option("--d", pst_args.d, "Chain length")->required();
    pst_cmd->add_option("--vartheta", pst_args.vartheta, "Coupling scale (rad/time)");
    pst_cmd->add_option("--A", pst_args.amplitude, "Uniform coupling used with --uniform");
    pst_cmd->add_option("--t-max", pst_args.t_max, "End of the time grid (default pi/vartheta)");
    pst_cmd->add_option("--samples", pst_args.samples, "Number of grid points");
    pst_cmd->add_flag("--uniform", pst_args.uniform, "Uniform couplings instead of sqrt(j(d-j))");

    SectorArgs sector_args;
    auto* sector_cmd = app.add_subcommand("sector-check", "Single-excitation reduction of the XY chain");
    add_common(sector_cmd, sector_args.common);
    sector_cmd->add_option("--n", sector_args.n, "Number of qubits")->required();
    sector_cmd->add_option("--A", sector_args.amplitude, "Coupling scale");
    sector_cmd->add_flag("--pst", sector_args.pst, "Use the sqrt(j(d-j)) profile");

    OptimizeArgs opt_args;
    auto* opt_cmd = app.add_subcommand("optimize", "Search couplings maximizing end-to-end fidelity");
    add_common(opt_cmd, opt_args.common);
    opt_cmd->add_option("--d", opt_args.d, "Chain length")->required();
    opt_cmd->add_option("--t-target", opt_args.t_target, "Transfer time");
    opt_cmd->add_option("--max-iters", opt_args.max_iters, "Iteration budget");
    opt_cmd->add_option("--tol", opt_args.tol, "Convergence threshold");
    opt_cmd->add_option("--seed", opt_args.seed, "Seed for restarts and random init");
    opt_cmd->add_option("--init", opt_args.init, "uniform or random");

    std::vector<const char*> argv{"qwire"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kArgumentError;
    }

    try {
        if (dispersion_cmd->parsed()) return cmd_dispersion(dispersion, out);
        if (weyl_cmd->parsed()) return cmd_weyl_check(weyl_args, out);
        if (pst_cmd->parsed()) return cmd_pst(pst_args, out, err);
        if (sector_cmd->parsed()) return cmd_sector_check(sector_args, out);
        if (opt_cmd->parsed()) return cmd_optimize(opt_args, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kArgumentError;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return kResourceCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::RegisterTooLarge ? kResourceCap : kArgumentError;
    }
    return kArgumentError;
}

} // namespace qwire::cli
