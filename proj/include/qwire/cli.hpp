#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace qwire::cli {

/// Process exit codes; stable across releases.
enum ExitCode : int {
    kSuccess = 0,
    kToleranceFailure = 1,
    kArgumentError = 2,
    kResourceCap = 3,
};

/// Largest register sector-check will build.
inline constexpr std::size_t kSectorCheckMaxQubits = 10;

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

/// Ordered key/value record rendered as a JSON object or a one-row CSV.
class Report {
  public:
    using Value = std::variant<double, std::int64_t, bool, std::string, std::vector<double>>;

    Report& add(std::string key, Value value);
    const std::vector<std::pair<std::string, Value>>& fields() const noexcept { return fields_; }
    bool contains(std::string_view key) const;

    /// Pretty-printed JSON object, trailing newline.
    std::string to_json() const;
    /// Header row plus one value row; list values expand to key_0, key_1, ...
    std::string to_csv() const;

  private:
    std::vector<std::pair<std::string, Value>> fields_;
};

/// Header row plus data rows, comma separated, LF line endings.
class Table {
  public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
    void add_row(std::vector<double> row) { rows_.push_back(std::move(row)); }
    std::size_t size() const noexcept { return rows_.size(); }
    std::string to_csv() const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

/// Runs one subcommand (`dispersion`, `weyl-check`, `pst`, `sector-check`,
/// `optimize`). `args` excludes the program name. Primary output goes to
/// --output when given, otherwise to `out`; diagnostics and summary lines
/// go to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

} // namespace qwire::cli
