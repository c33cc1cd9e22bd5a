#include <algorithm>
#include <charconv>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "qwire/cli.hpp"

namespace qwire::cli {

std::string format_double(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) return "nan";
    return {buffer, end};
}

Report& Report::add(std::string key, Value value) {
    fields_.emplace_back(std::move(key), std::move(value));
    return *this;
}

bool Report::contains(std::string_view key) const {
    return std::any_of(fields_.begin(), fields_.end(), [&](const auto& f) { return f.first == key; });
}

std::string Report::to_json() const {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [key, value] : fields_) {
        std::visit([&, &key = key](const auto& v) { doc[key] = v; }, value);
    }
    return doc.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::vector<std::string> header;
    std::vector<std::string> row;
    for (const auto& [key, value] : fields_) {
        if (const auto* list = std::get_if<std::vector<double>>(&value)) {
            for (std::size_t i = 0; i < list->size(); ++i) {
                header.push_back(key + "_" + std::to_string(i));
                row.push_back(format_double((*list)[i]));
            }
            continue;
        }
        header.push_back(key);
        std::visit(
            [&](const auto& v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, double>) {
                    row.push_back(format_double(v));
                } else if constexpr (std::is_same_v<T, bool>) {
                    row.push_back(v ? "true" : "false");
                } else if constexpr (std::is_same_v<T, std::int64_t>) {
                    row.push_back(std::to_string(v));
                } else if constexpr (std::is_same_v<T, std::string>) {
                    row.push_back(v);
                }
            },
            value);
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << '\n';
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
    os << '\n';
    return os.str();
}

std::string Table::to_csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < header_.size(); ++i) os << (i ? "," : "") << header_[i];
    os << '\n';
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
    return os.str();
}

} // namespace qwire::cli
