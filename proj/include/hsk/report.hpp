#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hsk {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& s);  // throws std::invalid_argument

/// One verification record.  Numeric fields are pre-formatted ("%.6e") so all
/// three output encodings carry byte-identical values; exact rationals are
/// serialized losslessly as "num/den" strings by the producers.
struct CheckRecord {
    std::string name;
    bool pass = false;
    std::vector<std::pair<std::string, std::string>> exact;  // ordered key/value pairs
    bool has_residual = false;
    double residual = 0.0;
    double tol = 0.0;
    std::string note;
    double wall_ms = 0.0;

    CheckRecord& with(const std::string& key, const std::string& value) {
        exact.emplace_back(key, value);
        return *this;
    }
};

struct Report {
    std::string version = "hsk 0.1.0";
    std::string command;
    std::uint64_t seed = 42;
    std::vector<CheckRecord> checks;

    bool all_pass() const;
    std::size_t passed() const;
};

std::string format_sci(double v);  // fixed "%.6e" rendering

/// Render the report.  Wall-clock fields are emitted only when
/// include_timings is set, so default reports stay byte-stable for identical
/// inputs and seed.
std::string render(const Report& report, Format fmt, bool include_timings = false);

}  // namespace hsk
