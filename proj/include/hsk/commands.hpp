#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "hsk/report.hpp"

namespace hsk {

/// Flags shared by every subcommand.
struct CommonOpts {
    Format format = Format::Text;
    std::uint64_t seed = 42;
    std::optional<double> tol;  // overrides the per-suite defaults when set
    bool timings = false;       // emit wall-clock fields (breaks byte-stability on purpose)
};

/// List catalog spaces with derived invariants; optional family filter
/// ("I", "II", "III", "IV", "EIII", "EVII", case-insensitive).
/// Throws std::invalid_argument on an unknown family (usage error).
Report cmd_catalog(const std::optional<std::string>& family, long max_l, const CommonOpts& opts);

/// Exact pipeline for one space and kernel: coefficient polynomial, binomial
/// basis, Laurent profile, c0 closed form, log-term verdict.  A NonPolynomial
/// failure comes back as a failing record, not an exception.
Report cmd_expand(const std::string& label, const std::string& kind, long mu,
                  const CommonOpts& opts);

/// Numeric suites: "oracle", "monge-ampere", "quadrature", "detB",
/// "transform", or "all".  Throws std::invalid_argument on an unknown suite.
Report cmd_verify(const std::string& suite, const CommonOpts& opts);

/// Grassmannian sweep 1 <= k <= l-k, 2 <= l <= max_l (consistency: the Betti
/// condition holds exactly for k = 1), plus an optional lens-space cohomology
/// table for S^{2n+1}/Z_m.
Report cmd_topology(long max_l, const std::optional<std::pair<long, long>>& lens,
                    const CommonOpts& opts);

}  // namespace hsk
