#pragma once

// Serialization of spaces and verification reports.

#include <string>
#include <vector>

#include <json.hpp>

#include "kpack/kahler.hpp"
#include "kpack/ratlin.hpp"
#include "kpack/spaces.hpp"

namespace kpack {

inline constexpr int kSchemaVersion = 1;

/// Rows of "num/den" strings.
nlohmann::json to_json(const RatMatrix& m);

/// Bases, L, F, h and the pairing Gram blocks of a space. Contains nothing
/// run-dependent, so equal inputs give equal bytes.
nlohmann::json dump_space(const GradedSpace& space);

nlohmann::json to_json(const CheckResult& c);
nlohmann::json to_json(const PackageReport& r);

/// One row per check of every report.
std::string markdown_table(const std::vector<PackageReport>& reports);
/// Header "case,n,m,check,pass,expected_pass".
std::string reports_csv(const std::vector<PackageReport>& reports);

}  // namespace kpack
