#include "kpack/report.hpp"

#include <sstream>

namespace kpack {

using nlohmann::json;

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

json blocks_json(const DegreeBlockMap& op) {
  json out = json::array();
  for (const auto& [d, block] : op.blocks)
    out.push_back({{"from_degree", d}, {"to_degree", d + op.shift}, {"matrix", to_json(block)}});
  return out;
}

}  // namespace

json dump_space(const GradedSpace& space) {
  json pieces = json::array();
  for (int d : space.degrees()) {
    json basis = json::array();
    for (const auto& b : space.basis(d)) basis.push_back(to_string(b));
    pieces.push_back({{"degree", d}, {"dim", space.dim(d)}, {"basis", basis}});
  }
  json gram = json::array();
  for (const auto& [d, block] : pairing_gram(space).blocks)
    gram.push_back({{"degree", d}, {"opposite_degree", -d}, {"matrix", to_json(block)}});
  return {{"schema_version", kSchemaVersion},
          {"case", std::string(to_string(space.kind()))},
          {"n", space.n()},
          {"m", space.m()},
          {"total_dim", space.total_dim()},
          {"pieces", pieces},
          {"L", blocks_json(raising_L(space))},
          {"F", blocks_json(lowering_F(space))},
          {"h", blocks_json(grading_h(space))},
          {"pairing", gram}};
}

json to_json(const CheckResult& c) {
  return {{"name", c.name}, {"pass", c.pass}, {"expected_pass", c.expected_pass}, {"details", c.details}};
}

json to_json(const PackageReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return {{"schema_version", kSchemaVersion},
          {"case", std::string(to_string(r.kind))},
          {"n", r.n},
          {"m", r.m},
          {"checks", checks},
          {"pass", r.pass()}};
}

std::string markdown_table(const std::vector<PackageReport>& reports) {
  std::ostringstream os;
  os << "| case | n | m | check | pass | expected |\n";
  os << "|---|---|---|---|---|---|\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << "| " << to_string(r.kind) << " | " << r.n << " | " << r.m << " | " << c.name << " | "
         << (c.pass ? "true" : "false") << " | " << (c.expected_pass ? "true" : "false") << " |\n";
  return os.str();
}

std::string reports_csv(const std::vector<PackageReport>& reports) {
  std::ostringstream os;
  os << "case,n,m,check,pass,expected_pass\n";
  for (const auto& r : reports)
    for (const auto& c : r.checks)
      os << to_string(r.kind) << ',' << r.n << ',' << r.m << ',' << c.name << ',' << (c.pass ? "true" : "false")
         << ',' << (c.expected_pass ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace kpack
