// kpack: command-line driver for the Kahler package, log-concavity and Schur
// verifications.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kpack/error.hpp"
#include "kpack/kahler.hpp"
#include "kpack/report.hpp"
#include "kpack/schurkit.hpp"
#include "kpack/snrep.hpp"
#include "kpack/spaces.hpp"

using namespace kpack;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Range {
  int lo = 0;
  int hi = 0;
};

Range parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
    const int lo = std::stoi(a, &used);
    if (used != a.size()) throw std::invalid_argument(text);
    const int hi = std::stoi(b, &used);
    if (used != b.size()) throw std::invalid_argument(text);
    if (hi < lo) throw std::invalid_argument(text);
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "bad range '" + text + "', expected N or A..B with A <= B");
  }
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') body += ch;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument, "not an integer list: '" + text + "'");
    }
  }
  return out;
}

// Runs fn(i) for i in [0, count) on `jobs` worker threads.
void run_jobs(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

struct Common {
  std::string format = "json";
  std::string output;
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  std::size_t max_total_dim = SpaceLimits{}.max_total_dim;
  std::size_t max_degree_dim = SpaceLimits{}.max_degree_dim;
  bool timestamp = false;

  SpaceLimits limits() const { return {max_total_dim, max_degree_dim}; }
};

void emit(const Common& common, const std::string& text) {
  if (common.output.empty() || common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot open " + common.output);
  out << text;
}

std::string render_json(const Common& common, json doc) {
  if (common.timestamp) doc["metadata"] = {{"generated_at", utc_now()}, {"seed", common.seed}};
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string kind = "poly";
  std::string n = "1..2";
  std::string m = "0..2";
};

int cmd_verify(const Common& common, const VerifyArgs& args) {
  const CaseTag c = parse_case(args.kind);
  const Range nr = parse_range(args.n);
  const Range mr = parse_range(args.m);
  std::vector<std::pair<int, int>> grid;
  for (int n = nr.lo; n <= nr.hi; ++n) {
    if (c == CaseTag::ExtUsual) {
      grid.emplace_back(n, n);
      continue;
    }
    for (int m = mr.lo; m <= mr.hi; ++m) grid.emplace_back(n, m);
  }
  std::vector<std::optional<PackageReport>> reports(grid.size());
  std::vector<std::optional<Error>> errors(grid.size());
  run_jobs(grid.size(), common.jobs, [&](std::size_t i) {
    try {
      reports[i] = verify_package(c, grid[i].first, grid[i].second, common.limits());
    } catch (const Error& e) {
      errors[i] = e;
    }
  });
  for (const auto& e : errors)
    if (e) throw *e;
  std::vector<PackageReport> done;
  for (auto& r : reports) done.push_back(std::move(*r));
  const bool ok = std::all_of(done.begin(), done.end(), [](const PackageReport& r) { return r.pass(); });
  if (common.format == "markdown") {
    emit(common, markdown_table(done));
  } else if (common.format == "csv") {
    emit(common, reports_csv(done));
  } else {
    json list = json::array();
    for (const auto& r : done) list.push_back(to_json(r));
    emit(common, render_json(common, {{"schema_version", kSchemaVersion}, {"reports", list}, {"pass", ok}}));
  }
  return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

struct LogConcavityArgs {
  std::string target = "poly";
  std::string n = "2";
  std::string m = "2";
  int cap = 0;
};

int cmd_logconcavity(const Common& common, const LogConcavityArgs& args) {
  const Range nr = parse_range(args.n);
  json results = json::array();
  std::string csv;
  bool ok = true;
  if (args.target == "poly" || args.target == "ext") {
    const CaseTag c = parse_case(args.target);
    const Range mr = parse_range(args.m);
    for (int n = nr.lo; n <= nr.hi; ++n)
      for (int m = mr.lo; m <= mr.hi; ++m) {
        const GradedSpace space = GradedSpace::build(c, n, m, common.limits());
        const StrongChainResult chain = verify_strong_chain(space);
        const GradedCharacter chi = graded_character(space);
        ok = ok && chain.pass && chain.agree;
        json mult = json::object();
        for (const auto& [d, ch] : chi) mult[std::to_string(d)] = irr_multiplicities(ch);
        json partitions = json::array();
        for (const auto& p : character_table(n).partitions) partitions.push_back(p.to_string());
        results.push_back({{"case", args.target},
                           {"n", n},
                           {"m", m},
                           {"partitions", partitions},
                           {"multiplicities", mult},
                           {"strong_chain", to_json(chain)}});
        csv += "# " + args.target + " n=" + std::to_string(n) + " m=" + std::to_string(m) + "\n" +
               multiplicity_csv(chi);
      }
  } else if (args.target == "coinvariant" || args.target == "novak") {
    const bool flag = args.target == "coinvariant";
    const int cap = args.cap > 0 ? args.cap : (flag ? 5 : 7);
    for (int n = nr.lo; n <= nr.hi; ++n) {
      const ConjectureResult r = flag ? verify_flag_conjecture(n, cap) : verify_novak_conjecture(n, cap);
      ok = ok && r.log_concavity.pass;
      json entry = to_json(r);
      entry["target"] = args.target;
      results.push_back(entry);
      csv += "# " + args.target + " n=" + std::to_string(n) + "\n" + multiplicity_csv(r.characters);
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown target '" + args.target + "'");
  }
  if (common.format == "csv")
    emit(common, csv);
  else
    emit(common, render_json(common, {{"schema_version", kSchemaVersion}, {"results", results}, {"pass", ok}}));
  return ok ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

struct SchurArgs {
  std::string lambda;
  std::string mu;
  int max_size = 0;
  int max_part = 4;
  int k = 1;
  bool column = false;
  int max_i = 0;
  std::string start;
  std::string step;
  int count = 3;
};

std::vector<Partition> partitions_up_to_part(int size, int max_part) {
  std::vector<Partition> out;
  if (size == 0) return {Partition{}};
  for (const auto& p : partitions_of(size))
    if (p.part(0) <= max_part) out.push_back(p);
  return out;
}

json difference_json(const Partition& a, const Partition& b, const DifferenceResult& r) {
  return {{"lambda", a.parts}, {"mu", b.parts}, {"pass", r.pass}, {"difference", to_json(r.difference)}};
}

int cmd_schur_nonneg(const Common& common, const SchurArgs& args) {
  json results = json::array();
  std::string csv = "lambda,mu,pass,difference\n";
  bool ok = true;
  auto record = [&](const Partition& a, const Partition& b) {
    const DifferenceResult r = verify_schur_nonneg(a, b);
    ok = ok && r.pass;
    results.push_back(difference_json(a, b, r));
    csv += '"' + a.to_string() + "\",\"" + b.to_string() + "\"," + (r.pass ? "true" : "false") + ",\"" +
           to_string(r.difference) + "\"\n";
  };
  if (!args.lambda.empty() || !args.mu.empty()) {
    record(parse_partition(args.lambda), parse_partition(args.mu));
  } else {
    if (args.max_size <= 0) throw Error(ErrorKind::InvalidArgument, "give --lambda/--mu or --max-size");
    for (int s = 0; s <= args.max_size; ++s) {
      const auto shapes = partitions_up_to_part(s, args.max_part);
      for (const auto& a : shapes)
        for (const auto& b : shapes) {
          bool even = true;
          for (std::size_t r = 0; r < static_cast<std::size_t>(std::max(a.length(), b.length())); ++r)
            even = even && (a.part(r) + b.part(r)) % 2 == 0;
          if (even) record(a, b);
        }
    }
  }
  if (common.format == "csv")
    emit(common, csv);
  else
    emit(common, render_json(common, {{"schema_version", kSchemaVersion}, {"results", results}, {"pass", ok}}));
  return ok ? kExitOk : kExitFail;
}

int cmd_schur_pieri(const Common& common, const SchurArgs& args) {
  const StripMode mode = args.column ? StripMode::Column : StripMode::Row;
  json doc = {{"schema_version", kSchemaVersion}, {"mode", args.column ? "column" : "row"}};
  std::string csv;
  bool ok = true;
  if (args.max_i > 0) {
    json steps = json::array();
    csv = "i,pass,difference\n";
    for (int i = 1; i <= args.max_i; ++i) {
      const DifferenceResult r = verify_pieri_logconcavity(i, mode);
      ok = ok && r.pass;
      steps.push_back({{"i", i}, {"pass", r.pass}, {"difference", to_json(r.difference)}});
      csv += std::to_string(i) + ',' + (r.pass ? "true" : "false") + ",\"" + to_string(r.difference) + "\"\n";
    }
    doc["logconcavity"] = steps;
  } else {
    const Partition lambda = parse_partition(args.lambda);
    const PieriResult r = verify_pieri(lambda, args.k, mode);
    ok = r.pass;
    json predicted = json::array();
    for (const auto& p : r.predicted) predicted.push_back(p.parts);
    doc["lambda"] = lambda.parts;
    doc["k"] = args.k;
    doc["strips"] = predicted;
    doc["expansion"] = to_json(r.expansion);
    csv = expansion_csv(r.expansion);
  }
  doc["pass"] = ok;
  emit(common, common.format == "csv" ? csv : render_json(common, doc));
  return ok ? kExitOk : kExitFail;
}

int cmd_schur_line(const Common& common, const SchurArgs& args) {
  const LineResult r = verify_line_logconcavity(parse_ints(args.start), parse_ints(args.step), args.count);
  json steps = json::array();
  std::string csv = "index,pass,difference\n";
  for (const auto& s : r.steps) {
    steps.push_back({{"index", s.index}, {"pass", s.pass}, {"difference", to_json(s.difference)}});
    csv += std::to_string(s.index) + ',' + (s.pass ? "true" : "false") + ",\"" + to_string(s.difference) + "\"\n";
  }
  const json doc = {{"schema_version", kSchemaVersion},
                    {"n", r.n},
                    {"shift", r.shift},
                    {"weights", r.weights},
                    {"steps", steps},
                    {"pass", r.pass}};
  emit(common, common.format == "csv" ? csv : render_json(common, doc));
  return r.pass ? kExitOk : kExitFail;
}

// ---------------------------------------------------------------------------

struct DumpArgs {
  std::string kind = "poly";
  int n = 1;
  int m = 0;
};

int cmd_dump(const Common& common, const DumpArgs& args) {
  const GradedSpace space = GradedSpace::build(parse_case(args.kind), args.n, args.m, common.limits());
  emit(common, dump_space(space).dump(2) + "\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of Kahler packages and equivariant log-concavity"};
  app.require_subcommand(1);
  Common common;
  if (const char* cap = std::getenv("KPACK_DIM_CAP")) {
    try {
      common.max_total_dim = std::stoul(cap);
    } catch (const std::logic_error&) {
      std::cerr << "error: KPACK_DIM_CAP is not a number\n";
      return kExitError;
    }
  }
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-f,--format", common.format, "json, markdown or csv")
        ->check(CLI::IsMember({"json", "markdown", "csv"}));
    sub->add_option("-o,--output", common.output, "Output file (default stdout)");
    sub->add_option("-j,--jobs", common.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", common.seed, "Seed recorded in report metadata");
    sub->add_option("--max-dim", common.max_total_dim, "Cap on the total dimension of a space")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-degree-dim", common.max_degree_dim, "Cap on the dimension of one degree")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--timestamp", common.timestamp, "Add a metadata block with the generation time");
  };

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run the Kahler package checks over a grid");
  v->add_option("-c,--case", verify.kind, "poly, ext or ext-usual");
  v->add_option("-n,--n", verify.n, "Number of variables, N or A..B");
  v->add_option("-m,--m", verify.m, "Total degree, N or A..B (ignored for ext-usual)");
  add_common(v);

  LogConcavityArgs lc;
  auto* l = app.add_subcommand("logconcavity", "Equivariant log-concavity experiments");
  l->add_option("-t,--target", lc.target, "poly, ext, coinvariant or novak")
      ->check(CLI::IsMember({"poly", "ext", "coinvariant", "novak"}));
  l->add_option("-n,--n", lc.n, "N or A..B");
  l->add_option("-m,--m", lc.m, "N or A..B (poly and ext)");
  l->add_option("--cap", lc.cap, "Largest n accepted (default 5 coinvariant, 7 novak)");
  add_common(l);

  SchurArgs schur;
  auto* s = app.add_subcommand("schur", "Schur function checks");
  s->require_subcommand(1);
  auto* sn = s->add_subcommand("nonneg", "s_k^2 - s_lambda s_mu with k = (lambda + mu) / 2");
  sn->add_option("--lambda", schur.lambda, "Partition, e.g. 3,1");
  sn->add_option("--mu", schur.mu, "Partition, e.g. 1,1");
  sn->add_option("--max-size", schur.max_size, "Check every pair with |lambda| = |mu| up to this size");
  sn->add_option("--max-part", schur.max_part, "Largest part in the grid");
  add_common(sn);
  auto* sp = s->add_subcommand("pieri", "Pieri rule and its log-concavity consequence");
  sp->add_option("--lambda", schur.lambda, "Partition");
  sp->add_option("-k,--k", schur.k, "Strip size")->check(CLI::NonNegativeNumber);
  sp->add_flag("--column", schur.column, "Vertical strips");
  sp->add_flag_function("--row", [&](std::int64_t) { schur.column = false; }, "Horizontal strips (default)");
  sp->add_option("--max-i", schur.max_i, "Check s_(i)^2 - s_(i-1) s_(i+1) for i up to this value");
  add_common(sp);
  auto* sl = s->add_subcommand("line", "Log-concavity along a line of dominant weights");
  sl->add_option("--start", schur.start, "First weight, e.g. 2,1")->required();
  sl->add_option("--step", schur.step, "Step vector, e.g. 1,1")->required();
  sl->add_option("--count", schur.count, "Number of weights")->check(CLI::NonNegativeNumber);
  add_common(sl);

  DumpArgs dump;
  auto* d = app.add_subcommand("dump", "Write bases, operators and pairing of one space as JSON");
  d->add_option("-c,--case", dump.kind, "poly, ext or ext-usual");
  d->add_option("-n,--n", dump.n, "Number of variables");
  d->add_option("-m,--m", dump.m, "Total degree");
  add_common(d);

  CLI11_PARSE(app, argc, argv);

  try {
    if (v->parsed()) return cmd_verify(common, verify);
    if (l->parsed()) return cmd_logconcavity(common, lc);
    if (sn->parsed()) return cmd_schur_nonneg(common, schur);
    if (sp->parsed()) return cmd_schur_pieri(common, schur);
    if (sl->parsed()) return cmd_schur_line(common, schur);
    if (d->parsed()) return cmd_dump(common, dump);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
