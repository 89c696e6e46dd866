// tricusp command-line front end. Talks to the library only through tricusp.h.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tricusp/tricusp.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

const std::vector<std::string> kBatchFamilies{"cubic3", "quartic6", "quintic2a", "quintic_case3", "sexticA", "sexticB"};

struct RunConfig {
  std::string family;
  std::optional<std::uint64_t> seed;
  std::uint32_t prime = 10007;
  std::uint32_t oracle_prime = 101;
  std::string input;
  std::string out;
  unsigned jobs = 1;
  bool json_output = false;
  std::optional<std::int64_t> t;
  int seeds = 5;
  bool cross = false;
  bool no_timings = false;
  int verbosity = 0;
};

// Thrown for exit status 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a library call fails for a reason that is a verification failure.
struct RunFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CString {
  char* p = nullptr;
  ~CString() { tricusp_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

using InstancePtr = std::unique_ptr<tricusp_instance, decltype(&tricusp_instance_free)>;
using ReportPtr = std::unique_ptr<tricusp_report, decltype(&tricusp_report_free)>;

bool is_config_status(tricusp_status s) {
  switch (s) {
    case TRICUSP_E_SYNTAX:
    case TRICUSP_E_UNKNOWN_VARIABLE:
    case TRICUSP_E_INVALID_FIELD:
    case TRICUSP_E_INVALID_ARGUMENT:
    case TRICUSP_E_FIELD_TOO_LARGE:
    case TRICUSP_E_FIELD_MISMATCH:
    case TRICUSP_E_INCOMPATIBLE_FIELDS:
    case TRICUSP_E_ZERO_INVERSE:
      return true;
    default:
      return false;
  }
}

void check(tricusp_status s) {
  if (s == TRICUSP_OK) return;
  const std::string msg = tricusp_last_error();
  if (is_config_status(s)) throw ConfigError(msg);
  throw RunFailure(msg);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void validate_prime(std::uint32_t p, const char* what) {
  if (p <= 3 || !is_prime(p)) throw ConfigError(std::string(what) + " must be a prime > 3, got " + std::to_string(p));
}

std::uint64_t resolve_seed(RunConfig& cfg) {
  if (!cfg.seed) {
    std::random_device rd;
    cfg.seed = rd();
  }
  return *cfg.seed;
}

std::string read_input(const std::string& input) {
  if (input.empty()) throw ConfigError("--input is empty");
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return input;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream o(cfg.out);
  if (!o) throw ConfigError("cannot write " + cfg.out);
  o << text;
  if (!text.empty() && text.back() != '\n') o << '\n';
}

InstancePtr construct(const std::string& family, std::uint64_t seed, std::uint32_t prime,
                      const std::optional<std::int64_t>& t) {
  tricusp_instance* raw = nullptr;
  const std::int64_t tv = t.value_or(0);
  check(tricusp_construct(family.c_str(), seed, prime, t ? &tv : nullptr, &raw));
  return {raw, tricusp_instance_free};
}

// --family builds a family member; --input takes polynomial text or instance JSON.
InstancePtr load_instance(RunConfig& cfg, std::uint32_t prime) {
  if (!cfg.family.empty() && !cfg.input.empty()) throw ConfigError("give either --family or --input, not both");
  if (!cfg.family.empty()) {
    if (cfg.family == "quintic_degeneration" && !cfg.t) throw ConfigError("quintic_degeneration needs --t");
    return construct(cfg.family, resolve_seed(cfg), prime, cfg.t);
  }
  if (cfg.input.empty()) throw ConfigError("give --family or --input");
  const std::string text = read_input(cfg.input);
  tricusp_instance* raw = nullptr;
  if (looks_like_json(text))
    check(tricusp_instance_from_json(text.c_str(), &raw));
  else
    check(tricusp_instance_from_text(text.c_str(), prime, &raw));
  return {raw, tricusp_instance_free};
}

std::string join_counts(const json& obj) {
  std::string out;
  for (const auto& [k, v] : obj.items()) out += (out.empty() ? "" : ", ") + k + ": " + v.dump();
  return out.empty() ? "none" : out;
}

std::string census_text(const json& census, bool list_points) {
  std::ostringstream o;
  std::map<std::string, int> classes;
  for (const auto& p : census.at("points")) ++classes[p.at("classification").get<std::string>()];
  std::string cls;
  for (const auto& [k, v] : classes) cls += (cls.empty() ? "" : ", ") + std::to_string(v) + " " + k;
  o << "census       " << census.at("geometric_points").get<int>() << " singular points"
    << (cls.empty() ? "" : " (" + cls + ")") << ", total length " << census.at("total_length").get<int>() << "\n";
  o << "             rational " << census.at("rational_points").get<int>() << ", by extension degree "
    << join_counts(census.at("by_extension_degree")) << "\n";
  if (list_points) {
    for (const auto& p : census.at("points"))
      o << "  chart " << p.at("chart").get<int>() << "  " << p.at("projective").get<std::string>() << "  deg "
        << p.at("extension_degree").get<int>() << "  tau " << p.at("tjurina").get<int>() << "  corank "
        << p.at("hessian_corank").get<int>() << "  " << p.at("classification").get<std::string>() << "\n";
  }
  return o.str();
}

std::string report_text(const json& r, int verbosity) {
  std::ostringstream o;
  const json& inst = r.at("instance");
  o << "family       " << inst.at("family").get<std::string>() << "  (seed " << inst.at("seed").get<std::uint64_t>()
    << ", draw seed " << inst.at("draw_seed").get<std::uint64_t>() << ", GF(" << inst.at("prime").get<int>() << "))\n";
  if (!inst.at("t").is_null()) o << "t            " << inst.at("t").get<int>() << "\n";
  o << "degree       " << inst.at("degree").get<int>() << "\n";
  if (verbosity > 0) o << "phi          " << inst.at("phi").get<std::string>() << "\n";
  if (!r.at("census").is_null()) o << census_text(r.at("census"), verbosity > 0);
  const json& c = r.at("certificate");
  o << "certificate  " << c.at("kind").get<std::string>() << ", identity " << (c.at("identity_ok").get<bool>() ? "ok" : "FAILS");
  if (c.at("residual_degree").get<int>() >= 0) o << ", residual degree " << c.at("residual_degree").get<int>();
  if (!c.at("note").get<std::string>().empty()) o << " (" << c.at("note").get<std::string>() << ")";
  o << "\n";
  const json& loci = inst.at("predicted").at("loci");
  const json& counts = r.at("incidence").at("locus_counts");
  for (std::size_t i = 0; i < loci.size() && i < counts.size(); ++i) {
    o << "locus        " << loci[i].at("description").get<std::string>() << ": " << counts[i].get<int>();
    if (!loci[i].at("expected").is_null()) o << " (expected " << loci[i].at("expected").get<int>() << ")";
    o << "\n";
  }
  if (!r.at("line_cusps").is_null())
    o << "line cusps   " << r.at("line_cusps").at("count").get<int>() << ", principal-part check "
      << (r.at("line_cusps").at("sqh").get<bool>() ? "ok" : "FAILS") << "\n";
  o << "expected     " << r.at("expected").at("minimal_cusps").get<int>() << " cusps\n";
  if (!inst.at("rejections").empty()) o << "rejected     " << inst.at("rejections").size() << " draws\n";
  if (verbosity > 0)
    for (const auto& rej : inst.at("rejections"))
      o << "  draw " << rej.at("draw_seed").get<std::uint64_t>() << ": " << rej.at("reason").get<std::string>() << "\n";
  if (r.contains("timings")) o << "time         " << r.at("timings").at("total_ms").get<double>() << " ms\n";
  for (const auto& f : r.at("failures")) o << "failure      " << f.get<std::string>() << "\n";
  o << "verdict      " << r.at("verdict").get<std::string>() << "\n";
  return o.str();
}

json verify_json(const tricusp_instance* inst, bool timings) {
  tricusp_report* raw = nullptr;
  check(tricusp_verify(inst, &raw));
  ReportPtr rep(raw, tricusp_report_free);
  CString s;
  check(tricusp_report_to_json(rep.get(), timings ? 1 : 0, &s.p));
  return json::parse(s.str());
}

int cmd_construct(RunConfig& cfg) {
  if (cfg.family.empty()) throw ConfigError("construct needs --family");
  validate_prime(cfg.prime, "--prime");
  auto inst = load_instance(cfg, cfg.prime);
  CString s;
  check(tricusp_instance_to_json(inst.get(), &s.p));
  emit(cfg, s.str());
  return kExitPass;
}

int cmd_verify(RunConfig& cfg) {
  validate_prime(cfg.prime, "--prime");
  auto inst = load_instance(cfg, cfg.prime);
  const json r = verify_json(inst.get(), !cfg.no_timings);
  emit(cfg, cfg.json_output ? r.dump(2) : report_text(r, cfg.verbosity));
  return r.at("verdict") == "PASS" ? kExitPass : kExitFail;
}

int cmd_classify(RunConfig& cfg) {
  validate_prime(cfg.prime, "--prime");
  if (cfg.input.empty()) throw ConfigError("classify needs --input");
  const std::string text = read_input(cfg.input);
  CString s;
  check(tricusp_classify(text.c_str(), cfg.prime, resolve_seed(cfg), &s.p));
  const json j = json::parse(s.str());
  emit(cfg, cfg.json_output ? j.dump(2) : "surface      " + j.at("phi").get<std::string>() + " over GF(" +
                                              std::to_string(cfg.prime) + ")\n" + census_text(j, true));
  return kExitPass;
}

int cmd_oracle(RunConfig& cfg) {
  validate_prime(cfg.oracle_prime, "--oracle-prime");
  auto inst = load_instance(cfg, cfg.oracle_prime);
  CString s;
  check(tricusp_oracle_scan(inst.get(), cfg.oracle_prime, cfg.jobs, &s.p));
  json j = json::parse(s.str());
  int status = kExitPass;
  if (cfg.cross) {
    int agree = 0;
    CString c;
    check(tricusp_cross_check(inst.get(), cfg.oracle_prime, cfg.jobs, &agree, &c.p));
    j["cross_check"] = json::parse(c.str());
    if (!agree) status = kExitFail;
  }
  if (cfg.json_output) {
    emit(cfg, j.dump(2));
  } else {
    std::ostringstream o;
    o << "scanned      " << j.at("scanned").get<std::uint64_t>() << " points of P^3(F_" << cfg.oracle_prime << ")\n";
    o << "singular     " << j.at("count").get<int>() << "\n";
    for (const auto& p : j.at("points"))
      o << "  [" << p[0] << ":" << p[1] << ":" << p[2] << ":" << p[3] << "]\n";
    if (j.contains("cross_check")) {
      const json& c = j.at("cross_check");
      o << "solver       " << c.at("solver_rational").get<int>() << " rational of " << c.at("solver_geometric").get<int>()
        << " geometric\n";
      o << "agreement    " << (c.at("agree").get<bool>() ? "exact" : "MISMATCH") << "\n";
    }
    emit(cfg, o.str());
  }
  return status;
}

int cmd_table(RunConfig& cfg) {
  std::ostringstream o;
  json rows = json::array();
  if (!cfg.json_output) o << "degree  minimal cusps\n";
  for (int d = 3; d <= 6; ++d) {
    int n = 0;
    check(tricusp_minimal_count(d, &n));
    rows.push_back({{"degree", d}, {"cusps", n}});
    if (!cfg.json_output) o << std::setw(6) << d << "  " << std::setw(13) << n << "\n";
  }
  emit(cfg, cfg.json_output ? rows.dump(2) : o.str());
  return kExitPass;
}

struct BatchRun {
  std::string family;
  std::uint64_t seed = 0;
  json entry;
  bool pass = false;
};

void run_one(BatchRun& run, const RunConfig& cfg) {
  json e = {{"family", run.family}, {"seed", run.seed}};
  bool pass = true;
  try {
    auto inst = construct(run.family, run.seed, cfg.prime, std::nullopt);
    const json r = verify_json(inst.get(), true);
    e["verdict"] = r.at("verdict");
    e["singular_points"] = r.at("singular_points");
    e["cusps"] = r.at("cusps");
    e["expected"] = r.at("expected").at("minimal_cusps");
    e["total_length"] = r.at("census").is_null() ? json(nullptr) : r.at("census").at("total_length");
    e["rejected_draws"] = r.at("instance").at("rejections").size();
    e["locus_counts"] = r.at("incidence").at("locus_counts");
    e["failures"] = r.at("failures");
    e["time_ms"] = r.at("timings").at("total_ms");
    pass = r.at("verdict") == "PASS";
  } catch (const std::exception& ex) {
    e["verdict"] = "FAIL";
    e["failures"] = json::array({ex.what()});
    pass = false;
  }
  try {
    auto inst = construct(run.family, run.seed, cfg.oracle_prime, std::nullopt);
    int agree = 0;
    CString c;
    check(tricusp_cross_check(inst.get(), cfg.oracle_prime, 1, &agree, &c.p));
    e["oracle"] = json::parse(c.str());
    pass = pass && agree;
  } catch (const std::exception& ex) {
    e["oracle"] = {{"agree", false}, {"error", ex.what()}};
    pass = false;
  }
  run.entry = std::move(e);
  run.pass = pass;
}

int cmd_report(RunConfig& cfg) {
  validate_prime(cfg.prime, "--prime");
  validate_prime(cfg.oracle_prime, "--oracle-prime");
  if (cfg.seeds < 1) throw ConfigError("--seeds must be positive");
  const std::uint64_t base = resolve_seed(cfg);
  std::vector<std::string> families = kBatchFamilies;
  if (!cfg.family.empty()) {
    if (std::find(families.begin(), families.end(), cfg.family) == families.end())
      throw ConfigError("report runs one of: cubic3, quartic6, quintic2a, quintic_case3, sexticA, sexticB");
    families = {cfg.family};
  }
  std::vector<BatchRun> runs;
  for (const auto& f : families)
    for (int i = 0; i < cfg.seeds; ++i) runs.push_back({f, base + static_cast<std::uint64_t>(i), {}, false});

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      run_one(runs[i], cfg);
      if (cfg.verbosity > 0)
        std::cerr << runs[i].family << " seed " << runs[i].seed << ": " << (runs[i].pass ? "PASS" : "FAIL") << "\n";
    }
  };
  const unsigned jobs = std::max(1u, cfg.jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < jobs; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  bool all = true;
  json entries = json::array();
  std::map<std::string, std::pair<int, int>> per_family;  // passes, rejected draws
  for (const auto& r : runs) {
    all = all && r.pass;
    json e = r.entry;
    e["pass"] = r.pass;
    entries.push_back(e);
    auto& pf = per_family[r.family];
    pf.first += r.pass;
    pf.second += e.value("rejected_draws", 0);
  }
  json summary = json::object();
  for (const auto& [f, v] : per_family) {
    const int draws = cfg.seeds + v.second;
    summary[f] = {{"passed", v.first}, {"runs", cfg.seeds}, {"rejected_draws", v.second},
                  {"rejection_rate", static_cast<double>(v.second) / draws}};
  }
  const json doc = {{"schema_version", tricusp_schema_version()},
                    {"tool", {{"name", "tricusp"}, {"version", tricusp_version()}}},
                    {"config", {{"prime", cfg.prime}, {"oracle_prime", cfg.oracle_prime}, {"base_seed", base},
                                {"seeds", cfg.seeds}, {"families", families}}},
                    {"runs", entries},
                    {"summary", summary},
                    {"all_pass", all}};
  if (cfg.json_output || !cfg.out.empty()) {
    emit(cfg, doc.dump(2));
  }
  if (!cfg.json_output) {
    std::ostringstream o;
    o << "base seed " << base << ", GF(" << cfg.prime << "), oracle GF(" << cfg.oracle_prime << ")\n";
    o << "family          seed        verdict  points  length  oracle\n";
    for (const auto& e : entries) {
      char line[256];
      std::snprintf(line, sizeof line, "%-15s %-11llu %-8s %6s  %6s  %s\n", e.at("family").get<std::string>().c_str(),
                    static_cast<unsigned long long>(e.at("seed").get<std::uint64_t>()),
                    e.at("pass").get<bool>() ? "PASS" : "FAIL",
                    e.contains("singular_points") ? e.at("singular_points").dump().c_str() : "-",
                    e.contains("total_length") ? e.at("total_length").dump().c_str() : "-",
                    e.at("oracle").value("agree", false)
                        ? ("agree (" + e.at("oracle").at("scan_count").dump() + " rational)").c_str()
                        : "MISMATCH");
      o << line;
      for (const auto& f : e.at("failures")) o << "    " << f.get<std::string>() << "\n";
    }
    o << (all ? "all PASS" : "some runs FAIL") << "\n";
    if (cfg.out.empty())
      std::cout << o.str();
    else
      std::cerr << o.str();
  }
  return all ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Surfaces with 3-divisible sets of cusps: construction, census and certificates over finite fields"};
  app.set_version_flag("--version", std::string(tricusp_version()));
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "cubic3, quartic6, quintic2a, quintic_case3, quintic_degeneration, sexticA, sexticB");
    sub->add_option("--seed", cfg.seed, "Seed (random and recorded when omitted)");
    sub->add_option("--prime", cfg.prime, "Working prime p")->capture_default_str();
    sub->add_option("--oracle-prime", cfg.oracle_prime, "Prime q for brute-force scans (<= 257)")->capture_default_str();
    sub->add_option("--input", cfg.input, "Polynomial text in x0..x3, or a file with text or instance JSON");
    sub->add_option("--out", cfg.out, "Write output to this file");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();
    sub->add_flag("--json", cfg.json_output, "JSON output");
    sub->add_option("--t", cfg.t, "Degeneration parameter for quintic_degeneration");
    sub->add_flag("-v,--verbose", cfg.verbosity, "More detail (repeatable)");
  };

  auto* construct_cmd = app.add_subcommand("construct", "Emit a verified family member as JSON");
  auto* verify_cmd = app.add_subcommand("verify", "Full verification of a family member or a given surface");
  verify_cmd->add_flag("--no-timings", cfg.no_timings, "Omit timings so reruns give identical output");
  auto* classify_cmd = app.add_subcommand("classify", "Singular-point census of an arbitrary surface");
  auto* oracle_cmd = app.add_subcommand("oracle-scan", "Brute-force singular points over P^3(F_q)");
  auto* table_cmd = app.add_subcommand("table", "Minimal number of cusps by degree");
  auto* report_cmd = app.add_subcommand("report", "Batch: six families over a run of seeds, with oracle checks");
  for (auto* sub : {construct_cmd, verify_cmd, classify_cmd, oracle_cmd, table_cmd, report_cmd}) add_common(sub);
  oracle_cmd->add_flag("--cross-check", cfg.cross, "Compare with the solver's rational points");
  report_cmd->add_option("--seeds", cfg.seeds, "Seeds per family (base, base+1, ...)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*construct_cmd) return cmd_construct(cfg);
    if (*verify_cmd) return cmd_verify(cfg);
    if (*classify_cmd) return cmd_classify(cfg);
    if (*oracle_cmd) return cmd_oracle(cfg);
    if (*table_cmd) return cmd_table(cfg);
    if (*report_cmd) return cmd_report(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const RunFailure& e) {
    std::cerr << "failed: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
