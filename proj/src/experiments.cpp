#include "paraac/experiments.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "paraac/colorcoding.hpp"
#include "paraac/formula.hpp"
#include "paraac/stats.hpp"
#include "paraac/version.hpp"
#include "paraac/zoo.hpp"

namespace paraac {

uint64_t fnv1a64(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

nlohmann::json meta_object(const nlohmann::json& config, uint64_t master_seed) {
  std::ostringstream hash;
  hash << std::hex << fnv1a64(config.dump());
  return nlohmann::json{{"tool", "paraac-lab"},
                        {"version", kVersion},
                        {"config_hash", hash.str()},
                        {"master_seed", master_seed}};
}

std::string meta_comment_line(const nlohmann::json& config, uint64_t master_seed) {
  return "# " + meta_object(config, master_seed).dump() + "\n";
}

namespace {

double snap(double x) {
  double r = std::nearbyint(x);
  if (std::abs(x - r) < 1e-9 * std::max(1.0, std::abs(x))) return r;
  return x;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

long long ceil_snapped(double x) { return (long long)std::ceil(snap(x)); }
long long floor_snapped(double x) { return (long long)std::floor(snap(x)); }

int KSchedule::k_of(int n) const {
  if (n < 2) throw std::invalid_argument("k schedule needs n >= 2");
  switch (kind) {
    case Kind::Const:
      if (value < 1) throw std::invalid_argument("const k schedule needs k >= 1");
      return value;
    case Kind::Log2:
      return int(floor_snapped(std::log2(double(n))));
    case Kind::SqrtLog2:
      return int(ceil_snapped(std::sqrt(std::log2(double(n)))));
    case Kind::Explicit:
      for (const auto& [tn, tk] : table)
        if (tn == n) return tk;
      throw std::invalid_argument("explicit k schedule has no entry for n = " + std::to_string(n));
  }
  return 1;
}

KSchedule KSchedule::from_json(const nlohmann::json& j) {
  KSchedule s;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") {
    s.kind = Kind::Const;
    s.value = j.at("value").get<int>();
  } else if (kind == "log2") {
    s.kind = Kind::Log2;
  } else if (kind == "sqrt_log2") {
    s.kind = Kind::SqrtLog2;
  } else if (kind == "explicit") {
    s.kind = Kind::Explicit;
    for (const auto& [n, k] : j.at("values").items())
      s.table.emplace_back(std::stoi(n), k.get<int>());
  } else {
    throw std::invalid_argument("unknown k schedule kind '" + kind + "'");
  }
  return s;
}

nlohmann::json KSchedule::to_json() const {
  switch (kind) {
    case Kind::Const:
      return {{"kind", "const"}, {"value", value}};
    case Kind::Log2:
      return {{"kind", "log2"}};
    case Kind::SqrtLog2:
      return {{"kind", "sqrt_log2"}};
    case Kind::Explicit: {
      nlohmann::json values = nlohmann::json::object();
      for (const auto& [n, k] : table) values[std::to_string(n)] = k;
      return {{"kind", "explicit"}, {"values", values}};
    }
  }
  return {};
}

double RhoSpec::rho(double k) const {
  switch (kind) {
    case Kind::Const:
      return value;
    case Kind::Power:
      return std::pow(k, alpha);
    case Kind::Table: {
      if (table.empty()) throw std::invalid_argument("empty rho table");
      long long i = std::min<long long>((long long)std::ceil(k), (long long)table.size());
      return table[size_t(std::max<long long>(1, i)) - 1];
    }
  }
  return 1.0;
}

void RhoSpec::validate() const {
  // rho must map to [1, inf) and k -> k/rho(k) must be nondecreasing and
  // unbounded; checked on a k <= 10^6 grid with growth as the proxy for
  // unboundedness
  double prev = 0;
  double first = 0;
  for (long long k = 1; k <= 1000000; k = k < 100 ? k + 1 : k + k / 64) {
    double r = rho(double(k));
    if (!(r >= 1.0)) throw std::invalid_argument("rho must be >= 1");
    double g = double(k) / r;
    if (g + 1e-12 < prev)
      throw std::invalid_argument("k/rho(k) must be nondecreasing");
    prev = std::max(prev, g);
    if (k == 1) first = g;
  }
  if (!(prev >= std::max(2.0, 1.01 * first)))
    throw std::invalid_argument("k/rho(k) must be unbounded (no growth on the test grid)");
}

RhoSpec RhoSpec::from_json(const nlohmann::json& j) {
  RhoSpec s;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "const") {
    s.kind = Kind::Const;
    s.value = j.at("value").get<double>();
  } else if (kind == "power") {
    s.kind = Kind::Power;
    s.alpha = j.at("alpha").get<double>();
  } else if (kind == "table") {
    s.kind = Kind::Table;
    s.table = j.at("values").get<std::vector<double>>();
  } else {
    throw std::invalid_argument("unknown rho kind '" + kind + "'");
  }
  return s;
}

nlohmann::json RhoSpec::to_json() const {
  switch (kind) {
    case Kind::Const:
      return {{"kind", "const"}, {"value", value}};
    case Kind::Power:
      return {{"kind", "power"}, {"alpha", alpha}};
    case Kind::Table:
      return {{"kind", "table"}, {"values", table}};
  }
  return {};
}

double FSpec::f(double k) const {
  return kind == Kind::Power ? std::pow(k, t) : std::exp2(k);
}

long long FSpec::f_inverse(long long n) const {
  long long best = 0;
  for (long long l = 1; l <= 4096; ++l) {
    double v = snap(f(double(l)));
    if (v <= double(n))
      best = l;
    else
      break;
  }
  return best;
}

FSpec FSpec::from_json(const nlohmann::json& j) {
  FSpec s;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") {
    s.kind = Kind::Power;
    s.t = j.at("t").get<double>();
    if (!(s.t >= 1.0)) throw std::invalid_argument("power f needs t >= 1");
  } else if (kind == "exp2") {
    s.kind = Kind::Exp2;
  } else {
    throw std::invalid_argument("unknown f kind '" + kind + "'");
  }
  return s;
}

nlohmann::json FSpec::to_json() const {
  if (kind == Kind::Power) return {{"kind", "power"}, {"t", t}};
  return {{"kind", "exp2"}};
}

// --- planted -------------------------------------------------------------

PlantedConfig PlantedConfig::from_json(const nlohmann::json& j) {
  PlantedConfig cfg;
  if (j.contains("n")) cfg.n_values = j.at("n").get<std::vector<int>>();
  if (j.contains("k_schedule")) cfg.k_schedule = KSchedule::from_json(j.at("k_schedule"));
  if (j.contains("xi")) cfg.xi = j.at("xi").get<double>();
  if (j.contains("circuits")) cfg.circuits = j.at("circuits").get<std::vector<std::string>>();
  if (j.contains("trials")) cfg.trials = j.at("trials").get<long long>();
  if (!(cfg.xi >= 0.0 && cfg.xi < 1.0)) throw std::invalid_argument("xi must lie in [0,1)");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  return cfg;
}

nlohmann::json PlantedConfig::to_json() const {
  return {{"n", n_values},
          {"k_schedule", k_schedule.to_json()},
          {"xi", xi},
          {"circuits", circuits},
          {"trials", trials}};
}

std::vector<PlantedRow> run_planted(const PlantedConfig& cfg, uint64_t master_seed) {
  if (!(cfg.xi >= 0.0 && cfg.xi < 1.0)) throw std::invalid_argument("xi must lie in [0,1)");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  std::vector<PlantedRow> rows;
  uint64_t row_index = 0;
  for (const std::string& name : cfg.circuits) {
    const ZooCircuit& zoo = find_zoo_circuit(name);
    for (int n : cfg.n_values) {
      if (n < zoo.min_n)
        throw std::invalid_argument("circuit " + name + " needs n >= " +
                                    std::to_string(zoo.min_n));
      PlantedRow row;
      row.circuit = name;
      row.n = n;
      row.k = cfg.k_schedule.k_of(n);
      row.c = int(ceil_snapped(std::pow(double(n), cfg.xi)));
      if (row.c > n) throw std::invalid_argument("planted size exceeds n");
      row.q = std::pow(double(n), -1.0 / row.k);
      row.trials = cfg.trials;
      row.seed = master_seed;
      for (long long t = 0; t < cfg.trials; ++t) {
        RngStream rng(master_seed, row_index * uint64_t(cfg.trials) + uint64_t(t));
        PlantedSample s = sample_planted(n, row.q, row.c, rng);
        if (zoo.eval(s.base) == zoo.eval(s.planted_graph)) ++row.agree_count;
      }
      row.agreement = double(row.agree_count) / double(cfg.trials);
      WilsonInterval wi = wilson_99(row.agree_count, cfg.trials);
      row.wilson_lo = wi.lo;
      row.wilson_hi = wi.hi;
      rows.push_back(std::move(row));
      ++row_index;
    }
  }
  return rows;
}

std::string planted_csv(const PlantedConfig& cfg, uint64_t master_seed) {
  std::ostringstream out;
  out << meta_comment_line(cfg.to_json(), master_seed);
  out << "circuit,n,k,c,q,trials,agreement,wilson_lo,wilson_hi,seed\n";
  for (const PlantedRow& r : run_planted(cfg, master_seed))
    out << r.circuit << ',' << r.n << ',' << r.k << ',' << r.c << ',' << fmt_double(r.q) << ','
        << r.trials << ',' << fmt_double(r.agreement) << ',' << fmt_double(r.wilson_lo) << ','
        << fmt_double(r.wilson_hi) << ',' << r.seed << '\n';
  return out.str();
}

double edge_probe_agreement_exact(int n, double q, int c) {
  double planted = double(c) * double(c - 1) / (double(n) * double(n - 1));
  return 1.0 - (1.0 - q) * planted;
}

// --- switching -------------------------------------------------------------

SwitchingConfig SwitchingConfig::from_json(const nlohmann::json& j) {
  SwitchingConfig cfg;
  cfg.rows.clear();
  for (const auto& rj : j.at("rows")) {
    SwitchingRowConfig row;
    row.function = rj.at("function").get<std::string>();
    row.n = rj.at("n").get<int>();
    row.ell = rj.at("ell").get<int>();
    row.q = rj.at("q").get<double>();
    row.s = rj.at("s").get<int>();
    cfg.rows.push_back(row);
  }
  if (j.contains("trials")) cfg.trials = j.at("trials").get<long long>();
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  return cfg;
}

nlohmann::json SwitchingConfig::to_json() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& r : rows)
    rows_json.push_back({{"function", r.function},
                         {"n", r.n},
                         {"ell", r.ell},
                         {"q", r.q},
                         {"s", r.s}});
  return {{"rows", rows_json}, {"trials", trials}};
}

SwitchingConfig default_switching_config() {
  SwitchingConfig cfg;
  cfg.trials = 10000;
  cfg.rows = {
      // bound < 1 and hypothesis satisfied: the lemma is checkable here
      {"edge12", 64, 2, 0.5, 2},
      {"edge12", 128, 2, 0.5, 1},
      {"wedge", 256, 2, 0.5, 2},
      {"triangle", 256, 2, 0.5, 2},
      {"matching2", 512, 2, 0.5, 2},
      // reported only: hypothesis on p fails or the bound is vacuous
      {"edge12", 64, 2, 0.25, 2},
      {"triangle", 12, 4, 0.25, 2},
      {"triangle", 64, 3, 0.25, 2},
      {"wedge", 64, 3, 0.5, 2},
  };
  return cfg;
}

std::vector<SwitchingTailResult> run_switching(const SwitchingConfig& cfg, uint64_t master_seed) {
  std::vector<SwitchingTailResult> out;
  uint64_t row_index = 0;
  for (const SwitchingRowConfig& row : cfg.rows) {
    DnfFunction f = make_dnf_function(row.function, row.n);
    out.push_back(switching_tail(row.n, row.ell, row.q, f, row.s, cfg.trials, master_seed,
                                 row_index * uint64_t(cfg.trials)));
    ++row_index;
  }
  return out;
}

std::string switching_csv(const SwitchingConfig& cfg, uint64_t master_seed) {
  std::ostringstream out;
  out << meta_comment_line(cfg.to_json(), master_seed);
  out << "function," << SwitchingTailResult::csv_header() << '\n';
  std::vector<SwitchingTailResult> results = run_switching(cfg, master_seed);
  for (size_t i = 0; i < results.size(); ++i)
    out << cfg.rows[i].function << ',' << results[i].csv_row() << '\n';
  return out.str();
}

// --- verify ----------------------------------------------------------------

VerifyConfig VerifyConfig::from_json(const nlohmann::json& j) {
  VerifyConfig cfg;
  if (j.contains("suites")) cfg.suites = j.at("suites").get<std::vector<std::string>>();
  if (j.contains("reduction_n")) cfg.reduction_n = j.at("reduction_n").get<int>();
  if (j.contains("reduction_k")) cfg.reduction_k = j.at("reduction_k").get<std::vector<int>>();
  if (j.contains("wsat_n_max")) cfg.wsat_n_max = j.at("wsat_n_max").get<int>();
  if (j.contains("cc_universe_max")) cfg.cc_universe_max = j.at("cc_universe_max").get<int>();
  if (j.contains("cc_predicates")) cfg.cc_predicates = j.at("cc_predicates").get<int>();
  if (j.contains("cc_k_max")) cfg.cc_k_max = j.at("cc_k_max").get<int>();
  if (j.contains("inject_fault")) cfg.inject_fault = j.at("inject_fault").get<std::string>();
  return cfg;
}

nlohmann::json VerifyConfig::to_json() const {
  return {{"suites", suites},
          {"reduction_n", reduction_n},
          {"reduction_k", reduction_k},
          {"wsat_n_max", wsat_n_max},
          {"cc_universe_max", cc_universe_max},
          {"cc_predicates", cc_predicates},
          {"cc_k_max", cc_k_max},
          {"inject_fault", inject_fault}};
}

namespace {

SuiteResult run_reduction_suite(const VerifyConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  EquivalenceReport rep =
      verify_equivalence(cfg.reduction_n, cfg.reduction_k, VerifyMode::exhaustive());
  SuiteResult res;
  res.name = "reduction_equivalence";
  res.checked = rep.pairs_checked;
  res.mismatches = (long long)rep.mismatches.size();
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SuiteResult run_wsat_suite(const VerifyConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  res.name = "wsat_delta_g";
  for (int n = 1; n <= cfg.wsat_n_max; ++n) {
    int pairs = int(pair_count(n));
    for (uint32_t mask = 0; mask < (uint32_t(1) << pairs); ++mask) {
      Graph g(n);
      for (int e = 0; e < pairs; ++e)
        if (mask >> e & 1) {
          Edge edge = edge_at(n, e);
          g.add_edge(edge.u, edge.v);
        }
      PropFormula delta = build_delta_g(g);
      if (cfg.inject_fault == "delta_g" && !delta.children.empty())
        delta.children.pop_back();  // deliberately broken clause set
      for (int k = 0; k <= n; ++k) {
        ++res.checked;
        if (has_clique(g, k) != weighted_sat_bruteforce(delta, k)) ++res.mismatches;
      }
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

SuiteResult run_colorcoding_suite(const VerifyConfig& cfg, uint64_t master_seed) {
  auto start = std::chrono::steady_clock::now();
  SuiteResult res;
  res.name = "colorcoding_oracle";
  for (int i = 0; i < cfg.cc_predicates; ++i) {
    RngStream rng(master_seed, uint64_t(i));
    uint64_t universe = 1 + rng.next_below(uint64_t(cfg.cc_universe_max));
    std::vector<bool> holds(universe + 1);
    long long count = 0;
    for (uint64_t u = 1; u <= universe; ++u) {
      holds[u] = rng.bernoulli(0.5);
      count += holds[u];
    }
    auto pred = [&](uint64_t u) { return bool(holds[u]); };
    for (int k = 0; k <= cfg.cc_k_max; ++k) {
      ++res.checked;
      if (distinct_witness_decide(universe, pred, k) != (count >= k)) ++res.mismatches;
    }
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

VerifyReport run_verify(const VerifyConfig& cfg, uint64_t master_seed) {
  VerifyReport report;
  if (cfg.suites.empty()) {
    report.warnings.push_back("empty scope: no suites selected, passing vacuously");
    return report;
  }
  for (const std::string& suite : cfg.suites) {
    SuiteResult res;
    if (suite == "reduction_equivalence")
      res = run_reduction_suite(cfg);
    else if (suite == "wsat_delta_g")
      res = run_wsat_suite(cfg);
    else if (suite == "colorcoding_oracle")
      res = run_colorcoding_suite(cfg, master_seed);
    else
      throw std::invalid_argument("unknown verify suite '" + suite + "'");
    if (res.mismatches > 0) report.all_pass = false;
    report.suites.push_back(std::move(res));
  }
  return report;
}

std::string verify_report_json(const VerifyConfig& cfg, const VerifyReport& report,
                               uint64_t master_seed) {
  nlohmann::json j;
  j["meta"] = meta_object(cfg.to_json(), master_seed);
  nlohmann::json suites = nlohmann::json::array();
  for (const SuiteResult& s : report.suites)
    suites.push_back({{"name", s.name},
                      {"checked", s.checked},
                      {"mismatches", s.mismatches},
                      {"pass", s.mismatches == 0}});
  j["suites"] = suites;
  j["warnings"] = report.warnings;
  j["all_pass"] = report.all_pass;
  return j.dump(2) + "\n";
}

// --- gap ---------------------------------------------------------------------

GapConfig GapConfig::from_json(const nlohmann::json& j) {
  GapConfig cfg;
  if (j.contains("n")) cfg.n = j.at("n").get<long long>();
  if (j.contains("f")) cfg.f = FSpec::from_json(j.at("f"));
  if (j.contains("rho")) cfg.rho = RhoSpec::from_json(j.at("rho"));
  if (j.contains("stats_samples")) cfg.stats_samples = j.at("stats_samples").get<long long>();
  return cfg;
}

nlohmann::json GapConfig::to_json() const {
  return {{"n", n},
          {"f", f.to_json()},
          {"rho", rho.to_json()},
          {"stats_samples", stats_samples}};
}

int gap_parameter_k(const GapConfig& cfg) {
  if (cfg.n < 2) throw std::invalid_argument("gap instances need n >= 2");
  cfg.rho.validate();
  double sqrt_n = std::sqrt(double(cfg.n));
  double budget = std::min(double(cfg.f.f_inverse(cfg.n)), sqrt_n / cfg.rho.rho(sqrt_n));
  long long k = floor_snapped((budget - 1.0) / 2.0);
  k = std::min(k, floor_snapped(std::log2(double(cfg.n))));
  if (k < 1)
    throw std::invalid_argument("no k >= 1 satisfies 2k+1 <= min(f^{-1}(n), sqrt(n)/rho)");
  return int(k);
}

GapInstance run_gap_instance(const GapConfig& cfg, uint64_t master_seed, uint64_t stream) {
  GapInstance inst;
  inst.k = gap_parameter_k(cfg);
  inst.target = 2 * inst.k + 1;
  inst.c = int(ceil_snapped(std::sqrt(double(cfg.n))));
  inst.q = std::pow(double(cfg.n), -1.0 / inst.k);
  RngStream rng(master_seed, stream);
  inst.sample = sample_planted(int(cfg.n), inst.q, inst.c, rng);
  inst.planted_clique_ok = is_clique(inst.sample.planted_graph, inst.sample.planted_set);
  inst.base_below_target = !has_clique(inst.sample.base, inst.target);
  return inst;
}

GapStats run_gap_stats(const GapConfig& cfg, uint64_t master_seed) {
  if (cfg.stats_samples < 1) throw std::invalid_argument("stats mode needs samples >= 1");
  GapStats stats;
  stats.samples = cfg.stats_samples;
  for (long long i = 0; i < cfg.stats_samples; ++i) {
    GapInstance inst = run_gap_instance(cfg, master_seed, uint64_t(i));
    stats.k = inst.k;
    stats.target = inst.target;
    stats.c = inst.c;
    stats.q = inst.q;
    if (inst.planted_clique_ok) ++stats.planted_ok_count;
    if (!inst.base_below_target) ++stats.base_at_or_above_target;
  }
  stats.dirty_fraction = double(stats.base_at_or_above_target) / double(stats.samples);
  return stats;
}

}  // namespace paraac
