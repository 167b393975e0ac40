#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "paraac/decision_tree.hpp"
#include "paraac/graph.hpp"
#include "paraac/random_models.hpp"
#include "paraac/reduction.hpp"

namespace paraac {

// --- shared config machinery -------------------------------------------

uint64_t fnv1a64(std::string_view text);

// "# {json}\n" metadata line stamped on every emitted file: tool version,
// hash of the effective config, master seed.
std::string meta_comment_line(const nlohmann::json& config, uint64_t master_seed);
nlohmann::json meta_object(const nlohmann::json& config, uint64_t master_seed);

// rounds values that sit within 1e-9 of an integer before applying ceil/floor,
// so powers like 256^0.5 stay exact
long long ceil_snapped(double x);
long long floor_snapped(double x);

// k(n) presets: const(c); log2 = floor(log2 n); sqrt_log2 = ceil(sqrt(log2 n));
// explicit per-n table.
struct KSchedule {
  enum class Kind { Const, Log2, SqrtLog2, Explicit };
  Kind kind = Kind::SqrtLog2;
  int value = 0;
  std::vector<std::pair<int, int>> table;  // (n, k)

  int k_of(int n) const;
  static KSchedule from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// approximation ratio rho: const(c), power(alpha) meaning rho(k) = k^alpha,
// or an explicit table rho(1), rho(2), ... (extended by its last entry).
// validate() checks numerically on the grid k <= 10^6 that k/rho(k) is
// nondecreasing and grows (the unboundedness proxy documented in the README).
struct RhoSpec {
  enum class Kind { Const, Power, Table };
  Kind kind = Kind::Const;
  double value = 1.0;
  double alpha = 0.0;
  std::vector<double> table;

  double rho(double k) const;
  void validate() const;
  static RhoSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// size budget f: power(t) meaning f(k) = k^t, or exp2 meaning f(k) = 2^k
struct FSpec {
  enum class Kind { Power, Exp2 };
  Kind kind = Kind::Exp2;
  double t = 1.0;

  double f(double k) const;
  long long f_inverse(long long n) const;  // max({l | f(l) <= n} ∪ {0})
  static FSpec from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// --- planted indistinguishability ---------------------------------------

struct PlantedConfig {
  std::vector<int> n_values = {32, 64, 128, 256};
  KSchedule k_schedule;  // default ceil(sqrt(log2 n))
  double xi = 0.5;       // planted size c(n) = ceil(n^xi)
  std::vector<std::string> circuits = {"const0", "const1",  "edge12",
                                       "triangle", "star3", "clique4"};
  long long trials = 10000;

  static PlantedConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct PlantedRow {
  std::string circuit;
  int n = 0;
  int k = 0;
  int c = 0;
  double q = 0;
  long long trials = 0;
  long long agree_count = 0;
  double agreement = 0;
  double wilson_lo = 0;
  double wilson_hi = 0;
  uint64_t seed = 0;
};

std::vector<PlantedRow> run_planted(const PlantedConfig& cfg, uint64_t master_seed);
std::string planted_csv(const PlantedConfig& cfg, uint64_t master_seed);

// Pr[probe(edge {1,2}) agrees] = 1 - (1-q) c(c-1) / (n(n-1))
double edge_probe_agreement_exact(int n, double q, int c);

// --- switching sweep -----------------------------------------------------

struct SwitchingRowConfig {
  std::string function;  // zoo DNF name
  int n = 0;
  int ell = 0;
  double q = 0;
  int s = 0;
};

struct SwitchingConfig {
  std::vector<SwitchingRowConfig> rows;
  long long trials = 10000;

  static SwitchingConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// The shipped sweep mixes rows where the tail bound is informative and the
// small-p hypothesis holds with rows that are reported only.
SwitchingConfig default_switching_config();

std::vector<SwitchingTailResult> run_switching(const SwitchingConfig& cfg, uint64_t master_seed);
std::string switching_csv(const SwitchingConfig& cfg, uint64_t master_seed);

// --- verification harness ------------------------------------------------

struct VerifyConfig {
  std::vector<std::string> suites = {"reduction_equivalence", "wsat_delta_g",
                                     "colorcoding_oracle"};
  int reduction_n = 4;
  std::vector<int> reduction_k = {2, 3};
  int wsat_n_max = 4;
  int cc_universe_max = 16;
  int cc_predicates = 200;
  int cc_k_max = 6;
  std::string inject_fault;  // test fixture: "delta_g" miscompiles the clause set

  static VerifyConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SuiteResult {
  std::string name;
  long long checked = 0;
  long long mismatches = 0;
  double seconds = 0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  std::vector<std::string> warnings;
  bool all_pass = true;
};

VerifyReport run_verify(const VerifyConfig& cfg, uint64_t master_seed);
std::string verify_report_json(const VerifyConfig& cfg, const VerifyReport& report,
                               uint64_t master_seed);

// --- gap instances ---------------------------------------------------------

struct GapConfig {
  long long n = 256;
  FSpec f;
  RhoSpec rho;
  long long stats_samples = 0;  // 0 = emit one instance pair

  static GapConfig from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

// largest k >= 1 with 2k+1 <= min(f^{-1}(n), sqrt(n)/rho(sqrt(n))), capped at
// log2 n; throws when no k qualifies
int gap_parameter_k(const GapConfig& cfg);

struct GapInstance {
  int k = 0;
  int target = 0;  // 2k+1
  int c = 0;       // ceil(sqrt(n))
  double q = 0;    // n^{-1/k}
  PlantedSample sample;
  bool planted_clique_ok = false;   // A verified as a clique => cn(yes) >= c
  bool base_below_target = false;   // cn(G) < 2k+1 (holds whp only)
};

GapInstance run_gap_instance(const GapConfig& cfg, uint64_t master_seed, uint64_t stream = 0);

struct GapStats {
  int k = 0;
  int target = 0;
  int c = 0;
  double q = 0;
  long long samples = 0;
  long long planted_ok_count = 0;
  long long base_at_or_above_target = 0;  // cn(G) >= 2k+1
  double dirty_fraction = 0;
};

GapStats run_gap_stats(const GapConfig& cfg, uint64_t master_seed);

}  // namespace paraac
