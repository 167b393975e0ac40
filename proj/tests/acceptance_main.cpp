// Acceptance suite: one line per criterion, nonzero exit when any fails.
// argv[1] is the paraac-lab binary, used by the reproducibility criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "paraac/colorcoding.hpp"
#include "paraac/decision_tree.hpp"
#include "paraac/experiments.hpp"
#include "paraac/formula.hpp"
#include "paraac/graph.hpp"
#include "paraac/reduction.hpp"
#include "paraac/restriction.hpp"
#include "paraac/zoo.hpp"

using namespace paraac;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
  int id;
  std::string label;
  Clock::time_point start = Clock::now();

  Criterion(int id_, std::string label_) : id(id_), label(std::move(label_)) {}

  void report(bool pass, const std::string& detail, double budget_seconds) {
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    bool in_budget = elapsed < budget_seconds;
    bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s  %2d  %s — %s [%.1fs / budget %.0fs]\n", ok ? "PASS" : "FAIL", id,
                label.c_str(), detail.c_str(), elapsed, budget_seconds);
    std::fflush(stdout);
  }
};

Graph graph_from_mask(int n, uint32_t mask) {
  Graph g(n);
  for (int e = 0; e < pair_count(n); ++e)
    if (mask >> e & 1) {
      Edge edge = edge_at(n, e);
      g.add_edge(edge.u, edge.v);
    }
  return g;
}

void criterion_1_reduction() {
  Criterion c(1, "clique->dominating-set equivalence");
  EquivalenceReport exhaustive = verify_equivalence(4, {2, 3}, VerifyMode::exhaustive());
  EquivalenceReport sampled = verify_equivalence(6, {2, 3}, VerifyMode::sampled(200, 20260810));
  std::ostringstream d;
  d << "exhaustive n=4: " << exhaustive.pairs_checked << " pairs, "
    << exhaustive.mismatches.size() << " mismatches; sampled n=6: " << sampled.pairs_checked
    << " pairs, " << sampled.mismatches.size() << " mismatches";
  c.report(exhaustive.ok() && sampled.ok() && exhaustive.graphs_in_scope == 63 &&
               sampled.graphs_in_scope == 200,
           d.str(), 300 + 1800);
}

void criterion_2_wsat() {
  Criterion c(2, "delta_G weight-k satisfiability == k-clique, all graphs on [5]");
  long long checked = 0, mismatches = 0;
  for (uint32_t mask = 0; mask < 1024; ++mask) {
    Graph g = graph_from_mask(5, mask);
    PropFormula delta = build_delta_g(g);
    for (int k = 0; k <= 5; ++k) {
      ++checked;
      if (has_clique(g, k) != weighted_sat_bruteforce(delta, k)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << checked << " pairs, " << mismatches << " mismatches";
  c.report(mismatches == 0 && checked == 1024 * 6, d.str(), 60);
}

void criterion_3_gamma11() {
  Criterion c(3, "Gamma_{1,1} closed form == brute force, all 3^10 polarity patterns");
  const int nvars = 10;
  long long checked = 0, mismatches = 0;
  std::vector<int> pattern(nvars);
  long long total = 1;
  for (int i = 0; i < nvars; ++i) total *= 3;
  for (long long code = 0; code < total; ++code) {
    long long rest = code;
    for (int i = 0; i < nvars; ++i) {
      pattern[i] = int(rest % 3);
      rest /= 3;
    }
    std::vector<PropFormula> lits;
    for (int i = 0; i < nvars; ++i) {
      std::string name = "v" + std::to_string(i + 1);
      if (pattern[i] == 1) lits.push_back(PropFormula::pos(name));
      if (pattern[i] == 2) lits.push_back(PropFormula::neg(name));
    }
    PropFormula f = PropFormula::and_of(std::move(lits));
    for (int i = 0; i < nvars; ++i) f.declared_vars.push_back("v" + std::to_string(i + 1));
    for (int k = 0; k <= 10; ++k) {
      ++checked;
      if (gamma11_decide(f, k) != weighted_sat_bruteforce(f, k)) ++mismatches;
    }
  }
  std::ostringstream d;
  d << checked << " pairs, " << mismatches << " mismatches";
  c.report(mismatches == 0, d.str(), 60);
}

// every restriction on [4]: all star supports x all fixed patterns
template <class Fn>
void for_each_restriction_on_4(Fn&& fn) {
  const int n = 4;
  for (uint32_t star_mask = 0; star_mask < 16; ++star_mask) {
    VertexSet star(n);
    for (int v = 1; v <= n; ++v)
      if (star_mask >> (v - 1) & 1) star.insert(v);
    std::vector<int> free_positions;
    for (int e = 0; e < pair_count(n); ++e) {
      Edge edge = edge_at(n, e);
      if (!(star.contains(edge.u) && star.contains(edge.v))) free_positions.push_back(e);
    }
    for (uint32_t bits = 0; bits < (1u << free_positions.size()); ++bits) {
      std::vector<uint64_t> fixed(1, 0);
      for (size_t i = 0; i < free_positions.size(); ++i)
        if (bits >> i & 1) fixed[0] |= uint64_t(1) << free_positions[i];
      fn(Restriction(n, star, fixed));
    }
  }
}

void criterion_4_restriction_semantics() {
  Criterion c(4, "restriction semantics F|mu(S) = F(S u mu) on [4]");
  const int n = 4;
  long long checked = 0, violations = 0;
  std::vector<GraphPredicate> functions;
  RngStream rng(31337, 0);
  for (int i = 0; i < 1000; ++i) {
    uint64_t table = rng.next_u64();
    functions.push_back([table](const Graph& g) {
      uint32_t row = 0;
      for (int e = 0; e < pair_count(4); ++e) {
        Edge edge = edge_at(4, e);
        if (g.has_edge(edge.u, edge.v)) row |= uint32_t(1) << e;
      }
      return bool(table >> row & 1);
    });
  }
  for (const ZooCircuit& z : circuit_zoo())
    if (z.min_n <= n) functions.push_back(z.eval);

  std::vector<Restriction> mus;
  for_each_restriction_on_4([&](const Restriction& mu) { mus.push_back(mu); });

  for (const GraphPredicate& f : functions)
    for (const Restriction& mu : mus) {
      BoolFunc restricted = restrict_function(n, f, mu);
      std::vector<Edge> stars = mu.star_edges();
      Graph combined = mu.fixed_one_graph();
      for (uint32_t s = 0; s < restricted.row_count(); ++s) {
        for (size_t i = 0; i < stars.size(); ++i)
          combined.set_edge(stars[i].u, stars[i].v, (s >> i) & 1u);
        ++checked;
        if (restricted.value(s) != f(combined)) ++violations;
      }
    }
  std::ostringstream d;
  d << functions.size() << " functions x " << mus.size() << " restrictions, " << checked
    << " rows, " << violations << " violations";
  c.report(violations == 0 && mus.size() == 545, d.str(), 60);
}

void criterion_5_composition() {
  Criterion c(5, "composed star support uniform over ([5] choose 3), exact counts");
  const int n = 5, ell1 = 4, ell2 = 3;
  std::map<std::vector<Vertex>, long long> hits;
  long long total = 0;
  for (uint32_t m1 = 0; m1 < (1u << n); ++m1) {
    if (std::popcount(m1) != ell1) continue;
    VertexSet u1(n);
    for (int v = 1; v <= n; ++v)
      if (m1 >> (v - 1) & 1) u1.insert(v);
    Restriction mu(n, u1, {});
    for (uint32_t m2 = 0; m2 < (1u << ell1); ++m2) {
      if (std::popcount(m2) != ell2) continue;
      VertexSet u2(ell1);
      for (int v = 1; v <= ell1; ++v)
        if (m2 >> (v - 1) & 1) u2.insert(v);
      ++hits[compose_restrictions(mu, Restriction(ell1, u2, {})).star_support().to_vector()];
      ++total;
    }
  }
  bool uniform = hits.size() == 10;
  for (const auto& [subset, count] : hits)
    if (count * 10 != total) uniform = false;  // total-variation distance 0
  std::ostringstream d;
  d << total << " support pairs over " << hits.size() << " outcomes";
  c.report(uniform, d.str(), 1);
}

// independent oracle for criterion 6: enumerate trees over any free variable
int enum_tree_depth(const BoolFunc& f, uint32_t assigned, uint32_t values,
                    std::set<Vertex> charged) {
  bool constant = true, first = true, val = false;
  uint32_t free_mask = ~assigned & ((uint32_t(1) << f.var_count()) - 1);
  for (uint32_t sub = free_mask;; sub = (sub - 1) & free_mask) {
    bool v = f.value((values & assigned) | sub);
    if (first) {
      val = v;
      first = false;
    } else if (v != val) {
      constant = false;
    }
    if (sub == 0) break;
  }
  if (constant) return int(charged.size());
  int best = INT32_MAX;
  for (int i = 0; i < f.var_count(); ++i) {
    if (assigned >> i & 1) continue;
    std::set<Vertex> next = charged;
    next.insert(f.variables()[i].u);
    next.insert(f.variables()[i].v);
    uint32_t a2 = assigned | (uint32_t(1) << i);
    best = std::min(best, std::max(enum_tree_depth(f, a2, values & ~(uint32_t(1) << i), next),
                                   enum_tree_depth(f, a2, values | (uint32_t(1) << i), next)));
  }
  return best;
}

void criterion_6_dtdepth() {
  Criterion c(6, "DTdepth_v oracle == exhaustive tree enumeration, 256 functions");
  std::vector<Edge> vars = {Edge{1, 2}, Edge{1, 3}, Edge{2, 3}};
  long long mismatches = 0;
  for (uint32_t bits = 0; bits < 256; ++bits) {
    std::vector<bool> table(8);
    for (uint32_t r = 0; r < 8; ++r) table[r] = bits >> r & 1;
    BoolFunc f(vars, table);
    if (dt_depth_v(f) != enum_tree_depth(f, 0, 0, {})) ++mismatches;
  }
  std::vector<bool> literal = {false, true};
  bool literal_ok = dt_depth_v(BoolFunc({Edge{1, 2}}, literal)) == 2;
  std::ostringstream d;
  d << "256 functions, " << mismatches << " mismatches; literal depth "
    << (literal_ok ? "2" : "wrong");
  c.report(mismatches == 0 && literal_ok, d.str(), 60);
}

void criterion_7_switching() {
  Criterion c(7, "switching tail within the analytic bound on every checkable row");
  SwitchingConfig cfg = default_switching_config();
  cfg.trials = 10000;
  std::vector<SwitchingTailResult> rows = run_switching(cfg, 20260810);
  int applicable = 0;
  bool ok = true;
  std::ostringstream d;
  for (size_t i = 0; i < rows.size(); ++i) {
    const SwitchingTailResult& r = rows[i];
    if (r.hypothesis_ok && r.beame_bound < 1.0) {
      ++applicable;
      if (r.wilson_lo > r.beame_bound) ok = false;
      d << cfg.rows[i].function << "(n=" << r.n << "): tail " << r.empirical_tail << " vs bound "
        << r.beame_bound << "; ";
    }
  }
  d << applicable << "/" << rows.size() << " rows checkable";
  c.report(ok && applicable >= 3, d.str(), 600);
}

void criterion_8_planted() {
  Criterion c(8, "planted agreement trend and exact probe marginal");
  PlantedConfig cfg;  // default zoo, n in {32,64,128,256}, xi = 0.5
  cfg.trials = 10000;
  std::vector<PlantedRow> rows = run_planted(cfg, 20260810);
  size_t per_circuit = cfg.n_values.size();
  bool trend_ok = true, probe_ok = true;
  std::ostringstream d;
  for (size_t ci = 0; ci < cfg.circuits.size(); ++ci) {
    const PlantedRow& at32 = rows[ci * per_circuit + 0];
    const PlantedRow& at256 = rows[ci * per_circuit + per_circuit - 1];
    double slack = (at32.wilson_hi - at32.wilson_lo) + (at256.wilson_hi - at256.wilson_lo);
    if (at256.agreement < at32.agreement - slack) {
      trend_ok = false;
      d << cfg.circuits[ci] << " trend broken; ";
    }
    if (cfg.circuits[ci] == "edge12")
      for (size_t ni = 0; ni < per_circuit; ++ni) {
        const PlantedRow& r = rows[ci * per_circuit + ni];
        double exact = edge_probe_agreement_exact(r.n, r.q, r.c);
        if (std::abs(r.agreement - exact) >= 1e-2) probe_ok = false;
        if (r.n == 32)
          d << "probe n=32: " << r.agreement << " vs exact " << exact << "; ";
      }
  }
  d << rows.size() << " rows";
  c.report(trend_ok && probe_ok, d.str(), 900);
}

void criterion_9_gap() {
  Criterion c(9, "gap instances: planted certificate always, dirty fraction nonincreasing");
  GapConfig small;
  small.n = 64;
  small.stats_samples = 1000;
  GapStats s64 = run_gap_stats(small, 424242);
  GapConfig big;
  big.n = 256;
  big.stats_samples = 1000;
  GapStats s256 = run_gap_stats(big, 424242);
  bool planted_always = s64.planted_ok_count == 1000 && s256.planted_ok_count == 1000;
  bool trend = s256.dirty_fraction <= s64.dirty_fraction;
  std::ostringstream d;
  d << "n=64: k=" << s64.k << " dirty " << s64.dirty_fraction << "; n=256: k=" << s256.k
    << " dirty " << s256.dirty_fraction;
  c.report(planted_always && trend, d.str(), 1200);
}

void criterion_10_colorcoding() {
  Criterion c(10, "injective hash always found; witness decision == counting oracle");
  RngStream rng(606060, 0);
  long long hash_hits = 0;
  for (int i = 0; i < 10000; ++i) {
    std::set<uint64_t> set;
    while (set.size() < 3) set.insert(1 + rng.next_below(64));
    if (find_injective_hash({set.begin(), set.end()}, 3, 64).has_value()) ++hash_hits;
  }
  long long mismatches = 0, checked = 0;
  for (int i = 0; i < 1000; ++i) {
    RngStream prng(606061, uint64_t(i));
    uint64_t universe = 1 + prng.next_below(32);
    std::vector<bool> holds(universe + 1);
    long long count = 0;
    for (uint64_t u = 1; u <= universe; ++u) {
      holds[u] = prng.bernoulli(0.35);
      count += holds[u];
    }
    for (int k = 0; k <= 10; ++k) {
      ++checked;
      if (distinct_witness_decide(universe, [&](uint64_t u) { return bool(holds[u]); }, k) !=
          (count >= k))
        ++mismatches;
    }
  }
  std::ostringstream d;
  d << hash_hits << "/10000 hash successes; " << checked << " witness checks, " << mismatches
    << " mismatches";
  c.report(hash_hits == 10000 && mismatches == 0, d.str(), 120);
}

// --- criterion 11: CLI reruns are byte-identical ---------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool run_cli(const std::string& bin, const std::string& args, int expected_exit = 0) {
  std::string cmd = bin + " " + args + " > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  int code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  return code == expected_exit;
}

void criterion_11_reproducibility(const std::string& bin) {
  Criterion c(11, "CLI reruns with identical config and seed are byte-identical");
  namespace fs = std::filesystem;
  fs::path tmp = fs::current_path() / "acceptance_tmp";
  fs::remove_all(tmp);
  fs::create_directories(tmp);

  auto path = [&](const std::string& name) { return (tmp / name).string(); };
  std::ofstream(path("planted.json")) << R"({"n":[16],"circuits":["edge12"],"trials":200})";
  std::ofstream(path("switching.json"))
      << R"({"rows":[{"function":"edge12","n":16,"ell":2,"q":0.5,"s":1}],"trials":200})";
  std::ofstream(path("verify.json")) << R"({"suites":["wsat_delta_g"],"wsat_n_max":3})";
  std::ofstream(path("gap.json")) << R"({"n":64})";
  std::ofstream(path("in.graph")) << "3 2\n1 2\n2 3\n";
  std::ofstream(path("circuit.json"))
      << R"({"n_vertices":3,"gates":[{"id":0,"kind":"input","edge":[1,2]},
          {"id":1,"kind":"input","edge":[1,3]},{"id":2,"kind":"and","inputs":[0,1]}],
          "output":2})";

  struct Step {
    std::string args_template;  // %O replaced by the output path/prefix
    std::vector<std::string> outputs;
    int expected_exit = 0;
  };
  std::vector<Step> steps = {
      {"planted --config " + path("planted.json") + " --seed 5 --out %O", {""}},
      {"switching --config " + path("switching.json") + " --seed 5 --out %O", {""}},
      {"verify --config " + path("verify.json") + " --seed 5 --out %O", {""}},
      {"gap --config " + path("gap.json") + " --seed 5 --out %O",
       {"/yes.graph", "/no.graph", "/manifest.json"}},
      {"gap --config " + path("gap.json") + " --samples 15 --seed 5 --out %O", {""}},
      {"colorcode --n 64 --k 3 --set 3,17,40 --seed 5 --out %O", {""}},
      {"reduce --in " + path("in.graph") + " --k 2 --seed 5 --out %O", {".graph", ".json"}},
      {"sample --n 12 --p 0.3 --seed 5 --out %O", {".graph"}},
      {"sample --n 12 --p 0.3 --c 4 --seed 5 --out %O",
       {".base.graph", ".planted.graph", ".json"}},
      {"dtdepth --in " + path("circuit.json") + " --out %O", {""}},
  };

  bool all_ok = true;
  std::ostringstream d;
  for (size_t i = 0; i < steps.size(); ++i) {
    for (int run = 0; run < 2; ++run) {
      std::string out = path("step" + std::to_string(i) + "_run" + std::to_string(run));
      std::string args = steps[i].args_template;
      args.replace(args.find("%O"), 2, out);
      if (!run_cli(bin, args, steps[i].expected_exit)) {
        all_ok = false;
        d << "step " << i << " exit code; ";
      }
    }
    for (const std::string& suffix : steps[i].outputs) {
      std::string a = path("step" + std::to_string(i) + "_run0") + suffix;
      std::string b = path("step" + std::to_string(i) + "_run1") + suffix;
      std::string ca = slurp(a), cb = slurp(b);
      if (ca.empty() || ca != cb) {
        all_ok = false;
        d << "step " << i << " output '" << suffix << "' differs; ";
      }
    }
  }
  d << steps.size() << " commands, each run twice";
  c.report(all_ok, d.str(), 300);
}

}  // namespace

int main(int argc, char** argv) {
  criterion_1_reduction();
  criterion_2_wsat();
  criterion_3_gamma11();
  criterion_4_restriction_semantics();
  criterion_5_composition();
  criterion_6_dtdepth();
  criterion_7_switching();
  criterion_8_planted();
  criterion_9_gap();
  criterion_10_colorcoding();
  if (argc > 1) {
    criterion_11_reproducibility(argv[1]);
  } else {
    ++failures;
    std::printf("FAIL  11  CLI reproducibility — paraac-lab path not supplied\n");
  }
  std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
              failures);
  return failures == 0 ? 0 : 1;
}
