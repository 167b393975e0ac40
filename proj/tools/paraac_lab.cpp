// paraac-lab: command-line front end for the lab library. Subcommands emit
// deterministic, seed-stamped CSV/JSON files; reruns with the same config and
// seed are byte-identical.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "paraac/circuit.hpp"
#include "paraac/colorcoding.hpp"
#include "paraac/decision_tree.hpp"
#include "paraac/experiments.hpp"
#include "paraac/formula.hpp"
#include "paraac/graph.hpp"
#include "paraac/reduction.hpp"
#include "paraac/version.hpp"

namespace {

using paraac::meta_comment_line;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

nlohmann::json load_config(const std::string& path) {
  if (path.empty()) return nlohmann::json::object();
  return nlohmann::json::parse(read_file(path));
}

std::vector<uint64_t> parse_set(const std::string& csv) {
  std::vector<uint64_t> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stoull(tok));
  }
  return out;
}

int cmd_planted(const std::string& config_path, uint64_t seed,
                std::optional<long long> trials, const std::string& out) {
  nlohmann::json j = load_config(config_path);
  paraac::PlantedConfig cfg =
      j.empty() ? paraac::PlantedConfig{} : paraac::PlantedConfig::from_json(j);
  if (trials) cfg.trials = *trials;
  emit(out, paraac::planted_csv(cfg, seed));
  return 0;
}

int cmd_switching(const std::string& config_path, uint64_t seed,
                  std::optional<long long> trials, const std::string& out) {
  nlohmann::json j = load_config(config_path);
  paraac::SwitchingConfig cfg =
      j.empty() ? paraac::default_switching_config() : paraac::SwitchingConfig::from_json(j);
  if (trials) cfg.trials = *trials;
  emit(out, paraac::switching_csv(cfg, seed));
  return 0;
}

int cmd_verify(const std::string& config_path, uint64_t seed, const std::string& out) {
  nlohmann::json j = load_config(config_path);
  paraac::VerifyConfig cfg =
      j.empty() ? paraac::VerifyConfig{} : paraac::VerifyConfig::from_json(j);
  paraac::VerifyReport report = paraac::run_verify(cfg, seed);
  std::string text = paraac::verify_report_json(cfg, report, seed);
  emit(out, text);
  if (!out.empty()) std::cout << (report.all_pass ? "verify: all pass\n" : "verify: FAILURES\n");
  return report.all_pass ? 0 : 1;
}

int cmd_gap(const std::string& config_path, uint64_t seed, std::optional<long long> samples,
            const std::string& out) {
  nlohmann::json j = load_config(config_path);
  paraac::GapConfig cfg = j.empty() ? paraac::GapConfig{} : paraac::GapConfig::from_json(j);
  if (samples) cfg.stats_samples = *samples;
  if (cfg.stats_samples > 0) {
    paraac::GapStats stats = paraac::run_gap_stats(cfg, seed);
    nlohmann::json rj;
    rj["meta"] = paraac::meta_object(cfg.to_json(), seed);
    rj["n"] = cfg.n;
    rj["k"] = stats.k;
    rj["target"] = stats.target;
    rj["c"] = stats.c;
    rj["q"] = stats.q;
    rj["samples"] = stats.samples;
    rj["planted_clique_ok_count"] = stats.planted_ok_count;
    rj["base_at_or_above_target"] = stats.base_at_or_above_target;
    rj["dirty_fraction"] = stats.dirty_fraction;
    emit(out, rj.dump(2) + "\n");
    return 0;
  }
  if (out.empty()) throw std::invalid_argument("gap instance emission needs --out DIR");
  std::filesystem::create_directories(out);
  paraac::GapInstance inst = paraac::run_gap_instance(cfg, seed);
  std::string meta = meta_comment_line(cfg.to_json(), seed);
  write_file(out + "/yes.graph", meta + paraac::format_graph(inst.sample.planted_graph));
  write_file(out + "/no.graph", meta + paraac::format_graph(inst.sample.base));
  nlohmann::json manifest;
  manifest["meta"] = paraac::meta_object(cfg.to_json(), seed);
  manifest["n"] = cfg.n;
  manifest["k"] = inst.k;
  manifest["target"] = inst.target;
  manifest["c"] = inst.c;
  manifest["q"] = inst.q;
  manifest["planted_set"] = inst.sample.planted_set.to_vector();
  manifest["planted_clique_ok"] = inst.planted_clique_ok;  // certifies cn(yes) >= c
  manifest["base_below_target"] = inst.base_below_target;  // holds whp, not asserted
  manifest["files"] = {{"yes", "yes.graph"}, {"no", "no.graph"}};
  write_file(out + "/manifest.json", manifest.dump(2) + "\n");
  return 0;
}

int cmd_colorcode(int n, int k, const std::string& set_csv, uint64_t seed,
                  const std::string& out) {
  std::vector<uint64_t> x = parse_set(set_csv);
  nlohmann::json cfg{{"n", n}, {"k", k}, {"set", x}};
  auto params = paraac::find_injective_hash(x, k, uint64_t(n));
  nlohmann::json rj;
  rj["meta"] = paraac::meta_object(cfg, seed);
  rj["found"] = bool(params);
  if (params) {
    rj["p"] = params->p;
    rj["q"] = params->q;
    rj["range"] = uint64_t(k) * uint64_t(k);
  }
  emit(out, rj.dump(2) + "\n");
  return 0;
}

int cmd_reduce(const std::string& in, int k, uint64_t seed, const std::string& out_prefix) {
  paraac::Graph g = paraac::parse_graph(read_file(in));
  paraac::DsInstance inst = paraac::reduce_clique_to_ds(g, k);
  nlohmann::json cfg{{"input", in}, {"k", k}};
  std::string meta = meta_comment_line(cfg, seed);
  write_file(out_prefix + ".graph", meta + paraac::format_graph(inst.graph));
  nlohmann::json sidecar = nlohmann::json::parse(paraac::ds_instance_sidecar_json(inst));
  sidecar["meta"] = paraac::meta_object(cfg, seed);
  write_file(out_prefix + ".json", sidecar.dump(2) + "\n");
  std::cout << "reduced: " << inst.graph.vertex_count() << " vertices, target "
            << inst.target_size << "\n";
  return 0;
}

int cmd_sample(int n, double p, std::optional<int> c, uint64_t seed,
               const std::string& out_prefix) {
  if (out_prefix.empty()) throw std::invalid_argument("sample needs --out PREFIX");
  paraac::RngStream rng(seed, 0);
  if (!c) {
    nlohmann::json cfg{{"n", n}, {"p", p}};
    paraac::Graph g = paraac::sample_er(n, p, rng);
    write_file(out_prefix + ".graph", meta_comment_line(cfg, seed) + paraac::format_graph(g));
    return 0;
  }
  nlohmann::json cfg{{"n", n}, {"p", p}, {"c", *c}};
  paraac::PlantedSample s = paraac::sample_planted(n, p, *c, rng);
  std::string meta = meta_comment_line(cfg, seed);
  write_file(out_prefix + ".base.graph", meta + paraac::format_graph(s.base));
  write_file(out_prefix + ".planted.graph", meta + paraac::format_graph(s.planted_graph));
  nlohmann::json mj;
  mj["meta"] = paraac::meta_object(cfg, seed);
  mj["planted_set"] = s.planted_set.to_vector();
  write_file(out_prefix + ".json", mj.dump(2) + "\n");
  return 0;
}

int cmd_dtdepth(const std::string& in, const std::string& out) {
  paraac::Circuit c = paraac::circuit_from_json(read_file(in));
  std::vector<paraac::Edge> vars = c.input_edges();
  if (int(vars.size()) > paraac::BoolFunc::kMaxVars)
    throw std::invalid_argument("circuit reads more than 10 distinct edges");
  auto row_value = [&](uint32_t row) {
    paraac::Graph g(c.n_vertices());
    for (size_t i = 0; i < vars.size(); ++i)
      if (row >> i & 1) g.add_edge(vars[i].u, vars[i].v);
    return eval_circuit(c, g);
  };
  paraac::BoolFunc f = paraac::BoolFunc::from_rows(vars, row_value);
  emit(out, std::to_string(paraac::dt_depth_v(f)) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paraac-lab: reductions, restrictions and planted-clique experiments"};
  app.set_version_flag("--version", std::string(paraac::kVersion));
  app.require_subcommand(1);

  std::string config_path, out, in_path, set_csv;
  uint64_t seed = 0;
  long long trials_val = 0;
  int n = 0, k = 0;
  double p = 0.5;
  int c_val = -1;
  long long samples_val = -1;

  auto* planted = app.add_subcommand("planted", "planted-clique agreement sweep (CSV)");
  planted->add_option("--config", config_path, "JSON config");
  planted->add_option("--seed", seed, "master seed");
  planted->add_option("--trials", trials_val, "override trial count");
  planted->add_option("--out", out, "output path (stdout when absent)");

  auto* switching = app.add_subcommand("switching", "switching-tail sweep (CSV)");
  switching->add_option("--config", config_path, "JSON config");
  switching->add_option("--seed", seed, "master seed");
  switching->add_option("--trials", trials_val, "override trial count");
  switching->add_option("--out", out, "output path");

  auto* verify = app.add_subcommand("verify", "run the verification suites (JSON report)");
  verify->add_option("--config", config_path, "JSON config");
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--out", out, "output path");

  auto* gap = app.add_subcommand("gap", "gap-clique instance generation / statistics");
  gap->add_option("--config", config_path, "JSON config");
  gap->add_option("--seed", seed, "master seed");
  gap->add_option("--samples", samples_val, "statistics mode with this many samples");
  gap->add_option("--out", out, "output directory (emit) or file (stats)");

  auto* colorcode = app.add_subcommand("colorcode", "find an injective hash for a k-set");
  colorcode->add_option("--n", n, "universe size")->required();
  colorcode->add_option("--k", k, "set size")->required();
  colorcode->add_option("--set", set_csv, "comma-separated members, e.g. 1,5,9")->required();
  colorcode->add_option("--seed", seed, "stamped into the output metadata");
  colorcode->add_option("--out", out, "output path");

  auto* reduce = app.add_subcommand("reduce", "clique -> dominating set reduction");
  reduce->add_option("--in", in_path, "input graph file")->required();
  reduce->add_option("--k", k, "clique parameter")->required();
  reduce->add_option("--seed", seed, "stamped into the output metadata");
  reduce->add_option("--out", out, "output prefix")->required();

  auto* sample = app.add_subcommand("sample", "sample ER(n,p) or ER(n,p,c)");
  sample->add_option("--n", n, "vertex count")->required();
  sample->add_option("--p", p, "edge probability")->required();
  sample->add_option("--c", c_val, "planted clique size (planted mode)");
  sample->add_option("--seed", seed, "master seed");
  sample->add_option("--out", out, "output prefix")->required();

  auto* dtdepth = app.add_subcommand("dtdepth", "vertex decision-tree depth of a circuit");
  dtdepth->add_option("--in", in_path, "circuit JSON")->required();
  dtdepth->add_option("--out", out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::optional<long long> trials =
        planted->count("--trials") || switching->count("--trials")
            ? std::optional<long long>(trials_val)
            : std::nullopt;
    if (app.got_subcommand(planted)) return cmd_planted(config_path, seed, trials, out);
    if (app.got_subcommand(switching)) return cmd_switching(config_path, seed, trials, out);
    if (app.got_subcommand(verify)) return cmd_verify(config_path, seed, out);
    if (app.got_subcommand(gap))
      return cmd_gap(config_path, seed,
                     samples_val >= 0 ? std::optional<long long>(samples_val) : std::nullopt, out);
    if (app.got_subcommand(colorcode)) return cmd_colorcode(n, k, set_csv, seed, out);
    if (app.got_subcommand(reduce)) return cmd_reduce(in_path, k, seed, out);
    if (app.got_subcommand(sample))
      return cmd_sample(n, p, c_val >= 0 ? std::optional<int>(c_val) : std::nullopt, seed, out);
    if (app.got_subcommand(dtdepth)) return cmd_dtdepth(in_path, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
