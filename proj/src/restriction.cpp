#include "paraac/restriction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace paraac {

namespace {

bool test_bit(const std::vector<uint64_t>& bits, int i) {
  return (bits[i >> 6] >> (i & 63)) & 1u;
}

void set_bit(std::vector<uint64_t>& bits, int i, bool value) {
  if (value)
    bits[i >> 6] |= uint64_t(1) << (i & 63);
  else
    bits[i >> 6] &= ~(uint64_t(1) << (i & 63));
}

}  // namespace

Restriction::Restriction(int n, VertexSet star, std::vector<uint64_t> fixed_bits)
    : n_(n), star_(std::move(star)), fixed_(std::move(fixed_bits)) {
  if (star_.universe() != n) throw std::invalid_argument("star support universe must be [n]");
  size_t words = size_t((pair_count(n) + 63) / 64);
  if (fixed_.size() != words) fixed_.resize(words, 0);
  // keep star positions zeroed so equal restrictions compare equal bitwise
  for (const Edge& e : star_edges()) set_bit(fixed_, edge_index(n_, e.u, e.v), false);
}

Restriction Restriction::all_star(int n) {
  std::vector<Vertex> all(n);
  for (int v = 1; v <= n; ++v) all[v - 1] = v;
  return Restriction(n, VertexSet::from_vertices(n, all), {});
}

bool Restriction::is_star_edge(Vertex u, Vertex v) const {
  return star_.contains(u) && star_.contains(v);
}

Restriction::Value Restriction::value(Vertex u, Vertex v) const {
  if (is_star_edge(u, v)) return Value::Star;
  return test_bit(fixed_, edge_index(n_, u, v)) ? Value::One : Value::Zero;
}

std::vector<Edge> Restriction::star_edges() const {
  std::vector<Vertex> us = star_.to_vector();
  std::vector<Edge> out;
  out.reserve(pair_count(us.size()));
  for (size_t i = 0; i < us.size(); ++i)
    for (size_t j = i + 1; j < us.size(); ++j) out.push_back(Edge{us[i], us[j]});
  std::sort(out.begin(), out.end());
  return out;
}

Graph Restriction::fixed_one_graph() const {
  Graph g(n_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v = u + 1; v <= n_; ++v)
      if (!is_star_edge(u, v) && test_bit(fixed_, edge_index(n_, u, v))) g.add_edge(u, v);
  return g;
}

Restriction sample_restriction(int n, int ell, double q, RngStream& rng) {
  if (ell < 0 || ell > n) throw std::invalid_argument("star size outside [0,n]");
  if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("q outside [0,1]");
  VertexSet star = VertexSet::from_vertices(n, uniform_subset(n, ell, rng));
  std::vector<uint64_t> fixed((pair_count(n) + 63) / 64, 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (star.contains(u) && star.contains(v)) continue;
      if (rng.bernoulli(q)) set_bit(fixed, edge_index(n, u, v), true);
    }
  return Restriction(n, std::move(star), std::move(fixed));
}

Restriction compose_restrictions(const Restriction& mu, const Restriction& pi) {
  std::vector<Vertex> u_mu = mu.star_support().to_vector();
  if (int(u_mu.size()) != pi.vertex_count())
    throw std::invalid_argument("pi must live on the star block of mu");
  int n = mu.vertex_count();

  // vertex t of [ell] is the t-th smallest member of U_mu
  VertexSet star(n);
  for (Vertex t : pi.star_support().to_vector()) star.insert(u_mu[t - 1]);

  std::vector<uint64_t> fixed((pair_count(n) + 63) / 64, 0);
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      Restriction::Value val = mu.value(u, v);
      if (val == Restriction::Value::Star) {
        // pull the edge back into [ell] and ask pi
        int s = int(std::lower_bound(u_mu.begin(), u_mu.end(), u) - u_mu.begin()) + 1;
        int t = int(std::lower_bound(u_mu.begin(), u_mu.end(), v) - u_mu.begin()) + 1;
        val = pi.value(s, t);
      }
      if (val == Restriction::Value::One) set_bit(fixed, edge_index(n, u, v), true);
    }
  return Restriction(n, std::move(star), std::move(fixed));
}

Restriction restriction_from_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  int n = j.at("n").get<int>();
  VertexSet star(n);
  for (const auto& v : j.at("star")) star.insert(v.get<int>());
  std::vector<uint64_t> fixed((pair_count(n) + 63) / 64, 0);
  std::set<int> seen;
  for (const auto& [key, bit] : j.at("fixed").items()) {
    auto dash = key.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("fixed key must look like u-v");
    int u = std::stoi(key.substr(0, dash));
    int v = std::stoi(key.substr(dash + 1));
    Edge e = make_edge(u, v);
    if (e.v > n) throw std::invalid_argument("fixed edge outside [n]");
    if (star.contains(e.u) && star.contains(e.v))
      throw std::invalid_argument("fixed edge lies inside the star block");
    int idx = edge_index(n, e.u, e.v);
    if (!seen.insert(idx).second) throw std::invalid_argument("duplicate fixed edge");
    int b = bit.get<int>();
    if (b != 0 && b != 1) throw std::invalid_argument("fixed bits must be 0 or 1");
    set_bit(fixed, idx, b == 1);
  }
  if ((long long)seen.size() != pair_count(n) - pair_count(star.size()))
    throw std::invalid_argument("fixed part must cover exactly the non-star edges");
  return Restriction(n, std::move(star), std::move(fixed));
}

std::string restriction_to_json(const Restriction& mu) {
  nlohmann::json j;
  int n = mu.vertex_count();
  j["n"] = n;
  j["star"] = mu.star_support().to_vector();
  nlohmann::json fixed = nlohmann::json::object();
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (mu.is_star_edge(u, v)) continue;
      fixed[std::to_string(u) + "-" + std::to_string(v)] =
          mu.value(u, v) == Restriction::Value::One ? 1 : 0;
    }
  j["fixed"] = fixed;
  return j.dump(2) + "\n";
}

BoolFunc::BoolFunc(std::vector<Edge> vars, std::vector<bool> table) : vars_(std::move(vars)) {
  if (int(vars_.size()) > kMaxVars)
    throw std::invalid_argument("truth table mode capped at 10 edge variables");
  for (size_t i = 1; i < vars_.size(); ++i)
    if (!(vars_[i - 1] < vars_[i]))
      throw std::invalid_argument("truth table variables must be strictly increasing");
  uint32_t rows = uint32_t(1) << vars_.size();
  if (table.size() != rows) throw std::invalid_argument("truth table size mismatch");
  table_.assign((rows + 63) / 64, 0);
  for (uint32_t r = 0; r < rows; ++r)
    if (table[r]) table_[r >> 6] |= uint64_t(1) << (r & 63);
}

BoolFunc BoolFunc::constant(bool value) {
  return BoolFunc({}, std::vector<bool>{value});
}

BoolFunc BoolFunc::from_rows(std::vector<Edge> vars,
                             const std::function<bool(uint32_t)>& row_value) {
  uint32_t rows = uint32_t(1) << vars.size();
  std::vector<bool> table(rows);
  for (uint32_t r = 0; r < rows; ++r) table[r] = row_value(r);
  return BoolFunc(std::move(vars), std::move(table));
}

bool BoolFunc::value(uint32_t row) const {
  if (row >= row_count()) throw std::out_of_range("row index");
  return (table_[row >> 6] >> (row & 63)) & 1u;
}

bool BoolFunc::is_constant() const {
  bool first = value(0);
  for (uint32_t r = 1; r < row_count(); ++r)
    if (value(r) != first) return false;
  return true;
}

std::vector<int> BoolFunc::essential_vars() const {
  std::vector<int> out;
  for (int i = 0; i < var_count(); ++i) {
    uint32_t bit = uint32_t(1) << i;
    bool essential = false;
    for (uint32_t r = 0; r < row_count() && !essential; ++r)
      if (!(r & bit) && value(r) != value(r | bit)) essential = true;
    if (essential) out.push_back(i);
  }
  return out;
}

BoolFunc BoolFunc::restrict_to_essential() const {
  std::vector<int> ess = essential_vars();
  std::vector<Edge> vars;
  vars.reserve(ess.size());
  for (int i : ess) vars.push_back(vars_[i]);
  auto expand = [&](uint32_t row) {
    uint32_t full = 0;
    for (size_t i = 0; i < ess.size(); ++i)
      if (row >> i & 1) full |= uint32_t(1) << ess[i];
    return value(full);
  };
  return BoolFunc::from_rows(std::move(vars), expand);
}

BoolFunc restrict_function(int n, const GraphPredicate& f, const Restriction& mu) {
  if (mu.vertex_count() != n)
    throw std::invalid_argument("restriction vertex count mismatch");
  std::vector<Edge> stars = mu.star_edges();
  if (int(stars.size()) > BoolFunc::kMaxVars)
    throw std::invalid_argument("star block exceeds the 10-variable truth-table cap");
  Graph scratch = mu.fixed_one_graph();
  uint32_t rows = uint32_t(1) << stars.size();
  std::vector<bool> table(rows);
  for (uint32_t row = 0; row < rows; ++row) {
    for (size_t i = 0; i < stars.size(); ++i)
      scratch.set_edge(stars[i].u, stars[i].v, (row >> i) & 1u);
    table[row] = f(scratch);
  }
  return BoolFunc(std::move(stars), std::move(table));
}

BoolFunc restrict_circuit(const Circuit& c, const Restriction& mu) {
  return restrict_function(c.n_vertices(),
                           [&](const Graph& g) { return eval_circuit(c, g); }, mu);
}

GraphPredicate predicate_of(const BoolFunc& f) {
  return [f](const Graph& g) {
    uint32_t row = 0;
    const auto& vars = f.variables();
    for (size_t i = 0; i < vars.size(); ++i)
      if (g.has_edge(vars[i].u, vars[i].v)) row |= uint32_t(1) << i;
    return f.value(row);
  };
}

int DnfTerm::vertex_length() const {
  std::set<Vertex> vs;
  for (const auto& [e, positive] : literals) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return int(vs.size());
}

bool Dnf::eval(const Graph& g) const {
  for (const DnfTerm& t : terms) {
    bool ok = true;
    for (const auto& [e, positive] : t.literals)
      if (g.has_edge(e.u, e.v) != positive) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

int Dnf::max_term_vertex_length() const {
  int r = 0;
  for (const DnfTerm& t : terms) r = std::max(r, t.vertex_length());
  return r;
}

RestrictedDnf restricted_dnf(int n, const GraphPredicate& f, const Restriction& mu) {
  BoolFunc table = restrict_function(n, f, mu).restrict_to_essential();
  RestrictedDnf out;
  out.dnf.n = n;
  const auto& vars = table.variables();
  for (uint32_t row = 0; row < table.row_count(); ++row) {
    if (!table.value(row)) continue;
    DnfTerm term;
    for (size_t i = 0; i < vars.size(); ++i)
      term.literals.emplace_back(vars[i], bool(row >> i & 1));
    out.dnf.terms.push_back(std::move(term));
  }
  out.max_vertex_length = out.dnf.max_term_vertex_length();
  return out;
}

Dnf restrict_dnf(const Dnf& f, const Restriction& mu) {
  Dnf out;
  out.n = f.n;
  for (const DnfTerm& term : f.terms) {
    DnfTerm kept;
    bool dropped = false;
    for (const auto& [e, positive] : term.literals) {
      Restriction::Value val = mu.value(e.u, e.v);
      if (val == Restriction::Value::Star) {
        kept.literals.emplace_back(e, positive);
        continue;
      }
      if ((val == Restriction::Value::One) != positive) {
        dropped = true;
        break;
      }
    }
    if (dropped) continue;
    if (kept.literals.empty()) {
      out.terms = {DnfTerm{}};  // constant 1
      return out;
    }
    out.terms.push_back(std::move(kept));
  }
  return out;
}

Schedule restriction_schedule(long long n, double k, long long size_bound, int depth) {
  if (n < 2) throw std::invalid_argument("schedule needs n >= 2");
  if (!(k > 0)) throw std::invalid_argument("k must be positive");
  if (size_bound < n) throw std::invalid_argument("schedule needs S >= n");
  if (depth < 1) throw std::invalid_argument("schedule needs d >= 1");
  Schedule sch;
  sch.n = n;
  sch.k = k;
  sch.size_bound = size_bound;
  sch.depth = depth;
  sch.q = std::pow(double(n), -1.0 / k);
  double log_n_sd = std::log(double(size_bound) * double(depth)) / std::log(double(n));
  sch.s = int(std::floor(std::sqrt(k * log_n_sd)));
  double shrink = std::pow(double(n), 5.0 * double(sch.s) / k);
  sch.ell.push_back(n);
  for (int i = 0; i < depth; ++i)
    sch.ell.push_back((long long)std::floor(double(sch.ell.back()) / shrink));
  sch.degenerate = std::any_of(sch.ell.begin(), sch.ell.end(), [](long long l) { return l == 0; });
  return sch;
}

}  // namespace paraac
