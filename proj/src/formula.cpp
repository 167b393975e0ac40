#include "paraac/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace paraac {

PropFormula PropFormula::and_of(std::vector<PropFormula> children) {
  PropFormula f;
  f.kind = Kind::And;
  f.children = std::move(children);
  return f;
}

PropFormula PropFormula::or_of(std::vector<PropFormula> children) {
  PropFormula f;
  f.kind = Kind::Or;
  f.children = std::move(children);
  return f;
}

PropFormula PropFormula::pos(std::string var) {
  PropFormula f;
  f.kind = Kind::PosLit;
  f.var = std::move(var);
  return f;
}

PropFormula PropFormula::neg(std::string var) {
  PropFormula f;
  f.kind = Kind::NegLit;
  f.var = std::move(var);
  return f;
}

namespace {

void collect_vars(const PropFormula& f, std::set<std::string>& out) {
  if (f.is_literal())
    out.insert(f.var);
  else
    for (const auto& c : f.children) collect_vars(c, out);
  for (const auto& v : f.declared_vars) out.insert(v);
}

bool contains_positive(const PropFormula& f) {
  if (f.kind == PropFormula::Kind::PosLit) return true;
  if (f.kind == PropFormula::Kind::NegLit) return false;
  return std::any_of(f.children.begin(), f.children.end(), contains_positive);
}

bool in_gamma(const PropFormula& f, int t, int d);
bool in_delta(const PropFormula& f, int t, int d);

// Gamma_{0,d}: conjunction of at most d literals (a bare literal counts as
// the one-conjunct case).
bool in_gamma(const PropFormula& f, int t, int d) {
  if (t == 0) {
    if (f.is_literal()) return true;
    if (f.kind != PropFormula::Kind::And) return false;
    if (int(f.children.size()) > d) return false;
    return std::all_of(f.children.begin(), f.children.end(),
                       [](const PropFormula& c) { return c.is_literal(); });
  }
  if (f.kind == PropFormula::Kind::And)
    return std::all_of(f.children.begin(), f.children.end(),
                       [&](const PropFormula& c) { return in_delta(c, t - 1, d); });
  return in_delta(f, t - 1, d);  // singleton block
}

bool in_delta(const PropFormula& f, int t, int d) {
  if (t == 0) {
    if (f.is_literal()) return true;
    if (f.kind != PropFormula::Kind::Or) return false;
    if (int(f.children.size()) > d) return false;
    return std::all_of(f.children.begin(), f.children.end(),
                       [](const PropFormula& c) { return c.is_literal(); });
  }
  if (f.kind == PropFormula::Kind::Or)
    return std::all_of(f.children.begin(), f.children.end(),
                       [&](const PropFormula& c) { return in_gamma(c, t - 1, d); });
  return in_gamma(f, t - 1, d);
}

// formula compiled against a fixed variable order for mask evaluation
struct Evaluator {
  const PropFormula& root;
  std::map<std::string, int> index;

  explicit Evaluator(const PropFormula& f, const std::vector<std::string>& vars) : root(f) {
    for (size_t i = 0; i < vars.size(); ++i) index.emplace(vars[i], int(i));
  }

  bool eval(const PropFormula& f, uint64_t mask) const {
    switch (f.kind) {
      case PropFormula::Kind::PosLit:
        return (mask >> index.at(f.var)) & 1u;
      case PropFormula::Kind::NegLit:
        return !((mask >> index.at(f.var)) & 1u);
      case PropFormula::Kind::And:
        for (const auto& c : f.children)
          if (!eval(c, mask)) return false;
        return true;
      case PropFormula::Kind::Or:
        for (const auto& c : f.children)
          if (eval(c, mask)) return true;
        return false;
    }
    return false;
  }

  bool eval(uint64_t mask) const { return eval(root, mask); }
};

}  // namespace

std::vector<std::string> PropFormula::variables() const {
  std::set<std::string> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

bool validate_shape(const PropFormula& f, const GammaShape& shape) {
  if (shape.t < 0 || shape.d < 1) throw std::invalid_argument("bad shape parameters");
  if (shape.negative_only && contains_positive(f)) return false;
  return in_gamma(f, shape.t, shape.d);
}

bool weighted_sat_bruteforce(const PropFormula& f, int k) {
  if (k < 0) throw std::invalid_argument("negative weight");
  std::vector<std::string> vars = f.variables();
  int n = int(vars.size());
  if (n > 64) throw std::invalid_argument("brute-force weighted SAT capped at 64 variables");
  if (k > n) return false;
  Evaluator ev(f, vars);
  if (k == 0) return ev.eval(0);
  // Gosper's hack over all weight-k masks
  uint64_t mask = (k == 64) ? ~uint64_t(0) : (uint64_t(1) << k) - 1;
  uint64_t limit = (n == 64) ? ~uint64_t(0) : (uint64_t(1) << n) - 1;
  while (true) {
    if (ev.eval(mask)) return true;
    if (mask == (limit ^ (limit >> k))) break;  // highest weight-k mask
    uint64_t c = mask & -mask;
    uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
    if (mask > limit) break;
  }
  return false;
}

PropFormula build_delta_g(const Graph& g) {
  int n = g.vertex_count();
  std::vector<PropFormula> clauses;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!g.has_edge(u, v))
        clauses.push_back(PropFormula::or_of(
            {PropFormula::neg("x" + std::to_string(u)), PropFormula::neg("x" + std::to_string(v))}));
  PropFormula f = PropFormula::and_of(std::move(clauses));
  f.declared_vars.reserve(n);
  for (Vertex v = 1; v <= n; ++v) f.declared_vars.push_back("x" + std::to_string(v));
  return f;
}

bool gamma11_decide(const PropFormula& f, int k) {
  if (k < 0) throw std::invalid_argument("negative weight");
  if (!validate_shape(f, GammaShape{1, 1, false}))
    throw std::invalid_argument("gamma11_decide requires a conjunction of single literals");
  // flatten: the shape admits literals, OR-wrapped single literals and empty
  // ORs (constant false) under a top-level conjunction
  std::set<std::string> pos, neg;
  bool has_false = false;
  auto take_atom = [&](const PropFormula& a) {
    if (a.kind == PropFormula::Kind::PosLit)
      pos.insert(a.var);
    else if (a.kind == PropFormula::Kind::NegLit)
      neg.insert(a.var);
    else if (a.kind == PropFormula::Kind::Or && a.children.empty())
      has_false = true;
    else if (a.kind == PropFormula::Kind::Or && a.children.size() == 1)
      a.children[0].kind == PropFormula::Kind::PosLit ? (void)pos.insert(a.children[0].var)
                                                      : (void)neg.insert(a.children[0].var);
  };
  if (f.kind == PropFormula::Kind::And)
    for (const auto& c : f.children) take_atom(c);
  else
    take_atom(f);
  if (has_false) return false;
  for (const auto& v : pos)
    if (neg.count(v)) return false;  // condition (i)
  int total = int(f.variables().size());
  return int(pos.size()) <= k && k <= total - int(neg.size());
}

int max_weight_omega(const PropFormula& f) {
  if (contains_positive(f))
    throw std::invalid_argument("max_weight_omega requires a negative-only formula");
  int n = int(f.variables().size());
  for (int k = n; k >= 1; --k)
    if (weighted_sat_bruteforce(f, k)) return k;
  return 0;
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool is_sym_char(char c) const {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string symbol() {
    size_t start = pos;
    while (pos < text.size() && is_sym_char(text[pos])) ++pos;
    if (start == pos) throw std::invalid_argument("expected symbol at position " + std::to_string(pos));
    return std::string(text.substr(start, pos - start));
  }

  PropFormula expr() {
    skip_ws();
    if (pos >= text.size()) throw std::invalid_argument("unexpected end of formula");
    if (text[pos] != '(') return PropFormula::pos(symbol());
    ++pos;  // '('
    skip_ws();
    std::string head = symbol();
    if (head == "not") {
      skip_ws();
      std::string v = symbol();
      expect_close();
      return PropFormula::neg(v);
    }
    if (head != "and" && head != "or")
      throw std::invalid_argument("expected and/or/not, got '" + head + "'");
    std::vector<PropFormula> children;
    while (true) {
      skip_ws();
      if (pos >= text.size()) throw std::invalid_argument("unbalanced parenthesis");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      children.push_back(expr());
    }
    return head == "and" ? PropFormula::and_of(std::move(children))
                         : PropFormula::or_of(std::move(children));
  }

  void expect_close() {
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') throw std::invalid_argument("expected ')'");
    ++pos;
  }
};

}  // namespace

PropFormula parse_formula(std::string_view text) {
  Parser p{text};
  PropFormula f = p.expr();
  p.skip_ws();
  if (p.pos != text.size()) throw std::invalid_argument("trailing content after formula");
  return f;
}

std::string format_formula(const PropFormula& f) {
  switch (f.kind) {
    case PropFormula::Kind::PosLit:
      return f.var;
    case PropFormula::Kind::NegLit:
      return "(not " + f.var + ")";
    default: {
      std::string out = f.kind == PropFormula::Kind::And ? "(and" : "(or";
      for (const auto& c : f.children) out += " " + format_formula(c);
      out += ")";
      return out;
    }
  }
}

}  // namespace paraac
