#pragma once

// Text, LaTeX and JSON renderings of truncated polynomials. Text and LaTeX
// group terms by their parameter monomial: "(x1+x2) + a1*(x1^2+x1*x2+x2^2) - b1*x1*x2".

#include "rgroth/ring.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace rgroth {

enum class Format { Text, Latex, Json };

namespace detail {

// Ascending total degree, then the earlier variable with the larger exponent
// first (x1^2 before x1*x2, a1 before a2 before b1).
inline bool print_less(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
  auto fa = a.factors(), fb = b.factors();
  for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (!(fa[k].first == fb[k].first)) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() > fb.size();
}

inline std::string var_name(VarId v, Format f) {
  const std::string idx = std::to_string(v.index);
  if (f == Format::Latex) {
    switch (v.family) {
      case Family::X: return "x_{" + idx + "}";
      case Family::ALPHA: return "\\alpha_{" + idx + "}";
      case Family::BETA: return "\\beta_{" + idx + "}";
    }
  }
  switch (v.family) {
    case Family::X: return "x" + idx;
    case Family::ALPHA: return "a" + idx;
    case Family::BETA: return "b" + idx;
  }
  return "?";
}

// Parameters are written before x: "b1*x1*x2".
inline std::string monomial_str(const Monomial& m, Format f) {
  std::string s;
  auto fs = m.factors();
  std::stable_partition(fs.begin(), fs.end(), [](auto& ve) { return ve.first.family != Family::X; });
  for (auto& [v, e] : fs) {
    if (!s.empty() && f == Format::Text) s += '*';
    s += var_name(v, f);
    if (e > 1) s += f == Format::Latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  }
  return s;
}

// Term with its sign stripped; "1" for the unit monomial.
inline std::string abs_term(const mpz_class& c, const Monomial& m, Format f) {
  mpz_class a = abs(c);
  std::string ms = monomial_str(m, f);
  if (ms.empty()) return a.get_str();
  if (a == 1) return ms;
  return a.get_str() + (f == Format::Text ? "*" : "") + ms;
}

}  // namespace detail

inline std::string to_text(const Poly& p, Format f = Format::Text) {
  if (p.is_zero()) return "0";
  auto less = [](const Monomial& a, const Monomial& b) { return detail::print_less(a, b); };
  std::map<Monomial, std::vector<std::pair<Monomial, mpz_class>>, decltype(less)> groups(less);
  for (auto& [m, c] : p.terms()) groups[m.param_part()].emplace_back(m.x_part(), c);
  struct Group {
    Monomial param;
    std::vector<std::pair<Monomial, mpz_class>> xs;
  };
  std::vector<Group> ordered;
  for (auto& [param, xs] : groups) {
    std::sort(xs.begin(), xs.end(), [](auto& a, auto& b) { return detail::print_less(a.first, b.first); });
    ordered.push_back({param, xs});
  }
  std::stable_sort(ordered.begin(), ordered.end(), [](const Group& a, const Group& b) {
    return a.xs.front().first.total_degree() < b.xs.front().first.total_degree();
  });

  const std::string mul = f == Format::Text ? "*" : "";
  const std::string open = f == Format::Text ? "(" : "\\left(", close = f == Format::Text ? ")" : "\\right)";
  std::string out;
  for (auto& g : ordered) {
    // a lone unit-parameter group is printed bare, without factoring its sign
    const bool bare = ordered.size() == 1 && g.param.total_degree() == 0 && g.xs.size() > 1;
    const bool negative = !bare && g.xs.front().second < 0;
    std::string body;
    if (g.xs.size() == 1) {
      Monomial whole = g.param * g.xs.front().first;
      body = detail::abs_term(g.xs.front().second, whole, f);
    } else {
      std::string inner;
      for (std::size_t k = 0; k < g.xs.size(); ++k) {
        mpz_class c = negative ? mpz_class(-g.xs[k].second) : g.xs[k].second;
        if (k) inner += c < 0 ? "-" : "+";
        else if (c < 0) inner += "-";
        inner += detail::abs_term(c, g.xs[k].first, f);
      }
      std::string ps = detail::monomial_str(g.param, f);
      if (bare) body = inner;
      else body = (ps.empty() ? "" : ps + mul) + open + inner + close;
    }
    if (out.empty()) out = (negative ? "-" : "") + body;
    else out += (negative ? " - " : " + ") + body;
  }
  return out;
}

inline constexpr const char* kJsonSchema = "rgroth.poly/1";

// {"schema", "n", "D", "terms": [{"coeff": "<integer>", "x": [...], "a": [...], "b": [...]}]}
inline nlohmann::json to_json(const Poly& p) {
  int na = 0, nb = 0;
  for (auto& [m, c] : p.terms())
    for (auto& [v, e] : m.factors()) {
      if (v.family == Family::ALPHA) na = std::max(na, v.index);
      if (v.family == Family::BETA) nb = std::max(nb, v.index);
    }
  auto sorted = p.terms();
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) { return detail::print_less(a.first, b.first); });
  nlohmann::json terms = nlohmann::json::array();
  for (auto& [m, c] : sorted) {
    std::vector<unsigned> x(static_cast<std::size_t>(p.context().n)), a(static_cast<std::size_t>(na)),
        b(static_cast<std::size_t>(nb));
    for (auto& [v, e] : m.factors()) {
      auto& vec = v.family == Family::X ? x : v.family == Family::ALPHA ? a : b;
      vec[static_cast<std::size_t>(v.index - 1)] = e;
    }
    terms.push_back({{"coeff", c.get_str()}, {"x", x}, {"a", a}, {"b", b}});
  }
  return {{"schema", kJsonSchema}, {"n", p.context().n}, {"D", p.context().D}, {"terms", terms}};
}

inline Poly from_json(const nlohmann::json& j) {
  if (j.at("schema") != kJsonSchema) throw std::invalid_argument("unknown polynomial schema");
  Context ctx{j.at("n").get<int>(), j.at("D").get<int>()};
  std::vector<Poly::Term> terms;
  for (auto& t : j.at("terms")) {
    Monomial m;
    auto add = [&](const char* key, VarId (*mk)(int)) {
      auto v = t.at(key).get<std::vector<unsigned>>();
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i]) m = m * Monomial::var(mk(static_cast<int>(i) + 1), v[i]);
    };
    add("x", xv);
    add("a", av);
    add("b", bv);
    terms.emplace_back(m, mpz_class(t.at("coeff").get<std::string>()));
  }
  return Poly::from_terms(ctx, std::move(terms));
}

inline std::string render(const Poly& p, Format f) {
  if (f == Format::Json) return to_json(p).dump();
  return to_text(p, f);
}

}  // namespace rgroth
