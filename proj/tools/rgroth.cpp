// rgroth: compute, expand and verify refined canonical stable Grothendieck
// polynomials from the command line.
//
// Exit status: 0 success, 1 verification failure, 2 usage or invalid input,
// 3 internal inconsistency.

#include "rgroth/format.hpp"
#include "rgroth/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <regex>
#include <string>

using namespace rgroth;

namespace {

struct Options {
  std::string verb, target;
  std::string shape = "0", inner = "0";
  std::optional<int> n, deg, budget;
  std::string flags_r, flags_s;
  std::string orientation = "row", variant = "left", mark_set, format = "text", spec, basis = "G", rule;
  int max_size = 4;
  unsigned seed = 20240611;
};

class Usage : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Format output_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "latex") return Format::Latex;
  return Format::Json;
}

// "a=0,b=1", "b2=-1", "a=-b": a bare family letter applies to every index.
Poly apply_spec(const Poly& p, const std::string& spec) {
  if (spec.empty()) return p;
  const Context ctx = p.context();
  struct Rule {
    Family family;
    int index;  // 0: every index
    std::optional<long> constant;
    Family target{};
    int target_index = 0;
    long sign = 1;
  };
  std::vector<Rule> rules;
  static const std::regex item(R"(\s*([ab])(\d*)\s*=\s*(?:(-?\d+)|(-?)([ab])(\d*))\s*)");
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::smatch m;
    if (!std::regex_match(tok, m, item)) throw Usage("bad --spec item '" + tok + "'");
    Rule r;
    r.family = m[1] == "a" ? Family::ALPHA : Family::BETA;
    r.index = m[2].length() ? std::stoi(m[2]) : 0;
    if (m[3].matched) {
      r.constant = std::stol(m[3]);
    } else {
      r.sign = m[4].length() ? -1 : 1;
      r.target = m[5] == "a" ? Family::ALPHA : Family::BETA;
      r.target_index = m[6].length() ? std::stoi(m[6]) : 0;
    }
    rules.push_back(r);
  }
  return p.substitute([&](VarId v) -> std::optional<Poly> {
    for (auto& r : rules) {
      if (r.family != v.family || (r.index && r.index != v.index)) continue;
      if (r.constant) return Poly(ctx, *r.constant);
      VarId w{r.target, r.target_index ? r.target_index : v.index};
      return r.sign * Poly::var(ctx, w);
    }
    return std::nullopt;
  });
}

struct Inputs {
  Partition lambda, mu;
  int n;
  Context ctx;
  FlagPair flags;
  Orientation orientation;
};

Inputs resolve(const Options& o, bool skew_shape = true) {
  Inputs in;
  in.lambda = Partition::parse(o.shape);
  in.mu = Partition::parse(o.inner);
  if (skew_shape && !contains(in.mu, in.lambda)) throw ValidityError("--inner is not contained in --shape");
  const int len = std::max({in.lambda.length(), in.mu.length(), 1});
  in.n = o.n.value_or(len);
  if (in.n < 1) throw ValidityError("--n must be positive");
  if (in.n < std::max(in.lambda.length(), in.mu.length())) throw ValidityError("--n is smaller than the number of rows");
  const int cells = skew_shape ? in.lambda.size() - in.mu.size() : in.lambda.size();
  const int D = o.deg.value_or(cells + 2);
  if (D < 0) throw ValidityError("--deg must be nonnegative");
  if (D < in.lambda.size())
    std::cerr << "warning: --deg " << D << " is below |shape| = " << in.lambda.size() << ", the result is truncated\n";
  in.orientation = o.orientation == "col" ? Orientation::Col : Orientation::Row;
  int ambient = in.n;
  in.flags = FlagPair::standard(in.n);
  if (!o.flags_r.empty()) in.flags.r = FlagPair::parse_vector(o.flags_r, false);
  if (!o.flags_s.empty()) in.flags.s = FlagPair::parse_vector(o.flags_s, true);
  for (int v : in.flags.r) ambient = std::max(ambient, v);
  for (int v : in.flags.s) ambient = std::max(ambient, v);
  if (static_cast<int>(in.flags.r.size()) != in.n || static_cast<int>(in.flags.s.size()) != in.n)
    throw ValidityError("--flags-r and --flags-s need exactly n entries");
  in.flags = in.flags.resolved(ambient);
  in.ctx = Context{ambient, D};
  return in;
}

void print(const Poly& p, const Options& o) {
  std::cout << render(apply_spec(p, o.spec), output_format(o.format)) << '\n';
}

bool flagged_input(const Options& o) { return !o.flags_r.empty() || !o.flags_s.empty() || o.orientation == "col"; }

int cmd_compute(const Options& o) {
  const std::string& t = o.target;
  if (t == "G" || t == "g") {
    Inputs in = resolve(o);
    const Kind kind = t == "G" ? Kind::G : Kind::g;
    if (!flagged_input(o) && in.mu.empty()) {
      print(kind == Kind::G ? G_jt(in.lambda, in.n, in.ctx) : g_jt(in.lambda, in.n, in.ctx), o);
      return 0;
    }
    FlaggedSpec spec{in.lambda, in.mu, in.n, in.flags, in.orientation, kind};
    FlaggedValue v = kind == Kind::G ? G_flagged_det(spec, in.ctx) : g_flagged_det(spec, in.ctx);
    if (!v.hypotheses_hold) std::cerr << "warning: flags violate the monotonicity hypotheses\n";
    print(v.value, o);
    return 0;
  }
  if (t == "s") {
    Inputs in = resolve(o);
    print(schur_jt(in.lambda, in.mu, in.n, in.ctx), o);
    return 0;
  }
  if (t == "C" || t == "c" || t == "hall") {
    // --shape is the first index and --inner the second
    Inputs in = resolve(o, false);
    Context c{1, 0};
    Poly p = t == "C" ? C_coeff(in.lambda, in.mu, c) : t == "c" ? c_coeff(in.lambda, in.mu, c) : hall_pairing(in.lambda, in.mu, c);
    print(p, o);
    return 0;
  }
  if (t == "matsumura") {
    Inputs in = resolve(o);
    print(matsumura_det(in.lambda, in.mu, in.flags.s, in.flags.r, in.ctx), o);
    return 0;
  }
  throw Usage("compute: unknown target '" + t + "' (G, g, s, C, c, hall, matsumura)");
}

int cmd_expand(const Options& o) {
  const Format f = output_format(o.format);
  auto entry = [&](const std::string& label, const Poly& coef) {
    if (f == Format::Json) {
      std::cout << nlohmann::json{{"term", label}, {"coeff", to_json(apply_spec(coef, o.spec))}}.dump() << '\n';
    } else {
      std::cout << label << ": " << render(apply_spec(coef, o.spec), f) << '\n';
    }
  };
  if (o.target == "s") {
    Inputs in = resolve(o);
    const int budget = o.budget.value_or(in.ctx.D);
    const GBasis b = o.basis == "g" ? GBasis::g : GBasis::G;
    Context c{in.n, 0};
    for (auto& [mu, coef] : schur_in_grothendieck(in.lambda, b, budget, c))
      entry(std::string(b == GBasis::G ? "G" : "g") + "[" + mu.str() + "]", coef);
    return 0;
  }
  if (o.target == "G" || o.target == "g") {
    Inputs in = resolve(o);
    const int budget = o.budget.value_or(in.ctx.D);
    const bool row = in.orientation == Orientation::Row;
    const ExpansionKind kind = o.target == "G" ? (row ? ExpansionKind::G_h : ExpansionKind::G_e)
                                               : (row ? ExpansionKind::g_h : ExpansionKind::g_e);
    Context c{in.n, 0};
    SchurExpansion e = skew_schur_expansion(in.lambda, in.mu, in.n, kind, budget, c);
    if (e.prefactor.basis != Prefactor::Basis::None)
      std::cout << "prefactor: prod_i sum_m t_i^m " << (e.prefactor.basis == Prefactor::Basis::E ? "e_m" : "h_m")
                << "(x) with t = (" << [&] {
                     std::string s;
                     for (std::size_t i = 0; i < e.prefactor.t.size(); ++i)
                       s += (i ? ", " : "") + to_text(e.prefactor.t[i], f == Format::Latex ? f : Format::Text);
                     return s;
                   }() << ")\n";
    for (auto& [key, coef] : e.entries)
      entry(std::string("s[") + key.first.str() + "/" + key.second.str() + (e.conjugated ? "]'" : "]"), coef);
    return 0;
  }
  throw Usage("expand: unknown target '" + o.target + "' (G, g, s)");
}

// Determinant, tableaux and nonintersecting paths must agree.
int cmd_coeff(const Options& o) {
  if (o.target != "C" && o.target != "c") throw Usage("coeff: target must be C or c");
  Partition l = Partition::parse(o.shape), m = Partition::parse(o.inner);
  Context c{1, 0};
  const bool big = o.target == "C";
  Poly det = big ? C_coeff(l, m, c) : c_coeff(l, m, c);
  Poly tab(c), paths(c);
  if (big ? contains(l, m) : contains(m, l)) {
    SkewShape sh = big ? SkewShape(m, l) : SkewShape(l, m);
    tab = enum_elegant(sh, big ? ElegantFamily::IET_Z : ElegantFamily::ET_Z, big ? ElegantRule::C : ElegantRule::c, c);
    paths = nonintersecting_coeff(l, m, big ? CoeffKind::C : CoeffKind::c, c);
  }
  if (det != tab || det != paths)
    throw InternalInconsistency(o.target + "_" + l.str() + "," + m.str() + ": determinant, tableaux and paths disagree");
  print(det, o);
  return 0;
}

int cmd_enumerate(const Options& o) {
  const std::string& t = o.target;
  if (t == "mmsvt") {
    Inputs in = resolve(o);
    SkewShape sh(in.lambda, in.mu);
    const bool col = in.orientation == Orientation::Col;
    print(enum_mmsvt(col ? sh.conjugate() : sh, in.flags, col ? FlagAxis::Col : FlagAxis::Row, in.ctx), o);
    return 0;
  }
  if (t == "mrpp") {
    const MrppVariant v = o.variant == "right" ? MrppVariant::Right
                          : o.variant == "bottom" ? MrppVariant::Bottom
                                                  : MrppVariant::Left;
    std::vector<int> parts;
    std::stringstream ss(o.shape);
    for (std::string tok; std::getline(ss, tok, ',');) parts.push_back(std::stoi(tok));
    DentedPartition dented(parts);
    if (!o.mark_set.empty() || !dented.is_partition()) {
      Options po = o;
      po.shape = "0";
      Inputs in = resolve(po, false);
      if (in.n < dented.length()) throw ValidityError("--n is smaller than the number of rows");
      in.mu = Partition::parse(o.inner);
      if (!contains(in.mu, dented)) throw ValidityError("--inner is not contained in --shape");
      MarkSet I;
      for (int i : FlagPair::parse_vector(o.mark_set, false)) I.insert(i);
      bool admissible = false;
      for (auto& J : admissible_mark_sets(dented)) admissible = admissible || J == I;
      if (!admissible) throw ValidityError("--mark-set is not admissible for this dented shape");
      Context c{in.ctx.n, o.deg.value_or(dented.size() - in.mu.size() + 2)};
      print(enum_mrpp_I(dented, in.mu, in.flags, I, c, v), o);
      return 0;
    }
    Inputs in = resolve(o);
    SkewShape sh(in.lambda, in.mu);
    const bool col = in.orientation == Orientation::Col;
    print(enum_mrpp(col ? sh.conjugate() : sh, v, in.flags, col ? FlagAxis::Col : FlagAxis::Row, in.ctx), o);
    return 0;
  }
  if (t == "elegant") {
    static const std::map<std::string, std::pair<ElegantRule, ElegantFamily>> rules = {
        {"C", {ElegantRule::C, ElegantFamily::IET_Z}},          {"D", {ElegantRule::D, ElegantFamily::IET_Z}},
        {"Cprime", {ElegantRule::Cprime, ElegantFamily::ET_bar}}, {"Dprime", {ElegantRule::Dprime, ElegantFamily::ET_bar}},
        {"c", {ElegantRule::c, ElegantFamily::ET_Z}},           {"d", {ElegantRule::d, ElegantFamily::ET_Z}},
        {"cprime", {ElegantRule::cprime, ElegantFamily::IET_Z}}, {"dprime", {ElegantRule::dprime, ElegantFamily::IET_Z}}};
    auto it = rules.find(o.rule.empty() ? "C" : o.rule);
    if (it == rules.end()) throw Usage("enumerate elegant: unknown --rule '" + o.rule + "'");
    Inputs in = resolve(o);
    print(enum_elegant(SkewShape(in.lambda, in.mu), it->second.second, it->second.first, Context{1, 0}), o);
    return 0;
  }
  if (t == "fsvt") {
    Inputs in = resolve(o);
    print(enum_fsvt(SkewShape(in.lambda, in.mu), in.flags.s, in.flags.r, in.ctx), o);
    return 0;
  }
  throw Usage("enumerate: unknown target '" + t + "' (mmsvt, mrpp, elegant, fsvt)");
}

int cmd_verify(const Options& o) {
  const int size = o.max_size;
  const int D = o.deg.value_or(2);
  const int budget = o.budget.value_or(D);
  std::vector<std::pair<std::string, std::function<Report()>>> suites = {
      {"concordance-G", [&] { return verify_concordance(Kind::G, size, 3, o.deg.value_or(size + 1)); }},
      {"concordance-g", [&] { return verify_concordance(Kind::g, size, 3, o.deg.value_or(size + 1)); }},
      {"duality", [&] { return verify_duality(size); }},
      {"coefficients", [&] { return verify_coefficients(size); }},
      {"positivity", [&] { return verify_positivity(size); }},
      {"fixtures", [&] { return verify_fixtures(); }},
      {"flagged", [&] { return verify_flagged(size, 3, 3); }},
      {"cauchy", [&] { return verify_cauchy(2, 2, std::min(size, 3)); }},
      {"omega", [&] { return verify_omega(size, 2, budget); }},
      {"matsumura", [&] { return verify_matsumura(size + 1, 3, 3); }},
      {"kernel", [&] { return verify_kernel(o.seed, 100); }},
  };
  bool any = false, ok = true;
  for (auto& [name, run] : suites) {
    const bool selected = o.target == "all" || o.target == name ||
                          (o.target == "concordance" && name.rfind("concordance", 0) == 0) ||
                          (o.target == "hall" && name == "duality");
    if (!selected) continue;
    any = true;
    Report r = run();
    std::cout << (r.ok ? "PASS " : "FAIL ") << name << " (" << r.checked << " checks)";
    if (!r.ok) std::cout << ": " << r.failure;
    std::cout << '\n';
    for (auto& note : r.notes) std::cout << "  " << note << '\n';
    ok = ok && r.ok;
  }
  if (!any) throw Usage("verify: unknown suite '" + o.target + "'");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Refined canonical stable Grothendieck polynomials"};
  app.require_subcommand(1);
  Options o;

  auto shape_opts = [&](CLI::App* sub) {
    sub->add_option("target", o.target)->required();
    sub->add_option("--shape", o.shape, "outer partition, e.g. 4,2,1");
    sub->add_option("--inner", o.inner, "inner partition");
    sub->add_option("--n", o.n, "number of x variables / rows");
    sub->add_option("--deg", o.deg, "x-degree truncation (default |shape/inner|+2)");
    sub->add_option("--flags-r", o.flags_r, "lower flags r_1,...,r_n");
    sub->add_option("--flags-s", o.flags_s, "upper flags s_1,...,s_n ('inf' allowed)");
    sub->add_option("--orientation", o.orientation)->check(CLI::IsMember({"row", "col"}));
    sub->add_option("--budget", o.budget, "expansion budget (default D)");
    sub->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json-like", "json"}));
    sub->add_option("--spec", o.spec, "parameter specialization, e.g. a=0,b=1 or b2=-a1");
  };
  auto* compute = app.add_subcommand("compute", "G, g, s, C, c, hall, matsumura");
  shape_opts(compute);
  auto* expand = app.add_subcommand("expand", "Schur expansion of G or g, or s in the G/g basis");
  shape_opts(expand);
  expand->add_option("--basis", o.basis, "basis for 'expand s'")->check(CLI::IsMember({"G", "g"}));
  auto* coeff = app.add_subcommand("coeff", "C or c, cross-checked against tableaux and lattice paths");
  shape_opts(coeff);
  auto* enumerate = app.add_subcommand("enumerate", "mmsvt, mrpp, elegant, fsvt");
  shape_opts(enumerate);
  enumerate->add_option("--variant", o.variant)->check(CLI::IsMember({"left", "right", "bottom"}));
  enumerate->add_option("--mark-set", o.mark_set, "boundary set I for dented shapes, e.g. 1,3");
  enumerate->add_option("--rule", o.rule, "elegant rule: C, c, D, d, Cprime, cprime, Dprime, dprime");
  auto* verify = app.add_subcommand("verify", "concordance, duality, coefficients, positivity, fixtures, flagged, "
                                              "cauchy, omega, matsumura, kernel, all");
  verify->add_option("target", o.target)->required();
  verify->add_option("--max-size", o.max_size, "largest |shape| swept (default 4)");
  verify->add_option("--budget", o.budget, "omega expansion budget (default D)");
  verify->add_option("--deg", o.deg, "x-degree truncation");
  verify->add_option("--seed", o.seed, "seed for the randomized kernel checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  o.verb = app.get_subcommands().front()->get_name();

  try {
    if (o.verb == "compute") return cmd_compute(o);
    if (o.verb == "expand") return cmd_expand(o);
    if (o.verb == "coeff") return cmd_coeff(o);
    if (o.verb == "enumerate") return cmd_enumerate(o);
    return cmd_verify(o);
  } catch (const InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
