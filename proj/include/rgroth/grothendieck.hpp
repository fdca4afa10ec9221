#pragma once

// Determinantal formulas for the refined Grothendieck polynomials G and their
// duals g, their Schur coefficients, and the identities relating them.

#include "rgroth/ring.hpp"
#include "rgroth/shapes.hpp"
#include "rgroth/symfunc.hpp"

#include <map>
#include <string>
#include <vector>

namespace rgroth {

class InternalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Orientation { Row, Col };
enum class Kind { G, g };

namespace detail {
inline Alphabet Apre(int k) { return Alphabet::A(k); }
inline Alphabet Bpre(int k) { return Alphabet::B(k); }

template <class F>
Matrix build(int n, F&& entry) {
  Matrix M(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) M[static_cast<std::size_t>(i - 1)].push_back(entry(i, j));
  return M;
}

// prod_{i} prod_{l=lo_i}^{hi_i} (1 - beta_i x_l)
inline Poly beta_product(Context ctx, const std::vector<std::pair<int, int>>& ranges) {
  Poly c(ctx, 1);
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (int l = ranges[i].first; l <= ranges[i].second; ++l)
      c *= Poly(ctx, 1) - Poly::var(ctx, bv(static_cast<int>(i) + 1)) * Poly::var(ctx, xv(l));
  return c;
}

// prod_{i} prod_{l=lo_i}^{hi_i} (1 - alpha_i x_l)^{-1}, as a truncated series.
inline Poly alpha_inverse_product(Context ctx, const std::vector<std::pair<int, int>>& ranges) {
  Poly c(ctx, 1);
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (int l = ranges[i].first; l <= ranges[i].second; ++l) {
      Poly geo(ctx, 1), t = Poly::var(ctx, av(static_cast<int>(i) + 1)) * Poly::var(ctx, xv(l)), pw = t;
      for (int k = 1; k <= ctx.D; ++k, pw *= t) geo += pw;
      c *= geo;
    }
  return c;
}
}  // namespace detail

// det(h_{l_i+n-i}[x_j (-) (A_{l_i} - B_{i-1})]) / Vandermonde.
inline Poly G_bialternant(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  const int guard = n * (n - 1) / 2;
  Context big{ctx.n, ctx.D + guard};
  auto M = detail::build(n, [&](int i, int j) {
    return h_ominus(lambda.part(i) + n - i,
                    {Alphabet::X(j, j), detail::Apre(lambda.part(i)) - detail::Bpre(i - 1)}, big);
  });
  try {
    return exact_divide(det_minor_expansion(M, big), vandermonde(big, n), guard);
  } catch (const DivisibilityViolation& e) {
    throw InternalInconsistency(std::string("G bialternant: ") + e.what());
  }
}

// det(h_{l_i+n-i}[x_j - A_{l_i-1} + B_{i-1}]) / Vandermonde.
inline Poly g_bialternant(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  const int guard = n * (n - 1) / 2;
  Context big{ctx.n, ctx.D + guard};
  auto M = detail::build(n, [&](int i, int j) {
    return h_pleth(lambda.part(i) + n - i,
                   Alphabet::X(j, j) - detail::Apre(lambda.part(i) - 1) + detail::Bpre(i - 1), big);
  });
  try {
    return exact_divide(det_minor_expansion(M, big), vandermonde(big, n), guard);
  } catch (const DivisibilityViolation& e) {
    throw InternalInconsistency(std::string("g bialternant: ") + e.what());
  }
}

inline Poly G_jt(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  auto M = detail::build(n, [&](int i, int j) {
    return h_ominus(lambda.part(i) - i + j,
                    {Alphabet::Xn(n), detail::Apre(lambda.part(i)) - detail::Bpre(i - 1)}, ctx);
  });
  return det_minor_expansion(M, ctx);
}

inline Poly g_jt(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  auto M = detail::build(n, [&](int i, int j) {
    return h_pleth(lambda.part(i) - i + j,
                   Alphabet::Xn(n) - detail::Apre(lambda.part(i) - 1) + detail::Bpre(i - 1), ctx);
  });
  return det_minor_expansion(M, ctx);
}

// C_n * det(h_{l_i-i+j}[X_n (-) (A_{l_i} - B_{i-1} + B_j)]), C_n = prod (1 - b_i x_j).
inline Poly G_jt_modified(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  auto M = detail::build(n, [&](int i, int j) {
    return h_ominus(lambda.part(i) - i + j,
                    {Alphabet::Xn(n), detail::Apre(lambda.part(i)) - detail::Bpre(i - 1) + detail::Bpre(j)}, ctx);
  });
  std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(n), {1, n});
  return detail::beta_product(ctx, ranges) * det_minor_expansion(M, ctx);
}

inline Poly g_jt_modified(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) throw ValidityError("partition has more than n parts");
  auto M = detail::build(n, [&](int i, int j) {
    return h_pleth(lambda.part(i) - i + j, Alphabet::Xn(n) - detail::Apre(lambda.part(i) - 1) +
                                               detail::Bpre(i - 1) - detail::Bpre(j - 1),
                   ctx);
  });
  return det_minor_expansion(M, ctx);
}

// Schur coefficient of s_mu in G_lambda.
inline Poly C_coeff(const Partition& lambda, const Partition& mu, Context ctx) {
  const int N = std::max(lambda.length(), mu.length());
  auto M = detail::build(N, [&](int i, int j) {
    return h_pleth(mu.part(i) - lambda.part(j) - i + j, detail::Apre(lambda.part(j)) - detail::Bpre(j - 1), ctx);
  });
  return det_minor_expansion(M, ctx);
}

// Schur coefficient of s_mu in g_lambda.
inline Poly c_coeff(const Partition& lambda, const Partition& mu, Context ctx) {
  const int N = std::max(lambda.length(), mu.length());
  auto M = detail::build(N, [&](int i, int j) {
    return h_pleth(lambda.part(i) - mu.part(j) - i + j, -detail::Apre(lambda.part(i) - 1) + detail::Bpre(i - 1), ctx);
  });
  return det_minor_expansion(M, ctx);
}

// <G_lambda, g_mu>, computed as sum_{lambda<=nu<=mu} C_{lambda,nu} c_{mu,nu} and
// as a single determinant; the two must agree.
inline Poly hall_pairing(const Partition& lambda, const Partition& mu, Context ctx) {
  Poly sum(ctx);
  if (contains(lambda, mu))
    for (auto& nu : partitions_between(lambda, mu)) sum += C_coeff(lambda, nu, ctx) * c_coeff(mu, nu, ctx);
  Poly closed(ctx);
  if (contains(lambda, mu)) {
    const int N = std::max(lambda.length(), mu.length());
    auto M = detail::build(N, [&](int i, int j) {
      return h_pleth(mu.part(i) - lambda.part(j) - i + j,
                     detail::Apre(lambda.part(j)) - detail::Bpre(j - 1) - detail::Apre(mu.part(i) - 1) +
                         detail::Bpre(i - 1),
                     ctx);
    });
    closed = det_minor_expansion(M, ctx);
  }
  if (sum != closed)
    throw InternalInconsistency("hall pairing: coefficient sum and closed determinant disagree for " + lambda.str() +
                                " / " + mu.str());
  return sum;
}

// Copies p into a context with more x variables, renaming x_i to x_{i+offset}.
inline Poly shift_x(const Poly& p, int offset, Context target) {
  std::vector<Poly::Term> terms;
  for (auto& [m, c] : p.terms()) {
    Monomial out;
    for (auto& [v, e] : m.factors()) {
      VarId w = v.family == Family::X ? xv(v.index + offset) : v;
      out = out * Monomial::var(w, e);
    }
    terms.emplace_back(out, c);
  }
  return Poly::from_terms(target, std::move(terms));
}

// prod 1/(1 - x_i y_j) = sum_lambda G_lambda(x) g_lambda(y), compared on all
// terms of x-degree <= bound.
inline bool cauchy_check(int nx, int ny, int bound) {
  Context cx{nx, bound};
  Context both{nx + ny, 2 * bound};
  Poly lhs(both, 1);
  for (int i = 1; i <= nx; ++i)
    for (int j = 1; j <= ny; ++j) {
      Poly t = Poly::var(both, xv(i)) * Poly::var(both, xv(nx + j)), geo(both, 1), pw = t;
      for (int k = 1; k <= bound; ++k, pw *= t) geo += pw;
      lhs *= geo;
    }
  Poly rhs(both);
  for (auto& lambda : partitions_up_to(bound, nx)) {
    Poly G = G_jt(lambda, nx, cx);
    const int m = std::max(ny, lambda.length());
    Poly g = g_jt(lambda, m, {m, bound}).recontext({ny, bound});
    rhs += shift_x(G, 0, both) * shift_x(g, nx, both);
  }
  auto x_only_deg = [&](const Monomial& m) {
    int d = 0;
    for (auto& [v, e] : m.factors())
      if (v.family == Family::X && v.index <= nx) d += static_cast<int>(e);
    return d;
  };
  Poly diff = lhs - rhs;
  for (auto& [m, c] : diff.terms())
    if (x_only_deg(m) <= bound) return false;
  return true;
}

enum class GBasis { G, g };

// Coefficients of s_lambda in the G basis (mu >= lambda, |mu| <= budget) or
// in the g basis (mu <= lambda).
inline std::map<Partition, Poly> schur_in_grothendieck(const Partition& lambda, GBasis basis, int budget, Context ctx) {
  std::map<Partition, Poly> out;
  if (basis == GBasis::G) {
    for (auto& mu : partitions_above(lambda, budget - lambda.size(), ctx.n)) {
      Poly c = c_coeff(mu, lambda, ctx);
      if (!c.is_zero()) out.emplace(mu, c);
    }
  } else {
    for (auto& mu : partitions_between({}, lambda)) {
      Poly c = C_coeff(mu, lambda, ctx);
      if (!c.is_zero()) out.emplace(mu, c);
    }
  }
  return out;
}

// Multiplies the expansion back out in x_1..x_n and compares with s_lambda up
// to x-degree min(budget, D).
inline bool verify_schur_in_grothendieck(const Partition& lambda, GBasis basis, int budget, Context ctx) {
  const int n = ctx.n;
  const int d = std::min(budget, ctx.D);
  Context c{n, d};
  Poly total(c);
  for (auto& [mu, coef] : schur_in_grothendieck(lambda, basis, budget, ctx)) {
    if (mu.length() > n) continue;
    Poly basis_poly = basis == GBasis::G ? G_jt(mu, n, c) : g_jt(mu, n, c);
    total += coef.recontext(c) * basis_poly;
  }
  return total == schur_jt(lambda, {}, n, c);
}

// ---------------------------------------------------------------------------
// Flagged determinants.

struct FlaggedSpec {
  Partition outer, inner;  // lambda, mu (containment is a hypothesis, not enforced)
  int n = 0;               // matrix size; flags have length n
  FlagPair flags;
  Orientation orientation = Orientation::Row;
  Kind kind = Kind::G;
};

struct FlaggedValue {
  Poly value;
  bool hypotheses_hold = true;
  // Column G form only: the slack condition r_i - mu_i <= r_{i+1} - mu_{i+1} + 1.
  bool weak_hypotheses_hold = true;
};

namespace detail {
inline void check_flag_lengths(const FlaggedSpec& s) {
  if (s.flags.n() != s.n || static_cast<int>(s.flags.s.size()) != s.n)
    throw ValidityError("flag vectors must have length n");
  if (std::max(s.outer.length(), s.inner.length()) > s.n) throw ValidityError("shape has more than n rows");
}

inline bool monotone_flags(const FlaggedSpec& s, const FlagPair& f) {
  for (int i = 1; i < s.n; ++i)
    if (s.inner.part(i) < s.outer.part(i + 1))
      if (f.r[i - 1] > f.r[i] || f.s[i - 1] > f.s[i]) return false;
  return true;
}
}  // namespace detail

inline bool flag_hypotheses(const FlaggedSpec& spec, int ambient, bool weak = false) {
  FlagPair f = spec.flags.resolved(ambient);
  if (!contains(spec.inner, spec.outer)) return false;
  if (spec.kind == Kind::G && spec.orientation == Orientation::Col) {
    for (int i = 1; i < spec.n; ++i) {
      if (!(spec.inner.part(i) < spec.outer.part(i + 1))) continue;
      int slack = weak ? 1 : 0;
      if (f.r[i - 1] - spec.inner.part(i) > f.r[i] - spec.inner.part(i + 1) + slack) return false;
      if (f.s[i - 1] - spec.outer.part(i) > f.s[i] - spec.outer.part(i + 1) + 1) return false;
    }
    return true;
  }
  return detail::monotone_flags(spec, f);
}

// Row: C * det(h[X_[r_j,s_i] (-) (A_{l_i} - A_{m_j} - B_{i-1} + B_j)]).
// Col: D * det(e[X_[r_j,s_i] (-) (A_{i-1} - A_j - B_{l_i} + B_{m_j})]), whose
// tableau side lives on the conjugate shape.
inline FlaggedValue G_flagged_det(const FlaggedSpec& spec, Context ctx) {
  detail::check_flag_lengths(spec);
  const FlagPair f = spec.flags.resolved(spec.n);
  const auto& l = spec.outer;
  const auto& m = spec.inner;
  for (int i = 1; i <= spec.n; ++i)
    if (f.s[i - 1] > ctx.n) throw ValidityError("flag exceeds number of x variables");
  std::vector<std::pair<int, int>> ranges;
  for (int i = 1; i <= spec.n; ++i) ranges.emplace_back(f.r[i - 1], f.s[i - 1]);
  FlaggedValue out;
  if (spec.orientation == Orientation::Row) {
    auto M = detail::build(spec.n, [&](int i, int j) {
      return h_ominus(l.part(i) - m.part(j) - i + j,
                      {Alphabet::X(f.r[j - 1], f.s[i - 1]),
                       detail::Apre(l.part(i)) - detail::Apre(m.part(j)) - detail::Bpre(i - 1) + detail::Bpre(j)},
                      ctx);
    });
    out.value = detail::beta_product(ctx, ranges) * det_minor_expansion(M, ctx);
  } else {
    auto M = detail::build(spec.n, [&](int i, int j) {
      return e_ominus(l.part(i) - m.part(j) - i + j,
                      {Alphabet::X(f.r[j - 1], f.s[i - 1]),
                       detail::Apre(i - 1) - detail::Apre(j) - detail::Bpre(l.part(i)) + detail::Bpre(m.part(j))},
                      ctx);
    });
    out.value = detail::alpha_inverse_product(ctx, ranges) * det_minor_expansion(M, ctx);
  }
  out.hypotheses_hold = flag_hypotheses(spec, spec.n);
  out.weak_hypotheses_hold = flag_hypotheses(spec, spec.n, true);
  return out;
}

// Row: det(h[X_[r_j,s_i] - A_{l_i-1} + A_{m_j} + B_{i-1} - B_{j-1}]).
// Col: det(e[X_[r_j,s_i] - A_{i-1} + A_{j-1} + B_{l_i-1} - B_{m_j}]).
inline FlaggedValue g_flagged_det(const FlaggedSpec& spec, Context ctx) {
  detail::check_flag_lengths(spec);
  const FlagPair f = spec.flags.resolved(spec.n);
  const auto& l = spec.outer;
  const auto& m = spec.inner;
  for (int i = 1; i <= spec.n; ++i)
    if (f.s[i - 1] > ctx.n) throw ValidityError("flag exceeds number of x variables");
  FlaggedValue out;
  auto M = detail::build(spec.n, [&](int i, int j) {
    const int k = l.part(i) - m.part(j) - i + j;
    if (spec.orientation == Orientation::Row)
      return h_pleth(k,
                     Alphabet::X(f.r[j - 1], f.s[i - 1]) - detail::Apre(l.part(i) - 1) + detail::Apre(m.part(j)) +
                         detail::Bpre(i - 1) - detail::Bpre(j - 1),
                     ctx);
    return e_pleth(k,
                   Alphabet::X(f.r[j - 1], f.s[i - 1]) - detail::Apre(i - 1) + detail::Apre(j - 1) +
                       detail::Bpre(l.part(i) - 1) - detail::Bpre(m.part(j)),
                   ctx);
  });
  out.value = det_minor_expansion(M, ctx);
  out.hypotheses_hold = flag_hypotheses({spec.outer, spec.inner, spec.n, spec.flags, spec.orientation, Kind::g}, spec.n);
  out.weak_hypotheses_hold = out.hypotheses_hold;
  return out;
}

// Determinant side for marked RPPs with a boundary mark set I on a dented shape:
// det(chi(r_j <= s_i) h[X_[r_j,s_i] - A_{l_i-1+chi(i in I)} + A_{m_j} + B_{i-1} - B_{j-1}]).
inline Poly mrpp_I_det(const DentedPartition& lambda, const Partition& mu, const FlagPair& flags, const MarkSet& I,
                       Context ctx) {
  const int n = flags.n();
  const FlagPair f = flags.resolved(n);
  auto M = detail::build(n, [&](int i, int j) {
    if (f.r[j - 1] > f.s[i - 1]) return Poly(ctx);
    const int in = I.count(i) ? 1 : 0;
    return h_pleth(lambda.part(i) - mu.part(j) - i + j,
                   Alphabet::X(f.r[j - 1], f.s[i - 1]) - detail::Apre(lambda.part(i) - 1 + in) +
                       detail::Apre(mu.part(j)) + detail::Bpre(i - 1) - detail::Bpre(j - 1),
                   ctx);
  });
  return det_minor_expansion(M, ctx);
}

// The bottom-marked analogue:
// det(chi(r_j <= s_i) e[X_[r_j,s_i-chi(i in I)] - A_{i-1} + A_{j-1} + B_{l_i-1+chi(i in I)} - B_{m_j}]).
inline Poly bmrpp_I_det(const DentedPartition& lambda, const Partition& mu, const FlagPair& flags, const MarkSet& I,
                        Context ctx) {
  const int n = flags.n();
  const FlagPair f = flags.resolved(n);
  auto M = detail::build(n, [&](int i, int j) {
    if (f.r[j - 1] > f.s[i - 1]) return Poly(ctx);
    const int in = I.count(i) ? 1 : 0;
    return e_pleth(lambda.part(i) - mu.part(j) - i + j,
                   Alphabet::X(f.r[j - 1], f.s[i - 1] - in) - detail::Apre(i - 1) + detail::Apre(j - 1) +
                       detail::Bpre(lambda.part(i) - 1 + in) - detail::Bpre(mu.part(j)),
                   ctx);
  });
  return det_minor_expansion(M, ctx);
}

// Admissible boundary sets: {1..p} or {1..p} minus {k}, with k <= p <= l(lambda)
// and lambda_k = ... = lambda_p, where (k, lambda_k) is the minimal cell.
inline std::vector<MarkSet> admissible_mark_sets(const DentedPartition& lambda) {
  std::vector<MarkSet> out;
  const int k = lambda.dent_index();
  if (lambda.length() == 0) {
    out.push_back({});
    return out;
  }
  for (int p = k; p <= lambda.length() && lambda.part(p) == lambda.part(k); ++p) {
    MarkSet full, minus;
    for (int i = 1; i <= p; ++i) {
      full.insert(i);
      if (i != k) minus.insert(i);
    }
    out.push_back(full);
    out.push_back(minus);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Flagged Grothendieck polynomials of Matsumura with one parameter beta
// (realized as beta_1).

inline Poly beta_collapsed(Context ctx) { return Poly::var(ctx, bv(1)); }

// prod_{i=q}^{p} (1 + beta x_i) * sum_{k>=0} (-beta)^k h_{m+k}[X_[q,p]].
inline Poly matsumura_Gpq(int m, int p, int q, Context ctx) {
  Poly beta = beta_collapsed(ctx);
  Poly sum(ctx);
  Poly neg = -beta;
  for (int k = std::max(0, -m); m + k <= ctx.D; ++k) {
    Poly h = h_pleth(m + k, Alphabet::X(q, p), ctx);
    if (h.is_zero()) {
      if (q <= p) continue;
      if (m + k > 0) break;
    }
    sum += neg.pow(static_cast<unsigned>(k)) * h;
  }
  Poly prod(ctx, 1);
  for (int i = q; i <= p; ++i) prod *= Poly(ctx, 1) + beta * Poly::var(ctx, xv(i));
  return prod * sum;
}

// det( sum_s C(i-j, s) beta^s G^{[f_i/g_j]}_{l_i-m_j-i+j+s} ) over l(lambda) rows.
inline Poly matsumura_original_det(const Partition& lambda, const Partition& mu, const std::vector<int>& f,
                                   const std::vector<int>& g, Context ctx) {
  const int N = lambda.length();
  Poly beta = beta_collapsed(ctx);
  auto M = detail::build(N, [&](int i, int j) {
    Poly entry(ctx);
    const int m = lambda.part(i) - mu.part(j) - i + j;
    for (int s = 0; m + s <= std::max(ctx.D, 0); ++s) {
      mpz_class b = detail::binom(i - j, s);
      if (b == 0) {
        if (i - j >= 0) break;
        continue;
      }
      entry += matsumura_Gpq(m + s, f[static_cast<std::size_t>(i - 1)], g[static_cast<std::size_t>(j - 1)], ctx)
                   .scaled(b) *
               beta.pow(static_cast<unsigned>(s));
    }
    return entry;
  });
  return det_minor_expansion(M, ctx);
}

// The ominus form of the same determinant, with the sign convention verified
// against set-valued tableaux: the beta inside the ominus argument enters as -beta.
//   prod (1 + beta x_l) * [det(h[X_[g_j,f_i] (-) (j-i+1) beta])]_{beta -> -beta}
inline Poly matsumura_det(const Partition& lambda, const Partition& mu, const std::vector<int>& f,
                          const std::vector<int>& g, Context ctx, bool literal_sign = false) {
  const int N = lambda.length();
  auto M = detail::build(N, [&](int i, int j) {
    return h_ominus(lambda.part(i) - mu.part(j) - i + j,
                    {Alphabet::X(g[static_cast<std::size_t>(j - 1)], f[static_cast<std::size_t>(i - 1)]),
                     Alphabet::multiple(j - i + 1, bv(1))},
                    ctx);
  });
  Poly det = det_minor_expansion(M, ctx);
  if (!literal_sign) det = specialize(det, {{bv(1), ParamImage{std::nullopt, bv(1), -1}}});
  Poly beta = beta_collapsed(ctx);
  Poly c(ctx, 1);
  for (int i = 1; i <= N; ++i)
    for (int l = g[static_cast<std::size_t>(i - 1)]; l <= f[static_cast<std::size_t>(i - 1)]; ++l)
      c *= Poly(ctx, 1) + beta * Poly::var(ctx, xv(l));
  return c * det;
}

// Row-flagged G with a = 0 and every b_i replaced by sign * beta.
inline Poly G_flagged_collapsed(const Partition& lambda, const Partition& mu, const std::vector<int>& f,
                                const std::vector<int>& g, int sign, Context ctx) {
  const int N = lambda.length();
  FlaggedSpec spec{lambda, mu, N, FlagPair{g, f}, Orientation::Row, Kind::G};
  Poly v = G_flagged_det(spec, ctx).value;
  return v.substitute([&](VarId w) -> std::optional<Poly> {
    if (w.family == Family::ALPHA) return Poly(ctx);
    if (w.family == Family::BETA) return Poly::var(ctx, bv(1)).scaled(sign);
    return std::nullopt;
  });
}

// ---------------------------------------------------------------------------
// Skew Schur expansions over generalized partitions.

// prod_i sum_m t_i^m basis_m(x): with basis E and t_i = -beta_i this is
// prod (1 - beta_i x_l); with basis H and t_i = alpha_i it is prod (1 - alpha_i x_l)^{-1}.
struct Prefactor {
  enum class Basis { None, E, H };
  Basis basis = Basis::None;
  std::vector<Poly> t;

  Prefactor omega() const {
    Prefactor p = *this;
    if (basis == Basis::E) p.basis = Basis::H;
    else if (basis == Basis::H) p.basis = Basis::E;
    return p;
  }
  friend bool operator==(const Prefactor& a, const Prefactor& b) {
    if (a.basis != b.basis) return false;
    if (a.basis == Basis::None) return true;
    return a.t == b.t;
  }

  Poly evaluate(int nx, Context ctx) const {
    Poly out(ctx, 1);
    if (basis == Basis::None) return out;
    for (auto& ti : t) {
      Poly s(ctx);
      for (int m = 0; m <= ctx.D; ++m) {
        Poly b = basis == Basis::E ? e_pleth(m, Alphabet::Xn(nx), ctx) : h_pleth(m, Alphabet::Xn(nx), ctx);
        if (b.is_zero()) continue;
        s += ti.recontext(ctx).pow(static_cast<unsigned>(m)) * b;
      }
      out *= s;
    }
    return out;
  }
};

using GPairKey = std::pair<GeneralizedPartition, GeneralizedPartition>;

struct SchurExpansion {
  // Every entry multiplies s_{nu/rho}, or s_{nu'/rho'} when conjugated is set.
  bool conjugated = false;
  std::map<GPairKey, Poly> entries;
  Prefactor prefactor;
};

enum class ExpansionKind { G_h, G_e, g_h, g_e };

// s_{nu/rho} (or s_{nu'/rho'}) in x_1..x_nx for generalized partitions.
inline Poly schur_of_key(const GPairKey& key, bool conjugated, int nx, Context ctx) {
  const auto& [nu, rho] = key;
  if (!contains(rho, nu)) return Poly(ctx);
  if (!conjugated) return schur_generalized(nu, rho, nx, ctx);
  const int shift = rho.n() ? -rho.part(rho.n()) : 0;
  Partition o = nu.shifted(shift).to_partition(), in = rho.shifted(shift).to_partition();
  return schur_jt(SkewShape(o.conjugate(), in.conjugate()), nx, ctx);
}

inline Poly evaluate_expansion(const SchurExpansion& e, int nx, Context ctx) {
  Poly sum(ctx);
  for (auto& [key, coef] : e.entries) sum += coef.recontext(ctx) * schur_of_key(key, e.conjugated, nx, ctx);
  return e.prefactor.evaluate(nx, ctx) * sum;
}

namespace detail {
// Generalized partitions rho <= mu (length n) with |mu| - |rho| <= budget.
inline std::vector<GeneralizedPartition> generalized_below(const GeneralizedPartition& mu, int budget) {
  std::vector<GeneralizedPartition> out;
  const int n = mu.n();
  std::vector<int> cur(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i > n) {
      out.emplace_back(cur);
      return;
    }
    int hi = mu.part(i);
    if (i > 1) hi = std::min(hi, cur[static_cast<std::size_t>(i - 2)]);
    for (int v = hi; mu.part(i) - v <= left; --v) {
      cur[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1, left - (mu.part(i) - v));
    }
  };
  rec(rec, 1, budget);
  return out;
}
}  // namespace detail

// Coefficient determinants of the four expansions.
inline Poly coeff_C(const GeneralizedPartition& lambda, const GeneralizedPartition& nu, Context ctx) {
  const int n = lambda.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return h_pleth(nu.part(i) - lambda.part(j) - i + j,
                                              detail::Apre(lambda.part(j)) - detail::Bpre(j - 1), ctx);
                             }),
                             ctx);
}
inline Poly coeff_Cprime(const GeneralizedPartition& rho, const GeneralizedPartition& mu, Context ctx) {
  const int n = mu.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return h_pleth(mu.part(i) - rho.part(j) - i + j,
                                              -detail::Apre(mu.part(i)) + detail::Bpre(i), ctx);
                             }),
                             ctx);
}
inline Poly coeff_D(const GeneralizedPartition& lambda, const GeneralizedPartition& nu, Context ctx) {
  const int n = lambda.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return e_pleth(nu.part(i) - lambda.part(j) - i + j,
                                              detail::Apre(j - 1) - detail::Bpre(lambda.part(j)), ctx);
                             }),
                             ctx);
}
inline Poly coeff_Dprime(const GeneralizedPartition& rho, const GeneralizedPartition& mu, Context ctx) {
  const int n = mu.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return e_pleth(mu.part(i) - rho.part(j) - i + j,
                                              -detail::Apre(i) + detail::Bpre(mu.part(i)), ctx);
                             }),
                             ctx);
}
inline Poly coeff_c(const GeneralizedPartition& lambda, const GeneralizedPartition& nu, Context ctx) {
  const int n = lambda.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return h_pleth(lambda.part(i) - nu.part(j) - i + j,
                                              -detail::Apre(lambda.part(i) - 1) + detail::Bpre(i - 1), ctx);
                             }),
                             ctx);
}
inline Poly coeff_cprime(const GeneralizedPartition& rho, const GeneralizedPartition& mu, Context ctx) {
  const int n = mu.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return h_pleth(rho.part(i) - mu.part(j) - i + j,
                                              detail::Apre(mu.part(j)) - detail::Bpre(j - 1), ctx);
                             }),
                             ctx);
}
inline Poly coeff_d(const GeneralizedPartition& lambda, const GeneralizedPartition& nu, Context ctx) {
  const int n = lambda.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return e_pleth(lambda.part(i) - nu.part(j) - i + j,
                                              -detail::Apre(i - 1) + detail::Bpre(lambda.part(i) - 1), ctx);
                             }),
                             ctx);
}
inline Poly coeff_dprime(const GeneralizedPartition& rho, const GeneralizedPartition& mu, Context ctx) {
  const int n = mu.n();
  return det_minor_expansion(detail::build(n, [&](int i, int j) {
                               return e_pleth(rho.part(i) - mu.part(j) - i + j,
                                              detail::Apre(j - 1) - detail::Bpre(mu.part(j)), ctx);
                             }),
                             ctx);
}

// G_h: G_{l/m} = C * sum C_{l,nu} s_{nu/rho} C'_{rho,m} over rho <= m <= l <= nu.
// G_e: G_{l'/m'} = D * sum D_{l,nu} s_{nu'/rho'} D'_{rho,m}.
// g_h: g_{l/m} = sum c_{l,nu} s_{nu/rho} c'_{rho,m} over m <= rho <= nu <= l.
// g_e: g_{l'/m'} = sum d_{l,nu} s_{nu'/rho'} d'_{rho,m}.
// For the G kinds the pairs are limited by |nu/l| + |m/rho| <= budget, which makes
// the expansion exact through x-degree |l/m| + budget.
inline SchurExpansion skew_schur_expansion(const Partition& lambda, const Partition& mu, int n, ExpansionKind kind,
                                           int budget, Context ctx) {
  if (!contains(mu, lambda)) throw ValidityError("inner shape not contained in outer shape");
  if (std::max(lambda.length(), mu.length()) > n) throw ValidityError("shape has more than n rows");
  GeneralizedPartition L(lambda, n), M(mu, n);
  SchurExpansion out;
  if (kind == ExpansionKind::G_h || kind == ExpansionKind::G_e) {
    const bool h = kind == ExpansionKind::G_h;
    out.conjugated = !h;
    out.prefactor.basis = h ? Prefactor::Basis::E : Prefactor::Basis::H;
    for (int i = 1; i <= n; ++i)
      out.prefactor.t.push_back(h ? -Poly::var(ctx, bv(i)) : Poly::var(ctx, av(i)));
    for (auto& nup : partitions_above(lambda, budget, n)) {
      GeneralizedPartition nu(nup, n);
      Poly left = h ? coeff_C(L, nu, ctx) : coeff_D(L, nu, ctx);
      if (left.is_zero()) continue;
      for (auto& rho : detail::generalized_below(M, budget - (nup.size() - lambda.size()))) {
        Poly right = h ? coeff_Cprime(rho, M, ctx) : coeff_Dprime(rho, M, ctx);
        if (right.is_zero()) continue;
        out.entries.emplace(GPairKey{nu, rho}, left * right);
      }
    }
  } else {
    const bool h = kind == ExpansionKind::g_h;
    out.conjugated = !h;
    for (auto& nup : partitions_between(mu, lambda)) {
      GeneralizedPartition nu(nup, n);
      Poly left = h ? coeff_c(L, nu, ctx) : coeff_d(L, nu, ctx);
      if (left.is_zero()) continue;
      for (auto& rhop : partitions_between(mu, nup)) {
        GeneralizedPartition rho(rhop, n);
        Poly right = h ? coeff_cprime(rho, M, ctx) : coeff_dprime(rho, M, ctx);
        if (right.is_zero()) continue;
        out.entries.emplace(GPairKey{nu, rho}, left * right);
      }
    }
  }
  return out;
}

// Flagged determinant with r = (1,...,1), s = (nx,...,nx) in the orientation
// that matches the expansion kind.
inline Poly expansion_target(const Partition& lambda, const Partition& mu, int n, ExpansionKind kind, int nx,
                             Context ctx) {
  FlaggedSpec spec{lambda, mu, n,
                   FlagPair{std::vector<int>(static_cast<std::size_t>(n), 1), std::vector<int>(static_cast<std::size_t>(n), nx)},
                   (kind == ExpansionKind::G_h || kind == ExpansionKind::g_h) ? Orientation::Row : Orientation::Col,
                   (kind == ExpansionKind::G_h || kind == ExpansionKind::G_e) ? Kind::G : Kind::g};
  return spec.kind == Kind::G ? G_flagged_det(spec, ctx).value : g_flagged_det(spec, ctx).value;
}

// (a, b) -> (-b, -a).
inline Poly swap_negate_params(const Poly& p) {
  Context ctx = p.context();
  return p.substitute([&](VarId v) -> std::optional<Poly> {
    if (v.family == Family::ALPHA) return -Poly::var(ctx, bv(v.index));
    if (v.family == Family::BETA) return -Poly::var(ctx, av(v.index));
    return std::nullopt;
  });
}

// omega applied to the expansion of G_{l/m}(x;a,b) (or g) against the conjugate
// expansion with parameters (-b,-a), entry by entry.
inline bool omega_check(const Partition& lambda, const Partition& mu, Kind kind, int budget, Context ctx) {
  const int n = std::max(1, std::max(lambda.length(), mu.length()));
  const bool G = kind == Kind::G;
  SchurExpansion src = skew_schur_expansion(lambda, mu, n, G ? ExpansionKind::G_h : ExpansionKind::g_h, budget, ctx);
  SchurExpansion dst = skew_schur_expansion(lambda, mu, n, G ? ExpansionKind::G_e : ExpansionKind::g_e, budget, ctx);
  SchurExpansion image;
  image.conjugated = !src.conjugated;
  image.entries = src.entries;
  image.prefactor = src.prefactor.omega();
  SchurExpansion target;
  target.conjugated = dst.conjugated;
  for (auto& [k, v] : dst.entries) {
    Poly w = swap_negate_params(v);
    if (!w.is_zero()) target.entries.emplace(k, w);
  }
  target.prefactor = dst.prefactor;
  for (auto& t : target.prefactor.t) t = swap_negate_params(t);
  if (image.conjugated != target.conjugated) return false;
  if (!(image.prefactor == target.prefactor)) return false;
  return image.entries == target.entries;
}

}  // namespace rgroth
