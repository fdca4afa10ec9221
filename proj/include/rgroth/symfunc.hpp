#pragma once

// h_m and e_m evaluated at signed alphabets, the ominus pairing, Schur
// polynomials and Schur-basis expansion.

#include "rgroth/ring.hpp"
#include "rgroth/shapes.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace rgroth {

class UnsupportedArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class SymmetryViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
class ExpansionIncomplete : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Block {
  enum class Kind { XInterval, APrefix, BPrefix, AInterval, BInterval, Single, ConstMultiple };
  Kind kind = Kind::XInterval;
  int lo = 0, hi = 0;
  VarId var{};
  long mult = 1;
};

// A formal signed sum of variable blocks. Prefixes A_k, B_k with k <= 0 and
// intervals with lo > hi are the zero alphabet.
class Alphabet {
 public:
  struct Atom {
    int sign;
    Block block;
  };

  Alphabet() = default;

  static Alphabet X(int r, int s) { return of({Block::Kind::XInterval, r, s}); }
  static Alphabet Xn(int n) { return X(1, n); }
  static Alphabet A(int k) { return of({Block::Kind::APrefix, 1, k}); }
  static Alphabet B(int k) { return of({Block::Kind::BPrefix, 1, k}); }
  static Alphabet AI(int p, int q) { return of({Block::Kind::AInterval, p, q}); }
  static Alphabet BI(int p, int q) { return of({Block::Kind::BInterval, p, q}); }
  static Alphabet single(VarId v) { return of({Block::Kind::Single, 0, 0, v}); }
  static Alphabet multiple(long m, VarId v) { return of({Block::Kind::ConstMultiple, 0, 0, v, m}); }

  friend Alphabet operator+(Alphabet a, const Alphabet& b) {
    a.atoms_.insert(a.atoms_.end(), b.atoms_.begin(), b.atoms_.end());
    return a;
  }
  Alphabet operator-() const {
    Alphabet r = *this;
    for (auto& a : r.atoms_) a.sign = -a.sign;
    return r;
  }
  friend Alphabet operator-(const Alphabet& a, const Alphabet& b) { return a + (-b); }

  const std::vector<Atom>& atoms() const { return atoms_; }

  // Net multiplicity of every variable; zero entries are removed.
  std::map<VarId, long> multiplicities() const {
    std::map<VarId, long> m;
    auto add_range = [&](Family f, int lo, int hi, long c) {
      for (int i = std::max(lo, 1); i <= hi; ++i) m[{f, i}] += c;
    };
    for (auto& [sign, b] : atoms_) {
      switch (b.kind) {
        case Block::Kind::XInterval: add_range(Family::X, b.lo, b.hi, sign); break;
        case Block::Kind::APrefix:
        case Block::Kind::AInterval: add_range(Family::ALPHA, b.lo, b.hi, sign); break;
        case Block::Kind::BPrefix:
        case Block::Kind::BInterval: add_range(Family::BETA, b.lo, b.hi, sign); break;
        case Block::Kind::Single: m[b.var] += sign; break;
        case Block::Kind::ConstMultiple: m[b.var] += sign * b.mult; break;
      }
    }
    for (auto it = m.begin(); it != m.end();) it = it->second == 0 ? m.erase(it) : std::next(it);
    return m;
  }

  bool has_x() const {
    for (auto& [v, c] : multiplicities())
      if (v.family == Family::X) return true;
    return false;
  }
  bool has_params() const {
    for (auto& [v, c] : multiplicities())
      if (v.family != Family::X) return true;
    return false;
  }

 private:
  static Alphabet of(Block b) {
    Alphabet a;
    a.atoms_.push_back({1, b});
    return a;
  }
  std::vector<Atom> atoms_;
};

namespace detail {

// Generalized binomial coefficient C(a, k) for integer a, k >= 0.
inline mpz_class binom(long a, long k) {
  if (k < 0) return 0;
  mpz_class num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

enum class Basis { H, E };

inline std::string series_key(Basis basis, Context ctx, const std::map<VarId, long>& mult) {
  std::string k = (basis == Basis::H ? "h" : "e") + std::to_string(ctx.n) + ":" + std::to_string(ctx.D);
  for (auto& [v, c] : mult)
    k += "|" + std::to_string(static_cast<int>(v.family)) + "." + std::to_string(v.index) + "^" + std::to_string(c);
  return k;
}

// Coefficients 0..K of prod_v H(t)^{c_v} (or E), H = 1/(1 - v t), E = 1 + v t.
inline std::vector<Poly> compute_series(Basis basis, Context ctx, const std::map<VarId, long>& mult, int K) {
  std::vector<Poly> s(static_cast<std::size_t>(K + 1), Poly(ctx));
  s[0] = Poly(ctx, 1);
  for (auto& [v, c] : mult) {
    std::vector<Poly> g;
    for (int k = 0; k <= K; ++k) {
      mpz_class coef = basis == Basis::H ? binom(c + k - 1, k) : binom(c, k);
      g.push_back(Poly::var(ctx, v, static_cast<unsigned>(k)).scaled(coef));
    }
    std::vector<Poly> t(static_cast<std::size_t>(K + 1), Poly(ctx));
    for (int a = 0; a <= K; ++a) {
      if (s[static_cast<std::size_t>(a)].is_zero()) continue;
      for (int b = 0; a + b <= K; ++b) {
        if (g[static_cast<std::size_t>(b)].is_zero()) continue;
        t[static_cast<std::size_t>(a + b)] += s[static_cast<std::size_t>(a)] * g[static_cast<std::size_t>(b)];
      }
    }
    s = std::move(t);
  }
  return s;
}

struct SeriesCache {
  std::mutex mu;
  std::map<std::string, std::vector<Poly>> table;
};
inline SeriesCache& series_cache() {
  static SeriesCache c;
  return c;
}

inline Poly series_coeff(Basis basis, Context ctx, const std::map<VarId, long>& mult, int m) {
  if (m < 0) return Poly(ctx);
  if (mult.empty()) return m == 0 ? Poly(ctx, 1) : Poly(ctx);
  auto key = series_key(basis, ctx, mult);
  auto& cache = series_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.table.find(key);
    if (it != cache.table.end() && static_cast<int>(it->second.size()) > m) return it->second[static_cast<std::size_t>(m)];
  }
  auto s = compute_series(basis, ctx, mult, std::max(m, 8));
  Poly out = s[static_cast<std::size_t>(m)];
  std::lock_guard<std::mutex> lock(cache.mu);
  auto& slot = cache.table[key];
  if (slot.size() < s.size()) slot = std::move(s);
  return out;
}

}  // namespace detail

inline Poly h_pleth(int m, const Alphabet& Z, Context ctx) {
  return detail::series_coeff(detail::Basis::H, ctx, Z.multiplicities(), m);
}
inline Poly e_pleth(int m, const Alphabet& Z, Context ctx) {
  return detail::series_coeff(detail::Basis::E, ctx, Z.multiplicities(), m);
}
inline Alphabet block_alphabet(const Block& b) {
  switch (b.kind) {
    case Block::Kind::XInterval: return Alphabet::X(b.lo, b.hi);
    case Block::Kind::APrefix: return Alphabet::A(b.hi);
    case Block::Kind::BPrefix: return Alphabet::B(b.hi);
    case Block::Kind::AInterval: return Alphabet::AI(b.lo, b.hi);
    case Block::Kind::BInterval: return Alphabet::BI(b.lo, b.hi);
    case Block::Kind::Single: return Alphabet::single(b.var);
    case Block::Kind::ConstMultiple: return Alphabet::multiple(b.mult, b.var);
  }
  return Alphabet();
}
inline Poly h_block(int m, const Block& b, Context ctx) { return h_pleth(m, block_alphabet(b), ctx); }
inline Poly e_block(int m, const Block& b, Context ctx) { return e_pleth(m, block_alphabet(b), ctx); }

// Y (x variables only) paired with Z (parameters only).
struct OminusArg {
  Alphabet left, right;
};

namespace detail {
inline Poly ominus(Basis basis, int m, const OminusArg& arg, Context ctx) {
  auto L = arg.left.multiplicities(), R = arg.right.multiplicities();
  for (auto& [v, c] : L)
    if (v.family != Family::X) throw UnsupportedArgument("left side of ominus must contain only x variables");
  for (auto& [v, c] : R)
    if (v.family == Family::X) throw UnsupportedArgument("right side of ominus must not contain x variables");
  Poly out(ctx);
  // h_{m+k}[left] has x-degree m+k, so k <= D - m.
  for (int k = std::max(0, -m); k <= ctx.D - m; ++k) {
    Poly a = series_coeff(basis, ctx, L, m + k);
    if (a.is_zero()) continue;
    Poly b = series_coeff(basis, ctx, R, k);
    if (b.is_zero()) continue;
    out += a * b;
  }
  return out;
}
}  // namespace detail

inline Poly h_ominus(int m, const OminusArg& arg, Context ctx) { return detail::ominus(detail::Basis::H, m, arg, ctx); }
inline Poly e_ominus(int m, const OminusArg& arg, Context ctx) { return detail::ominus(detail::Basis::E, m, arg, ctx); }

// det(h_{l_i - m_j - i + j}[X_n]) over l(outer) rows.
inline Poly schur_jt(const Partition& outer, const Partition& inner, int n, Context ctx) {
  const int N = std::max(outer.length(), inner.length());
  Matrix M(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      M[static_cast<std::size_t>(i - 1)].push_back(
          h_pleth(outer.part(i) - inner.part(j) - i + j, Alphabet::Xn(n), ctx));
  return det_minor_expansion(M, ctx);
}
inline Poly schur_jt(const SkewShape& s, int n, Context ctx) { return schur_jt(s.outer, s.inner, n, ctx); }

// s_{nu/rho}(x_1..x_nx) for generalized partitions of equal length.
inline Poly schur_generalized(const GeneralizedPartition& nu, const GeneralizedPartition& rho, int nx, Context ctx) {
  const int N = nu.n();
  if (rho.n() != N) throw ValidityError("generalized partitions of different lengths");
  Matrix M(static_cast<std::size_t>(N));
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      M[static_cast<std::size_t>(i - 1)].push_back(h_pleth(nu.part(i) - rho.part(j) - i + j, Alphabet::Xn(nx), ctx));
  return det_minor_expansion(M, ctx);
}

// det(x_j^{l_i+n-i}) / Vandermonde.
inline Poly schur_bialternant(const Partition& lambda, int n, Context ctx) {
  if (lambda.length() > n) return Poly(ctx);
  const int guard = n * (n - 1) / 2;
  Context big{ctx.n, ctx.D + guard};
  Matrix M(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<std::size_t>(i - 1)].push_back(
          Poly::var(big, xv(j), static_cast<unsigned>(lambda.part(i) + n - i)));
  return exact_divide(det_minor_expansion(M, big), vandermonde(big, n), guard);
}

// det(h_{l_i-i+j}[X_{n-j+1}]) compared against s_lambda(x_n).
inline bool schur_flagged_check(const Partition& lambda, int n, Context ctx) {
  Matrix M(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      M[static_cast<std::size_t>(i - 1)].push_back(h_pleth(lambda.part(i) - i + j, Alphabet::Xn(n - j + 1), ctx));
  return det_minor_expansion(M, ctx) == schur_jt(lambda, {}, n, ctx);
}

// s_lambda * s_mu = s_{lambda o mu} in n variables.
inline bool product_circ_check(const Partition& lambda, const Partition& mu, int n, Context ctx) {
  return schur_jt(lambda, {}, n, ctx) * schur_jt(mu, {}, n, ctx) == schur_jt(circ(lambda, mu, n), n, ctx);
}

inline bool is_symmetric(const Poly& p, int n) {
  for (int i = 1; i < n; ++i)
    if (p.swap_x(i, i + 1) != p) return false;
  return true;
}

using SchurCoefficients = std::map<Partition, Poly>;

// Peels dominant monomials of a symmetric polynomial in x_1..x_n.
inline SchurCoefficients schur_expand(const Poly& p, int n, int max_degree) {
  const Context ctx = p.context();
  if (max_degree > ctx.D) throw std::invalid_argument("schur_expand: degree bound exceeds truncation");
  if (p.has_x() && p.terms().back().first.max_x_index() > n) {
    for (auto& [m, c] : p.terms())
      if (m.max_x_index() > n) throw SymmetryViolation("polynomial involves variables beyond x_n");
  }
  Poly rest = p.recontext({ctx.n, max_degree}).recontext(ctx);
  if (!is_symmetric(rest, n)) throw SymmetryViolation("polynomial is not symmetric in x_1..x_n");
  SchurCoefficients out;
  std::size_t guard = rest.size() + 1;
  while (!rest.is_zero()) {
    if (guard-- == 0) throw ExpansionIncomplete("Schur expansion did not terminate");
    const Monomial* best = nullptr;
    for (auto& [m, c] : rest.terms()) {
      Monomial xm = m.x_part();
      if (!best || Monomial::grlex_cmp(xm, best->x_part()) > 0) best = &m;
    }
    Monomial lead = best->x_part();
    std::vector<int> mu;
    for (int i = 1; i <= n; ++i) mu.push_back(static_cast<int>(lead.exponent(xv(i))));
    for (std::size_t i = 0; i + 1 < mu.size(); ++i)
      if (mu[i] < mu[i + 1]) throw SymmetryViolation("dominant monomial is not a partition");
    Poly coeff(ctx);
    std::vector<Poly::Term> cterms;
    for (auto& [m, c] : rest.terms())
      if (m.x_part() == lead) cterms.emplace_back(m.param_part(), c);
    coeff = Poly::from_terms(ctx, cterms);
    Partition lam(mu);
    rest -= coeff * schur_jt(lam, {}, n, ctx);
    auto [it, fresh] = out.try_emplace(lam, ctx);
    it->second += coeff;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

}  // namespace rgroth
