#pragma once

// Sparse multivariate polynomials over Z in the variables x_i, alpha_i, beta_i,
// truncated at a fixed total x-degree.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rgroth {

enum class Family : std::uint8_t { X = 0, ALPHA = 1, BETA = 2 };

struct VarId {
  Family family = Family::X;
  int index = 1;

  friend bool operator==(VarId a, VarId b) { return a.family == b.family && a.index == b.index; }
  friend bool operator<(VarId a, VarId b) {
    return a.family != b.family ? a.family < b.family : a.index < b.index;
  }
};

inline VarId xv(int i) { return {Family::X, i}; }
inline VarId av(int i) { return {Family::ALPHA, i}; }
inline VarId bv(int i) { return {Family::BETA, i}; }

class ContextMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class DivisibilityViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// n = number of x variables, D = maximal total x-degree kept.
struct Context {
  int n = 0;
  int D = 0;
  friend bool operator==(const Context&, const Context&) = default;
};

namespace detail {
// A packed factor: high 16 bits hold the variable code, low 16 bits the exponent.
// Variable codes sort as X < ALPHA < BETA, then by index.
constexpr std::uint32_t kIndexBits = 12;
inline std::uint32_t var_code(VarId v) {
  if (v.index < 1 || v.index >= (1 << kIndexBits)) throw std::out_of_range("variable index out of range");
  return (static_cast<std::uint32_t>(v.family) << kIndexBits) | static_cast<std::uint32_t>(v.index);
}
inline VarId code_var(std::uint32_t code) {
  return {static_cast<Family>(code >> kIndexBits), static_cast<int>(code & ((1u << kIndexBits) - 1))};
}
inline std::uint32_t pack(std::uint32_t code, std::uint32_t e) { return (code << 16) | e; }
inline std::uint32_t code_of(std::uint32_t f) { return f >> 16; }
inline std::uint32_t exp_of(std::uint32_t f) { return f & 0xffffu; }
inline VarId code_of_var(std::uint32_t f) { return code_var(code_of(f)); }
}  // namespace detail

class Monomial {
 public:
  Monomial() = default;

  static Monomial var(VarId v, unsigned e = 1) {
    Monomial m;
    if (e == 0) return m;
    m.f_.push_back(detail::pack(detail::var_code(v), e));
    if (v.family == Family::X) m.xdeg_ = static_cast<int>(e);
    return m;
  }

  int xdeg() const { return xdeg_; }
  int total_degree() const {
    int d = 0;
    for (auto f : f_) d += static_cast<int>(detail::exp_of(f));
    return d;
  }
  bool is_one() const { return f_.empty(); }
  bool has_x() const { return xdeg_ > 0; }

  unsigned exponent(VarId v) const {
    auto c = detail::var_code(v);
    for (auto f : f_)
      if (detail::code_of(f) == c) return detail::exp_of(f);
    return 0;
  }

  // (variable, exponent) pairs in variable order.
  std::vector<std::pair<VarId, unsigned>> factors() const {
    std::vector<std::pair<VarId, unsigned>> out;
    out.reserve(f_.size());
    for (auto f : f_) out.emplace_back(detail::code_of_var(f), detail::exp_of(f));
    return out;
  }

  int max_x_index() const {
    int m = 0;
    for (auto f : f_) {
      VarId v = detail::code_var(detail::code_of(f));
      if (v.family == Family::X) m = std::max(m, v.index);
    }
    return m;
  }

  Monomial x_part() const {
    Monomial m;
    for (auto f : f_)
      if (detail::code_var(detail::code_of(f)).family == Family::X) m.f_.push_back(f);
    m.xdeg_ = xdeg_;
    return m;
  }
  Monomial param_part() const {
    Monomial m;
    for (auto f : f_)
      if (detail::code_var(detail::code_of(f)).family != Family::X) m.f_.push_back(f);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.f_.reserve(a.f_.size() + b.f_.size());
    std::size_t i = 0, j = 0;
    while (i < a.f_.size() && j < b.f_.size()) {
      auto ca = detail::code_of(a.f_[i]), cb = detail::code_of(b.f_[j]);
      if (ca < cb) m.f_.push_back(a.f_[i++]);
      else if (cb < ca) m.f_.push_back(b.f_[j++]);
      else {
        m.f_.push_back(detail::pack(ca, detail::exp_of(a.f_[i]) + detail::exp_of(b.f_[j])));
        ++i, ++j;
      }
    }
    for (; i < a.f_.size(); ++i) m.f_.push_back(a.f_[i]);
    for (; j < b.f_.size(); ++j) m.f_.push_back(b.f_[j]);
    m.xdeg_ = a.xdeg_ + b.xdeg_;
    return m;
  }

  // a / b when b divides a.
  static std::optional<Monomial> divide(const Monomial& a, const Monomial& b) {
    Monomial m;
    std::size_t j = 0;
    for (auto f : a.f_) {
      auto c = detail::code_of(f);
      unsigned e = detail::exp_of(f);
      if (j < b.f_.size() && detail::code_of(b.f_[j]) < c) return std::nullopt;
      if (j < b.f_.size() && detail::code_of(b.f_[j]) == c) {
        unsigned eb = detail::exp_of(b.f_[j++]);
        if (eb > e) return std::nullopt;
        e -= eb;
      }
      if (e) m.f_.push_back(detail::pack(c, e));
    }
    if (j != b.f_.size()) return std::nullopt;
    m.xdeg_ = a.xdeg_ - b.xdeg_;
    return m;
  }

  // Storage order, used for canonical term lists.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.f_ < b.f_; }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

  // Graded lexicographic comparison: total degree first, then lexicographic in
  // the variable sequence x1, x2, ..., a1, a2, ..., b1, b2, ... .
  static int grlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0;
    while (i < a.f_.size() && i < b.f_.size()) {
      auto ca = detail::code_of(a.f_[i]), cb = detail::code_of(b.f_[i]);
      if (ca != cb) return ca < cb ? 1 : -1;
      auto ea = detail::exp_of(a.f_[i]), eb = detail::exp_of(b.f_[i]);
      if (ea != eb) return ea < eb ? -1 : 1;
      ++i;
    }
    if (a.f_.size() == b.f_.size()) return 0;
    return a.f_.size() > b.f_.size() ? 1 : -1;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ull;
    for (auto f : f_) h = (h ^ f) * 1099511628211ull;
    return h;
  }

  const std::vector<std::uint32_t>& raw() const { return f_; }

 private:
  friend class Poly;
  std::vector<std::uint32_t> f_;
  int xdeg_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

class Poly {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  Poly() = default;
  explicit Poly(Context ctx) : ctx_(ctx) {}
  Poly(Context ctx, const mpz_class& c) : ctx_(ctx) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }
  Poly(Context ctx, long c) : Poly(ctx, mpz_class(c)) {}

  static Poly var(Context ctx, VarId v, unsigned e = 1) { return monomial(ctx, Monomial::var(v, e), 1); }
  static Poly monomial(Context ctx, const Monomial& m, const mpz_class& c) {
    Poly p(ctx);
    check_monomial(ctx, m);
    if (c != 0 && m.xdeg() <= ctx.D) p.terms_.emplace_back(m, c);
    return p;
  }
  static Poly from_terms(Context ctx, std::vector<Term> terms) {
    Poly p(ctx);
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    for (auto& [m, c] : terms) {
      check_monomial(ctx, m);
      if (m.xdeg() <= ctx.D) acc[m] += c;
    }
    p.absorb(acc);
    return p;
  }

  const Context& context() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  mpz_class coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return t.first < k; });
    return (it != terms_.end() && it->first == m) ? it->second : mpz_class(0);
  }
  mpz_class constant_term() const { return coeff(Monomial{}); }

  bool has_x() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first.has_x(); });
  }
  int max_xdeg() const {
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.first.xdeg());
    return d;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.ctx_ == b.ctx_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, 1); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, -1); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    same_context(a, b);
    Poly r(a.ctx_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 && a.terms_[0].first.is_one()) return b.scaled(a.terms_[0].second);
    if (b.terms_.size() == 1 && b.terms_[0].first.is_one()) return a.scaled(b.terms_[0].second);
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 1);
    const int D = a.ctx_.D;
    for (auto& [ma, ca] : a.terms_) {
      for (auto& [mb, cb] : b.terms_) {
        if (ma.xdeg() + mb.xdeg() > D) continue;
        mpz_addmul(acc[ma * mb].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      }
    }
    r.absorb(acc);
    return r;
  }

  Poly scaled(const mpz_class& c) const {
    Poly r(ctx_);
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.second *= c;
    return r;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly pow(unsigned e) const {
    Poly r(ctx_, 1), b = *this;
    while (e) {
      if (e & 1u) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  // Same terms viewed in another context: monomials above the new x-degree bound
  // are dropped, monomials in x_i with i > n are dropped (x_i = 0).
  Poly recontext(Context ctx) const {
    Poly r(ctx);
    for (auto& t : terms_)
      if (t.first.xdeg() <= ctx.D && t.first.max_x_index() <= ctx.n) r.terms_.push_back(t);
    return r;
  }

  // Terms of exact x-degree d.
  Poly xdeg_part(int d) const {
    Poly r(ctx_);
    for (auto& t : terms_)
      if (t.first.xdeg() == d) r.terms_.push_back(t);
    return r;
  }

  // Substitutes variables; `sub` returns the image of a variable or nullopt to keep it.
  Poly substitute(const std::function<std::optional<Poly>(VarId)>& sub) const {
    std::map<std::pair<std::uint32_t, unsigned>, Poly> powers;
    std::map<std::uint32_t, std::optional<Poly>> images;
    Poly out(ctx_);
    std::unordered_map<Monomial, mpz_class, MonomialHash> kept;
    std::vector<Poly> pieces;
    for (auto& [m, c] : terms_) {
      Monomial rest;
      Poly factor(ctx_, c);
      bool touched = false;
      for (auto f : m.f_) {
        auto code = detail::code_of(f);
        auto it = images.find(code);
        if (it == images.end()) {
          auto img = sub(detail::code_var(code));
          if (img && img->ctx_ != ctx_) throw ContextMismatch("substitution image has a different context");
          it = images.emplace(code, std::move(img)).first;
        }
        if (!it->second) {
          rest.f_.push_back(f);
          if (detail::code_var(code).family == Family::X) rest.xdeg_ += static_cast<int>(detail::exp_of(f));
          continue;
        }
        touched = true;
        auto key = std::make_pair(code, detail::exp_of(f));
        auto pit = powers.find(key);
        if (pit == powers.end()) pit = powers.emplace(key, it->second->pow(detail::exp_of(f))).first;
        factor *= pit->second;
      }
      if (!touched) {
        kept[m] += c;
      } else {
        pieces.push_back(factor * monomial(ctx_, rest, 1));
      }
    }
    out.absorb(kept);
    for (auto& p : pieces) out += p;
    return out;
  }

  // Exchanges x_i and x_j.
  Poly swap_x(int i, int j) const {
    Context c = ctx_;
    return substitute([&](VarId v) -> std::optional<Poly> {
      if (v.family != Family::X) return std::nullopt;
      if (v.index == i) return Poly::var(c, xv(j));
      if (v.index == j) return Poly::var(c, xv(i));
      return std::nullopt;
    });
  }

  // Leading term with respect to Monomial::grlex_cmp.
  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    auto it = std::max_element(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
      return Monomial::grlex_cmp(a.first, b.first) < 0;
    });
    return *it;
  }

 private:
  static void check_monomial(Context ctx, const Monomial& m) {
    if (m.max_x_index() > ctx.n) throw ContextMismatch("x-variable index exceeds context size");
  }
  static void same_context(const Poly& a, const Poly& b) {
    if (!(a.ctx_ == b.ctx_))
      throw ContextMismatch("context mismatch: (n=" + std::to_string(a.ctx_.n) + ",D=" + std::to_string(a.ctx_.D) +
                            ") vs (n=" + std::to_string(b.ctx_.n) + ",D=" + std::to_string(b.ctx_.D) + ")");
  }

  static Poly merge(const Poly& a, const Poly& b, int sign) {
    same_context(a, b);
    Poly r(a.ctx_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
        r.terms_.emplace_back(b.terms_[j].first, sign > 0 ? b.terms_[j].second : mpz_class(-b.terms_[j].second));
        ++j;
      } else {
        mpz_class c = a.terms_[i].second;
        if (sign > 0) c += b.terms_[j].second;
        else c -= b.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i, ++j;
      }
    }
    return r;
  }

  void absorb(std::unordered_map<Monomial, mpz_class, MonomialHash>& acc) {
    terms_.clear();
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c != 0) terms_.emplace_back(m, std::move(c));
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  }

  Context ctx_;
  std::vector<Term> terms_;
};

inline Poly operator*(long c, const Poly& p) { return p.scaled(mpz_class(c)); }

using Matrix = std::vector<std::vector<Poly>>;

// Division-free Laplace expansion along rows, memoized over column subsets.
inline Poly det_minor_expansion(const Matrix& M, Context ctx) {
  const std::size_t n = M.size();
  for (auto& row : M)
    if (row.size() != n) throw ShapeError("determinant of a non-square matrix");
  if (n == 0) return Poly(ctx, 1);
  if (n > 20) throw ShapeError("matrix too large for minor expansion");
  for (auto& row : M)
    for (auto& e : row)
      if (!(e.context() == ctx)) throw ContextMismatch("matrix entry context differs");
  // minors[S] = det of the last |S| rows restricted to the columns in S.
  std::unordered_map<std::uint32_t, Poly> minors;
  minors.emplace(0u, Poly(ctx, 1));
  std::vector<std::uint32_t> layer{0u};
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t row = n - k;
    std::unordered_map<std::uint32_t, Poly> next;
    for (std::uint32_t S = 0; S < (1u << n); ++S) {
      if (static_cast<std::size_t>(__builtin_popcount(S)) != k) continue;
      Poly acc(ctx);
      int pos = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (!(S >> c & 1u)) continue;
        const Poly& e = M[row][c];
        if (!e.is_zero()) {
          auto it = minors.find(S & ~(1u << c));
          if (it != minors.end() && !it->second.is_zero()) {
            Poly t = e * it->second;
            if (pos % 2) acc -= t;
            else acc += t;
          }
        }
        ++pos;
      }
      if (!acc.is_zero()) next.emplace(S, std::move(acc));
    }
    minors = std::move(next);
  }
  auto it = minors.find((1u << n) - 1);
  return it == minors.end() ? Poly(ctx) : it->second;
}

inline Poly det_minor_expansion(const Matrix& M) {
  if (M.empty()) throw ShapeError("context required for the empty determinant");
  if (M[0].empty()) throw ShapeError("determinant of a non-square matrix");
  return det_minor_expansion(M, M[0][0].context());
}

// Exact quotient num/den. num lives in context (n, D + guard); the quotient is
// returned in context (n, D). den must be homogeneous in x of degree guard.
inline Poly exact_divide(const Poly& num, const Poly& den, int guard_degree) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  const Context in = num.context();
  if (!(den.context() == in)) throw ContextMismatch("numerator and denominator contexts differ");
  const Context out{in.n, in.D - guard_degree};
  if (out.D < 0) throw std::invalid_argument("guard degree exceeds truncation bound");
  for (auto& [m, c] : den.terms())
    if (m.xdeg() != guard_degree) throw std::invalid_argument("denominator must be x-homogeneous of the guard degree");

  auto cmp = [](const Monomial& a, const Monomial& b) { return Monomial::grlex_cmp(a, b) > 0; };
  std::map<Monomial, mpz_class, decltype(cmp)> rem(cmp);
  for (auto& [m, c] : num.terms()) rem.emplace(m, c);
  const auto& [lm, lc] = den.leading_term();
  std::vector<Poly::Term> quotient;
  while (!rem.empty()) {
    auto top = rem.begin();
    auto qm = Monomial::divide(top->first, lm);
    if (!qm || !mpz_divisible_p(top->second.get_mpz_t(), lc.get_mpz_t()))
      throw DivisibilityViolation("nonzero remainder in exact division");
    mpz_class qc;
    mpz_divexact(qc.get_mpz_t(), top->second.get_mpz_t(), lc.get_mpz_t());
    for (auto& [dm, dc] : den.terms()) {
      Monomial m = *qm * dm;
      auto it = rem.find(m);
      mpz_class delta = qc * dc;
      if (it == rem.end()) {
        rem.emplace(m, -delta);
      } else {
        it->second -= delta;
        if (it->second == 0) rem.erase(it);
      }
    }
    quotient.emplace_back(*qm, qc);
  }
  return Poly::from_terms(out, std::move(quotient));
}

// Substitutes parameters by constants or by other parameters.
struct ParamImage {
  std::optional<long> constant;
  std::optional<VarId> variable;
  long scale = 1;  // image is scale * variable when variable is set
};

inline Poly specialize(const Poly& p, const std::map<VarId, ParamImage>& assignment) {
  for (auto& [v, img] : assignment) {
    if (v.family == Family::X) throw std::invalid_argument("specialize: x variables cannot be assigned");
    if (img.variable && img.variable->family == Family::X)
      throw std::invalid_argument("specialize: parameters cannot be mapped to x variables");
  }
  Context ctx = p.context();
  return p.substitute([&](VarId v) -> std::optional<Poly> {
    auto it = assignment.find(v);
    if (it == assignment.end()) return std::nullopt;
    if (it->second.constant) return Poly(ctx, *it->second.constant);
    return Poly::var(ctx, *it->second.variable).scaled(it->second.scale);
  });
}

// Vandermonde product prod_{i<j} (x_i - x_j) over x_1..x_n.
inline Poly vandermonde(Context ctx, int n) {
  Poly v(ctx, 1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) v *= Poly::var(ctx, xv(i)) - Poly::var(ctx, xv(j));
  return v;
}

}  // namespace rgroth
