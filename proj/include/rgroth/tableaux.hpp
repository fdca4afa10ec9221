#pragma once

// Weighted enumeration of the tableau models: marked multiset-valued tableaux,
// marked reverse plane partitions, (in)elegant tableaux and flagged set-valued
// tableaux.

#include "rgroth/ring.hpp"
#include "rgroth/shapes.hpp"

#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rgroth {

using Pos = std::pair<int, int>;

// Larger than every finite entry; marks an unbounded boundary cell.
inline constexpr int kInfEntry = std::numeric_limits<int>::max();

enum class FlagAxis { Row, Col };

namespace detail {

// Cells ordered by decreasing column, then increasing row. Every cell's right
// and upper neighbours come before it.
inline std::vector<Pos> fill_order(std::vector<Pos> cells) {
  std::sort(cells.begin(), cells.end(), [](const Pos& a, const Pos& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return cells;
}

inline std::vector<Pos> positions(const SkewShape& s) {
  std::vector<Pos> out;
  for (auto& c : s.cells()) out.emplace_back(c.i, c.j);
  return out;
}

inline std::pair<int, int> bounds_for(const Pos& p, const FlagPair& f, FlagAxis axis, int ambient) {
  const int k = axis == FlagAxis::Row ? p.first : p.second;
  if (k > f.n()) throw ValidityError("flag vectors are shorter than the shape requires");
  return {f.lower(k), f.upper(k, ambient)};
}

// Sparse accumulator of signed monomials.
struct Accumulator {
  Context ctx;
  std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
  void add(const Monomial& m, long sign) {
    if (m.xdeg() > ctx.D) return;
    acc[m] += sign;
  }
  Poly result() const {
    std::vector<Poly::Term> t;
    for (auto& [m, c] : acc)
      if (c != 0) t.emplace_back(m, c);
    return Poly::from_terms(ctx, std::move(t));
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Marked multiset-valued tableaux.

struct MultisetEntry {
  int value;
  bool marked;
};

struct MMSVTableau {
  std::map<Pos, std::vector<MultisetEntry>> cells;
};

// x^{T(i,j)} alpha_j^{unmarked - 1} (-beta_i)^{marked}, per cell.
inline Poly mmsvt_weight(const MMSVTableau& T, Context ctx) {
  Monomial m;
  long sign = 1;
  for (auto& [p, entries] : T.cells) {
    int marked = 0;
    for (auto& e : entries) {
      m = m * Monomial::var(xv(e.value));
      marked += e.marked;
    }
    const int unmarked = static_cast<int>(entries.size()) - marked;
    if (unmarked > 1) m = m * Monomial::var(av(p.second), static_cast<unsigned>(unmarked - 1));
    if (marked) m = m * Monomial::var(bv(p.first), static_cast<unsigned>(marked));
    if (marked % 2) sign = -sign;
  }
  if (m.xdeg() > ctx.D) return Poly(ctx);
  return Poly::monomial(ctx, m, sign);
}

inline bool mmsvt_valid(const MMSVTableau& T) {
  for (auto& [p, e] : T.cells) {
    if (e.empty() || e[0].marked) return false;
    for (std::size_t k = 1; k < e.size(); ++k) {
      if (e[k].value < e[k - 1].value) return false;
      if (e[k].marked && e[k].value == e[k - 1].value) return false;
    }
    auto right = T.cells.find({p.first, p.second + 1});
    if (right != T.cells.end() && e.back().value > right->second.front().value) return false;
    auto below = T.cells.find({p.first + 1, p.second});
    if (below != T.cells.end() && e.back().value >= below->second.front().value) return false;
  }
  return true;
}

// Sum of wt(T) over MMSVT of the skew shape with lo_k <= entries <= hi_k, k the
// row (or column) index. The cell sizes are bounded by the x-degree D.
inline Poly enum_mmsvt(const SkewShape& shape, const FlagPair& flags, FlagAxis axis, Context ctx) {
  auto order = detail::fill_order(detail::positions(shape));
  detail::Accumulator acc{ctx, {}};
  std::map<Pos, std::pair<int, int>> minmax;

  auto rec = [&](auto&& self, std::size_t idx, const Monomial& mono, long sign) -> void {
    if (idx == order.size()) {
      acc.add(mono, sign);
      return;
    }
    const Pos p = order[idx];
    auto [lo, hi] = detail::bounds_for(p, flags, axis, ctx.n);
    if (auto it = minmax.find({p.first - 1, p.second}); it != minmax.end()) lo = std::max(lo, it->second.second + 1);
    if (auto it = minmax.find({p.first, p.second + 1}); it != minmax.end()) hi = std::min(hi, it->second.first);
    const int cells_left = static_cast<int>(order.size() - idx - 1);
    const int budget = ctx.D - mono.xdeg() - cells_left;
    if (lo > hi || budget < 1) return;

    // distinct values v_1 < ... < v_d with multiplicities; each v_t (t >= 2) may
    // carry one mark on its first copy
    std::vector<std::pair<int, int>> chosen;  // value, multiplicity
    auto pick = [&](auto&& pself, int from, int used) -> void {
      if (!chosen.empty()) {
        const int d = static_cast<int>(chosen.size());
        Monomial base = mono;
        for (auto& [v, k] : chosen) base = base * Monomial::var(xv(v), static_cast<unsigned>(k));
        for (int mask = 0; mask < (1 << (d - 1)); ++mask) {
          const int marked = __builtin_popcount(static_cast<unsigned>(mask));
          const int unmarked = used - marked;
          Monomial m = base;
          if (unmarked > 1) m = m * Monomial::var(av(p.second), static_cast<unsigned>(unmarked - 1));
          if (marked) m = m * Monomial::var(bv(p.first), static_cast<unsigned>(marked));
          minmax[p] = {chosen.front().first, chosen.back().first};
          self(self, idx + 1, m, marked % 2 ? -sign : sign);
        }
        minmax.erase(p);
      }
      for (int v = from; v <= hi; ++v)
        for (int k = 1; used + k <= budget; ++k) {
          chosen.emplace_back(v, k);
          pself(pself, v + 1, used + k);
          chosen.pop_back();
        }
    };
    pick(pick, lo, 0);
  };
  rec(rec, 0, Monomial{}, 1);
  return acc.result();
}

// ---------------------------------------------------------------------------
// Marked reverse plane partitions.

enum class MrppVariant { Left, Right, Bottom };

struct MarkedEntry {
  int value;
  bool marked = false;
};

struct MRPPTableau {
  std::map<Pos, MarkedEntry> cells;
  // Virtual cells (i, lambda_i + 1) of the boundary-marked variants.
  std::map<Pos, int> boundary;

  std::optional<int> at(int i, int j) const {
    if (auto it = cells.find({i, j}); it != cells.end()) return it->second.value;
    if (auto it = boundary.find({i, j}); it != boundary.end()) return it->second;
    return std::nullopt;
  }
};

namespace detail {
inline bool same(const std::optional<int>& a, int v) { return a && *a == v && v != kInfEntry; }
}  // namespace detail

inline bool mrpp_markable(const MRPPTableau& T, const Pos& p, MrppVariant variant) {
  const int v = T.cells.at(p).value;
  switch (variant) {
    case MrppVariant::Left: return detail::same(T.at(p.first, p.second + 1), v);
    case MrppVariant::Right: return detail::same(T.at(p.first, p.second - 1), v);
    case MrppVariant::Bottom: return detail::same(T.at(p.first - 1, p.second), v);
  }
  return false;
}

// Unmarked-cell factor: beta when the entry repeats in the variant's direction.
inline std::optional<VarId> mrpp_repeat_beta(const MRPPTableau& T, const Pos& p, MrppVariant variant) {
  const int v = T.cells.at(p).value;
  switch (variant) {
    case MrppVariant::Left:
      if (detail::same(T.at(p.first - 1, p.second), v)) return bv(p.first - 1);
      break;
    case MrppVariant::Right:
      if (detail::same(T.at(p.first + 1, p.second), v)) return bv(p.first);
      break;
    case MrppVariant::Bottom:
      if (detail::same(T.at(p.first, p.second + 1), v)) return bv(p.second);
      break;
  }
  return std::nullopt;
}

inline VarId mrpp_mark_alpha(const Pos& p, MrppVariant variant) {
  switch (variant) {
    case MrppVariant::Left: return av(p.second);
    case MrppVariant::Right: return av(p.second - 1);
    case MrppVariant::Bottom: return av(p.first - 1);
  }
  return av(0);
}

inline Poly mrpp_weight(const MRPPTableau& T, MrppVariant variant, Context ctx) {
  Poly w(ctx, 1);
  for (auto& [p, e] : T.cells) {
    if (e.marked) {
      if (!mrpp_markable(T, p, variant)) throw ValidityError("mark on a cell that may not be marked");
      w *= -Poly::var(ctx, mrpp_mark_alpha(p, variant));
    } else if (auto b = mrpp_repeat_beta(T, p, variant)) {
      w *= Poly::var(ctx, *b);
    } else {
      w *= Poly::var(ctx, xv(e.value));
    }
  }
  return w;
}

// Sum of weights over all markings of the underlying RPP of T.
inline Poly mrpp_marking_sum(const MRPPTableau& T, MrppVariant variant, Context ctx) {
  std::vector<std::pair<Monomial, long>> terms{{Monomial{}, 1}};
  for (auto& [p, e] : T.cells) {
    Monomial plain = [&] {
      if (auto b = mrpp_repeat_beta(T, p, variant)) return Monomial::var(*b);
      return Monomial::var(xv(e.value));
    }();
    const bool markable = mrpp_markable(T, p, variant);
    std::vector<std::pair<Monomial, long>> next;
    next.reserve(terms.size() * 2);
    for (auto& [m, s] : terms) {
      next.emplace_back(m * plain, s);
      if (markable) next.emplace_back(m * Monomial::var(mrpp_mark_alpha(p, variant)), -s);
    }
    terms.swap(next);
  }
  detail::Accumulator acc{ctx, {}};
  for (auto& [m, s] : terms) acc.add(m, s);
  return acc.result();
}

struct MrppEnumOptions {
  MrppVariant variant = MrppVariant::Left;
  // Whether virtual boundary cells also take part in the column order of the
  // RPP (they always take part in marking and repeat tests).
  bool boundary_in_column_order = true;
};

namespace detail {
// Enumerates the underlying RPPs over the given cells and sums all markings.
inline Poly enum_rpp_cells(const std::vector<Pos>& cells, const std::function<std::pair<int, int>(const Pos&)>& bounds,
                           const std::map<Pos, int>& boundary, const MrppEnumOptions& opt, Context ctx) {
  auto order = fill_order(cells);
  MRPPTableau T;
  T.boundary = boundary;
  Poly total(ctx);
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == order.size()) {
      total += mrpp_marking_sum(T, opt.variant, ctx);
      return;
    }
    const Pos p = order[idx];
    auto [lo, hi] = bounds(p);
    if (auto it = T.cells.find({p.first - 1, p.second}); it != T.cells.end()) lo = std::max(lo, it->second.value);
    if (auto it = T.cells.find({p.first, p.second + 1}); it != T.cells.end()) hi = std::min(hi, it->second.value);
    if (opt.boundary_in_column_order) {
      if (auto it = boundary.find({p.first - 1, p.second}); it != boundary.end()) {
        if (it->second == kInfEntry) return;
        lo = std::max(lo, it->second);
      }
      if (auto it = boundary.find({p.first + 1, p.second}); it != boundary.end()) hi = std::min(hi, it->second);
    }
    for (int v = lo; v <= hi; ++v) {
      T.cells[p] = {v, false};
      self(self, idx + 1);
    }
    T.cells.erase(p);
  };
  rec(rec, 0);
  return total;
}
}  // namespace detail

// Marked RPPs of a skew shape with row or column flags.
inline Poly enum_mrpp(const SkewShape& shape, MrppVariant variant, const FlagPair& flags, FlagAxis axis, Context ctx) {
  auto cells = detail::positions(shape);
  for (auto& p : cells) {
    auto [lo, hi] = detail::bounds_for(p, flags, axis, ctx.n);
    if (lo > hi) return Poly(ctx);
  }
  return detail::enum_rpp_cells(
      cells, [&](const Pos& p) { return detail::bounds_for(p, flags, axis, ctx.n); }, {}, {variant, false}, ctx);
}

// Boundary-marked RPPs on a dented shape over mu, row flags, boundary set I:
// T(i, lambda_i + 1) is s_i for i in I and unbounded otherwise. Left variant
// gives MRPP_I, bottom variant BMRPP_I.
inline Poly enum_mrpp_I(const DentedPartition& lambda, const Partition& mu, const FlagPair& flags, const MarkSet& I,
                        Context ctx, MrppVariant variant = MrppVariant::Left, bool boundary_in_column_order = true) {
  if (variant == MrppVariant::Right) throw ValidityError("boundary sets apply to left and bottom variants");
  if (!contains(mu, lambda)) throw ValidityError("inner shape not contained in dented shape");
  const int n = flags.n();
  if (lambda.length() > n || mu.length() > n) throw ValidityError("shape has more rows than flags");
  const FlagPair f = flags.resolved(ctx.n);
  for (int i = 1; i <= n; ++i)
    if (f.r[static_cast<std::size_t>(i - 1)] > f.s[static_cast<std::size_t>(i - 1)]) return Poly(ctx);
  std::vector<Pos> cells;
  for (auto& c : lambda.cells(mu)) cells.emplace_back(c.i, c.j);
  std::map<Pos, int> boundary;
  for (int i = 1; i <= n; ++i) boundary[{i, lambda.part(i) + 1}] = I.count(i) ? f.s[static_cast<std::size_t>(i - 1)] : kInfEntry;
  return detail::enum_rpp_cells(
      cells,
      [&](const Pos& p) {
        return std::pair<int, int>{f.r[static_cast<std::size_t>(p.first - 1)], f.s[static_cast<std::size_t>(p.first - 1)]};
      },
      boundary, {variant, boundary_in_column_order}, ctx);
}

// Moves each mark of a left-marked RPP up one cell (the top cell of a column of
// a value class counting as the cell above its bottom cell), then right.
inline MRPPTableau phi_left_to_right(const MRPPTableau& T) {
  MRPPTableau out = T;
  for (auto& [p, e] : out.cells) e.marked = false;
  auto cls = [&](int i, int j) -> std::optional<int> {
    auto it = T.cells.find({i, j});
    return it == T.cells.end() ? std::nullopt : std::optional<int>(it->second.value);
  };
  for (auto& [p, e] : out.cells) {
    const auto [i, j] = p;
    if (cls(i, j - 1) != e.value) continue;
    Pos src{i + 1, j - 1};
    if (cls(src.first, src.second) != e.value) {
      int top = i;
      while (cls(top - 1, j - 1) == e.value) --top;
      src = {top, j - 1};
    }
    e.marked = T.cells.at(src).marked;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Elegant and inelegant tableaux on (generalized) skew shapes.

enum class ElegantFamily { ET_Z, IET_Z, ET_bar };
enum class ElegantRule { C, c, D, Dprime, Cprime, d, dprime, cprime };

namespace detail {
// Cell factor for entry t at content c = j - i; parameters with index <= 0 vanish.
inline Poly elegant_factor(ElegantRule rule, int t, int c, Context ctx) {
  auto A = [&](int k) { return k >= 1 ? Poly::var(ctx, av(k)) : Poly(ctx); };
  auto B = [&](int k) { return k >= 1 ? Poly::var(ctx, bv(k)) : Poly(ctx); };
  switch (rule) {
    case ElegantRule::C:
    case ElegantRule::cprime: return A(t) - B(t - c);
    case ElegantRule::D:
    case ElegantRule::dprime: return -B(t) + A(t - c);
    case ElegantRule::c:
    case ElegantRule::Cprime: return -A(t + c) + B(t);
    case ElegantRule::d:
    case ElegantRule::Dprime: return B(t + c) - A(t);
  }
  return Poly(ctx);
}
}  // namespace detail

// Sum over the family's fillings of outer/inner (generalized partitions of the
// same length) of the product of cell factors.
inline Poly enum_elegant(const GeneralizedPartition& outer, const GeneralizedPartition& inner, ElegantFamily family,
                         ElegantRule rule, Context ctx) {
  if (!contains(inner, outer)) return Poly(ctx);
  std::vector<Pos> cells;
  for (int i = 1; i <= outer.n(); ++i)
    for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) cells.emplace_back(i, j);
  std::sort(cells.begin(), cells.end());  // row-major
  const bool increasing = family != ElegantFamily::IET_Z;
  std::map<Pos, int> T;
  Poly total(ctx);
  auto rec = [&](auto&& self, std::size_t idx, const Poly& w) -> void {
    if (w.is_zero()) return;
    if (idx == cells.size()) {
      total += w;
      return;
    }
    const auto [i, j] = cells[idx];
    int lo, hi;
    switch (family) {
      case ElegantFamily::ET_Z: lo = std::min(i - j, 0) + 1, hi = i - 1; break;
      case ElegantFamily::ET_bar: lo = std::min(i - j, 0) + 1, hi = i; break;
      default: lo = std::min(j - i, 0) + 1, hi = j - 1; break;
    }
    auto left = T.find({i, j - 1});
    auto up = T.find({i - 1, j});
    if (increasing) {
      if (left != T.end()) lo = std::max(lo, left->second);
      if (up != T.end()) lo = std::max(lo, up->second + 1);
    } else {
      if (left != T.end()) hi = std::min(hi, left->second);
      if (up != T.end()) hi = std::min(hi, up->second - 1);
    }
    for (int t = lo; t <= hi; ++t) {
      T[{i, j}] = t;
      self(self, idx + 1, w * detail::elegant_factor(rule, t, j - i, ctx));
    }
    T.erase({i, j});
  };
  rec(rec, 0, Poly(ctx, 1));
  return total;
}

inline Poly elegant_weight(const std::map<Pos, int>& T, ElegantRule rule, Context ctx) {
  Poly w(ctx, 1);
  for (auto& [p, t] : T) w *= detail::elegant_factor(rule, t, p.second - p.first, ctx);
  return w;
}

// Membership test for a filling of the skew shape outer/inner.
inline bool elegant_valid(const std::map<Pos, int>& T, const SkewShape& shape, ElegantFamily family) {
  auto cells = shape.cells();
  if (cells.size() != T.size()) return false;
  for (auto& c : cells) {
    auto it = T.find({c.i, c.j});
    if (it == T.end()) return false;
    const int t = it->second;
    if (family == ElegantFamily::IET_Z) {
      if (!(std::min(c.j - c.i, 0) < t && t < c.j)) return false;
    } else {
      const int hi = family == ElegantFamily::ET_Z ? c.i - 1 : c.i;
      if (!(std::min(c.i - c.j, 0) < t && t <= hi)) return false;
    }
    const bool inc = family != ElegantFamily::IET_Z;
    if (auto l = T.find({c.i, c.j - 1}); l != T.end() && (inc ? l->second > t : l->second < t)) return false;
    if (auto u = T.find({c.i - 1, c.j}); u != T.end() && (inc ? u->second >= t : u->second <= t)) return false;
  }
  return true;
}

inline Poly enum_elegant(const SkewShape& shape, ElegantFamily family, ElegantRule rule, Context ctx) {
  const int n = std::max(1, shape.outer.length());
  return enum_elegant(GeneralizedPartition(shape.outer, n), GeneralizedPartition(shape.inner, n), family, rule, ctx);
}

// ---------------------------------------------------------------------------
// Flagged set-valued tableaux: row i entries lie in {g_i, ..., f_i};
// weight beta^{|T| - |shape|} x^T with beta realized as beta_1.
inline Poly enum_fsvt(const SkewShape& shape, const std::vector<int>& f, const std::vector<int>& g, Context ctx) {
  if (static_cast<int>(f.size()) < shape.outer.length() || static_cast<int>(g.size()) < shape.outer.length())
    throw ValidityError("flag vectors shorter than the number of rows");
  auto order = detail::fill_order(detail::positions(shape));
  detail::Accumulator acc{ctx, {}};
  std::map<Pos, std::pair<int, int>> minmax;
  auto rec = [&](auto&& self, std::size_t idx, const Monomial& mono) -> void {
    if (idx == order.size()) {
      acc.add(mono, 1);
      return;
    }
    const Pos p = order[idx];
    int lo = g[static_cast<std::size_t>(p.first - 1)], hi = f[static_cast<std::size_t>(p.first - 1)];
    if (auto it = minmax.find({p.first - 1, p.second}); it != minmax.end()) lo = std::max(lo, it->second.second + 1);
    if (auto it = minmax.find({p.first, p.second + 1}); it != minmax.end()) hi = std::min(hi, it->second.first);
    const int budget = ctx.D - mono.xdeg() - static_cast<int>(order.size() - idx - 1);
    std::vector<int> chosen;
    auto pick = [&](auto&& pself, int from) -> void {
      if (!chosen.empty()) {
        Monomial m = mono;
        for (int v : chosen) m = m * Monomial::var(xv(v));
        if (chosen.size() > 1) m = m * Monomial::var(bv(1), static_cast<unsigned>(chosen.size() - 1));
        minmax[p] = {chosen.front(), chosen.back()};
        self(self, idx + 1, m);
        minmax.erase(p);
      }
      if (static_cast<int>(chosen.size()) >= budget) return;
      for (int v = from; v <= hi; ++v) {
        chosen.push_back(v);
        pself(pself, v + 1);
        chosen.pop_back();
      }
    };
    pick(pick, lo);
  };
  rec(rec, 0, Monomial{});
  return acc.result();
}

// ---------------------------------------------------------------------------
// Text grids: one row per line, "_" for cells outside the shape, "*" after a
// marked entry, "{1,2*}" for multiset cells.

inline std::string to_grid(const MRPPTableau& T) {
  std::ostringstream os;
  int rows = 0;
  for (auto& [p, e] : T.cells) rows = std::max(rows, p.first);
  for (int i = 1; i <= rows; ++i) {
    int last = 0;
    for (auto& [p, e] : T.cells)
      if (p.first == i) last = std::max(last, p.second);
    for (int j = 1; j <= last; ++j) {
      if (j > 1) os << ' ';
      auto it = T.cells.find({i, j});
      if (it == T.cells.end()) os << '_';
      else os << it->second.value << (it->second.marked ? "*" : "");
    }
    os << '\n';
  }
  return os.str();
}

inline MRPPTableau parse_mrpp_grid(const std::string& text) {
  MRPPTableau T;
  std::istringstream rows(text);
  std::string line;
  int i = 0;
  while (std::getline(rows, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++i;
    std::istringstream toks(line);
    std::string tok;
    int j = 0;
    while (toks >> tok) {
      ++j;
      if (tok == "_") continue;
      bool marked = !tok.empty() && tok.back() == '*';
      if (marked) tok.pop_back();
      T.cells[{i, j}] = {std::stoi(tok), marked};
    }
  }
  return T;
}

inline std::string to_grid(const MMSVTableau& T) {
  std::ostringstream os;
  int rows = 0;
  for (auto& [p, e] : T.cells) rows = std::max(rows, p.first);
  for (int i = 1; i <= rows; ++i) {
    int last = 0;
    for (auto& [p, e] : T.cells)
      if (p.first == i) last = std::max(last, p.second);
    for (int j = 1; j <= last; ++j) {
      if (j > 1) os << ' ';
      auto it = T.cells.find({i, j});
      if (it == T.cells.end()) {
        os << '_';
        continue;
      }
      os << '{';
      for (std::size_t k = 0; k < it->second.size(); ++k)
        os << (k ? "," : "") << it->second[k].value << (it->second[k].marked ? "*" : "");
      os << '}';
    }
    os << '\n';
  }
  return os.str();
}

inline MMSVTableau parse_mmsvt_grid(const std::string& text) {
  MMSVTableau T;
  std::istringstream rows(text);
  std::string line;
  int i = 0;
  while (std::getline(rows, line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    ++i;
    std::istringstream toks(line);
    std::string tok;
    int j = 0;
    while (toks >> tok) {
      ++j;
      if (tok == "_") continue;
      if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}') throw ValidityError("bad multiset cell " + tok);
      std::istringstream items(tok.substr(1, tok.size() - 2));
      std::string item;
      auto& cell = T.cells[{i, j}];
      while (std::getline(items, item, ',')) {
        bool marked = !item.empty() && item.back() == '*';
        if (marked) item.pop_back();
        cell.push_back({std::stoi(item), marked});
      }
    }
  }
  return T;
}

}  // namespace rgroth
