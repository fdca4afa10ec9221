#pragma once

#include "rgroth/ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rgroth {

class ValidityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Weakly decreasing positive parts, stored without trailing zeros.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if (p_[i] < 0) throw ValidityError("negative part in partition");
      if (i + 1 < p_.size() && p_[i] < p_[i + 1]) throw ValidityError("partition parts must weakly decrease");
    }
  }

  // "4,3,1"; "0" or "" is the empty partition.
  static Partition parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.empty()) continue;
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size()) throw ValidityError("bad partition token '" + tok + "'");
      parts.push_back(v);
    }
    return Partition(parts);
  }

  int operator[](std::size_t i) const { return i < p_.size() ? p_[i] : 0; }
  // 1-based access with implicit trailing zeros.
  int part(int i) const { return i >= 1 ? (*this)[static_cast<std::size_t>(i - 1)] : 0; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  bool empty() const { return p_.empty(); }
  const std::vector<int>& parts() const { return p_; }

  std::vector<int> padded(int n) const {
    if (n < length()) throw ValidityError("partition has more than n parts");
    std::vector<int> v(p_);
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
  }

  Partition conjugate() const {
    std::vector<int> c;
    for (int j = 1; j <= (*this)[0]; ++j) {
      int cnt = 0;
      for (int v : p_)
        if (v >= j) ++cnt;
      c.push_back(cnt);
    }
    return Partition(c);
  }

  std::string str() const {
    if (p_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> p_;
};

inline bool contains(const Partition& inner, const Partition& outer) {
  for (int i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

// Fixed-length weakly decreasing integer sequence; parts may be negative.
class GeneralizedPartition {
 public:
  GeneralizedPartition() = default;
  explicit GeneralizedPartition(std::vector<int> parts) : p_(std::move(parts)) {
    for (std::size_t i = 0; i + 1 < p_.size(); ++i)
      if (p_[i] < p_[i + 1]) throw ValidityError("generalized partition parts must weakly decrease");
  }
  GeneralizedPartition(const Partition& p, int n) : p_(p.padded(n)) {}

  int n() const { return static_cast<int>(p_.size()); }
  int part(int i) const { return p_.at(static_cast<std::size_t>(i - 1)); }
  const std::vector<int>& parts() const { return p_; }
  int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }

  GeneralizedPartition shifted(int d) const {
    auto v = p_;
    for (auto& x : v) x += d;
    return GeneralizedPartition(v);
  }
  bool is_partition() const { return p_.empty() || p_.back() >= 0; }
  Partition to_partition() const {
    if (!is_partition()) throw ValidityError("generalized partition has negative parts");
    return Partition(p_);
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s + ")";
  }

  friend bool operator==(const GeneralizedPartition&, const GeneralizedPartition&) = default;
  friend auto operator<=>(const GeneralizedPartition&, const GeneralizedPartition&) = default;

 private:
  std::vector<int> p_;
};

inline bool contains(const GeneralizedPartition& inner, const GeneralizedPartition& outer) {
  if (inner.n() != outer.n()) throw ValidityError("generalized partitions of different lengths");
  for (int i = 1; i <= inner.n(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

struct Cell {
  int i, j, content;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct SkewShape {
  Partition outer, inner;

  SkewShape() = default;
  SkewShape(Partition o, Partition in = {}) : outer(std::move(o)), inner(std::move(in)) {
    if (!contains(inner, outer)) throw ValidityError("inner shape not contained in outer shape");
  }

  int size() const { return outer.size() - inner.size(); }

  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= outer.length(); ++i)
      for (int j = inner.part(i) + 1; j <= outer.part(i); ++j) out.push_back({i, j, j - i});
    return out;
  }

  SkewShape conjugate() const { return SkewShape(outer.conjugate(), inner.conjugate()); }
};

inline std::vector<Cell> cells_and_contents(const SkewShape& s) { return s.cells(); }

// (l1+m1, ..., l1+mn) / (l1-ln, ..., l1-l1).
inline SkewShape circ(const Partition& lambda, const Partition& mu, int n) {
  if (n < std::max(lambda.length(), mu.length())) throw ShapeError("circ: n smaller than a partition length");
  std::vector<int> o, in;
  for (int i = 1; i <= n; ++i) {
    o.push_back(lambda.part(1) + mu.part(i));
    in.push_back(lambda.part(1) - lambda.part(n + 1 - i));
  }
  return SkewShape(Partition(o), Partition(in));
}

// l1+1 = ... = l_{k-1}+1 = l_k >= l_{k+1} >= ... >= l_n >= 0.
class DentedPartition {
 public:
  explicit DentedPartition(std::vector<int> parts) : p_(std::move(parts)) {
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
    k_ = find_dent(p_);
    if (k_ == 0) throw ValidityError("sequence is not a dented partition");
  }

  int part(int i) const { return i >= 1 && i <= length() ? p_[static_cast<std::size_t>(i - 1)] : 0; }
  int length() const { return static_cast<int>(p_.size()); }
  int size() const { return std::accumulate(p_.begin(), p_.end(), 0); }
  const std::vector<int>& parts() const { return p_; }
  int dent_index() const { return k_; }
  std::pair<int, int> minimal_cell() const { return {k_, part(k_)}; }
  bool is_partition() const { return k_ == 1; }

  std::vector<Cell> cells(const Partition& inner) const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
      for (int j = inner.part(i) + 1; j <= part(i); ++j) out.push_back({i, j, j - i});
    return out;
  }

  // Returns k, or 0 when no k works. The empty sequence counts as a partition.
  static int find_dent(const std::vector<int>& p) {
    if (p.empty()) return 1;
    const int n = static_cast<int>(p.size());
    for (int k = 1; k <= n; ++k) {
      bool ok = true;
      for (int i = 1; i < k && ok; ++i) ok = p[i - 1] + 1 == p[k - 1];
      for (int i = k; i < n && ok; ++i) ok = p[i - 1] >= p[i];
      for (int v : p) ok = ok && v >= 0;
      if (ok) return k;
    }
    return 0;
  }

 private:
  std::vector<int> p_;
  int k_ = 1;
};

inline std::pair<int, int> minimal_cell(const DentedPartition& d) { return d.minimal_cell(); }

inline bool contains(const Partition& inner, const DentedPartition& outer) {
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

// Flag bounds; s entries may be unbounded and resolve to the ambient n.
struct FlagPair {
  static constexpr int kInf = -1;
  std::vector<int> r, s;

  int n() const { return static_cast<int>(r.size()); }
  int lower(int i) const { return r.at(static_cast<std::size_t>(i - 1)); }
  int upper(int i, int ambient) const {
    int v = s.at(static_cast<std::size_t>(i - 1));
    return v == kInf ? ambient : v;
  }
  FlagPair resolved(int ambient) const {
    FlagPair f{r, s};
    for (auto& v : f.s)
      if (v == kInf) v = ambient;
    return f;
  }
  bool bounded_by_each_other() const {
    for (int i = 1; i <= n(); ++i)
      if (s[static_cast<std::size_t>(i - 1)] != kInf && lower(i) > s[static_cast<std::size_t>(i - 1)]) return false;
    return true;
  }

  static FlagPair standard(int n) { return FlagPair{std::vector<int>(static_cast<std::size_t>(n), 1), std::vector<int>(static_cast<std::size_t>(n), n)}; }

  // "r=1,1,2 s=3,3,inf"
  static FlagPair parse(const std::string& text) {
    FlagPair f;
    bool seen_r = false, seen_s = false;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
      if (tok.rfind("r=", 0) == 0 && !seen_r) {
        f.r = parse_vector(tok.substr(2), false);
        seen_r = true;
      } else if (tok.rfind("s=", 0) == 0 && !seen_s) {
        f.s = parse_vector(tok.substr(2), true);
        seen_s = true;
      } else {
        throw ValidityError("bad flag token '" + tok + "'");
      }
    }
    if (!seen_r || !seen_s || f.r.size() != f.s.size()) throw ValidityError("flags need r and s of equal length");
    return f;
  }

  // Comma-separated positive integers, "inf" allowed when allow_inf.
  static std::vector<int> parse_vector(const std::string& text, bool allow_inf) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
      if (tok.empty()) continue;
      if (tok == "inf") {
        if (!allow_inf) throw ValidityError("'inf' is only allowed in upper flags");
        out.push_back(kInf);
        continue;
      }
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::logic_error&) {
        used = 0;
      }
      if (used != tok.size() || v < 1) throw ValidityError("flag entries must be positive integers");
      out.push_back(v);
    }
    return out;
  }
};

using MarkSet = std::set<int>;

// All partitions of k, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int k, int max_part = -1, int max_len = -1) {
  std::vector<Partition> out;
  if (max_part < 0) max_part = k;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rem, int cap) -> void {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_len >= 0 && static_cast<int>(cur.size()) >= max_len) return;
    for (int p = std::min(rem, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, rem - p, p);
      cur.pop_back();
    }
  };
  rec(rec, k, max_part);
  return out;
}

inline std::vector<Partition> partitions_up_to(int max_size, int max_len = -1) {
  std::vector<Partition> out;
  for (int k = 0; k <= max_size; ++k)
    for (auto& p : partitions_of(k, -1, max_len)) out.push_back(p);
  return out;
}

// Partitions nu with inner <= nu <= outer (componentwise).
inline std::vector<Partition> partitions_between(const Partition& inner, const Partition& outer) {
  std::vector<Partition> out;
  if (!contains(inner, outer)) return out;
  const int L = outer.length();
  std::vector<int> cur(static_cast<std::size_t>(L), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > L) {
      out.emplace_back(cur);
      return;
    }
    int hi = outer.part(i);
    if (i > 1) hi = std::min(hi, cur[static_cast<std::size_t>(i - 2)]);
    for (int v = inner.part(i); v <= hi; ++v) {
      cur[static_cast<std::size_t>(i - 1)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

// Partitions nu containing lambda with |nu| - |lambda| <= budget and at most n parts.
inline std::vector<Partition> partitions_above(const Partition& lambda, int budget, int n) {
  std::vector<Partition> out;
  for (int k = lambda.size(); k <= lambda.size() + budget; ++k)
    for (auto& p : partitions_of(k, -1, n))
      if (contains(lambda, p)) out.push_back(p);
  return out;
}

}  // namespace rgroth
