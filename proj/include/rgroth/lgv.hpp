#pragma once

// Lattice-path evaluation of the Schur coefficients C and c: single-path
// weight sums and direct enumeration of nonintersecting path families.

#include "rgroth/ring.hpp"
#include "rgroth/shapes.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace rgroth {

enum class LatticeGraph { WestNorth, EastNorth };

struct Point {
  int x, y;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

struct LatticePath {
  Point start;
  std::string steps;  // 'N', 'W' or 'E'

  std::vector<Point> vertices() const {
    std::vector<Point> v{start};
    for (char c : steps) {
      Point p = v.back();
      if (c == 'N') ++p.y;
      else if (c == 'W') --p.x;
      else ++p.x;
      v.push_back(p);
    }
    return v;
  }
  Point end() const { return vertices().back(); }
};

// Weight of the horizontal step leaving (a, b); north steps weigh 1.
//   west: alpha_b - beta_{b-a};  east: -alpha_{a+b+1} + beta_b.
inline Poly step_weight(LatticeGraph g, int a, int b, Context ctx) {
  auto A = [&](int k) { return k >= 1 ? Poly::var(ctx, av(k)) : Poly(ctx); };
  auto B = [&](int k) { return k >= 1 ? Poly::var(ctx, bv(k)) : Poly(ctx); };
  if (g == LatticeGraph::WestNorth) return A(b) - B(b - a);
  return -A(a + b + 1) + B(b);
}

inline Poly path_weight(LatticeGraph g, const LatticePath& p, Context ctx) {
  Poly w(ctx, 1);
  Point cur = p.start;
  for (char c : p.steps) {
    if (c == 'N') {
      ++cur.y;
      continue;
    }
    if ((c == 'W') != (g == LatticeGraph::WestNorth)) throw ValidityError("step not in the graph");
    w *= step_weight(g, cur.x, cur.y, ctx);
    cur.x += c == 'W' ? -1 : 1;
  }
  return w;
}

// Sum of weights of all paths u -> v, by dynamic programming over the
// rectangle spanned by the endpoints.
inline Poly path_weight_sum(LatticeGraph g, Point u, Point v, Context ctx) {
  const int dx = g == LatticeGraph::WestNorth ? u.x - v.x : v.x - u.x;
  if (dx < 0 || v.y < u.y) return Poly(ctx);
  const int dir = g == LatticeGraph::WestNorth ? -1 : 1;
  // W[k][h]: paths from u to (u.x + dir*k, u.y + h)
  std::vector<std::vector<Poly>> W(static_cast<std::size_t>(dx + 1),
                                   std::vector<Poly>(static_cast<std::size_t>(v.y - u.y + 1), Poly(ctx)));
  for (int k = 0; k <= dx; ++k)
    for (int h = 0; h <= v.y - u.y; ++h) {
      Poly& cell = W[static_cast<std::size_t>(k)][static_cast<std::size_t>(h)];
      if (k == 0 && h == 0) cell = Poly(ctx, 1);
      if (h > 0) cell += W[static_cast<std::size_t>(k)][static_cast<std::size_t>(h - 1)];
      if (k > 0)
        cell += W[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(h)] *
                step_weight(g, u.x + dir * (k - 1), u.y + h, ctx);
    }
  return W.back().back();
}

struct PathEndpoints {
  LatticeGraph graph;
  std::vector<Point> sources, sinks;
};

// C-kind (lambda inside mu): west-north paths over l(mu) rows,
// u_i = (mu_i - i, min(mu_i - i + 1, 1)), v_i = (lambda_i - i, lambda_i).
// c-kind (mu inside lambda): east-north paths over l(lambda) rows,
// u_j = (mu_j - j, min(j - mu_j, 1)), v_i = (lambda_i - i, i - 1).
enum class CoeffKind { C, c };

inline PathEndpoints coefficient_endpoints(const Partition& lambda, const Partition& mu, CoeffKind kind) {
  PathEndpoints e;
  if (kind == CoeffKind::C) {
    e.graph = LatticeGraph::WestNorth;
    for (int i = 1; i <= mu.length(); ++i) {
      e.sources.push_back({mu.part(i) - i, std::min(mu.part(i) - i + 1, 1)});
      e.sinks.push_back({lambda.part(i) - i, lambda.part(i)});
    }
  } else {
    e.graph = LatticeGraph::EastNorth;
    for (int i = 1; i <= lambda.length(); ++i) {
      e.sources.push_back({mu.part(i) - i, std::min(i - mu.part(i), 1)});
      e.sinks.push_back({lambda.part(i) - i, i - 1});
    }
  }
  return e;
}

// All nonintersecting families (p_1, ..., p_k) with p_i : u_i -> v_i.
inline std::vector<std::vector<LatticePath>> nonintersecting_families(const PathEndpoints& e) {
  std::vector<std::vector<LatticePath>> out;
  const char horiz = e.graph == LatticeGraph::WestNorth ? 'W' : 'E';
  const int dir = e.graph == LatticeGraph::WestNorth ? -1 : 1;
  std::set<Point> used;
  std::vector<LatticePath> fam;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == e.sources.size()) {
      out.push_back(fam);
      return;
    }
    const Point u = e.sources[i], v = e.sinks[i];
    if ((v.x - u.x) * dir < 0 || v.y < u.y || used.count(u)) return;
    LatticePath p{u, ""};
    std::vector<Point> mine{u};
    used.insert(u);
    auto walk = [&](auto&& wself, Point cur) -> void {
      if (cur == v) {
        fam.push_back(p);
        self(self, i + 1);
        fam.pop_back();
        return;
      }
      auto try_step = [&](char c, Point nxt) {
        if (used.count(nxt)) return;
        used.insert(nxt);
        p.steps.push_back(c);
        wself(wself, nxt);
        p.steps.pop_back();
        used.erase(nxt);
      };
      if (cur.y < v.y) try_step('N', {cur.x, cur.y + 1});
      if (cur.x != v.x) try_step(horiz, {cur.x + dir, cur.y});
    };
    walk(walk, u);
    used.erase(u);
  };
  rec(rec, 0);
  return out;
}

// Sum of family weights, enumerated directly rather than through the
// determinant of single-path sums.
inline Poly nonintersecting_coeff(const Partition& lambda, const Partition& mu, CoeffKind kind, Context ctx) {
  if (kind == CoeffKind::C ? !contains(lambda, mu) : !contains(mu, lambda)) return Poly(ctx);
  auto e = coefficient_endpoints(lambda, mu, kind);
  Poly total(ctx);
  for (auto& fam : nonintersecting_families(e)) {
    Poly w(ctx, 1);
    for (auto& p : fam) {
      w *= path_weight(e.graph, p, ctx);
      if (w.is_zero()) break;
    }
    total += w;
  }
  return total;
}

// Heights of the west steps of p_i, read right to left, fill row i of the
// inelegant tableau of shape mu/lambda: the j-th west step gives T(i, mu_i + 1 - j).
inline std::map<std::pair<int, int>, int> paths_to_tableau(const std::vector<LatticePath>& family, const Partition& mu) {
  std::map<std::pair<int, int>, int> T;
  for (std::size_t k = 0; k < family.size(); ++k) {
    const int i = static_cast<int>(k) + 1;
    Point cur = family[k].start;
    int j = 0;
    for (char c : family[k].steps) {
      if (c == 'N') {
        ++cur.y;
        continue;
      }
      ++j;
      T[{i, mu.part(i) + 1 - j}] = cur.y;
      --cur.x;
    }
  }
  return T;
}

}  // namespace rgroth
