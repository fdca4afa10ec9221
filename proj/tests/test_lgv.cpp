#include "rgroth/grothendieck.hpp"
#include "rgroth/lgv.hpp"
#include "rgroth/tableaux.hpp"

#include <gtest/gtest.h>

#include "print.hpp"

#include <random>

using namespace rgroth;

namespace {

Poly A(Context c, int i) { return Poly::var(c, av(i)); }
Poly B(Context c, int i) { return Poly::var(c, bv(i)); }

Alphabet Apre(int k) { return k >= 1 ? Alphabet::A(k) : Alphabet(); }
Alphabet Bpre(int k) { return k >= 1 ? Alphabet::B(k) : Alphabet(); }

}  // namespace

TEST(Paths, TrivialAndSingleStep) {
  Context c{1, 0};
  EXPECT_EQ(path_weight_sum(LatticeGraph::WestNorth, {2, 3}, {2, 3}, c), Poly(c, 1));
  EXPECT_EQ(path_weight_sum(LatticeGraph::WestNorth, {0, 1}, {-1, 1}, c), A(c, 1) - B(c, 1));
  EXPECT_EQ(path_weight_sum(LatticeGraph::WestNorth, {1, 1}, {0, 1}, c), A(c, 1));
  EXPECT_TRUE(path_weight_sum(LatticeGraph::WestNorth, {0, 1}, {1, 1}, c).is_zero());
  EXPECT_THROW(path_weight(LatticeGraph::WestNorth, {{0, 0}, "E"}, c), ValidityError);
}

TEST(Paths, SumsAreCompleteFunctions) {
  // west-north paths (a, b) -> (a - k, b + h) sum to h_k of the alpha interval
  // b..b+h minus the beta interval b-a..b-a+h+k-1
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> coord(-2, 2), len(0, 3);
  Context c{1, 0};
  for (int t = 0; t < 60; ++t) {
    int a = coord(rng), b = coord(rng) + 2, k = len(rng), h = len(rng);
    if (b < 1) b = 1;
    EXPECT_EQ(path_weight_sum(LatticeGraph::WestNorth, {a, b}, {a - k, b + h}, c),
              h_pleth(k, Apre(b + h) - Apre(b - 1) - Bpre(b - a + h + k - 1) + Bpre(b - a - 1), c))
        << a << "," << b << " k=" << k << " h=" << h;
  }
}

TEST(Families, Coefficients) {
  Context c{1, 0};
  EXPECT_EQ(nonintersecting_coeff(Partition{2, 1}, Partition{2, 1}, CoeffKind::C, c), Poly(c, 1));
  EXPECT_EQ(nonintersecting_coeff(Partition{1}, Partition{2}, CoeffKind::C, c), A(c, 1));
  EXPECT_TRUE(nonintersecting_coeff(Partition{2}, Partition{1}, CoeffKind::C, c).is_zero());
  for (auto& mu : partitions_up_to(5))
    for (auto& l : partitions_between({}, mu)) {
      EXPECT_EQ(nonintersecting_coeff(l, mu, CoeffKind::C, c), C_coeff(l, mu, c)) << l.str() << " " << mu.str();
      EXPECT_EQ(nonintersecting_coeff(mu, l, CoeffKind::c, c), c_coeff(mu, l, c)) << mu.str() << " " << l.str();
    }
}

TEST(Families, WorkedExample) {
  Partition mu{4, 4, 4, 3, 3, 3, 2}, lambda{3, 2, 2, 1};
  std::vector<LatticePath> fam = {{{3, 1}, "NNW"},    {{2, 1}, "NWW"},     {{1, 1}, "WWN"},     {{-1, 0}, "WNW"},
                                  {{-2, -1}, "WNWW"}, {{-3, -2}, "WWNWN"}, {{-5, -4}, "NWNWNN"}};
  auto e = coefficient_endpoints(lambda, mu, CoeffKind::C);
  ASSERT_EQ(e.sources.size(), fam.size());
  std::set<Point> seen;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(fam[i].start, e.sources[i]);
    EXPECT_EQ(fam[i].end(), e.sinks[i]);
    for (auto& v : fam[i].vertices()) EXPECT_TRUE(seen.insert(v).second) << "paths meet at " << v.x << "," << v.y;
  }
  std::map<Pos, int> expect = {{{1, 4}, 3},  {{2, 3}, 2},  {{2, 4}, 2},  {{3, 3}, 1},  {{3, 4}, 1},  {{4, 2}, 1},
                               {{4, 3}, 0},  {{5, 1}, 0},  {{5, 2}, 0},  {{5, 3}, -1}, {{6, 1}, -1}, {{6, 2}, -2},
                               {{6, 3}, -2}, {{7, 1}, -2}, {{7, 2}, -3}};
  auto T = paths_to_tableau(fam, mu);
  EXPECT_EQ(T, expect);
  SkewShape shape(mu, lambda);
  EXPECT_TRUE(elegant_valid(T, shape, ElegantFamily::IET_Z));
  Context c{1, 0};
  Poly w(c, 1);
  for (auto& p : fam) w *= path_weight(LatticeGraph::WestNorth, p, c);
  EXPECT_EQ(w, elegant_weight(T, ElegantRule::C, c));
}

TEST(Families, BijectionPreservesWeight) {
  Context c{1, 0};
  for (auto& mu : partitions_up_to(5))
    for (auto& l : partitions_between({}, mu)) {
      if (mu.size() - l.size() > 4) continue;
      SkewShape shape(mu, l);
      auto e = coefficient_endpoints(l, mu, CoeffKind::C);
      std::set<std::map<Pos, int>> images;
      for (auto& fam : nonintersecting_families(e)) {
        auto T = paths_to_tableau(fam, mu);
        EXPECT_TRUE(elegant_valid(T, shape, ElegantFamily::IET_Z)) << l.str() << " " << mu.str();
        Poly w(c, 1);
        for (auto& p : fam) w *= path_weight(e.graph, p, c);
        EXPECT_EQ(w, elegant_weight(T, ElegantRule::C, c));
        EXPECT_TRUE(images.insert(T).second);
      }
    }
}
