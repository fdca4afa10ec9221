#include "rgroth/symfunc.hpp"

#include <gtest/gtest.h>

#include "print.hpp"

#include <functional>
#include <random>

using namespace rgroth;

namespace {

Poly X(Context c, int i) { return Poly::var(c, xv(i)); }
Poly A(Context c, int i) { return Poly::var(c, av(i)); }
Poly B(Context c, int i) { return Poly::var(c, bv(i)); }

// Sum of x^T over semistandard tableaux of the given shape with entries <= n.
Poly ssyt_sum(const Partition& lambda, int n, Context c) {
  SkewShape s(lambda);
  auto cells = s.cells();
  std::map<std::pair<int, int>, int> T;
  Poly total(c);
  std::function<void(std::size_t, Poly)> rec = [&](std::size_t k, Poly w) {
    if (k == cells.size()) {
      total += w;
      return;
    }
    auto [i, j, content] = cells[k];
    int lo = 1;
    if (auto it = T.find({i, j - 1}); it != T.end()) lo = std::max(lo, it->second);
    if (auto it = T.find({i - 1, j}); it != T.end()) lo = std::max(lo, it->second + 1);
    for (int v = lo; v <= n; ++v) {
      T[{i, j}] = v;
      rec(k + 1, w * X(c, v));
    }
    T.erase({i, j});
  };
  rec(0, Poly(c, 1));
  return total;
}

}  // namespace

TEST(Blocks, CompleteAndElementary) {
  Context c{2, 2};
  EXPECT_EQ(h_block(2, {Block::Kind::XInterval, 1, 2}, c), X(c, 1) * X(c, 1) + X(c, 1) * X(c, 2) + X(c, 2) * X(c, 2));
  EXPECT_TRUE(e_block(2, {Block::Kind::BPrefix, 1, 1}, c).is_zero());
  Block three{Block::Kind::ConstMultiple, 0, 0, bv(1), 3};
  EXPECT_EQ(e_block(2, three, c), 3 * B(c, 1).pow(2));
  EXPECT_EQ(h_block(2, three, c), 6 * B(c, 1).pow(2));
  EXPECT_EQ(h_block(0, three, c), Poly(c, 1));
  EXPECT_TRUE(h_block(-1, three, c).is_zero());
}

TEST(Plethysm, LinearAndSignRule) {
  Context c{2, 2};
  EXPECT_EQ(h_pleth(1, Alphabet::Xn(2) - Alphabet::A(1), c), X(c, 1) + X(c, 2) - A(c, 1));
  EXPECT_TRUE(h_pleth(2, -Alphabet::B(1), c).is_zero());
  EXPECT_EQ(h_pleth(0, Alphabet(), c), Poly(c, 1));
  EXPECT_TRUE(h_pleth(3, Alphabet(), c).is_zero());
}

TEST(Plethysm, GeneratingFunction) {
  // sum_k h_k[A_2 - B_1] x^k = (1 - b1 x) / ((1 - a1 x)(1 - a2 x)) mod x^6
  Context c{1, 5};
  Poly lhs(c), rhs = Poly(c, 1) - B(c, 1) * X(c, 1);
  for (int k = 0; k <= 5; ++k) lhs += h_pleth(k, Alphabet::A(2) - Alphabet::B(1), c) * X(c, 1).pow(static_cast<unsigned>(k));
  for (int i = 1; i <= 2; ++i) {
    Poly geo(c);
    for (int k = 0; k <= 5; ++k) geo += (A(c, i) * X(c, 1)).pow(static_cast<unsigned>(k));
    rhs *= geo;
  }
  EXPECT_EQ(lhs, rhs);
}

TEST(Plethysm, ConvolutionAndSignOnRandomAlphabets) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> k(0, 3), pick(0, 3);
  auto random_alphabet = [&] {
    Alphabet z;
    for (int b = 0; b < 2; ++b) {
      Alphabet piece = pick(rng) == 0 ? Alphabet::X(1, 2) : pick(rng) == 1 ? Alphabet::A(k(rng)) : Alphabet::B(k(rng));
      z = pick(rng) % 2 ? z + piece : z - piece;
    }
    return z;
  };
  Context c{2, 4};
  for (int t = 0; t < 30; ++t) {
    Alphabet z1 = random_alphabet(), z2 = random_alphabet();
    for (int m = 0; m <= 4; ++m) {
      Poly conv(c);
      for (int a = 0; a <= m; ++a) conv += h_pleth(a, z1, c) * h_pleth(m - a, z2, c);
      EXPECT_EQ(h_pleth(m, z1 + z2, c), conv);
      Poly e = e_pleth(m, z1, c);
      EXPECT_EQ(h_pleth(m, -z1, c), m % 2 ? -e : e);
    }
  }
}

TEST(Plethysm, SingleLetterRecurrences) {
  Context c{2, 4};
  Alphabet Z = Alphabet::X(1, 2) - Alphabet::B(2) + Alphabet::A(1);
  for (VarId z : {xv(2), av(1), bv(3)}) {
    Alphabet Zz = Z - Alphabet::single(z);
    Poly zp = Poly::var(c, z);
    for (int m = 0; m <= 4; ++m) {
      EXPECT_EQ(h_pleth(m, Z, c), h_pleth(m, Zz, c) + zp * h_pleth(m - 1, Z, c));
      EXPECT_EQ(e_pleth(m, Z, c), e_pleth(m, Zz, c) + zp * e_pleth(m - 1, Zz, c));
    }
  }
}

TEST(Ominus, NegativeDegree) {
  Context c{1, 3};
  Poly expect(c);
  for (int k = 0; k <= 3; ++k) expect += X(c, 1).pow(static_cast<unsigned>(k)) * A(c, 1).pow(static_cast<unsigned>(k + 2));
  EXPECT_EQ(h_ominus(-2, {Alphabet::X(1, 1), Alphabet::single(av(1))}, c), expect);
}

TEST(Ominus, EmptyRightSide) {
  Context c{2, 3};
  for (int m = -1; m <= 3; ++m) EXPECT_EQ(h_ominus(m, {Alphabet::Xn(2), Alphabet()}, c), h_pleth(m, Alphabet::Xn(2), c));
}

TEST(Ominus, GeometricEntry) {
  Context c{1, 4};
  Poly expect(c);
  for (int k = 0; k <= 3; ++k) expect += X(c, 1) * (A(c, 1) * X(c, 1)).pow(static_cast<unsigned>(k));
  EXPECT_EQ(h_ominus(1, {Alphabet::X(1, 1), Alphabet::A(1)}, c), expect);
}

TEST(Ominus, RejectsXOnTheRight) {
  Context c{2, 2};
  EXPECT_THROW(h_ominus(1, {Alphabet::Xn(1), Alphabet::X(2, 2)}, c), UnsupportedArgument);
  EXPECT_THROW(h_ominus(1, {Alphabet::A(1), Alphabet()}, c), UnsupportedArgument);
}

TEST(Schur, JacobiTrudi) {
  Context c{3, 3};
  EXPECT_EQ(schur_jt(Partition{1}, {}, 2, {2, 1}), X({2, 1}, 1) + X({2, 1}, 2));
  EXPECT_EQ(schur_jt(Partition{2, 1}, {}, 3, c), ssyt_sum(Partition{2, 1}, 3, c));
  EXPECT_TRUE(schur_jt(Partition{1, 1, 1}, {}, 2, {2, 3}).is_zero());
  EXPECT_TRUE(schur_jt(Partition{1}, Partition{2}, 2, {2, 3}).is_zero());
}

TEST(Schur, JacobiTrudiMatchesTableauxUpToFive) {
  for (auto& l : partitions_up_to(5, 3)) {
    Context c{3, l.size()};
    EXPECT_EQ(schur_jt(l, {}, 3, c), ssyt_sum(l, 3, c)) << l.str();
  }
}

TEST(Schur, Bialternant) {
  Context c{2, 3};
  EXPECT_EQ(schur_bialternant(Partition{1}, 2, c), X(c, 1) + X(c, 2));
  EXPECT_EQ(schur_bialternant(Partition{2, 1}, 2, c), X(c, 1) * X(c, 1) * X(c, 2) + X(c, 1) * X(c, 2) * X(c, 2));
  EXPECT_EQ(schur_bialternant(Partition{}, 2, c), Poly(c, 1));
  for (auto& l : partitions_up_to(4, 3)) EXPECT_EQ(schur_bialternant(l, 3, {3, 4}), schur_jt(l, {}, 3, {3, 4}));
}

TEST(Schur, FlaggedAlphabets) {
  EXPECT_TRUE(schur_flagged_check(Partition{2, 1}, 3, {3, 3}));
  EXPECT_TRUE(schur_flagged_check(Partition{}, 1, {1, 1}));
  EXPECT_TRUE(schur_flagged_check(Partition{1}, 1, {1, 1}));
}

TEST(Schur, CircProduct) {
  EXPECT_TRUE(product_circ_check(Partition{3, 1}, Partition{4, 2, 2}, 3, {3, 13}));
  EXPECT_TRUE(product_circ_check(Partition{}, Partition{2, 1}, 2, {2, 3}));
  EXPECT_TRUE(product_circ_check(Partition{1}, Partition{1}, 2, {2, 2}));
}

TEST(Schur, BlockFactorization) {
  // lambda_2 = mu_2 splits the skew shape into independent blocks
  Context c{3, 5};
  Poly whole = schur_jt(Partition{3, 2, 2}, Partition{2, 2, 1}, 3, c);
  EXPECT_EQ(whole, schur_jt(Partition{3}, Partition{2}, 3, c) * schur_jt(Partition{2}, Partition{1}, 3, c));
}

TEST(SchurExpand, Basics) {
  Context c{3, 3};
  auto e = schur_expand(schur_jt(Partition{2, 1}, {}, 3, c), 3, 3);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e.at(Partition{2, 1}), Poly(c, 1));
  auto h = schur_expand(h_pleth(2, Alphabet::Xn(2), {2, 2}), 2, 2);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h.begin()->first, Partition{2});
}

TEST(SchurExpand, RoundTripUpToFive) {
  for (auto& l : partitions_up_to(5, 3)) {
    Context c{3, 5};
    auto e = schur_expand(schur_jt(l, {}, 3, c), 3, 5);
    ASSERT_EQ(e.size(), 1u) << l.str();
    EXPECT_EQ(e.begin()->first, l);
  }
}

TEST(SchurExpand, RejectsNonSymmetric) {
  Context c{2, 2};
  EXPECT_THROW(schur_expand(X(c, 1), 2, 2), SymmetryViolation);
}
