#include "rgroth/grothendieck.hpp"
#include "rgroth/tableaux.hpp"

#include <gtest/gtest.h>

#include "print.hpp"

using namespace rgroth;

namespace {

Poly X(Context c, int i) { return Poly::var(c, xv(i)); }
Poly A(Context c, int i) { return Poly::var(c, av(i)); }
Poly B(Context c, int i) { return Poly::var(c, bv(i)); }

Poly zero_params(const Poly& p) {
  return p.substitute([&](VarId v) -> std::optional<Poly> {
    if (v.family != Family::X) return Poly(p.context());
    return std::nullopt;
  });
}

FlaggedSpec row_spec(const Partition& l, const Partition& m, int n, Kind k) {
  return {l, m, n, FlagPair::standard(n), Orientation::Row, k};
}

}  // namespace

TEST(Bialternant, EmptyShape) {
  Context c{2, 3};
  EXPECT_EQ(G_bialternant({}, 2, c), Poly(c, 1));
  EXPECT_EQ(g_bialternant({}, 2, c), Poly(c, 1));
}

TEST(Bialternant, SingleBox) {
  Context c{2, 2};
  Poly x1 = X(c, 1), x2 = X(c, 2);
  EXPECT_EQ(G_bialternant(Partition{1}, 2, c), x1 + x2 + A(c, 1) * (x1 * x1 + x1 * x2 + x2 * x2) - B(c, 1) * x1 * x2);
  EXPECT_EQ(G_bialternant(Partition{1}, 2, c), enum_mmsvt(SkewShape(Partition{1}), FlagPair::standard(2), FlagAxis::Row, c));
  for (int n = 1; n <= 3; ++n) {
    Context cn{n, 3};
    EXPECT_EQ(g_bialternant(Partition{1}, n, cn), h_pleth(1, Alphabet::Xn(n), cn));
  }
}

TEST(Bialternant, DualTwoRow) {
  Context c{1, 3};
  EXPECT_EQ(g_bialternant(Partition{2}, 1, c), X(c, 1) * X(c, 1) - A(c, 1) * X(c, 1));
  EXPECT_EQ(g_bialternant(Partition{2}, 1, c), enum_mrpp(SkewShape(Partition{2}), MrppVariant::Left, FlagPair::standard(1), FlagAxis::Row, c));
}

TEST(Bialternant, ParametersToZeroGiveSchur) {
  for (auto& l : partitions_up_to(4, 3)) {
    Context c{3, 5};
    EXPECT_EQ(zero_params(G_bialternant(l, 3, c)), schur_jt(l, {}, 3, c)) << l.str();
    EXPECT_EQ(zero_params(g_bialternant(l, 3, c)), schur_jt(l, {}, 3, c)) << l.str();
  }
}

TEST(JacobiTrudi, AgreesWithBialternant) {
  Context c{2, 2};
  EXPECT_EQ(G_jt({}, 2, c), Poly(c, 1));
  EXPECT_EQ(G_jt(Partition{1}, 2, c), G_bialternant(Partition{1}, 2, c));
  Context c1{1, 3};
  EXPECT_EQ(g_jt(Partition{2}, 1, c1), X(c1, 1) * X(c1, 1) - A(c1, 1) * X(c1, 1));
}

TEST(JacobiTrudi, Modified) {
  EXPECT_EQ(G_jt_modified({}, 1, {1, 4}), Poly({1, 4}, 1));
  EXPECT_EQ(G_jt_modified(Partition{1}, 2, {2, 3}), G_jt(Partition{1}, 2, {2, 3}));
  EXPECT_EQ(g_jt_modified(Partition{2, 1}, 2, {2, 4}), g_jt(Partition{2, 1}, 2, {2, 4}));
}

TEST(JacobiTrudi, Stability) {
  // x_3 = 0 in G_l(x_1, x_2, x_3) gives G_l(x_1, x_2)
  for (auto& l : partitions_up_to(3, 2)) {
    Poly big = G_jt(l, 3, {3, 4}).substitute([](VarId v) -> std::optional<Poly> {
      if (v == xv(3)) return Poly(Context{3, 4});
      return std::nullopt;
    });
    EXPECT_EQ(big.recontext({2, 4}), G_jt(l, 2, {2, 4})) << l.str();
  }
}

TEST(Coefficients, SmallValues) {
  Context c{1, 0};
  EXPECT_EQ(C_coeff(Partition{1}, Partition{2}, c), A(c, 1));
  EXPECT_EQ(C_coeff(Partition{1}, Partition{1, 1}, c), -B(c, 1));
  EXPECT_EQ(c_coeff(Partition{2}, Partition{1}, c), -A(c, 1));
  for (auto& l : partitions_up_to(4)) {
    EXPECT_EQ(C_coeff(l, l, c), Poly(c, 1));
    EXPECT_EQ(c_coeff(l, l, c), Poly(c, 1));
  }
  EXPECT_TRUE(C_coeff(Partition{2}, Partition{1, 1}, c).is_zero());
  EXPECT_TRUE(c_coeff(Partition{1, 1}, Partition{2}, c).is_zero());
}

TEST(Coefficients, SchurExpansionTriangularity) {
  // the Schur expansion of G_l (g_l) is supported above (below) l with coefficients C (c)
  const int n = 3, D = 4;
  Context c{n, D}, pc{1, 0};
  for (auto& l : partitions_up_to(2, n)) {
    auto G = schur_expand(G_jt(l, n, c), n, D);
    for (auto& [mu, coef] : G) {
      EXPECT_TRUE(contains(l, mu));
      EXPECT_EQ(coef, C_coeff(l, mu, pc).recontext(c)) << l.str() << " " << mu.str();
    }
    for (auto& mu : partitions_above(l, D - l.size(), n)) {
      if (C_coeff(l, mu, pc).is_zero()) continue;
      EXPECT_TRUE(G.count(mu)) << l.str() << " " << mu.str();
    }
  }
  for (auto& l : partitions_up_to(4, n)) {
    auto g = schur_expand(g_jt(l, n, c), n, D);
    for (auto& [mu, coef] : g) {
      EXPECT_TRUE(contains(mu, l));
      EXPECT_EQ(coef, c_coeff(l, mu, pc).recontext(c));
    }
  }
}

TEST(HallPairing, Values) {
  Context c{1, 0};
  EXPECT_EQ(hall_pairing(Partition{2, 1}, Partition{2, 1}, c), Poly(c, 1));
  EXPECT_TRUE(hall_pairing(Partition{1}, Partition{2}, c).is_zero());
  EXPECT_TRUE(hall_pairing(Partition{2}, Partition{1}, c).is_zero());
  // the two terms that cancel in <G_1, g_2>
  EXPECT_EQ(C_coeff(Partition{1}, Partition{1}, c) * c_coeff(Partition{2}, Partition{1}, c), -A(c, 1));
  EXPECT_EQ(C_coeff(Partition{1}, Partition{2}, c) * c_coeff(Partition{2}, Partition{2}, c), A(c, 1));
}

TEST(Cauchy, Identity) {
  EXPECT_TRUE(cauchy_check(1, 1, 2));
  EXPECT_TRUE(cauchy_check(1, 1, 0));
  EXPECT_TRUE(cauchy_check(2, 2, 3));
}

TEST(SchurInGrothendieck, Expansions) {
  Context c{2, 0};
  auto g = schur_in_grothendieck(Partition{1}, GBasis::g, 2, c);
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.at(Partition{1}), Poly(c, 1));
  for (GBasis b : {GBasis::G, GBasis::g}) {
    auto e = schur_in_grothendieck({}, b, 2, c);
    ASSERT_EQ(e.size(), 1u);
    EXPECT_EQ(e.at(Partition{}), Poly(c, 1));
  }
  auto G = schur_in_grothendieck(Partition{1}, GBasis::G, 2, c);
  ASSERT_EQ(G.size(), 3u);
  EXPECT_EQ(G.at(Partition{1}), Poly(c, 1));
  EXPECT_EQ(G.at(Partition{2}), -A(c, 1));
  EXPECT_EQ(G.at(Partition{1, 1}), B(c, 1));
  EXPECT_TRUE(verify_schur_in_grothendieck(Partition{1}, GBasis::G, 2, {2, 2}));
  EXPECT_TRUE(verify_schur_in_grothendieck(Partition{2, 1}, GBasis::g, 3, {2, 3}));
}

TEST(Flagged, RowCounterexample) {
  Context c{1, 3};
  FlaggedSpec spec{Partition{1}, Partition{2}, 1, FlagPair{{1}, {1}}, Orientation::Row, Kind::G};
  FlaggedValue v = G_flagged_det(spec, c);
  EXPECT_EQ(v.value, B(c, 1) - A(c, 2));
  EXPECT_FALSE(v.hypotheses_hold);
  spec.orientation = Orientation::Col;
  EXPECT_EQ(G_flagged_det(spec, c).value, B(c, 2) - A(c, 1));
}

TEST(Flagged, StandardFlagsGiveJacobiTrudi) {
  for (int n = 1; n <= 3; ++n)
    for (auto& l : partitions_up_to(4, n)) {
      Context c{n, 5};
      EXPECT_EQ(G_flagged_det(row_spec(l, {}, n, Kind::G), c).value, G_jt(l, n, c)) << l.str();
      EXPECT_EQ(g_flagged_det(row_spec(l, {}, n, Kind::g), c).value, g_jt_modified(l, n, c)) << l.str();
    }
}

TEST(Flagged, DualColumnCounterexample) {
  Context c{2, 2};
  FlaggedSpec spec{Partition{1, 1}, Partition{}, 2, FlagPair{{1, 1}, {2, 1}}, Orientation::Col, Kind::g};
  EXPECT_EQ(g_flagged_det(spec, c).value, X(c, 1) * X(c, 1) - A(c, 1) * X(c, 1) - A(c, 1) * X(c, 2));
  EXPECT_EQ(enum_mrpp(SkewShape(Partition{2}), MrppVariant::Left, spec.flags, FlagAxis::Col, c),
            X(c, 1) * X(c, 1) - A(c, 1) * X(c, 1));
}

TEST(Flagged, EmptySkewShape) {
  Context c{2, 3};
  Partition l{2, 1};
  EXPECT_EQ(g_flagged_det(row_spec(l, l, 2, Kind::g), c).value, Poly(c, 1));
  EXPECT_EQ(G_flagged_det(row_spec(l, l, 2, Kind::G), c).value, Poly(c, 1));
}

TEST(Flagged, FlagLengthMismatch) {
  Context c{2, 2};
  FlaggedSpec spec{Partition{1}, {}, 2, FlagPair{{1}, {1}}, Orientation::Row, Kind::G};
  EXPECT_THROW(G_flagged_det(spec, c), ValidityError);
}

TEST(Matsumura, ClosedFormSeries) {
  Context c{1, 4};
  EXPECT_EQ(matsumura_Gpq(0, 0, 1, c), Poly(c, 1));
  Poly series(c);
  for (int k = 0; k <= 3; ++k) {
    Poly t = X(c, 1) * (B(c, 1) * X(c, 1)).pow(static_cast<unsigned>(k));
    series += k % 2 ? -t : t;
  }
  EXPECT_EQ(matsumura_Gpq(1, 1, 1, c), (Poly(c, 1) + B(c, 1) * X(c, 1)) * series);
  EXPECT_EQ(matsumura_Gpq(-3, 0, 1, c), -B(c, 1).pow(3));
}

TEST(Matsumura, DeterminantValues) {
  Context c{2, 4};
  EXPECT_EQ(matsumura_det(Partition{2}, Partition{2}, {1}, {1}, c), Poly(c, 1));
  EXPECT_EQ(matsumura_det(Partition{1}, {}, {1}, {1}, c), X(c, 1));
  EXPECT_EQ(matsumura_det(Partition{1, 1}, {}, {1, 2}, {1, 1}, c),
            enum_fsvt(SkewShape(Partition{1, 1}), {1, 2}, {1, 1}, c));
}

TEST(Matsumura, SignConvention) {
  // only b = (-beta, -beta, ...) reproduces the set-valued tableaux
  Context c{2, 4};
  Partition l{2, 1};
  std::vector<int> f{2, 2}, g{1, 1};
  Poly F = enum_fsvt(SkewShape(l), f, g, c);
  EXPECT_EQ(G_flagged_collapsed(l, {}, f, g, -1, c), F);
  EXPECT_NE(G_flagged_collapsed(l, {}, f, g, +1, c), F);
  EXPECT_EQ(matsumura_original_det(l, {}, f, g, c), F);
}

TEST(Expansion, DualTwoRow) {
  Context c{1, 0};
  SchurExpansion e = skew_schur_expansion(Partition{2}, {}, 1, ExpansionKind::g_h, 0, c);
  GeneralizedPartition empty(Partition{}, 1);
  ASSERT_EQ(e.entries.size(), 2u);
  EXPECT_EQ(e.entries.at({GeneralizedPartition(Partition{2}, 1), empty}), Poly(c, 1));
  EXPECT_EQ(e.entries.at({GeneralizedPartition(Partition{1}, 1), empty}), -A(c, 1));
}

TEST(Expansion, ParametersToZeroLeaveOneTerm) {
  Context c{2, 0};
  for (auto kind : {ExpansionKind::G_h, ExpansionKind::g_h}) {
    SchurExpansion e = skew_schur_expansion(Partition{2, 1}, {}, 2, kind, 2, c);
    int nonzero = 0;
    for (auto& [k, v] : e.entries) {
      Poly z = zero_params(v);
      if (z.is_zero()) continue;
      ++nonzero;
      EXPECT_EQ(k.first, GeneralizedPartition(Partition{2, 1}, 2));
      EXPECT_EQ(z, Poly(c, 1));
    }
    EXPECT_EQ(nonzero, 1);
  }
}

TEST(Expansion, MultipliesOutToFlaggedDeterminant) {
  const int budget = 2;
  for (auto& l : partitions_up_to(3, 2))
    for (auto& m : partitions_between({}, l)) {
      const int n = 2, nx = 2;
      const int D = l.size() - m.size() + budget;
      Context c{nx, D};
      for (auto kind : {ExpansionKind::G_h, ExpansionKind::G_e, ExpansionKind::g_h, ExpansionKind::g_e}) {
        SchurExpansion e = skew_schur_expansion(l, m, n, kind, budget, {nx, 0});
        EXPECT_EQ(evaluate_expansion(e, nx, c), expansion_target(l, m, n, kind, nx, c))
            << l.str() << "/" << m.str() << " kind " << static_cast<int>(kind);
      }
    }
}

TEST(Omega, Examples) {
  Context c{1, 0};
  EXPECT_TRUE(omega_check(Partition{1}, {}, Kind::g, 2, c));
  EXPECT_TRUE(omega_check(Partition{2}, {}, Kind::g, 2, c));
  EXPECT_TRUE(omega_check(Partition{2, 1}, Partition{1}, Kind::G, 2, c));
}
