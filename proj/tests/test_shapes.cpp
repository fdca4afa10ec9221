#include "rgroth/shapes.hpp"

#include <gtest/gtest.h>

using namespace rgroth;

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(Partition::parse("4,3,1"), (Partition{4, 3, 1}));
  EXPECT_EQ(Partition::parse("0"), Partition{});
  EXPECT_EQ(Partition::parse(""), Partition{});
  EXPECT_EQ(Partition::parse("2,1,0,0").length(), 2);
  EXPECT_EQ((Partition{4, 3, 1}).str(), "4,3,1");
  EXPECT_THROW(Partition::parse("1,2"), ValidityError);
  EXPECT_THROW(Partition::parse("1,x"), ValidityError);
  EXPECT_THROW(Partition::parse("-1"), ValidityError);
}

TEST(Partition, Contains) {
  EXPECT_TRUE(contains(Partition{2, 1}, Partition{3, 2, 1}));
  EXPECT_FALSE(contains(Partition{2}, Partition{1, 1}));
  for (auto& l : partitions_up_to(4)) EXPECT_TRUE(contains(Partition{}, l));
}

TEST(Partition, ContainmentIsAPartialOrder) {
  auto all = partitions_up_to(4);
  for (auto& a : all) {
    EXPECT_TRUE(contains(a, a));
    for (auto& b : all) {
      if (contains(a, b) && contains(b, a)) EXPECT_EQ(a, b);
      for (auto& c : all)
        if (contains(a, b) && contains(b, c)) EXPECT_TRUE(contains(a, c));
    }
  }
}

TEST(Partition, Conjugate) {
  EXPECT_EQ((Partition{4, 3, 1}).conjugate(), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(Partition{}.conjugate(), Partition{});
  for (auto& l : partitions_up_to(6)) EXPECT_EQ(l.conjugate().conjugate(), l);
}

TEST(Partition, Generators) {
  EXPECT_EQ(partitions_of(4).size(), 5u);
  EXPECT_EQ(partitions_of(5, -1, 2).size(), 3u);
  EXPECT_EQ(partitions_between(Partition{1}, Partition{2, 1}).size(), 4u);
}

TEST(SkewShape, CellsAndContents) {
  SkewShape s(Partition{4, 3, 1});
  auto cells = s.cells();
  ASSERT_EQ(cells.size(), 8u);
  bool found14 = false, found31 = false;
  for (auto& c : cells) {
    if (c.i == 1 && c.j == 4) found14 = c.content == 3;
    if (c.i == 3 && c.j == 1) found31 = c.content == -2;
  }
  EXPECT_TRUE(found14);
  EXPECT_TRUE(found31);
  EXPECT_TRUE(SkewShape(Partition{1}, Partition{1}).cells().empty());
  SkewShape t(Partition{5, 3, 2}, Partition{2, 1});
  EXPECT_EQ(static_cast<int>(t.cells().size()), 10 - 3);
}

TEST(SkewShape, RejectsNonContainment) { EXPECT_THROW(SkewShape(Partition{1}, Partition{2}), ValidityError); }

TEST(Circ, Example) {
  SkewShape s = circ(Partition{3, 1}, Partition{4, 2, 2}, 3);
  EXPECT_EQ(s.outer, (Partition{7, 5, 5}));
  EXPECT_EQ(s.inner, (Partition{3, 2}));
}

TEST(Circ, EmptyLeftFactorAndSize) {
  Partition mu{3, 1};
  SkewShape s = circ(Partition{}, mu, mu.length());
  EXPECT_EQ(s.outer, mu);
  EXPECT_EQ(s.inner, Partition{});
  for (auto& l : partitions_up_to(4, 3))
    for (auto& m : partitions_up_to(3, 3)) EXPECT_EQ(circ(l, m, 3).size(), l.size() + m.size());
  EXPECT_THROW(circ(Partition{1, 1, 1}, Partition{}, 2), ShapeError);
}

TEST(DentedPartition, MinimalCell) {
  EXPECT_EQ(minimal_cell(DentedPartition({3, 3, 4, 4, 1})), std::make_pair(3, 4));
  EXPECT_EQ(minimal_cell(DentedPartition({4, 3, 1})), std::make_pair(1, 4));
  EXPECT_EQ(minimal_cell(DentedPartition({2, 3})), std::make_pair(2, 3));
  EXPECT_THROW(DentedPartition({1, 3}), ValidityError);
  EXPECT_TRUE(DentedPartition({2, 1}).is_partition());
}

TEST(GeneralizedPartition, ShiftKeepsCells) {
  GeneralizedPartition nu({2, 0, -1}), rho({1, -1, -2});
  EXPECT_TRUE(contains(rho, nu));
  const int shift = 2;
  Partition o = nu.shifted(shift).to_partition(), in = rho.shifted(shift).to_partition();
  EXPECT_EQ(o, (Partition{4, 2, 1}));
  EXPECT_EQ(in, (Partition{3, 1}));
  EXPECT_EQ(SkewShape(o, in).size(), nu.size() - rho.size());
  EXPECT_THROW(GeneralizedPartition({0, 1}), ValidityError);
}

TEST(FlagPair, Parse) {
  FlagPair f = FlagPair::parse("r=1,1,2 s=3,3,inf");
  EXPECT_EQ(f.r, (std::vector<int>{1, 1, 2}));
  EXPECT_EQ(f.upper(3, 5), 5);
  EXPECT_EQ(f.resolved(4).s, (std::vector<int>{3, 3, 4}));
  EXPECT_THROW(FlagPair::parse("r=1 s=1,2"), ValidityError);
  EXPECT_THROW(FlagPair::parse("r=inf s=1"), ValidityError);
  EXPECT_THROW(FlagPair::parse("r=0 s=1"), ValidityError);
}
