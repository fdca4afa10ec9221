#include "rgroth/format.hpp"
#include "rgroth/grothendieck.hpp"

#include <gtest/gtest.h>

using namespace rgroth;

namespace {

Poly X(Context c, int i) { return Poly::var(c, xv(i)); }
Poly A(Context c, int i) { return Poly::var(c, av(i)); }
Poly B(Context c, int i) { return Poly::var(c, bv(i)); }

Poly G1() {
  Context c{2, 2};
  return X(c, 1) + X(c, 2) + A(c, 1) * (X(c, 1) * X(c, 1) + X(c, 1) * X(c, 2) + X(c, 2) * X(c, 2)) -
         B(c, 1) * X(c, 1) * X(c, 2);
}

}  // namespace

TEST(Text, GroupsByParameter) { EXPECT_EQ(to_text(G1()), "(x1+x2) + a1*(x1^2+x1*x2+x2^2) - b1*x1*x2"); }

TEST(Text, ZeroConstantsAndSigns) {
  Context c{2, 2};
  EXPECT_EQ(to_text(Poly(c)), "0");
  EXPECT_EQ(to_text(Poly(c, 1)), "1");
  EXPECT_EQ(to_text(Poly(c, -3)), "-3");
  EXPECT_EQ(to_text(-X(c, 1)), "-x1");
  EXPECT_EQ(to_text(X(c, 1) - X(c, 1) * X(c, 2)), "x1-x1*x2");
}

TEST(Text, ByteStable) {
  auto a = to_text(G1()), b = to_text(G1());
  EXPECT_EQ(a, b);
  EXPECT_EQ(render(G1(), Format::Latex), render(G1(), Format::Latex));
}

TEST(Latex, UsesSubscripts) {
  auto s = to_text(G1(), Format::Latex);
  EXPECT_NE(s.find("x_{1}"), std::string::npos) << s;
  EXPECT_NE(s.find("\\alpha_{1}"), std::string::npos) << s;
}

TEST(Json, RoundTrip) {
  auto j = to_json(G1());
  EXPECT_EQ(j.at("schema"), kJsonSchema);
  EXPECT_EQ(from_json(j), G1());
  EXPECT_EQ(from_json(nlohmann::json::parse(j.dump())), G1());
  Context c{1, 0};
  EXPECT_EQ(from_json(to_json(Poly(c))), Poly(c));
}
