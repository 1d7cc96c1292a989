#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rigidq/error.hpp"
#include "rigidq/linalg.hpp"
#include "rigidq/roots.hpp"

using namespace rigidq;

TEST(Roots, A2) {
  for (const char* s : {"A2:>", "A2:<"}) {
    RootSystem r(parse_quiver(s));
    std::vector<DimVector> want{{0, 1}, {1, 0}, {1, 1}};
    EXPECT_EQ(std::vector<DimVector>(r.begin(), r.end()), want);
  }
}

TEST(Roots, CountsAndMethodsAgree) {
  const std::vector<std::pair<const char*, std::size_t>> cases{
      {"A1", 1}, {"A5:<>><", 15}, {"A8", 36}, {"D4:<><", 12}, {"D5", 20}, {"D8:<><><><", 56},
      {"E6", 36}, {"E7:<<<>>>", 63}, {"E8", 120}, {"E8:><><><>", 120}};
  for (const auto& [s, count] : cases) {
    auto q = parse_quiver(s);
    auto box = roots_by_box_scan(q);
    auto closure = roots_by_closure(q);
    EXPECT_EQ(box.size(), count) << s;
    EXPECT_EQ(expected_root_count(q.components()[0]), count) << s;
    EXPECT_EQ(box, closure) << s;
    EXPECT_EQ(box, oracle::reflection_closure(q)) << s;
  }
}

TEST(Roots, OrientationIndependent) {
  for (const char* fam : {"A5", "D5", "E6"}) {
    std::string family(fam, 1);
    int rank = fam[1] - '0';
    auto base = roots_by_box_scan(parse_quiver(fam));
    for (const auto& s : oracle::all_orientations(family, rank)) EXPECT_EQ(roots_by_box_scan(parse_quiver(s)), base) << s;
  }
}

TEST(Roots, DisjointUnion) {
  RootSystem r(parse_quiver("A2+A3:<>"));
  EXPECT_EQ(r.size(), 9u);
  EXPECT_FALSE(r.contains({1, 1, 1, 0, 0}));
  EXPECT_TRUE(r.contains({0, 0, 1, 1, 1}));
}

TEST(Roots, UnitForm) {
  for (const char* s : {"D6:><><>", "E7"}) {
    RootSystem r(parse_quiver(s));
    for (const auto& a : r) EXPECT_EQ(r.quiver().euler().pair(a, a), 1);
  }
}

TEST(HomExt, Examples) {
  RootSystem r(parse_quiver("A2"));
  EXPECT_EQ(hom_dim(r, {0, 1}, {1, 1}), 1);
  EXPECT_EQ(ext_dim(r, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(hom_dim(r, {1, 0}, {0, 1}), 0);
  EXPECT_THROW(hom_dim(r, {1, 2}, {1, 0}), InvalidInput);
  EXPECT_THROW(ext_dim(r, {0, 0}, {1, 0}), InvalidInput);
}

TEST(HomExt, IdentityAndDirectedness) {
  for (const char* s : {"A4:<><", "D5:>><<", "E6:<><><"}) {
    RootSystem r(parse_quiver(s));
    for (const auto& a : r)
      for (const auto& b : r) {
        EXPECT_GE(ext_dim(r, b, a), 0);
        EXPECT_EQ(hom_dim(r, b, a) - ext_dim(r, b, a), r.quiver().euler().pair(b, a));
        if (a != b) EXPECT_EQ(hom_dim(r, a, b) * hom_dim(r, b, a), 0) << s << a << b;
      }
    for (const auto& a : r) {
      EXPECT_EQ(hom_dim(r, a, a), 1);
      EXPECT_EQ(ext_dim(r, a, a), 0);
    }
  }
}

// Generic representations of root dimension are the indecomposables.
TEST(HomExt, MatchesGenericRepresentations) {
  const auto field = FieldConfig::prime_field(kDefaultPrime);
  for (const char* s : {"A3:><", "D4:<>>"}) {
    auto q = parse_quiver(s);
    RootSystem r(q);
    std::uint64_t seed = 11;
    for (const auto& a : r)
      for (const auto& b : r) {
        auto ua = random_rep(q, a, field, seed++);
        auto ub = random_rep(q, b, field, seed++);
        EXPECT_EQ(hom_space_dim(ub, ua), hom_dim(r, b, a)) << s << b << a;
      }
  }
}

TEST(Coxeter, A2Example) {
  auto m = coxeter_inverse(parse_quiver("A2"));
  EXPECT_EQ(m.apply({0, 1}), (DimVector{1, 0}));
}

TEST(Coxeter, Contract) {
  for (const char* s : {"A4:<><", "D5", "E6:><><>", "E8:<<>><<>"}) {
    auto q = parse_quiver(s);
    auto m = coxeter_inverse(q);
    const auto n = static_cast<std::size_t>(q.vertex_count());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto ei = DimVector::unit(n, i), ej = DimVector::unit(n, j);
        EXPECT_EQ(q.euler().pair(m.apply(ei), ej), -q.euler().pair(ej, ei)) << s;
      }
  }
}

TEST(Coxeter, EulerInverse) {
  for (const char* s : {"A5:><<>", "D6", "E7:><><><"}) {
    auto q = parse_quiver(s);
    const int n = q.vertex_count();
    auto inv = euler_inverse(q);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (int k = 0; k < n; ++k) acc += q.euler()(i, k) * inv[static_cast<std::size_t>(k * n + j)];
        EXPECT_EQ(acc, i == j ? 1 : 0);
      }
  }
}
