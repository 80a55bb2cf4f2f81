#include <map>
#include <memory>
#include <string>
#include <vector>

#include "doctest.h"
#include "liepres/chevalley.hpp"
#include "liepres/errors.hpp"
#include "liepres/root_system.hpp"
#include "liepres/span.hpp"

using namespace liepres;

TEST_CASE("positive root counts and dimensions") {
  const std::map<std::string, std::pair<size_t, size_t>> expected = {
      // key -> (positive roots, dimension)
      {"a2", {3, 8}},    {"a3", {6, 15}},    {"a4", {10, 24}},  {"a5", {15, 35}},
      {"a7", {28, 63}},  {"b3", {9, 21}},    {"c3", {9, 21}},   {"d4", {12, 28}},
      {"g2", {6, 14}},   {"f4", {24, 52}},   {"e6", {36, 78}},  {"e7", {63, 133}},
      {"e8", {120, 248}},
  };
  for (const auto& [key, counts] : expected) {
    CAPTURE(key);
    RootSystem rs(dynkin_for(key));
    CHECK(rs.positive_count() == counts.first);
    CHECK(rs.dimension() == counts.second);
  }
  CHECK_THROWS_AS(dynkin_for("x9"), UnknownType);
}

TEST_CASE("highest root heights") {
  const std::map<std::string, int> expected = {
      {"a3", 3}, {"b3", 5}, {"c3", 5}, {"d4", 5},  {"g2", 5},
      {"f4", 11}, {"e6", 11}, {"e7", 17}, {"e8", 29},
  };
  for (const auto& [key, height] : expected) {
    CAPTURE(key);
    RootSystem rs(dynkin_for(key));
    int top = 0;
    for (size_t i = 0; i < rs.positive_count(); ++i) top = std::max(top, rs.height(int(i)));
    CHECK(top == height);
    // (height, lex) order: heights never decrease along the enumeration.
    for (size_t i = 0; i + 1 < rs.positive_count(); ++i) {
      REQUIRE(rs.height(int(i)) <= rs.height(int(i) + 1));
    }
  }
}

TEST_CASE("root lengths and pairings") {
  RootSystem g2(dynkin_for("g2"));
  std::vector<int> a1 = {1, 0}, a2 = {0, 1};
  CHECK(g2.inner(a1, a1) == 2);   // node 1 short
  CHECK(g2.inner(a2, a2) == 6);   // node 2 long
  CHECK(g2.inner(a1, a2) == -3);
  CHECK(g2.pairing_with_simple_coroot(a2, 0) == -3);
  CHECK(g2.pairing_with_simple_coroot(a1, 1) == -1);
  // Highest root of g2 is long: 3*alpha1 + 2*alpha2.
  std::vector<int> theta = {3, 2};
  CHECK(g2.index_of(theta) == int(g2.positive_count()) - 1);
  CHECK(g2.inner(theta, theta) == 6);

  RootSystem f4(dynkin_for("f4"));
  std::vector<int> s = {1, 0, 0, 0}, l = {0, 0, 0, 1};
  CHECK(f4.inner(s, s) == 2);  // nodes 1, 2 short
  CHECK(f4.inner(l, l) == 4);  // nodes 3, 4 long
  // 24 positive roots, half short and half long.
  int shorts = 0;
  for (size_t i = 0; i < f4.positive_count(); ++i) {
    if (f4.half_norm(f4.positive(int(i))) == 1) ++shorts;
  }
  CHECK(shorts == 12);
}

namespace {

void check_serre(const ChevalleyAlgebra& alg) {
  const int r = alg.rank();
  const auto& cartan = alg.root_system().data().cartan;
  for (int i = 1; i <= r; ++i) {
    LieElement xi = alg.simple_plus(i);
    LieElement yi = alg.simple_minus(i);
    LieElement hi = alg.cartan_h(i);
    REQUIRE(bracket(xi, yi) == hi);
    REQUIRE(bracket(hi, xi) == xi.scaled(Rational(2)));
    REQUIRE(bracket(hi, yi) == yi.scaled(Rational(-2)));
    for (int j = 1; j <= r; ++j) {
      if (i == j) continue;
      REQUIRE(bracket(alg.simple_plus(i), alg.simple_minus(j)).is_zero());
      const int aij = cartan[i - 1][j - 1];
      LieElement up = alg.simple_plus(j);
      LieElement dn = alg.simple_minus(j);
      for (int k = 0; k < 1 - aij; ++k) {
        up = bracket(alg.simple_plus(i), up);
        dn = bracket(alg.simple_minus(i), dn);
      }
      CAPTURE(i);
      CAPTURE(j);
      CHECK(up.is_zero());
      CHECK(dn.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("Chevalley construction passes the Jacobi sweep and Serre checks") {
  for (const std::string key : {"a2", "a3", "b3", "c3", "d4", "g2", "f4"}) {
    CAPTURE(key);
    auto alg = std::make_shared<ChevalleyAlgebra>(key);  // verify_jacobi on
    check_serre(*alg);
  }
}

TEST_CASE("structure constants are small integers") {
  auto alg = make_chevalley("g2");
  const RootSystem& rs = alg->root_system();
  int nonzero = 0;
  for (size_t a = 0; a < rs.positive_count(); ++a) {
    for (size_t b = a + 1; b < rs.positive_count(); ++b) {
      std::vector<int> sum(rs.rank());
      for (int m = 0; m < rs.rank(); ++m) {
        sum[size_t(m)] = rs.positive(int(a))[size_t(m)] + rs.positive(int(b))[size_t(m)];
      }
      if (rs.index_of(sum) < 0) continue;
      Rational n = alg->pair_constant(int(a) + 1, int(b) + 1);
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(n.is_integer());
      REQUIRE(!n.is_zero());
      REQUIRE(n.abs() <= Rational(3));
      ++nonzero;
    }
  }
  CHECK(nonzero > 0);
  // Coroot coordinates of [e_theta, e_{-theta}] for the long highest root.
  int top = int(rs.positive_count());
  LieElement e = alg->element(alg->element_of_coordinate(rs.rank() + top - 1));
  LieElement f = alg->element(alg->element_of_coordinate(rs.rank() + 2 * top - 1));
  LieElement h = bracket(e, f);
  CoordVec expect;
  expect.add(0, MultiPoly::constant(Rational(1)));
  expect.add(1, MultiPoly::constant(Rational(2)));
  CHECK(h == alg->element(expect));
}

TEST_CASE("distinguished generators construct for every exceptional type") {
  struct Case {
    const char* key;
    int k1;
    size_t dim;
    const char* spectrum;
  };
  const Case cases[] = {
      {"g2", 10, 14, "2, 10"},
      {"f4", 10, 52, "2, 10, 14, 22"},
      {"e6", 8, 78, "2, 8, 10, 14, 16, 22"},
      {"e7", 10, 133, "2, 10, 14, 18, 22, 26, 34"},
      {"e8", 14, 248, "2, 14, 22, 26, 34, 38, 46, 58"},
  };
  for (const Case& c : cases) {
    CAPTURE(c.key);
    ExceptionalRealization real = exceptional_generators_auto(c.key);
    const GeneratorTriple& T = real.triple;
    CHECK(T.k1() == c.k1);
    CHECK(T.truncating());
    CHECK(!T.z().is_zero());
    CHECK(!T.z_i(c.k1).is_zero());   // the string below z has full length
    CHECK(T.z_i(c.k1 + 1).is_zero());
    CHECK(bracket(T.y(), T.z()).is_zero());

    SpanResult span = span_closure({T.x(), T.y(), T.z()});
    CHECK(span.dim() == c.dim);
    DecompositionReport rep = decompose_adjoint(T, span);
    CHECK(rep.total_dim == c.dim);
    CHECK(rep.spectrum_string() == c.spectrum);
  }
}

TEST_CASE("e6 and e7 and e8 pass the construction Jacobi sweep") {
  // make_chevalley caches; these instances are shared with the generator test.
  CHECK(make_chevalley("e6")->dimension() == 78);
  CHECK(make_chevalley("e7")->dimension() == 133);
  CHECK(make_chevalley("e8")->dimension() == 248);
}
