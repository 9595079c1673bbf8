#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaf/cartan.hpp"
#include "qaf/fixtures.hpp"

using namespace qaf;

TEST_CASE("minimal symmetrizers of the bundled matrices") {
  auto sl3 = fixture_cartan("sl3");
  CHECK(sl3.r == std::vector<long>{1, 1});
  auto b2 = fixture_cartan("b2");
  CHECK(b2.r == std::vector<long>{2, 1});
  auto g2 = fixture_cartan("g2");
  CHECK(g2.r == std::vector<long>{3, 1});
  auto aff = fixture_cartan("a1aff");
  CHECK(aff.r == std::vector<long>{1, 1});

  // the symmetrizer is minimal: gcd 1 per connected component
  auto two_blocks = CartanData::from_matrix({{2, 0}, {0, 2}});
  CHECK(two_blocks.r == std::vector<long>{1, 1});
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(CartanData::from_matrix({}), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::from_matrix({{2, -1}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::from_matrix({{1}}), std::invalid_argument);
  CHECK_THROWS_AS(CartanData::from_matrix({{2, 1}, {-1, 2}}), std::invalid_argument);
  // asymmetric zero pattern
  CHECK_THROWS_AS(CartanData::from_matrix({{2, -1}, {0, 2}}), std::invalid_argument);
  // zero patterns match but no symmetrizer exists on the triangle
  CHECK_THROWS_AS(
      CartanData::from_matrix({{2, -1, -2}, {-1, 2, -1}, {-1, -1, 2}}),
      std::invalid_argument);
}

TEST_CASE("admissibility") {
  CHECK(fixture_cartan("sl2").admissible());
  CHECK(fixture_cartan("sl3").admissible());
  CHECK(fixture_cartan("b2").admissible());
  CHECK(fixture_cartan("g2").admissible());
  // the affine sl2 matrix has C[0][1] = -2 with -C[1][0] = 2: excluded
  CHECK_FALSE(fixture_cartan("a1aff").admissible());
  // an entry below -1 is fine while its row has symmetrizer 1: here r = (1, 2)
  CHECK(CartanData::from_matrix({{2, -2}, {-1, 2}}).admissible());
  // but not when the row's symmetrizer exceeds 1: node 2 forces r = (2, 4, 1),
  // so the entry C[0][1] = -2 now sits in a row with r[0] = 2
  auto hybrid = CartanData::from_matrix({{2, -2, -1}, {-1, 2, 0}, {-2, 0, 2}});
  CHECK(hybrid.r == std::vector<long>{2, 4, 1});
  CHECK_FALSE(hybrid.admissible());
}

TEST_CASE("structural facts about admissible symmetrizers") {
  for (const auto& name : fixture_cartan_names()) {
    auto cd = fixture_cartan(name);
    if (cd.admissible()) {
      CAPTURE(name);
      CHECK(symmetrizer_constraints_ok(cd));
    }
  }
  // a wide admissible example: C[0][1] = -4 forces r = (1, 4)
  auto wide = CartanData::from_matrix({{2, -4}, {-1, 2}});
  CHECK(wide.r == std::vector<long>{1, 4});
  CHECK(wide.admissible());
  CHECK(symmetrizer_constraints_ok(wide));
}

TEST_CASE("q-deformed Cartan matrix and its determinant") {
  auto sl2 = fixture_cartan("sl2");
  CHECK(sl2.quantum_det() == RatQ::qint(2));
  CHECK(sl2.quantum_det_regular());

  auto b2 = fixture_cartan("b2");
  auto m = b2.quantum_cartan();
  CHECK(m.at(0, 0) == RatQ::q_pow(2) + RatQ::q_pow(-2));
  CHECK(m.at(0, 1) == -RatQ::one());
  CHECK(m.at(1, 0) == -RatQ::qint(2));
  CHECK(m.at(1, 1) == RatQ::qint(2));
  // det = q^3 + q^-3, extreme exponents +-(r_1 + r_2)
  CHECK(b2.quantum_det() == RatQ::q_pow(3) + RatQ::q_pow(-3));
  CHECK(b2.quantum_det_regular());

  // the affine matrix deforms to a singular matrix
  CHECK(fixture_cartan("a1aff").quantum_det().is_zero());
  CHECK_FALSE(fixture_cartan("a1aff").quantum_det_regular());
}

TEST_CASE("weights, roots and coroot pairings, nondegenerate case") {
  auto sl3 = fixture_cartan("sl3");
  CHECK(sl3.ext() == 0);
  CHECK(sl3.wdim() == 2);

  auto L1 = sl3.fundamental(0);
  CHECK(sl3.pair_coroot(L1, 0) == 1);
  CHECK(sl3.pair_coroot(L1, 1) == 0);
  CHECK(is_dominant_weight(sl3, L1));

  auto a1 = sl3.simple_root(0);
  CHECK(sl3.pair_coroot(a1, 0) == 2);
  CHECK(sl3.pair_coroot(a1, 1) == -1);
  CHECK_FALSE(is_dominant_weight(sl3, a1));

  // L1 = (2 a1 + a2)/3: in the root span but not in the positive cone
  auto x = alpha_coords(sl3, L1);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == mpq_class(2, 3));
  CHECK((*x)[1] == mpq_class(1, 3));
  CHECK_FALSE(in_positive_root_cone(sl3, L1));
  CHECK(root_height(sl3, L1) == 1);

  // the highest root a1 + a2 is in the cone
  auto theta = wv_add(sl3.simple_root(0), sl3.simple_root(1));
  CHECK(in_positive_root_cone(sl3, theta));
  CHECK(root_height(sl3, theta) == 2);
  CHECK(wv_is_zero(wv_sub(theta, theta)));
}

TEST_CASE("weights and roots with a singular matrix need the completion") {
  auto aff = fixture_cartan("a1aff");
  CHECK(aff.rank_c == 1);
  CHECK(aff.ext() == 1);
  CHECK(aff.wdim() == 3);

  // the simple roots stay independent in the completed coordinates
  auto a0 = aff.simple_root(0);
  auto a1 = aff.simple_root(1);
  CHECK_FALSE(wv_is_zero(wv_add(a0, a1)));  // the null root delta
  auto delta = wv_add(a0, a1);
  CHECK(aff.pair_coroot(delta, 0) == 0);
  CHECK(aff.pair_coroot(delta, 1) == 0);

  auto x = alpha_coords(aff, delta);
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 1);
  CHECK((*x)[1] == 1);
  CHECK(in_positive_root_cone(aff, delta));
  CHECK(root_height(aff, delta) ==2);

  // a fundamental weight is not in the root span here
  CHECK_FALSE(alpha_coords(aff, aff.fundamental(0)).has_value());
  CHECK_THROWS(root_height(aff, aff.fundamental(0)));
}
