#include <doctest.h>

#include "weyl/liealg.hpp"

using namespace weyl;

namespace {
NCPoly J(int i) { return NCPoly::generator(gl3_spec(), "J" + std::to_string(i)); }
}  // namespace

TEST_CASE("gl(3) bracket table matches the independent structure constants") {
  CHECK_NOTHROW(check_gl3_table_against_structure_constants());
  CHECK(gl3_structure_constants().size() == 24);
}

TEST_CASE("spot brackets agree with the table") {
  // [J1, J7] = J3 - J0, [J4, J5] = J6 - J3
  CHECK(nc_commutator(J(1), J(7), gl3_spec()) ==
        normal_order(J(3) - J(0), gl3_spec()));
  CHECK(nc_commutator(J(4), J(5), gl3_spec()) ==
        normal_order(J(6) - J(3), gl3_spec()));
  // J0 grades the lowering/raising generators and fixes the mixed ones
  CHECK(nc_commutator(J(0), J(1), gl3_spec()) == normal_order(J(1), gl3_spec()));
  CHECK(nc_commutator(J(0), J(2), gl3_spec()) == normal_order(J(2), gl3_spec()));
  CHECK(nc_commutator(J(0), J(7), gl3_spec()) ==
        normal_order(-J(7), gl3_spec()));
  CHECK(nc_commutator(J(0), J(8), gl3_spec()) ==
        normal_order(-J(8), gl3_spec()));
  for (int i : {3, 4, 5, 6}) {
    CHECK(nc_commutator(J(0), J(i), gl3_spec()).is_zero());
  }
}

TEST_CASE("all nine bilinear artifacts realize to zero") {
  const Realization& r = gl3_realization_in_h5();
  for (const NCPoly& a : artifacts().items) {
    NCPoly image = substitute(a, r);
    CAPTURE(a.str(gl3_spec()));
    CHECK(image.is_zero());
  }
}

TEST_CASE("the realization respects every gl(3) bracket") {
  const Realization& r = gl3_realization_in_h5();
  const AlgebraSpec& g = gl3_spec();
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      if (a == b) continue;
      NCPoly x = J(a), y = J(b);
      NCPoly lhs = nc_commutator(substitute(x, r), substitute(y, r), h5_spec());
      NCPoly rhs = substitute(nc_commutator(x, y, g), r);
      CAPTURE(a);
      CAPTURE(b);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("substitution is multiplicative on a nontrivial product") {
  const Realization& r = gl3_realization_in_h5();
  NCPoly x = J(6) * J(1) + 2 * (J(5) * J(5));
  NCPoly y = J(8) * J(2) - J(3);
  NCPoly lhs = substitute(normal_order(x * y, gl3_spec()), r);
  NCPoly rhs = nc_mul(substitute(x, r), substitute(y, r), h5_spec());
  CHECK(lhs == rhs);
}
