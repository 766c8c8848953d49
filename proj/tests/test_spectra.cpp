#include <doctest.h>

#include "weyl/liealg.hpp"
#include "weyl/spectra.hpp"

using namespace weyl;

namespace {
RepConfig dd() { return {AxisRep::differential(), AxisRep::differential()}; }
OperatorMatrix make_matrix(std::size_t dim, std::vector<long> colmajor_longs) {
  OperatorMatrix m;
  m.dim = dim;
  m.entries.assign(dim * dim, ParamPoly(0));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m.at(r, c) = ParamPoly(Rational(colmajor_longs[r * dim + c]));
  return m;
}
}  // namespace

TEST_CASE("characteristic polynomial of a companion matrix") {
  // companion of L^2 - 5L + 6
  OperatorMatrix m = make_matrix(2, {0, -6, 1, 5});
  CharPoly p = char_poly(m);
  REQUIRE(p.degree() == 2);
  CHECK(p.coeffs[2] == ParamPoly(1));
  CHECK(p.coeffs[1] == ParamPoly(-5));
  CHECK(p.coeffs[0] == ParamPoly(6));
  CHECK(p.eval_at(rat(2)).is_zero());
  CHECK(p.eval_at(rat(3)).is_zero());
  CHECK(p.eval_at(rat(1)) == ParamPoly(2));
}

TEST_CASE("characteristic polynomial of the identity") {
  OperatorMatrix m = make_matrix(2, {1, 0, 0, 1});
  CharPoly p = char_poly(m);
  CharPoly expect = quadratic_factor(ParamPoly(-2), ParamPoly(1));  // (L-1)^2
  CHECK(p == expect);
}

TEST_CASE("factor arithmetic") {
  CharPoly l3 = linear_power(3);
  REQUIRE(l3.degree() == 3);
  CHECK(l3.coeffs[3] == ParamPoly(1));
  CHECK(l3.coeffs[0].is_zero());
  CharPoly q = quadratic_factor(ParamPoly(1), ParamPoly(-2));  // L^2 + L - 2
  CharPoly prod = q * linear_power(1);
  REQUIRE(prod.degree() == 3);
  CHECK(prod.coeffs[0].is_zero());
  CHECK(prod.coeffs[1] == ParamPoly(-2));
}

TEST_CASE("closed-form reference spectra") {
  CharPoly p0 = reference_char_poly_hA2(0);
  REQUIRE(p0.degree() == 1);
  CHECK(p0.coeffs[0].is_zero());

  CharPoly p1 = reference_char_poly_hA2(1);
  REQUIRE(p1.degree() == 3);
  for (int k = 0; k < 3; ++k) CHECK(p1.coeffs[k].is_zero());

  CharPoly p2 = reference_char_poly_hA2(2);
  REQUIRE(p2.degree() == 6);
  ParamPoly t = ParamPoly::sym(Param::Tau);
  ParamPoly m = ParamPoly::sym(Param::Mu);
  CHECK(p2.coeffs[6] == ParamPoly(1));
  CHECK(p2.coeffs[5] == 12 * t);
  CHECK(p2.coeffs[0] == 64 * m * m * m);
  // the full sextic is the cube of one quadratic factor
  CharPoly f = quadratic_factor(4 * t, 4 * m);
  CHECK(p2 == f * f * f);
  CHECK_THROWS(reference_char_poly_hA2(3));
}

TEST_CASE("computed sector spectra match the references") {
  for (int n = 0; n <= 2; ++n) {
    SectorReport r = verify_sector(n, dd());
    CAPTURE(n);
    CHECK(r.match);
    CHECK(r.computed == r.reference);
  }
}

TEST_CASE("vanishing couplings make the sector matrix nilpotent") {
  ModelParams p = ModelParams::sector(2);
  p.tau = ParamPoly(0);
  p.mu = ParamPoly(0);
  NCPoly h = normal_order(h_a2_pq(p), h5_spec());
  OperatorMatrix m = operator_matrix(h, dd(), BasisSpec{1, 1, 2});
  CharPoly cp = char_poly(m);
  REQUIRE(cp.degree() == 6);
  for (int k = 0; k < 6; ++k) CHECK(cp.coeffs[k].is_zero());
}

TEST_CASE("spectra agree across representations") {
  std::vector<std::pair<std::string, RepConfig>> reps = {
      {"dd", dd()},
      {"uu", {AxisRep::uniform(rat(1, 2)), AxisRep::uniform(rat(1, 3))}},
      {"ee", {AxisRep::exponential(rat(2)), AxisRep::exponential(rat(3, 2))}},
      {"ue", {AxisRep::uniform(rat(1, 2)), AxisRep::exponential(rat(2))}},
      {"cf", {AxisRep::complex_fock(), AxisRep::complex_fock()}},
  };
  for (int n = 1; n <= 2; ++n) {
    IsospectralityReport r = isospectrality_report(n, reps);
    CAPTURE(n);
    CHECK(r.all_equal);
    CHECK(r.polys.size() == reps.size());
  }
}

TEST_CASE("the two conserved operators commute blockwise") {
  for (int n = 0; n <= 2; ++n) {
    CAPTURE(n);
    CHECK(commuting_block_check(n, dd()));
  }
}
