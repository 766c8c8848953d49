#include <doctest.h>

#include "weyl/verify.hpp"

using namespace weyl;

namespace {
RepConfig dd() { return {AxisRep::differential(), AxisRep::differential()}; }
}  // namespace

TEST_CASE("pq pair commutes") {
  CheckReport r = check_pq_pair_commutes();
  CAPTURE(r.residual);
  CHECK(r.pass);
}

TEST_CASE("pq commutation negative control") {
  NCPoly px = NCPoly::generator(h5_spec(), "px");
  CheckReport r = check_pq_pair_commutes(&px);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.residual.empty());
}

TEST_CASE("artifact images vanish") {
  CHECK(check_artifacts_vanish().pass);
}

TEST_CASE("artifact vanishing negative control") {
  NCPoly j4 = NCPoly::generator(gl3_spec(), "J4");
  CHECK_FALSE(check_artifacts_vanish(&j4).pass);
}

TEST_CASE("block decomposition of the abstract commutator") {
  CheckReport r = check_block_decomposition();
  CAPTURE(r.residual);
  CHECK(r.pass);
}

TEST_CASE("substitution consistency") {
  CheckReport r = check_substitution_consistency();
  CAPTURE(r.residual);
  CHECK(r.pass);
}

TEST_CASE("artifact closure example and its negative control") {
  CHECK(check_artifact_closure_example().pass);
  CHECK_FALSE(check_artifact_closure_example(true).pass);
}

TEST_CASE("classical contrast") {
  CHECK(check_poisson_noncommutativity().pass);
}

TEST_CASE("realization homomorphism and structure constants") {
  CHECK(check_homomorphism().pass);
}

TEST_CASE("weighted-triangle invariance of the second model") {
  for (int n = 0; n <= 2; ++n) {
    for (const Rational& l : {rat(0), rat(1, 2), rat(1)}) {
      CheckReport r = check_g2_invariance(n, l, dd());
      CAPTURE(n);
      CHECK(r.pass);
    }
  }
}

TEST_CASE("aggregate runner reports every check as passing") {
  auto reports = run_all_checks();
  CHECK(reports.size() >= 7);
  for (const auto& r : reports) {
    CAPTURE(r.name);
    CAPTURE(r.residual);
    CHECK(r.pass);
  }
}
