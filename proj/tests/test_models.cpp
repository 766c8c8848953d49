#include <doctest.h>

#include "weyl/liealg.hpp"
#include "weyl/models.hpp"

using namespace weyl;

namespace {
NCPoly J(int i) { return NCPoly::generator(gl3_spec(), "J" + std::to_string(i)); }
const NCPoly& A(int i) { return artifacts().items[i - 1]; }
}  // namespace

TEST_CASE("sector data") {
  SpectralSector s2(2);
  CHECK(s2.nu_value == rat(-2, 3));
  CHECK(s2.kappa == rat(10, 9));
  CHECK(ModelParams::sector(3).nu == ParamPoly(rat(-1)));
  CHECK(ModelParams::sector(0).nu == ParamPoly(0));
  ParamPoly l = ParamPoly::sym(Param::Lambda);
  CHECK(SpectralSector::kappa2(l).eval({{Param::Lambda, rat(2)}}) ==
        ParamPoly(10));
}

TEST_CASE("quadratic operator leading symbols") {
  NCPoly h = h_a2_pq(ModelParams::symbolic());
  const AlgebraSpec& s = h5_spec();
  // coefficient of qx px^2 is 1
  Word qx_pxpx = {static_cast<std::uint8_t>(s.rank_of("qx")),
                  static_cast<std::uint8_t>(s.rank_of("px")),
                  static_cast<std::uint8_t>(s.rank_of("px"))};
  REQUIRE(h.terms().count(qx_pxpx) == 1);
  CHECK(h.terms().at(qx_pxpx) == ParamPoly(1));
}

TEST_CASE("coupling-free part of the J-form operators") {
  ModelParams p = ModelParams::symbolic();
  p.tau = ParamPoly(0);
  p.mu = ParamPoly(0);
  NCPoly h0 = h_a2_J(p);
  CHECK(h0 == 2 * (J(6) * J(1)) - ParamPoly(rat(1, 3)) * J(5).pow(2) -
                  J(1) * J(0));
}

TEST_CASE("block table shape") {
  const auto& blocks = commutator_blocks();
  REQUIRE(blocks.size() == 12);
  unsigned expect[12][2] = {{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2},
                            {2, 1}, {1, 2}, {0, 3}, {3, 1}, {2, 2}, {1, 3}};
  for (int i = 0; i < 12; ++i) {
    CHECK(blocks[i].name == "D" + std::to_string(i + 1));
    CHECK(blocks[i].tau_deg == expect[i][0]);
    CHECK(blocks[i].mu_deg == expect[i][1]);
  }
}

TEST_CASE("highest blocks are single artifact multiples") {
  const auto& blocks = commutator_blocks();
  const AlgebraSpec& g = gl3_spec();
  auto block = [&](const std::string& name) -> const NCPoly& {
    for (const auto& b : blocks)
      if (b.name == name) return b.rhs;
    FAIL("missing block");
    return blocks[0].rhs;
  };
  CHECK(normal_order(block("D10"), g) ==
        normal_order(-66 * (J(4).pow(2) * A(2)), g));
  CHECK(normal_order(block("D11"), g) ==
        normal_order(-48 * (J(8) * J(4) * A(2)), g));
  CHECK(normal_order(block("D12"), g) ==
        normal_order(-30 * (J(8).pow(2) * A(2)), g));
}

TEST_CASE("block sum equals the sum of monomial-weighted blocks") {
  ParamPoly t = ParamPoly::sym(Param::Tau);
  ParamPoly m = ParamPoly::sym(Param::Mu);
  NCPoly sum = NCPoly::zero(AlgebraTag::GL3);
  for (const auto& b : commutator_blocks())
    sum += (t.pow(b.tau_deg) * m.pow(b.mu_deg)) * b.rhs;
  CHECK(normal_order(sum, gl3_spec()) ==
        normal_order(commutator_block_sum(), gl3_spec()));
}

TEST_CASE("every block realizes to zero in U(h5)") {
  // each block is a superposition of artifact right-multiples, so its image
  // under the realization must vanish identically
  const Realization& r = gl3_realization_in_h5();
  for (const auto& b : commutator_blocks()) {
    CAPTURE(b.name);
    CHECK(substitute(b.rhs, r).is_zero());
  }
}
