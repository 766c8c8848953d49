#include <doctest.h>

#include "weyl/parampoly.hpp"

using namespace weyl;

namespace {
ParamPoly nu() { return ParamPoly::sym(Param::Nu); }
ParamPoly tau() { return ParamPoly::sym(Param::Tau); }
ParamPoly mu() { return ParamPoly::sym(Param::Mu); }
}  // namespace

TEST_CASE("ring axioms on sample polynomials") {
  ParamPoly a = 2 * tau() + ParamPoly(rat(1, 3)) * nu() * nu();
  ParamPoly b = mu() - ParamPoly(5);
  ParamPoly c = nu() * tau() + ParamPoly(rat(-7, 2));
  CHECK(a + b == b + a);
  CHECK(a * b == b * a);
  CHECK((a + b) + c == a + (b + c));
  CHECK((a * b) * c == a * (b * c));
  CHECK(a * (b + c) == a * b + a * c);
  CHECK((a - a).is_zero());
  CHECK(a * ParamPoly(1) == a);
  CHECK((a * ParamPoly(0)).is_zero());
}

TEST_CASE("coupling product evaluates exactly at nu = -2/3") {
  ParamPoly p = nu() * (nu() - ParamPoly(1));
  ParamPoly v = p.eval({{Param::Nu, rat(-2, 3)}});
  REQUIRE(v.is_constant());
  CHECK(*v.as_rational() == rat(10, 9));
}

TEST_CASE("partial evaluation keeps unbound parameters symbolic") {
  ParamPoly p = tau() * nu() + mu();
  ParamPoly v = p.eval({{Param::Nu, rat(2)}});
  CHECK(v == 2 * tau() + mu());
  CHECK_FALSE(v.is_constant());
}

TEST_CASE("text form round-trips through parse") {
  ParamPoly samples[] = {
      ParamPoly(0),
      ParamPoly(rat(-3, 7)),
      2 * tau() - ParamPoly(rat(1, 3)) * mu() * mu(),
      nu() * nu() * tau() + ParamPoly(rat(22, 9)) * mu() - ParamPoly(14),
      ParamPoly::sym(Param::Lambda) * (3 * ParamPoly::sym(Param::Lambda) -
                                       ParamPoly(1)),
  };
  for (const ParamPoly& p : samples) {
    CAPTURE(p.str());
    CHECK(ParamPoly::parse(p.str()) == p);
  }
}

TEST_CASE("power matches repeated multiplication") {
  ParamPoly p = tau() + ParamPoly(2);
  CHECK(p.pow(0) == ParamPoly(1));
  CHECK(p.pow(3) == p * p * p);
}

TEST_CASE("tau/mu bidegree split reassembles to the input") {
  ParamPoly p = tau() * tau() * nu() + 3 * tau() * mu() - mu() +
                ParamPoly(rat(5, 2));
  auto parts = split_tau_mu(p);
  CHECK(parts.size() == 4);
  ParamPoly sum;
  for (const auto& [bideg, part] : parts) sum += part;
  CHECK(sum == p);
}
