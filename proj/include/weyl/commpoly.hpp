#pragma once

#include <array>
#include <map>

#include "weyl/ncalg.hpp"

namespace weyl {

// Commutative polynomial in the classical phase-space symbols
// (qx, qy, px, py) over ParamPoly, used for the Poisson-bracket contrast.
class CommPoly {
 public:
  using Exp = std::array<unsigned, 4>;  // qx, qy, px, py

  CommPoly() = default;

  static CommPoly from_normal(const NCPoly& x);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Exp, ParamPoly>& terms() const { return terms_; }

  void add_term(const Exp& e, const ParamPoly& c);

  CommPoly& operator+=(const CommPoly& o);
  CommPoly& operator-=(const CommPoly& o);
  friend CommPoly operator+(CommPoly a, const CommPoly& b) { return a += b; }
  friend CommPoly operator-(CommPoly a, const CommPoly& b) { return a -= b; }
  friend CommPoly operator*(const CommPoly& a, const CommPoly& b);
  friend bool operator==(const CommPoly& a, const CommPoly& b) {
    return a.terms_ == b.terms_;
  }

  CommPoly partial(int var) const;  // d/d(var), var indexes Exp

 private:
  std::map<Exp, ParamPoly> terms_;
};

// Sum over both coordinate pairs of dA/dp dB/dq - dA/dq dB/dp.
CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b);

}  // namespace weyl
