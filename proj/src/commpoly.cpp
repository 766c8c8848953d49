#include "weyl/commpoly.hpp"

#include <stdexcept>

#include "weyl/liealg.hpp"

namespace weyl {

CommPoly CommPoly::from_normal(const NCPoly& x) {
  if (x.tag() != AlgebraTag::H5)
    throw std::invalid_argument("classical image is defined over h5");
  if (!x.is_normal())
    throw std::invalid_argument("classical image requires a normal form");
  CommPoly out;
  for (const auto& [w, c] : x.terms()) {
    Exp e{0, 0, 0, 0};
    for (auto r : w) ++e[r];  // h5 ranks are qx, qy, px, py
    out.add_term(e, c);
  }
  return out;
}

void CommPoly::add_term(const Exp& e, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CommPoly& CommPoly::operator+=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

CommPoly operator*(const CommPoly& a, const CommPoly& b) {
  CommPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      CommPoly::Exp e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

CommPoly CommPoly::partial(int var) const {
  CommPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exp d = e;
    --d[var];
    out.add_term(d, ParamPoly(Rational(static_cast<long>(e[var]))) * c);
  }
  return out;
}

CommPoly poisson_bracket(const CommPoly& a, const CommPoly& b) {
  constexpr int kQx = 0, kQy = 1, kPx = 2, kPy = 3;
  CommPoly out;
  out += a.partial(kPx) * b.partial(kQx) - a.partial(kQx) * b.partial(kPx);
  out += a.partial(kPy) * b.partial(kQy) - a.partial(kQy) * b.partial(kPy);
  return out;
}

}  // namespace weyl
