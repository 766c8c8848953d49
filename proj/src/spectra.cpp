#include "weyl/spectra.hpp"

#include <sstream>
#include <stdexcept>

namespace weyl {

CharPoly operator*(const CharPoly& a, const CharPoly& b) {
  CharPoly out;
  if (a.coeffs.empty() || b.coeffs.empty()) return out;
  out.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, ParamPoly());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return out;
}

std::string CharPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    if (coeffs[k].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs[k].str() << ")";
    if (k > 0) os << "*L^" << k;
  }
  if (first) os << "0";
  return os.str();
}

ParamPoly CharPoly::eval_at(const Rational& x) const {
  ParamPoly acc;
  for (std::size_t k = coeffs.size(); k-- > 0;)
    acc = acc * ParamPoly(x) + coeffs[k];
  return acc;
}

CharPoly char_poly(const OperatorMatrix& m) {
  const std::size_t n = m.dim;
  CharPoly out;
  out.coeffs.assign(n + 1, ParamPoly());
  out.coeffs[n] = ParamPoly(1);
  if (n == 0) return out;
  // Faddeev-LeVerrier: M_1 = M, c_{n-k} = -tr(M_k)/k,
  // M_{k+1} = M (M_k + c_{n-k} I).
  OperatorMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    ParamPoly tr;
    for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i);
    ParamPoly c = ParamPoly(rat(-1, static_cast<long>(k))) * tr;
    out.coeffs[n - k] = c;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk.at(i, i) += c;
    mk = matrix_mul(m, mk);
  }
  return out;
}

CharPoly quadratic_factor(const ParamPoly& p, const ParamPoly& q) {
  CharPoly f;
  f.coeffs = {q, p, ParamPoly(1)};
  return f;
}

CharPoly linear_power(std::size_t n) {
  CharPoly f;
  f.coeffs.assign(n + 1, ParamPoly());
  f.coeffs[n] = ParamPoly(1);
  return f;
}

CharPoly reference_char_poly_hA2(int n) {
  ParamPoly t = ParamPoly::sym(Param::Tau);
  ParamPoly m = ParamPoly::sym(Param::Mu);
  switch (n) {
    case 0:
      return linear_power(1);
    case 1:
      return linear_power(3);
    case 2: {
      CharPoly f = quadratic_factor(4 * t, 4 * m);
      return f * f * f;
    }
    default:
      throw std::invalid_argument(
          "closed-form reference spectra exist for n = 0, 1, 2 only");
  }
}

SectorReport verify_sector(int n, const RepConfig& rep) {
  NCPoly h = normal_order(h_a2_pq(ModelParams::sector(n)), h5_spec());
  BasisSpec basis{1, 1, static_cast<unsigned>(n)};
  OperatorMatrix m = operator_matrix(h, rep, basis);
  SectorReport r;
  r.n = n;
  r.computed = char_poly(m);
  r.reference = reference_char_poly_hA2(n);
  r.match = (r.computed == r.reference);
  return r;
}

IsospectralityReport isospectrality_report(
    int n, const std::vector<std::pair<std::string, RepConfig>>& configs) {
  IsospectralityReport rep;
  rep.n = n;
  NCPoly h = normal_order(h_a2_pq(ModelParams::sector(n)), h5_spec());
  BasisSpec basis{1, 1, static_cast<unsigned>(n)};
  for (const auto& [label, cfg] : configs) {
    rep.labels.push_back(label);
    rep.polys.push_back(char_poly(operator_matrix(h, cfg, basis)));
  }
  rep.all_equal = true;
  for (std::size_t i = 0; i + 1 < rep.polys.size() && rep.all_equal; ++i)
    for (std::size_t j = i + 1; j < rep.polys.size(); ++j)
      if (!(rep.polys[i] == rep.polys[j])) {
        rep.all_equal = false;
        rep.bad_i = static_cast<int>(i);
        rep.bad_j = static_cast<int>(j);
        break;
      }
  return rep;
}

bool commuting_block_check(int n, const RepConfig& rep) {
  ModelParams p = ModelParams::sector(n);
  NCPoly h = normal_order(h_a2_pq(p), h5_spec());
  NCPoly k = normal_order(k_a2_pq(p), h5_spec());
  BasisSpec basis{1, 1, static_cast<unsigned>(n)};
  OperatorMatrix mh = operator_matrix(h, rep, basis);
  OperatorMatrix mk = operator_matrix(k, rep, basis);
  return matrix_equal(matrix_mul(mh, mk), matrix_mul(mk, mh));
}

}  // namespace weyl
