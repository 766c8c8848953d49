#include "weyl/fockrep.hpp"

#include <sstream>
#include <stdexcept>

namespace weyl {

AxisRep AxisRep::exponential(const Rational& q) {
  if (q == 0 || q == 1)
    throw std::invalid_argument("exponential axis requires q outside {0, 1}");
  return {AxisKind::Exponential, q};
}

std::vector<std::pair<unsigned, unsigned>> BasisSpec::monomials() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned d = 0; d <= bound; ++d) {
    // weighted degree d, x-exponent descending
    for (int a = static_cast<int>(d / w1); a >= 0; --a) {
      unsigned rest = d - w1 * static_cast<unsigned>(a);
      if (rest % w2 != 0) continue;
      out.emplace_back(static_cast<unsigned>(a), rest / w2);
    }
  }
  return out;
}

std::optional<std::size_t> BasisSpec::index_of(unsigned a, unsigned b) const {
  auto all = monomials();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] == std::make_pair(a, b)) return i;
  return std::nullopt;
}

BiPoly bipoly_monomial(unsigned a, unsigned b) {
  return {{{a, b}, ParamPoly(1)}};
}

namespace {

// q-number {n}_q = (1 - q^n) / (1 - q)
Rational q_number(const Rational& q, unsigned n) {
  Rational num = 1 - weyl::pow(q, n);
  Rational den = 1 - q;
  return num / den;
}

}  // namespace

std::vector<std::pair<unsigned, Rational>> axis_action(const AxisRep& rep,
                                                       GenClass which,
                                                       unsigned a) {
  std::vector<std::pair<unsigned, Rational>> out;
  AxisKind kind = rep.kind;
  if (kind == AxisKind::Uniform && rep.spacing == 0)
    kind = AxisKind::Differential;  // delta -> 0 limit is d/dx
  if (kind == AxisKind::Exponential && (rep.spacing == 0 || rep.spacing == 1))
    throw std::invalid_argument("exponential axis requires q outside {0, 1}");
  switch (kind) {
    case AxisKind::Differential:
    case AxisKind::ComplexFock:
      if (which == GenClass::P) {
        if (a > 0) out.emplace_back(a - 1, Rational(static_cast<long>(a)));
      } else {
        out.emplace_back(a + 1, Rational(1));
      }
      break;
    case AxisKind::Uniform: {
      const Rational& d = rep.spacing;
      if (which == GenClass::P) {
        // ((x+d)^a - x^a) / d
        for (unsigned k = 0; k + 1 <= a; ++k)
          out.emplace_back(k, binomial(a, k) * weyl::pow(d, a - 1 - k));
      } else {
        // x (x - d)^a
        for (unsigned k = 0; k <= a; ++k)
          out.emplace_back(k + 1, binomial(a, k) * weyl::pow(-d, a - k));
      }
      break;
    }
    case AxisKind::Exponential: {
      const Rational& q = rep.spacing;
      if (which == GenClass::P) {
        if (a > 0) out.emplace_back(a - 1, q_number(q, a));
      } else {
        Rational qn = q_number(q, a + 1);
        if (qn == 0) {
          std::ostringstream os;
          os << "degenerate exponential axis: {" << a + 1 << "}_q = 0 at q = "
             << to_string(q);
          throw std::runtime_error(os.str());
        }
        out.emplace_back(a + 1, Rational(static_cast<long>(a + 1)) / qn);
      }
      break;
    }
  }
  return out;
}

namespace {

using UniPoly = std::map<unsigned, Rational>;

UniPoly axis_apply_poly(const AxisRep& rep, GenClass which, const UniPoly& f) {
  UniPoly out;
  for (const auto& [a, c] : f) {
    for (const auto& [e, w] : axis_action(rep, which, a)) {
      Rational& slot = out[e];
      slot += c * w;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

}  // namespace

BiPoly apply(const NCPoly& op, const RepConfig& rep, const BiPoly& f) {
  if (op.tag() != AlgebraTag::H5)
    throw std::invalid_argument("apply expects an h5 operator");
  if (!op.is_normal())
    throw std::invalid_argument("apply expects a normal-ordered operator");
  BiPoly out;
  for (const auto& [w, coeff] : op.terms()) {
    // normal word: qx^i qy^j px^k py^l
    unsigned cnt[4] = {0, 0, 0, 0};
    for (auto r : w) ++cnt[r];
    for (const auto& [mono, fc] : f) {
      UniPoly fx{{mono.first, Rational(1)}};
      UniPoly fy{{mono.second, Rational(1)}};
      for (unsigned s = 0; s < cnt[2]; ++s)
        fx = axis_apply_poly(rep.axis_x, GenClass::P, fx);
      for (unsigned s = 0; s < cnt[0]; ++s)
        fx = axis_apply_poly(rep.axis_x, GenClass::Q, fx);
      for (unsigned s = 0; s < cnt[3]; ++s)
        fy = axis_apply_poly(rep.axis_y, GenClass::P, fy);
      for (unsigned s = 0; s < cnt[1]; ++s)
        fy = axis_apply_poly(rep.axis_y, GenClass::Q, fy);
      for (const auto& [ex, cx] : fx) {
        for (const auto& [ey, cy] : fy) {
          ParamPoly add = coeff * fc * ParamPoly(cx * cy);
          if (add.is_zero()) continue;
          auto key = std::make_pair(ex, ey);
          auto it = out.find(key);
          if (it == out.end()) {
            out.emplace(key, add);
          } else {
            it->second += add;
            if (it->second.is_zero()) out.erase(it);
          }
        }
      }
    }
  }
  return out;
}

std::optional<InvarianceWitness> check_invariance(const NCPoly& op,
                                                  const RepConfig& rep,
                                                  const BasisSpec& basis) {
  for (const auto& [a, b] : basis.monomials()) {
    BiPoly image = apply(op, rep, bipoly_monomial(a, b));
    for (const auto& [mono, c] : image) {
      if (basis.w1 * mono.first + basis.w2 * mono.second > basis.bound)
        return InvarianceWitness{{a, b}, mono, c};
    }
  }
  return std::nullopt;
}

OperatorMatrix operator_matrix(const NCPoly& op, const RepConfig& rep,
                               const BasisSpec& basis) {
  auto monos = basis.monomials();
  OperatorMatrix m;
  m.basis = basis;
  m.dim = monos.size();
  m.entries.assign(m.dim * m.dim, ParamPoly());
  // index lookup
  std::map<std::pair<unsigned, unsigned>, std::size_t> idx;
  for (std::size_t i = 0; i < monos.size(); ++i) idx[monos[i]] = i;
  for (std::size_t j = 0; j < monos.size(); ++j) {
    BiPoly image = apply(op, rep, bipoly_monomial(monos[j].first,
                                                  monos[j].second));
    for (const auto& [mono, c] : image) {
      auto it = idx.find(mono);
      if (it == idx.end()) {
        std::ostringstream os;
        os << "operator leaves basis span: x^" << monos[j].first << " y^"
           << monos[j].second << " -> x^" << mono.first << " y^"
           << mono.second << " with coefficient " << c.str();
        throw std::runtime_error(os.str());
      }
      m.at(it->second, j) = c;
    }
  }
  return m;
}

OperatorMatrix matrix_mul(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  OperatorMatrix out;
  out.basis = a.basis;
  out.dim = a.dim;
  out.entries.assign(a.dim * a.dim, ParamPoly());
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim; ++j)
        out.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return out;
}

bool matrix_equal(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.dim == b.dim && a.entries == b.entries;
}

}  // namespace weyl
