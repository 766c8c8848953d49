#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "weyl/rational.hpp"

namespace weyl {

// The four named parameters of the coefficient ring Q[nu, tau, mu, lambda].
enum class Param : int { Nu = 0, Tau = 1, Mu = 2, Lambda = 3 };

constexpr int kNumParams = 4;

const char* param_name(Param p);
std::optional<Param> param_from_name(const std::string& name);

// Commutative polynomial in {nu, tau, mu, lambda} with exact rational
// coefficients. Canonical form: no zero coefficients stored.
class ParamPoly {
 public:
  using Exponents = std::array<std::uint32_t, kNumParams>;
  using TermMap = std::map<Exponents, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);
  ParamPoly(long c) : ParamPoly(Rational(c)) {}

  static ParamPoly sym(Param p);
  static ParamPoly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant value if the polynomial has no symbolic part.
  std::optional<Rational> as_rational() const;

  const TermMap& terms() const { return terms_; }
  unsigned total_degree() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly operator-() const;
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) {
    return !(a == b);
  }
  friend bool operator<(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ < b.terms_;
  }

  ParamPoly pow(unsigned e) const;

  // Substitutes the bound parameters; unbound ones stay symbolic.
  ParamPoly eval(const std::map<Param, Rational>& bindings) const;

  // Text form: terms sorted by graded-lex exponent order, e.g.
  // "-3*mu^2 + 2/9*tau*nu". "0" for the zero polynomial.
  std::string str() const;
  static ParamPoly parse(const std::string& text);

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;

  friend std::map<std::pair<unsigned, unsigned>, ParamPoly> split_tau_mu(
      const ParamPoly&);
};

inline ParamPoly operator*(const Rational& c, const ParamPoly& p) {
  return ParamPoly(c) * p;
}
inline ParamPoly operator*(long c, const ParamPoly& p) {
  return ParamPoly(c) * p;
}

// Splits a polynomial by exact (tau, mu) bidegree; each component keeps its
// tau^a mu^b factors, so the pieces sum back to the input.
std::map<std::pair<unsigned, unsigned>, ParamPoly> split_tau_mu(
    const ParamPoly& p);

}  // namespace weyl
