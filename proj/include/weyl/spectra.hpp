#pragma once

#include <string>
#include <vector>

#include "weyl/fockrep.hpp"
#include "weyl/models.hpp"

namespace weyl {

// Monic characteristic polynomial det(lambda*I - M); coeffs[k] multiplies
// lambda^k, coeffs.size() == dim + 1.
struct CharPoly {
  std::vector<ParamPoly> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  friend bool operator==(const CharPoly& a, const CharPoly& b) {
    return a.coeffs == b.coeffs;
  }
  friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
  std::string str() const;  // in the spectral variable "L"
  // value at a rational spectral point, coefficients still in ParamPoly
  ParamPoly eval_at(const Rational& x) const;
};

// Division-free over the coefficient field is unnecessary: the
// Faddeev-LeVerrier integer divisions are exact over Q-coefficients.
CharPoly char_poly(const OperatorMatrix& m);

// lambda^2 + p*lambda + q factors used by the closed-form n = 2 spectrum.
CharPoly quadratic_factor(const ParamPoly& p, const ParamPoly& q);
CharPoly linear_power(std::size_t n);  // lambda^n

// Reference spectrum of h_A2 on P_n for n = 0, 1, 2 with tau, mu symbolic.
CharPoly reference_char_poly_hA2(int n);

struct SectorReport {
  int n;
  CharPoly computed;
  CharPoly reference;
  bool match;
};

// Builds h_A2 at nu = -n/3 on the (1,1)-basis of bound n and compares
// against the closed-form spectrum (n <= 2; larger n reports computed only).
SectorReport verify_sector(int n, const RepConfig& rep);

struct IsospectralityReport {
  int n;
  std::vector<std::string> labels;
  std::vector<CharPoly> polys;
  bool all_equal;
  // indices of the first differing pair when all_equal is false
  int bad_i = -1, bad_j = -1;
};

IsospectralityReport isospectrality_report(
    int n, const std::vector<std::pair<std::string, RepConfig>>& configs);

// M_h M_k == M_k M_h on P_n at nu = -n/3.
bool commuting_block_check(int n, const RepConfig& rep);

}  // namespace weyl
