#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weyl/ncalg.hpp"

namespace weyl {

enum class AxisKind { Differential, Uniform, Exponential, ComplexFock };

// One coordinate axis of a Fock-space representation of h5.
struct AxisRep {
  AxisKind kind = AxisKind::Differential;
  Rational spacing = 0;  // delta for Uniform, q for Exponential

  static AxisRep differential() { return {AxisKind::Differential, 0}; }
  static AxisRep uniform(const Rational& delta) {
    return {AxisKind::Uniform, delta};
  }
  static AxisRep exponential(const Rational& q);  // rejects q in {0, 1}
  static AxisRep complex_fock() { return {AxisKind::ComplexFock, 0}; }
};

struct RepConfig {
  AxisRep axis_x;
  AxisRep axis_y;
};

// Monomial basis x^a y^b with w1*a + w2*b <= bound, graded-lex ordered.
struct BasisSpec {
  unsigned w1 = 1;
  unsigned w2 = 1;
  unsigned bound = 0;

  std::vector<std::pair<unsigned, unsigned>> monomials() const;
  std::size_t size() const { return monomials().size(); }
  // index of x^a y^b, or nullopt if outside the basis
  std::optional<std::size_t> index_of(unsigned a, unsigned b) const;
};

// Bivariate polynomial module element: exponents -> ParamPoly coefficient.
using BiPoly = std::map<std::pair<unsigned, unsigned>, ParamPoly>;

BiPoly bipoly_monomial(unsigned a, unsigned b);

enum class GenClass { P, Q };

// Image of x^a under one application of the axis operator, as exponent ->
// rational coefficient pairs in that axis variable.
std::vector<std::pair<unsigned, Rational>> axis_action(const AxisRep& rep,
                                                       GenClass which,
                                                       unsigned a);

// Applies a normal-ordered h5 element to a polynomial; p-generators act
// first (they stand rightmost in the normal form).
BiPoly apply(const NCPoly& op, const RepConfig& rep, const BiPoly& f);

struct InvarianceWitness {
  std::pair<unsigned, unsigned> basis_monomial;   // the input that escapes
  std::pair<unsigned, unsigned> escape_monomial;  // where it escapes to
  ParamPoly coefficient;
};

// True iff every basis monomial maps into the span of the basis.
std::optional<InvarianceWitness> check_invariance(const NCPoly& op,
                                                  const RepConfig& rep,
                                                  const BasisSpec& basis);

struct OperatorMatrix {
  BasisSpec basis;
  std::size_t dim = 0;
  std::vector<ParamPoly> entries;  // row-major, dim x dim

  ParamPoly& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const ParamPoly& at(std::size_t r, std::size_t c) const {
    return entries[r * dim + c];
  }
};

// Column j holds the coordinates of op applied to basis monomial j.
// Throws std::runtime_error with a witness description on non-invariance.
OperatorMatrix operator_matrix(const NCPoly& op, const RepConfig& rep,
                               const BasisSpec& basis);

OperatorMatrix matrix_mul(const OperatorMatrix& a, const OperatorMatrix& b);
bool matrix_equal(const OperatorMatrix& a, const OperatorMatrix& b);

}  // namespace weyl
