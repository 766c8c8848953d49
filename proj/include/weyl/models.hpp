#pragma once

#include <string>
#include <vector>

#include "weyl/liealg.hpp"
#include "weyl/ncalg.hpp"

namespace weyl {

// Parameters of the A2 / G2 operators. Fully symbolic by default.
struct ModelParams {
  ParamPoly tau = ParamPoly::sym(Param::Tau);
  ParamPoly mu = ParamPoly::sym(Param::Mu);
  ParamPoly nu = ParamPoly::sym(Param::Nu);
  ParamPoly lambda = ParamPoly::sym(Param::Lambda);

  static ModelParams symbolic() { return {}; }
  // nu fixed to -n/3, everything else symbolic.
  static ModelParams sector(int n);
};

// Quasi-exactly-solvable sector data for coupling nu = -n/3.
struct SpectralSector {
  int n;
  Rational nu_value;  // -n/3
  Rational kappa;     // n(n+3)/9 = nu(nu-1)

  explicit SpectralSector(int n_);
  static ParamPoly kappa2(const ParamPoly& lambda) {
    return lambda * (3 * lambda - ParamPoly(1));
  }
};

// The A2 Hamiltonian, second degree in p, over h5. Words are written with
// q-factors left of p-factors.
NCPoly h_a2_pq(const ModelParams& p);

// The cubic A2 integral over h5.
NCPoly k_a2_pq(const ModelParams& p);

// The same two operators as elements of U(gl(3)); no explicit nu.
NCPoly h_a2_J(const ModelParams& p);
NCPoly k_a2_J(const ModelParams& p);

// The G2 Hamiltonian over h5 with generators read as (pu, pv, qu, qv).
NCPoly h_g2_pq(const ModelParams& p);

// One (tau, mu)-block of the commutator decomposition: the J/A-superposition
// D_m together with the monomial tau^a mu^b it multiplies.
struct CommutatorBlock {
  std::string name;  // "D1".."D12"
  unsigned tau_deg;
  unsigned mu_deg;
  NCPoly rhs;  // D_m expanded as words, artifacts multiplied on the right
};

const std::vector<CommutatorBlock>& commutator_blocks();

// Sum of all blocks times their tau/mu monomials.
NCPoly commutator_block_sum();

}  // namespace weyl
