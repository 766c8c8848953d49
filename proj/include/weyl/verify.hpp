#pragma once

#include <string>
#include <vector>

#include "weyl/fockrep.hpp"
#include "weyl/models.hpp"

namespace weyl {

struct CheckReport {
  std::string name;
  bool pass = false;
  std::string residual;  // canonical text of the residual, empty on pass
  double millis = 0.0;
};

// Top-level structural checks. Each optionally takes a perturbation used by
// the negative-control fixtures; the default runs the real check.

// [h_a2_pq, k_a2_pq] = 0 over h5, all parameters symbolic.
CheckReport check_pq_pair_commutes(const NCPoly* perturb_h = nullptr);

// All nine artifact images vanish under the gl(3) -> U(h5) realization.
CheckReport check_artifacts_vanish(const NCPoly* perturb_a4 = nullptr);

// [h_a2_J, k_a2_J] equals the tabulated block superposition blockwise, and
// the abstract commutator itself is nonzero.
CheckReport check_block_decomposition();

// substitute(h_a2_J) == normal_order(h_a2_pq), and the same for k.
CheckReport check_substitution_consistency();

// [A1, A2] + J8 A1 + J7 A2 = 0.
CheckReport check_artifact_closure_example(bool flip_sign = false);

// Classical {h, k} is nonzero; antisymmetry and {h, h} = 0 hold.
CheckReport check_poisson_noncommutativity();

// h_g2 preserves the (1,2)-triangular space of bound n.
CheckReport check_g2_invariance(int n, const Rational& lambda,
                                const RepConfig& rep);

// The 36 gl(3) brackets hold under the realization, and the bracket table
// matches the structure-constant list.
CheckReport check_homomorphism();

std::vector<CheckReport> run_all_checks();

}  // namespace weyl
