#pragma once

#include <vector>

#include "weyl/ncalg.hpp"

namespace weyl {

// Heisenberg algebra h5. Normal order qx < qy < px < py; the central
// element is identified with the empty word, so [px, qx] = 1 produces a
// plain scalar and U(h5) mod (I - 1) is the Weyl algebra.
const AlgebraSpec& h5_spec();

// gl(3) with generators J0..J8; normal order J8 < J7 < ... < J0.
const AlgebraSpec& gl3_spec();

// One structure-constant relation [J_i, J_j] = c * J_k (i < j).
struct StructureConstant {
  int i, j, k;
  long c;
};

// The nonvanishing gl(3) structure constants, transcribed independently of
// the bracket table so the two can be cross-checked entry by entry.
const std::vector<StructureConstant>& gl3_structure_constants();
void check_gl3_table_against_structure_constants();

// J1..J8, J0 as elements of U(h5) with symbolic nu.
const Realization& gl3_realization_in_h5();

// The nine bilinear artifacts A1..A9, stored in their canonical form.
struct ArtifactSet {
  std::vector<NCPoly> items;  // items[i] is A_{i+1}
};
const ArtifactSet& artifacts();

}  // namespace weyl
