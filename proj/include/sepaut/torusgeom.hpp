#pragma once

#include "sepaut/intlat.hpp"
#include "sepaut/polyio.hpp"

#include <cstddef>
#include <vector>

namespace sepaut {

// One-parameter subgroups acting on the hypersurface, as weight vectors over
// var_order.
struct TorusGenerators {
  // Weight P/L_i on the variables of mixed block i and P/q_i on pure block i,
  // where P = L_1...L_m q_1...q_s.
  IntVector t0;
  // For mixed block i and j >= 2: weight l_ij on X_i1, -l_i1 on X_ij.
  struct Entry {
    std::size_t block;
    std::size_t index;  // j, zero-based
    IntVector weights;
  };
  std::vector<Entry> tij;

  // t0 followed by every tij.
  std::vector<IntVector> all() const;
};

// Throws SingleMonomialError when M < 2, std::logic_error if a generator
// falls outside ker(D).
TorusGenerators torus_generators(CanonicalForm const& form);

// Weights of the coordinate functions in a chosen basis of ker(D), with a
// constructive pointedness witness derived from t0.
struct ConeDescription {
  std::vector<IntVector> basis;
  std::vector<IntVector> weights;  // weights[v][k] = basis[k][v]
  bool pointed = false;
  IntVector witness;  // <witness, weights[v]> > 0 for all v when pointed
};

ConeDescription weight_cone(CanonicalForm const& form);

// Same, over a caller-supplied basis of ker(D) (rational span must equal
// ker(D); throws std::invalid_argument otherwise).
ConeDescription weight_cone(CanonicalForm const& form, std::vector<IntVector> const& basis);

// Checks the witness by n inner products.
bool witness_is_valid(ConeDescription const& cone);

}  // namespace sepaut
