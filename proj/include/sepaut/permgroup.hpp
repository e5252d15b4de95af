#pragma once

#include "sepaut/numeric.hpp"
#include "sepaut/polyio.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace sepaut {

// Permutation of variable indices (positions in var_order): v -> images[v].
struct Permutation {
  std::vector<std::size_t> images;

  static Permutation identity(std::size_t n);
  std::size_t size() const { return images.size(); }
  std::size_t operator()(std::size_t v) const { return images[v]; }
  // (this * other)(v) = this(other(v))
  Permutation compose(Permutation const& other) const;
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(Permutation const&) const = default;
  auto operator<=>(Permutation const&) const = default;
};

// Cycle notation over variable names; each cycle starts at its least name and
// cycles are ordered by that name. The identity renders as "()".
std::string cycle_notation(Permutation const& perm, std::vector<std::string> const& names);

struct PureFactor {
  Exponent exponent;
  std::vector<std::size_t> variables;  // S_k acts on these
};

// Mixed blocks sharing one exponent list. Each block contributes the inner
// factor W = prod_j S_{mult_j}; the class contributes W^c x| S_c.
struct MixedClass {
  std::vector<Exponent> exponents;
  std::vector<std::size_t> blocks;           // indices into mixed_blocks
  std::vector<std::size_t> run_multiplicities;  // equal-exponent run lengths

  BigInt inner_order() const;
};

struct PermGroupDescription {
  std::vector<PureFactor> pure_factors;
  std::vector<MixedClass> mixed_classes;
  BigInt order;
  std::vector<Permutation> generators;
  std::string structure;
};

PermGroupDescription permutation_group(CanonicalForm const& form);

// True when relabelling variables by perm maps the monomials of F onto the
// monomials of F with the same exponent vectors.
bool fixes_polynomial(CanonicalForm const& form, Permutation const& perm);

inline constexpr std::size_t kMaxBruteForceVariables = 8;

// Counts all permutations of the n variables fixing F. Throws
// TooManyVariablesError when n > kMaxBruteForceVariables.
BigInt brute_force_perm_order(CanonicalForm const& form);

}  // namespace sepaut
