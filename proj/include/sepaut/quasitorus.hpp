#pragma once

#include "sepaut/intlat.hpp"
#include "sepaut/polyio.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace sepaut {

// Exponent vectors of the monomials of a canonical form, mixed blocks first
// and then one monomial per pure variable, over var_order.
std::vector<IntVector> monomial_characters(CanonicalForm const& form);

struct CharacterData {
  std::vector<IntVector> characters;
  // Rows chi_i - chi_base for every i != base.
  IntMatrix difference_matrix;
  std::size_t base = 0;

  std::size_t variable_count() const { return difference_matrix.cols(); }
  std::size_t monomial_count() const { return characters.size(); }
};

// Throws SingleMonomialError when the form has fewer than two monomials.
CharacterData character_matrix(CanonicalForm const& form, std::size_t base = 0);

// The diagonal element x_v -> zeta_N^{e_v} x_v for a primitive N-th root of
// unity zeta_N.
struct TorsionGenerator {
  BigInt order;
  IntVector exponents;

  bool operator==(TorsionGenerator const&) const = default;
};

// H = diagonal maps preserving the zero set of F. Its character group is
// Z^torus_rank plus the direct sum of Z/d for d in torsion.
struct QuasitorusDescription {
  std::size_t torus_rank = 0;
  IntVector torsion;  // SNF divisors of D greater than one
  std::vector<IntVector> cocharacter_basis;
  std::vector<TorsionGenerator> torsion_generators;
};

QuasitorusDescription quasitorus_structure(CharacterData const& data);

// True when D e = 0 (mod N).
bool preserves_zero_set(CharacterData const& data, BigInt const& modulus,
                        IntVector const& exponents);

inline constexpr std::uint64_t kMaxTorsionEnumeration = 10'000'000;

// Exhaustive count of e in (Z/N)^n with D e = 0 (mod N). Throws
// EnumerationTooLargeError when N^n exceeds kMaxTorsionEnumeration.
std::uint64_t count_torsion_points_mod(CharacterData const& data, std::uint64_t modulus);

// N^(n - r) * prod_k gcd(d_k, N) over all SNF divisors d_k of D.
BigInt torsion_count_formula(CharacterData const& data, std::uint64_t modulus);

}  // namespace sepaut
