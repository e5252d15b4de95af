#pragma once

#include "sepaut/permgroup.hpp"
#include "sepaut/polyio.hpp"
#include "sepaut/quasitorus.hpp"
#include "sepaut/rigidity.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sepaut {

enum class Irreducibility { irreducible, undetermined };

std::string_view to_string(Irreducibility verdict);

// Irreducible for at least three monomials, undetermined otherwise.
Irreducibility irreducibility_verdict(CanonicalForm const& form);

// P(F) x| H. When `conditional` is set the rigidity certificate did not
// certify, so the group is only known to be a subgroup of Aut(X).
struct AutGroupDescription {
  CanonicalForm form;
  PermGroupDescription perm;
  QuasitorusDescription quasitorus;
  RigidityCertificate rigidity;
  // Coordinate permutation by which each P(F) generator conjugates H.
  std::vector<Permutation> action;
  std::string structure;  // e.g. "S3 ⋉ ((Z/10)^2 × T^2)"
  bool conditional = true;
  Irreducibility irreducible = Irreducibility::undetermined;
};

// Deterministic in (perm structure, torus rank, torsion list).
std::string structure_string(std::string const& perm_structure, std::size_t torus_rank,
                             IntVector const& torsion);

// Replaces the Unicode group symbols with "x|" and "x".
std::string ascii_structure(std::string const& structure);

// Throws SingleMonomialError when M < 2.
AutGroupDescription aut_group(CanonicalForm const& form);

// The canonical form of Y1^alpha + ... + Yn^alpha.
CanonicalForm fermat_form(std::size_t n, Exponent alpha);

// Requires n >= 2 and alpha >= 2 (std::invalid_argument otherwise).
AutGroupDescription fermat_aut(std::size_t n, Exponent alpha);

// x_v -> zeta_N^{e_{tau(v)}} x_{tau(v)}.
struct MonomialAutomorphism {
  Permutation perm;
  BigInt order = 1;
  IntVector exponents;

  static MonomialAutomorphism from_permutation(Permutation perm);
  static MonomialAutomorphism from_torsion(std::size_t n, TorsionGenerator const& t);
};

// Returns c in [0, N) with F o g = zeta_N^c F. Throws NotAnAutomorphismError
// naming the first mismatched monomial or violated congruence.
BigInt verify_generator(CanonicalForm const& form, MonomialAutomorphism const& g);

// tau h tau^{-1}: the diagonal element with exponent tau(v) <- e_v.
TorsionGenerator conjugate(Permutation const& tau, TorsionGenerator const& h);

}  // namespace sepaut
