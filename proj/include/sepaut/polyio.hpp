#pragma once

#include "sepaut/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sepaut {

using Exponent = std::int64_t;

// Variable names compared with digit runs taken numerically, so Y2 < Y10.
struct NaturalLess {
  bool operator()(std::string const& lhs, std::string const& rhs) const;
};

using Monomial = std::map<std::string, Exponent, NaturalLess>;

struct Term {
  Rational coefficient;
  Monomial monomial;

  bool operator==(Term const&) const = default;
};

// Sparse polynomial with exact rational coefficients. Terms are kept sorted by
// monomial, with like terms combined and zero terms removed.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Term> terms);

  std::vector<Term> const& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(Polynomial const&) const = default;

 private:
  std::vector<Term> terms_;
};

struct MixedBlock {
  std::vector<std::string> variables;
  std::vector<Exponent> exponents;  // descending

  Exponent total_degree() const;
  bool operator==(MixedBlock const&) const = default;
};

struct PureBlock {
  Exponent exponent = 1;
  std::vector<std::string> variables;

  bool operator==(PureBlock const&) const = default;
};

// A polynomial with separated variables, rewritten as
//   X_11^l_11 ... X_1n_1^l_1n_1 + ... + Y_11^q_1 + ... + Y_sk_s^q_s
// with n_i > 1 and q_1 > ... > q_s. Coefficients are normalized to one.
struct CanonicalForm {
  std::vector<MixedBlock> mixed_blocks;
  std::vector<PureBlock> pure_blocks;
  // Set when nonunit coefficients were absorbed by a diagonal rescaling.
  bool scaling_absorbed = false;

  // Mixed variables block by block, then pure variables.
  std::vector<std::string> var_order() const;
  // Exponent of every variable, in var_order.
  std::vector<Exponent> variable_exponents() const;

  std::size_t variable_count() const;  // n
  std::size_t monomial_count() const;  // M = m + sum k_i

  bool operator==(CanonicalForm const&) const = default;
};

Polynomial parse_polynomial(std::string_view text);

CanonicalForm recognize_separated(Polynomial const& polynomial);

// parse_polynomial followed by recognize_separated.
CanonicalForm parse_canonical(std::string_view text);

// Unit-coefficient rendering in canonical monomial order. Re-parsing the
// output yields the same canonical form (up to the scaling flag).
std::string render(CanonicalForm const& form);

std::string render(Polynomial const& polynomial);

}  // namespace sepaut
