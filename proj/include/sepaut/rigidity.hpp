#pragma once

#include "sepaut/numeric.hpp"
#include "sepaut/polyio.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace sepaut {

enum class RigidityVerdict { certified_rigid, inconclusive, inapplicable };

std::string_view to_string(RigidityVerdict verdict);

// Sufficient rigidity criterion: sum over all variables of 1/exponent is at
// most 1/(M - 2), where M is the number of monomials.
struct RigidityCertificate {
  Rational reciprocal_sum;
  std::optional<Rational> threshold;  // absent when M <= 2
  RigidityVerdict verdict = RigidityVerdict::inapplicable;
  bool boundary = false;  // reciprocal_sum == threshold

  // Same inequality read with one term per distinct exponent group and the
  // bound 1/(m + s - 2), m mixed monomials and s pure exponent groups.
  Rational literal_sum;
  std::optional<Rational> literal_threshold;
  RigidityVerdict literal_verdict = RigidityVerdict::inapplicable;

  std::string note() const;
};

RigidityCertificate kikiwa_certificate(CanonicalForm const& form);

}  // namespace sepaut
