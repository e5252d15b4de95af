#include "sepaut/rigidity.hpp"

namespace sepaut {

namespace {

struct Evaluation {
  std::optional<Rational> threshold;
  RigidityVerdict verdict = RigidityVerdict::inapplicable;
};

Evaluation evaluate(Rational const& sum, long long monomials) {
  if (monomials <= 2) return {};
  Rational const threshold(1, monomials - 2);
  return {threshold,
          sum <= threshold ? RigidityVerdict::certified_rigid : RigidityVerdict::inconclusive};
}

}  // namespace

std::string_view to_string(RigidityVerdict verdict) {
  switch (verdict) {
    case RigidityVerdict::certified_rigid:
      return "certified_rigid";
    case RigidityVerdict::inconclusive:
      return "inconclusive";
    case RigidityVerdict::inapplicable:
      return "inapplicable";
  }
  return "unknown";
}

RigidityCertificate kikiwa_certificate(CanonicalForm const& form) {
  RigidityCertificate cert;
  for (Exponent e : form.variable_exponents()) cert.reciprocal_sum += Rational(1, e);
  auto const main = evaluate(cert.reciprocal_sum,
                             static_cast<long long>(form.monomial_count()));
  cert.threshold = main.threshold;
  cert.verdict = main.verdict;
  cert.boundary = cert.threshold && cert.reciprocal_sum == *cert.threshold;

  for (auto const& block : form.mixed_blocks)
    for (Exponent e : block.exponents) cert.literal_sum += Rational(1, e);
  for (auto const& block : form.pure_blocks) cert.literal_sum += Rational(1, block.exponent);
  auto const literal = evaluate(
      cert.literal_sum,
      static_cast<long long>(form.mixed_blocks.size() + form.pure_blocks.size()));
  cert.literal_threshold = literal.threshold;
  cert.literal_verdict = literal.verdict;
  return cert;
}

std::string RigidityCertificate::note() const {
  std::string out =
      "sum runs over every variable; bound is 1/(M-2) with M the number of monomials";
  if (boundary) out += "; equality case (non-strict bound)";
  out += "; per-exponent-group reading: sum " + to_string(literal_sum) + ", bound ";
  out += literal_threshold ? to_string(*literal_threshold) : std::string("undefined");
  out += ", " + std::string(to_string(literal_verdict));
  return out;
}

}  // namespace sepaut
