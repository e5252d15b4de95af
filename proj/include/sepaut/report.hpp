#pragma once

#include "sepaut/autassembly.hpp"
#include "sepaut/torusgeom.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sepaut {

struct OracleResult {
  std::string oracle;
  bool ran = false;
  bool passed = false;
  std::string detail;
};

// Certifies every emitted generator with verify_generator: P(F) generators,
// H torsion generators, cocharacters discretized at small orders, and the
// conjugates of torsion generators under P(F).
OracleResult run_generator_oracle(AutGroupDescription const& aut,
                                  TorusGenerators const& tori);

// Brute-force |P(F)| against the closed formula. Throws TooManyVariablesError.
OracleResult run_permutation_oracle(AutGroupDescription const& aut);

// Enumerated torsion count mod N against the divisor formula. Throws
// EnumerationTooLargeError.
OracleResult run_torsion_oracle(AutGroupDescription const& aut, std::uint64_t modulus);

// Modulus used by the torsion oracle when none is given: the largest torsion
// divisor, or 2 when H is connected.
std::uint64_t default_torsion_modulus(AutGroupDescription const& aut);

struct AnalysisReport {
  std::string input;
  AutGroupDescription aut;
  TorusGenerators tori;
  ConeDescription cone;
  std::vector<OracleResult> verification;
};

// Generator certification always runs; with full_verification the brute-force
// permutation and torsion oracles run too, or are recorded as skipped when
// their guards fail.
AnalysisReport analyze(CanonicalForm const& form, std::string input, bool full_verification);

// Schema-stable JSON: big integers and rationals as decimal strings.
nlohmann::ordered_json to_json(AnalysisReport const& report);

std::string to_text(AnalysisReport const& report, bool unicode);

}  // namespace sepaut
