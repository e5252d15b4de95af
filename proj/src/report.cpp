#include "sepaut/report.hpp"

#include "sepaut/errors.hpp"

#include <sstream>

namespace sepaut {

namespace {

using Json = nlohmann::ordered_json;

Json strings(IntVector const& values) {
  Json out = Json::array();
  for (auto const& v : values) out.push_back(v.str());
  return out;
}

Json string_rows(std::vector<IntVector> const& rows) {
  Json out = Json::array();
  for (auto const& row : rows) out.push_back(strings(row));
  return out;
}

Json optional_rational(std::optional<Rational> const& value) {
  return value ? Json(to_string(*value)) : Json(nullptr);
}

std::string join(std::vector<std::string> const& parts, std::string const& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string vector_text(IntVector const& v) {
  std::vector<std::string> parts;
  for (auto const& x : v) parts.push_back(x.str());
  return "(" + join(parts, ", ") + ")";
}

}  // namespace

OracleResult run_generator_oracle(AutGroupDescription const& aut,
                                  TorusGenerators const& tori) {
  CanonicalForm const& form = aut.form;
  std::size_t const n = form.variable_count();
  CharacterData const data = character_matrix(form);
  OracleResult result{"generators", true, true, {}};
  std::size_t certified = 0;
  auto check = [&](std::string const& what, MonomialAutomorphism const& g) {
    if (!result.passed) return;
    try {
      verify_generator(form, g);
      ++certified;
    } catch (NotAnAutomorphismError const& e) {
      result.passed = false;
      result.detail = what + ": " + e.what();
    }
  };

  std::vector<std::string> const names = form.var_order();
  for (auto const& tau : aut.perm.generators) {
    check("permutation " + cycle_notation(tau, names), MonomialAutomorphism::from_permutation(tau));
  }
  for (auto const& t : aut.quasitorus.torsion_generators) {
    check("torsion generator of order " + t.order.str(), MonomialAutomorphism::from_torsion(n, t));
    for (auto const& tau : aut.perm.generators) {
      TorsionGenerator const c = conjugate(tau, t);
      if (!preserves_zero_set(data, c.order, c.exponents)) {
        result.passed = false;
        result.detail = "conjugate of a torsion generator leaves H";
      }
      check("conjugated torsion generator", MonomialAutomorphism::from_torsion(n, c));
    }
  }
  std::vector<IntVector> cocharacters = aut.quasitorus.cocharacter_basis;
  for (auto const& a : tori.all()) cocharacters.push_back(a);
  for (auto const& a : cocharacters) {
    for (int order = 2; order <= 7; ++order) {
      IntVector e = a;
      for (auto& x : e) x = mod_floor(x, order);
      check("cocharacter " + vector_text(a) + " at order " + std::to_string(order),
            MonomialAutomorphism::from_torsion(n, TorsionGenerator{order, e}));
    }
  }
  if (result.passed) result.detail = std::to_string(certified) + " generators certified";
  return result;
}

OracleResult run_permutation_oracle(AutGroupDescription const& aut) {
  BigInt const brute = brute_force_perm_order(aut.form);
  OracleResult result{"perms", true, brute == aut.perm.order, {}};
  result.detail = "brute force " + brute.str() + (result.passed ? " = " : " != ") +
                  aut.perm.order.str() + " closed form";
  return result;
}

OracleResult run_torsion_oracle(AutGroupDescription const& aut, std::uint64_t modulus) {
  CharacterData const data = character_matrix(aut.form);
  BigInt const counted = count_torsion_points_mod(data, modulus);
  BigInt const expected = torsion_count_formula(data, modulus);
  OracleResult result{"torsion", true, counted == expected, {}};
  result.detail = "mod " + std::to_string(modulus) + ": enumerated " + counted.str() +
                  (result.passed ? " = " : " != ") + expected.str() + " from divisors";
  return result;
}

std::uint64_t default_torsion_modulus(AutGroupDescription const& aut) {
  auto const& torsion = aut.quasitorus.torsion;
  if (torsion.empty() || torsion.back() > kMaxTorsionEnumeration) return 2;
  return static_cast<std::uint64_t>(torsion.back());
}

AnalysisReport analyze(CanonicalForm const& form, std::string input, bool full_verification) {
  AnalysisReport report;
  report.input = std::move(input);
  report.aut = aut_group(form);
  report.tori = torus_generators(form);
  report.cone = weight_cone(form);
  report.verification.push_back(run_generator_oracle(report.aut, report.tori));
  if (full_verification) {
    try {
      report.verification.push_back(run_permutation_oracle(report.aut));
    } catch (TooManyVariablesError const& e) {
      report.verification.push_back({"perms", false, false, std::string("skipped: ") + e.what()});
    }
    try {
      report.verification.push_back(
          run_torsion_oracle(report.aut, default_torsion_modulus(report.aut)));
    } catch (EnumerationTooLargeError const& e) {
      report.verification.push_back(
          {"torsion", false, false, std::string("skipped: ") + e.what()});
    }
  }
  return report;
}

Json to_json(AnalysisReport const& report) {
  AutGroupDescription const& aut = report.aut;
  CanonicalForm const& form = aut.form;
  std::vector<std::string> const names = form.var_order();
  Json out;
  out["input"] = report.input;

  Json cf;
  cf["polynomial"] = render(form);
  cf["var_order"] = names;
  Json mixed = Json::array();
  for (auto const& block : form.mixed_blocks) {
    mixed.push_back(Json{{"variables", block.variables}, {"exponents", block.exponents}});
  }
  cf["mixed_blocks"] = mixed;
  Json pure = Json::array();
  for (auto const& block : form.pure_blocks) {
    pure.push_back(Json{{"exponent", block.exponent}, {"variables", block.variables}});
  }
  cf["pure_blocks"] = pure;
  cf["n"] = form.variable_count();
  cf["M"] = form.monomial_count();
  cf["scaling_absorbed"] = form.scaling_absorbed;
  out["canonical_form"] = cf;

  RigidityCertificate const& rc = aut.rigidity;
  out["rigidity"] = Json{
      {"reciprocal_sum", to_string(rc.reciprocal_sum)},
      {"threshold", optional_rational(rc.threshold)},
      {"verdict", to_string(rc.verdict)},
      {"boundary", rc.boundary},
      {"literal_reading",
       Json{{"sum", to_string(rc.literal_sum)},
            {"threshold", optional_rational(rc.literal_threshold)},
            {"verdict", to_string(rc.literal_verdict)}}},
      {"note", rc.note()}};

  QuasitorusDescription const& qt = aut.quasitorus;
  Json torsion_generators = Json::array();
  for (auto const& t : qt.torsion_generators) {
    torsion_generators.push_back(Json{{"order", t.order.str()}, {"exponents", strings(t.exponents)}});
  }
  out["quasitorus"] = Json{{"torus_rank", qt.torus_rank},
                           {"torsion", strings(qt.torsion)},
                           {"cocharacter_basis", string_rows(qt.cocharacter_basis)},
                           {"torsion_generators", torsion_generators}};

  PermGroupDescription const& pg = aut.perm;
  Json pure_factors = Json::array();
  for (auto const& f : pg.pure_factors) {
    std::vector<std::string> vars;
    for (std::size_t v : f.variables) vars.push_back(names[v]);
    pure_factors.push_back(Json{{"exponent", f.exponent}, {"variables", vars}});
  }
  Json classes = Json::array();
  for (auto const& c : pg.mixed_classes) {
    Json blocks = Json::array();
    for (std::size_t b : c.blocks) blocks.push_back(form.mixed_blocks[b].variables);
    classes.push_back(Json{{"exponents", c.exponents},
                           {"blocks", blocks},
                           {"run_multiplicities", c.run_multiplicities}});
  }
  Json generators = Json::array();
  for (auto const& g : pg.generators) generators.push_back(cycle_notation(g, names));
  out["permutation_group"] = Json{{"order", pg.order.str()},
                                  {"structure", pg.structure},
                                  {"pure_factors", pure_factors},
                                  {"mixed_classes", classes},
                                  {"generators", generators}};

  Json action = Json::array();
  for (auto const& tau : aut.action) {
    action.push_back(Json{{"generator", cycle_notation(tau, names)},
                          {"coordinate_images", tau.images}});
  }
  out["aut"] = Json{{"structure", aut.structure},
                    {"structure_ascii", ascii_structure(aut.structure)},
                    {"conditional", aut.conditional},
                    {"action", action}};

  Json tij = Json::array();
  for (auto const& entry : report.tori.tij) {
    tij.push_back(Json{{"block", entry.block + 1},
                       {"index", entry.index + 1},
                       {"weights", strings(entry.weights)}});
  }
  out["cone"] = Json{{"torus_generators", Json{{"t0", strings(report.tori.t0)}, {"tij", tij}}},
                     {"basis", string_rows(report.cone.basis)},
                     {"weights", string_rows(report.cone.weights)},
                     {"pointed", report.cone.pointed},
                     {"witness", strings(report.cone.witness)}};

  out["irreducible"] = to_string(aut.irreducible);

  Json verification = Json::array();
  for (auto const& r : report.verification) {
    verification.push_back(
        Json{{"oracle", r.oracle}, {"ran", r.ran}, {"passed", r.passed}, {"detail", r.detail}});
  }
  out["verification"] = verification;
  return out;
}

std::string to_text(AnalysisReport const& report, bool unicode) {
  AutGroupDescription const& aut = report.aut;
  CanonicalForm const& form = aut.form;
  std::vector<std::string> const names = form.var_order();
  auto symbols = [&](std::string const& s) { return unicode ? s : ascii_structure(s); };
  std::ostringstream os;

  os << "input:            " << report.input << '\n';
  os << "canonical form:   " << render(form) << '\n';
  os << "                  n = " << form.variable_count() << ", M = " << form.monomial_count()
     << ", mixed blocks = " << form.mixed_blocks.size()
     << ", pure blocks = " << form.pure_blocks.size() << '\n';
  if (form.scaling_absorbed) {
    os << "                  nonunit coefficients absorbed by a diagonal rescaling\n";
  }

  os << "\nAut(X) " << (unicode ? "≅" : "=") << " " << symbols(aut.structure);
  if (aut.conditional) os << "   [conditional on rigidity]";
  os << '\n';
  os << "irreducible:      " << to_string(aut.irreducible) << '\n';

  RigidityCertificate const& rc = aut.rigidity;
  os << "\nrigidity:         sum 1/e = " << to_string(rc.reciprocal_sum);
  if (rc.threshold) os << (rc.reciprocal_sum <= *rc.threshold ? " <= " : " > ") << to_string(*rc.threshold);
  os << "  -> " << to_string(rc.verdict) << '\n';
  os << "                  " << rc.note() << '\n';

  PermGroupDescription const& pg = aut.perm;
  os << "\nP(F):             " << symbols(pg.structure) << ", order " << pg.order << '\n';
  for (auto const& g : pg.generators) os << "                  " << cycle_notation(g, names) << '\n';

  QuasitorusDescription const& qt = aut.quasitorus;
  os << "\nH:                torus rank " << qt.torus_rank << ", torsion";
  if (qt.torsion.empty()) os << " none";
  for (auto const& d : qt.torsion) os << " Z/" << d;
  os << '\n';
  for (auto const& a : qt.cocharacter_basis) os << "  cocharacter     " << vector_text(a) << '\n';
  for (auto const& t : qt.torsion_generators) {
    os << "  order " << t.order << "        zeta^" << vector_text(t.exponents) << '\n';
  }

  os << "\nT0:               " << vector_text(report.tori.t0) << '\n';
  for (auto const& entry : report.tori.tij) {
    os << "T(" << entry.block + 1 << "," << entry.index + 1 << "):           " << vector_text(entry.weights) << '\n';
  }
  os << "weight cone:      " << (report.cone.pointed ? "pointed" : "not certified pointed")
     << ", witness " << vector_text(report.cone.witness) << '\n';

  os << "\nverification:\n";
  for (auto const& r : report.verification) {
    os << "  " << r.oracle << ": " << (!r.ran ? "skipped" : r.passed ? "pass" : "FAIL") << " ("
       << r.detail << ")\n";
  }
  os << "var order:        " << join(names, ", ") << '\n';
  return os.str();
}

}  // namespace sepaut
