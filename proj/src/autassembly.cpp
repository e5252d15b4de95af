#include "sepaut/autassembly.hpp"

#include "sepaut/errors.hpp"

#include <map>
#include <stdexcept>

namespace sepaut {

namespace {

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
  std::size_t pos = 0;
  while ((pos = text.find(from, pos)) != std::string::npos) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
  return text;
}

std::string describe_monomial(IntVector const& chi, std::vector<std::string> const& names) {
  std::string out;
  for (std::size_t v = 0; v < chi.size(); ++v) {
    if (chi[v] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[v];
    if (chi[v] != 1) out += "^" + chi[v].str();
  }
  return out;
}

}  // namespace

std::string_view to_string(Irreducibility verdict) {
  return verdict == Irreducibility::irreducible ? "irreducible" : "undetermined";
}

Irreducibility irreducibility_verdict(CanonicalForm const& form) {
  return form.monomial_count() >= 3 ? Irreducibility::irreducible : Irreducibility::undetermined;
}

std::string structure_string(std::string const& perm_structure, std::size_t torus_rank,
                             IntVector const& torsion) {
  std::vector<std::string> factors;
  for (std::size_t i = 0; i < torsion.size();) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    factors.push_back("(Z/" + torsion[i].str() + ")^" + std::to_string(j - i));
    i = j;
  }
  factors.push_back("T^" + std::to_string(torus_rank));
  bool const product = perm_structure.find(" × ") != std::string::npos;
  std::string out = (product ? "(" + perm_structure + ")" : perm_structure) + " ⋉ (";
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k > 0) out += " × ";
    out += factors[k];
  }
  return out + ")";
}

std::string ascii_structure(std::string const& structure) {
  return replace_all(replace_all(structure, "⋉", "x|"), "×", "x");
}

AutGroupDescription aut_group(CanonicalForm const& form) {
  CharacterData const data = character_matrix(form);
  AutGroupDescription out;
  out.form = form;
  out.quasitorus = quasitorus_structure(data);
  out.perm = permutation_group(form);
  out.rigidity = kikiwa_certificate(form);
  out.action = out.perm.generators;
  out.structure = structure_string(out.perm.structure, out.quasitorus.torus_rank,
                                   out.quasitorus.torsion);
  out.conditional = out.rigidity.verdict != RigidityVerdict::certified_rigid;
  out.irreducible = irreducibility_verdict(form);
  return out;
}

CanonicalForm fermat_form(std::size_t n, Exponent alpha) {
  PureBlock block{alpha, {}};
  for (std::size_t k = 1; k <= n; ++k) block.variables.push_back("Y" + std::to_string(k));
  CanonicalForm form;
  form.pure_blocks.push_back(std::move(block));
  return form;
}

AutGroupDescription fermat_aut(std::size_t n, Exponent alpha) {
  if (n < 2) throw std::invalid_argument("Fermat form needs at least two variables");
  if (alpha < 2) throw std::invalid_argument("Fermat exponent must be at least 2");
  return aut_group(fermat_form(n, alpha));
}

MonomialAutomorphism MonomialAutomorphism::from_permutation(Permutation perm) {
  std::size_t const n = perm.size();
  return MonomialAutomorphism{std::move(perm), 1, IntVector(n)};
}

MonomialAutomorphism MonomialAutomorphism::from_torsion(std::size_t n,
                                                        TorsionGenerator const& t) {
  return MonomialAutomorphism{Permutation::identity(n), t.order, t.exponents};
}

BigInt verify_generator(CanonicalForm const& form, MonomialAutomorphism const& g) {
  std::size_t const n = form.variable_count();
  if (g.perm.size() != n || g.exponents.size() != n) {
    throw std::invalid_argument("automorphism acts on the wrong number of variables");
  }
  if (g.order < 1) throw std::invalid_argument("root-of-unity order must be positive");
  std::vector<bool> hit(n, false);
  for (std::size_t v = 0; v < n; ++v) {
    if (g.perm(v) >= n || hit[g.perm(v)]) throw std::invalid_argument("not a permutation");
    hit[g.perm(v)] = true;
  }

  std::vector<std::string> const names = form.var_order();
  std::vector<IntVector> const characters = monomial_characters(form);
  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < characters.size(); ++i) index.emplace(characters[i], i);

  BigInt common = -1;
  std::size_t common_from = 0;
  for (std::size_t i = 0; i < characters.size(); ++i) {
    IntVector const& chi = characters[i];
    IntVector moved(n);
    BigInt residue = 0;
    for (std::size_t v = 0; v < n; ++v) {
      moved[g.perm(v)] = chi[v];
      residue += chi[v] * g.exponents[g.perm(v)];
    }
    if (!index.contains(moved)) {
      throw NotAnAutomorphismError("monomial " + describe_monomial(chi, names) + " maps to " +
                                   describe_monomial(moved, names) +
                                   ", which is not a monomial of F");
    }
    residue = mod_floor(residue, g.order);
    if (common < 0) {
      common = residue;
      common_from = i;
    } else if (residue != common) {
      throw NotAnAutomorphismError(
          "monomial " + describe_monomial(chi, names) + " is scaled by zeta_" + g.order.str() +
          "^" + residue.str() + " but monomial " +
          describe_monomial(characters[common_from], names) + " by zeta_" + g.order.str() + "^" +
          common.str());
    }
  }
  return common < 0 ? BigInt(0) : common;
}

TorsionGenerator conjugate(Permutation const& tau, TorsionGenerator const& h) {
  if (tau.size() != h.exponents.size()) throw std::invalid_argument("size mismatch");
  TorsionGenerator out{h.order, IntVector(h.exponents.size())};
  for (std::size_t v = 0; v < tau.size(); ++v) out.exponents[tau(v)] = h.exponents[v];
  return out;
}

}  // namespace sepaut
