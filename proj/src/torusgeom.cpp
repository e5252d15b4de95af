#include "sepaut/torusgeom.hpp"

#include "sepaut/quasitorus.hpp"

#include <stdexcept>

namespace sepaut {

namespace {

bool in_kernel(IntMatrix const& D, IntVector const& a) {
  for (auto const& value : D * a)
    if (value != 0) return false;
  return true;
}

}  // namespace

std::vector<IntVector> TorusGenerators::all() const {
  std::vector<IntVector> out{t0};
  for (auto const& entry : tij) out.push_back(entry.weights);
  return out;
}

TorusGenerators torus_generators(CanonicalForm const& form) {
  CharacterData const data = character_matrix(form);
  std::size_t const n = form.variable_count();

  BigInt product = 1;
  for (auto const& block : form.mixed_blocks) product *= block.total_degree();
  for (auto const& block : form.pure_blocks) product *= block.exponent;

  TorusGenerators out;
  out.t0.reserve(n);
  std::size_t offset = 0;
  for (std::size_t i = 0; i < form.mixed_blocks.size(); ++i) {
    auto const& block = form.mixed_blocks[i];
    BigInt const weight = product / block.total_degree();
    for (std::size_t j = 0; j < block.variables.size(); ++j) out.t0.push_back(weight);
    for (std::size_t j = 1; j < block.variables.size(); ++j) {
      IntVector w(n);
      w[offset] = block.exponents[j];
      w[offset + j] = -block.exponents[0];
      out.tij.push_back({i, j, std::move(w)});
    }
    offset += block.variables.size();
  }
  for (auto const& block : form.pure_blocks) {
    BigInt const weight = product / block.exponent;
    for (std::size_t k = 0; k < block.variables.size(); ++k) out.t0.push_back(weight);
  }

  for (auto const& a : out.all()) {
    if (!in_kernel(data.difference_matrix, a)) {
      throw std::logic_error("torus generator is not a cocharacter of H");
    }
  }
  return out;
}

ConeDescription weight_cone(CanonicalForm const& form) {
  return weight_cone(form, kernel_basis(character_matrix(form).difference_matrix));
}

ConeDescription weight_cone(CanonicalForm const& form, std::vector<IntVector> const& basis) {
  CharacterData const data = character_matrix(form);
  IntMatrix const& D = data.difference_matrix;
  std::size_t const n = D.cols();
  std::size_t const d = n - rank(D);
  if (basis.size() != d) throw std::invalid_argument("basis size differs from dim ker(D)");
  for (auto const& b : basis) {
    if (b.size() != n || !in_kernel(D, b)) {
      throw std::invalid_argument("basis vector outside ker(D)");
    }
  }
  IntMatrix const B = IntMatrix::from_rows(basis, n);
  if (rank(B) != d) throw std::invalid_argument("basis vectors are linearly dependent");

  ConeDescription cone;
  cone.basis = basis;
  cone.weights.assign(n, IntVector(d));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t k = 0; k < d; ++k) cone.weights[v][k] = B(k, v);

  // t0 = sum_k u_k basis_k; clear denominators for non-saturated bases.
  IntVector const t0 = torus_generators(form).t0;
  std::vector<Rational> const u = solve_rational(B.transpose(), t0);
  BigInt scale = 1;
  for (auto const& x : u) {
    BigInt const den = boost::multiprecision::denominator(x);
    scale = scale / boost::multiprecision::gcd(scale, den) * den;
  }
  cone.witness.reserve(d);
  for (auto const& x : u) {
    Rational const scaled = x * Rational(scale);
    cone.witness.push_back(boost::multiprecision::numerator(scaled));
  }
  cone.pointed = witness_is_valid(cone);
  return cone;
}

bool witness_is_valid(ConeDescription const& cone) {
  if (cone.weights.empty()) return false;
  for (auto const& w : cone.weights) {
    if (w.size() != cone.witness.size() || dot(cone.witness, w) <= 0) return false;
  }
  return true;
}

}  // namespace sepaut
