#include "sepaut/quasitorus.hpp"

#include "sepaut/errors.hpp"

#include <string>

namespace sepaut {

std::vector<IntVector> monomial_characters(CanonicalForm const& form) {
  std::size_t const n = form.variable_count();
  std::vector<IntVector> characters;
  std::size_t index = 0;
  for (auto const& block : form.mixed_blocks) {
    IntVector chi(n);
    for (Exponent e : block.exponents) chi[index++] = e;
    characters.push_back(std::move(chi));
  }
  for (auto const& block : form.pure_blocks) {
    for (std::size_t k = 0; k < block.variables.size(); ++k) {
      IntVector chi(n);
      chi[index++] = block.exponent;
      characters.push_back(std::move(chi));
    }
  }
  return characters;
}

CharacterData character_matrix(CanonicalForm const& form, std::size_t base) {
  CharacterData data;
  data.characters = monomial_characters(form);
  std::size_t const M = data.characters.size();
  if (M < 2) throw SingleMonomialError();
  if (base >= M) throw std::out_of_range("base monomial index out of range");
  data.base = base;
  std::size_t const n = form.variable_count();
  data.difference_matrix = IntMatrix(M - 1, n);
  std::size_t row = 0;
  for (std::size_t i = 0; i < M; ++i) {
    if (i == base) continue;
    for (std::size_t v = 0; v < n; ++v) {
      data.difference_matrix(row, v) = data.characters[i][v] - data.characters[base][v];
    }
    ++row;
  }
  return data;
}

QuasitorusDescription quasitorus_structure(CharacterData const& data) {
  IntMatrix const& D = data.difference_matrix;
  SNFResult const snf = smith_normal_form(D);
  QuasitorusDescription out;
  out.torus_rank = D.cols() - snf.rank();
  for (std::size_t k = 0; k < snf.rank(); ++k) {
    BigInt const& d = snf.divisors[k];
    if (d == 1) continue;
    out.torsion.push_back(d);
    // x = V y with d_k y_k integral: y = e_k / d_k.
    IntVector e = snf.V.col(k);
    for (auto& value : e) value = mod_floor(value, d);
    out.torsion_generators.push_back(TorsionGenerator{d, std::move(e)});
  }
  out.cocharacter_basis = kernel_basis(D);
  return out;
}

bool preserves_zero_set(CharacterData const& data, BigInt const& modulus,
                        IntVector const& exponents) {
  IntVector const image = data.difference_matrix * exponents;
  for (auto const& value : image) {
    if (value % modulus != 0) return false;
  }
  return true;
}

std::uint64_t count_torsion_points_mod(CharacterData const& data, std::uint64_t modulus) {
  if (modulus == 0) throw std::invalid_argument("modulus must be positive");
  IntMatrix const& D = data.difference_matrix;
  std::size_t const n = D.cols();
  std::size_t const rows = D.rows();

  std::uint64_t total = 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (total > kMaxTorsionEnumeration / modulus) {
      throw EnumerationTooLargeError("enumeration of (Z/" + std::to_string(modulus) + ")^" +
                                     std::to_string(n) + " exceeds " +
                                     std::to_string(kMaxTorsionEnumeration) + " points");
    }
    total *= modulus;
  }

  // Entries reduced mod N; residues updated incrementally along an odometer.
  std::vector<std::vector<std::uint64_t>> column(n, std::vector<std::uint64_t>(rows));
  BigInt const N = modulus;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t r = 0; r < rows; ++r)
      column[v][r] = static_cast<std::uint64_t>(mod_floor(D(r, v), N));

  std::vector<std::uint64_t> digits(n, 0);
  std::vector<std::uint64_t> residue(rows, 0);
  std::uint64_t count = 0;
  while (true) {
    bool zero = true;
    for (std::uint64_t r : residue) {
      if (r != 0) {
        zero = false;
        break;
      }
    }
    if (zero) ++count;

    // Incrementing a digit adds its column; wrapping N-1 -> 0 subtracts
    // (N-1) times it, which is the same residue.
    std::size_t v = 0;
    for (; v < n; ++v) {
      for (std::size_t r = 0; r < rows; ++r) residue[r] = (residue[r] + column[v][r]) % modulus;
      if (++digits[v] < modulus) break;
      digits[v] = 0;
    }
    if (v == n) break;
  }
  return count;
}

BigInt torsion_count_formula(CharacterData const& data, std::uint64_t modulus) {
  SNFResult const snf = smith_normal_form(data.difference_matrix);
  BigInt const N = modulus;
  BigInt result = boost::multiprecision::pow(N, static_cast<unsigned>(data.variable_count() -
                                                                     snf.rank()));
  for (auto const& d : snf.divisors) result *= boost::multiprecision::gcd(d, N);
  return result;
}

}  // namespace sepaut
