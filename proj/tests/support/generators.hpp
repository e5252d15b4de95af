#pragma once

// Seeded random instances shared by the property and acceptance suites.

#include "sepaut/intlat.hpp"
#include "sepaut/polyio.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace sepaut::testing {

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long long bound) {
  std::uniform_int_distribution<std::size_t> dim(1, max_dim);
  std::uniform_int_distribution<long long> entry(-bound, bound);
  std::size_t const rows = dim(rng);
  std::size_t const cols = dim(rng);
  IntMatrix m(rows, cols);
  // Occasionally sparse or rank-deficient.
  std::bernoulli_distribution sparse(0.2);
  bool const make_sparse = sparse(rng);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = (make_sparse && sparse(rng)) ? 0 : entry(rng);
  if (rows >= 2 && sparse(rng)) {
    for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = 2 * m(0, c) - m(rows - 2, c);
  }
  return m;
}

// Random d x d unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t d) {
  IntMatrix q = IntMatrix::identity(d);
  if (d < 2) {
    if (d == 1 && std::bernoulli_distribution(0.5)(rng)) q.negate_row(0);
    return q;
  }
  std::uniform_int_distribution<std::size_t> index(0, d - 1);
  std::uniform_int_distribution<long long> factor(-3, 3);
  for (int step = 0; step < 4 * static_cast<int>(d); ++step) {
    std::size_t const a = index(rng);
    std::size_t b = index(rng);
    if (a == b) b = (b + 1) % d;
    switch (step % 3) {
      case 0: q.add_row_multiple(a, b, factor(rng)); break;
      case 1: q.swap_rows(a, b); break;
      default: q.negate_row(a); break;
    }
  }
  return q;
}

// Text of a random separated polynomial with at least two monomials.
inline std::string random_separated_text(std::mt19937_64& rng, std::size_t max_vars,
                                         Exponent max_exponent, Exponent min_exponent = 1) {
  std::uniform_int_distribution<std::size_t> var_count(2, max_vars);
  std::uniform_int_distribution<Exponent> exponent(min_exponent, max_exponent);
  std::size_t const n = var_count(rng);
  std::vector<std::string> names;
  for (std::size_t v = 0; v < n; ++v) names.push_back("v" + std::to_string(v + 1));
  std::shuffle(names.begin(), names.end(), rng);

  // Cut the shuffled variables into monomials of random size, at least two.
  std::vector<std::vector<std::string>> monomials;
  std::uniform_int_distribution<std::size_t> width(1, 3);
  for (std::size_t v = 0; v < n;) {
    std::size_t const w = std::min(width(rng), n - v);
    monomials.emplace_back(names.begin() + static_cast<std::ptrdiff_t>(v),
                           names.begin() + static_cast<std::ptrdiff_t>(v + w));
    v += w;
  }
  if (monomials.size() < 2) {
    monomials.back().pop_back();
    monomials.push_back({names.back()});
  }

  // Reuse exponents often so equal blocks and pure groups appear.
  std::vector<Exponent> palette{exponent(rng), exponent(rng)};
  std::bernoulli_distribution reuse(0.6);
  std::uniform_int_distribution<std::size_t> pick(0, 1);
  std::string text;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i > 0) text += " + ";
    for (std::size_t j = 0; j < monomials[i].size(); ++j) {
      if (j > 0) text += "*";
      Exponent const e = reuse(rng) ? palette[pick(rng)] : exponent(rng);
      text += monomials[i][j] + "^" + std::to_string(e);
    }
  }
  return text;
}

inline CanonicalForm random_form(std::mt19937_64& rng, std::size_t max_vars,
                                 Exponent max_exponent, Exponent min_exponent = 1) {
  return parse_canonical(random_separated_text(rng, max_vars, max_exponent, min_exponent));
}

}  // namespace sepaut::testing
