#include "sepaut/permgroup.hpp"

#include "sepaut/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sepaut {

namespace {

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

std::string symmetric(std::size_t k) { return "S" + std::to_string(k); }

// Transposition of the first two points plus the full cycle; generates the
// symmetric group on points.
void add_symmetric_generators(std::vector<std::size_t> const& points, std::size_t n,
                              std::vector<Permutation>& out) {
  if (points.size() < 2) return;
  Permutation swap = Permutation::identity(n);
  std::swap(swap.images[points[0]], swap.images[points[1]]);
  out.push_back(std::move(swap));
  if (points.size() < 3) return;
  Permutation cycle = Permutation::identity(n);
  for (std::size_t i = 0; i < points.size(); ++i) {
    cycle.images[points[i]] = points[(i + 1) % points.size()];
  }
  out.push_back(std::move(cycle));
}

using ExponentVector = std::vector<Exponent>;

std::multiset<ExponentVector> monomial_set(CanonicalForm const& form) {
  std::size_t const n = form.variable_count();
  std::multiset<ExponentVector> monomials;
  std::size_t v = 0;
  for (auto const& block : form.mixed_blocks) {
    ExponentVector e(n, 0);
    for (Exponent l : block.exponents) e[v++] = l;
    monomials.insert(std::move(e));
  }
  for (auto const& block : form.pure_blocks) {
    for (std::size_t k = 0; k < block.variables.size(); ++k) {
      ExponentVector e(n, 0);
      e[v++] = block.exponent;
      monomials.insert(std::move(e));
    }
  }
  return monomials;
}

bool fixes(std::multiset<ExponentVector> const& monomials, Permutation const& perm) {
  std::multiset<ExponentVector> image;
  for (auto const& e : monomials) {
    ExponentVector moved(e.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) moved[perm(v)] = e[v];
    image.insert(std::move(moved));
  }
  return image == monomials;
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), std::size_t{0});
  return p;
}

Permutation Permutation::compose(Permutation const& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation out;
  out.images.resize(size());
  for (std::size_t v = 0; v < size(); ++v) out.images[v] = images[other.images[v]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images.resize(size());
  for (std::size_t v = 0; v < size(); ++v) out.images[images[v]] = v;
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < size(); ++v)
    if (images[v] != v) return false;
  return true;
}

std::string cycle_notation(Permutation const& perm, std::vector<std::string> const& names) {
  NaturalLess const less;
  std::vector<std::vector<std::string>> cycles;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm(start) == start) continue;
    std::vector<std::string> cycle;
    for (std::size_t v = start; !seen[v]; v = perm(v)) {
      seen[v] = true;
      cycle.push_back(names.at(v));
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end(), less), cycle.end());
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) return "()";
  std::sort(cycles.begin(), cycles.end(),
            [&](auto const& a, auto const& b) { return less(a.front(), b.front()); });
  std::string out;
  for (auto const& cycle : cycles) {
    out += "(";
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += " ";
      out += cycle[i];
    }
    out += ")";
  }
  return out;
}

BigInt MixedClass::inner_order() const {
  BigInt order = 1;
  for (std::size_t mult : run_multiplicities) order *= factorial(mult);
  return order;
}

PermGroupDescription permutation_group(CanonicalForm const& form) {
  std::size_t const n = form.variable_count();
  PermGroupDescription out;
  out.order = 1;
  std::vector<std::string> factors;

  std::vector<std::size_t> block_start;
  std::size_t offset = 0;
  for (auto const& block : form.mixed_blocks) {
    block_start.push_back(offset);
    offset += block.variables.size();
  }

  // Canonical ordering places blocks with equal exponent lists next to each other.
  for (std::size_t i = 0; i < form.mixed_blocks.size();) {
    MixedClass cls;
    cls.exponents = form.mixed_blocks[i].exponents;
    std::size_t j = i;
    while (j < form.mixed_blocks.size() && form.mixed_blocks[j].exponents == cls.exponents) {
      cls.blocks.push_back(j++);
    }
    std::vector<std::vector<std::size_t>> runs;  // offsets within a block
    for (std::size_t p = 0; p < cls.exponents.size(); ++p) {
      if (p == 0 || cls.exponents[p] != cls.exponents[p - 1]) runs.emplace_back();
      runs.back().push_back(p);
    }
    for (auto const& run : runs) cls.run_multiplicities.push_back(run.size());

    std::size_t const c = cls.blocks.size();
    BigInt const inner = cls.inner_order();
    out.order *= factorial(c) * boost::multiprecision::pow(inner, static_cast<unsigned>(c));

    std::vector<std::string> inner_factors;
    for (std::size_t mult : cls.run_multiplicities)
      if (mult > 1) inner_factors.push_back(symmetric(mult));
    if (c == 1) {
      factors.insert(factors.end(), inner_factors.begin(), inner_factors.end());
    } else if (inner_factors.empty()) {
      factors.push_back(symmetric(c));
    } else {
      std::string w = inner_factors.front();
      for (std::size_t k = 1; k < inner_factors.size(); ++k) w += " × " + inner_factors[k];
      if (inner_factors.size() > 1) w = "(" + w + ")";
      factors.push_back(w + " wr " + symmetric(c));
    }

    // Inner factor on the first block; the block swaps conjugate it to the rest.
    std::size_t const first = block_start[cls.blocks.front()];
    for (auto const& run : runs) {
      std::vector<std::size_t> points;
      for (std::size_t p : run) points.push_back(first + p);
      add_symmetric_generators(points, n, out.generators);
    }
    if (c >= 2) {
      std::size_t const width = cls.exponents.size();
      Permutation swap = Permutation::identity(n);
      std::size_t const a = block_start[cls.blocks[0]];
      std::size_t const b = block_start[cls.blocks[1]];
      for (std::size_t p = 0; p < width; ++p) std::swap(swap.images[a + p], swap.images[b + p]);
      out.generators.push_back(std::move(swap));
      if (c >= 3) {
        Permutation cycle = Permutation::identity(n);
        for (std::size_t k = 0; k < c; ++k) {
          std::size_t const from = block_start[cls.blocks[k]];
          std::size_t const to = block_start[cls.blocks[(k + 1) % c]];
          for (std::size_t p = 0; p < width; ++p) cycle.images[from + p] = to + p;
        }
        out.generators.push_back(std::move(cycle));
      }
    }
    out.mixed_classes.push_back(std::move(cls));
    i = j;
  }

  for (auto const& block : form.pure_blocks) {
    PureFactor factor{block.exponent, {}};
    for (std::size_t k = 0; k < block.variables.size(); ++k) factor.variables.push_back(offset++);
    out.order *= factorial(factor.variables.size());
    if (factor.variables.size() > 1) factors.push_back(symmetric(factor.variables.size()));
    add_symmetric_generators(factor.variables, n, out.generators);
    out.pure_factors.push_back(std::move(factor));
  }

  if (factors.empty()) {
    out.structure = "1";
  } else {
    out.structure = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) out.structure += " × " + factors[k];
  }

  for (auto const& g : out.generators) {
    if (!fixes_polynomial(form, g)) {
      throw std::logic_error("permutation generator does not fix the polynomial");
    }
  }
  return out;
}

bool fixes_polynomial(CanonicalForm const& form, Permutation const& perm) {
  if (perm.size() != form.variable_count()) return false;
  return fixes(monomial_set(form), perm);
}

BigInt brute_force_perm_order(CanonicalForm const& form) {
  std::size_t const n = form.variable_count();
  if (n > kMaxBruteForceVariables) {
    throw TooManyVariablesError("brute-force permutation search needs n <= " +
                                std::to_string(kMaxBruteForceVariables) + ", got n = " +
                                std::to_string(n));
  }
  auto const monomials = monomial_set(form);
  Permutation perm = Permutation::identity(n);
  BigInt count = 0;
  do {
    if (fixes(monomials, perm)) ++count;
  } while (std::next_permutation(perm.images.begin(), perm.images.end()));
  return count;
}

}  // namespace sepaut
