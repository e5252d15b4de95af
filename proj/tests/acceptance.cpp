// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. All checks are exact.

#include "sepaut/autassembly.hpp"
#include "sepaut/errors.hpp"
#include "sepaut/intlat.hpp"
#include "sepaut/permgroup.hpp"
#include "sepaut/quasitorus.hpp"
#include "sepaut/rigidity.hpp"
#include "sepaut/torusgeom.hpp"

#include "support/generators.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace sepaut;
using Clock = std::chrono::steady_clock;

// Collects the first few failure messages of one criterion.
class Check {
 public:
  void expect(bool condition, std::string const& message) {
    ++checks_;
    if (condition) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(message);
  }
  bool ok() const { return failures_ == 0; }
  std::size_t checks() const { return checks_; }
  std::size_t failures() const { return failures_; }
  std::vector<std::string> const& messages() const { return messages_; }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
};

// Instances whose generators criterion 5 certifies.
std::vector<CanonicalForm> g_instances;

std::string str(BigInt const& v) { return v.str(); }

void reference_example(Check& c) {
  CanonicalForm const cf = parse_canonical("X1^10*X2^11 + Y1^10 + Y2^10 + Y3^10");
  g_instances.push_back(cf);
  AutGroupDescription const aut = aut_group(cf);
  c.expect(aut.perm.order == 6, "P(F) order " + str(aut.perm.order));
  c.expect(aut.perm.structure == "S3", "P(F) structure " + aut.perm.structure);
  c.expect(aut.quasitorus.torsion == IntVector{10, 10}, "torsion differs from (10, 10)");
  c.expect(aut.quasitorus.torus_rank == 2,
           "torus rank " + std::to_string(aut.quasitorus.torus_rank));
  c.expect(aut.structure == "S3 ⋉ ((Z/10)^2 × T^2)", "structure " + aut.structure);
  c.expect(aut.rigidity.reciprocal_sum == Rational(27, 55),
           "reciprocal sum " + to_string(aut.rigidity.reciprocal_sum));
  c.expect(aut.rigidity.threshold && *aut.rigidity.threshold == Rational(1, 2),
           "threshold is not 1/2");
  c.expect(aut.rigidity.verdict == RigidityVerdict::certified_rigid,
           std::string("verdict ") + std::string(to_string(aut.rigidity.verdict)));
  c.expect(!aut.conditional, "result marked conditional");
}

void fermat_family(Check& c) {
  for (std::size_t n = 2; n <= 6; ++n) {
    BigInt factorial = 1;
    for (std::size_t k = 2; k <= n; ++k) factorial *= k;
    for (Exponent alpha = 2; alpha <= 7; ++alpha) {
      std::string const label = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha);
      AutGroupDescription const aut = fermat_aut(n, alpha);
      g_instances.push_back(aut.form);
      std::string const expected = "S" + std::to_string(n) + " ⋉ ((Z/" + std::to_string(alpha) +
                                   ")^" + std::to_string(n - 1) + " × T^1)";
      c.expect(aut.structure == expected, label + ": " + aut.structure);
      c.expect(aut.quasitorus.torus_rank == 1, label + ": torus rank");
      c.expect(aut.quasitorus.torsion == IntVector(n - 1, BigInt(alpha)), label + ": torsion");
      c.expect(aut.perm.order == factorial, label + ": order " + str(aut.perm.order));
      BigInt const brute = brute_force_perm_order(aut.form);
      c.expect(brute == factorial, label + ": brute force " + str(brute));
    }
  }
}

void snf_property_suite(Check& c) {
  using boost::multiprecision::abs;
  std::mt19937_64 rng(20240501);
  for (int i = 0; i < 500; ++i) {
    IntMatrix const A = testing::random_matrix(rng, 6, 50);
    std::string const label = "matrix #" + std::to_string(i);
    SNFResult const snf = smith_normal_form(A);
    c.expect(snf.U * A * snf.V == snf.S, label + ": U A V != S");
    c.expect(abs(determinant(snf.U)) == 1, label + ": |det U| != 1");
    c.expect(abs(determinant(snf.V)) == 1, label + ": |det V| != 1");
    bool diagonal = true;
    for (std::size_t r = 0; r < snf.S.rows(); ++r)
      for (std::size_t col = 0; col < snf.S.cols(); ++col) {
        bool const on_diag = r == col && r < snf.rank();
        if (on_diag ? snf.S(r, col) != snf.divisors[r] : snf.S(r, col) != 0) diagonal = false;
      }
    c.expect(diagonal, label + ": S is not diag(divisors)");
    BigInt previous = 1;
    for (std::size_t k = 1; k <= std::min(A.rows(), A.cols()); ++k) {
      BigInt const delta = gcd_of_minors(A, k);
      if (k <= snf.rank()) {
        BigInt const& d = snf.divisors[k - 1];
        c.expect(d > 0, label + ": nonpositive divisor");
        if (k < snf.rank()) c.expect(snf.divisors[k] % d == 0, label + ": chain broken");
        c.expect(delta % previous == 0 && d == delta / previous,
                 label + ": d_" + std::to_string(k) + " = " + str(d) + " but Delta ratio " +
                     str(delta) + "/" + str(previous));
        previous = delta;
      } else {
        c.expect(delta == 0, label + ": rank too small");
      }
    }
  }
}

void torsion_count_oracle(Check& c) {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 20; ++i) {
    CanonicalForm const cf = testing::random_form(rng, 6, 6);
    g_instances.push_back(cf);
    CharacterData const cd = character_matrix(cf);
    SNFResult const snf = smith_normal_form(cd.difference_matrix);
    std::size_t const n = cf.variable_count();
    for (std::uint64_t N = 2; N <= 12; ++N) {
      std::uint64_t points = 1;
      for (std::size_t v = 0; v < n; ++v) points *= N;
      if (points > kMaxTorsionEnumeration) continue;
      BigInt expected = boost::multiprecision::pow(BigInt(N), static_cast<unsigned>(n - snf.rank()));
      for (auto const& d : snf.divisors) expected *= boost::multiprecision::gcd(d, BigInt(N));
      BigInt const counted = count_torsion_points_mod(cd, N);
      c.expect(counted == expected, render(cf) + " mod " + std::to_string(N) + ": " + str(counted) +
                                        " != " + str(expected));
    }
  }
}

void generator_certification(Check& c) {
  for (auto const& cf : g_instances) {
    AutGroupDescription const aut = aut_group(cf);
    std::size_t const n = cf.variable_count();
    std::vector<MonomialAutomorphism> generators;
    for (auto const& tau : aut.perm.generators)
      generators.push_back(MonomialAutomorphism::from_permutation(tau));
    for (auto const& t : aut.quasitorus.torsion_generators)
      generators.push_back(MonomialAutomorphism::from_torsion(n, t));
    for (auto const& g : generators) {
      try {
        verify_generator(cf, g);
        c.expect(true, "");
      } catch (NotAnAutomorphismError const& e) {
        c.expect(false, render(cf) + ": " + e.what());
      }
    }
  }
}

std::vector<CanonicalForm> hundred_forms() {
  std::mt19937_64 rng(100);
  std::vector<CanonicalForm> forms;
  for (int i = 0; i < 100; ++i) forms.push_back(testing::random_form(rng, 10, 12));
  return forms;
}

void torus_rank_identity(Check& c) {
  for (auto const& cf : hundred_forms()) {
    std::string const label = render(cf);
    CharacterData const cd = character_matrix(cf);
    std::size_t const torus_rank = quasitorus_structure(cd).torus_rank;
    std::size_t block_sum = 1;
    for (auto const& b : cf.mixed_blocks) block_sum += b.variables.size() - 1;
    c.expect(torus_rank == cf.variable_count() - cf.monomial_count() + 1, label + ": n - M + 1");
    c.expect(torus_rank == block_sum, label + ": sum(n_i - 1) + 1");
    auto const tori = torus_generators(cf).all();
    for (auto const& a : tori) {
      IntVector const image = cd.difference_matrix * a;
      c.expect(std::all_of(image.begin(), image.end(), [](BigInt const& x) { return x == 0; }),
               label + ": torus generator outside ker(D)");
    }
    c.expect(rank(IntMatrix::from_rows(tori, cf.variable_count())) == torus_rank,
             label + ": T0, Tij do not span a finite-index sublattice");
  }
}

void pointedness(Check& c) {
  std::mt19937_64 rng(700);
  for (auto const& cf : hundred_forms()) {
    std::string const label = render(cf);
    ConeDescription const cone = weight_cone(cf);
    c.expect(cone.pointed && witness_is_valid(cone), label + ": witness not positive");
    std::size_t const d = cone.basis.size();
    IntMatrix const changed =
        testing::random_unimodular(rng, d) * IntMatrix::from_rows(cone.basis, cf.variable_count());
    std::vector<IntVector> basis;
    for (std::size_t k = 0; k < d; ++k) basis.push_back(changed.row(k));
    ConeDescription const other = weight_cone(cf, basis);
    c.expect(other.pointed && witness_is_valid(other), label + ": witness fails after basis change");
  }
}

struct Criterion {
  int id;
  std::string name;
  double max_seconds;  // 0 for no runtime bound
  std::function<void(Check&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "reference example reproduction", 1.0, reference_example},
      {2, "Fermat family n in 2..6, alpha in 2..7", 10.0, fermat_family},
      {3, "SNF property suite, 500 random matrices", 30.0, snf_property_suite},
      {4, "torsion-count oracle, 20 random forms x N in 2..12", 60.0, torsion_count_oracle},
      {5, "generator certification on criteria 1-4 instances", 0.0, generator_certification},
      {6, "torus-rank identity on 100 random forms", 0.0, torus_rank_identity},
      {7, "pointedness witness under two bases", 0.0, pointedness},
  };

  int failed = 0;
  for (auto const& criterion : criteria) {
    Check check;
    auto const start = Clock::now();
    try {
      criterion.body(check);
    } catch (std::exception const& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    double const seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool const in_time = criterion.max_seconds == 0.0 || seconds < criterion.max_seconds;
    bool const passed = check.ok() && in_time;
    if (!passed) ++failed;

    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "AC" << criterion.id << " " << criterion.name
              << " (" << check.checks() << " checks, " << timing;
    if (criterion.max_seconds > 0) std::cout << ", limit " << criterion.max_seconds << " s";
    std::cout << ")\n";
    for (auto const& m : check.messages()) std::cout << "       " << m << '\n';
    if (check.failures() > check.messages().size()) {
      std::cout << "       ... " << check.failures() - check.messages().size() << " more\n";
    }
    if (!in_time) std::cout << "       runtime limit exceeded\n";
  }
  std::cout << (failed == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: " +
                                                                      std::to_string(failed))
            << '\n';
  return failed == 0 ? 0 : 1;
}
