#include "sepaut/polyio.hpp"

#include "sepaut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <optional>
#include <set>
#include <utility>

namespace sepaut {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs by numeric value.
int compare_digit_runs(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    auto const first = s.find_first_not_of('0');
    return first == std::string_view::npos ? std::string_view{} : s.substr(first);
  };
  a = strip(a);
  b = strip(b);
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return a.compare(b);
}

struct MonomialLess {
  bool operator()(Monomial const& lhs, Monomial const& rhs) const {
    NaturalLess const name_less;
    auto l = lhs.begin();
    auto r = rhs.begin();
    for (; l != lhs.end() && r != rhs.end(); ++l, ++r) {
      if (name_less(l->first, r->first)) return true;
      if (name_less(r->first, l->first)) return false;
      if (l->second != r->second) return l->second > r->second;
    }
    return l == lhs.end() && r != rhs.end();
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Polynomial parse() {
    std::map<Monomial, Rational, MonomialLess> combined;
    skip_space();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    while (true) {
      auto [coefficient, monomial] = parse_term();
      if (negative) coefficient = -coefficient;
      combined[std::move(monomial)] += coefficient;
      skip_space();
      if (at_end()) break;
      char const c = peek();
      if (c != '+' && c != '-') fail("expected '+', '-' or end of input");
      negative = c == '-';
      ++pos_;
    }
    std::vector<Term> terms;
    for (auto& [monomial, coefficient] : combined) {
      if (coefficient != 0) terms.push_back(Term{coefficient, monomial});
    }
    if (terms.empty()) throw ParseError("polynomial is zero", 0);
    return Polynomial(std::move(terms));
  }

 private:
  std::pair<Rational, Monomial> parse_term() {
    skip_space();
    Rational coefficient = 1;
    Monomial monomial;
    if (is_digit(peek())) {
      coefficient = parse_coefficient();
      skip_space();
      if (peek() != '*') return {coefficient, monomial};
      ++pos_;
      skip_space();
    }
    while (true) {
      auto [name, exponent] = parse_factor();
      Exponent& slot = monomial[name];
      if (__builtin_add_overflow(slot, exponent, &slot)) {
        fail("exponent out of range");
      }
      skip_space();
      if (peek() != '*') break;
      ++pos_;
      skip_space();
    }
    return {coefficient, monomial};
  }

  std::pair<std::string, Exponent> parse_factor() {
    if (!is_letter(peek())) fail("expected a variable name");
    std::size_t const start = pos_;
    while (!at_end() && (is_letter(peek()) || is_digit(peek()) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    skip_space();
    if (peek() != '^') return {std::move(name), 1};
    ++pos_;
    skip_space();
    if (peek() == '-') fail("exponent must be positive");
    if (!is_digit(peek())) fail("expected a natural-number exponent");
    std::size_t const digits_start = pos_;
    std::string_view const digits = take_digits();
    if (peek() == '.' || peek() == '/') fail("exponent must be an integer");
    Exponent exponent = 0;
    auto const [ptr, ec] =
        std::from_chars(digits.data(), digits.data() + digits.size(), exponent);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError("exponent out of range", digits_start);
    }
    if (exponent == 0) throw ParseError("exponent must be positive", digits_start);
    return {std::move(name), exponent};
  }

  Rational parse_coefficient() {
    BigInt numerator{std::string(take_digits())};
    skip_space();
    if (peek() != '/') return Rational(numerator);
    ++pos_;
    skip_space();
    if (!is_digit(peek())) fail("expected a denominator");
    std::size_t const den_start = pos_;
    BigInt denominator{std::string(take_digits())};
    if (denominator == 0) throw ParseError("zero denominator", den_start);
    return Rational(numerator, denominator);
  }

  std::string_view take_digits() {
    std::size_t const start = pos_;
    while (!at_end() && is_digit(peek())) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(std::string const& message) const {
    if (at_end()) throw ParseError(message + ", found end of input", pos_);
    throw ParseError(message + ", found '" + std::string(1, peek()) + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string render_power(std::string const& variable, Exponent exponent) {
  if (exponent == 1) return variable;
  return variable + "^" + std::to_string(exponent);
}

}  // namespace

bool NaturalLess::operator()(std::string const& lhs, std::string const& rhs) const {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < lhs.size() && j < rhs.size()) {
    if (is_digit(lhs[i]) && is_digit(rhs[j])) {
      std::size_t const i0 = i;
      std::size_t const j0 = j;
      while (i < lhs.size() && is_digit(lhs[i])) ++i;
      while (j < rhs.size() && is_digit(rhs[j])) ++j;
      int const c = compare_digit_runs(std::string_view(lhs).substr(i0, i - i0),
                                       std::string_view(rhs).substr(j0, j - j0));
      if (c != 0) return c < 0;
      continue;
    }
    if (lhs[i] != rhs[j]) return lhs[i] < rhs[j];
    ++i;
    ++j;
  }
  if ((i < lhs.size()) != (j < rhs.size())) return j < rhs.size();
  return lhs < rhs;
}

Polynomial::Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {
  std::map<Monomial, Rational, MonomialLess> combined;
  for (auto& term : terms_) combined[std::move(term.monomial)] += term.coefficient;
  terms_.clear();
  for (auto& [monomial, coefficient] : combined) {
    if (coefficient != 0) terms_.push_back(Term{coefficient, monomial});
  }
}

Exponent MixedBlock::total_degree() const {
  return std::accumulate(exponents.begin(), exponents.end(), Exponent{0});
}

std::vector<std::string> CanonicalForm::var_order() const {
  std::vector<std::string> order;
  for (auto const& block : mixed_blocks) {
    order.insert(order.end(), block.variables.begin(), block.variables.end());
  }
  for (auto const& block : pure_blocks) {
    order.insert(order.end(), block.variables.begin(), block.variables.end());
  }
  return order;
}

std::vector<Exponent> CanonicalForm::variable_exponents() const {
  std::vector<Exponent> exponents;
  for (auto const& block : mixed_blocks) {
    exponents.insert(exponents.end(), block.exponents.begin(), block.exponents.end());
  }
  for (auto const& block : pure_blocks) {
    exponents.insert(exponents.end(), block.variables.size(), block.exponent);
  }
  return exponents;
}

std::size_t CanonicalForm::variable_count() const {
  std::size_t n = 0;
  for (auto const& block : mixed_blocks) n += block.variables.size();
  for (auto const& block : pure_blocks) n += block.variables.size();
  return n;
}

std::size_t CanonicalForm::monomial_count() const {
  std::size_t count = mixed_blocks.size();
  for (auto const& block : pure_blocks) count += block.variables.size();
  return count;
}

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

CanonicalForm recognize_separated(Polynomial const& polynomial) {
  std::map<std::string, int, NaturalLess> occurrences;
  for (auto const& term : polynomial.terms()) {
    if (term.monomial.empty()) throw ConstantTermError();
    for (auto const& [name, exponent] : term.monomial) ++occurrences[name];
  }
  for (auto const& [name, count] : occurrences) {
    if (count > 1) throw NotSeparatedError(name);
  }

  NaturalLess const name_less;
  CanonicalForm form;
  std::map<Exponent, std::vector<std::string>, std::greater<>> pure;
  for (auto const& term : polynomial.terms()) {
    if (term.coefficient != 1) form.scaling_absorbed = true;
    if (term.monomial.size() == 1) {
      auto const& [name, exponent] = *term.monomial.begin();
      pure[exponent].push_back(name);
      continue;
    }
    std::vector<std::pair<std::string, Exponent>> factors(term.monomial.begin(),
                                                          term.monomial.end());
    std::stable_sort(factors.begin(), factors.end(), [](auto const& a, auto const& b) {
      return a.second > b.second;
    });
    MixedBlock block;
    for (auto& [name, exponent] : factors) {
      block.variables.push_back(name);
      block.exponents.push_back(exponent);
    }
    form.mixed_blocks.push_back(std::move(block));
  }

  std::sort(form.mixed_blocks.begin(), form.mixed_blocks.end(),
            [&](MixedBlock const& a, MixedBlock const& b) {
              if (a.exponents.size() != b.exponents.size()) {
                return a.exponents.size() > b.exponents.size();
              }
              if (a.exponents != b.exponents) return a.exponents > b.exponents;
              return name_less(a.variables.front(), b.variables.front());
            });

  for (auto& [exponent, names] : pure) {
    std::sort(names.begin(), names.end(), name_less);
    form.pure_blocks.push_back(PureBlock{exponent, std::move(names)});
  }
  return form;
}

CanonicalForm parse_canonical(std::string_view text) {
  return recognize_separated(parse_polynomial(text));
}

std::string render(CanonicalForm const& form) {
  std::vector<std::string> monomials;
  for (auto const& block : form.mixed_blocks) {
    std::string text;
    for (std::size_t j = 0; j < block.variables.size(); ++j) {
      if (j > 0) text += "*";
      text += render_power(block.variables[j], block.exponents[j]);
    }
    monomials.push_back(std::move(text));
  }
  for (auto const& block : form.pure_blocks) {
    for (auto const& name : block.variables) {
      monomials.push_back(render_power(name, block.exponent));
    }
  }
  std::string out;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    if (i > 0) out += " + ";
    out += monomials[i];
  }
  return out;
}

std::string render(Polynomial const& polynomial) {
  if (polynomial.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto const& term : polynomial.terms()) {
    Rational magnitude = boost::multiprecision::abs(term.coefficient);
    bool const negative = term.coefficient < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string factors;
    for (auto const& [name, exponent] : term.monomial) {
      if (!factors.empty()) factors += "*";
      factors += render_power(name, exponent);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

}  // namespace sepaut
