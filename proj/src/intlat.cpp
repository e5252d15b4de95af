#include "sepaut/intlat.hpp"

#include "sepaut/errors.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace sepaut {

namespace {

using boost::multiprecision::abs;

BigInt floor_div(BigInt const& a, BigInt const& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Position of the nonzero entry of least absolute value in the block
// rows [r0, r1) x cols [c0, c1), if any.
std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(
    IntMatrix const& m, std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  BigInt best_abs;
  for (std::size_t r = r0; r < r1; ++r) {
    for (std::size_t c = c0; c < c1; ++c) {
      if (m(r, c) == 0) continue;
      BigInt const a = abs(m(r, c));
      if (!best || a < best_abs) {
        best = {r, c};
        best_abs = a;
        if (best_abs == 1) return best;
      }
    }
  }
  return best;
}

// Visits every increasing k-subset of {0, ..., n-1}.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (auto const& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t size) {
  IntMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<IntVector const> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(IntMatrix const& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      BigInt const& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  return out;
}

IntVector IntMatrix::operator*(IntVector const& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 BigInt const& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(target, c) += factor * (*this)(source, c);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source,
                                 BigInt const& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, target) += factor * (*this)(r, source);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](BigInt const& v) { return v == 0; });
}

std::ostream& operator<<(std::ostream& os, IntMatrix const& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) os << ' ';
      os << m(r, c);
    }
    os << '\n';
  }
  return os;
}

IntMatrix read_matrix(std::istream& in) {
  std::string const text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::size_t pos = 0;
  auto next_token = [&](char const* what) -> std::pair<std::string, std::size_t> {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) throw ParseError(std::string("expected ") + what, pos);
    std::size_t const start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::string token = text.substr(start, pos - start);
    std::size_t const digits = (token[0] == '-' || token[0] == '+') ? 1 : 0;
    if (token.size() == digits ||
        !std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits), token.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("expected an integer, found '" + token + "'", start);
    }
    if (token[0] == '+') token.erase(0, 1);
    return {token, start};
  };
  auto read_dimension = [&](char const* what) {
    auto const [token, at] = next_token(what);
    if (token[0] == '-' || token.size() > 6) throw ParseError("invalid dimension", at);
    return static_cast<std::size_t>(std::stoul(token));
  };
  std::size_t const rows = read_dimension("row count");
  std::size_t const cols = read_dimension("column count");
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = BigInt(next_token("matrix entry").first);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos < text.size()) throw ParseError("trailing input after matrix entries", pos);
  return m;
}

SNFResult smith_normal_form(IntMatrix const& A) {
  std::size_t const m = A.rows();
  std::size_t const n = A.cols();
  IntMatrix S = A;
  IntMatrix U = IntMatrix::identity(m);
  IntMatrix V = IntMatrix::identity(n);
  IntVector divisors;

  auto move_to_pivot = [&](std::size_t t, std::pair<std::size_t, std::size_t> at) {
    S.swap_rows(t, at.first);
    U.swap_rows(t, at.first);
    S.swap_cols(t, at.second);
    V.swap_cols(t, at.second);
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    auto const start = min_abs_entry(S, t, m, t, n);
    if (!start) break;
    move_to_pivot(t, *start);

    while (true) {
      for (std::size_t i = t + 1; i < m; ++i) {
        BigInt const q = S(i, t) / S(t, t);
        S.add_row_multiple(i, t, -q);
        U.add_row_multiple(i, t, -q);
      }
      if (auto const rem = min_abs_entry(S, t + 1, m, t, t + 1)) {
        move_to_pivot(t, *rem);
        continue;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        BigInt const q = S(t, j) / S(t, t);
        S.add_col_multiple(j, t, -q);
        V.add_col_multiple(j, t, -q);
      }
      if (auto const rem = min_abs_entry(S, t, t + 1, t + 1, n)) {
        move_to_pivot(t, {t, rem->second});
        continue;
      }
      // Pivot must divide the whole trailing block.
      std::optional<std::size_t> offending_row;
      for (std::size_t i = t + 1; i < m && !offending_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            offending_row = i;
            break;
          }
      if (!offending_row) break;
      S.add_row_multiple(t, *offending_row, 1);
      U.add_row_multiple(t, *offending_row, 1);
    }

    if (S(t, t) < 0) {
      S.negate_row(t);
      U.negate_row(t);
    }
    divisors.push_back(S(t, t));
  }
  return SNFResult{std::move(U), std::move(S), std::move(V), std::move(divisors)};
}

IntMatrix hermite_normal_form(IntMatrix const& A) {
  IntMatrix H = A;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < H.cols() && pivot_row < H.rows(); ++c) {
    while (true) {
      auto const best = min_abs_entry(H, pivot_row, H.rows(), c, c + 1);
      if (!best) break;
      H.swap_rows(pivot_row, best->first);
      bool cleared = true;
      for (std::size_t i = pivot_row + 1; i < H.rows(); ++i) {
        H.add_row_multiple(i, pivot_row, -(H(i, c) / H(pivot_row, c)));
        if (H(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H(pivot_row, c) == 0) continue;
    if (H(pivot_row, c) < 0) H.negate_row(pivot_row);
    for (std::size_t i = 0; i < pivot_row; ++i) {
      H.add_row_multiple(i, pivot_row, -floor_div(H(i, c), H(pivot_row, c)));
    }
    ++pivot_row;
  }
  IntMatrix out(pivot_row, H.cols());
  for (std::size_t r = 0; r < pivot_row; ++r)
    for (std::size_t c = 0; c < H.cols(); ++c) out(r, c) = H(r, c);
  return out;
}

std::vector<IntVector> kernel_basis(IntMatrix const& A) {
  SNFResult const snf = smith_normal_form(A);
  std::size_t const n = A.cols();
  std::size_t const r = snf.rank();
  if (r == n) return {};
  std::vector<IntVector> cols;
  for (std::size_t c = r; c < n; ++c) cols.push_back(snf.V.col(c));
  IntMatrix const reduced = hermite_normal_form(IntMatrix::from_rows(cols, n));
  std::vector<IntVector> basis;
  for (std::size_t i = 0; i < reduced.rows(); ++i) basis.push_back(reduced.row(i));
  return basis;
}

BigInt determinant(IntMatrix const& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  std::size_t const n = A.rows();
  if (n == 0) return 1;
  IntMatrix M = A;
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && M(i, k) == 0) ++i;
      if (i == n) return 0;
      M.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / previous;
      }
      M(i, k) = 0;
    }
    previous = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

BigInt gcd_of_minors(IntMatrix const& A, std::size_t k) {
  if (k == 0) return 1;
  if (k > std::min(A.rows(), A.cols())) return 0;
  BigInt g = 0;
  IntMatrix minor(k, k);
  for_each_subset(A.rows(), k, [&](std::vector<std::size_t> const& rows) {
    if (g == 1) return;
    for_each_subset(A.cols(), k, [&](std::vector<std::size_t> const& cols) {
      if (g == 1) return;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = A(rows[i], cols[j]);
      g = boost::multiprecision::gcd(g, abs(determinant(minor)));
    });
  });
  return g;
}

std::size_t rank(IntMatrix const& A) { return hermite_normal_form(A).rows(); }

std::vector<Rational> solve_rational(IntMatrix const& A, IntVector const& b) {
  std::size_t const m = A.rows();
  std::size_t const n = A.cols();
  if (b.size() != m) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<std::vector<Rational>> aug(m, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug[r][c] = Rational(A(r, c));
    aug[r][n] = Rational(b[r]);
  }
  std::size_t row = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = row;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) throw std::invalid_argument("system is underdetermined");
    std::swap(aug[row], aug[p]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || aug[r][c] == 0) continue;
      Rational const factor = aug[r][c] / aug[row][c];
      for (std::size_t k = c; k <= n; ++k) aug[r][k] -= factor * aug[row][k];
    }
    ++row;
  }
  for (std::size_t r = row; r < m; ++r) {
    if (aug[r][n] != 0) throw std::invalid_argument("system is inconsistent");
  }
  std::vector<Rational> x(n);
  for (std::size_t c = 0; c < n; ++c) x[c] = aug[c][n] / aug[c][c];
  return x;
}

BigInt dot(IntVector const& a, IntVector const& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product length mismatch");
  BigInt sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace sepaut
