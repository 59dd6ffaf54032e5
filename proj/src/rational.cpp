#include "signlap/rational.hpp"

#include <algorithm>
#include <cctype>

#include "signlap/errors.hpp"

namespace signlap {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{} : s.substr(slash + 1);
  if (!is_integer_literal(num, true) ||
      (slash != std::string_view::npos && !is_integer_literal(den, false))) {
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  }
  std::string numerator(num);
  if (numerator.front() == '+') numerator.erase(0, 1);
  Rational value;
  value.get_num() = mpz_class(numerator, 10);
  value.get_den() = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (value.get_den() == 0) {
    throw InvalidInput("zero denominator in '" + std::string(text) + "'");
  }
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

std::vector<Rational> parse_rational_list(std::string_view comma_separated) {
  std::vector<Rational> out;
  const std::string_view s = trim(comma_separated);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_rational(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::without(std::span<const std::size_t> removed_rows,
                                       std::span<const std::size_t> removed_cols) const {
  std::vector<bool> drop_row(rows_, false), drop_col(cols_, false);
  for (auto r : removed_rows) {
    if (r >= rows_ || drop_row[r]) throw InvalidInput("invalid or repeated row index in minor");
    drop_row[r] = true;
  }
  for (auto c : removed_cols) {
    if (c >= cols_ || drop_col[c]) throw InvalidInput("invalid or repeated column index in minor");
    drop_col[c] = true;
  }
  RationalMatrix out(rows_ - removed_rows.size(), cols_ - removed_cols.size());
  std::size_t oi = 0;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (drop_row[i]) continue;
    std::size_t oj = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (drop_col[j]) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

std::vector<double> RationalMatrix::to_doubles() const {
  std::vector<double> out(data_.size());
  std::transform(data_.begin(), data_.end(), out.begin(), [](const Rational& q) { return q.get_d(); });
  return out;
}

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(pivot, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational factor = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  return det;
}

}  // namespace signlap
