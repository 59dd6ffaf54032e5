#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace signlap {

using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (decimal integers, q > 0) into a canonical
/// rational. Anything else throws InvalidInput.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

std::vector<Rational> parse_rational_list(std::string_view comma_separated);

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  static RationalMatrix square(std::size_t n) { return RationalMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const;

  /// Copy with the listed rows and columns removed. Indices may be in any
  /// order; duplicates are rejected.
  RationalMatrix without(std::span<const std::size_t> removed_rows,
                         std::span<const std::size_t> removed_cols) const;

  std::vector<double> to_doubles() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact determinant by Gaussian elimination over Q. The 0x0 determinant is 1.
Rational determinant(RationalMatrix m);

}  // namespace signlap
