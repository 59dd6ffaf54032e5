#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "signlap/rational.hpp"

namespace signlap {

/// Dense univariate polynomial over Q; coefficient k multiplies t^k.
/// Trailing zero coefficients are always trimmed, so the zero polynomial
/// has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Lowest power of t with a nonzero coefficient (-1 for zero).
  int order_at_zero() const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  Polynomial derivative() const;
  Polynomial monic() const;
  /// Divides out t^order_at_zero().
  Polynomial without_zero_roots() const;

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder of a / b (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Yun's algorithm: monic square-free factors paired with multiplicities,
/// so that p = lc(p) * prod f^m.
std::vector<std::pair<Polynomial, int>> square_free_decomposition(const Polynomial& p);

/// Sturm chain p, p', -rem(p, p'), ...
std::vector<Polynomial> sturm_chain(const Polynomial& p);

/// Distinct real roots of the Sturm chain's polynomial in (a, b]; a must not
/// be a root.
int sturm_count(const std::vector<Polynomial>& chain, const Rational& a, const Rational& b);

/// A real root isolated in [lower, upper] (both equal to the root when it is
/// rational and was identified exactly).
struct IsolatedRoot {
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  double approx = 0;
};

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Rational simplest_rational_between(Rational lo, Rational hi);

/// Isolates every positive real root of a square-free polynomial, refines
/// each to width <= `width`, and identifies rational roots exactly.
std::vector<IsolatedRoot> positive_roots(const Polynomial& square_free, const Rational& width);

}  // namespace signlap
