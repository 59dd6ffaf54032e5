#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/polynomial.hpp"
#include "signlap/rational.hpp"

namespace signlap {

/// Subset of red variables; bit k-1 stands for red variable k.
using RedMask = std::uint32_t;

inline constexpr int kDefaultMaxRed = 20;

/// Multilinear crossing polynomial M(t) = sum_I (-1)^|I| A_I t^I with
/// nonnegative stored coefficients A_I (for positive black weights).
class CrossingPolynomial {
 public:
  CrossingPolynomial() = default;
  CrossingPolynomial(int red_count, std::vector<Rational> coefficients);

  int red_count() const { return red_count_; }
  const Rational& coefficient(RedMask mask) const { return coeffs_.at(mask); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  friend bool operator==(const CrossingPolynomial&, const CrossingPolynomial&) = default;

 private:
  int red_count_ = 0;
  std::vector<Rational> coeffs_;
};

/// Binary string for a mask, red variable 1 leftmost ("10" = {1} for R=2).
std::string mask_to_string(RedMask mask, int red_count);
RedMask mask_from_string(std::string_view bits);

/// True if the red edges selected by `mask` contain a cycle (then no
/// spanning tree contains them all and A_mask = 0).
bool red_subset_has_cycle(const SignedWeightedGraph& g, RedMask mask);

/// A_I for every I: the tree constant of the minor contracting the red
/// edges in I and deleting the others. Throws if R > max_red.
CrossingPolynomial coefficients(const SignedWeightedGraph& g, int max_red = kDefaultMaxRed);

/// Same coefficients from spanning-tree enumeration (black-weight products
/// grouped by red edge set). Oracle only: exponential in the graph size.
CrossingPolynomial coefficients_by_enumeration(const SignedWeightedGraph& g);

Rational evaluate(const CrossingPolynomial& p, std::span<const Rational> t);

struct DegreeRange {
  int low = 0;
  int high = 0;
  friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Checks that nonzero terms occur for exactly the degrees
/// c(G_+)-1 ... N-c(G_-) and returns that range. A violation throws
/// InternalFault. Returns nullopt when p is identically zero (g disconnected).
std::optional<DegreeRange> degree_support(const CrossingPolynomial& p, const SignedWeightedGraph& g);

/// q(t) = M(t * alpha) as a univariate polynomial.
Polynomial ray_polynomial(const CrossingPolynomial& p, std::span<const Rational> alpha);

struct Crossing {
  Rational lower;
  Rational upper;
  std::optional<Rational> exact;
  double approx = 0;
  int multiplicity = 1;
};

struct RayCrossings {
  std::vector<Rational> direction;
  std::vector<Crossing> roots;  // ascending

  int total_multiplicity() const;
};

inline const Rational kRootWidth = Rational(1L, 1000000000000L);

/// Positive roots of the ray polynomial with multiplicities, isolated to
/// width <= 1e-12; rational roots are reported exactly.
RayCrossings ray_crossings(const CrossingPolynomial& p, std::span<const Rational> alpha);

}  // namespace signlap
