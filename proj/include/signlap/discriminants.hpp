#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "signlap/crossing.hpp"
#include "signlap/graph.hpp"
#include "signlap/rational.hpp"

namespace signlap {

// --- two red edges ----------------------------------------------------------

/// A11*A00 - A01*A10 for a two-variable crossing polynomial.
Rational discriminant2(const CrossingPolynomial& p);

/// sqrt(2|D|)/A11; 0 when D = 0; nullopt when A11 = 0.
std::optional<double> gap(const CrossingPolynomial& p);

/// (A01/A11, A10/A11) when D = 0 and A11 > 0: the only point where both
/// eigenvalues can reach zero together.
std::optional<std::pair<Rational, Rational>> degenerate_point(const CrossingPolynomial& p);

/// Endpoint pairs used for the signed 2-forest sum of two red edges: each
/// edge's endpoints ascending, or {shared, other} when the edges meet.
std::pair<std::array<Vertex, 2>, std::array<Vertex, 2>> forest_terminals(std::array<Vertex, 2> first,
                                                                          std::array<Vertex, 2> second);

/// Signed sum of 2-forest weights separating the endpoints of the two red
/// edges. Its square equals |discriminant2(coefficients(g))|.
Rational forest_sum_2(const SignedWeightedGraph& g);

/// Determinant of m with rows U and columns W removed.
Rational laplacian_minor(const RationalMatrix& m, std::span<const std::size_t> U, std::span<const std::size_t> W);

/// Desnanot-Jacobi: |M||M_{ij,kl}| - |M_{i,k}||M_{j,l}| = -|M_{i,l}||M_{j,k}|.
/// Row and column pairs are taken in ascending order.
bool dodgson_check(const RationalMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// The E x c cycle matrix of a basis whose last two cycles are the only
/// ones through red edges 1 and 2 respectively. Unit black weights assumed.
struct CycleBasis {
  std::vector<std::vector<int>> cycles;  // each of length E, entries -1/0/+1
};

/// Builds the basis; nullopt when deleting both red edges disconnects g or
/// the co-rank is below 2.
std::optional<CycleBasis> red_separated_cycle_basis(const SignedWeightedGraph& g);

/// Minor of F F^t with the row of the second red cycle and the column of
/// the first removed. Its square equals |discriminant2| for unit blacks.
std::optional<Rational> cycle_minor(const SignedWeightedGraph& g);

// --- wildcards --------------------------------------------------------------

/// Pattern over {0, 1, *} with exactly two '*', read left to right as red
/// variables 1..R.
class Wildcard {
 public:
  explicit Wildcard(std::string pattern);

  const std::string& pattern() const { return pattern_; }
  int length() const { return static_cast<int>(pattern_.size()); }
  int first() const { return first_; }
  int second() const { return second_; }
  /// Mask with both '*' set to 0.
  RedMask base() const { return base_; }

  friend auto operator<=>(const Wildcard& a, const Wildcard& b) { return a.pattern_ <=> b.pattern_; }
  friend bool operator==(const Wildcard& a, const Wildcard& b) { return a.pattern_ == b.pattern_; }

 private:
  std::string pattern_;
  int first_ = 0;
  int second_ = 0;
  RedMask base_ = 0;
};

/// Wildcards whose bits before the second '*' are all zero; 2^R - R - 1 of them.
std::vector<Wildcard> stacked_deck(int red_count);

/// Every wildcard of length R: C(R,2) * 2^(R-2) of them.
std::vector<Wildcard> all_wildcards(int red_count);

/// A_{b+ei+ej} A_b - A_{b+ei} A_{b+ej}.
Rational wildcard_discriminant(const CrossingPolynomial& p, const Wildcard& w);

/// M(t) = alpha * prod_i (1 - C_i t_i).
struct Factorization {
  Rational alpha;
  std::vector<Rational> C;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Complete linear factorization, or nullopt. Requires A_0 != 0. Success is
/// decided by the stacked-deck discriminants and confirmed by re-expansion.
std::optional<Factorization> factorize(const CrossingPolynomial& p);

/// Expanded coefficient check: A_I == alpha * prod_{i in I} C_i for all I.
bool expands_to(const Factorization& f, const CrossingPolynomial& p);

/// Signed 2-forest sum for the two '*' edges in the graph derived by
/// contracting the '1' red edges and deleting the '0' red edges. nullopt when
/// a '*' edge collapses to a point.
std::optional<Rational> wildcard_forest_sum(const SignedWeightedGraph& g, const Wildcard& w);

}  // namespace signlap
