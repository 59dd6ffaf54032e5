#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/rational.hpp"

namespace signlap {

/// Eigenvalue sign counts (n_-, n_0, n_+).
struct SpectralIndex {
  int negative = 0;
  int zero = 0;
  int positive = 0;

  int size() const { return negative + zero + positive; }
  friend auto operator<=>(const SpectralIndex&, const SpectralIndex&) = default;
};

std::string to_string(const SpectralIndex& index);

/// L_ij = gamma_ij off the diagonal, L_ii = -sum_k gamma_ik. Rows sum to 0.
RationalMatrix laplacian(const SignedWeightedGraph& g);

/// Laplacian with labelled red edge k carrying weight -t_k.
RationalMatrix laplacian(const SignedWeightedGraph& g, std::span<const Rational> t);

/// Exact inertia by symmetric congruence (LDL^T with 1x1 and 2x2 pivots).
SpectralIndex inertia(const RationalMatrix& m);

/// Ascending eigenvalues of the floating-point shadow of a symmetric matrix.
std::vector<double> eigenvalues(const RationalMatrix& m);

/// Zero threshold for float eigenvalues: 1e-9 * max(1, |lambda|_max).
double zero_tolerance(std::span<const double> sorted_eigenvalues, double relative = 1e-9);

/// Sign counts of float eigenvalues with |lambda| <= tol treated as zero.
SpectralIndex float_index(std::span<const double> eigenvalues, double tol);

/// M(Gamma) = sum over spanning trees of the edge-weight product, computed
/// as (-1)^(N-1) times a principal (N-1)-minor of the Laplacian. Zero for
/// disconnected graphs, 1 for a single vertex.
Rational tree_constant(const SignedWeightedGraph& g);
Rational tree_constant(const SignedWeightedGraph& g, std::span<const Rational> t);

/// Index in the limits of vanishing and of diverging red weights, from
/// component counts alone.
struct IndexLimits {
  SpectralIndex small_t;
  SpectralIndex large_t;
};

IndexLimits index_limits(const SignedWeightedGraph& g);

/// Exact inertia at t = eps*1 and t = K*1 compared with index_limits. A
/// mismatch points at a nongeneric direction and is reported, not thrown.
struct IndexLimitCheck {
  IndexLimits expected;
  Rational epsilon;
  Rational big;
  SpectralIndex at_epsilon;
  SpectralIndex at_big;
  bool small_matches = false;
  bool large_matches = false;
};

IndexLimitCheck check_index_limits(const SignedWeightedGraph& g);

/// Number of zero crossings along a red ray: N - c(G_+) - c(G_-) + 1.
int tau(const SignedWeightedGraph& g);

}  // namespace signlap
