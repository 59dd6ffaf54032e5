#include "signlap/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signlap/errors.hpp"

namespace signlap {

std::string to_string(const SpectralIndex& index) {
  return "(" + std::to_string(index.negative) + ", " + std::to_string(index.zero) + ", " +
         std::to_string(index.positive) + ")";
}

namespace {

RationalMatrix build_laplacian(int n, const std::vector<Edge>& edges, std::span<const Rational> weights) {
  auto L = RationalMatrix::square(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto u = static_cast<std::size_t>(edges[k].u);
    const auto v = static_cast<std::size_t>(edges[k].v);
    const Rational& w = weights[k];
    L(u, v) += w;
    L(v, u) += w;
    L(u, u) -= w;
    L(v, v) -= w;
  }
  return L;
}

void require_connected(const SignedWeightedGraph& g, const char* what) {
  if (!is_connected(g)) throw InvalidInput(std::string(what) + " requires a connected graph");
}

}  // namespace

RationalMatrix laplacian(const SignedWeightedGraph& g) {
  std::vector<Rational> w;
  w.reserve(g.edges().size());
  for (const auto& e : g.edges()) w.push_back(e.weight);
  return build_laplacian(g.vertex_count(), g.edges(), w);
}

RationalMatrix laplacian(const SignedWeightedGraph& g, std::span<const Rational> t) {
  return build_laplacian(g.vertex_count(), g.edges(), g.effective_weights(t));
}

SpectralIndex inertia(const RationalMatrix& input) {
  if (!input.is_symmetric()) throw InvalidInput("inertia requires a symmetric matrix");
  RationalMatrix a = input;
  std::vector<std::size_t> live(a.rows());
  std::iota(live.begin(), live.end(), std::size_t{0});
  SpectralIndex out;

  auto drop = [&live](std::size_t idx) { live.erase(std::find(live.begin(), live.end(), idx)); };

  while (!live.empty()) {
    auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a(i, i) != 0; });
    if (diag != live.end()) {
      const std::size_t k = *diag;
      const Rational d = a(k, k);
      (d > 0 ? out.positive : out.negative) += 1;
      drop(k);
      for (auto i : live) {
        if (a(i, k) == 0) continue;
        const Rational f = a(i, k) / d;
        for (auto j : live) a(i, j) -= f * a(k, j);
      }
      continue;
    }
    // Zero diagonal: look for a nonzero off-diagonal pair for a 2x2 pivot.
    std::size_t pi = 0, pj = 0;
    bool found = false;
    for (std::size_t x = 0; x < live.size() && !found; ++x)
      for (std::size_t y = x + 1; y < live.size() && !found; ++y)
        if (a(live[x], live[y]) != 0) {
          pi = live[x];
          pj = live[y];
          found = true;
        }
    if (!found) {
      out.zero += static_cast<int>(live.size());
      break;
    }
    // [[0, b], [b, 0]] has eigenvalues +b and -b.
    out.positive += 1;
    out.negative += 1;
    const Rational b = a(pi, pj);
    drop(pi);
    drop(pj);
    // Schur complement with inverse [[0, 1/b], [1/b, 0]].
    std::vector<Rational> ci, cj;
    for (auto r : live) {
      ci.push_back(a(r, pi));
      cj.push_back(a(r, pj));
    }
    for (std::size_t x = 0; x < live.size(); ++x)
      for (std::size_t y = 0; y < live.size(); ++y) {
        const Rational delta = (ci[x] * cj[y] + cj[x] * ci[y]) / b;
        if (delta != 0) a(live[x], live[y]) -= delta;
      }
  }
  return out;
}

std::vector<double> eigenvalues(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw InvalidInput("eigenvalues of a non-square matrix");
  const auto n = static_cast<Eigen::Index>(m.rows());
  if (n == 0) return {};
  Eigen::MatrixXd dense(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      dense(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).get_d();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalFault("symmetric eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end());
  return out;
}

double zero_tolerance(std::span<const double> sorted_eigenvalues, double relative) {
  double norm = 0;
  for (double x : sorted_eigenvalues) norm = std::max(norm, std::abs(x));
  return relative * std::max(1.0, norm);
}

SpectralIndex float_index(std::span<const double> eigenvalues, double tol) {
  SpectralIndex out;
  for (double x : eigenvalues) {
    if (x > tol)
      ++out.positive;
    else if (x < -tol)
      ++out.negative;
    else
      ++out.zero;
  }
  return out;
}

namespace {

Rational tree_constant_of(const RationalMatrix& L) {
  const std::size_t n = L.rows();
  if (n <= 1) return 1;
  const std::size_t first[] = {0};
  const Rational det = determinant(L.without(first, first));
  return (n - 1) % 2 == 0 ? det : Rational(-det);
}

}  // namespace

Rational tree_constant(const SignedWeightedGraph& g) { return tree_constant_of(laplacian(g)); }

Rational tree_constant(const SignedWeightedGraph& g, std::span<const Rational> t) {
  return tree_constant_of(laplacian(g, t));
}

IndexLimits index_limits(const SignedWeightedGraph& g) {
  require_connected(g, "index_limits");
  const int n = g.vertex_count();
  const auto c = component_counts(g);
  IndexLimits out;
  out.small_t = SpectralIndex{n - c.positive, 1, c.positive - 1};
  out.large_t = SpectralIndex{c.negative - 1, 1, n - c.negative};
  return out;
}

IndexLimitCheck check_index_limits(const SignedWeightedGraph& g) {
  IndexLimitCheck out;
  out.expected = index_limits(g);
  Rational max_w = 1, min_w = 1;
  bool any_black = false;
  for (const auto& e : g.edges()) {
    if (!e.is_black()) continue;
    if (!any_black) {
      max_w = min_w = e.weight;
      any_black = true;
    }
    max_w = std::max(max_w, e.weight);
    min_w = std::min(min_w, e.weight);
  }
  const int n = g.vertex_count();
  out.epsilon = Rational(1) / (Rational(64 * n) * max_w);
  out.big = Rational(64 * n) * max_w / min_w;
  const std::vector<Rational> small(static_cast<std::size_t>(g.red_count()), out.epsilon);
  const std::vector<Rational> large(static_cast<std::size_t>(g.red_count()), out.big);
  out.at_epsilon = inertia(laplacian(g, small));
  out.at_big = inertia(laplacian(g, large));
  out.small_matches = out.at_epsilon == out.expected.small_t;
  out.large_matches = out.at_big == out.expected.large_t;
  return out;
}

int tau(const SignedWeightedGraph& g) {
  require_connected(g, "tau");
  const auto c = component_counts(g);
  return g.vertex_count() - c.positive - c.negative + 1;
}

}  // namespace signlap
