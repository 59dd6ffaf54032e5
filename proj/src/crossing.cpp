#include "signlap/crossing.hpp"

#include <algorithm>
#include <bit>

#include "signlap/detail/union_find.hpp"
#include "signlap/errors.hpp"
#include "signlap/spectral.hpp"

namespace signlap {

CrossingPolynomial::CrossingPolynomial(int red_count, std::vector<Rational> coefficients)
    : red_count_(red_count), coeffs_(std::move(coefficients)) {
  if (red_count < 0 || red_count > 30) throw InvalidInput("red variable count out of range");
  if (coeffs_.size() != (std::size_t{1} << red_count))
    throw InvalidInput("crossing polynomial needs 2^R coefficients");
}

std::string mask_to_string(RedMask mask, int red_count) {
  std::string out(static_cast<std::size_t>(red_count), '0');
  for (int k = 0; k < red_count; ++k)
    if (mask & (RedMask{1} << k)) out[static_cast<std::size_t>(k)] = '1';
  return out;
}

RedMask mask_from_string(std::string_view bits) {
  if (bits.size() > 30) throw InvalidInput("red mask too long");
  RedMask mask = 0;
  for (std::size_t k = 0; k < bits.size(); ++k) {
    if (bits[k] == '1')
      mask |= RedMask{1} << k;
    else if (bits[k] != '0')
      throw InvalidInput("red mask must be a binary string: '" + std::string(bits) + "'");
  }
  return mask;
}

namespace {

std::vector<int> labels_in(const std::vector<int>& labels, RedMask mask, bool inside) {
  std::vector<int> out;
  for (std::size_t k = 0; k < labels.size(); ++k)
    if (((mask >> k) & 1U) == (inside ? 1U : 0U)) out.push_back(labels[k]);
  return out;
}

}  // namespace

bool red_subset_has_cycle(const SignedWeightedGraph& g, RedMask mask) {
  detail::UnionFind uf(g.vertex_count());
  const auto& pos = g.red_positions();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    if (!((mask >> k) & 1U)) continue;
    const Edge& e = g.edges()[pos[k]];
    if (!uf.unite(e.u, e.v)) return true;
  }
  return false;
}

CrossingPolynomial coefficients(const SignedWeightedGraph& g, int max_red) {
  const int R = g.red_count();
  if (R > max_red)
    throw InvalidInput("graph has " + std::to_string(R) + " red edges; the limit is " + std::to_string(max_red));
  const auto labels = g.red_labels();
  const bool connected = is_connected(g);
  std::vector<Rational> coeffs(std::size_t{1} << R);
  for (RedMask mask = 0; mask < (RedMask{1} << R); ++mask) {
    if (!connected || red_subset_has_cycle(g, mask)) continue;
    const auto contract = labels_in(labels, mask, true);
    const auto remove = labels_in(labels, mask, false);
    coeffs[mask] = tree_constant(minor(g, contract, remove));
  }
  return CrossingPolynomial(R, std::move(coeffs));
}

CrossingPolynomial coefficients_by_enumeration(const SignedWeightedGraph& g) {
  const int R = g.red_count();
  std::vector<Rational> coeffs(std::size_t{1} << R);
  const auto& pos = g.red_positions();
  for (const auto& tree : spanning_trees(g)) {
    RedMask mask = 0;
    for (auto p : tree.edges) {
      auto it = std::find(pos.begin(), pos.end(), p);
      if (it != pos.end()) mask |= RedMask{1} << (it - pos.begin());
    }
    coeffs[mask] += tree.black_product;
  }
  return CrossingPolynomial(R, std::move(coeffs));
}

Rational evaluate(const CrossingPolynomial& p, std::span<const Rational> t) {
  if (t.size() != static_cast<std::size_t>(p.red_count()))
    throw InvalidInput("evaluation point has length " + std::to_string(t.size()) + ", expected " +
                       std::to_string(p.red_count()));
  Rational sum = 0;
  for (RedMask mask = 0; mask < p.coefficients().size(); ++mask) {
    if (p.coefficient(mask) == 0) continue;
    Rational term = p.coefficient(mask);
    for (int k = 0; k < p.red_count(); ++k)
      if (mask & (RedMask{1} << k)) term *= t[static_cast<std::size_t>(k)];
    sum += std::popcount(mask) % 2 == 0 ? term : Rational(-term);
  }
  return sum;
}

std::optional<DegreeRange> degree_support(const CrossingPolynomial& p, const SignedWeightedGraph& g) {
  std::vector<bool> present(static_cast<std::size_t>(p.red_count()) + 1, false);
  bool any = false;
  for (RedMask mask = 0; mask < p.coefficients().size(); ++mask)
    if (p.coefficient(mask) != 0) {
      present[static_cast<std::size_t>(std::popcount(mask))] = true;
      any = true;
    }
  if (!any) return std::nullopt;
  const auto c = component_counts(g);
  const DegreeRange expected{c.positive - 1, g.vertex_count() - c.negative};
  for (int k = 0; k < static_cast<int>(present.size()); ++k) {
    const bool inside = k >= expected.low && k <= expected.high;
    if (present[static_cast<std::size_t>(k)] != inside)
      throw InternalFault("crossing polynomial has " + std::string(inside ? "no" : "a") + " term of degree " +
                          std::to_string(k) + " but the degree bounds are [" + std::to_string(expected.low) + ", " +
                          std::to_string(expected.high) + "]");
  }
  if (expected.high >= static_cast<int>(present.size()))
    throw InternalFault("degree bound exceeds the number of red variables");
  return expected;
}

Polynomial ray_polynomial(const CrossingPolynomial& p, std::span<const Rational> alpha) {
  if (alpha.size() != static_cast<std::size_t>(p.red_count()))
    throw InvalidInput("ray direction has length " + std::to_string(alpha.size()) + ", expected " +
                       std::to_string(p.red_count()));
  for (const auto& a : alpha)
    if (a <= 0) throw InvalidInput("ray direction must be componentwise positive");
  std::vector<Rational> c(static_cast<std::size_t>(p.red_count()) + 1);
  for (RedMask mask = 0; mask < p.coefficients().size(); ++mask) {
    if (p.coefficient(mask) == 0) continue;
    Rational term = p.coefficient(mask);
    for (int k = 0; k < p.red_count(); ++k)
      if (mask & (RedMask{1} << k)) term *= alpha[static_cast<std::size_t>(k)];
    const int degree = std::popcount(mask);
    c[static_cast<std::size_t>(degree)] += degree % 2 == 0 ? term : Rational(-term);
  }
  return Polynomial(std::move(c));
}

int RayCrossings::total_multiplicity() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

RayCrossings ray_crossings(const CrossingPolynomial& p, std::span<const Rational> alpha) {
  const Polynomial q = ray_polynomial(p, alpha);
  if (q.is_zero()) throw InternalFault("ray polynomial vanishes identically");
  RayCrossings out;
  out.direction.assign(alpha.begin(), alpha.end());
  for (const auto& [factor, multiplicity] : square_free_decomposition(q.without_zero_roots())) {
    for (auto& root : positive_roots(factor, kRootWidth)) {
      out.roots.push_back(Crossing{std::move(root.lower), std::move(root.upper), std::move(root.exact), root.approx,
                                   multiplicity});
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Crossing& a, const Crossing& b) { return a.lower < b.lower; });
  return out;
}

}  // namespace signlap
