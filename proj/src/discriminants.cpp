#include "signlap/discriminants.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "signlap/errors.hpp"

namespace signlap {

namespace {

void require_two_red(int red_count, const char* what) {
  if (red_count != 2)
    throw InvalidInput(std::string(what) + " needs exactly two red edges, got " + std::to_string(red_count));
}

// Coefficients in the A_{xy} naming: A10 multiplies the first variable.
struct TwoByTwo {
  const Rational& a00;
  const Rational& a10;
  const Rational& a01;
  const Rational& a11;
};

TwoByTwo corners(const CrossingPolynomial& p) {
  return {p.coefficient(0b00), p.coefficient(0b01), p.coefficient(0b10), p.coefficient(0b11)};
}

}  // namespace

Rational discriminant2(const CrossingPolynomial& p) {
  require_two_red(p.red_count(), "discriminant2");
  const auto c = corners(p);
  return c.a11 * c.a00 - c.a01 * c.a10;
}

std::optional<double> gap(const CrossingPolynomial& p) {
  const Rational delta = discriminant2(p);
  const auto c = corners(p);
  if (c.a11 == 0) return std::nullopt;
  if (delta == 0) return 0.0;
  return std::sqrt(2.0 * Rational(abs(delta)).get_d()) / c.a11.get_d();
}

std::optional<std::pair<Rational, Rational>> degenerate_point(const CrossingPolynomial& p) {
  if (discriminant2(p) != 0) return std::nullopt;
  const auto c = corners(p);
  if (c.a11 <= 0) return std::nullopt;
  return std::make_pair(Rational(c.a01 / c.a11), Rational(c.a10 / c.a11));
}

std::pair<std::array<Vertex, 2>, std::array<Vertex, 2>> forest_terminals(std::array<Vertex, 2> first,
                                                                          std::array<Vertex, 2> second) {
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  if (first == second) return {first, second};
  for (Vertex s : first) {
    if (s != second[0] && s != second[1]) continue;
    const Vertex a = first[0] == s ? first[1] : first[0];
    const Vertex b = second[0] == s ? second[1] : second[0];
    return {{s, a}, {s, b}};
  }
  return {first, second};
}

Rational forest_sum_2(const SignedWeightedGraph& g) {
  require_two_red(g.red_count(), "forest_sum_2");
  const Edge& x = g.edges()[g.red_positions()[0]];
  const Edge& y = g.edges()[g.red_positions()[1]];
  const auto [U, W] = forest_terminals({x.u, x.v}, {y.u, y.v});
  return signed_forest_sum(g, U, W);
}

Rational laplacian_minor(const RationalMatrix& m, std::span<const std::size_t> U, std::span<const std::size_t> W) {
  if (U.size() != W.size()) throw InvalidInput("minor needs as many removed rows as columns");
  return determinant(m.without(U, W));
}

bool dodgson_check(const RationalMatrix& m, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw InvalidInput("Dodgson identity needs a square matrix");
  if (i == j || k == l) throw InvalidInput("Dodgson identity needs two distinct rows and two distinct columns");
  if (std::max({i, j, k, l}) >= n) throw InvalidInput("Dodgson index out of range");
  if (i > j) std::swap(i, j);
  if (k > l) std::swap(k, l);
  auto minor_det = [&m](std::initializer_list<std::size_t> rows, std::initializer_list<std::size_t> cols) {
    return determinant(m.without(std::span(rows.begin(), rows.size()), std::span(cols.begin(), cols.size())));
  };
  const Rational full = determinant(m);
  const Rational lhs = full * minor_det({i, j}, {k, l}) - minor_det({i}, {k}) * minor_det({j}, {l});
  const Rational rhs = -(minor_det({i}, {l}) * minor_det({j}, {k}));
  return lhs == rhs;
}

std::optional<CycleBasis> red_separated_cycle_basis(const SignedWeightedGraph& g) {
  require_two_red(g.red_count(), "cycle_minor");
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const std::size_t x = g.red_positions()[0];
  const std::size_t y = g.red_positions()[1];

  // BFS spanning tree of g without x and y.
  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (e == x || e == y) continue;
    incident[static_cast<std::size_t>(edges[e].u)].push_back(e);
    incident[static_cast<std::size_t>(edges[e].v)].push_back(e);
  }
  std::vector<long> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), -1);
  std::vector<bool> in_tree(edges.size(), false);
  std::queue<Vertex> frontier;
  depth[0] = 0;
  frontier.push(0);
  int reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (auto e : incident[static_cast<std::size_t>(v)]) {
      const Vertex w = edges[e].u == v ? edges[e].v : edges[e].u;
      if (depth[static_cast<std::size_t>(w)] >= 0) continue;
      depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(v)] + 1;
      parent_edge[static_cast<std::size_t>(w)] = static_cast<long>(e);
      in_tree[e] = true;
      ++reached;
      frontier.push(w);
    }
  }
  if (reached != n) return std::nullopt;
  const long corank = static_cast<long>(edges.size()) - n + 1;
  if (corank < 2) return std::nullopt;

  auto parent_of = [&](Vertex v) {
    const Edge& e = edges[static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(v)])];
    return e.u == v ? e.v : e.u;
  };
  // Orientation of every edge is min -> max.
  auto traverse = [&](std::vector<int>& cycle, std::size_t e, Vertex from) {
    const Vertex lo = std::min(edges[e].u, edges[e].v);
    cycle[e] += from == lo ? 1 : -1;
  };
  auto fundamental_cycle = [&](std::size_t e) {
    std::vector<int> cycle(edges.size(), 0);
    Vertex start = std::min(edges[e].u, edges[e].v);
    Vertex end = std::max(edges[e].u, edges[e].v);
    traverse(cycle, e, start);
    // Walk end -> start through the tree: climb from both sides to the LCA.
    Vertex a = end, b = start;
    std::vector<std::pair<std::size_t, Vertex>> down;  // edges on the start side, traversed later
    while (a != b) {
      if (depth[static_cast<std::size_t>(a)] >= depth[static_cast<std::size_t>(b)]) {
        const auto pe = static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(a)]);
        traverse(cycle, pe, a);
        a = parent_of(a);
      } else {
        const auto pe = static_cast<std::size_t>(parent_edge[static_cast<std::size_t>(b)]);
        down.emplace_back(pe, parent_of(b));  // traversed from the parent down to b
        b = parent_of(b);
      }
    }
    for (auto it = down.rbegin(); it != down.rend(); ++it) traverse(cycle, it->first, it->second);
    return cycle;
  };

  CycleBasis basis;
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (e != x && e != y && !in_tree[e]) basis.cycles.push_back(fundamental_cycle(e));
  basis.cycles.push_back(fundamental_cycle(x));
  basis.cycles.push_back(fundamental_cycle(y));
  if (static_cast<long>(basis.cycles.size()) != corank) throw InternalFault("cycle basis has the wrong size");
  return basis;
}

std::optional<Rational> cycle_minor(const SignedWeightedGraph& g) {
  const auto basis = red_separated_cycle_basis(g);
  if (!basis) return std::nullopt;
  const std::size_t c = basis->cycles.size();
  auto gram = RationalMatrix::square(c);
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b) {
      long dot = 0;
      for (std::size_t e = 0; e < basis->cycles[a].size(); ++e) dot += basis->cycles[a][e] * basis->cycles[b][e];
      gram(a, b) = dot;
    }
  const std::size_t row[] = {c - 1};
  const std::size_t col[] = {c - 2};
  return determinant(gram.without(row, col));
}

Wildcard::Wildcard(std::string pattern) : pattern_(std::move(pattern)) {
  if (pattern_.size() > 30) throw InvalidInput("wildcard too long");
  int stars = 0;
  for (std::size_t k = 0; k < pattern_.size(); ++k) {
    switch (pattern_[k]) {
      case '*':
        (stars == 0 ? first_ : second_) = static_cast<int>(k);
        ++stars;
        break;
      case '1':
        base_ |= RedMask{1} << k;
        break;
      case '0':
        break;
      default:
        throw InvalidInput("wildcard '" + pattern_ + "' may only contain 0, 1 and *");
    }
  }
  if (stars != 2) throw InvalidInput("wildcard '" + pattern_ + "' must contain exactly two '*'");
}

std::vector<Wildcard> stacked_deck(int red_count) {
  if (red_count < 2) throw InvalidInput("stacked deck needs at least two red variables");
  std::vector<Wildcard> deck;
  for (int j = 1; j < red_count; ++j) {
    const int tail = red_count - j - 1;
    for (int i = 0; i < j; ++i)
      for (unsigned bits = 0; bits < (1U << tail); ++bits) {
        std::string p(static_cast<std::size_t>(red_count), '0');
        p[static_cast<std::size_t>(i)] = '*';
        p[static_cast<std::size_t>(j)] = '*';
        for (int k = 0; k < tail; ++k)
          if (bits & (1U << (tail - 1 - k))) p[static_cast<std::size_t>(j + 1 + k)] = '1';
        deck.emplace_back(std::move(p));
      }
  }
  return deck;
}

std::vector<Wildcard> all_wildcards(int red_count) {
  if (red_count < 2) throw InvalidInput("wildcards need at least two red variables");
  std::vector<Wildcard> out;
  for (int i = 0; i < red_count; ++i)
    for (int j = i + 1; j < red_count; ++j)
      for (unsigned bits = 0; bits < (1U << (red_count - 2)); ++bits) {
        std::string p(static_cast<std::size_t>(red_count), '0');
        unsigned next = 0;
        for (int k = 0; k < red_count; ++k) {
          if (k == i || k == j) {
            p[static_cast<std::size_t>(k)] = '*';
          } else {
            if (bits & (1U << next)) p[static_cast<std::size_t>(k)] = '1';
            ++next;
          }
        }
        out.emplace_back(std::move(p));
      }
  return out;
}

Rational wildcard_discriminant(const CrossingPolynomial& p, const Wildcard& w) {
  if (w.length() != p.red_count())
    throw InvalidInput("wildcard '" + w.pattern() + "' does not match R = " + std::to_string(p.red_count()));
  const RedMask b = w.base();
  const RedMask ei = RedMask{1} << w.first();
  const RedMask ej = RedMask{1} << w.second();
  return p.coefficient(b | ei | ej) * p.coefficient(b) - p.coefficient(b | ei) * p.coefficient(b | ej);
}

bool expands_to(const Factorization& f, const CrossingPolynomial& p) {
  if (f.C.size() != static_cast<std::size_t>(p.red_count())) return false;
  for (RedMask mask = 0; mask < p.coefficients().size(); ++mask) {
    Rational term = f.alpha;
    for (int k = 0; k < p.red_count(); ++k)
      if (mask & (RedMask{1} << k)) term *= f.C[static_cast<std::size_t>(k)];
    if (term != p.coefficient(mask)) return false;
  }
  return true;
}

std::optional<Factorization> factorize(const CrossingPolynomial& p) {
  if (p.coefficient(0) == 0) throw InvalidInput("factorize needs a nonzero constant term (G_+ connected)");
  if (p.red_count() >= 2)
    for (const auto& w : stacked_deck(p.red_count()))
      if (wildcard_discriminant(p, w) != 0) return std::nullopt;
  Factorization f;
  f.alpha = p.coefficient(0);
  for (int k = 0; k < p.red_count(); ++k) f.C.push_back(p.coefficient(RedMask{1} << k) / f.alpha);
  if (!expands_to(f, p)) return std::nullopt;
  return f;
}

std::optional<Rational> wildcard_forest_sum(const SignedWeightedGraph& g, const Wildcard& w) {
  if (w.length() != g.red_count())
    throw InvalidInput("wildcard '" + w.pattern() + "' does not match R = " + std::to_string(g.red_count()));
  // A contracted red cycle empties every tree class: all four coefficients vanish.
  if (red_subset_has_cycle(g, w.base())) return Rational(0);
  const auto labels = g.red_labels();
  std::vector<int> ones, zeros;
  for (int k = 0; k < w.length(); ++k) {
    if (k == w.first() || k == w.second()) continue;
    (w.pattern()[static_cast<std::size_t>(k)] == '1' ? ones : zeros).push_back(labels[static_cast<std::size_t>(k)]);
  }
  const auto derived = minor_with_map(g, ones, zeros);
  auto image = [&](int k) -> std::optional<std::array<Vertex, 2>> {
    const Edge& e = g.edges()[g.red_positions()[static_cast<std::size_t>(k)]];
    const Vertex a = derived.vertex_map[static_cast<std::size_t>(e.u)];
    const Vertex b = derived.vertex_map[static_cast<std::size_t>(e.v)];
    if (a == b) return std::nullopt;
    return std::array<Vertex, 2>{a, b};
  };
  const auto x = image(w.first());
  const auto y = image(w.second());
  if (!x || !y) return std::nullopt;
  const auto [U, W] = forest_terminals(*x, *y);
  return signed_forest_sum(derived.graph, U, W);
}

}  // namespace signlap
