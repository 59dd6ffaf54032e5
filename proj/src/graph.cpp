#include "signlap/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "signlap/detail/union_find.hpp"
#include "signlap/errors.hpp"

namespace signlap {

namespace {

std::string describe(std::size_t position, Vertex u, Vertex v) {
  return "edge #" + std::to_string(position) + " (" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void validate(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count <= 0) throw InvalidInput("vertex count must be positive");
  std::set<std::pair<Vertex, Vertex>> seen;
  std::set<int> labels;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count)
      throw InvalidInput(describe(i, e.u, e.v) + ": vertex id out of range");
    if (e.u == e.v) throw InvalidInput(describe(i, e.u, e.v) + ": self-loop");
    if (e.weight == 0) throw InvalidInput(describe(i, e.u, e.v) + ": zero weight");
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
      throw InvalidInput(describe(i, e.u, e.v) + ": duplicate edge");
    if (e.red_label < 0) throw InvalidInput(describe(i, e.u, e.v) + ": negative red label");
    if (e.red_label > 0 && !labels.insert(e.red_label).second)
      throw InvalidInput(describe(i, e.u, e.v) + ": repeated red label");
  }
}

}  // namespace

SignedWeightedGraph::SignedWeightedGraph(int vertex_count, std::span<const EdgeSpec> edges)
    : vertex_count_(vertex_count) {
  edges_.reserve(edges.size());
  int next_label = 1;
  for (const auto& spec : edges) {
    Edge e{spec.u, spec.v, spec.weight, 0};
    if (e.weight < 0) e.red_label = next_label++;
    edges_.push_back(std::move(e));
  }
  validate(vertex_count_, edges_);
  index_red_edges();
}

SignedWeightedGraph SignedWeightedGraph::with_labels(int vertex_count, std::vector<Edge> edges) {
  validate(vertex_count, edges);
  SignedWeightedGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.index_red_edges();
  return g;
}

void SignedWeightedGraph::index_red_edges() {
  red_positions_.clear();
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].red_label > 0) red_positions_.push_back(i);
  std::sort(red_positions_.begin(), red_positions_.end(), [this](std::size_t a, std::size_t b) {
    return edges_[a].red_label < edges_[b].red_label;
  });
}

std::vector<int> SignedWeightedGraph::red_labels() const {
  std::vector<int> out;
  out.reserve(red_positions_.size());
  for (auto p : red_positions_) out.push_back(edges_[p].red_label);
  return out;
}

int SignedWeightedGraph::black_count() const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_black(); }));
}

std::optional<std::size_t> SignedWeightedGraph::find_red(int label) const {
  for (auto p : red_positions_)
    if (edges_[p].red_label == label) return p;
  return std::nullopt;
}

std::vector<Rational> SignedWeightedGraph::effective_weights(std::span<const Rational> t) const {
  if (t.size() != red_positions_.size())
    throw InvalidInput("red assignment has length " + std::to_string(t.size()) + ", graph has " +
                       std::to_string(red_positions_.size()) + " red edges");
  std::vector<Rational> w;
  w.reserve(edges_.size());
  for (const auto& e : edges_) w.push_back(e.weight);
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k] < 0) throw InvalidInput("red magnitude t_" + std::to_string(k + 1) + " is negative");
    w[red_positions_[k]] = -t[k];
  }
  return w;
}

std::vector<int> component_ids(const SignedWeightedGraph& g, const std::function<bool(const Edge&)>& keep) {
  detail::UnionFind uf(g.vertex_count());
  for (const auto& e : g.edges())
    if (keep(e)) uf.unite(e.u, e.v);
  std::vector<int> ids(g.vertex_count(), -1);
  std::map<int, int> root_to_id;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = root_to_id.emplace(uf.find(v), static_cast<int>(root_to_id.size()));
    ids[v] = it->second;
  }
  return ids;
}

namespace {

int count_components(const SignedWeightedGraph& g, const std::function<bool(const Edge&)>& keep) {
  const auto ids = component_ids(g, keep);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

}  // namespace

ComponentCounts component_counts(const SignedWeightedGraph& g) {
  return ComponentCounts{
      count_components(g, [](const Edge& e) { return e.weight != 0; }),
      count_components(g, [](const Edge& e) { return e.is_black(); }),
      count_components(g, [](const Edge& e) { return e.is_red(); }),
  };
}

bool is_connected(const SignedWeightedGraph& g) {
  return count_components(g, [](const Edge& e) { return e.weight != 0; }) == 1;
}

MinorResult minor_with_map(const SignedWeightedGraph& g, std::span<const int> contract,
                           std::span<const int> remove) {
  std::set<std::size_t> contracted, removed;
  for (int label : contract) {
    auto pos = g.find_red(label);
    if (!pos) throw InvalidInput("no red edge labelled " + std::to_string(label) + " to contract");
    if (!contracted.insert(*pos).second) throw InvalidInput("red label repeated in contraction set");
  }
  for (int label : remove) {
    auto pos = g.find_red(label);
    if (!pos) throw InvalidInput("no red edge labelled " + std::to_string(label) + " to delete");
    if (contracted.count(*pos)) throw InvalidInput("red edge " + std::to_string(label) + " both contracted and deleted");
    if (!removed.insert(*pos).second) throw InvalidInput("red label repeated in deletion set");
  }

  const int n = g.vertex_count();
  detail::UnionFind uf(n);
  for (auto p : contracted) uf.unite(g.edges()[p].u, g.edges()[p].v);

  MinorResult out;
  out.vertex_map.assign(n, -1);
  std::map<int, Vertex> root_to_vertex;
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = root_to_vertex.emplace(uf.find(v), static_cast<Vertex>(root_to_vertex.size()));
    out.vertex_map[v] = it->second;
  }
  const int minor_n = static_cast<int>(root_to_vertex.size());

  std::vector<Edge> edges;
  std::map<std::pair<Vertex, Vertex>, std::size_t> slot;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (contracted.count(i) || removed.count(i)) continue;
    const Edge& e = g.edges()[i];
    Vertex a = out.vertex_map[e.u], b = out.vertex_map[e.v];
    if (a == b) continue;  // self-loop after contraction
    if (a > b) std::swap(a, b);
    auto [it, inserted] = slot.emplace(std::make_pair(a, b), edges.size());
    if (inserted) {
      edges.push_back(Edge{a, b, e.weight, e.red_label});
    } else {
      Edge& merged = edges[it->second];
      merged.weight += e.weight;
      merged.red_label = 0;
    }
  }
  std::erase_if(edges, [](const Edge& e) { return e.weight == 0; });
  out.graph = SignedWeightedGraph::with_labels(minor_n, std::move(edges));
  return out;
}

SignedWeightedGraph minor(const SignedWeightedGraph& g, std::span<const int> contract,
                          std::span<const int> remove) {
  return minor_with_map(g, contract, remove).graph;
}

std::vector<std::tuple<Vertex, Vertex, Rational>> canonical_edges(const SignedWeightedGraph& g) {
  std::vector<std::tuple<Vertex, Vertex, Rational>> out;
  for (const auto& e : g.edges()) out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), e.weight);
  std::sort(out.begin(), out.end());
  return out;
}

void for_each_spanning_forest(const SignedWeightedGraph& g, int components,
                              const std::function<void(std::span<const std::size_t>)>& visit) {
  const int n = g.vertex_count();
  if (n > kMaxEnumerationVertices)
    throw InvalidInput("exhaustive enumeration is limited to " + std::to_string(kMaxEnumerationVertices) +
                       " vertices");
  if (components < 1 || components > n) return;
  const std::size_t needed = static_cast<std::size_t>(n - components);
  const auto& edges = g.edges();
  detail::UnionFind uf(n);
  std::vector<std::size_t> chosen;
  chosen.reserve(needed);

  std::function<void(std::size_t)> recurse = [&](std::size_t next) {
    if (chosen.size() == needed) {
      visit(chosen);
      return;
    }
    if (edges.size() - next < needed - chosen.size()) return;
    const Edge& e = edges[next];
    if (uf.unite(e.u, e.v)) {  // contract branch
      chosen.push_back(next);
      recurse(next + 1);
      chosen.pop_back();
      uf.rollback();
    }
    recurse(next + 1);  // delete branch
  };
  recurse(0);
}

std::vector<SpanningTree> spanning_trees(const SignedWeightedGraph& g) {
  std::vector<SpanningTree> out;
  for_each_spanning_forest(g, 1, [&](std::span<const std::size_t> chosen) {
    SpanningTree t;
    t.edges.assign(chosen.begin(), chosen.end());
    t.weight_product = 1;
    t.black_product = 1;
    for (auto p : chosen) {
      const Rational& w = g.edges()[p].weight;
      t.weight_product *= w;
      if (w > 0) t.black_product *= w;
    }
    out.push_back(std::move(t));
  });
  return out;
}

namespace {

std::vector<int> forest_components(const SignedWeightedGraph& g, std::span<const std::size_t> chosen) {
  detail::UnionFind uf(g.vertex_count());
  for (auto p : chosen) uf.unite(g.edges()[p].u, g.edges()[p].v);
  std::vector<int> ids(g.vertex_count());
  std::map<int, int> root_to_id;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, inserted] = root_to_id.emplace(uf.find(v), static_cast<int>(root_to_id.size()));
    ids[v] = it->second;
  }
  return ids;
}

}  // namespace

std::vector<SignedForest> spanning_2forests(const SignedWeightedGraph& g, std::array<Vertex, 2> U,
                                            std::array<Vertex, 2> W) {
  for (Vertex x : {U[0], U[1], W[0], W[1]})
    if (x < 0 || x >= g.vertex_count()) throw InvalidInput("forest endpoint out of range");
  if (U[0] == U[1] || W[0] == W[1]) throw InvalidInput("U and W must each hold two distinct vertices");

  std::vector<SignedForest> out;
  for_each_spanning_forest(g, 2, [&](std::span<const std::size_t> chosen) {
    const auto comp = forest_components(g, chosen);
    // each tree must contain exactly one vertex of U and one of W
    if (comp[U[0]] == comp[U[1]] || comp[W[0]] == comp[W[1]]) return;
    SignedForest f;
    f.forest.edges.assign(chosen.begin(), chosen.end());
    f.forest.component_of = comp;
    f.forest.components = 2;
    f.forest.weight_product = 1;
    for (auto p : chosen) f.forest.weight_product *= g.edges()[p].weight;
    // W[0] paired with U[0] is the identity matching
    f.sign = comp[W[0]] == comp[U[0]] ? 1 : -1;
    out.push_back(std::move(f));
  });
  return out;
}

Rational signed_forest_sum(const SignedWeightedGraph& g, std::array<Vertex, 2> U, std::array<Vertex, 2> W) {
  Rational sum = 0;
  for (const auto& f : spanning_2forests(g, U, W)) sum += f.sign * f.forest.weight_product;
  return sum;
}

}  // namespace signlap
