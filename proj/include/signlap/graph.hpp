#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "signlap/rational.hpp"

namespace signlap {

using Vertex = int;

/// Edge as written in user input; the sign of the weight is its colour
/// (positive = black, negative = red).
struct EdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Rational weight;
};

/// Stored edge. `red_label` is the 1-based red index the edge was given in
/// the original input, or 0 for black edges and for edges produced by
/// merging parallel edges during contraction.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Rational weight;
  int red_label = 0;

  bool is_red() const { return weight < 0; }
  bool is_black() const { return weight > 0; }
};

/// Simple undirected graph with nonzero rational edge weights.
///
/// Red edges of user input are labelled 1..R in edge-sequence order. Graph
/// minors keep the labels of surviving red edges, so a minor may carry a
/// non-contiguous label set; the "red variables" of a graph are always its
/// labelled edges in ascending label order.
class SignedWeightedGraph {
 public:
  SignedWeightedGraph() = default;

  /// Validates the input invariants (ids in range, no self-loops, no zero
  /// weights, no duplicate pairs) and labels red edges in order.
  SignedWeightedGraph(int vertex_count, std::span<const EdgeSpec> edges);
  SignedWeightedGraph(int vertex_count, std::initializer_list<EdgeSpec> edges)
      : SignedWeightedGraph(vertex_count, std::span<const EdgeSpec>(edges.begin(), edges.size())) {}

  /// Builds a graph keeping caller-supplied red labels (used for minors).
  static SignedWeightedGraph with_labels(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Positions (into edges()) of labelled red edges, ordered by label.
  const std::vector<std::size_t>& red_positions() const { return red_positions_; }
  std::vector<int> red_labels() const;
  int red_count() const { return static_cast<int>(red_positions_.size()); }
  int black_count() const;

  /// Position of the edge carrying `label`, if it survives in this graph.
  std::optional<std::size_t> find_red(int label) const;

  /// Per-edge weights with labelled red edge k reweighted to -t_k (t_k >= 0;
  /// a zero magnitude switches the edge off).
  std::vector<Rational> effective_weights(std::span<const Rational> t) const;

 private:
  void index_red_edges();

  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> red_positions_;
};

struct ComponentCounts {
  int whole = 0;     // c(G)
  int positive = 0;  // c(G_+), black edges only
  int negative = 0;  // c(G_-), red edges only
  friend bool operator==(const ComponentCounts&, const ComponentCounts&) = default;
};

/// Component counts over the full vertex set; isolated vertices count.
ComponentCounts component_counts(const SignedWeightedGraph& g);

bool is_connected(const SignedWeightedGraph& g);

/// Connected-component id per vertex using only edges accepted by `keep`.
std::vector<int> component_ids(const SignedWeightedGraph& g,
                               const std::function<bool(const Edge&)>& keep);

struct MinorResult {
  SignedWeightedGraph graph;
  /// Original vertex -> vertex of the minor.
  std::vector<Vertex> vertex_map;
};

/// Contracts the red edges labelled in `contract` and deletes those in
/// `remove`. Contraction is simultaneous; parallel edges are merged by
/// summing weights (a zero sum drops the edge), self-loops are discarded.
/// Minor vertices are numbered by the smallest original vertex they absorb.
MinorResult minor_with_map(const SignedWeightedGraph& g, std::span<const int> contract,
                           std::span<const int> remove);

SignedWeightedGraph minor(const SignedWeightedGraph& g, std::span<const int> contract,
                          std::span<const int> remove);

/// Sorted (u, v, weight) triples with u < v; equality of this form is graph
/// equality for minors that share a contraction history.
std::vector<std::tuple<Vertex, Vertex, Rational>> canonical_edges(const SignedWeightedGraph& g);

// ---------------------------------------------------------------------------
// Exhaustive enumeration (test oracles, small graphs only).

inline constexpr int kMaxEnumerationVertices = 12;

struct SpanningTree {
  std::vector<std::size_t> edges;  // positions into g.edges()
  Rational weight_product;         // pi(T)
  Rational black_product;          // product over black edges only
};

struct SpanningForest {
  std::vector<std::size_t> edges;
  std::vector<int> component_of;  // per vertex, 0..k-1 ordered by smallest vertex
  int components = 0;
  Rational weight_product;
};

struct SignedForest {
  SpanningForest forest;
  int sign = 1;  // epsilon(F)
};

/// Calls `visit` with the edge positions of every spanning forest having
/// exactly `components` trees. Recursive include/exclude over the edge list.
void for_each_spanning_forest(const SignedWeightedGraph& g, int components,
                              const std::function<void(std::span<const std::size_t>)>& visit);

/// All spanning trees; empty when g is disconnected. Requires N <= 12.
std::vector<SpanningTree> spanning_trees(const SignedWeightedGraph& g);

/// Spanning 2-forests in which each tree holds exactly one vertex of U and
/// one of W, with the sign of the induced W -> U matching relative to the
/// given enumerations of U and W.
std::vector<SignedForest> spanning_2forests(const SignedWeightedGraph& g, std::array<Vertex, 2> U,
                                            std::array<Vertex, 2> W);

/// Sum of sign * pi(F) over spanning_2forests(g, U, W).
Rational signed_forest_sum(const SignedWeightedGraph& g, std::array<Vertex, 2> U,
                           std::array<Vertex, 2> W);

}  // namespace signlap
