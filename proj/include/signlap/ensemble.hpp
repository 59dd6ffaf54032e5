#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "signlap/graph.hpp"

namespace signlap {

enum class GraphModel { gnm, gnp };

struct EnsembleConfig {
  int N = 0;
  std::vector<int> M_values;
  long samples_per_M = 0;
  std::uint64_t master_seed = 0;
  /// gnp draws each edge with p = M / C(N,2), matching the mean edge count.
  GraphModel model = GraphModel::gnm;
};

/// Throws InvalidInput naming the first offending field.
void validate(const EnsembleConfig& config);

/// Stable per-sample seed, independent of scheduling.
std::uint64_t sample_seed(std::uint64_t master_seed, int M, long sample_index);

/// Uniform M-subset of the edges of K_N (partial Fisher-Yates over the
/// lexicographic edge list), two of them red. Blacks weigh 1, reds -1.
SignedWeightedGraph sample_graph(int N, int M, std::uint64_t seed);
/// G(N, p) with p = M / C(N,2); redrawn until it has at least two edges.
SignedWeightedGraph sample_graph_gnp(int N, int M, std::uint64_t seed);

inline constexpr int kDistanceClamp = 10;

/// "disconnected_plus", "adj", or the four sorted black distances between
/// endpoints of the two red edges ("1112", "12++").
std::string classify(const SignedWeightedGraph& g);

struct EnsembleRecord {
  long sample_id = 0;
  int N = 0;
  int M = 0;
  std::array<Vertex, 2> red1{};
  std::array<Vertex, 2> red2{};
  std::string class_label;
  bool gplus_connected = false;
  bool delta_zero = false;
  std::optional<double> gap;  // nullopt when A11 = 0
  double log10_gap = 0;       // -inf for a zero gap, NaN when undefined
};

EnsembleRecord analyze_sample(const SignedWeightedGraph& g, long sample_id, int M);

/// One slice of the ensemble. Records come back in sample order whatever
/// the thread count.
std::vector<EnsembleRecord> run_slice(const EnsembleConfig& config, int M, int threads = 1);
std::vector<EnsembleRecord> run(const EnsembleConfig& config, int threads = 1);

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const EnsembleRecord& record);

/// Fixed bins of width 0.1 over [-10, 10]; values below (including -inf)
/// land in the first bin, values above in the last.
struct Histogram {
  static constexpr double kLower = -10.0;
  static constexpr double kUpper = 10.0;
  static constexpr double kWidth = 0.1;
  static constexpr int kBins = 200;

  std::vector<long> counts = std::vector<long>(kBins, 0);

  void add(double log10_value);
  long total() const;
  Histogram& operator+=(const Histogram& other);
  friend bool operator==(const Histogram&, const Histogram&) = default;
};

struct SliceSummary {
  int M = 0;
  long samples = 0;
  long gplus_disconnected = 0;
  long delta_zero_given_connected = 0;
  double p_gplus_disconnected = 0;
  std::optional<double> p_delta_zero_given_connected;
  /// Over connected samples with nonzero discriminant.
  std::optional<double> log10_gap_mean;
  std::optional<double> log10_gap_std;
  /// Connected samples only; a zero gap sits in the first bin.
  Histogram histogram;
  std::map<std::string, Histogram> class_histograms;
  std::map<std::string, long> class_counts;
};

/// Throws InvalidInput on an empty slice.
SliceSummary summarize(int M, std::span<const EnsembleRecord> records);

}  // namespace signlap
