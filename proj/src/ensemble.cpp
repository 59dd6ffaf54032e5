#include "signlap/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <ostream>
#include <queue>
#include <random>
#include <thread>

#include "signlap/crossing.hpp"
#include "signlap/discriminants.hpp"
#include "signlap/errors.hpp"

namespace signlap {

namespace {

std::uint64_t splitmix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// std::uniform_int_distribution differs between standard libraries; this
// keeps the draws identical everywhere.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

long edge_total(int N) { return static_cast<long>(N) * (N - 1) / 2; }

std::vector<std::pair<Vertex, Vertex>> complete_edges(int N) {
  std::vector<std::pair<Vertex, Vertex>> all;
  all.reserve(static_cast<std::size_t>(edge_total(N)));
  for (Vertex u = 0; u < N; ++u)
    for (Vertex v = u + 1; v < N; ++v) all.emplace_back(u, v);
  return all;
}

SignedWeightedGraph colour(int N, std::vector<std::pair<Vertex, Vertex>> chosen, std::mt19937_64& rng) {
  std::sort(chosen.begin(), chosen.end());
  const auto m = static_cast<std::uint64_t>(chosen.size());
  const std::uint64_t a = below(rng, m);
  std::uint64_t b = below(rng, m - 1);
  if (b >= a) ++b;
  std::vector<EdgeSpec> specs;
  specs.reserve(chosen.size());
  for (std::uint64_t k = 0; k < m; ++k)
    specs.push_back({chosen[k].first, chosen[k].second, Rational(k == a || k == b ? -1 : 1)});
  return SignedWeightedGraph(N, specs);
}

void check_size(int N, int M) {
  if (N < 3) throw InvalidInput("ensemble needs N >= 3, got " + std::to_string(N));
  if (M < 2 || M > edge_total(N))
    throw InvalidInput("M = " + std::to_string(M) + " outside [2, " + std::to_string(edge_total(N)) + "]");
}

std::vector<int> black_distances(const SignedWeightedGraph& g, Vertex source) {
  const int n = g.vertex_count();
  std::vector<std::vector<Vertex>> adjacent(static_cast<std::size_t>(n));
  for (const auto& e : g.edges()) {
    if (!e.is_black()) continue;
    adjacent[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacent[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::queue<Vertex> frontier;
  dist[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : adjacent[static_cast<std::size_t>(v)])
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
        frontier.push(w);
      }
  }
  return dist;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "NA";
  if (std::isinf(x)) return x < 0 ? "-inf" : "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

void validate(const EnsembleConfig& config) {
  if (config.M_values.empty()) throw InvalidInput("ensemble config: M list is empty");
  for (int M : config.M_values) check_size(config.N, M);
  if (config.samples_per_M <= 0)
    throw InvalidInput("ensemble config: samples must be positive, got " + std::to_string(config.samples_per_M));
}

std::uint64_t sample_seed(std::uint64_t master_seed, int M, long sample_index) {
  std::uint64_t h = splitmix(master_seed);
  h = splitmix(h ^ static_cast<std::uint64_t>(M));
  return splitmix(h ^ static_cast<std::uint64_t>(sample_index));
}

SignedWeightedGraph sample_graph(int N, int M, std::uint64_t seed) {
  check_size(N, M);
  std::mt19937_64 rng(seed);
  auto all = complete_edges(N);
  const auto total = all.size();
  for (std::size_t k = 0; k < static_cast<std::size_t>(M); ++k)
    std::swap(all[k], all[k + below(rng, total - k)]);
  all.resize(static_cast<std::size_t>(M));
  return colour(N, std::move(all), rng);
}

SignedWeightedGraph sample_graph_gnp(int N, int M, std::uint64_t seed) {
  check_size(N, M);
  std::mt19937_64 rng(seed);
  const double p = static_cast<double>(M) / static_cast<double>(edge_total(N));
  const auto all = complete_edges(N);
  std::vector<std::pair<Vertex, Vertex>> chosen;
  do {
    chosen.clear();
    for (const auto& e : all)
      if (unit(rng) < p) chosen.push_back(e);
  } while (chosen.size() < 2);
  return colour(N, std::move(chosen), rng);
}

std::string classify(const SignedWeightedGraph& g) {
  if (g.red_count() != 2) throw InvalidInput("classify needs exactly two red edges");
  if (component_counts(g).positive != 1) return "disconnected_plus";
  const Edge& x = g.edges()[g.red_positions()[0]];
  const Edge& y = g.edges()[g.red_positions()[1]];
  if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) return "adj";
  std::vector<int> d;
  for (Vertex source : {x.u, x.v}) {
    const auto dist = black_distances(g, source);
    for (Vertex target : {y.u, y.v}) {
      const int k = dist[static_cast<std::size_t>(target)];
      d.push_back(k < 0 || k >= kDistanceClamp ? kDistanceClamp : k);
    }
  }
  std::sort(d.begin(), d.end());
  std::string label;
  for (int k : d) label += k == kDistanceClamp ? '+' : static_cast<char>('0' + k);
  return label;
}

EnsembleRecord analyze_sample(const SignedWeightedGraph& g, long sample_id, int M) {
  EnsembleRecord r;
  r.sample_id = sample_id;
  r.N = g.vertex_count();
  r.M = M;
  const Edge& x = g.edges()[g.red_positions().at(0)];
  const Edge& y = g.edges()[g.red_positions().at(1)];
  r.red1 = {x.u, x.v};
  r.red2 = {y.u, y.v};
  r.class_label = classify(g);
  r.gplus_connected = r.class_label != "disconnected_plus";
  const auto p = coefficients(g);
  r.delta_zero = discriminant2(p) == 0;
  r.gap = gap(p);
  if (!r.gap)
    r.log10_gap = std::numeric_limits<double>::quiet_NaN();
  else if (*r.gap == 0)
    r.log10_gap = -std::numeric_limits<double>::infinity();
  else
    r.log10_gap = std::log10(*r.gap);
  return r;
}

std::vector<EnsembleRecord> run_slice(const EnsembleConfig& config, int M, int threads) {
  check_size(config.N, M);
  const long n = config.samples_per_M;
  std::vector<EnsembleRecord> records(static_cast<std::size_t>(n));
  auto work = [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const auto seed = sample_seed(config.master_seed, M, i);
      const auto g = config.model == GraphModel::gnm ? sample_graph(config.N, M, seed)
                                                     : sample_graph_gnp(config.N, M, seed);
      records[static_cast<std::size_t>(i)] = analyze_sample(g, i, M);
    }
  };
  const long workers = std::clamp<long>(threads, 1, std::max(1L, n));
  if (workers == 1) {
    work(0, n);
    return records;
  }
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (long w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        work(n * w / workers, n * (w + 1) / workers);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

std::vector<EnsembleRecord> run(const EnsembleConfig& config, int threads) {
  validate(config);
  std::vector<EnsembleRecord> all;
  for (int M : config.M_values) {
    auto slice = run_slice(config, M, threads);
    all.insert(all.end(), std::make_move_iterator(slice.begin()), std::make_move_iterator(slice.end()));
  }
  return all;
}

void write_csv_header(std::ostream& out) {
  out << "sample_id,N,M,red1_u,red1_v,red2_u,red2_v,class,gplus_connected,delta_zero,gap,log10_gap\n";
}

void write_csv_row(std::ostream& out, const EnsembleRecord& r) {
  out << r.sample_id << ',' << r.N << ',' << r.M << ',' << r.red1[0] << ',' << r.red1[1] << ',' << r.red2[0] << ','
      << r.red2[1] << ',' << r.class_label << ',' << (r.gplus_connected ? "true" : "false") << ','
      << (r.delta_zero ? "true" : "false") << ',' << (r.gap ? format_double(*r.gap) : "NA") << ','
      << format_double(r.log10_gap) << '\n';
}

void Histogram::add(double x) {
  int bin = 0;
  if (!(x < kLower)) bin = static_cast<int>(std::floor((x - kLower) / kWidth));
  counts[static_cast<std::size_t>(std::clamp(bin, 0, kBins - 1))] += 1;
}

long Histogram::total() const {
  long sum = 0;
  for (long c : counts) sum += c;
  return sum;
}

Histogram& Histogram::operator+=(const Histogram& other) {
  for (std::size_t k = 0; k < counts.size(); ++k) counts[k] += other.counts[k];
  return *this;
}

SliceSummary summarize(int M, std::span<const EnsembleRecord> records) {
  if (records.empty()) throw InvalidInput("cannot summarize an empty slice");
  SliceSummary s;
  s.M = M;
  s.samples = static_cast<long>(records.size());
  long connected = 0;
  std::vector<double> logs;
  for (const auto& r : records) {
    ++s.class_counts[r.class_label];
    if (!r.gplus_connected) {
      ++s.gplus_disconnected;
      continue;
    }
    ++connected;
    if (r.delta_zero) ++s.delta_zero_given_connected;
    if (!r.gap) continue;
    s.histogram.add(r.log10_gap);
    s.class_histograms[r.class_label].add(r.log10_gap);
    if (!r.delta_zero) logs.push_back(r.log10_gap);
  }
  s.p_gplus_disconnected = static_cast<double>(s.gplus_disconnected) / static_cast<double>(s.samples);
  if (connected > 0)
    s.p_delta_zero_given_connected = static_cast<double>(s.delta_zero_given_connected) / static_cast<double>(connected);
  if (!logs.empty()) {
    const double count = static_cast<double>(logs.size());
    double mean = 0;
    for (double x : logs) mean += x;
    mean /= count;
    double spread = 0;
    for (double x : logs) spread += (x - mean) * (x - mean);
    s.log10_gap_mean = mean;
    s.log10_gap_std = std::sqrt(spread / count);
  }
  return s;
}

}  // namespace signlap
