#include "signlap/stability.hpp"

#include <algorithm>

#include "signlap/errors.hpp"

namespace signlap {

std::vector<Rational> thresholds(const SignedWeightedGraph& g) {
  if (component_counts(g).positive != 1) throw InvalidInput("stability thresholds need a connected black subgraph");
  const auto labels = g.red_labels();
  const Rational base = tree_constant(minor(g, {}, labels));
  std::vector<Rational> out;
  out.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::vector<int> rest;
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (j != i) rest.push_back(labels[j]);
    const int contracted[] = {labels[i]};
    const Rational single = tree_constant(minor(g, contracted, rest));
    if (single == 0)
      throw InvalidInput("threshold for red edge " + std::to_string(i + 1) + " is infinite (A_{e_i} = 0)");
    out.push_back(base / single);
  }
  return out;
}

StabilityReport certify(const SignedWeightedGraph& g, std::span<const Rational> t) {
  StabilityReport report;
  report.thresholds = thresholds(g);
  // effective_weights validates length and signs of t.
  report.verified_index = inertia(laplacian(g, t));

  Rational norm = 0;
  for (const auto& x : t) norm += x;
  const Rational bound =
      report.thresholds.empty() ? Rational(0) : *std::min_element(report.thresholds.begin(), report.thresholds.end());
  const int n = g.vertex_count();
  if (report.thresholds.empty()) {
    report.certified = true;
    report.certificate_margin = 0;
  } else {
    report.certificate_margin = bound - norm;
    report.certified = norm <= bound;
    report.on_boundary = norm == bound;
  }
  if (!report.certified) return report;

  const SpectralIndex stable{n - 1, 1, 0};
  const SpectralIndex touching{n - 2, 2, 0};
  const bool ok = report.verified_index == stable || (report.on_boundary && report.verified_index == touching);
  if (!ok)
    throw InternalFault("certified point has index " + to_string(report.verified_index) + ", expected " +
                        to_string(stable));
  return report;
}

}  // namespace signlap
