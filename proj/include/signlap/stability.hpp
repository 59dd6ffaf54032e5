#pragma once

#include <span>
#include <vector>

#include "signlap/graph.hpp"
#include "signlap/rational.hpp"
#include "signlap/spectral.hpp"

namespace signlap {

/// omega_i = A_0 / A_{e_i}: the magnitude at which M first vanishes when only
/// red edge i is switched on. Requires G_+ connected and every A_{e_i} > 0.
std::vector<Rational> thresholds(const SignedWeightedGraph& g);

struct StabilityReport {
  std::vector<Rational> thresholds;
  bool certified = false;
  /// ||t||_1 == min omega: n_0 may be 2 there.
  bool on_boundary = false;
  Rational certificate_margin;  // min omega - ||t||_1
  SpectralIndex verified_index;
};

/// l1 sufficient condition ||t||_1 <= min omega, cross-checked by exact
/// inertia. A certified point with a wrong index throws InternalFault.
StabilityReport certify(const SignedWeightedGraph& g, std::span<const Rational> t);

}  // namespace signlap
