#include "signlap/json_io.hpp"

#include <cmath>

#include "signlap/errors.hpp"

namespace signlap {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InvalidInput(std::string("expected a JSON object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(std::string("missing field '") + key + "'");
  return *it;
}

int integer_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json optional_double(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a rational string, got " + j.dump());
}

Json rationals_to_json(std::span<const Rational> xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(rational_to_json(x));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInput("expected an array of rationals, got " + j.dump());
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

SignedWeightedGraph graph_from_json(const Json& j) {
  const int n = integer_field(j, "n");
  if (n < 0) throw InvalidInput("vertex count must be nonnegative");
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) throw InvalidInput("'edges' must be an array");
  std::vector<EdgeSpec> specs;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Json& e = edges[k];
    try {
      specs.push_back({integer_field(e, "u"), integer_field(e, "v"), rational_from_json(field(e, "w"))});
    } catch (const InvalidInput& err) {
      throw InvalidInput("edge #" + std::to_string(k) + ": " + err.what());
    }
  }
  return SignedWeightedGraph(n, specs);
}

Json graph_to_json(const SignedWeightedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"w", rational_to_json(e.weight)}});
  return {{"n", g.vertex_count()}, {"edges", edges}};
}

Json index_to_json(const SpectralIndex& index) { return Json::array({index.negative, index.zero, index.positive}); }

SpectralIndex index_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidInput("index must be [n_-, n_0, n_+]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

Json polynomial_to_json(const CrossingPolynomial& p) {
  Json coeffs = Json::object();
  for (RedMask mask = 0; mask < p.coefficients().size(); ++mask)
    coeffs[mask_to_string(mask, p.red_count())] = rational_to_json(p.coefficient(mask));
  return {{"R", p.red_count()}, {"coefficients", coeffs}};
}

CrossingPolynomial polynomial_from_json(const Json& j) {
  const int r = integer_field(j, "R");
  if (r < 0 || r > kDefaultMaxRed) throw InvalidInput("R out of range");
  const Json& coeffs = field(j, "coefficients");
  if (!coeffs.is_object()) throw InvalidInput("'coefficients' must be an object");
  std::vector<Rational> values(std::size_t{1} << r);
  for (const auto& [key, value] : coeffs.items()) {
    if (static_cast<int>(key.size()) != r) throw InvalidInput("mask '" + key + "' does not have length R");
    values[mask_from_string(key)] = rational_from_json(value);
  }
  return CrossingPolynomial(r, std::move(values));
}

Json factorization_to_json(const Factorization& f) {
  return {{"alpha", rational_to_json(f.alpha)}, {"C", rationals_to_json(f.C)}};
}

Factorization factorization_from_json(const Json& j) {
  return {rational_from_json(field(j, "alpha")), rationals_from_json(field(j, "C"))};
}

Json stability_to_json(const StabilityReport& r) {
  return {{"thresholds", rationals_to_json(r.thresholds)},
          {"certified", r.certified},
          {"on_boundary", r.on_boundary},
          {"certificate_margin", rational_to_json(r.certificate_margin)},
          {"verified_index", index_to_json(r.verified_index)}};
}

StabilityReport stability_from_json(const Json& j) {
  StabilityReport r;
  r.thresholds = rationals_from_json(field(j, "thresholds"));
  r.certified = field(j, "certified").get<bool>();
  r.on_boundary = field(j, "on_boundary").get<bool>();
  r.certificate_margin = rational_from_json(field(j, "certificate_margin"));
  r.verified_index = index_from_json(field(j, "verified_index"));
  return r;
}

Json crossings_to_json(const RayCrossings& c) {
  Json roots = Json::array();
  for (const auto& root : c.roots)
    roots.push_back({{"lower", rational_to_json(root.lower)},
                     {"upper", rational_to_json(root.upper)},
                     {"exact", root.exact ? rational_to_json(*root.exact) : Json(nullptr)},
                     {"approx", root.approx},
                     {"multiplicity", root.multiplicity}});
  return {{"direction", rationals_to_json(c.direction)},
          {"roots", roots},
          {"total_multiplicity", c.total_multiplicity()}};
}

RayCrossings crossings_from_json(const Json& j) {
  RayCrossings c;
  c.direction = rationals_from_json(field(j, "direction"));
  for (const auto& root : field(j, "roots")) {
    Crossing x;
    x.lower = rational_from_json(field(root, "lower"));
    x.upper = rational_from_json(field(root, "upper"));
    if (const auto& e = field(root, "exact"); !e.is_null()) x.exact = rational_from_json(e);
    x.approx = field(root, "approx").get<double>();
    x.multiplicity = integer_field(root, "multiplicity");
    c.roots.push_back(std::move(x));
  }
  return c;
}

EnsembleConfig ensemble_config_from_json(const Json& j) {
  EnsembleConfig c;
  c.N = integer_field(j, "N");
  const Json& m = field(j, "M");
  if (m.is_number_integer()) {
    c.M_values.push_back(m.get<int>());
  } else if (m.is_array()) {
    for (const auto& x : m) {
      if (!x.is_number_integer()) throw InvalidInput("'M' entries must be integers");
      c.M_values.push_back(x.get<int>());
    }
  } else {
    throw InvalidInput("'M' must be an integer or an array of integers");
  }
  const Json& samples = field(j, "samples");
  if (!samples.is_number_integer()) throw InvalidInput("'samples' must be an integer");
  c.samples_per_M = samples.get<long>();
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_integer()) throw InvalidInput("'seed' must be an integer");
    c.master_seed = it->is_number_unsigned() ? it->get<std::uint64_t>()
                                             : static_cast<std::uint64_t>(it->get<std::int64_t>());
  }
  if (const auto it = j.find("model"); it != j.end()) {
    const auto name = it->get<std::string>();
    if (name == "gnm") c.model = GraphModel::gnm;
    else if (name == "gnp") c.model = GraphModel::gnp;
    else throw InvalidInput("unknown model '" + name + "' (gnm or gnp)");
  }
  validate(c);
  return c;
}

Json summary_to_json(const SliceSummary& s) {
  Json classes = Json::object();
  for (const auto& [label, count] : s.class_counts) {
    Json entry = {{"count", count}};
    if (const auto it = s.class_histograms.find(label); it != s.class_histograms.end())
      entry["histogram"] = it->second.counts;
    classes[label] = entry;
  }
  return {{"M", s.M},
          {"samples", s.samples},
          {"gplus_disconnected", s.gplus_disconnected},
          {"p_gplus_disconnected", s.p_gplus_disconnected},
          {"delta_zero_given_connected", s.delta_zero_given_connected},
          {"p_delta_zero_given_connected", optional_double(s.p_delta_zero_given_connected)},
          {"log10_gap_mean", optional_double(s.log10_gap_mean)},
          {"log10_gap_std", optional_double(s.log10_gap_std)},
          {"histogram",
           {{"lower", Histogram::kLower}, {"upper", Histogram::kUpper}, {"width", Histogram::kWidth},
            {"counts", s.histogram.counts}}},
          {"classes", classes}};
}

}  // namespace signlap
