#include "signlap/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "signlap/errors.hpp"
#include "signlap/json_io.hpp"

namespace signlap {

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::string summary;
  std::string t;
  std::string ray;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_all(path));
  } catch (const Json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void emit(const Json& doc, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw InvalidInput("cannot write '" + path + "'");
  file << doc.dump(2) << '\n';
  if (!file) throw InvalidInput("failed writing '" + path + "'");
}

std::vector<Rational> t_or_zero(const Options& o, const SignedWeightedGraph& g) {
  if (o.t.empty()) return std::vector<Rational>(static_cast<std::size_t>(g.red_count()), Rational(0));
  return parse_rational_list(o.t);
}

Json cmd_analyze(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  const auto counts = component_counts(g);
  Json doc = {{"N", g.vertex_count()},
              {"B", g.black_count()},
              {"R", g.red_count()},
              {"components", {{"whole", counts.whole}, {"positive", counts.positive}, {"negative", counts.negative}}},
              {"tau", nullptr},
              {"index_limits", nullptr}};
  if (counts.whole == 1) {
    doc["tau"] = tau(g);
    const auto limits = index_limits(g);
    doc["index_limits"] = {{"small_t", index_to_json(limits.small_t)}, {"large_t", index_to_json(limits.large_t)}};
  }
  if (!o.t.empty()) {
    const auto t = parse_rational_list(o.t);
    const auto lap = laplacian(g, t);
    const auto eigs = eigenvalues(lap);
    doc["t"] = rationals_to_json(t);
    doc["index"] = index_to_json(inertia(lap));
    doc["eigenvalues"] = eigs;
    doc["float_index"] = index_to_json(float_index(eigs, zero_tolerance(eigs)));
  }
  return doc;
}

Json cmd_coeffs(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  const auto p = coefficients(g);
  Json doc = polynomial_to_json(p);
  const auto range = degree_support(p, g);
  doc["degree_support"] = range ? Json{{"low", range->low}, {"high", range->high}} : Json(nullptr);
  return doc;
}

bool unit_blacks(const SignedWeightedGraph& g) {
  return std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.is_red() || e.weight == 1; });
}

Json cmd_disc(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  if (g.red_count() != 2) throw InvalidInput("disc needs exactly two red edges, got " + std::to_string(g.red_count()));
  const auto p = coefficients(g);
  const Rational delta = discriminant2(p);
  const Rational magnitude = abs(delta);
  Json doc = {{"coefficients", polynomial_to_json(p)}, {"delta", rational_to_json(delta)}};
  const auto gp = gap(p);
  doc["gap"] = gp ? Json(*gp) : Json(nullptr);
  const auto point = degenerate_point(p);
  doc["degenerate_point"] =
      point ? Json::array({rational_to_json(point->first), rational_to_json(point->second)}) : Json(nullptr);
  doc["forest_sum"] = nullptr;
  if (g.vertex_count() <= kMaxEnumerationVertices) {
    const Rational sigma = forest_sum_2(g);
    if (sigma * sigma != magnitude)
      throw InternalFault("forest sum squared " + to_string(sigma * sigma) + " differs from |delta| " +
                          to_string(magnitude));
    doc["forest_sum"] = rational_to_json(sigma);
  }
  doc["cycle_minor"] = nullptr;
  if (unit_blacks(g))
    if (const auto cm = cycle_minor(g)) {
      if (*cm * *cm != magnitude)
        throw InternalFault("cycle minor squared " + to_string(*cm * *cm) + " differs from |delta| " +
                            to_string(magnitude));
      doc["cycle_minor"] = rational_to_json(*cm);
    }
  return doc;
}

Json cmd_factorize(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  const auto p = coefficients(g);
  if (const auto f = factorize(p)) {
    Json doc = factorization_to_json(*f);
    doc["factorizable"] = true;
    return doc;
  }
  Json witnesses = Json::array();
  for (const auto& w : stacked_deck(p.red_count())) {
    const Rational d = wildcard_discriminant(p, w);
    if (d != 0) witnesses.push_back({{"wildcard", w.pattern()}, {"delta", rational_to_json(d)}});
  }
  return {{"factorizable", false}, {"nonzero_wildcards", witnesses}};
}

Json cmd_stability(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  const auto t = t_or_zero(o, g);
  Json doc = stability_to_json(certify(g, t));
  doc["t"] = rationals_to_json(t);
  return doc;
}

Json cmd_crossings(const Options& o) {
  const auto g = graph_from_json(read_json(o.input));
  if (o.ray.empty()) throw InvalidInput("crossings needs --ray a1,a2,...");
  const auto direction = parse_rational_list(o.ray);
  Json doc = crossings_to_json(ray_crossings(coefficients(g), direction));
  doc["tau"] = is_connected(g) ? Json(tau(g)) : Json(nullptr);
  return doc;
}

void cmd_ensemble(const Options& o, std::ostream& out) {
  auto config = ensemble_config_from_json(read_json(o.input));
  if (o.seed) config.master_seed = *o.seed;
  if (o.threads < 1) throw InvalidInput("--threads must be at least 1");

  std::ofstream csv;
  if (!o.output.empty()) {
    csv.open(o.output);
    if (!csv) throw InvalidInput("cannot write '" + o.output + "'");
    write_csv_header(csv);
  }
  Json slices = Json::array();
  for (int M : config.M_values) {
    const auto records = run_slice(config, M, o.threads);
    if (csv.is_open())
      for (const auto& r : records) write_csv_row(csv, r);
    slices.push_back(summary_to_json(summarize(M, records)));
  }
  if (csv.is_open() && !csv.flush()) throw InvalidInput("failed writing '" + o.output + "'");
  const Json doc = {{"N", config.N},
                    {"samples_per_M", config.samples_per_M},
                    {"seed", config.master_seed},
                    {"model", config.model == GraphModel::gnm ? "gnm" : "gnp"},
                    {"slices", slices}};
  emit(doc, o.summary, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Signed graph Laplacian analysis", "signlap-cli"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_option("-i,--input", o.input, "Input JSON file ('-' for stdin)");
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };
  auto* analyze = app.add_subcommand("analyze", "Component counts, tau, index limits, index at --t");
  add_common(analyze);
  analyze->add_option("--t", o.t, "Red magnitudes t1,t2,... (rationals)");
  auto* coeffs = app.add_subcommand("coeffs", "Crossing polynomial coefficients");
  add_common(coeffs);
  auto* disc = app.add_subcommand("disc", "Discriminant, gap, forest and cycle identities (two red edges)");
  add_common(disc);
  auto* fact = app.add_subcommand("factorize", "Linear factorization via the stacked deck");
  add_common(fact);
  auto* stab = app.add_subcommand("stability", "Thresholds and l1 certificate at --t");
  add_common(stab);
  stab->add_option("--t", o.t, "Red magnitudes t1,t2,... (default 0)");
  auto* cross = app.add_subcommand("crossings", "Zero crossings along the ray t = s*alpha");
  add_common(cross);
  cross->add_option("--ray", o.ray, "Direction a1,a2,... (positive rationals)");
  auto* ens = app.add_subcommand("ensemble", "Random two-red-edge ensemble; CSV to --output, summary JSON");
  ens->add_option("-i,--input", o.input, "Ensemble config JSON");
  ens->add_option("-o,--output", o.output, "Per-sample CSV");
  ens->add_option("--summary", o.summary, "Summary JSON (default stdout)");
  ens->add_option("--seed", o.seed, "Override the config seed");
  ens->add_option("--threads", o.threads, "Worker threads (output is identical for any value)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (ens->parsed()) {
      cmd_ensemble(o, out);
      return 0;
    }
    Json doc;
    if (analyze->parsed()) doc = cmd_analyze(o);
    else if (coeffs->parsed()) doc = cmd_coeffs(o);
    else if (disc->parsed()) doc = cmd_disc(o);
    else if (fact->parsed()) doc = cmd_factorize(o);
    else if (stab->parsed()) doc = cmd_stability(o);
    else if (cross->parsed()) doc = cmd_crossings(o);
    emit(doc, o.output, out);
    return 0;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Json::exception& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal fault: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace signlap
