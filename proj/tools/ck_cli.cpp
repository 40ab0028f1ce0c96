// Command-line surface for the Cayley-Klein geometry library: classify
// signatures, print metrics and curvatures, run the verification suites,
// emit deterministic JSON reports.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ck/ck.hpp"

namespace {

using nlohmann::json;

std::vector<double> parse_omega_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed number in list: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size())
      throw std::invalid_argument("malformed number in list: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of reals");
  return out;
}

json json_signature(const ck::OmegaSignature& sig) {
  json a = json::array();
  for (double w : sig.omegas()) a.push_back(w);
  return a;
}

json json_catalog_entry(const ck::CatalogEntry& e) {
  json j;
  j["name"] = e.name;
  j["space"] = e.space;
  j["coset"] = e.coset;
  j["curvature"] = e.curvature;
  j["foliated"] = e.foliated;
  j["base"] = e.base;
  j["fiber"] = e.fiber;
  return j;
}

json json_foliation(const ck::FoliationReport& report) {
  json list = json::array();
  for (const auto& entry : report.entries) {
    json j;
    j["selector"] = entry.selector;
    j["omega_position"] = entry.omega_position;
    j["base_signature"] = json_signature(entry.base);
    j["fiber_signature"] = json_signature(entry.fiber);
    list.push_back(j);
  }
  return list;
}

void emit(const ck::Report& report, bool pretty, const std::string& pretty_text) {
  if (pretty)
    std::cout << pretty_text;
  else
    std::cout << ck::to_json_text(report);
}

std::string format_matrix_text(const ck::Matrix& m) {
  std::ostringstream os;
  for (int i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (int j = 0; j < m.cols(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "% .6g", m(i, j));
      os << buf << (j + 1 < m.cols() ? ", " : "");
    }
    os << "]\n";
  }
  return os.str();
}

struct CommonOptions {
  std::string omega_text;
  bool pretty = false;
  std::uint64_t seeds = 0;
};

int cmd_classify(const CommonOptions& common) {
  const ck::OmegaSignature sig(parse_omega_list(common.omega_text));
  const auto rec = ck::classify_group(sig);

  json payload;
  payload["structure"] = rec.structure;
  payload["alias"] = rec.alias;
  json pqs = json::array();
  for (const auto& [p, q] : rec.pq_counts) pqs.push_back(json::array({p, q}));
  payload["pq_counts"] = pqs;
  payload["catalog_rank1"] = rec.catalog_rank1 ? json_catalog_entry(*rec.catalog_rank1) : json();
  payload["catalog_rank2"] = rec.catalog_rank2 ? json_catalog_entry(*rec.catalog_rank2) : json();
  payload["foliation_rank1"] = json_foliation(ck::foliation_report_rank1(sig));
  if (sig.n() >= 3) payload["foliation_rank2"] = json_foliation(ck::foliation_report_rank2(sig));

  std::ostringstream pretty;
  pretty << "structure: " << rec.structure << "\n";
  if (!rec.alias.empty()) pretty << "alias:     " << rec.alias << "\n";
  for (const auto& [p, q] : rec.pq_counts) pretty << "(p,q):     (" << p << "," << q << ")\n";
  if (rec.catalog_rank1)
    pretty << "rank-one:  " << rec.catalog_rank1->name << "  [" << rec.catalog_rank1->coset
           << ", " << rec.catalog_rank1->curvature << " curvature]\n";
  if (rec.catalog_rank2)
    pretty << "rank-two:  " << rec.catalog_rank2->name << "  [" << rec.catalog_rank2->coset
           << ", " << rec.catalog_rank2->curvature << " curvature]\n";
  const auto fol1 = ck::foliation_report_rank1(sig);
  if (!fol1.empty()) pretty << "rank-one space carries an invariant foliation\n";

  emit({"classify", sig.omegas(), payload}, common.pretty, pretty.str());
  return 0;
}

int cmd_metric(const CommonOptions& common, const std::string& space, const std::string& chart,
               const std::string& point_text) {
  const ck::OmegaSignature sig(parse_omega_list(common.omega_text));
  const int n = sig.n();

  json payload;
  payload["space"] = space;
  payload["chart"] = chart;
  std::ostringstream pretty;
  ck::Matrix metric;

  if (space == "rank1") {
    ck::Vector point = ck::Vector::Zero(n);
    if (!point_text.empty()) {
      const auto values = parse_omega_list(point_text);
      if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("expected " + std::to_string(n) + " point coordinates");
      for (int i = 0; i < n; ++i) point(i) = values[static_cast<std::size_t>(i)];
    }
    if (chart == "beltrami")
      metric = ck::beltrami_metric(sig, ck::BeltramiPoint{point}).matrix;
    else if (chart == "parallel")
      metric = ck::parallel_metric(sig, ck::ParallelCoords{point}).matrix;
    else
      throw std::invalid_argument("chart must be beltrami or parallel");
    payload["point"] = ck::json_vector(point);

    bool degenerate = false;
    for (int a = 2; a <= n; ++a) degenerate = degenerate || sig.omega(a) == 0.0;
    payload["degenerate"] = degenerate;
    if (degenerate) {
      payload["foliation"] = json_foliation(ck::foliation_report_rank1(sig));
      json subs;
      for (int a = 2; a <= n; ++a)
        if (sig.omega(a) == 0.0)
          subs["a=" + std::to_string(a)] =
              ck::json_matrix(ck::subsidiary_metric_rank1(sig, a).matrix);
      payload["subsidiary_metrics"] = subs;
    }
  } else if (space == "rank2") {
    if (chart != "beltrami")
      throw std::invalid_argument("the rank-two space exposes only the beltrami chart");
    const int block = n - 1;
    ck::Vector point = ck::Vector::Zero(2 * block);
    if (!point_text.empty()) {
      const auto values = parse_omega_list(point_text);
      if (static_cast<int>(values.size()) != 2 * block)
        throw std::invalid_argument("expected " + std::to_string(2 * block) +
                                    " point coordinates (eta then xi)");
      for (int i = 0; i < 2 * block; ++i) point(i) = values[static_cast<std::size_t>(i)];
    }
    metric = ck::rank2_metric(sig, ck::RankTwoBeltrami{point.head(block), point.tail(block)}).matrix;
    payload["point"] = ck::json_vector(point);

    bool degenerate = sig.omega(1) == 0.0;
    for (int a = 3; a <= n; ++a) degenerate = degenerate || sig.omega(a) == 0.0;
    payload["degenerate"] = degenerate;
    if (degenerate) {
      payload["foliation"] = json_foliation(ck::foliation_report_rank2(sig));
      json subs;
      if (sig.omega(1) == 0.0)
        subs["(2)"] = ck::json_matrix(ck::subsidiary_metric_rank2(sig, ck::P2Block{}).matrix);
      for (int a = 2; a <= n - 1; ++a)
        if (sig.omega(a + 1) == 0.0)
          subs["a=" + std::to_string(a)] =
              ck::json_matrix(ck::subsidiary_metric_rank2(sig, a).matrix);
      payload["subsidiary_metrics"] = subs;
    }
  } else {
    throw std::invalid_argument("space must be rank1 or rank2");
  }

  payload["metric"] = ck::json_matrix(metric);
  pretty << "metric (" << space << ", " << chart << " chart):\n" << format_matrix_text(metric);
  if (payload.contains("degenerate") && payload["degenerate"].get<bool>())
    pretty << "main metric is degenerate; see foliation and subsidiary metrics in the JSON view\n";

  emit({"metric", sig.omegas(), payload}, common.pretty, pretty.str());
  return 0;
}

int cmd_curvature(const CommonOptions& common, const std::string& space, int samples) {
  const ck::OmegaSignature sig(parse_omega_list(common.omega_text));
  const int n = sig.n();
  json rows = json::array();
  double max_dev = 0.0;
  std::ostringstream pretty;

  if (space == "rank1") {
    const double theory = sig.omega(1);
    ck::SeededRng rng(common.seeds * 2654435761ull + 17);
    int accepted = 0;
    for (int tries = 0; accepted < samples * 3 && tries < samples * 300; ++tries) {
      ck::Vector eta(n), u(n), v(n);
      for (int i = 0; i < n; ++i) {
        eta(i) = rng.next_in(-0.25, 0.25);
        u(i) = rng.next_in(-1.0, 1.0);
        v(i) = rng.next_in(-1.0, 1.0);
      }
      try {
        const double k = ck::sectional_curvature_rank1(sig, ck::BeltramiPoint{eta}, u, v);
        json row;
        row["point"] = ck::json_vector(eta);
        row["value"] = k;
        row["expected"] = theory;
        rows.push_back(row);
        max_dev = std::max(max_dev, std::abs(k - theory));
        ++accepted;
      } catch (const ck::chart_error&) {
        // resample
      } catch (const ck::degeneracy_error& err) {
        // degenerate metric aborts; a degenerate sampled plane just resamples
        if (std::string(err.what()).find("2-plane") == std::string::npos) throw;
      }
    }
    json payload;
    payload["space"] = space;
    payload["theory"] = theory;
    payload["samples"] = rows;
    payload["max_deviation"] = max_dev;
    pretty << "rank-one sectional curvature: theory " << theory << ", max deviation " << max_dev
           << " over " << samples * 3 << " samples\n";
    emit({"curvature", sig.omegas(), payload}, common.pretty, pretty.str());
    return 0;
  }

  if (space != "rank2") throw std::invalid_argument("space must be rank1 or rank2");
  const double theory = sig.omega(2);
  const int block = n - 1;
  const auto axis = [&](int idx) {
    ck::Vector vv = ck::Vector::Zero(2 * block);
    vv(idx) = 1.0;
    return vv;
  };
  const auto record = [&](const std::string& desc, int i, int j, double expected) {
    const double k = ck::sectional_curvature_rank2_origin(sig, axis(i), axis(j));
    json row;
    row["plane"] = desc;
    row["value"] = k;
    row["expected"] = expected;
    rows.push_back(row);
    max_dev = std::max(max_dev, std::abs(k - expected));
  };
  for (int i = 1; i <= block; ++i)
    for (int j = i + 1; j <= block; ++j) {
      record("P_(1)" + std::to_string(i) + "^P_(1)" + std::to_string(j), i - 1, j - 1, theory);
      record("P_(2)" + std::to_string(i) + "^P_(2)" + std::to_string(j), block + i - 1,
             block + j - 1, theory);
    }
  for (int i = 1; i <= block; ++i)
    record("P_(1)" + std::to_string(i) + "^P_(2)" + std::to_string(i), i - 1, block + i - 1,
           theory);
  for (int i = 1; i <= block; ++i)
    for (int j = 1; j <= block; ++j)
      if (i != j)
        record("P_(1)" + std::to_string(i) + "^P_(2)" + std::to_string(j), i - 1, block + j - 1,
               0.0);

  json payload;
  payload["space"] = space;
  payload["theory"] = theory;
  payload["samples"] = rows;
  payload["max_deviation"] = max_dev;
  pretty << "rank-two origin curvature: theory " << theory
         << " on index-sharing planes, 0 on disjoint planes; max deviation " << max_dev << "\n";
  emit({"curvature", sig.omegas(), payload}, common.pretty, pretty.str());
  return 0;
}

int cmd_verify(const CommonOptions& common, const std::string& suite, int dim,
               const std::optional<double>& tol_override) {
  ck::VerifyOptions opts;
  if (dim > 0) opts.dims = {dim};
  opts.seed = common.seeds;
  opts.tolerance_override = tol_override;
  const auto results = ck::run_verify(suite, opts);

  bool all_pass = true;
  json suites = json::array();
  std::ostringstream pretty;
  for (const auto& sr : results) {
    json checks = json::array();
    for (const auto& c : sr.checks) {
      json j;
      j["name"] = c.name;
      j["max_residual"] = c.max_residual;
      j["tolerance"] = c.tolerance;
      j["pass"] = c.pass;
      checks.push_back(j);
      pretty << (c.pass ? "[PASS] " : "[FAIL] ") << sr.suite << ": " << c.name << " (residual "
             << c.max_residual << ", tolerance " << c.tolerance << ")\n";
    }
    json j;
    j["suite"] = sr.suite;
    j["checks"] = checks;
    j["pass"] = sr.passed();
    suites.push_back(j);
    all_pass = all_pass && sr.passed();
  }
  json payload;
  payload["suites"] = suites;
  payload["pass"] = all_pass;
  emit({"verify", {}, payload}, common.pretty, pretty.str());
  return all_pass ? 0 : 1;
}

int cmd_catalog(const CommonOptions& common, std::string path) {
  if (path.empty()) {
    const char* env = std::getenv("CK_CATALOG");
    path = env ? env : "data/ck_catalog.txt";
  }
  const auto entries = ck::load_catalog_file(path);
  json list = json::array();
  std::ostringstream pretty;
  for (const auto& e : entries) {
    json j = json_catalog_entry(e);
    j["rank"] = e.rank;
    j["omega1_sign"] = std::string(1, e.omega1_sign);
    j["omega2_sign"] = std::string(1, e.omega2_sign);
    list.push_back(j);
    pretty << ck::catalog_line(e) << "\n";
  }
  json payload;
  payload["entries"] = list;
  payload["file"] = path;
  emit({"catalog", {}, payload}, common.pretty, pretty.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cayley-Klein groups and their rank-one and rank-two homogeneous spaces"};
  app.require_subcommand(1);

  CommonOptions common;
  std::string space = "rank1";
  std::string chart = "beltrami";
  std::string point_text;
  std::string suite = "all";
  std::string catalog_path;
  int dim = 0;
  int samples = 5;

  auto add_common = [&](CLI::App* sub, bool needs_omega) {
    if (needs_omega)
      sub->add_option("--omega", common.omega_text, "comma list of the constants omega_1..omega_N")
          ->required();
    sub->add_flag("--pretty", common.pretty, "human-readable output instead of JSON");
    sub->add_option("--seeds", common.seeds, "base seed for all sampled checks");
  };

  auto* classify = app.add_subcommand("classify", "structural decomposition and catalog names");
  add_common(classify, true);

  auto* metric = app.add_subcommand("metric", "metric matrix at a chart point");
  add_common(metric, true);
  metric->add_option("--space", space, "rank1 or rank2");
  metric->add_option("--chart", chart, "beltrami or parallel");
  metric->add_option("--point", point_text, "comma list of chart coordinates (default: origin)");

  auto* curvature = app.add_subcommand("curvature", "sampled sectional curvatures");
  add_common(curvature, true);
  curvature->add_option("--space", space, "rank1 or rank2");
  curvature->add_option("--samples", samples, "sampled points for the rank-one sweep");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, false);
  verify->add_option("--suite", suite,
                     "brackets | killing | isometry | pluecker | curvature | all");
  verify->add_option("--n", dim, "restrict to a single dimension N");

  auto* catalog = app.add_subcommand("catalog", "print the shipped space catalog");
  add_common(catalog, false);
  catalog->add_option("--file", catalog_path, "catalog file path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  std::optional<double> tol_override;
  if (const char* env = std::getenv("CK_TOLERANCE")) {
    try {
      tol_override = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: CK_TOLERANCE is not a number\n";
      return 2;
    }
  }

  try {
    if (classify->parsed()) return cmd_classify(common);
    if (metric->parsed()) return cmd_metric(common, space, chart, point_text);
    if (curvature->parsed()) return cmd_curvature(common, space, samples);
    if (verify->parsed()) return cmd_verify(common, suite, dim, tol_override);
    if (catalog->parsed()) return cmd_catalog(common, catalog_path);
  } catch (const ck::chart_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ck::degeneracy_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
