#include "gapcert/serialization.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gapcert/version.hpp"
#include "json.hpp"

namespace gapcert {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

ordered_json tolerances_json(const Tolerances& tol) {
  return ordered_json{{"eps_root", tol.eps_root},
                      {"eps_eig", tol.eps_eig},
                      {"eps_num", tol.eps_num},
                      {"tol_disc", tol.tol_disc}};
}

std::string class_label(const MapSpec& map) {
  if (map.holder_class && map.class_v) return "both";
  if (map.holder_class) return "H";
  if (map.class_v) return "V";
  return "none";
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

std::string map_to_json(const MapSpec& map) {
  ordered_json j;
  j["family"] = map.family;
  j["parameters"] = ordered_json::object();
  for (const auto& [key, value] : map.parameters) j["parameters"][key] = value;
  j["domain"] = {map.a, map.b};
  j["k"] = map.k;
  j["class"] = class_label(map);
  if (map.holder_class) {
    j["alpha"] = map.holder_class->alpha;
    j["theta"] = map.holder_class->theta;
  }
  j["metric"] =
      map.metric == MetricKind::Interval ? "interval" : "circle";
  j["exceptional_points"] = map.exceptional_points;
  return dump(j);
}

MapSpec map_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  const std::string family = j.at("family").get<std::string>();
  auto param = [&](const char* name, double fallback) {
    if (j.contains("parameters") && j["parameters"].contains(name))
      return j["parameters"][name].get<double>();
    if (j.contains(name)) return j[name].get<double>();
    return fallback;
  };

  MapSpec map;
  if (family == "pomeau_manneville") {
    map = make_pomeau_manneville(param("q", 1.0), param("alpha", 1.0));
  } else if (family == "doubling" || family.starts_with("doubling_")) {
    std::string variant;
    if (j.contains("variant"))
      variant = j["variant"].get<std::string>();
    else if (family.starts_with("doubling_"))
      variant = family.substr(std::string("doubling_").size());
    else
      throw std::invalid_argument("map_from_json: doubling needs a variant");
    map = make_doubling(doubling_variant_from_string(variant));
  } else if (family == "tent") {
    map = make_tent();
  } else if (family == "logistic") {
    map = make_logistic();
  } else {
    throw std::invalid_argument("map_from_json: unknown family '" + family +
                                "'");
  }
  // explicit declarations override the family defaults: the contraction
  // factor used for certification is the caller's contract
  if (j.contains("theta") && map.holder_class)
    map.holder_class->theta = j["theta"].get<double>();
  return map;
}

MapSpec load_map(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return map_from_json(buffer.str());
}

std::string grid_function_to_json(const GridFunction& f) {
  ordered_json j;
  j["grid"] = f.xs();
  j["values"] = f.values();
  j["interp"] =
      f.interp() == InterpKind::PiecewiseLinear ? "linear" : "constant";
  return dump(j);
}

GridFunction grid_function_from_json(const std::string& text) {
  const auto j = ordered_json::parse(text);
  InterpKind interp = InterpKind::PiecewiseLinear;
  if (j.contains("interp") && j["interp"].get<std::string>() == "constant")
    interp = InterpKind::PiecewiseConstantLeft;
  return GridFunction(j.at("grid").get<std::vector<double>>(),
                      j.at("values").get<std::vector<double>>(), interp);
}

void write_grid_function_csv(const std::string& path, const GridFunction& f) {
  std::ostringstream out;
  out.precision(17);
  out << "x,value\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    out << f.xs()[i] << "," << f.values()[i] << "\n";
  write_file(path, out.str());
}

GridFunction read_grid_function_csv(const std::string& path) {
  auto in = open_input(path);
  std::vector<double> xs, values;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string sx, sv;
    if (!std::getline(row, sx, ',') || !std::getline(row, sv, ',')) continue;
    try {
      const double x = std::stod(sx);
      const double v = std::stod(sv);
      xs.push_back(x);
      values.push_back(v);
    } catch (const std::exception&) {
      continue;  // header or comment line
    }
  }
  return GridFunction(std::move(xs), std::move(values));
}

GridFunction load_grid_function(const std::string& path) {
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    auto in = open_input(path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return grid_function_from_json(buffer.str());
  }
  return read_grid_function_csv(path);
}

void write_measure_csv(const std::string& path, const DiscreteMeasure& mu) {
  std::ostringstream out;
  out.precision(17);
  out << "point,weight\n";
  for (std::size_t i = 0; i < mu.size(); ++i)
    out << mu.points()[i] << "," << mu.weights()[i] << "\n";
  write_file(path, out.str());
}

DiscreteMeasure read_measure_csv(const std::string& path) {
  auto in = open_input(path);
  std::vector<double> points, weights;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string sp, sw;
    if (!std::getline(row, sp, ',') || !std::getline(row, sw, ',')) continue;
    try {
      points.push_back(std::stod(sp));
      weights.push_back(std::stod(sw));
    } catch (const std::exception&) {
      continue;
    }
  }
  return DiscreteMeasure(std::move(points), std::move(weights));
}

std::string norm_to_json(const RegularityNorm& norm) {
  ordered_json j;
  j["space"] = norm.space.str();
  j["seminorm"] = norm.seminorm;
  j["sup"] = norm.sup_norm;
  j["full"] = norm.full_norm;
  return dump(j);
}

std::string certificate_to_json(const Certificate& cert,
                                const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  j["space"] = cert.space.str();
  j["theta"] = cert.theta;
  j["D"] = cert.D;
  j["delta0"] = cert.delta0;
  j["pi_bound"] = cert.pi_bound;
  j["tau0"] = cert.tau0;
  j["diam_factor"] = cert.diam_factor;
  j["radius"] = cert.radius;
  j["threshold"] = cert.threshold;
  j["phi_seminorm_bound"] = cert.phi_seminorm;
  j["epsilon"] = cert.epsilon;
  j["certified_delta"] = cert.certified_delta;
  j["status"] = cert.certified ? "certified" : "not-certified";
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

std::string spectral_report_json(const SpectralData& sd, const MapSpec& map,
                                 int grid_size, BasisKind basis,
                                 const Tolerances& tol, std::uint64_t seed) {
  ordered_json j;
  j["version"] = kVersion;
  j["map"] = map.family;
  j["grid"] = grid_size;
  j["basis"] =
      basis == BasisKind::PiecewiseLinear ? "piecewise-linear"
                                          : "piecewise-constant";
  j["lambda"] = sd.lambda;
  j["subdominant"] = sd.subdominant_modulus;
  j["residuals"] = ordered_json{{"eigenfunction", sd.residual_h},
                                {"eigenmeasure", sd.residual_nu}};
  j["iterations"] = sd.iterations;
  j["seed"] = seed;
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

std::string lasota_yorke_report_json(const LasotaYorkeReport& report,
                                     const MapSpec& map,
                                     const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  j["map"] = map.family;
  j["space"] = report.space.str();
  j["bound"] = report.bound;
  j["tol_disc"] = report.tol_disc;
  j["samples"] = report.samples;
  j["used"] = report.used;
  j["grid"] = report.grid_size;
  j["max_ratio"] = report.max_ratio;
  j["pass"] = report.pass;
  j["seed"] = report.seed;
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

std::string contraction_report_json(const ContractionReport& report,
                                    const MapSpec& map,
                                    const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  j["map"] = map.family;
  j["alpha"] = report.alpha;
  j["theta"] = report.theta;
  j["trials"] = report.trials;
  j["used"] = report.used;
  j["max_ratio"] = report.max_ratio;
  j["pass"] = report.pass;
  j["seed"] = report.seed;
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

std::string gap_decay_report_json(const GapDecayReport& report,
                                  const Tolerances& tol) {
  ordered_json j;
  j["version"] = kVersion;
  j["delta"] = report.delta;
  j["n_max"] = report.n_max;
  j["trials"] = report.trials;
  j["sup_ratio"] = report.sup_ratio;
  j["sup_ratio_split"] = report.sup_ratio_split;
  j["tail_slope"] = report.tail_slope;
  j["diverging"] = report.diverging;
  j["pass"] = report.pass;
  j["seed"] = report.seed;
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

void write_correlations_csv(const std::string& path,
                            const std::vector<double>& corr) {
  std::ostringstream out;
  out.precision(17);
  out << "n,C_n\n";
  for (std::size_t n = 0; n < corr.size(); ++n)
    out << n << "," << corr[n] << "\n";
  write_file(path, out.str());
}

std::string correlations_json(const std::vector<double>& corr,
                              const Tolerances& tol, std::uint64_t seed) {
  ordered_json j;
  j["version"] = kVersion;
  j["n_max"] = corr.empty() ? 0 : corr.size() - 1;
  j["values"] = corr;
  j["seed"] = seed;
  j["tolerances"] = tolerances_json(tol);
  return dump(j);
}

void write_matrix_csv(const std::string& path, const DiscretizedOperator& op) {
  std::ostringstream out;
  out.precision(17);
  const int m = op.size();
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (j) out << ",";
      out << op.matrix(i, j);
    }
    out << "\n";
  }
  write_file(path, out.str());
}

void write_matrix_binary(const std::string& path,
                         const DiscretizedOperator& op) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  const std::uint64_t m = static_cast<std::uint64_t>(op.size());
  out.write(reinterpret_cast<const char*>(&m), sizeof(m));
  for (std::uint64_t i = 0; i < m; ++i)
    for (std::uint64_t j = 0; j < m; ++j) {
      const double v = op.matrix(static_cast<int>(i), static_cast<int>(j));
      out.write(reinterpret_cast<const char*>(&v), sizeof(v));
    }
}

}  // namespace gapcert
