#include "mink/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "mink/frenet.hpp"

namespace mink {

using nlohmann::json;

const char* to_string(Generator g) {
  switch (g) {
    case Generator::Example: return "example";
    case Generator::CircularHelix: return "circular_helix";
    case Generator::HyperbolicHelix: return "hyperbolic_helix";
  }
  return "unknown";
}

const char* to_string(DiffMode m) {
  return m == DiffMode::Taylor ? "taylor" : "finite_difference";
}

double AnalysisConfig::effective_lambda() const {
  if (lambda) return *lambda;
  return kExampleLambda;
}

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw Error(ErrorCode::ParseError, "field '" + field + "': " + what);
}

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::ValidationError, what); }

double number(const json& j, const std::string& field) {
  if (!j.is_number()) field_error(field, "expected a number, got " + std::string(j.type_name()));
  return j.get<double>();
}

void check_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) field_error(where.empty() ? key : where + "." + key, "unknown field");
  }
}

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  std::ostringstream os;
  os << "line " << line << ", column " << col;
  return os.str();
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void parse_source(const json& src, SourceConfig& out, const std::filesystem::path& base_dir) {
  if (!src.is_object()) field_error("source", "expected an object");
  check_keys(src, "source", {"generator", "kappa", "tau", "samples", "samples_file"});
  const bool has_gen = src.contains("generator");
  const bool has_rows = src.contains("samples");
  const bool has_file = src.contains("samples_file");
  if (int(has_gen) + int(has_rows) + int(has_file) != 1)
    invalid("source needs exactly one of generator, samples, samples_file");

  if (has_gen) {
    if (!src["generator"].is_string()) field_error("source.generator", "expected a string");
    const auto name = src["generator"].get<std::string>();
    if (name == "example" || name == "paper_example") {
      out.generator = Generator::Example;
      if (src.contains("kappa") || src.contains("tau")) invalid("the example source takes no kappa/tau");
      return;
    }
    if (name == "circular_helix") {
      out.generator = Generator::CircularHelix;
    } else if (name == "hyperbolic_helix") {
      out.generator = Generator::HyperbolicHelix;
    } else {
      field_error("source.generator", "unknown generator '" + name + "'");
    }
    if (!src.contains("kappa") || !src.contains("tau")) invalid(name + " needs kappa and tau");
    out.kappa = number(src["kappa"], "source.kappa");
    out.tau = number(src["tau"], "source.tau");
    if (!(out.kappa > 0.0)) invalid("source.kappa must be positive");
    return;
  }
  if (src.contains("kappa") || src.contains("tau")) invalid("kappa/tau only apply to generators");
  if (has_rows) {
    const json& rows = src["samples"];
    if (!rows.is_array()) field_error("source.samples", "expected an array of [s, x1, x2, x3]");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string f = "source.samples[" + std::to_string(i) + "]";
      if (!rows[i].is_array() || rows[i].size() != 4) field_error(f, "expected [s, x1, x2, x3]");
      out.samples.push_back({number(rows[i][0], f), LorentzVec(number(rows[i][1], f), number(rows[i][2], f),
                                                                number(rows[i][3], f))});
    }
    return;
  }
  if (!src["samples_file"].is_string()) field_error("source.samples_file", "expected a path");
  out.samples_file = src["samples_file"].get<std::string>();
  std::filesystem::path p(out.samples_file);
  if (p.is_relative() && !base_dir.empty()) p = base_dir / p;
  out.samples = parse_sample_rows(read_file(p), p.string());
}

}  // namespace

std::vector<SampleRow> parse_sample_rows(std::string_view text, const std::string& origin) {
  std::vector<SampleRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<double> vals;
    std::istringstream cells(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(cell, &used));
        if (cell.find_first_not_of(" \t", used) != std::string::npos) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (rows.empty() && lineno == 1) continue;  // header
      throw Error(ErrorCode::ParseError, origin + ": line " + std::to_string(lineno) + ": non-numeric cell");
    }
    if (vals.size() != 4)
      throw Error(ErrorCode::ParseError, origin + ": line " + std::to_string(lineno) + ": expected 4 columns");
    rows.push_back({vals[0], LorentzVec(vals[1], vals[2], vals[3])});
  }
  return rows;
}

AnalysisConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, location(text, e.byte > 0 ? e.byte - 1 : 0) + ": " + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "top level must be an object");
  check_keys(doc, "", {"source", "lambda", "n_samples", "h", "derivatives", "interval", "tolerances", "output"});
  if (!doc.contains("source")) invalid("missing source");

  AnalysisConfig cfg;
  parse_source(doc["source"], cfg.source, base_dir);

  if (doc.contains("lambda")) cfg.lambda = number(doc["lambda"], "lambda");
  if (!cfg.lambda && cfg.source.generator != Generator::Example)
    invalid("lambda is required unless the source is the example");
  if (cfg.lambda && !std::isfinite(*cfg.lambda)) invalid("lambda must be finite");

  if (doc.contains("n_samples")) {
    const json& n = doc["n_samples"];
    if (!n.is_number_integer()) field_error("n_samples", "expected an integer");
    cfg.n_samples = n.get<int>();
  }
  if (cfg.n_samples < 2) invalid("n_samples must be at least 2");

  if (doc.contains("h")) cfg.h = number(doc["h"], "h");
  if (!(cfg.h > 0.0)) invalid("h must be positive");

  if (doc.contains("derivatives")) {
    const json& d = doc["derivatives"];
    if (!d.is_string()) field_error("derivatives", "expected \"taylor\" or \"finite_difference\"");
    const auto name = d.get<std::string>();
    if (name == "taylor") {
      cfg.derivatives = DiffMode::Taylor;
    } else if (name == "finite_difference") {
      cfg.derivatives = DiffMode::FiniteDifference;
    } else {
      field_error("derivatives", "unknown mode '" + name + "'");
    }
  }

  if (doc.contains("interval")) {
    const json& iv = doc["interval"];
    if (!iv.is_array() || iv.size() != 2) field_error("interval", "expected [s_min, s_max]");
    Interval i{number(iv[0], "interval[0]"), number(iv[1], "interval[1]")};
    if (!(i.lo < i.hi) || !i.bounded()) invalid("interval must satisfy s_min < s_max");
    cfg.interval = i;
  }

  if (doc.contains("tolerances")) {
    const json& t = doc["tolerances"];
    if (!t.is_object()) field_error("tolerances", "expected an object");
    check_keys(t, "tolerances", {"classification", "geodesic", "helix", "collinear", "angle", "membership"});
    auto read = [&](const char* key, double& dst) {
      if (!t.contains(key)) return;
      dst = number(t[key], std::string("tolerances.") + key);
      if (!(dst > 0.0)) invalid(std::string("tolerances.") + key + " must be positive");
    };
    read("classification", cfg.tol.classification);
    read("geodesic", cfg.tol.geodesic);
    read("helix", cfg.tol.helix);
    read("collinear", cfg.tol.collinear);
    read("angle", cfg.tol.angle);
    read("membership", cfg.tol.membership);
  }

  if (doc.contains("output")) {
    if (!doc["output"].is_string()) field_error("output", "expected a path");
    cfg.output = doc["output"].get<std::string>();
  }
  return cfg;
}

AnalysisConfig load_config(const std::filesystem::path& file) {
  return parse_config(read_file(file), file.parent_path());
}

std::string emit_config(const AnalysisConfig& cfg) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json src;
  if (cfg.source.generator) {
    src["generator"] = to_string(*cfg.source.generator);
    if (*cfg.source.generator != Generator::Example) {
      src["kappa"] = cfg.source.kappa;
      src["tau"] = cfg.source.tau;
    }
  } else if (!cfg.source.samples_file.empty()) {
    src["samples_file"] = cfg.source.samples_file;
  } else {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : cfg.source.samples) rows.push_back({r.s, r.point(0), r.point(1), r.point(2)});
    src["samples"] = rows;
  }
  doc["source"] = src;
  doc["lambda"] = cfg.effective_lambda();
  doc["n_samples"] = cfg.n_samples;
  doc["h"] = cfg.h;
  doc["derivatives"] = to_string(cfg.derivatives);
  if (cfg.interval) doc["interval"] = {cfg.interval->lo, cfg.interval->hi};
  doc["tolerances"] = {{"classification", cfg.tol.classification}, {"geodesic", cfg.tol.geodesic},
                       {"helix", cfg.tol.helix},       {"collinear", cfg.tol.collinear},
                       {"angle", cfg.tol.angle},       {"membership", cfg.tol.membership}};
  doc["output"] = cfg.output;
  return doc.dump(2) + "\n";
}

AnalysisConfig example_config() {
  AnalysisConfig cfg;
  cfg.source.generator = Generator::Example;
  cfg.lambda = kExampleLambda;
  return cfg;
}

Curve make_source_curve(const SourceConfig& src) {
  if (!src.generator) return sampled_table(src.samples, "table");
  switch (*src.generator) {
    case Generator::Example: return reference_helix();
    case Generator::CircularHelix:
      return generate_w_curve(WCurveKind::TimelikeCircularHelix, src.kappa, src.tau);
    case Generator::HyperbolicHelix:
      return generate_w_curve(WCurveKind::TimelikeHyperbolicHelix, src.kappa, src.tau);
  }
  throw Error(ErrorCode::ValidationError, "no source");
}

}  // namespace mink
