#include "uks/cli.hpp"

#include <fstream>
#include <sstream>

#include "uks/choi.hpp"
#include "uks/ks.hpp"

namespace uks::cli {

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

double real_number(const json& v, const std::string& where) {
  if (!v.is_number()) throw InputError(where + ": expected a real number (complex entries are not accepted)");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw InputError(where + ": expected a finite number");
  return d;
}

json vec_json(const Eigen::VectorXd& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

MapDocument from_explicit(const json& doc) {
  MapDocument out;
  const json& lam = doc.at("lambda");
  const json& t = doc.at("T");
  if (!lam.is_array() || lam.size() != 3) throw InputError("/lambda: expected an array of 3 reals");
  if (!t.is_array() || t.size() != 3) throw InputError("/T: expected a 3x3 array of reals");
  for (int i = 0; i < 3; ++i) {
    out.map.lambda(i) = real_number(lam[static_cast<std::size_t>(i)], "/lambda/" + std::to_string(i));
    const json& row = t[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != 3) throw InputError("/T/" + std::to_string(i) + ": expected 3 reals");
    for (int j = 0; j < 3; ++j)
      out.map.T(i, j) = real_number(row[static_cast<std::size_t>(j)], "/T/" + std::to_string(i) + "/" + std::to_string(j));
  }
  out.description = "explicit";
  return out;
}

}  // namespace

json complex_pair(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

json to_json(const PauliFormd& p) {
  json w = json::array();
  for (int j = 0; j < 3; ++j) w.push_back(complex_pair(p.w(j)));
  return {{"w0", complex_pair(p.w0)}, {"w", w}};
}

MapDocument parse_map_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("malformed JSON at " + line_column(text, e.byte) + ": " + e.what());
  }
  if (!doc.is_object()) throw InputError("map document must be a JSON object");

  const int forms = static_cast<int>(doc.contains("lambda") || doc.contains("T")) +
                    static_cast<int>(doc.contains("family")) + static_cast<int>(doc.contains("builtin"));
  if (forms != 1) throw InputError("map document needs exactly one of {lambda, T}, family, builtin");

  if (doc.contains("builtin")) {
    const json& b = doc["builtin"];
    if (!b.is_string()) throw InputError("/builtin: expected a string");
    MapDocument out;
    const auto name = b.get<std::string>();
    if (name == "identity") {
      out.map = UnitalQubitMapd::identity();
    } else if (name == "transposition") {
      out.map = UnitalQubitMapd::transposition();
    } else {
      throw InputError("/builtin: unknown map '" + name + "' (expected identity or transposition)");
    }
    out.description = name;
    return out;
  }
  if (doc.contains("family")) {
    const json& f = doc["family"];
    if (!f.is_object() || !f.contains("a") || !f.contains("k")) throw InputError("/family: expected {\"a\": .., \"k\": ..}");
    const double a = real_number(f["a"], "/family/a");
    const double k = real_number(f["k"], "/family/k");
    MapDocument out;
    try {
      out.family = family::FamilyParams::make(a, k);
    } catch (const Error& e) {
      throw InputError(std::string("/family: ") + e.what());
    }
    out.map = family::make_map(*out.family);
    out.description = "family";
    return out;
  }
  if (!doc.contains("lambda") || !doc.contains("T")) throw InputError("explicit map needs both lambda and T");
  return from_explicit(doc);
}

MapDocument load_map_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open map file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_map_document(ss.str());
}

CommandResult check_positivity(const MapDocument& doc, double tol, int starts, std::uint64_t seed) {
  OptimizerConfig cfg;
  cfg.starts = starts;
  cfg.seed = seed;
  const auto v = is_positive(doc.map, cfg, tol);
  CommandResult r;
  r.output = {{"positive", v.positive},
              {"margin", v.margin},
              {"max_g", v.max_g},
              {"witness_w", v.witness ? vec_json(*v.witness) : json(nullptr)},
              {"tol", tol},
              {"seed", seed}};
  r.exit_code = v.positive ? kExitOk : kExitNegative;
  return r;
}

CommandResult check_ks(const MapDocument& doc, int budget, std::uint64_t seed, double tol) {
  OptimizerConfig cfg;
  cfg.starts = budget;
  cfg.seed = seed;
  const KSReport rep = verify_ks(doc.map, cfg, tol);
  CommandResult r;
  r.output = {{"verdict", std::string(to_string(rep.verdict))},
              {"witness", rep.witness ? to_json(*rep.witness) : json(nullptr)},
              {"min_defect_eig", rep.min_defect_eigenvalue},
              {"samples", rep.samples_evaluated},
              {"seed", rep.seed},
              {"tol", tol}};
  r.exit_code = rep.verdict == KsVerdict::NoViolationFound ? kExitOk : kExitNegative;
  return r;
}

CommandResult choi(const MapDocument& doc, bool normalized) {
  const auto w = choi_matrix(doc.map, normalized);
  const auto spec = spectrum(w);
  CommandResult r;
  r.output = {{"eigenvalues", vec_json(spec.eigenvalues)},
              {"trace", w.entries.trace().real()},
              {"normalized", normalized}};
  return r;
}

CommandResult witness(const MapDocument& doc, std::size_t samples, std::uint64_t seed, double tol) {
  const auto w = choi_matrix(doc.map);
  const WitnessReport rep = is_entanglement_witness(w, doc.map, samples, seed, tol);
  CommandResult r;
  r.output = {{"positive", rep.positive},
              {"not_completely_positive", rep.not_completely_positive},
              {"separable_nonnegative", rep.separable_nonnegative},
              {"is_witness", rep.is_witness()},
              {"min_eigenvalue", rep.min_eigenvalue},
              {"min_separable_value", rep.min_separable_value},
              {"detected_value", rep.detected_value ? json(*rep.detected_value) : json(nullptr)},
              {"samples", rep.samples},
              {"seed", rep.seed},
              {"tol", tol}};
  r.exit_code = rep.is_witness() ? kExitOk : kExitNegative;
  return r;
}

CommandResult family_report(double a, double k, std::uint64_t seed) {
  family::FamilyParams p;
  try {
    p = family::FamilyParams::make(a, k);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  const auto m = family::maxima(p);
  OptimizerConfig cfg;
  cfg.seed = seed;
  const auto fmax = family::numeric_F_max(p, cfg);
  auto opt = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };

  json undefined = json::object();
  if (!m.m2) undefined["m2"] = m.m2_reason;
  if (!m.m3) undefined["m3"] = m.m3_reason;
  if (!m.m4) undefined["m4"] = m.m4_reason;

  const bool thm46 = family::theorem_predicate(p);
  json ex51 = nullptr;
  if (p.a == 1.0) ex51 = family::example_5_1_predicate(p.k);

  CommandResult r;
  r.output = {{"a", p.a},
              {"k", p.k},
              {"m1", m.m1},
              {"m2", opt(m.m2)},
              {"m3", opt(m.m3)},
              {"m4", opt(m.m4)},
              {"undefined", undefined},
              {"thm46", thm46},
              {"example_5_1", ex51},
              {"numeric_F_max", fmax.value},
              {"numeric_F_argmax", json::array({fmax.argmax(0), fmax.argmax(1)})},
              {"seed", seed}};
  r.exit_code = thm46 ? kExitOk : kExitNegative;
  return r;
}

ScanSummary scan_region(const family::ScanRange& range, int budget, std::uint64_t seed, const std::string& out_path) {
  if (!std::ofstream(out_path, std::ios::app)) throw InputError("cannot write '" + out_path + "'");
  OptimizerConfig cfg;
  cfg.starts = budget;
  cfg.seed = seed;
  std::vector<family::RegionCell> cells;
  try {
    cells = family::scan_region(range, cfg);
  } catch (const Error& e) {
    throw InputError(e.what());
  }

  std::ostringstream csv;
  family::write_region_csv(csv, cells);
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + out_path + "'");
  out << csv.str();
  out.flush();
  if (!out) throw InputError("write to '" + out_path + "' failed");

  ScanSummary s;
  s.rows = cells.size();
  for (const auto& c : cells) {
    s.positive += c.positive;
    s.thm46 += c.thm46;
    const bool violation = c.ks_numeric == KsVerdict::ViolationFound;
    s.violations += violation;
    s.thm46_positive_violations += violation && c.thm46 && c.positive;
  }
  return s;
}

}  // namespace uks::cli
