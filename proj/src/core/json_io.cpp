#include "core/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace dcg {

using nlohmann::json;

void write_file_atomic(const std::string& path, const std::string& contents) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot open '" + tmp + "' for writing");
    out << contents;
    if (!out) throw ConfigError("write failed for '" + tmp + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw ConfigError("rename to '" + path + "' failed");
}

std::string optimize_result_json(const OptimizeResult& r, double weight, double scale,
                                 const std::vector<double>& a_normalized) {
  json j;
  j["a"] = r.params.coeff;
  j["T_ns"] = r.params.duration_ns;
  j["w"] = weight;
  j["c_fidelity"] = r.c_fidelity;
  j["c_robust"] = r.c_robust;
  j["iterations"] = r.iterations;
  j["converged"] = r.converged;
  j["a_normalized"] = a_normalized;
  j["scale"] = scale;
  return j.dump(2) + "\n";
}

void write_optimize_result(const std::string& path, const OptimizeResult& r, double weight,
                           double scale, const std::vector<double>& a_normalized) {
  write_file_atomic(path, optimize_result_json(r, weight, scale, a_normalized));
}

AnsatzParams read_params_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in '" + path + "': " + e.what());
  }
  AnsatzParams p;
  if (!j.contains("a") || !j.contains("T_ns")) throw ConfigError("missing 'a' or 'T_ns'");
  p.coeff = j["a"].get<std::vector<double>>();
  p.duration_ns = j["T_ns"].get<double>();
  return p;
}

std::string magnus_report_json(const MagnusReport& r, double weight) {
  json j;
  // exported in SI seconds per the interchange schema
  j["i_cos_s"] = r.i_cos_ns * 1e-9;
  j["i_sin_s"] = r.i_sin_ns * 1e-9;
  j["c_fidelity"] = r.c_fidelity;
  j["c_robust"] = r.c_robust;
  j["c_total"] = weight * r.c_fidelity + (1.0 - weight) * r.c_robust;
  j["h2_frobenius"] = r.h2.norm();
  return j.dump(2) + "\n";
}

std::string rb_result_json(const RBResult& r, std::uint64_t seed) {
  json j;
  j["mode"] = rb_mode_name(r.mode);
  j["seed"] = seed;
  j["lengths"] = r.lengths;
  j["survival_mean"] = r.survival_mean;
  j["survival_per_seq"] = r.survival_per_seq;
  j["fit_ok"] = r.fit_ok;
  if (r.fit_ok) {
    j["fit"] = {{"A", r.fit.a},
                {"p", r.fit.p},
                {"B", r.fit.b},
                {"stderr", {{"A", r.fit.stderr_a()}, {"p", r.fit.stderr_p()}, {"B", r.fit.stderr_b()}}},
                {"degenerate", r.fit.degenerate}};
    if (r.has_reference)
      j["fit_reference"] = {{"A", r.fit_reference.a}, {"p", r.fit_reference.p}, {"B", r.fit_reference.b}};
    j["epg"] = r.epg;
    if (r.mode == RBMode::leakage) j["lpg"] = r.lpg;
  } else {
    j["fit_error"] = r.fit_message;
  }
  return j.dump(2) + "\n";
}

std::string histogram_csv(const std::vector<HistogramRow>& rows) {
  std::string s = "length,survival,count\n";
  char line[80];
  for (const auto& r : rows) {
    std::snprintf(line, sizeof(line), "%d,%.4f,%d\n", r.length, r.survival, r.count);
    s += line;
  }
  return s;
}

std::string sweep_csv(const std::vector<SweepPoint>& points) {
  std::string s = "detuning_MHz,epg_nodecoherence,epg_decoherence\n";
  char line[120];
  for (const auto& p : points) {
    std::snprintf(line, sizeof(line), "%.6f,%.12g,%.12g\n", mhz_from_rad_per_ns(p.detuning),
                  p.epg_nodecoherence, p.epg_decoherence);
    s += line;
  }
  return s;
}

std::string calibration_csv(const CalTranscript& t) {
  std::string s = "sweep_value,n,observable\n";
  char line[100];
  for (const auto& r : t.rows) {
    std::snprintf(line, sizeof(line), "%.12g,%d,%.12g\n", r.sweep_value, r.n, r.observable);
    s += line;
  }
  return s;
}

}  // namespace dcg
