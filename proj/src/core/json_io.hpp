#pragma once

#include <string>

#include "core/magnus.hpp"
#include "core/optimize.hpp"
#include "core/rb.hpp"
#include "core/sweep.hpp"

namespace dcg {

/// write via temp file + rename so partial output never lands at `path`
void write_file_atomic(const std::string& path, const std::string& contents);

/// OptimizeResult interchange file:
/// {a: [..], T_ns, w, c_fidelity, c_robust, iterations, converged} plus the
/// normalized view (a_normalized, scale). `a` is in rad/ns^(n+1).
std::string optimize_result_json(const OptimizeResult& r, double weight, double scale,
                                 const std::vector<double>& a_normalized);
void write_optimize_result(const std::string& path, const OptimizeResult& r, double weight,
                           double scale, const std::vector<double>& a_normalized);

/// load the `a` / `T_ns` fields back into AnsatzParams (IO errors -> ConfigError)
AnsatzParams read_params_json(const std::string& path);

/// {i_cos_s, i_sin_s, c_fidelity, c_robust, c_total, h2_frobenius}
std::string magnus_report_json(const MagnusReport& r, double weight);

/// {mode, lengths, survival_mean[], survival_per_seq[][], fit{...}, epg, lpg?}
std::string rb_result_json(const RBResult& r, std::uint64_t seed);

/// histogram CSV `length,survival,count`
std::string histogram_csv(const std::vector<HistogramRow>& rows);

/// sweep CSV `detuning_MHz,epg_nodecoherence,epg_decoherence`
std::string sweep_csv(const std::vector<SweepPoint>& points);

/// calibration transcript CSV `sweep_value,n,observable`
std::string calibration_csv(const CalTranscript& t);

}  // namespace dcg
