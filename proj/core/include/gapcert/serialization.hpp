#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gapcert/certification.hpp"
#include "gapcert/discrete_measure.hpp"
#include "gapcert/grid_function.hpp"
#include "gapcert/interval_maps.hpp"
#include "gapcert/optimal_transport.hpp"
#include "gapcert/regularity.hpp"
#include "gapcert/tolerances.hpp"
#include "gapcert/transfer_operator.hpp"

namespace gapcert {

// Map specs round-trip through JSON for the shipped families
// ({family, parameters, domain, alpha, theta, class, metric,
// exceptional_points}); custom callable maps serialize but do not load.
std::string map_to_json(const MapSpec& map);
MapSpec map_from_json(const std::string& text);
MapSpec load_map(const std::string& path);

std::string grid_function_to_json(const GridFunction& f);
GridFunction grid_function_from_json(const std::string& text);
void write_grid_function_csv(const std::string& path, const GridFunction& f);
GridFunction read_grid_function_csv(const std::string& path);
/// Dispatches on extension: .json or .csv.
GridFunction load_grid_function(const std::string& path);

void write_measure_csv(const std::string& path, const DiscreteMeasure& mu);
DiscreteMeasure read_measure_csv(const std::string& path);

std::string norm_to_json(const RegularityNorm& norm);

/// Full arithmetic trail, tolerances and version; deterministic key order.
std::string certificate_to_json(const Certificate& cert,
                                const Tolerances& tol);

std::string spectral_report_json(const SpectralData& sd, const MapSpec& map,
                                 int grid_size, BasisKind basis,
                                 const Tolerances& tol, std::uint64_t seed);

std::string lasota_yorke_report_json(const LasotaYorkeReport& report,
                                     const MapSpec& map,
                                     const Tolerances& tol);

std::string contraction_report_json(const ContractionReport& report,
                                    const MapSpec& map, const Tolerances& tol);

std::string gap_decay_report_json(const GapDecayReport& report,
                                  const Tolerances& tol);

void write_correlations_csv(const std::string& path,
                            const std::vector<double>& corr);
std::string correlations_json(const std::vector<double>& corr,
                              const Tolerances& tol, std::uint64_t seed);

void write_matrix_csv(const std::string& path, const DiscretizedOperator& op);
/// Little-endian dump: uint64 m, then m*m row-major doubles.
void write_matrix_binary(const std::string& path,
                         const DiscretizedOperator& op);

}  // namespace gapcert
