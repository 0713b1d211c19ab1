#pragma once

#include <string>
#include <string_view>

#include "cover/covering.hpp"
#include "cover/geometry.hpp"
#include "cover/multistart.hpp"
#include "cover/screening.hpp"

namespace cover {

/// {"polygons": [[[x,y],...],...], "boundary_flags": optional [[bool,...],...]}
Region region_from_json(std::string_view text);
std::string region_to_json(const Region& region);

/// {"centers": [[x,y],...], "r": r}
Configuration config_from_json(std::string_view text);
std::string config_to_json(const Configuration& cfg);

/// {m, r, centers, G, lambda, kkt_opt, kkt_feas, status, trial, trials, seed, counters}
std::string solution_to_json(const MultistartReport& report);
/// Reads the configuration part of a solution document.
Configuration config_from_solution_json(std::string_view text);

/// {"G": g, "grad": [...], "hess": [[...],...], "near_singular": n, "screen": {...}}
/// with the Hessian written as full symmetric rows.
std::string evaluation_to_json(const DerivativeBundle& b, bool grad, bool hess, const DiagnosticsReport* screen);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cover
