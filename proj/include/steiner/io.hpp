#pragma once
/**
 * JSON/CSV (de)serialization for the library's value types. File access is
 * confined to the CLI; everything here works on in-memory strings or
 * nlohmann::json values.
 *
 * Formats:
 *   Polygon  {"vertices": [[x, y], ...]}
 *   Line     {"anchor": [x, y], "direction": [dx, dy]}   (normalized on load)
 *   Estimate {"p_hat", "std_err", "n", "m", "t", "alpha", "seed", "bridge"}
 *   Schedule [{"step", "vertices", "tracked", "line"}, ...]
 *   Report   {"name", "passed", "statistic", "threshold", "seed",
 *             "details", "notes"}
 *
 * CSV values are printed with 17 significant digits so records round-trip.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "steiner/geometry.hpp"
#include "steiner/schedules.hpp"
#include "steiner/stochastic.hpp"
#include "steiner/verify.hpp"

namespace steiner {

std::string fmt17(double v);

nlohmann::json to_json(const Polygon& P);
Polygon polygon_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Line& line);
Line line_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExitEstimate& e);
nlohmann::json to_json(const ScheduleState& s);
nlohmann::json to_json(const std::vector<ScheduleState>& schedule);
nlohmann::json to_json(const EigenvalueEstimate& e);
nlohmann::json to_json(const VerifyReport& r);

/// One row per estimate: t, p_hat, std_err, n, m, alpha, seed, bridge.
std::string curve_csv(const std::vector<ExitEstimate>& curve);

/// One row per state: step, n_vertices, area, diameter, min_angle, c; the
/// side-ratio column c = b/a is filled only for axis-aligned origin-centered
/// rectangle states.
std::string schedule_csv(const std::vector<ScheduleState>& schedule);

/// Flat report rows: name, passed, statistic, threshold, seed.
std::string reports_csv(const std::vector<VerifyReport>& reports);

}  // namespace steiner
