#include "steiner/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace steiner {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

nlohmann::json point_json(Point2 p) { return nlohmann::json::array({p.x, p.y}); }

Point2 point_from(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw std::invalid_argument(std::string(what) +
                                " must be a two-element number array");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

nlohmann::json to_json(const Polygon& P) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : P.vertices()) verts.push_back(point_json(v));
  return nlohmann::json{{"vertices", std::move(verts)}};
}

Polygon polygon_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw std::invalid_argument("polygon JSON needs a \"vertices\" array");
  std::vector<Point2> verts;
  for (const auto& v : j["vertices"]) verts.push_back(point_from(v, "vertex"));
  return Polygon(std::move(verts));
}

nlohmann::json to_json(const Line& line) {
  return nlohmann::json{{"anchor", point_json(line.anchor())},
                        {"direction", point_json(line.direction())}};
}

Line line_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("anchor") || !j.contains("direction"))
    throw std::invalid_argument(
        "line JSON needs \"anchor\" and \"direction\"");
  const Point2 anchor = point_from(j["anchor"], "anchor");
  const Vec2 dir = point_from(j["direction"], "direction");
  if (dir.norm() == 0.0)
    throw std::invalid_argument("line direction must be nonzero");
  return Line(anchor, dir.normalized());
}

nlohmann::json to_json(const ExitEstimate& e) {
  return nlohmann::json{{"p_hat", e.p_hat}, {"std_err", e.std_err},
                        {"n", e.n},         {"m", e.m},
                        {"t", e.t},         {"alpha", e.alpha},
                        {"seed", e.seed},   {"bridge", e.bridge}};
}

nlohmann::json to_json(const ScheduleState& s) {
  nlohmann::json j{{"step", s.step},
                   {"vertices", to_json(s.polygon)["vertices"]},
                   {"tracked", point_json(s.tracked)}};
  j["line"] = s.last_line ? to_json(*s.last_line) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const std::vector<ScheduleState>& schedule) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : schedule) arr.push_back(to_json(s));
  return arr;
}

nlohmann::json to_json(const EigenvalueEstimate& e) {
  return nlohmann::json{{"lambda_hat", e.lambda_hat},
                        {"std_err", e.std_err},
                        {"at_t1", to_json(e.at_t1)},
                        {"at_t2", to_json(e.at_t2)}};
}

nlohmann::json to_json(const VerifyReport& r) {
  return nlohmann::json{{"name", r.name},
                        {"passed", r.passed},
                        {"statistic", r.statistic},
                        {"threshold", r.threshold},
                        {"seed", r.seed},
                        {"details", r.details},
                        {"notes", r.notes}};
}

std::string curve_csv(const std::vector<ExitEstimate>& curve) {
  std::ostringstream out;
  out << "t,p_hat,std_err,n,m,alpha,seed,bridge\n";
  for (const auto& e : curve)
    out << fmt17(e.t) << ',' << fmt17(e.p_hat) << ',' << fmt17(e.std_err)
        << ',' << e.n << ',' << e.m << ',' << fmt17(e.alpha) << ',' << e.seed
        << ',' << (e.bridge ? 1 : 0) << '\n';
  return out.str();
}

namespace {

// Side ratio b/a when the state is an axis-aligned rectangle centered at the
// origin; empty otherwise.
std::string rect_ratio_column(const Polygon& P) {
  if (P.size() != 4) return "";
  double a = 0.0, b = 0.0;
  for (const auto& v : P.vertices()) {
    a = std::max(a, std::abs(v.x));
    b = std::max(b, std::abs(v.y));
  }
  const double tol = 1e-9 * std::max(a, b);
  for (const auto& v : P.vertices())
    if (std::abs(std::abs(v.x) - a) > tol || std::abs(std::abs(v.y) - b) > tol)
      return "";
  return fmt17(b / a);
}

}  // namespace

std::string schedule_csv(const std::vector<ScheduleState>& schedule) {
  std::ostringstream out;
  out << "step,n_vertices,area,diameter,min_angle,c\n";
  for (const auto& s : schedule)
    out << s.step << ',' << s.polygon.size() << ',' << fmt17(area(s.polygon))
        << ',' << fmt17(diameter(s.polygon)) << ','
        << fmt17(min_interior_angle(s.polygon)) << ','
        << rect_ratio_column(s.polygon) << '\n';
  return out.str();
}

std::string reports_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream out;
  out << "name,passed,statistic,threshold,seed\n";
  for (const auto& r : reports)
    out << r.name << ',' << (r.passed ? 1 : 0) << ',' << fmt17(r.statistic)
        << ',' << fmt17(r.threshold) << ',' << r.seed << '\n';
  return out.str();
}

}  // namespace steiner
