#include "steiner/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "steiner/io.hpp"
#include "steiner/verify.hpp"

namespace steiner {

namespace {

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

void emit_json(const std::optional<std::string>& path,
               const nlohmann::json& j) {
  const std::string text = j.dump(2) + "\n";
  if (path)
    write_file(*path, text);
  else
    std::cout << text;
}

Point2 as_point(const std::vector<double>& v, const char* what) {
  if (v.size() != 2)
    throw std::invalid_argument(std::string(what) + " needs two numbers");
  return {v[0], v[1]};
}

// ---------------------------------------------------------------------------
// default verification suite
// ---------------------------------------------------------------------------

std::vector<VerifyReport> run_default_suite(std::uint64_t seed) {
  std::vector<VerifyReport> reports;
  auto tag = [&](VerifyReport r, const std::string& suffix) {
    r.name += ":" + suffix;
    reports.push_back(std::move(r));
  };

  // sampler calibration across the default alpha grid
  for (double alpha : {2.0, 1.5, 1.0, 0.5}) {
    SimParams p;
    p.t = 1.0;
    p.n = 200000;
    p.seed = derive_seed(seed, static_cast<std::uint64_t>(alpha * 100));
    tag(check_sampler_calibration(StableIndex(alpha), p),
        "alpha=" + fmt17(alpha));
  }

  // one mediator symmetrization of a scalene triangle
  {
    const Polygon tri({{0.0, 0.0}, {1.4, 0.0}, {0.3, 0.9}});
    const Line med = triangle_mediator(tri, 0);
    for (double alpha : {2.0, 1.0}) {
      SimParams p;
      p.t = 0.3;
      p.m = 64;
      p.n = 40000;
      p.seed = derive_seed(seed, 200 + static_cast<std::uint64_t>(alpha));
      tag(check_symmetrization_monotonicity(tri, med, {0.5, 0.3},
                                            StableIndex(alpha), p),
          "triangle-mediator-alpha=" + fmt17(alpha));
    }
  }

  // triangle schedule toward the equilateral limit
  {
    const Polygon tri({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}});
    const auto sched = triangle_schedule(tri, {0.25, 0.25}, 15);
    const Polygon target =
        align_pose(regular_polygon(3, area(tri)), sched.back().polygon,
                   2.0 * std::numbers::pi / 3.0);
    SimParams p;
    p.t = 0.2;
    p.m = 48;
    p.n = 20000;
    p.seed = derive_seed(seed, 301);
    tag(check_schedule_convergence(sched, target, StableIndex(2.0), p,
                                   1e-2 * diameter(tri)),
        "triangle-15-steps");
  }

  // rectangle squaring schedule
  {
    const auto sched = rect_to_square_schedule(RectParams(1.0, 0.5), 8);
    const double side = std::sqrt(area(sched.front().polygon));
    const Polygon target = RectParams(side / 2.0, side / 2.0).polygon();
    for (double alpha : {2.0, 1.0}) {
      SimParams p;
      p.t = 0.3;
      p.m = 48;
      p.n = 20000;
      p.seed = derive_seed(seed, 400 + static_cast<std::uint64_t>(alpha));
      tag(check_schedule_convergence(sched, target, StableIndex(alpha), p,
                                     1e-6 * diameter(target)),
          "rect-8-stages-alpha=" + fmt17(alpha));
    }
  }

  // regular-polygon extremality at reduced scale
  {
    const Polygon tri({{0.0, 0.0}, {3.0, 0.0}, {0.0, 4.0}});
    SimParams p;
    p.t = 1.8;
    p.m = 48;
    p.n = 3000;
    p.seed = derive_seed(seed, 500);
    tag(check_polya_szego(3, tri, StableIndex(2.0), p, 5, 300000),
        "3-4-5-triangle");
  }

  // eigenvalue ordering: 2:1 rectangle of unit area against the unit square
  {
    const double a = std::sqrt(2.0) / 2.0, b = std::sqrt(2.0) / 4.0;
    SimParams p;
    p.m = 96;
    p.n = 300000;
    p.bridge_correction = true;
    p.seed = derive_seed(seed, 600);
    tag(check_eigenvalue_ordering(4, RectParams(a, b).polygon(), p),
        "rect-2to1");
  }

  return reports;
}

// ---------------------------------------------------------------------------
// subcommands
// ---------------------------------------------------------------------------

struct CommonSim {
  double alpha = 2.0;
  int m = 128;
  std::int64_t n = 100000;
  std::uint64_t seed = 1;
  bool bridge = false;
};

void add_sim_options(CLI::App* cmd, CommonSim& c) {
  cmd->add_option("--alpha", c.alpha, "stability index in (0, 2]")
      ->default_val(2.0);
  cmd->add_option("--m", c.m, "skeleton steps")->default_val(128);
  cmd->add_option("--n", c.n, "sample paths")->default_val(100000);
  cmd->add_option("--seed", c.seed, "RNG seed (fixed default)")
      ->default_val(1);
  cmd->add_flag("--bridge", c.bridge,
                "enable the Brownian bridge crossing correction (alpha = 2)");
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{
      "Steiner symmetrization and first-exit-time Monte Carlo for planar "
      "polygons"};
  app.require_subcommand(1);

  // symmetrize
  std::string sym_polygon, sym_line;
  std::optional<std::string> sym_out;
  auto* sym = app.add_subcommand(
      "symmetrize", "Steiner-symmetrize a polygon about a line");
  sym->add_option("--polygon", sym_polygon, "polygon JSON file")->required();
  sym->add_option("--line", sym_line, "line JSON file")->required();
  sym->add_option("--out", sym_out, "output polygon JSON file");

  // schedule
  std::string sch_kind;
  std::string sch_polygon;
  std::vector<double> sch_rect, sch_track;
  int sch_steps = 30, sch_stages = 20;
  std::optional<std::string> sch_out, sch_csv;
  auto* sch = app.add_subcommand("schedule", "run a symmetrization schedule");
  sch->add_option("--kind", sch_kind, "triangle | quad | rect")
      ->required()
      ->check(CLI::IsMember({"triangle", "quad", "rect"}));
  sch->add_option("--polygon", sch_polygon,
                  "polygon JSON file (triangle/quad)");
  sch->add_option("--rect", sch_rect, "half-extents a,b (rect)")
      ->delimiter(',')
      ->expected(2);
  sch->add_option("--track", sch_track,
                  "tracked point x,y (default: centroid / origin)")
      ->delimiter(',')
      ->expected(2);
  sch->add_option("--steps", sch_steps, "triangle mediator steps")
      ->default_val(30);
  sch->add_option("--stages", sch_stages, "rectangle squaring stages")
      ->default_val(20);
  sch->add_option("--out", sch_out, "schedule JSON file");
  sch->add_option("--csv", sch_csv, "schedule CSV table");

  // exitprob
  std::string ep_polygon;
  std::vector<double> ep_x0, ep_tlist;
  double ep_t = 0.3;
  CommonSim ep_sim;
  std::optional<std::string> ep_out, ep_csv;
  auto* ep = app.add_subcommand("exitprob",
                                "estimate P_x(first exit time > t)");
  ep->add_option("--polygon", ep_polygon, "polygon JSON file")->required();
  ep->add_option("--x0", ep_x0, "start point x,y")
      ->delimiter(',')
      ->expected(2)
      ->required();
  ep->add_option("--t", ep_t, "time horizon")->default_val(0.3);
  ep->add_option("--t-list", ep_tlist,
                 "ascending horizons evaluated on shared paths")
      ->delimiter(',');
  add_sim_options(ep, ep_sim);
  ep->add_option("--out", ep_out, "estimate JSON file");
  ep->add_option("--csv", ep_csv, "curve CSV file");

  // eigen
  std::string ei_polygon;
  std::vector<double> ei_x0;
  double ei_t1 = 0.3, ei_t2 = 0.5;
  CommonSim ei_sim;
  std::optional<std::string> ei_out;
  auto* ei = app.add_subcommand(
      "eigen", "log-slope estimate of the principal Dirichlet eigenvalue");
  ei->add_option("--polygon", ei_polygon, "polygon JSON file")->required();
  ei->add_option("--x0", ei_x0, "start point x,y (default: centroid)")
      ->delimiter(',')
      ->expected(2);
  ei->add_option("--t1", ei_t1, "first horizon")->required();
  ei->add_option("--t2", ei_t2, "second horizon")->required();
  add_sim_options(ei, ei_sim);
  ei->add_option("--out", ei_out, "estimate JSON file");

  // verify
  std::uint64_t vf_seed = 1;
  std::optional<std::string> vf_json, vf_csv;
  auto* vf = app.add_subcommand("verify", "run the default check suite");
  vf->add_option("--seed", vf_seed, "suite seed")->default_val(1);
  vf->add_option("--json", vf_json, "reports JSON file");
  vf->add_option("--csv", vf_csv, "reports CSV file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*sym) {
      const Polygon P = polygon_from_json(read_json_file(sym_polygon));
      const Line L = line_from_json(read_json_file(sym_line));
      const Polygon S = steiner_symmetrize(P, L);
      std::cout << "area " << fmt17(area(P)) << " -> " << fmt17(area(S))
                << "\ndiameter " << fmt17(diameter(P)) << " -> "
                << fmt17(diameter(S)) << "\n";
      emit_json(sym_out, to_json(S));
      return 0;
    }

    if (*sch) {
      std::vector<ScheduleState> states;
      if (sch_kind == "rect") {
        if (sch_rect.size() != 2)
          throw std::invalid_argument("--rect a,b is required for kind=rect");
        states = rect_to_square_schedule(RectParams(sch_rect[0], sch_rect[1]),
                                         sch_stages);
      } else {
        if (sch_polygon.empty())
          throw std::invalid_argument("--polygon is required for this kind");
        const Polygon P = polygon_from_json(read_json_file(sch_polygon));
        const Point2 x0 = sch_track.empty() ? centroid(P)
                                            : as_point(sch_track, "--track");
        states = sch_kind == "triangle" ? triangle_schedule(P, x0, sch_steps)
                                        : quad_to_rectangle(P, x0);
      }
      std::cout << "states " << states.size() << ", final area "
                << fmt17(area(states.back().polygon)) << "\n";
      if (sch_csv) write_file(*sch_csv, schedule_csv(states));
      emit_json(sch_out, to_json(states));
      return 0;
    }

    if (*ep) {
      const Polygon P = polygon_from_json(read_json_file(ep_polygon));
      SimParams params;
      params.m = ep_sim.m;
      params.n = ep_sim.n;
      params.seed = ep_sim.seed;
      params.bridge_correction = ep_sim.bridge;
      const StableIndex idx(ep_sim.alpha);
      const Point2 x0 = as_point(ep_x0, "--x0");
      std::vector<double> horizons = ep_tlist;
      if (horizons.empty()) horizons = {ep_t};
      params.t = horizons.back();
      const auto curve = estimate_exit_curve(P, x0, idx, params, horizons);
      if (ep_csv) write_file(*ep_csv, curve_csv(curve));
      if (curve.size() == 1)
        emit_json(ep_out, to_json(curve.front()));
      else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : curve) arr.push_back(to_json(e));
        emit_json(ep_out, arr);
      }
      return 0;
    }

    if (*ei) {
      const Polygon P = polygon_from_json(read_json_file(ei_polygon));
      SimParams params;
      params.t = ei_t2;
      params.m = ei_sim.m;
      params.n = ei_sim.n;
      params.seed = ei_sim.seed;
      params.bridge_correction = ei_sim.bridge;
      const Point2 x0 =
          ei_x0.empty() ? centroid(P) : as_point(ei_x0, "--x0");
      const auto est = estimate_eigenvalue(P, x0, StableIndex(ei_sim.alpha),
                                           params, ei_t1, ei_t2);
      std::cout << "lambda " << fmt17(est.lambda_hat) << " +- "
                << fmt17(est.std_err) << "\n";
      emit_json(ei_out, to_json(est));
      return 0;
    }

    if (*vf) {
      const auto reports = run_default_suite(vf_seed);
      bool all_passed = true;
      for (const auto& r : reports) {
        all_passed = all_passed && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name
                  << " (statistic=" << fmt17(r.statistic)
                  << ", threshold=" << fmt17(r.threshold) << ")\n";
      }
      if (vf_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        write_file(*vf_json, arr.dump(2) + "\n");
      }
      if (vf_csv) write_file(*vf_csv, reports_csv(reports));
      return all_passed ? 0 : 1;
    }
  } catch (const std::exception& e) {
    nlohmann::json err{{"error", e.what()}};
    std::cerr << err.dump() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace steiner
