#include "cli.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "wecopt/errors.hpp"
#include "wecopt/hydrodyn/analytic_hydro.hpp"
#include "wecopt/hydrodyn/hydro_provider.hpp"
#include "wecopt/hydrodyn/hydro_table.hpp"
#include "wecopt/objectives/climate.hpp"
#include "wecopt/objectives/design.hpp"
#include "wecopt/objectives/evaluation.hpp"
#include "wecopt/optimize/sweep.hpp"
#include "wecopt/optimize/trace_io.hpp"

namespace wecopt::cli {
namespace {

namespace fs = std::filesystem;

// Runs task(i) for i in [0, n) on up to `jobs` threads. Tasks must not throw.
template <typename Task>
void ParallelFor(std::size_t n, int jobs, Task task) {
  const std::size_t workers =
      std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) task(i);
    });
  }
  for (auto& t : pool) t.join();
}

struct Flags {
  std::string config;
  std::string objective;
  std::string algo;
  std::size_t budget = 0;
  int repeats = 0;
  std::uint64_t seed = 0;
  std::string climate;
  std::string hydro;
  int jobs = 0;
  std::string out;
  std::string radii;
  std::string aspects;

  CLI::Option* objective_opt = nullptr;
  CLI::Option* algo_opt = nullptr;
  CLI::Option* budget_opt = nullptr;
  CLI::Option* repeats_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* climate_opt = nullptr;
  CLI::Option* hydro_opt = nullptr;
  CLI::Option* jobs_opt = nullptr;
  CLI::Option* out_opt = nullptr;
  CLI::Option* radii_opt = nullptr;
  CLI::Option* aspects_opt = nullptr;
};

bool Given(const CLI::Option* opt) { return opt != nullptr && opt->count() > 0; }

void AddDataFlags(CLI::App* app, Flags& f) {
  app->add_option("--config", f.config, "JSON configuration file")->check(CLI::ExistingFile);
  f.climate_opt = app->add_option("--climate", f.climate, "wave climate CSV (hs,tp,probability)");
  f.hydro_opt = app->add_option("--hydro", f.hydro, "'analytic' or a hydro table path");
  f.out_opt = app->add_option("--out", f.out, "output directory");
}

void AddSearchFlags(CLI::App* app, Flags& f, bool with_algo) {
  f.objective_opt = app->add_option("--objective", f.objective, "power | lcoe");
  if (with_algo) {
    f.algo_opt = app->add_option("--algo", f.algo, "comma-separated algorithm tags or 'all'");
    f.repeats_opt = app->add_option("--repeats", f.repeats, "independent runs per algorithm");
  }
  f.budget_opt = app->add_option("--budget", f.budget, "objective evaluations per run");
  f.seed_opt = app->add_option("--seed", f.seed, "base RNG seed");
  f.jobs_opt = app->add_option("--jobs", f.jobs, "parallel runs");
}

CampaignConfig Resolve(const Flags& f) {
  CampaignConfig c = f.config.empty() ? CampaignConfig{} : LoadCampaignConfig(f.config);
  if (Given(f.objective_opt)) c.objective = ParseObjectiveKind(f.objective);
  if (Given(f.algo_opt)) c.algorithms = ParseAlgorithmList(f.algo);
  if (Given(f.budget_opt)) c.budget = f.budget;
  if (Given(f.repeats_opt)) c.repeats = f.repeats;
  if (Given(f.seed_opt)) c.seed = f.seed;
  if (Given(f.climate_opt)) c.climate = f.climate;
  if (Given(f.hydro_opt)) c.hydro = f.hydro;
  if (Given(f.jobs_opt)) c.jobs = f.jobs;
  if (Given(f.out_opt)) c.out = f.out;
  if (Given(f.radii_opt)) c.radii = ParseNumberList(f.radii);
  if (Given(f.aspects_opt)) c.aspects = ParseNumberList(f.aspects);
  c.Validate();
  return c;
}

Evaluator MakeEvaluator(const CampaignConfig& c) {
  return Evaluator(LoadClimate(c.climate), MakeHydroProvider(c.hydro), c.Grid(),
                   c.solver);
}

std::ofstream OpenOutput(const fs::path& path, std::ios::openmode mode = std::ios::trunc) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::out | mode);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

void AppendRecords(const fs::path& out_dir, const std::vector<EvaluationRecord>& records) {
  auto log = OpenOutput(out_dir / "evaluations.jsonl", std::ios::app);
  for (const auto& r : records) log << ToJsonLine(r) << '\n';
}

std::string Fmt(double v) { return FormatDouble(v); }

int CmdEvaluate(const Flags& f, const std::string& design_path, std::ostream& out) {
  const CampaignConfig c = Resolve(f);
  const Evaluator evaluator = MakeEvaluator(c);
  const DesignVector design = LoadDesign(design_path);
  if (design.states() != evaluator.climate().size()) {
    throw DomainError("design has PTO settings for " + std::to_string(design.states()) +
                      " sea states, climate has " +
                      std::to_string(evaluator.climate().size()));
  }
  const EvaluationRecord r = evaluator.Evaluate(design);

  out << "radius_m          " << Fmt(design.radius) << '\n'
      << "aspect_ratio      " << Fmt(design.aspect_ratio) << '\n'
      << "tether_angle_deg  " << Fmt(design.tether_inclination_deg) << '\n'
      << "attach_angle_deg  " << Fmt(design.attachment_angle_deg) << '\n'
      << "p_aap_w           " << Fmt(r.p_aap) << '\n'
      << "lcoe              " << Fmt(r.lcoe) << '\n'
      << "buoy_mass_kg      " << Fmt(r.buoy_mass) << '\n'
      << "anchor_mass_kg    " << Fmt(r.anchor_mass) << '\n'
      << "peak_force_n      " << Fmt(r.peak_force) << '\n'
      << "converged         " << (r.converged() ? "yes" : "no") << '\n'
      << "state,hs,tp,probability,stiffness,damping,power_w,iterations,converged\n";
  for (std::size_t k = 0; k < design.states(); ++k) {
    const ClimateEntry& e = evaluator.climate().states[k];
    out << k << ',' << Fmt(e.sea.hs) << ',' << Fmt(e.sea.tp) << ','
        << Fmt(e.probability) << ',' << Fmt(design.stiffness[k]) << ','
        << Fmt(design.damping[k]) << ',' << Fmt(r.state_power[k]) << ','
        << r.state_iterations[k] << ',' << (r.state_converged[k] ? 1 : 0) << '\n';
  }
  AppendRecords(c.out, {r});
  return kExitOk;
}

int CmdOptimise(const Flags& f, std::ostream& out, std::ostream& err) {
  const CampaignConfig c = Resolve(f);
  for (Algorithm a : c.algorithms) {
    if (a == Algorithm::kHybridDeNm) {
      throw ConfigError("HybridDENM works at fixed radius and aspect ratio; use 'sweep'");
    }
  }
  const Evaluator evaluator = MakeEvaluator(c);
  const DesignSpace& space = evaluator.space();
  const Bounds bounds(space.lower(), space.upper());
  const ObjectiveKind kind = c.objective;
  const Objective objective = [&](std::span<const double> x) {
    return evaluator.Objective(x, kind);
  };
  OptimiserConfig base = c.optimiser;
  base.budget = c.budget;
  base.repeats = c.repeats;
  const bool maximise = kind == ObjectiveKind::kPower;
  const std::string objective_name = ToString(kind);

  const std::vector<CampaignRun> runs =
      RunCampaign(c.algorithms, c.repeats, c.seed, base, objective, bounds, c.jobs);

  bool any_failed = false;
  std::vector<EvaluationRecord> best_records;
  out << "algorithm,runs,failed,min,q1,median,q3,max\n";
  for (std::size_t a = 0; a < c.algorithms.size(); ++a) {
    const std::string tag = ToString(c.algorithms[a]);
    std::vector<RunSummary> summaries;
    for (int r = 0; r < c.repeats; ++r) {
      const CampaignRun& run = runs[a * c.repeats + r];
      const std::string stem = RunStem(kind, run.algorithm, run.seed);
      RunSummary s;
      s.algorithm = tag;
      s.objective = objective_name;
      s.seed = run.seed;
      s.failed = run.failed;
      s.error = run.error;
      s.evaluations = run.trace.evaluations;
      s.wall_seconds = run.trace.wall_seconds;
      if (!run.failed) {
        s.trace_file = (fs::path("traces") / (stem + ".csv")).string();
        auto trace_out = OpenOutput(c.out / s.trace_file);
        WriteTraceCsv(trace_out, run.trace, maximise);
        s.best_value = maximise ? -run.trace.best_value : run.trace.best_value;
        const DesignVector best = space.Decode(run.trace.best_x);
        s.best_design = best.Flatten();
        try {
          best_records.push_back(evaluator.Evaluate(best));
        } catch (const std::exception& e) {
          err << "warning: re-evaluating best design of " << stem << ": " << e.what() << '\n';
        }
      } else {
        any_failed = true;
        s.best_value = std::nan("");
        err << "run " << stem << " failed: " << run.error << '\n';
      }
      OpenOutput(c.out / "summaries" / (stem + ".json")) << RunSummaryJson(s);
      summaries.push_back(std::move(s));
    }
    OpenOutput(c.out / "summaries" / (objective_name + "_" + tag + ".json"))
        << CampaignSummaryJson(tag, objective_name, summaries);

    std::vector<double> best;
    for (const auto& s : summaries) {
      if (!s.failed) best.push_back(s.best_value);
    }
    out << tag << ',' << summaries.size() << ',' << summaries.size() - best.size();
    if (best.empty()) {
      out << ",nan,nan,nan,nan,nan\n";
    } else {
      const BoxStats b = ComputeBoxStats(best);
      out << ',' << Fmt(b.min) << ',' << Fmt(b.q1) << ',' << Fmt(b.median) << ','
          << Fmt(b.q3) << ',' << Fmt(b.max) << '\n';
    }
  }
  AppendRecords(c.out, best_records);
  return any_failed ? kExitPartialFailure : kExitOk;
}

int CmdSweep(const Flags& f, std::ostream& out, std::ostream& err) {
  const CampaignConfig c = Resolve(f);
  if (c.radii.empty() || c.aspects.empty()) {
    throw ConfigError("sweep needs radii and aspect ratios (--radii, --aspects or config)");
  }
  const Evaluator evaluator = MakeEvaluator(c);
  OptimiserConfig opt = c.optimiser;
  opt.algorithm = Algorithm::kHybridDeNm;
  opt.budget = c.budget;
  opt.seed = c.seed;
  opt.Validate();

  std::vector<std::pair<double, double>> nodes;
  for (double a : c.radii) {
    for (double r : c.aspects) nodes.emplace_back(a, r);
  }
  std::vector<SurfaceRow> rows(nodes.size());
  ParallelFor(nodes.size(), c.jobs, [&](std::size_t i) {
    rows[i] = SweepNode(nodes[i].first, nodes[i].second, c.objective, evaluator, opt);
  });

  const std::string objective_name = ToString(c.objective);
  const bool maximise = c.objective == ObjectiveKind::kPower;
  bool any_failed = false;
  for (const auto& row : rows) {
    const std::string node = objective_name + "_HybridDENM_a" + Fmt(row.radius) + "_r" +
                             Fmt(row.aspect) + "_seed" + std::to_string(c.seed);
    if (row.failed) {
      any_failed = true;
      err << "node a=" << Fmt(row.radius) << " aspect=" << Fmt(row.aspect)
          << " failed: " << row.error << '\n';
      continue;
    }
    auto trace_out = OpenOutput(c.out / "traces" / (node + ".csv"));
    WriteTraceCsv(trace_out, row.trace, maximise);
  }
  std::ostringstream table;
  WriteSurfaceCsv(table, rows);
  OpenOutput(c.out / "surfaces" /
             (objective_name + "_seed" + std::to_string(c.seed) + ".csv"))
      << table.str();
  out << table.str();
  return any_failed ? kExitPartialFailure : kExitOk;
}

int CmdExportHydro(const Flags& f, const std::string& path, double radius,
                   double aspect, std::ostream& out) {
  CampaignConfig c = f.config.empty() ? CampaignConfig{} : LoadCampaignConfig(f.config);
  DesignVector d;
  d.radius = radius;
  d.aspect_ratio = aspect;
  const WecGeometry geom = d.Geometry();
  geom.Validate();
  auto file = OpenOutput(fs::absolute(path));
  WriteHydroTable(file, AnalyticHydro(geom, c.Grid()));
  out << "wrote " << path << '\n';
  return kExitOk;
}

}  // namespace

std::string RunStem(ObjectiveKind kind, Algorithm algorithm, std::uint64_t seed) {
  return ToString(kind) + "_" + ToString(algorithm) + "_seed" + std::to_string(seed);
}

std::vector<CampaignRun> RunCampaign(const std::vector<Algorithm>& algorithms,
                                     int repeats, std::uint64_t seed,
                                     const OptimiserConfig& base,
                                     const Objective& objective,
                                     const Bounds& bounds, int jobs) {
  std::vector<CampaignRun> runs;
  for (Algorithm a : algorithms) {
    for (int r = 0; r < repeats; ++r) {
      CampaignRun run;
      run.algorithm = a;
      run.seed = seed + static_cast<std::uint64_t>(r);
      runs.push_back(std::move(run));
    }
  }
  ParallelFor(runs.size(), jobs, [&](std::size_t i) {
    CampaignRun& run = runs[i];
    OptimiserConfig cfg = base;
    cfg.algorithm = run.algorithm;
    cfg.seed = run.seed;
    try {
      run.trace = RunOptimiser(objective, bounds, cfg);
    } catch (const std::exception& e) {
      run.failed = true;
      run.error = e.what();
    }
  });
  return runs;
}

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral-domain model and design optimiser for a submerged "
               "three-tether wave energy converter"};
  app.name("wecopt");
  app.require_subcommand(1);

  Flags eval_flags, opt_flags, sweep_flags, hydro_flags;
  std::string design_path, hydro_path;
  double radius = 5.5, aspect = 1.0;

  CLI::App* evaluate = app.add_subcommand("evaluate", "evaluate one design on a wave climate");
  evaluate->add_option("design", design_path, "design vector file")->required();
  AddDataFlags(evaluate, eval_flags);

  CLI::App* optimise = app.add_subcommand("optimise", "run an optimisation campaign");
  optimise->alias("optimize");
  AddDataFlags(optimise, opt_flags);
  AddSearchFlags(optimise, opt_flags, true);

  CLI::App* sweep = app.add_subcommand("sweep", "hybrid DE-NM over a radius x aspect grid");
  AddDataFlags(sweep, sweep_flags);
  AddSearchFlags(sweep, sweep_flags, false);
  sweep_flags.radii_opt = sweep->add_option("--radii", sweep_flags.radii, "comma-separated radii [m]");
  sweep_flags.aspects_opt =
      sweep->add_option("--aspects", sweep_flags.aspects, "comma-separated aspect ratios H/a");

  CLI::App* export_hydro =
      app.add_subcommand("export-hydro", "write analytic hydrodynamic coefficients as a table");
  export_hydro->add_option("file", hydro_path, "output table")->required();
  export_hydro->add_option("--config", hydro_flags.config, "JSON configuration (grid)")
      ->check(CLI::ExistingFile);
  export_hydro->add_option("--radius", radius, "buoy radius [m]");
  export_hydro->add_option("--aspect", aspect, "aspect ratio H/a");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (evaluate->parsed()) return CmdEvaluate(eval_flags, design_path, out);
    if (optimise->parsed()) return CmdOptimise(opt_flags, out, err);
    if (sweep->parsed()) return CmdSweep(sweep_flags, out, err);
    if (export_hydro->parsed()) {
      return CmdExportHydro(hydro_flags, hydro_path, radius, aspect, out);
    }
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitPartialFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}

}  // namespace wecopt::cli
