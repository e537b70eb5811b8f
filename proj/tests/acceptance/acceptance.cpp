// Acceptance suite: one PASS/FAIL line per criterion.
//
//   wecopt_acceptance            run every criterion
//   wecopt_acceptance AC3 AC7    run a subset
//
// Exit status is 0 only if every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "oracles.hpp"
#include "wecopt/dynamics/spectral_solver.hpp"
#include "wecopt/hydrodyn/analytic_hydro.hpp"
#include "wecopt/hydrodyn/hydro_provider.hpp"
#include "wecopt/objectives/climate.hpp"
#include "wecopt/objectives/evaluation.hpp"
#include "wecopt/optimize/algorithms.hpp"
#include "wecopt/optimize/hybrid.hpp"
#include "wecopt/optimize/sweep.hpp"
#include "wecopt/optimize/trace_io.hpp"

namespace {

using namespace wecopt;
namespace fs = std::filesystem;

const fs::path kData = WECOPT_TEST_DATA;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double Median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

// Random admissible design (single sea state) and sea state.
struct RandomCase {
  WecGeometry geom;
  PtoSetting pto;
  SeaState sea;
};

RandomCase DrawCase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RandomCase c;
  c.geom.radius = 5.0 + 15.0 * u(rng);
  c.geom.height = c.geom.radius * (0.4 + 1.1 * u(rng));
  c.geom.tether_inclination_deg = 10.0 + 70.0 * u(rng);
  c.geom.attachment_angle_deg = 10.0 + 70.0 * u(rng);
  c.pto.stiffness = std::pow(10.0, 3.0 + 5.0 * u(rng));
  c.pto.damping = std::pow(10.0, 3.0 + 5.0 * u(rng));
  c.sea.hs = 0.5 + 4.5 * u(rng);
  c.sea.tp = 5.0 + 10.0 * u(rng);
  return c;
}

WaveClimate ToyClimate() { return LoadClimate(kData / "toy_climate.csv"); }

Outcome Linearisation() {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  int bad_iterations = 0;
  for (int i = 0; i < 20; ++i) {
    const RandomCase c = DrawCase(rng);
    const HydroCoefficients hc = AnalyticHydro(c.geom, FrequencyGrid::Default());
    const SpectralModel model(c.geom, hc, DragModel::Zero());
    SolverOptions opt;
    opt.keep_psd = true;
    const SpectralResponse r = model.Solve(c.pto, c.sea, opt);
    if (r.iterations != 1 || !r.converged) ++bad_iterations;
    const auto oracle = testing::ClosedFormPsd(c.geom, hc, c.pto, c.sea);
    for (std::size_t n = 0; n < oracle.size(); ++n) {
      const double scale = oracle[n].norm();
      if (scale > 0.0) worst = std::max(worst, (r.psd[n] - oracle[n]).norm() / scale);
    }
  }
  return {bad_iterations == 0 && worst <= 1e-10,
          "20 designs, passes != 1: " + std::to_string(bad_iterations) +
              ", max relative PSD error " + Sci(worst) + " (limit 1e-10)"};
}

struct HeaveCase {
  WecGeometry geom;
  PtoSetting pto;
  SeaState sea;
};

Outcome TimeDomainOracle() {
  std::vector<HeaveCase> cases(2);
  cases[0].geom.tether_inclination_deg = 0.0;
  cases[0].pto = {2e5, 1.5e5};
  cases[0].sea = {3.0, 8.0};
  cases[1].geom.radius = 10.0;
  cases[1].geom.height = 4.0;
  cases[1].geom.tether_inclination_deg = 0.0;
  cases[1].pto = {1e5, 5e4};
  cases[1].sea = {4.0, 10.0};

  bool pass = true;
  std::string detail;
  const FrequencyGrid grid = FrequencyGrid::Uniform(0.1, 3.0, 400);
  for (const HeaveCase& c : cases) {
    const HydroCoefficients hc =
        testing::HeaveSurrogateHydro(c.geom, grid, c.sea.PeakFrequency());
    const DragModel drag = BuildDragModel(c.geom);
    const SpectralModel model(c.geom, hc, drag);
    const SpectralResponse r = model.Solve(c.pto, c.sea);

    testing::HeaveOscillator osc;
    osc.inertia = MassMatrix(c.geom)(kHeave, kHeave) + hc.added_mass[0](kHeave, kHeave);
    osc.damping = hc.radiation_damping[0](kHeave, kHeave) + 3.0 * c.pto.damping;
    osc.stiffness = 3.0 * c.pto.stiffness;
    osc.drag = drag.QuadraticCoefficient(kHeave, c.geom.water_density);
    osc.pto_damping = 3.0 * c.pto.damping;

    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      sum += testing::SimulateHeavePower(osc, hc, c.sea, seed);
    }
    const double mc = sum / 20.0;
    const double rel = std::abs(r.power - mc) / mc;
    pass = pass && r.converged && rel <= 0.15;
    detail += (detail.empty() ? "" : "; ") + std::string("a=") + Sci(c.geom.radius) +
              " spectral " + Sci(r.power) + " W vs Monte-Carlo " + Sci(mc) +
              " W, rel " + Sci(rel);
  }
  return {pass, detail + " (limit 0.15)"};
}

Outcome Overestimation() {
  std::mt19937_64 rng(77);
  int violations = 0;
  double min_ratio = INFINITY;
  for (int i = 0; i < 50; ++i) {
    const RandomCase c = DrawCase(rng);
    const HydroCoefficients hc = AnalyticHydro(c.geom, FrequencyGrid::Default());
    const double fd = SpectralModel(c.geom, hc, DragModel::Zero()).Solve(c.pto, c.sea).power;
    const double sd = SpectralModel(c.geom, hc, BuildDragModel(c.geom)).Solve(c.pto, c.sea).power;
    if (!(fd >= sd)) ++violations;
    if (sd > 0.0) min_ratio = std::min(min_ratio, fd / sd);
  }
  return {violations == 0, "50 designs, violations " + std::to_string(violations) +
                               ", min P_fd/P_sd " + Sci(min_ratio)};
}

Outcome ConvergenceEconomy() {
  std::mt19937_64 rng(99);
  int fast[2] = {0, 0};
  for (int i = 0; i < 100; ++i) {
    const RandomCase c = DrawCase(rng);
    const SpectralModel model(c.geom, AnalyticHydro(c.geom, FrequencyGrid::Default()),
                              BuildDragModel(c.geom));
    for (int k = 0; k < 2; ++k) {
      SolverOptions opt;
      opt.update = k == 0 ? LinearisationUpdate::kSecant : LinearisationUpdate::kDirect;
      const SpectralResponse r = model.Solve(c.pto, c.sea, opt);
      if (r.converged && r.iterations <= 10) ++fast[k];
    }
  }
  return {fast[0] >= 95, "converged within 10 passes: " + std::to_string(fast[0]) +
                             "/100 (default update), " + std::to_string(fast[1]) +
                             "/100 (plain substitution); need 95"};
}

Outcome PowerTrend() {
  const Evaluator ev(ToyClimate(), std::make_shared<AnalyticHydroProvider>());
  OptimiserConfig cfg;
  cfg.algorithm = Algorithm::kHybridDeNm;
  cfg.budget = 1000;
  cfg.seed = 0;
  const std::vector<double> radii{8, 12, 16, 20}, aspects{0.4, 1.0, 1.5};
  const auto rows = SweepGrid(radii, aspects, ObjectiveKind::kPower, ev, cfg);
  int violations = 0;
  bool failed = false;
  std::string table;
  for (std::size_t j = 0; j < aspects.size(); ++j) {
    table += " H/a=" + Sci(aspects[j]) + ":";
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const SurfaceRow& r = rows[i * aspects.size() + j];
      failed = failed || r.failed;
      table += " " + Sci(r.objective_value / 1e3);
      if (i > 0 && r.objective_value < rows[(i - 1) * aspects.size() + j].objective_value) {
        ++violations;
      }
    }
  }
  return {!failed && violations <= 1, "adjacent-pair violations " + std::to_string(violations) +
                                          " (max 1); best power kW by radius" + table};
}

Outcome MassModel() {
  const double slope = kReferenceAnchorMass / kReferencePeakForce;
  double worst = 0.0;
  for (double f : {1.0, 2.5e5, 1.94e6, 7.3e6, 4.4e7}) {
    worst = std::max(worst, std::abs(AnchorMass(f) - slope * f) / (slope * f));
  }
  bool exact = true;
  for (double p : {1.0, 3.3e4, 6.8e5, 1.8e6, 9.1e7}) {
    for (double m : {2.7e5, 4.47e5, 6.6e6}) {
      exact = exact && LcoeProxy(4.0 * p, m) == 0.5 * LcoeProxy(p, m);
    }
  }
  const bool rounded = std::abs(slope - 0.1160) < 5e-5;
  return {worst <= 1e-9 && exact && rounded,
          "anchor slope " + Sci(slope) + " kg/N, max rel error " + Sci(worst) +
              "; LCoE halves at 4x energy: " + (exact ? "exact" : "NOT exact")};
}

Outcome OptimiserBenchmarks() {
  auto medians = [](Algorithm a, const Objective& f, std::size_t n, double lo, double hi) {
    std::vector<double> best;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      OptimiserConfig cfg;
      cfg.algorithm = a;
      cfg.budget = 5000;
      cfg.seed = seed;
      const Bounds box(std::vector<double>(n, lo), std::vector<double>(n, hi));
      best.push_back(RunOptimiser(f, box, cfg).best_value);
    }
    return Median(best);
  };
  const double cma = medians(Algorithm::kCmaes, testing::Sphere, 10, -5, 5);
  const double de = medians(Algorithm::kDe, testing::Sphere, 10, -5, 5);
  const double pso = medians(Algorithm::kPso, testing::Sphere, 10, -5, 5);
  const double ea = medians(Algorithm::kOnePlusOneEa, testing::Sphere, 10, -5, 5);
  const double nm = medians(Algorithm::kNelderMead, testing::Sphere, 5, -5, 5);
  const double sade_r = medians(Algorithm::kSade, testing::Rastrigin, 10, -5.12, 5.12);
  const double de_r = medians(Algorithm::kDe, testing::Rastrigin, 10, -5.12, 5.12);
  const bool pass = cma < 1e-8 && de < 1e-6 && pso < 1e-3 && ea < 1e-2 && nm < 1e-6 &&
                    sade_r <= de_r;
  return {pass, "medians: CMAES " + Sci(cma) + " (<1e-8), DE " + Sci(de) + " (<1e-6), PSO " +
                    Sci(pso) + " (<1e-3), 1+1EA " + Sci(ea) + " (<1e-2), NM/5D " + Sci(nm) +
                    " (<1e-6), Rastrigin SaDE " + Sci(sade_r) + " <= DE " + Sci(de_r)};
}

int InvokeCli(std::vector<std::string> args, std::string* out = nullptr) {
  args.insert(args.begin(), "wecopt");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream o, e;
  const int code = cli::Run(static_cast<int>(argv.size()), argv.data(), o, e);
  if (out) *out = o.str();
  if (code != 0) std::fprintf(stderr, "%s", e.str().c_str());
  return code;
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome BudgetFidelity() {
  const fs::path dir = fs::temp_directory_path() / "wecopt_acceptance_campaign";
  fs::remove_all(dir);
  const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  const int code = InvokeCli({"optimise", "--climate", (kData / "toy_climate.csv").string(),
                              "--budget", "5000", "--repeats", "10", "--algo", "all", "--seed",
                              "0", "--jobs", std::to_string(jobs), "--out", dir.string()});
  int traces = 0, too_long = 0, non_monotone = 0, stat_mismatch = 0;
  for (Algorithm a : StandardAlgorithms()) {
    std::vector<double> finals;
    for (int s = 0; s < 10; ++s) {
      const fs::path p = dir / "traces" / (cli::RunStem(ObjectiveKind::kPower, a, s) + ".csv");
      if (!fs::exists(p)) continue;
      const auto t = LoadTraceCsv(p);
      ++traces;
      if (t.size() > 5000) ++too_long;
      // Power traces are written in watts, so best-so-far never decreases.
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i] < t[i - 1]) {
          ++non_monotone;
          break;
        }
      }
      if (!t.empty()) finals.push_back(t.back());
    }
    const auto summary = nlohmann::json::parse(
        Slurp(dir / "summaries" / ("power_" + ToString(a) + ".json")), nullptr, false);
    if (finals.empty() || summary.is_discarded() || summary["stats"].is_null()) {
      ++stat_mismatch;
      continue;
    }
    const BoxStats b = ComputeBoxStats(finals);
    const auto& s = summary["stats"];
    if (s["min"].get<double>() != b.min || s["q1"].get<double>() != b.q1 ||
        s["median"].get<double>() != b.median || s["q3"].get<double>() != b.q3 ||
        s["max"].get<double>() != b.max) {
      ++stat_mismatch;
    }
  }
  fs::remove_all(dir);
  return {code == 0 && traces == 60 && too_long == 0 && non_monotone == 0 && stat_mismatch == 0,
          "exit " + std::to_string(code) + ", traces " + std::to_string(traces) +
              "/60, over budget " + std::to_string(too_long) + ", non-monotone " +
              std::to_string(non_monotone) + ", summary mismatches " +
              std::to_string(stat_mismatch)};
}

Outcome Determinism() {
  const Evaluator ev(ToyClimate(), std::make_shared<AnalyticHydroProvider>());
  const Bounds box(ev.space().lower(), ev.space().upper());
  const Objective f = [&](std::span<const double> x) {
    return ev.Objective(x, ObjectiveKind::kLcoe);
  };
  auto csv = [](const RunTrace& t) {
    std::ostringstream ss;
    WriteTraceCsv(ss, t);
    return ss.str();
  };
  int identical = 0, total = 0;
  std::vector<Algorithm> algos = StandardAlgorithms();
  for (Algorithm a : algos) {
    OptimiserConfig cfg;
    cfg.algorithm = a;
    cfg.budget = 300;
    cfg.seed = 31;
    ++total;
    identical += csv(RunOptimiser(f, box, cfg)) == csv(RunOptimiser(f, box, cfg));
  }
  OptimiserConfig hyb;
  hyb.algorithm = Algorithm::kHybridDeNm;
  hyb.budget = 300;
  hyb.seed = 31;
  hyb.hybrid.de_budget = 100;
  hyb.hybrid.nm_budget = 50;
  ++total;
  identical += csv(RunHybridDeNm(f, 10.0, 0.8, box, hyb)) ==
               csv(RunHybridDeNm(f, 10.0, 0.8, box, hyb));

  // Same campaign through the CLI, serial and parallel.
  const fs::path dir = fs::temp_directory_path() / "wecopt_acceptance_determinism";
  fs::remove_all(dir);
  const std::string climate = (kData / "toy_climate.csv").string();
  InvokeCli({"optimise", "--climate", climate, "--budget", "200", "--repeats", "2", "--algo",
             "all", "--out", (dir / "a").string(), "--jobs", "1"});
  InvokeCli({"optimise", "--climate", climate, "--budget", "200", "--repeats", "2", "--algo",
             "all", "--out", (dir / "b").string(), "--jobs", "4"});
  for (const auto& e : fs::directory_iterator(dir / "a" / "traces")) {
    ++total;
    identical += Slurp(e.path()) == Slurp(dir / "b" / "traces" / e.path().filename());
  }
  fs::remove_all(dir);
  return {identical == total && total == 19,
          std::to_string(identical) + "/" + std::to_string(total) +
              " reruns byte-identical (7 in-process, 12 via CLI with 1 vs 4 jobs)"};
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::map<std::string, Criterion> criteria{
      {"AC1", {"linearisation correctness without drag", Linearisation}},
      {"AC2", {"statistical linearisation vs time-domain Monte-Carlo", TimeDomainOracle}},
      {"AC3", {"frequency-domain power overestimates spectral power", Overestimation}},
      {"AC4", {"linearisation converges within 10 passes", ConvergenceEconomy}},
      {"AC5", {"best power grows with radius", PowerTrend}},
      {"AC6", {"anchor mass and LCoE scaling", MassModel}},
      {"AC7", {"optimiser benchmark suite", OptimiserBenchmarks}},
      {"AC8", {"campaign budget and repeat fidelity", BudgetFidelity}},
      {"AC9", {"seeded runs are byte-identical", Determinism}},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  if (selected.empty()) {
    for (const auto& [id, c] : criteria) selected.push_back(id);
  }
  bool all = true;
  for (const auto& id : selected) {
    const auto it = criteria.find(id);
    if (it == criteria.end()) {
      std::printf("%s FAIL unknown criterion\n", id.c_str());
      all = false;
      continue;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = it->second.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s %s: %s [%.1f s]\n", id.c_str(), o.pass ? "PASS" : "FAIL",
                it->second.title, o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
