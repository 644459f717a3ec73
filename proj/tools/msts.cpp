// msts: command-line front end for the segment-MST toolkit.
//
// Subcommands: solve, gen (random | from-cnf), render, bench.
// Exit codes: 0 success, 2 parse/usage error, 3 guard or infeasibility,
// 4 internal assertion failure. Output files are written to a temporary
// sibling and renamed into place, so failures never leave partial files.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "msts/errors.hpp"
#include "msts/exact.hpp"
#include "msts/instance.hpp"
#include "msts/reduction.hpp"
#include "msts/separability.hpp"
#include "msts/steiner_approx.hpp"
#include "msts/svg.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitInternal = 4;

int verbosity() {
  const char* env = std::getenv("MSTS_LOG");
  if (env == nullptr) return 0;
  return std::atoi(env);
}

void log_line(const std::string& msg) {
  if (verbosity() > 0) std::cerr << "[msts] " << msg << "\n";
}

// Write-to-temp-then-rename so a crash mid-write cannot leave a torn file.
void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + tmp.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

struct RunReport {
  std::string algorithm;
  std::string instance;
  double cost = 0.0;
  double guarantee = 0.0;
  double wall_seconds = 0.0;
  std::optional<double> gap;  // cost / oracle cost - 1, when an oracle ran
};

nlohmann::json report_json(const RunReport& r) {
  nlohmann::json j;
  j["algorithm"] = r.algorithm;
  j["instance"] = r.instance;
  j["cost"] = r.cost;
  j["guarantee"] = r.guarantee;
  j["wall_seconds"] = r.wall_seconds;
  if (r.gap) j["gap"] = *r.gap;
  return j;
}

void append_reports(const std::string& path, const std::vector<RunReport>& reports) {
  std::ostringstream out;
  for (const auto& r : reports) out << report_json(r).dump() << "\n";
  std::ofstream f(path, std::ios::binary | std::ios::app);
  if (!f) throw std::runtime_error("cannot open report file: " + path);
  f << out.str();
}

msts::ChoiceSolution run_algo(const std::string& algo, const msts::Instance& inst,
                              bool seeded, std::uint64_t seed) {
  if (algo == "exact") return msts::brute_force_msts(inst);
  if (algo == "steiner") return msts::solve_approx(inst);
  if (algo == "pick") {
    auto policy = seeded ? msts::EndpointPolicy::kSeededRandom : msts::EndpointPolicy::kAlwaysA;
    return msts::solve_pick_endpoint(inst, policy, seed);
  }
  if (algo == "auto") {
    return inst.size() <= 16 ? msts::brute_force_msts(inst) : msts::solve_approx(inst);
  }
  throw CLI::ValidationError("--algo", "unknown algorithm: " + algo);
}

int cmd_solve(const std::string& algo, const std::string& in_path,
              const std::string& out_path, bool oracle, bool seeded,
              std::uint64_t seed, const std::string& report_path) {
  msts::Instance inst = msts::parse_instance_file(in_path);
  if (inst.name.empty()) inst.name = std::filesystem::path(in_path).stem().string();

  auto t0 = std::chrono::steady_clock::now();
  msts::ChoiceSolution sol = run_algo(algo, inst, seeded, seed);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  RunReport report;
  report.algorithm = algo;
  report.instance = inst.name;
  report.cost = sol.cost;
  report.guarantee = sol.guarantee;
  report.wall_seconds = wall;
  if (oracle) {
    msts::ChoiceSolution opt = msts::brute_force_msts(inst);
    report.gap = opt.cost > 0 ? sol.cost / opt.cost - 1.0 : 0.0;
  }

  write_file_atomic(out_path, msts::serialize_solution(sol));
  if (!report_path.empty()) append_reports(report_path, {report});

  std::cout << algo << " " << inst.name << " cost=" << msts::format_double(sol.cost)
            << " guarantee=" << msts::format_double(sol.guarantee)
            << " wall=" << report.wall_seconds;
  if (report.gap) std::cout << " gap=" << msts::format_double(*report.gap);
  std::cout << "\n";
  return 0;
}

int cmd_gen_random(int n, std::uint64_t seed, double separation, double length,
                   const std::string& out_path) {
  msts::Instance inst = msts::random_instance(n, seed, separation, length);
  write_file_atomic(out_path, msts::serialize_instance(inst));
  log_line("generated " + std::to_string(n) + " segments");
  return 0;
}

int cmd_gen_from_cnf(const std::string& cnf_path, const std::string& variant_name,
                     std::optional<double> epsilon, const std::string& out_path,
                     const std::string& roles_path) {
  msts::Cnf2Formula formula = msts::parse_cnf2_file(cnf_path);
  auto variant = variant_name == "min-msts" ? msts::ReductionVariant::kMinMsts
                                            : msts::ReductionVariant::kMsts;
  msts::ReductionLayout layout = msts::build_gadgets(formula, variant, epsilon);
  write_file_atomic(out_path, msts::serialize_instance(layout.instance));
  if (!roles_path.empty()) write_file_atomic(roles_path, msts::serialize_roles(layout));
  std::cout << "segments=" << layout.instance.size()
            << " epsilon=" << msts::format_double(layout.eps)
            << " baseline=" << msts::format_double(layout.baseline_cost) << "\n";
  return 0;
}

int cmd_render(const std::string& in_path, const std::string& sol_path,
               const std::string& roles_path, const std::string& out_path) {
  msts::Instance inst = msts::parse_instance_file(in_path);
  msts::ChoiceSolution sol;
  std::vector<msts::SegmentRole> roles;
  msts::RenderOptions opts;
  if (!sol_path.empty()) {
    std::ifstream f(sol_path);
    if (!f) throw std::runtime_error("cannot open solution file: " + sol_path);
    sol = msts::parse_solution(f, inst);
    opts.solution = &sol;
  }
  if (!roles_path.empty()) {
    std::ifstream f(roles_path);
    if (!f) throw std::runtime_error("cannot open roles file: " + roles_path);
    roles = msts::parse_roles(f, inst.size());
    opts.roles = &roles;
  }
  write_file_atomic(out_path, msts::render_svg(inst, opts));
  return 0;
}

int cmd_bench(const std::string& suite_dir, const std::vector<std::string>& algos,
              int repeat, const std::string& report_path) {
  if (algos.empty()) throw CLI::ValidationError("--algos", "at least one algorithm required");
  if (!std::filesystem::is_directory(suite_dir))
    throw std::runtime_error("suite directory not found: " + suite_dir);

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(suite_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".msts")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) throw std::runtime_error("no .msts instances in " + suite_dir);

  bool have_oracle = false;
  for (const auto& a : algos) have_oracle = have_oracle || a == "exact";

  std::vector<RunReport> reports;
  std::map<std::string, std::pair<double, double>> ratio;  // algo -> (sum, max)
  std::map<std::string, int> counted;

  std::printf("%-24s %-8s %14s %10s %8s\n", "instance", "algo", "cost", "wall_s", "ratio");
  for (const auto& file : files) {
    msts::Instance inst = msts::parse_instance_file(file.string());
    if (inst.name.empty()) inst.name = file.stem().string();
    double oracle_cost = -1.0;
    std::map<std::string, RunReport> per_algo;
    for (const auto& algo : algos) {
      RunReport r;
      r.algorithm = algo;
      r.instance = inst.name;
      for (int rep = 0; rep < repeat; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        msts::ChoiceSolution sol = run_algo(algo, inst, false, 0);
        double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (rep == 0) {
          r.cost = sol.cost;
          r.guarantee = sol.guarantee;
          r.wall_seconds = wall;
        } else {
          r.wall_seconds = std::min(r.wall_seconds, wall);
          if (sol.cost != r.cost)
            throw msts::InternalError("nondeterministic cost across repeats");
        }
      }
      if (algo == "exact") oracle_cost = r.cost;
      per_algo[algo] = r;
    }
    for (const auto& algo : algos) {
      RunReport& r = per_algo[algo];
      if (have_oracle && oracle_cost > 0) {
        r.gap = r.cost / oracle_cost - 1.0;
        auto& agg = ratio[algo];
        agg.first += r.cost / oracle_cost;
        agg.second = std::max(agg.second, r.cost / oracle_cost);
        ++counted[algo];
      }
      std::printf("%-24s %-8s %14.6f %10.4f %8s\n", r.instance.c_str(), algo.c_str(), r.cost,
                  r.wall_seconds, r.gap ? std::to_string(1.0 + *r.gap).substr(0, 8).c_str() : "-");
      reports.push_back(r);
    }
  }
  if (have_oracle) {
    std::printf("-- aggregate ratios vs exact --\n");
    for (const auto& [algo, agg] : ratio)
      std::printf("%-8s mean=%.6f max=%.6f\n", algo.c_str(), agg.first / counted[algo],
                  agg.second);
  }
  if (!report_path.empty()) append_reports(report_path, reports);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum spanning tree of segments: solvers, generators, rendering"};
  app.require_subcommand(1);

  // solve
  std::string algo = "auto", in_path, out_path, report_path;
  bool oracle = false;
  std::uint64_t seed = 0;
  auto* solve = app.add_subcommand("solve", "solve an instance and write a solution file");
  solve->add_option("--algo", algo, "exact|steiner|pick|auto")
      ->check(CLI::IsMember({"exact", "steiner", "pick", "auto"}));
  solve->add_option("--in", in_path, "instance file")->required();
  solve->add_option("--out", out_path, "solution file")->required();
  solve->add_flag("--oracle", oracle, "also run the exact solver and report the gap");
  auto* seed_opt = solve->add_option("--seed", seed, "seed for the pick heuristic");
  solve->add_option("--report", report_path, "append a JSON-lines run report");

  // gen
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);
  int gen_n = 10;
  std::uint64_t gen_seed = 0;
  double separation = 1.0, length = 1.0;
  std::string gen_out;
  auto* gen_random = gen->add_subcommand("random", "random disjoint segments");
  gen_random->add_option("--n", gen_n, "number of segments")->required();
  gen_random->add_option("--seed", gen_seed, "RNG seed");
  gen_random->add_option("--separation", separation, "minimum pairwise distance");
  gen_random->add_option("--length", length, "maximum segment length");
  gen_random->add_option("--out", gen_out, "instance file")->required();

  std::string cnf_path, variant_name = "msts", roles_path, cnf_out;
  double epsilon = 0.0;
  auto* gen_cnf = gen->add_subcommand("from-cnf", "compile a 2-CNF formula into segments");
  gen_cnf->add_option("--cnf", cnf_path, "DIMACS 2-CNF file")->required();
  gen_cnf->add_option("--variant", variant_name, "msts|min-msts")
      ->check(CLI::IsMember({"msts", "min-msts"}));
  auto* eps_opt = gen_cnf->add_option("--epsilon", epsilon, "horizontal level unit");
  gen_cnf->add_option("--out", cnf_out, "instance file")->required();
  gen_cnf->add_option("--roles", roles_path, "also write a role sidecar file");

  // render
  std::string render_in, render_sol, render_roles, render_out;
  auto* render = app.add_subcommand("render", "draw an instance (and solution) as SVG");
  render->add_option("--in", render_in, "instance file")->required();
  render->add_option("--sol", render_sol, "solution file");
  render->add_option("--roles", render_roles, "role sidecar for clause styling");
  render->add_option("--out", render_out, "SVG file")->required();

  // bench
  std::string suite_dir, bench_report;
  std::vector<std::string> algos;
  int repeat = 1;
  auto* bench = app.add_subcommand("bench", "run algorithms over an instance directory");
  bench->add_option("--suite", suite_dir, "directory of .msts files")->required();
  bench->add_option("--algos", algos, "comma-separated algorithm list")->delimiter(',');
  bench->add_option("--repeat", repeat, "runs per instance (costs must agree)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--report", bench_report, "append JSON-lines run reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (solve->parsed())
      return cmd_solve(algo, in_path, out_path, oracle, seed_opt->count() > 0, seed,
                       report_path);
    if (gen_random->parsed()) return cmd_gen_random(gen_n, gen_seed, separation, length, gen_out);
    if (gen_cnf->parsed())
      return cmd_gen_from_cnf(cnf_path, variant_name,
                              eps_opt->count() > 0 ? std::optional<double>(epsilon)
                                                   : std::nullopt,
                              cnf_out, roles_path);
    if (render->parsed()) return cmd_render(render_in, render_sol, render_roles, render_out);
    if (bench->parsed()) return cmd_bench(suite_dir, algos, repeat, bench_report);
    std::cerr << "error: no subcommand\n";
    return kExitParse;
  } catch (const msts::GuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  } catch (const msts::InternalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
