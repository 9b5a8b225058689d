// Command-line front end: instance generation, solving, relaxation bounds
// and benchmark tables. Exit codes: 0 success, 1 no convergence, 2 parse
// error, 3 infeasible instance, 4 internal assertion failure.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpcut/bounds.hpp"
#include "qpcut/cutting_plane.hpp"
#include "qpcut/generator.hpp"
#include "qpcut/instance.hpp"
#include "qpcut/linearize.hpp"
#include "qpcut/oracle.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qpcut;

constexpr int kExitOk = 0;
constexpr int kExitNoConvergence = 1;
constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 4;

std::string point_string(const BinaryPoint& x) {
  std::string s;
  s.reserve(x.size());
  for (const auto bit : x) s.push_back(bit != 0 ? '1' : '0');
  return s;
}

QuadraticInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_instance(in);
}

void write_trace(std::ostream& out, const SolveReport& report) {
  out << "iter,lb,ub,gap,cuts,xtilde\n";
  for (const IterationRecord& rec : report.trace) {
    out << rec.iter << ',' << format_double(rec.lower_bound) << ','
        << format_double(rec.upper_bound) << ',' << format_double(rec.gap) << ',' << rec.pool_size
        << ',' << point_string(rec.x_tilde) << "\n";
  }
}

struct SolveOutcome {
  bool feasible = false;
  bool converged = false;
  double value = 0.0;
  BinaryPoint point;
  int iterations = 0;
  double gap = 0.0;
  SolveReport report;  // empty for brute
};

SolveOutcome run_algorithm(const QuadraticInstance& inst, const std::string& algo, double eps,
                           int max_iter) {
  SolveOutcome out;
  if (algo == "brute") {
    const auto res = brute_force(inst);
    if (!res) return out;
    out.feasible = true;
    out.converged = true;
    out.value = res->value;
    out.point = res->point;
    return out;
  }
  const CutVariant variant = algo == "bml" ? CutVariant::kBml : CutVariant::kImproved;
  out.report = run(inst, variant, eps, max_iter);
  out.iterations = out.report.iterations;
  if (out.report.reason == TerminationReason::kInfeasible) return out;
  out.feasible = true;
  out.converged = out.report.reason == TerminationReason::kConverged;
  out.value = out.report.value;
  out.point = out.report.point;
  out.gap = out.report.trace.empty() ? 0.0 : out.report.trace.back().gap;
  return out;
}

int cmd_gen(const GeneratorConfig& config, const std::string& out_path) {
  const QuadraticInstance inst = generate_instance(config);
  std::ostringstream body;
  body << "# generated: n=" << config.n << " density=" << format_double(config.density)
       << " bmax=" << format_double(config.b_max) << " crange=[" << format_double(config.c_min)
       << "," << format_double(config.c_max) << ") constraint=" << config.constraint
       << " seed=" << config.seed << "\n";
  write_instance(body, inst);
  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitParse;
    }
    out << body.str();
  }
  return kExitOk;
}

int cmd_solve(const std::string& path, const std::string& algo, double eps, int max_iter,
              const std::string& trace_path) {
  const QuadraticInstance inst = load_instance(path);
  const SolveOutcome outcome = run_algorithm(inst, algo, eps, max_iter);
  if (!outcome.feasible) {
    std::cerr << "infeasible: no binary point satisfies the constraints\n";
    return kExitInfeasible;
  }
  if (!trace_path.empty()) {
    std::ofstream trace(trace_path, std::ios::binary);
    if (!trace) {
      std::cerr << "error: cannot write '" << trace_path << "'\n";
      return kExitParse;
    }
    write_trace(trace, outcome.report);
  }
  if (!outcome.converged) {
    std::cerr << "did not converge within " << outcome.iterations << " iterations (gap "
              << format_double(outcome.gap) << ")\n";
    return kExitNoConvergence;
  }
  std::cout << "value: " << format_double(outcome.value) << "\n"
            << "point: " << point_string(outcome.point) << "\n"
            << "iterations: " << outcome.iterations << "\n"
            << "gap: " << format_double(outcome.gap) << "\n";
  return kExitOk;
}

int cmd_bound(const std::string& path, const std::string& relax) {
  const QuadraticInstance inst = load_instance(path);
  const BoundVectors bounds = compute_bound_vectors(inst);
  const ModelVariant variant = relax == "pl1" ? ModelVariant::kPl1 : ModelVariant::kPl2;
  std::cout << format_double(relaxation_bound(inst, bounds, variant)) << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& dir, const std::string& out_path) {
  std::vector<fs::path> files;
  {
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec) {
      std::cerr << "error: cannot read directory '" << dir << "': " << ec.message() << "\n";
      return kExitParse;
    }
    for (const auto& entry : it) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  std::vector<QuadraticInstance> instances;
  instances.reserve(files.size());
  for (const auto& f : files) instances.push_back(load_instance(f.string()));

  static const char* kAlgos[] = {"bml", "improved", "brute"};
  struct Row {
    std::string csv;
    bool feasible = false;
    double value = 0.0;
  };
  const int num_tasks = static_cast<int>(files.size()) * 3;
  std::vector<Row> rows(static_cast<std::size_t>(num_tasks));

  // Distinct (instance, algorithm) tasks are independent; rows are written
  // into preassigned slots so the output order never depends on timing.
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < num_tasks; ++task) {
    const int fi = task / 3;
    const char* algo = kAlgos[task % 3];
    const auto start = std::chrono::steady_clock::now();
    const SolveOutcome outcome = run_algorithm(instances[fi], algo, kDefaultEps, 0);
    const std::chrono::duration<double, std::milli> elapsed =
        std::chrono::steady_clock::now() - start;
    Row& row = rows[task];
    row.feasible = outcome.feasible;
    row.value = outcome.value;
    std::ostringstream line;
    line << files[fi].filename().string() << ',' << algo << ','
         << (outcome.feasible ? format_double(outcome.value) : "inf") << ',' << outcome.iterations
         << ',' << format_double(elapsed.count()) << ',' << format_double(outcome.gap);
    row.csv = line.str();
  }

  for (int fi = 0; fi < static_cast<int>(files.size()); ++fi) {
    if (!rows[fi * 3].feasible || !rows[fi * 3 + 1].feasible || !rows[fi * 3 + 2].feasible) {
      std::cerr << "infeasible instance '" << files[fi].filename().string() << "'\n";
      return kExitInfeasible;
    }
    const double reference = rows[fi * 3 + 2].value;  // brute
    for (int a = 0; a < 2; ++a) {
      if (std::abs(rows[fi * 3 + a].value - reference) > 1e-9) {
        std::cerr << "value mismatch on '" << files[fi].filename().string() << "': " << kAlgos[a]
                  << " returned " << format_double(rows[fi * 3 + a].value) << ", brute force "
                  << format_double(reference) << "\n";
        return kExitInternal;
      }
    }
  }

  std::ostringstream csv;
  csv << "instance,algo,value,iterations,time_ms,gap\n";
  for (const Row& row : rows) csv << row.csv << "\n";
  if (out_path.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitParse;
    }
    out << csv.str();
    std::cout << "wrote " << num_tasks << " rows to " << out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cutting-plane solvers for quadratic 0-1 programs"};
  app.require_subcommand(1);

  GeneratorConfig gen_config;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance file");
  gen->add_option("--n", gen_config.n, "number of binary variables")->required();
  gen->add_option("--density", gen_config.density, "off-diagonal fill probability")
      ->default_val(0.5);
  gen->add_option("--bmax", gen_config.b_max, "interaction entries drawn from [0,bmax)")
      ->default_val(10.0);
  gen->add_option("--cmin", gen_config.c_min, "lower end of the cost range")->default_val(-10.0);
  gen->add_option("--cmax", gen_config.c_max, "upper end of the cost range")->default_val(10.0);
  gen->add_option("--constraint", gen_config.constraint,
                  "box | card:<le|ge|eq>:<k> | knap:<le|ge>:<capacity ratio>")
      ->default_val("box");
  gen->add_option("--seed", gen_config.seed, "RNG seed")->required();
  gen->add_option("--out", gen_out, "output file (stdout when omitted)");

  std::string solve_file;
  std::string solve_algo = "bml";
  double solve_eps = kDefaultEps;
  int solve_max_iter = 0;
  std::string solve_trace;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance exactly");
  solve->add_option("file", solve_file, "instance file")->required();
  solve->add_option("--algo", solve_algo, "bml | improved | brute")
      ->check(CLI::IsMember({"bml", "improved", "brute"}))
      ->default_val("bml");
  solve->add_option("--eps", solve_eps, "bound-gap convergence tolerance")->default_val(kDefaultEps);
  solve->add_option("--max-iter", solve_max_iter, "iteration cap (0 = 2^n + 1)")->default_val(0);
  solve->add_option("--trace", solve_trace, "write the per-iteration CSV trace here");

  std::string bound_file;
  std::string bound_relax = "pl1";
  CLI::App* bound = app.add_subcommand("bound", "print a continuous relaxation bound");
  bound->add_option("file", bound_file, "instance file")->required();
  bound->add_option("--relax", bound_relax, "pl1 | pl2")
      ->check(CLI::IsMember({"pl1", "pl2"}))
      ->default_val("pl1");

  std::string bench_dir;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "solve every instance in a directory with all algorithms");
  bench->add_option("dir", bench_dir, "directory of instance files")->required();
  bench->add_option("--out", bench_out, "CSV output file (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_config, gen_out);
    if (solve->parsed()) return cmd_solve(solve_file, solve_algo, solve_eps, solve_max_iter, solve_trace);
    if (bound->parsed()) return cmd_bound(bound_file, bound_relax);
    return cmd_bench(bench_dir, bench_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
