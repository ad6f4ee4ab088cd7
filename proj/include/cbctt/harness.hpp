#pragma once

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cbctt/hsa.hpp"
#include "cbctt/solution_io.hpp"

namespace cbctt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;       // unreadable or malformed input
inline constexpr int kExitInfeasible = 3;  // no feasible timetable produced
inline constexpr int kExitIo = 4;          // output could not be written

enum class ReportFormat { Csv, Table };

struct RunConfig {
  std::vector<std::string> instance_paths;
  HsaParams params;
  SoftWeights weights;
  int repetitions = 1;
  std::string out_dir = ".";
  ReportFormat format = ReportFormat::Csv;

  void validate() const {
    if (repetitions < 1)
      throw std::invalid_argument("repetitions must be >= 1");
    if (instance_paths.empty())
      throw std::invalid_argument("at least one instance path required");
    params.validate();
  }
};

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw std::runtime_error("read error on '" + path + "'");
  return buf.str();
}

inline void write_text_file(const std::string& path,
                            const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out)
    throw std::runtime_error("write error on '" + path + "'");
}

namespace detail {

inline std::string instance_stem(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

inline std::string output_path(const std::string& out_dir,
                               const std::string& file) {
  return (std::filesystem::path(out_dir) / file).string();
}

inline void ensure_out_dir(const std::string& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory '" + out_dir +
                             "': " + ec.message());
}

// Keeps the first-seen nonzero exit code.
inline void record_exit(int& current, int code) {
  if (current == kExitOk) current = code;
}

}  // namespace detail

// Solves each instance `repetitions` times (seed, seed+1, ...), writing a
// solution file and a trace CSV per run. Failures are reported and the
// remaining work continues; the exit code reflects the first failure.
inline int cmd_solve(const RunConfig& config, std::ostream& out,
                     std::ostream& err) {
  config.validate();
  int exit_code = kExitOk;
  try {
    detail::ensure_out_dir(config.out_dir);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  for (const auto& path : config.instance_paths) {
    Instance inst;
    try {
      inst = parse_instance(read_text_file(path));
    } catch (const std::exception& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      detail::record_exit(exit_code, kExitParse);
      continue;
    }
    const std::string stem = detail::instance_stem(path);
    for (int rep = 0; rep < config.repetitions; ++rep) {
      HsaParams params = config.params;
      params.seed = config.params.seed + static_cast<std::uint64_t>(rep);
      std::optional<RunResult> result;
      try {
        result = run(inst, params, config.weights);
      } catch (const std::exception& e) {
        err << "error: " << stem << " seed=" << params.seed << ": " << e.what()
            << "\n";
        detail::record_exit(exit_code, kExitInfeasible);
        continue;
      }
      const std::string tag = stem + "_seed" + std::to_string(params.seed);
      const std::string sol_path =
          detail::output_path(config.out_dir, tag + ".sol");
      const std::string trace_path =
          detail::output_path(config.out_dir, tag + "_trace.csv");
      try {
        write_text_file(sol_path,
                        write_solution(result->best().timetable, inst));
        write_text_file(trace_path, trace_csv(result->trace));
      } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << "\n";
        detail::record_exit(exit_code, kExitIo);
        continue;
      }
      out << stem << " seed=" << params.seed
          << " total=" << result->best().penalty.total
          << " solution=" << sol_path << " trace=" << trace_path << "\n";
    }
  }
  return exit_code;
}

struct ValidationReport {
  std::vector<Violation> violations;
  PenaltyBreakdown penalty;  // meaningful only when violations is empty

  bool feasible() const { return violations.empty(); }
};

inline ValidationReport validate_solution_text(const std::string& solution,
                                               const Instance& inst,
                                               const SoftWeights& weights) {
  const Matrices m = build_matrices(inst);
  const auto entries = read_solution(solution, inst);
  ValidationReport report;
  report.violations = validate_entries(entries, inst, m);
  if (report.violations.empty()) {
    const Timetable tt = timetable_from_entries(entries, inst);
    report.penalty = total_cost(tt, inst, m, weights);
  }
  return report;
}

// Audits a solution file against its instance: prints the hard-violation
// list and, when feasible, the four soft components plus total.
inline int cmd_validate(const std::string& instance_path,
                        const std::string& solution_path,
                        const SoftWeights& weights, std::ostream& out,
                        std::ostream& err) {
  ValidationReport report;
  try {
    const Instance inst = parse_instance(read_text_file(instance_path));
    report = validate_solution_text(read_text_file(solution_path), inst,
                                    weights);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  if (!report.feasible()) {
    for (const auto& v : report.violations)
      out << name_of(v.constraint) << ": " << v.description << "\n";
    out << "infeasible (" << report.violations.size() << " hard violation"
        << (report.violations.size() == 1 ? "" : "s") << ")\n";
    return kExitInfeasible;
  }
  out << "feasible\n";
  out << "room_capacity " << report.penalty.room_capacity << "\n";
  out << "room_stability " << report.penalty.room_stability << "\n";
  out << "min_working_days " << report.penalty.min_working_days << "\n";
  out << "curriculum_compactness " << report.penalty.curriculum_compactness
      << "\n";
  out << "total " << report.penalty.total << "\n";
  return kExitOk;
}

namespace detail {

struct BenchmarkRow {
  std::vector<std::string> cells;
};

inline std::string render_csv(const std::vector<BenchmarkRow>& rows) {
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      out << (i ? "," : "") << row.cells[i];
    out << "\n";
  }
  return out.str();
}

inline std::string render_table(const std::vector<BenchmarkRow>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.cells.size()) widths.resize(row.cells.size(), 0);
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      widths[i] = std::max(widths[i], row.cells[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      out << (i ? "  " : "") << std::left
          << std::setw(static_cast<int>(widths[i])) << row.cells[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace detail

// One row per (instance, repetition): the best-of-memory total after the
// initial fill and at two iteration checkpoints, plus wall time. A failed
// run keeps its row (status column) and the sweep continues.
inline int cmd_benchmark(const RunConfig& config, std::ostream& out,
                         std::ostream& err) {
  config.validate();
  const int mid = std::min(10, config.params.mi);
  std::vector<detail::BenchmarkRow> rows;
  rows.push_back({{"instance", "seed", "initial",
                   "penalty_" + std::to_string(mid),
                   "penalty_" + std::to_string(config.params.mi), "time_ms",
                   "status"}});
  int exit_code = kExitOk;
  for (const auto& path : config.instance_paths) {
    const std::string stem = detail::instance_stem(path);
    Instance inst;
    bool parsed = false;
    try {
      inst = parse_instance(read_text_file(path));
      parsed = true;
    } catch (const std::exception& e) {
      err << "error: " << path << ": " << e.what() << "\n";
      detail::record_exit(exit_code, kExitParse);
    }
    for (int rep = 0; rep < config.repetitions; ++rep) {
      HsaParams params = config.params;
      params.seed = config.params.seed + static_cast<std::uint64_t>(rep);
      const std::string seed_str = std::to_string(params.seed);
      if (!parsed) {
        rows.push_back({{stem, seed_str, "", "", "", "0", "parse-error"}});
        continue;
      }
      const auto start = std::chrono::steady_clock::now();
      std::optional<RunResult> result;
      bool ok = false;
      try {
        result = run(inst, params, config.weights);
        ok = true;
      } catch (const std::exception& e) {
        err << "error: " << stem << " seed=" << seed_str << ": " << e.what()
            << "\n";
        detail::record_exit(exit_code, kExitInfeasible);
      }
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      const std::string ms = std::to_string(elapsed.count());
      if (!ok) {
        rows.push_back({{stem, seed_str, "", "", "", ms, "failed"}});
        continue;
      }
      const auto& trace = result->trace;
      const auto best_at = [&trace](int iteration) {
        return std::to_string(
            trace[static_cast<std::size_t>(iteration)].best_total);
      };
      rows.push_back({{stem, seed_str, best_at(0), best_at(mid),
                       best_at(config.params.mi), ms, "ok"}});
    }
  }
  const std::string csv = detail::render_csv(rows);
  try {
    detail::ensure_out_dir(config.out_dir);
    write_text_file(detail::output_path(config.out_dir, "results.csv"), csv);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }
  out << (config.format == ReportFormat::Table ? detail::render_table(rows)
                                               : csv);
  return exit_code;
}

}  // namespace cbctt
