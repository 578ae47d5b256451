#include "allsat/cli.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "allsat/search.hpp"

namespace allsat::cli {

namespace fs = std::filesystem;

const char* const kStatsCsvHeader =
    "file,mode,status,vars,clauses,partial_models,coverage,conflicts,"
    "decisions,propagations,learned,elapsed_s";

namespace {

struct CsvRow {
  std::string file;
  std::string mode;
  std::string status;
  Var vars = 0;
  size_t clauses = 0;
  uint64_t partial_models = 0;
  std::string coverage = "0";
  uint64_t conflicts = 0;
  uint64_t decisions = 0;
  uint64_t propagations = 0;
  uint64_t learned = 0;
  double elapsed = 0.0;
};

std::string format_row(const CsvRow& r) {
  std::ostringstream os;
  os << r.file << ',' << r.mode << ',' << r.status << ',' << r.vars << ','
     << r.clauses << ',' << r.partial_models << ',' << r.coverage << ','
     << r.conflicts << ',' << r.decisions << ',' << r.propagations << ','
     << r.learned << ',' << r.elapsed;
  return os.str();
}

CsvRow row_of(const std::string& file, ShrinkMode mode, const CnfFormula& f,
              const EnumerationSummary& s) {
  CsvRow r;
  r.file = file;
  r.mode = to_string(mode);
  r.status = to_string(s.status);
  r.vars = f.num_vars;
  r.clauses = f.clauses.size() + f.units.size();
  r.partial_models = s.partial_models;
  r.coverage = s.coverage_decimal();
  r.conflicts = s.stats.conflicts;
  r.decisions = s.stats.decisions;
  r.propagations = s.stats.propagations;
  r.learned = s.stats.learned;
  r.elapsed = s.elapsed_seconds;
  return r;
}

void append_stats_row(const std::string& path, const CsvRow& row,
                      std::ostream& err) {
  bool need_header = !fs::exists(path) || fs::file_size(path) == 0;
  std::ofstream out(path, std::ios::app);
  if (!out) {
    err << "warning: cannot open stats file " << path << "\n";
    return;
  }
  if (need_header) out << kStatsCsvHeader << "\n";
  out << format_row(row) << "\n";
}

int exit_code_of(Status s) {
  switch (s) {
    case Status::Complete:
      return kExitComplete;
    case Status::Unsat:
      return kExitUnsat;
    case Status::Timeout:
    case Status::BudgetExhausted:
      return kExitIncomplete;
  }
  return kExitUsage;
}

std::optional<ParseResult> parse_file(const std::string& path,
                                      std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << "\n";
    return std::nullopt;
  }
  try {
    return parse_dimacs(in);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return std::nullopt;
  }
}

int write_formula(const CnfFormula& f, const std::string& out_path,
                  std::ostream& out, std::ostream& err) {
  if (out_path.empty()) {
    write_dimacs(f, out);
    return kExitComplete;
  }
  std::ofstream file(out_path);
  if (!file) {
    err << "error: cannot open " << out_path << " for writing\n";
    return kExitUsage;
  }
  write_dimacs(f, file);
  return kExitComplete;
}

}  // namespace

std::string format_model_line(const PartialModel& m) {
  std::string line = "v";
  for (Lit l : m.sorted_by_var()) {
    line += ' ';
    line += std::to_string(l.to_dimacs());
  }
  line += " 0";
  return line;
}

std::vector<PartialModel> parse_model_lines(std::istream& in) {
  std::vector<PartialModel> models;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos || line[i] != 'v') continue;
    std::istringstream ls(line.substr(i + 1));
    PartialModel m;
    long lit;
    bool terminated = false;
    while (ls >> lit) {
      if (lit == 0) {
        terminated = true;
        break;
      }
      m.literals.push_back(Lit::from_dimacs(static_cast<int>(lit)));
    }
    if (!terminated)
      throw ParseError("model line " + std::to_string(line_no) +
                       ": missing terminating 0");
    models.push_back(std::move(m));
  }
  return models;
}

int run_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  auto parsed = parse_file(opt.cnf_path, err);
  if (!parsed) return kExitUsage;

  if (parsed->empty_clause) {
    // An empty clause is unsatisfiable before any search starts.
    out << "s unsat models=0 coverage=0\n";
    if (!opt.stats_path.empty()) {
      CsvRow r;
      r.file = opt.cnf_path;
      r.mode = to_string(opt.config.shrink);
      r.status = "unsat";
      r.vars = parsed->formula.num_vars;
      r.clauses = parsed->formula.clauses.size() + parsed->formula.units.size();
      append_stats_row(opt.stats_path, r, err);
    }
    return kExitUnsat;
  }

  ModelSink sink;
  if (opt.emit_models)
    sink = [&out](const PartialModel& m) { out << format_model_line(m) << "\n"; };

  EnumerationSummary summary;
  try {
    summary = enumerate_models(parsed->formula, opt.config, sink);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  out << "s " << to_string(summary.status) << " models=" << summary.partial_models
      << " coverage=" << summary.coverage_decimal() << "\n";
  if (!opt.stats_path.empty())
    append_stats_row(opt.stats_path,
                     row_of(opt.cnf_path, opt.config.shrink, parsed->formula,
                            summary),
                     err);
  return exit_code_of(summary.status);
}

int run_verify(const VerifyOptions& opt, std::istream& in, std::ostream& out,
               std::ostream& err) {
  auto parsed = parse_file(opt.cnf_path, err);
  if (!parsed) return kExitUsage;

  std::vector<PartialModel> models;
  try {
    if (opt.models_path == "-") {
      models = parse_model_lines(in);
    } else {
      std::ifstream mf(opt.models_path);
      if (!mf) {
        err << "error: cannot open " << opt.models_path << "\n";
        return kExitUsage;
      }
      models = parse_model_lines(mf);
    }
  } catch (const ParseError& e) {
    err << "error: " << opt.models_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  if (parsed->empty_clause) {
    if (models.empty()) {
      out << "VERIFIED: formula has an empty clause and no models were given\n";
      return kExitComplete;
    }
    out << "FAILED: formula has an empty clause but models were given\n";
    return kExitUnsat;
  }

  OracleReport report;
  try {
    report = verify_cover(parsed->formula, models, opt.oracle_bound);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (report.exact_cover()) {
    out << "VERIFIED: " << models.size() << " partial models cover "
        << report.model_count.get_str() << " total models exactly once\n";
    return kExitComplete;
  }

  out << "FAILED: ";
  if (report.first_violation) {
    const CoverViolation& v = *report.first_violation;
    auto assignment_str = [&]() {
      std::string s;
      for (Var var = 1; var <= parsed->formula.num_vars; ++var) {
        if (!s.empty()) s += ' ';
        s += (v.assignment >> (var - 1)) & 1 ? std::to_string(var)
                                             : std::to_string(-var);
      }
      return s;
    };
    switch (v.kind) {
      case CoverViolation::Kind::InconsistentModel:
        out << "model " << v.model_index
            << " assigns some variable both ways\n";
        break;
      case CoverViolation::Kind::NotCovered:
        out << "total model not covered: " << assignment_str() << "\n";
        break;
      case CoverViolation::Kind::MultiplyCovered:
        out << "total model covered " << v.times_covered
            << " times: " << assignment_str() << "\n";
        break;
      case CoverViolation::Kind::NonModelCovered:
        out << "non-model covered " << v.times_covered
            << " times: " << assignment_str() << "\n";
        break;
    }
  } else {
    out << "cover check failed\n";
  }
  return kExitUnsat;
}

int run_gen_binary(const GenBinaryOptions& opt, std::ostream& out,
                   std::ostream& err) {
  try {
    return write_formula(gen_binary(opt.n), opt.out_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_gen_rnd3sat(const GenRnd3SatOptions& opt, std::ostream& out,
                    std::ostream& err) {
  try {
    return write_formula(gen_rnd3sat(opt.spec), opt.out_path, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int run_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(opt.corpus_dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".cnf")
      files.push_back(entry.path().string());
  }
  if (ec) {
    err << "error: cannot read directory " << opt.corpus_dir << ": "
        << ec.message() << "\n";
    return kExitUsage;
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no .cnf files in " << opt.corpus_dir << "\n";
    return kExitUsage;
  }
  std::vector<ShrinkMode> modes = opt.modes;
  if (modes.empty()) modes = {ShrinkMode::Dynamic, ShrinkMode::Conservative,
                              ShrinkMode::None};

  struct Cell {
    std::string file;
    ShrinkMode mode;
  };
  std::vector<Cell> cells;
  for (const std::string& f : files)
    for (ShrinkMode m : modes) cells.push_back({f, m});

  std::vector<CsvRow> rows(cells.size());
  std::atomic<size_t> next{0};
  std::mutex err_mutex;

  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      const Cell& cell = cells[i];
      CsvRow& r = rows[i];
      r.file = cell.file;
      r.mode = to_string(cell.mode);

      std::ifstream in(cell.file);
      ParseResult parsed;
      try {
        if (!in) throw ParseError("cannot open file");
        parsed = parse_dimacs(in);
      } catch (const ParseError& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        err << "warning: " << cell.file << ": " << e.what() << "\n";
        r.status = "error";
        continue;
      }
      r.vars = parsed.formula.num_vars;
      r.clauses = parsed.formula.clauses.size() + parsed.formula.units.size();
      if (parsed.empty_clause) {
        r.status = "unsat";
        continue;
      }
      SolverConfig cfg = opt.base;
      cfg.shrink = cell.mode;
      try {
        EnumerationSummary s = enumerate_models(parsed.formula, cfg, nullptr);
        r = row_of(cell.file, cell.mode, parsed.formula, s);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(err_mutex);
        err << "warning: " << cell.file << ": " << e.what() << "\n";
        r.status = "error";
      }
    }
  };

  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::ostringstream csv;
  csv << kStatsCsvHeader << "\n";
  for (const CsvRow& r : rows) csv << format_row(r) << "\n";

  if (opt.out_path.empty()) {
    out << csv.str();
    return kExitComplete;
  }
  std::ofstream file(opt.out_path);
  if (!file) {
    err << "error: cannot open " << opt.out_path << " for writing\n";
    return kExitUsage;
  }
  file << csv.str();
  return kExitComplete;
}

}  // namespace allsat::cli
