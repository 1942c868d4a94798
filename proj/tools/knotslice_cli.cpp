// knotslice: classify alternating knots as obstructed or ribbon.
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotslice/batch.hpp"
#include "knotslice/record.hpp"

namespace {

using namespace knotslice;

constexpr int exit_ribbon = 0;
constexpr int exit_obstructed = 1;
constexpr int exit_unknown = 2;
constexpr int exit_usage = 3;
constexpr int exit_io = 4;

struct Flags {
  SearchConfig cfg;
  std::string mirror = "both";
  bool no_timings = false;
};

void add_search_flags(CLI::App& app, Flags& f) {
  app.add_option("--max-bands", f.cfg.max_bands, "Band moves allowed on any path")->capture_default_str();
  app.add_option("--max-states", f.cfg.max_states, "Search states per knot")->capture_default_str();
  app.add_option("--simplify-budget", f.cfg.simplify_budget, "States per simplification")->capture_default_str();
  app.add_option("--max-passages", f.cfg.max_passages, "Strands a band may cross")->capture_default_str();
  app.add_option("--mirror", f.mirror, "Colourings gating step one")
      ->check(CLI::IsMember({"both", "only-input"}))
      ->capture_default_str();
  app.add_flag("--seedless", f.cfg.seedless, "No randomization (always the case)");
  app.add_flag("--no-timings", f.no_timings, "Write zero timings so output is reproducible");
}

SearchConfig finish(Flags& f) {
  f.cfg.mirror = f.mirror == "both" ? MirrorMode::both : MirrorMode::only_input;
  return f.cfg;
}

int exit_code(const ResultRecord& r) {
  if (!r.verdict) return exit_usage;
  switch (r.verdict->kind) {
    case VerdictKind::algorithmically_ribbon: return exit_ribbon;
    case VerdictKind::obstructed: return exit_obstructed;
    case VerdictKind::unknown: return exit_unknown;
  }
  return exit_usage;
}

int run_check(const std::string& dt, const std::string& pd, const std::string& name, Flags& f) {
  const bool use_dt = !dt.empty();
  const auto r = make_record(name, use_dt ? InputFormat::dt : InputFormat::pd, use_dt ? dt : pd, finish(f),
                             !f.no_timings);
  std::cout << serialize(r) << '\n';
  if (r.error) std::cerr << "knotslice: " << *r.error << '\n';
  return exit_code(r);
}

int run_batch_cmd(const std::string& input, const std::string& output, bool resume, unsigned jobs, Flags& f) {
  std::ifstream in(input);
  if (!in) {
    std::cerr << "knotslice: cannot read " << input << '\n';
    return exit_io;
  }
  const auto inputs = read_inputs(in);
  std::set<std::string> skip;
  if (resume && !output.empty()) {
    std::ifstream prev(output);
    if (prev) skip = logged_names(prev);
  }
  BatchOptions opts{finish(f), jobs, !f.no_timings};
  if (output.empty()) {
    run_batch(inputs, std::cout, opts, skip);
    return std::cout ? 0 : exit_io;
  }
  std::ofstream out(output, resume ? std::ios::app : std::ios::trunc);
  if (!out) {
    std::cerr << "knotslice: cannot write " << output << '\n';
    return exit_io;
  }
  run_batch(inputs, out, opts, skip);
  out.close();
  if (!out) {
    std::cerr << "knotslice: error writing " << output << '\n';
    return exit_io;
  }
  return 0;
}

int run_verify(const std::string& path) {
  std::string line;
  if (path == "-") {
    std::getline(std::cin, line);
  } else {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "knotslice: cannot read " << path << '\n';
      return exit_io;
    }
    std::getline(in, line);
  }
  ResultRecord r;
  try {
    r = parse_record(line);
  } catch (const Error& e) {
    std::cerr << "knotslice: " << e.what() << '\n';
    return exit_usage;
  }
  const auto ok = verify_record(r);
  if (!ok) {
    std::cerr << "knotslice: record " << r.name << " (" << verdict_tag(r) << ") has no certificate to verify\n";
    return exit_usage;
  }
  std::cout << r.name << ": certificate " << (*ok ? "valid" : "INVALID") << '\n';
  return *ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slice obstructions and ribbon certificates for alternating knots"};
  app.require_subcommand(1);

  Flags check_flags;
  std::string dt, pd, name = "input";
  auto* check = app.add_subcommand("check", "Classify one knot and print its record");
  auto* dt_opt = check->add_option("--dt", dt, "DT code, e.g. \"4 8 12 10 2 6\"");
  auto* pd_opt = check->add_option("--pd", pd, "PD code, e.g. X[1,5,2,4] ...");
  dt_opt->excludes(pd_opt);
  check->add_option("--name", name, "Name written into the record");
  add_search_flags(*check, check_flags);

  Flags batch_flags;
  std::string input, output;
  bool resume = false;
  unsigned jobs = 1;
  auto* batch = app.add_subcommand("batch", "Classify a knot list into JSON lines");
  batch->add_option("--input", input, "One knot per line, optional name: prefix")->required();
  batch->add_option("--output", output, "Results file (standard output if omitted)");
  batch->add_flag("--resume", resume, "Append, skipping names already in the output");
  batch->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_search_flags(*batch, batch_flags);

  std::string record;
  auto* verify = app.add_subcommand("verify", "Replay the certificate in a record");
  verify->add_option("--record", record, "File whose first line is a record, or - for standard input")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }
  if (*check) {
    if (dt.empty() == pd.empty()) {
      std::cerr << "knotslice: check needs exactly one of --dt and --pd\n";
      return exit_usage;
    }
    return run_check(dt, pd, name, check_flags);
  }
  if (*batch) return run_batch_cmd(input, output, resume, jobs, batch_flags);
  return run_verify(record);
}
