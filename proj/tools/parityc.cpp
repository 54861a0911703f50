// parityc: compile parity-constraint layouts into nearest-neighbour
// circuits, verify them against the layout's target phases, and run the
// benchmark harness.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 unsupported request.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "parity/analysis.hpp"
#include "parity/chip_compiler.hpp"
#include "parity/circuit.hpp"
#include "parity/io.hpp"
#include "parity/lattice.hpp"
#include "parity/oracle.hpp"
#include "parity/square_alt.hpp"

namespace {

using nlohmann::json;
using namespace parity;

enum class LogLevel { Error = 0, Warn = 1, Info = 2, Debug = 3 };

LogLevel log_level() {
  static LogLevel level = [] {
    const char* env = std::getenv("PARITY_LOG");
    std::string v = env ? env : "warn";
    if (v == "debug") return LogLevel::Debug;
    if (v == "info") return LogLevel::Info;
    if (v == "error") return LogLevel::Error;
    return LogLevel::Warn;
  }();
  return level;
}

void log(LogLevel at, const std::string& msg) {
  if (at <= log_level()) std::cerr << "parityc: " << msg << "\n";
}

struct CliError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot write " + path};
  out << text;
}

// Generator specs: squares:NxM, lhz:N, random:NxM:r3:seed
// (N x M are the qubit grid dimensions, columns x rows).
Layout parse_gen_spec(const std::string& spec) {
  auto fail = [&] { throw CliError{2, "bad generator spec: " + spec}; };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) parts.push_back(item);
    return parts;
  };
  auto parse_dims = [&](const std::string& s) {
    auto p = split(s, 'x');
    if (p.size() != 2) fail();
    return std::pair<int, int>{std::stoi(p[0]), std::stoi(p[1])};
  };
  try {
    auto parts = split(spec, ':');
    if (parts.size() == 2 && parts[0] == "squares") {
      auto [n, m] = parse_dims(parts[1]);
      return gen_squares(n, m);
    }
    if (parts.size() == 2 && parts[0] == "lhz") {
      return gen_lhz(std::stoi(parts[1]));
    }
    if (parts.size() == 4 && parts[0] == "random") {
      auto [n, m] = parse_dims(parts[1]);
      return gen_random(n, m, std::stod(parts[2]), std::stoull(parts[3]));
    }
    if (parts.size() == 2 && parts[0] == "adversarial") {
      return gen_adversarial(std::stoi(parts[1]));
    }
  } catch (const CliError&) {
    throw;
  } catch (const std::exception& e) {
    throw CliError{2, "bad generator spec: " + spec + " (" + e.what() + ")"};
  }
  fail();
  return {};
}

Layout load_layout(const std::string& layout_path, const std::string& gen) {
  if (!layout_path.empty() && !gen.empty())
    throw CliError{2, "--layout and --gen are mutually exclusive"};
  if (!layout_path.empty()) {
    try {
      return parse_layout(read_file(layout_path));
    } catch (const ParseError& e) {
      throw CliError{2, layout_path + ": " + e.what()};
    }
  }
  if (!gen.empty()) return parse_gen_spec(gen);
  throw CliError{2, "one of --layout or --gen is required"};
}

Orientation parse_orientation(const std::string& s) {
  if (s == "auto") return Orientation::Auto;
  if (s == "h") return Orientation::Horizontal;
  if (s == "v") return Orientation::Vertical;
  throw CliError{2, "bad --orientation: " + s};
}

json report_to_json(const CompileReport& r) {
  return json{{"depth", r.depth},
              {"cnot_depth", r.cnot_depth},
              {"two_qubit_count", r.two_qubit_count},
              {"naive_count", r.naive_count},
              {"cancellation_rate", r.cancellation_rate},
              {"d", r.d},
              {"orientation", to_string(r.orientation)},
              {"boundary_case_histogram", r.boundary_case_histogram}};
}

struct CompileArgs {
  std::string layout_path, gen, out_path;
  std::string orientation = "auto", strategy = "main", emit;
  int d = 1;
  bool line_parallel = false;
};

int run_compile(const CompileArgs& a) {
  Layout layout = load_layout(a.layout_path, a.gen);
  Circuit circuit;
  CompileReport report;
  if (a.strategy == "main") {
    CompileOptions opts{.d = a.d,
                        .orientation = parse_orientation(a.orientation),
                        .line_parallel = a.line_parallel};
    CompileResult res = compile(layout, opts);
    circuit = std::move(res.circuit);
    report = res.report;
  } else if (a.strategy == "appendix-a") {
    if (a.d != 1 || a.line_parallel)
      throw CliError{3, "--strategy appendix-a supports only --d 1 "
                        "without --line-parallel"};
    try {
      circuit = compile_squares_alt(layout);
    } catch (const UnsupportedLayoutError& e) {
      throw CliError{3, e.what()};
    }
    report.depth = depth(circuit);
    report.cnot_depth = cnot_depth(circuit);
    report.two_qubit_count = two_qubit_count(circuit);
    report.naive_count = naive_count(layout);
    report.cancellation_rate =
        report.naive_count == 0
            ? 0.0
            : double(report.naive_count - report.two_qubit_count) /
                  report.naive_count;
    report.d = 1;
  } else {
    throw CliError{2, "bad --strategy: " + a.strategy};
  }

  json rep = report_to_json(report);
  rep["strategy"] = a.strategy;
  rep["n_cols"] = circuit.n_cols;
  rep["n_rows"] = circuit.n_rows;
  rep["total_moments"] = static_cast<int>(circuit.moments.size());

  std::string emitted;
  if (!a.emit.empty() || !a.out_path.empty()) {
    std::string fmt = a.emit.empty() ? "qasm" : a.emit;
    if (fmt == "qasm") emitted = to_qasm(circuit);
    else if (fmt == "json") emitted = circuit_to_json(circuit).dump(2) + "\n";
    else throw CliError{2, "bad --emit: " + fmt};
  }
  if (!a.out_path.empty()) {
    write_file(a.out_path, emitted);
    log(LogLevel::Info, "wrote circuit to " + a.out_path);
    std::cout << rep.dump(2) << "\n";
  } else if (!a.emit.empty()) {
    // Circuit takes stdout; the report moves to stderr.
    std::cout << emitted;
    std::cerr << rep.dump(2) << "\n";
  } else {
    std::cout << rep.dump(2) << "\n";
  }
  return 0;
}

struct VerifyArgs {
  std::string layout_path, gen, circuit_path, mode = "auto";
  int samples = 200;
  std::uint64_t seed = 0;
  int d = 1;
  std::string orientation = "auto", strategy = "main";
  bool line_parallel = false;
};

int run_verify(const VerifyArgs& a) {
  Layout layout = load_layout(a.layout_path, a.gen);
  Circuit circuit;
  if (!a.circuit_path.empty()) {
    try {
      circuit = circuit_from_json(json::parse(read_file(a.circuit_path)));
    } catch (const json::exception& e) {
      throw CliError{2, a.circuit_path + ": " + e.what()};
    }
  } else {
    // No circuit given: compile and self-verify.
    CompileArgs ca;
    if (a.strategy == "appendix-a") {
      try {
        circuit = compile_squares_alt(layout);
      } catch (const UnsupportedLayoutError& e) {
        throw CliError{3, e.what()};
      }
    } else {
      circuit = compile(layout, {.d = a.d,
                                 .orientation = parse_orientation(a.orientation),
                                 .line_parallel = a.line_parallel})
                    .circuit;
    }
  }
  bool exhaustive = a.mode == "exhaustive" ||
                    (a.mode == "auto" &&
                     layout.n_qubits() <= kMaxExhaustiveQubits);
  if (a.mode != "auto" && a.mode != "exhaustive" && a.mode != "sampled")
    throw CliError{2, "bad --mode: " + a.mode};
  VerifyResult res;
  try {
    res = exhaustive ? verify_exhaustive(layout, circuit)
                     : verify_sampled(layout, circuit, a.samples, a.seed);
  } catch (const std::invalid_argument& e) {
    throw CliError{2, e.what()};
  }
  if (!res.ok) {
    std::cout << "FAIL: " << res.detail << "\n";
    return 1;
  }
  std::cout << "OK (" << (exhaustive ? "exhaustive" : "sampled") << ", "
            << layout.n_qubits() << " qubits)\n";
  return 0;
}

struct BenchArgs {
  std::vector<int> sizes;
  std::vector<double> r3s;
  std::vector<int> ds = {1};
  int samples = 30;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::string out_path;
};

int run_bench_cmd(const BenchArgs& a) {
  if (a.sizes.empty() || a.r3s.empty() || a.samples < 1 || a.jobs < 1)
    throw CliError{2, "bench needs --sizes, --r3, samples >= 1, jobs >= 1"};
  for (int n : a.sizes)
    if (n < 2) throw CliError{2, "bench sizes must be >= 2"};
  for (double r : a.r3s)
    if (r < 0.0 || r > 1.0) throw CliError{2, "r3 must lie in [0, 1]"};
  for (int d : a.ds)
    if (d < 1) throw CliError{2, "d must be >= 1"};
  BenchConfig cfg{.sizes = a.sizes, .r3s = a.r3s, .ds = a.ds,
                  .samples = a.samples, .seed = a.seed, .jobs = a.jobs};
  auto rows = run_bench(cfg);
  int violations = 0;
  for (const auto& row : rows)
    if (row.depth_mean > depth_bound(row.d)) ++violations;
  if (violations > 0)
    log(LogLevel::Error,
        std::to_string(violations) + " rows exceed the depth bound");
  else
    log(LogLevel::Info, "no depth-bound violations");
  if (!a.out_path.empty()) {
    std::ofstream out(a.out_path);
    if (!out) throw CliError{2, "cannot write " + a.out_path};
    write_bench_csv(out, rows);
  } else {
    write_bench_csv(std::cout, rows);
  }
  return 0;
}

struct GenArgs {
  std::string gen, out_path;
};

int run_gen(const GenArgs& a) {
  Layout layout = parse_gen_spec(a.gen);
  std::string text = layout_to_text(layout);
  if (!a.out_path.empty()) write_file(a.out_path, text);
  else std::cout << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parity plaquette constraint compiler"};
  app.require_subcommand(1);

  CompileArgs ca;
  auto* c = app.add_subcommand("compile", "compile a layout to a circuit");
  c->add_option("--layout", ca.layout_path, "layout text file");
  c->add_option("--gen", ca.gen,
                "generator spec: squares:NxM | lhz:N | random:NxM:r3:seed");
  c->add_option("--d", ca.d, "parallelization distance")->default_val(1);
  c->add_flag("--line-parallel", ca.line_parallel,
              "one grid line per moment");
  c->add_option("--orientation", ca.orientation, "auto|h|v")
      ->default_val("auto");
  c->add_option("--strategy", ca.strategy, "main|appendix-a")
      ->default_val("main");
  c->add_option("--emit", ca.emit, "qasm|json");
  c->add_option("--out", ca.out_path, "circuit output path");

  VerifyArgs va;
  auto* v = app.add_subcommand("verify", "verify a circuit against a layout");
  v->add_option("--layout", va.layout_path, "layout text file");
  v->add_option("--gen", va.gen, "generator spec");
  v->add_option("--circuit", va.circuit_path,
                "circuit JSON (omit to compile in-process)");
  v->add_option("--mode", va.mode, "auto|exhaustive|sampled")
      ->default_val("auto");
  v->add_option("--samples", va.samples, "states for sampled mode")
      ->default_val(200);
  v->add_option("--seed", va.seed, "seed for sampled mode")->default_val(0);
  v->add_option("--d", va.d, "parallelization distance")->default_val(1);
  v->add_option("--orientation", va.orientation, "auto|h|v")
      ->default_val("auto");
  v->add_option("--strategy", va.strategy, "main|appendix-a")
      ->default_val("main");
  v->add_flag("--line-parallel", va.line_parallel, "one grid line per moment");

  BenchArgs ba;
  auto* b = app.add_subcommand("bench", "random-ensemble statistics as CSV");
  b->add_option("--sizes", ba.sizes, "grid side lengths")
      ->required()
      ->delimiter(',');
  b->add_option("--r3", ba.r3s, "triangle ratios")->required()->delimiter(',');
  b->add_option("--d", ba.ds, "parallelization distances")->delimiter(',');
  b->add_option("--samples", ba.samples, "layouts per grid point")
      ->default_val(30);
  b->add_option("--seed", ba.seed, "master seed")->default_val(0);
  b->add_option("--jobs", ba.jobs, "worker threads")->default_val(1);
  b->add_option("--out", ba.out_path, "CSV output path");

  GenArgs ga;
  auto* g = app.add_subcommand("gen", "write a generated layout as text");
  g->add_option("--gen", ga.gen, "generator spec")->required();
  g->add_option("--out", ga.out_path, "layout output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c->parsed()) return run_compile(ca);
    if (v->parsed()) return run_verify(va);
    if (b->parsed()) return run_bench_cmd(ba);
    if (g->parsed()) return run_gen(ga);
  } catch (const CliError& e) {
    std::cerr << "parityc: error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parityc: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "parityc: error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
