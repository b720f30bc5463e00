#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "mobius/mobius.hpp"

namespace mobius::cli {
namespace {

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Data goes to the file, or to stdout for "-". Reports go to stdout unless
// stdout is already carrying data.
void emit(const std::string& path, const std::string& text, Streams io) {
  if (path == "-") {
    io.out << text;
  } else {
    write_text_file(path, text);
  }
}

std::ostream& report_stream(const std::string& out_path, Streams io) {
  return out_path == "-" ? io.err : io.out;
}

std::size_t max_frame_size() {
  const char* raw = std::getenv(kMaxNEnv);
  if (raw == nullptr || *raw == '\0') return kMaxFrameSize;
  char* end = nullptr;
  const unsigned long value = std::strtoul(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw Error(ErrorCode::parse_error, std::string(kMaxNEnv) + " must be a positive integer, got '" + raw + "'");
  }
  return std::min<std::size_t>(value, kMaxFrameSize);
}

void check_frame_size(std::size_t n, Streams io) {
  const std::size_t cap = max_frame_size();
  if (n > cap) {
    throw Error(ErrorCode::capacity_exceeded, "frame has " + std::to_string(n) + " elements; limit is " +
                                                  std::to_string(cap) + " (" + kMaxNEnv + ")");
  }
  if (n > kWarnAboveN) {
    io.err << "mobius: warning: frame of " << n << " elements needs " << ((std::size_t{1} << n) * 8 >> 20)
           << " MiB per set function\n";
  }
}

SetFunction load_input(const std::string& path, Streams io) {
  SetFunction f = load_set_function(path);
  check_frame_size(f.frame().size(), io);
  return f;
}

void print_counts(std::ostream& os, const OpCounter& counter) {
  os << "additions: " << counter.additions << "\n"
     << "multiplications: " << counter.multiplications << "\n"
     << "per_stage:";
  for (auto c : counter.per_stage) os << ' ' << c;
  os << "\n";
}

// --- transform -----------------------------------------------------------

struct TransformArgs {
  std::string from;
  std::string to;
  std::string algo = "fast";
  std::string in;
  std::string out = "-";
  bool count = false;
  bool include_empty = false;
  bool dense = false;
};

const std::map<std::pair<ValueKind, ValueKind>, TransformKind>& conversions() {
  static const std::map<std::pair<ValueKind, ValueKind>, TransformKind> table = {
      {{ValueKind::mass, ValueKind::belief}, TransformKind::mass_to_bel},
      {{ValueKind::belief, ValueKind::mass}, TransformKind::bel_to_mass},
      {{ValueKind::mass, ValueKind::commonality}, TransformKind::mass_to_q},
      {{ValueKind::commonality, ValueKind::mass}, TransformKind::q_to_mass},
      {{ValueKind::commonality, ValueKind::plausibility}, TransformKind::q_to_pl},
  };
  return table;
}

std::string supported_list() {
  return "mass->bel, bel->mass, mass->q, q->mass, q->pl, and identity copies";
}

int cmd_transform(const TransformArgs& args, Streams io) {
  SetFunction input = load_input(args.in, io);
  ValueKind from = input.kind();
  if (!args.from.empty()) {
    from = *parse_kind(args.from);
    if (input.kind() != ValueKind::raw && input.kind() != from) {
      throw Error(ErrorCode::unsupported_conversion, "'" + args.in + "' holds a '" +
                                                         std::string(kind_name(input.kind())) +
                                                         "' function but --from is '" + args.from + "'");
    }
    input = input.relabeled(from);
  }
  const ValueKind to = *parse_kind(args.to);

  OpCounter counter;
  std::optional<SetFunction> result;
  if (from == to && from != ValueKind::raw) {
    result = input;
  } else {
    const auto it = conversions().find({from, to});
    if (it == conversions().end()) {
      throw Error(ErrorCode::unsupported_conversion, "cannot convert " + std::string(kind_name(from)) + " to " +
                                                         std::string(kind_name(to)) + "; supported: " +
                                                         supported_list());
    }
    TransformKind kind = it->second;
    if (kind == TransformKind::mass_to_bel && args.include_empty) kind = TransformKind::mass_to_bel_full;
    result = args.algo == "naive" ? naive_transform(kind, input, &counter) : fast_transform(kind, input, &counter);
  }

  emit(args.out, dump_set_function(*result, args.dense ? Layout::dense : Layout::sparse), io);
  if (args.count) print_counts(report_stream(args.out, io), counter);
  return kOk;
}

// --- combine -------------------------------------------------------------

struct CombineArgs {
  std::string in1;
  std::string in2;
  std::string algo = "fast";
  std::string to = "mass";
  std::string out = "-";
  bool normalize = false;
  bool count = false;
  bool strict = false;
  bool dense = false;
};

double total(const SetFunction& f) {
  double s = 0.0;
  for (double v : f.values()) s += v;
  return s;
}

int cmd_combine(const CombineArgs& args, Streams io) {
  const SetFunction m1 = load_input(args.in1, io);
  const SetFunction m2 = load_input(args.in2, io);
  const Algorithm algorithm = args.algo == "naive" ? Algorithm::naive : Algorithm::fast;
  const CombineOptions options{args.strict};
  OpCounter counter;

  std::optional<SetFunction> output;
  double conflict = 0.0;
  if (args.to == "pl" && !args.normalize) {
    output = combine_to_plausibility(m1, m2, algorithm, &counter, options);
    // Q(empty) of the combination is the product of the input totals, and
    // it exceeds Pl(frame) by exactly the conflicting mass.
    conflict = total(m1) * total(m2) - (*output)[m1.frame().full_mask()];
  } else {
    CombinationResult result = algorithm == Algorithm::naive ? dempster_naive(m1, m2, &counter, options)
                                                             : dempster_fast(m1, m2, &counter, options);
    conflict = result.conflict;
    if (args.normalize) result = normalize(result);
    if (args.to == "pl") {
      output = algorithm == Algorithm::naive ? plausibility_naive(result.combined, &counter)
                                             : q_to_pl(fmt_mass_to_q(result.combined, &counter), &counter);
    } else {
      output = std::move(result.combined);
    }
  }

  emit(args.out, dump_set_function(*output, args.dense ? Layout::dense : Layout::sparse), io);
  std::ostream& report = report_stream(args.out, io);
  report << "conflict: " << round_significant(conflict, kSerializedDigits) << "\n";
  if (args.count) print_counts(report, counter);
  return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(const std::string& path, Streams io) {
  const MAlgorithm alg = parse_malgorithm(read_text_file(path));
  const DecompositionCheck check = verify_decomposition(alg);
  if (check.valid) {
    io.out << "valid\n";
  } else {
    io.out << "invalid: (" << check.witness->source << ", " << check.witness->target << ") has "
           << check.witness_path_count << " paths\n";
  }
  io.out << "stages: " << alg.stage_count() << "\n"
         << "cost: " << cost_of_malgorithm(alg) << "\n"
         << "composite_cost: " << cost_of_graph(composite(alg)) << "\n";
  return kOk;
}

// --- mobius-fn -------------------------------------------------------------

int cmd_mobius_fn(const std::string& path, const std::string& method, const std::string& out, Streams io) {
  const Graph poset = parse_graph(read_text_file(path));
  const MobiusMethod m = method == "chains" ? MobiusMethod::chains : MobiusMethod::recursive;
  if (out != "-") {
    write_text_file(out, dump_weighted_graph(mobius_function(poset, m)));
    return kOk;
  }
  const IncidenceMatrix mu = mobius_values(poset, m);
  std::size_t width = 1;
  for (auto v : mu.values) width = std::max(width, std::to_string(v).size());
  for (std::size_t s = 0; s < mu.size; ++s) {
    for (std::size_t t = 0; t < mu.size; ++t) io.out << (t ? " " : "") << std::setw(static_cast<int>(width)) << mu(s, t);
    io.out << "\n";
  }
  return kOk;
}

// --- bench -----------------------------------------------------------------

struct BenchArgs {
  std::size_t n_min = 5;
  std::size_t n_max = 10;
  std::size_t trials = 3;
  std::vector<std::string> arms{"naive", "fast"};
  std::vector<std::string> tasks{"mass_to_bel", "combine_to_pl"};
  std::string format = "csv";
  std::string out = "-";
  std::uint64_t seed = 0x5eed;
  bool analytic_only = false;
};

int cmd_bench(const BenchArgs& args, Streams io) {
  std::vector<ComparisonRow> rows;
  if (args.analytic_only) {
    if (args.n_min < 1 || args.n_max > kMaxFrameSize || args.n_min > args.n_max) {
      throw Error(ErrorCode::capacity_exceeded, "frame sizes must satisfy 1 <= n-min <= n-max <= 30");
    }
    rows = comparison_table(args.n_min, args.n_max);
  } else {
    BenchmarkConfig config;
    config.n_min = args.n_min;
    config.n_max = args.n_max;
    config.trials = args.trials;
    config.seed = args.seed;
    config.arms.clear();
    for (const auto& a : args.arms) config.arms.push_back(a == "naive" ? Arm::naive : Arm::fast);
    config.tasks.clear();
    for (const auto& t : args.tasks) config.tasks.push_back(t == "mass_to_bel" ? Task::mass_to_bel : Task::combine_to_pl);
    rows = comparison_table(run_benchmark(config));
  }
  std::ostringstream text;
  if (args.format == "text") {
    write_text(text, rows);
  } else {
    write_csv(text, rows);
  }
  emit(args.out, text.str(), io);
  return kOk;
}

// --- hasse -----------------------------------------------------------------

struct HasseArgs {
  std::size_t n = 3;
  std::string relation = "subset";
  bool exclude_empty = false;
  std::vector<std::size_t> order;
  std::string out = "-";
};

int cmd_hasse(const HasseArgs& args, Streams io) {
  if (args.n < 1 || args.n > 16) throw Error(ErrorCode::capacity_exceeded, "--n must lie in 1..16");
  const Relation relation = args.relation == "superset" ? Relation::superset : Relation::subset;
  std::optional<std::span<const std::size_t>> order;
  if (!args.order.empty()) order = std::span<const std::size_t>(args.order);
  emit(args.out, dump_malgorithm(hasse_sequence(args.n, relation, args.exclude_empty, order)), io);
  return kOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::parse_error: return kParseError;
    case ErrorCode::io_error: return kIoError;
    case ErrorCode::unsupported_conversion: return kUnsupportedConversion;
    case ErrorCode::capacity_exceeded: return kCapacityExceeded;
    case ErrorCode::frame_mismatch: return kFrameMismatch;
    case ErrorCode::total_conflict: return kTotalConflict;
    case ErrorCode::invalid_bba: return kInvalidBba;
    case ErrorCode::not_a_partial_order: return kNotAPartialOrder;
    default: return kFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Streams io{out, err};
  CLI::App app{"Mobius transforms, fast belief-function conversions and Dempster combination", "mobius"};
  app.require_subcommand(1);

  const std::vector<std::string> algos{"fast", "naive"};

  TransformArgs targs;
  auto* transform = app.add_subcommand("transform", "Convert a set function between mass, bel, q and pl");
  transform->add_option("--from", targs.from, "Input kind (defaults to the file's kind)")
      ->check(CLI::IsMember({"mass", "bel", "q"}));
  transform->add_option("--to", targs.to, "Output kind")->required()->check(CLI::IsMember({"mass", "bel", "q", "pl"}));
  transform->add_option("--algo", targs.algo, "fast or naive")->check(CLI::IsMember(algos));
  transform->add_option("--in", targs.in, "Input set-function file")->required();
  transform->add_option("--out", targs.out, "Output file, - for stdout");
  transform->add_flag("--count", targs.count, "Print operation counts");
  transform->add_flag("--include-empty", targs.include_empty, "mass->bel: let m(empty) contribute");
  transform->add_flag("--dense", targs.dense, "Write the dense layout");

  CombineArgs cargs;
  auto* combine = app.add_subcommand("combine", "Dempster combination of two mass functions");
  combine->add_option("--in1", cargs.in1, "First mass function")->required();
  combine->add_option("--in2", cargs.in2, "Second mass function")->required();
  combine->add_option("--algo", cargs.algo, "fast or naive")->check(CLI::IsMember(algos));
  combine->add_option("--to", cargs.to, "mass or pl")->check(CLI::IsMember({"mass", "pl"}));
  combine->add_option("--out", cargs.out, "Output file, - for stdout");
  combine->add_flag("--normalize", cargs.normalize, "Remove conflict and rescale");
  combine->add_flag("--count", cargs.count, "Print operation counts");
  combine->add_flag("--strict", cargs.strict, "Reject inputs that are not valid bbas");
  combine->add_flag("--dense", cargs.dense, "Write the dense layout");

  std::string malgorithm_path;
  auto* verify = app.add_subcommand("verify", "Check that an M-algorithm computes the transform of its composite");
  verify->add_option("--malgorithm", malgorithm_path, "M-algorithm file (array of stage graphs)")->required();

  std::string poset_path;
  std::string method = "recursive";
  std::string mu_out = "-";
  auto* mobius_fn = app.add_subcommand("mobius-fn", "Mobius function of a partial order");
  mobius_fn->add_option("--poset", poset_path, "Partial order graph file")->required();
  mobius_fn->add_option("--method", method, "recursive or chains")->check(CLI::IsMember({"recursive", "chains"}));
  mobius_fn->add_option("--out", mu_out, "Write the weighted graph here instead of printing a matrix");

  BenchArgs bargs;
  auto* bench = app.add_subcommand("bench", "Operation counts and timings, naive vs fast");
  bench->add_option("--n-min", bargs.n_min, "Smallest frame size");
  bench->add_option("--n-max", bargs.n_max, "Largest frame size");
  bench->add_option("--trials", bargs.trials, "Random inputs per arm and n");
  bench->add_option("--arms", bargs.arms, "naive and/or fast")->delimiter(',')->check(CLI::IsMember(algos));
  bench->add_option("--tasks", bargs.tasks, "mass_to_bel and/or combine_to_pl")
      ->delimiter(',')
      ->check(CLI::IsMember({"mass_to_bel", "combine_to_pl"}));
  bench->add_option("--format", bargs.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));
  bench->add_option("--out", bargs.out, "Output file, - for stdout");
  bench->add_option("--seed", bargs.seed, "Random seed");
  bench->add_flag("--analytic-only", bargs.analytic_only, "Closed-form counts only, no runs");

  HasseArgs hargs;
  auto* hasse = app.add_subcommand("hasse", "Write the Hasse M-algorithm of the powerset inclusion");
  hasse->add_option("--n", hargs.n, "Frame size")->required();
  hasse->add_option("--relation", hargs.relation, "subset or superset")->check(CLI::IsMember({"subset", "superset"}));
  hasse->add_flag("--exclude-empty", hargs.exclude_empty, "Drop arrows leaving the empty set");
  hasse->add_option("--order", hargs.order, "Element order, e.g. 2,0,1")->delimiter(',');
  hasse->add_option("--out", hargs.out, "Output file, - for stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*transform) return cmd_transform(targs, io);
    if (*combine) return cmd_combine(cargs, io);
    if (*verify) return cmd_verify(malgorithm_path, io);
    if (*mobius_fn) return cmd_mobius_fn(poset_path, method, mu_out, io);
    if (*bench) return cmd_bench(bargs, io);
    if (*hasse) return cmd_hasse(hargs, io);
  } catch (const Error& e) {
    err << "mobius: error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "mobius: error[internal]: " << e.what() << "\n";
    return kFailure;
  }
  return kFailure;
}

}  // namespace mobius::cli
