#include "mobius/costing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>

#include "mobius/error.hpp"
#include "mobius/evidence.hpp"
#include "mobius/fast_transforms.hpp"
#include "mobius/random.hpp"

namespace mobius {

std::uint64_t cost_of_graph(const Graph& g) {
  std::vector<std::uint64_t> preimage(g.target().size, 0);
  for (const auto& a : g.arrows()) ++preimage[a.target];
  std::uint64_t cost = 0;
  for (std::uint64_t k : preimage) {
    if (k > 1) cost += k - 1;
  }
  return cost;
}

std::uint64_t cost_of_malgorithm(const MAlgorithm& alg) {
  std::uint64_t cost = 0;
  for (const auto& stage : alg.stages()) cost += cost_of_graph(stage);
  return cost;
}

MAlgorithm obvious_algorithm(std::size_t n, bool exclude_empty) {
  return MAlgorithm({inclusion_graph(n, Relation::subset, exclude_empty)});
}

std::vector<MAlgorithm> stage_merges(const MAlgorithm& alg) {
  const std::size_t k = alg.stage_count();
  if (k > 20) throw Error(ErrorCode::capacity_exceeded, "too many stages to enumerate merges");
  std::vector<MAlgorithm> variants;
  // Bit j of `cuts` set: a block boundary after stage j.
  const std::uint64_t count = std::uint64_t{1} << (k - 1);
  for (std::uint64_t cuts = 0; cuts < count; ++cuts) {
    std::vector<Graph> blocks;
    Graph block = alg.stages()[0];
    for (std::size_t j = 1; j < k; ++j) {
      if (cuts & (std::uint64_t{1} << (j - 1))) {
        blocks.push_back(std::move(block));
        block = alg.stages()[j];
      } else {
        block = compose(block, alg.stages()[j]);
      }
    }
    blocks.push_back(std::move(block));
    variants.emplace_back(std::move(blocks));
  }
  return variants;
}

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

double safe_ratio(std::uint64_t num, std::uint64_t den) {
  return den == 0 ? std::numeric_limits<double>::quiet_NaN()
                  : static_cast<double>(num) / static_cast<double>(den);
}

void check_capacity(std::size_t n) {
  if (n < 1 || n > kMaxFrameSize) {
    throw Error(ErrorCode::capacity_exceeded,
                "frame size " + std::to_string(n) + " outside 1.." + std::to_string(kMaxFrameSize));
  }
}

}  // namespace

double AnalyticRow::addition_ratio() const { return safe_ratio(slow_additions(), fast_additions()); }

double AnalyticRow::multiplication_ratio() const {
  return safe_ratio(slow_combine_multiplications, fast_product_multiplications);
}

AnalyticRow analytic_costs(std::size_t n) {
  check_capacity(n);
  const std::uint64_t p2 = pow_u64(2, n);
  const std::uint64_t p3 = pow_u64(3, n);
  const std::uint64_t half = p2 / 2;
  AnalyticRow row;
  row.n = n;
  row.subsets = p2;
  row.cost_obvious = p3 - 2 * p2 + 1;
  row.cost_hasse = n * half - n;
  row.cost_hasse_full = n * half;
  row.ratio = safe_ratio(row.cost_obvious, row.cost_hasse);
  row.slow_combine_additions = p2 * (p2 - 1);
  row.slow_combine_multiplications = p2 * p2;
  row.slow_plausibility_additions = p3 - p2;
  row.fast_commonality_additions = n * p2;
  row.fast_product_multiplications = p2;
  row.fast_plausibility_additions = n * (half - 1);
  return row;
}

std::string_view arm_name(Arm arm) noexcept { return arm == Arm::naive ? "naive" : "fast"; }

std::string_view task_name(Task task) noexcept {
  return task == Task::mass_to_bel ? "mass_to_bel" : "combine_to_pl";
}

std::vector<CostReport> run_benchmark(const BenchmarkConfig& config) {
  if (config.n_min > config.n_max) {
    throw Error(ErrorCode::capacity_exceeded, "empty frame-size range");
  }
  check_capacity(config.n_min);
  check_capacity(config.n_max);
  for (Arm arm : config.arms) {
    for (Task task : config.tasks) {
      const std::size_t limit = arm == Arm::fast ? kFastLimit
                                : task == Task::mass_to_bel ? kNaiveTransformLimit
                                                            : kNaiveCombineLimit;
      if (config.n_max > limit) {
        throw Error(ErrorCode::capacity_exceeded,
                    std::string(arm_name(arm)) + " " + std::string(task_name(task)) +
                        " arm supports n <= " + std::to_string(limit));
      }
    }
  }

  const std::size_t trials = std::max<std::size_t>(config.trials, 1);
  std::mt19937_64 rng(config.seed);
  std::vector<CostReport> reports;
  for (std::size_t n = config.n_min; n <= config.n_max; ++n) {
    const Frame frame = Frame::numbered(n);
    const AnalyticRow expected = analytic_costs(n);
    for (Task task : config.tasks) {
      for (Arm arm : config.arms) {
        CostReport report;
        report.n = n;
        report.task = task;
        report.arm = arm;
        if (task == Task::mass_to_bel) {
          report.analytic_additions = arm == Arm::naive ? expected.cost_obvious : expected.cost_hasse;
          report.analytic_multiplications = 0;
        } else {
          report.analytic_additions = arm == Arm::naive ? expected.slow_additions() : expected.fast_additions();
          report.analytic_multiplications = arm == Arm::naive ? expected.slow_combine_multiplications
                                                              : expected.fast_product_multiplications;
        }

        double seconds = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
          const SetFunction m1 = random_bba(frame, rng);
          const SetFunction m2 = random_bba(frame, rng);
          OpCounter counter;
          const auto start = std::chrono::steady_clock::now();
          if (task == Task::mass_to_bel) {
            if (arm == Arm::naive) {
              (void)naive_transform(TransformKind::mass_to_bel, m1, &counter);
            } else {
              (void)fmt_mass_to_bel(m1, false, &counter);
            }
          } else {
            (void)combine_to_plausibility(m1, m2, arm == Arm::naive ? Algorithm::naive : Algorithm::fast,
                                          &counter);
          }
          seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          if (trial == 0) {
            report.additions = counter.additions;
            report.multiplications = counter.multiplications;
            report.per_stage = counter.per_stage;
          } else if (counter.additions != report.additions ||
                     counter.multiplications != report.multiplications) {
            throw std::logic_error("operation counts changed between trials");
          }
        }
        report.wall_time = seconds / static_cast<double>(trials);
        reports.push_back(std::move(report));
      }
    }
  }
  return reports;
}

std::vector<ComparisonRow> comparison_table(std::size_t n_min, std::size_t n_max) {
  std::vector<ComparisonRow> rows;
  for (std::size_t n = n_min; n <= n_max; ++n) {
    ComparisonRow row;
    row.analytic = analytic_costs(n);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ComparisonRow> comparison_table(const std::vector<CostReport>& reports) {
  std::map<std::size_t, ComparisonRow> by_n;
  for (const auto& r : reports) {
    auto [it, inserted] = by_n.try_emplace(r.n);
    ComparisonRow& row = it->second;
    if (inserted) row.analytic = analytic_costs(r.n);
    if (r.task == Task::mass_to_bel) {
      if (r.arm == Arm::naive) {
        row.measured_obvious = r.additions;
        row.seconds_obvious = r.wall_time;
      } else {
        row.measured_hasse = r.additions;
        row.seconds_hasse = r.wall_time;
      }
    } else if (r.arm == Arm::naive) {
      row.measured_slow_additions = r.additions;
      row.measured_slow_multiplications = r.multiplications;
      row.seconds_slow_pipeline = r.wall_time;
    } else {
      row.measured_fast_additions = r.additions;
      row.measured_fast_multiplications = r.multiplications;
      row.seconds_fast_pipeline = r.wall_time;
    }
  }
  std::vector<ComparisonRow> rows;
  for (auto& [n, row] : by_n) rows.push_back(std::move(row));
  return rows;
}

namespace {

std::string fixed(double v, int decimals) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

std::string seconds_text(const std::optional<double>& v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", *v);
  return buf;
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

struct Column {
  const char* name;
  std::string (*cell)(const ComparisonRow&);
  bool measured;
};

const std::vector<Column>& columns() {
  static const std::vector<Column> cols = {
      {"n", [](const ComparisonRow& r) { return std::to_string(r.analytic.n); }, false},
      {"subsets", [](const ComparisonRow& r) { return std::to_string(r.analytic.subsets); }, false},
      {"cost_obvious", [](const ComparisonRow& r) { return std::to_string(r.analytic.cost_obvious); }, false},
      {"cost_hasse", [](const ComparisonRow& r) { return std::to_string(r.analytic.cost_hasse); }, false},
      {"ratio", [](const ComparisonRow& r) { return fixed(r.analytic.ratio, 3); }, false},
      {"slow_additions", [](const ComparisonRow& r) { return std::to_string(r.analytic.slow_additions()); }, false},
      {"fast_additions", [](const ComparisonRow& r) { return std::to_string(r.analytic.fast_additions()); }, false},
      {"addition_ratio", [](const ComparisonRow& r) { return fixed(r.analytic.addition_ratio(), 3); }, false},
      {"slow_multiplications",
       [](const ComparisonRow& r) { return std::to_string(r.analytic.slow_combine_multiplications); }, false},
      {"fast_multiplications",
       [](const ComparisonRow& r) { return std::to_string(r.analytic.fast_product_multiplications); }, false},
      {"multiplication_ratio", [](const ComparisonRow& r) { return fixed(r.analytic.multiplication_ratio(), 3); },
       false},
      {"measured_obvious", [](const ComparisonRow& r) { return opt_text(r.measured_obvious); }, true},
      {"measured_hasse", [](const ComparisonRow& r) { return opt_text(r.measured_hasse); }, true},
      {"measured_slow_additions", [](const ComparisonRow& r) { return opt_text(r.measured_slow_additions); }, true},
      {"measured_fast_additions", [](const ComparisonRow& r) { return opt_text(r.measured_fast_additions); }, true},
      {"measured_slow_multiplications",
       [](const ComparisonRow& r) { return opt_text(r.measured_slow_multiplications); }, true},
      {"measured_fast_multiplications",
       [](const ComparisonRow& r) { return opt_text(r.measured_fast_multiplications); }, true},
      {"seconds_obvious", [](const ComparisonRow& r) { return seconds_text(r.seconds_obvious); }, true},
      {"seconds_hasse", [](const ComparisonRow& r) { return seconds_text(r.seconds_hasse); }, true},
      {"seconds_slow_pipeline", [](const ComparisonRow& r) { return seconds_text(r.seconds_slow_pipeline); }, true},
      {"seconds_fast_pipeline", [](const ComparisonRow& r) { return seconds_text(r.seconds_fast_pipeline); }, true},
  };
  return cols;
}

bool any_measured(const std::vector<ComparisonRow>& rows) {
  return std::any_of(rows.begin(), rows.end(), [](const ComparisonRow& r) {
    return r.measured_obvious || r.measured_hasse || r.measured_slow_additions || r.measured_fast_additions;
  });
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  const bool measured = any_measured(rows);
  bool first = true;
  for (const auto& col : columns()) {
    if (col.measured && !measured) continue;
    out << (first ? "" : ",") << col.name;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& col : columns()) {
      if (col.measured && !measured) continue;
      out << (first ? "" : ",") << col.cell(row);
      first = false;
    }
    out << '\n';
  }
}

void write_text(std::ostream& out, const std::vector<ComparisonRow>& rows) {
  const bool measured = any_measured(rows);
  std::vector<const Column*> shown;
  for (const auto& col : columns()) {
    if (!col.measured || measured) shown.push_back(&col);
  }
  std::vector<std::size_t> width;
  for (const Column* col : shown) {
    std::size_t w = std::string(col->name).size();
    for (const auto& row : rows) w = std::max(w, col->cell(row).size());
    width.push_back(w);
  }
  const auto pad = [&](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
  for (std::size_t c = 0; c < shown.size(); ++c) out << (c ? "  " : "") << pad(shown[c]->name, width[c]);
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < shown.size(); ++c) out << (c ? "  " : "") << pad(shown[c]->cell(row), width[c]);
    out << '\n';
  }
}

}  // namespace mobius
