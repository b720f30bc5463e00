#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "mobius/graph.hpp"

namespace mobius {

// Additions needed to evaluate the transform of g: sum over targets of
// max(0, #preimage - 1), which equals #arrows - #image.
std::uint64_t cost_of_graph(const Graph& g);

std::uint64_t cost_of_malgorithm(const MAlgorithm& alg);

// Single-stage algorithm on the inclusion graph itself.
MAlgorithm obvious_algorithm(std::size_t n, bool exclude_empty);

// Every M-algorithm obtained by splitting the stages into consecutive blocks
// and composing each block into one graph: 2^(k-1) variants for k stages,
// from the single composite graph down to the original sequence.
std::vector<MAlgorithm> stage_merges(const MAlgorithm& alg);

// Closed-form operation counts for an n-element frame.
struct AnalyticRow {
  std::size_t n = 0;
  std::uint64_t subsets = 0;
  // mass -> belief over nonempty X.
  std::uint64_t cost_obvious = 0;     // 3^n - 2^(n+1) + 1
  std::uint64_t cost_hasse = 0;       // n 2^(n-1) - n
  std::uint64_t cost_hasse_full = 0;  // n 2^(n-1), inclusion including the empty set
  double ratio = 0.0;                 // cost_obvious / cost_hasse

  // (m1, m2) -> m1 (+) m2 -> Pl.
  std::uint64_t slow_combine_additions = 0;        // 2^n (2^n - 1)
  std::uint64_t slow_combine_multiplications = 0;  // 2^(2n)
  std::uint64_t slow_plausibility_additions = 0;   // 3^n - 2^n
  std::uint64_t fast_commonality_additions = 0;    // n 2^n, both inputs
  std::uint64_t fast_product_multiplications = 0;  // 2^n
  std::uint64_t fast_plausibility_additions = 0;   // n (2^(n-1) - 1)

  std::uint64_t slow_additions() const { return slow_combine_additions + slow_plausibility_additions; }
  std::uint64_t fast_additions() const {
    return fast_commonality_additions + fast_plausibility_additions;
  }
  double addition_ratio() const;
  double multiplication_ratio() const;
};

// Throws Error(capacity_exceeded) outside 1 <= n <= 30.
AnalyticRow analytic_costs(std::size_t n);

enum class Arm { naive, fast };
enum class Task {
  mass_to_bel,    // nonempty-X belief transform
  combine_to_pl,  // (m1, m2) -> Pl of the combination
};

std::string_view arm_name(Arm arm) noexcept;
std::string_view task_name(Task task) noexcept;

// Largest frames each arm accepts in run_benchmark.
inline constexpr std::size_t kNaiveTransformLimit = 16;
inline constexpr std::size_t kNaiveCombineLimit = 12;
inline constexpr std::size_t kFastLimit = 24;

struct CostReport {
  std::size_t n = 0;
  Task task = Task::mass_to_bel;
  Arm arm = Arm::fast;
  std::uint64_t additions = 0;
  std::uint64_t multiplications = 0;
  std::vector<std::uint64_t> per_stage;
  std::optional<std::uint64_t> analytic_additions;
  std::optional<std::uint64_t> analytic_multiplications;
  double wall_time = 0.0;  // mean seconds per trial
};

struct BenchmarkConfig {
  std::size_t n_min = 5;
  std::size_t n_max = 10;
  std::size_t trials = 3;
  std::vector<Arm> arms{Arm::naive, Arm::fast};
  std::vector<Task> tasks{Task::mass_to_bel, Task::combine_to_pl};
  std::uint64_t seed = 0x5eed;
};

// Runs each arm on random valid bbas. Counters come from the first trial;
// every trial must reproduce them. Throws Error(capacity_exceeded) when an
// arm's limit is below n_max.
std::vector<CostReport> run_benchmark(const BenchmarkConfig& config);

// One line per n joining the analytic row with whatever was measured.
struct ComparisonRow {
  AnalyticRow analytic;
  std::optional<std::uint64_t> measured_obvious;
  std::optional<std::uint64_t> measured_hasse;
  std::optional<std::uint64_t> measured_slow_additions;
  std::optional<std::uint64_t> measured_fast_additions;
  std::optional<std::uint64_t> measured_slow_multiplications;
  std::optional<std::uint64_t> measured_fast_multiplications;
  std::optional<double> seconds_obvious;
  std::optional<double> seconds_hasse;
  std::optional<double> seconds_slow_pipeline;
  std::optional<double> seconds_fast_pipeline;
};

std::vector<ComparisonRow> comparison_table(const std::vector<CostReport>& reports);
std::vector<ComparisonRow> comparison_table(std::size_t n_min, std::size_t n_max);

void write_csv(std::ostream& out, const std::vector<ComparisonRow>& rows);
void write_text(std::ostream& out, const std::vector<ComparisonRow>& rows);

}  // namespace mobius
