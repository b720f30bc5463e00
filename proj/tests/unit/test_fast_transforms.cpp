#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "mobius/costing.hpp"
#include "mobius/error.hpp"
#include "mobius/fast_transforms.hpp"
#include "mobius/random.hpp"
#include "oracles.hpp"

namespace mobius {
namespace {

using oracle::Vec;

Frame abc() { return Frame({"a", "b", "c"}); }

// m(a) = 0.2, m(b,c) = 0.3, m(a,b,c) = 0.5
SetFunction example_mass() {
  return SetFunction(abc(), ValueKind::mass, {0, 0.2, 0, 0, 0, 0, 0.3, 0.5});
}

Vec as_vec(const SetFunction& f) { return Vec(f.values().begin(), f.values().end()); }

void expect_near(const SetFunction& f, const Vec& expected, double tol = 1e-12) {
  ASSERT_EQ(f.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(f[SubsetMask(i)], expected[i], tol) << i;
}

TEST(MassToBel, FrozenExample) {
  const auto bel = fmt_mass_to_bel(example_mass(), false);
  EXPECT_EQ(bel.kind(), ValueKind::belief);
  expect_near(bel, {0, 0.2, 0, 0.2, 0, 0.2, 0.3, 1.0});
}

TEST(MassToQ, FrozenExample) {
  expect_near(fmt_mass_to_q(example_mass()), {1.0, 0.7, 0.8, 0.5, 0.8, 0.5, 0.8, 0.5});
}

TEST(QToPl, FrozenExample) {
  const auto pl = q_to_pl(fmt_mass_to_q(example_mass()));
  EXPECT_EQ(pl.kind(), ValueKind::plausibility);
  expect_near(pl, {0, 0.7, 0.8, 1.0, 0.8, 1.0, 0.8, 1.0});
}

TEST(MassToBel, PointMasses) {
  const Frame f = Frame::numbered(4);
  for (SubsetMask x = 1; x < f.subset_count(); ++x) {
    SetFunction m(f, ValueKind::mass);
    m[x] = 1.0;
    const auto bel = fmt_mass_to_bel(m, false);
    for (SubsetMask a = 0; a < f.subset_count(); ++a) EXPECT_EQ(bel[a], is_subset(x, a) ? 1.0 : 0.0);
  }
}

TEST(MassToBel, EmptySetMassOnlyCountsWhenIncluded) {
  SetFunction m(abc(), ValueKind::mass);
  m[0] = 0.25;
  m[7] = 0.75;
  EXPECT_EQ(fmt_mass_to_bel(m, false)[0], 0.0);
  EXPECT_EQ(fmt_mass_to_bel(m, false)[7], 0.75);
  EXPECT_EQ(fmt_mass_to_bel(m, true)[0], 0.25);
  EXPECT_EQ(fmt_mass_to_bel(m, true)[7], 1.0);
}

TEST(FastCounts, MatchClosedForms) {
  std::mt19937_64 rng(31);
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto m = random_bba(Frame::numbered(n), rng);
    const std::uint64_t half = std::uint64_t{1} << (n - 1);
    OpCounter c1, c2, c3, c4;
    fmt_mass_to_bel(m, false, &c1);
    fmt_mass_to_bel(m, true, &c2);
    fmt_mass_to_q(m, &c3);
    q_to_pl(fmt_mass_to_q(m), &c4);
    EXPECT_EQ(c1.additions, n * (half - 1));
    EXPECT_EQ(c2.additions, n * half);
    EXPECT_EQ(c3.additions, n * half);
    EXPECT_EQ(c4.additions, n * (half - 1));
    EXPECT_EQ(c1.per_stage.size(), n);
    EXPECT_EQ(std::accumulate(c1.per_stage.begin(), c1.per_stage.end(), std::uint64_t{0}), c1.additions);
    for (auto stage : c1.per_stage) EXPECT_EQ(stage, half - 1);
  }
  OpCounter c5;
  fmt_mass_to_bel(random_bba(Frame::numbered(5), rng), false, &c5);
  EXPECT_EQ(c5.additions, 75u);
  OpCounter c10;
  fmt_mass_to_q(random_bba(Frame::numbered(10), rng), &c10);
  EXPECT_EQ(c10.additions, 5120u);
}

TEST(KernelCounts, EqualCostOfHasseSequence) {
  for (std::size_t n = 1; n <= 12; ++n) {
    Vec v(std::size_t{1} << n, 1.0);
    OpCounter full, nonempty, super;
    kernel::subset_sum(v, &full);
    kernel::subset_sum_nonempty(v, &nonempty);
    kernel::superset_sum(v, &super);
    EXPECT_EQ(full.additions, cost_of_malgorithm(hasse_sequence(n, Relation::subset, false)));
    EXPECT_EQ(nonempty.additions, cost_of_malgorithm(hasse_sequence(n, Relation::subset, true)));
    EXPECT_EQ(super.additions, cost_of_malgorithm(hasse_sequence(n, Relation::superset, false)));
  }
}

TEST(KernelCounts, RejectsNonPowerOfTwo) {
  Vec v(6, 0.0);
  EXPECT_THROW(kernel::subset_sum(v), Error);
}

TEST(NaiveCounts, MatchClosedForms) {
  std::mt19937_64 rng(32);
  OpCounter c5, c8;
  naive_transform(TransformKind::mass_to_bel, random_bba(Frame::numbered(5), rng), &c5);
  naive_transform(TransformKind::mass_to_bel, random_bba(Frame::numbered(8), rng), &c8);
  EXPECT_EQ(c5.additions, 180u);
  EXPECT_EQ(c8.additions, 6050u);
}

TEST(BelToMass, Examples) {
  expect_near(fmt_bel_to_mass(fmt_mass_to_bel(example_mass(), true)), as_vec(example_mass()));
  // bel identically 1 comes from all mass on the empty set
  const SetFunction ones(abc(), ValueKind::belief, Vec(8, 1.0));
  expect_near(fmt_bel_to_mass(ones), {1, 0, 0, 0, 0, 0, 0, 0});
  const SetFunction one(Frame({"a"}), ValueKind::belief, {0.0, 0.4});
  expect_near(fmt_bel_to_mass(one), {0.0, 0.4});
}

TEST(QToMass, Examples) {
  const SetFunction ones(abc(), ValueKind::commonality, Vec(8, 1.0));
  expect_near(fmt_q_to_mass(ones), {0, 0, 0, 0, 0, 0, 0, 1});
  const SetFunction one(Frame({"a"}), ValueKind::commonality, {1.0, 0.6});
  expect_near(fmt_q_to_mass(one), {0.4, 0.6});
}

TEST(Tags, WrongInputKindIsUnsupported) {
  try {
    fmt_bel_to_mass(example_mass());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_conversion);
  }
  EXPECT_THROW(q_to_pl(example_mass()), Error);
  EXPECT_THROW(naive_transform(TransformKind::q_to_mass, example_mass()), Error);
  const auto raw = example_mass().relabeled(ValueKind::raw);
  EXPECT_EQ(fmt_mass_to_bel(raw, false).kind(), ValueKind::raw);
}

class OracleEquivalence : public ::testing::TestWithParam<std::size_t> {};

TEST_P(OracleEquivalence, FastNaiveAndBruteForceAgree) {
  const std::size_t n = GetParam();
  const Frame frame = Frame::numbered(n);
  std::mt19937_64 rng(100 + n);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = random_bba(frame, rng, trial % 2 == 0 ? 1.0 : 0.3);
    const Vec mv = as_vec(m);
    const Vec bel = oracle::belief(mv, false);
    const Vec q = oracle::commonality(mv);
    const Vec pl = oracle::plausibility(mv);

    expect_near(fmt_mass_to_bel(m, false), bel);
    expect_near(naive_transform(TransformKind::mass_to_bel, m), bel);
    expect_near(fmt_mass_to_bel(m, true), oracle::belief(mv, true));
    expect_near(fmt_mass_to_q(m), q);
    expect_near(naive_transform(TransformKind::mass_to_q, m), q);

    const SetFunction qf(frame, ValueKind::commonality, q);
    expect_near(q_to_pl(qf), pl);
    expect_near(naive_transform(TransformKind::q_to_pl, qf), pl);

    const auto f = random_function(frame, rng);
    const Vec fv = as_vec(f);
    expect_near(fmt_bel_to_mass(f), oracle::belief_to_mass(fv));
    expect_near(naive_transform(TransformKind::bel_to_mass, f), oracle::belief_to_mass(fv));
    expect_near(fmt_q_to_mass(f), oracle::commonality_to_mass(fv));
    expect_near(naive_transform(TransformKind::q_to_mass, f), oracle::commonality_to_mass(fv));
  }
}

INSTANTIATE_TEST_SUITE_P(FrameSizes, OracleEquivalence, ::testing::Range<std::size_t>(1, 11));

TEST(Inversion, RoundTripsOnRandomFunctions) {
  std::mt19937_64 rng(33);
  for (std::size_t n = 1; n <= 14; ++n) {
    const auto f = random_function(Frame::numbered(n), rng);
    const Vec fv = as_vec(f);
    EXPECT_LE(oracle::max_abs_diff(fmt_bel_to_mass(fmt_mass_to_bel(f, true)).values(), fv), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(fmt_mass_to_bel(fmt_bel_to_mass(f), true).values(), fv), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(fmt_q_to_mass(fmt_mass_to_q(f)).values(), fv), 1e-12);
    EXPECT_LE(oracle::max_abs_diff(fmt_mass_to_q(fmt_q_to_mass(f)).values(), fv), 1e-12);
  }
}

// Relabeling the frame permutes the bits of every mask; the transform must
// commute with that. Dyadic values keep every sum exact.
TEST(OrderIndependence, PermutedFrameGivesPermutedResult) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> num(0, 64);
  for (std::size_t n = 1; n <= 6; ++n) {
    const Frame frame = Frame::numbered(n);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 10; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::string> labels(n);
      for (std::size_t i = 0; i < n; ++i) labels[perm[i]] = frame.label(i);
      const Frame shuffled(labels);
      auto move_mask = [&](SubsetMask x) {
        SubsetMask y = 0;
        for (std::size_t i = 0; i < n; ++i)
          if (x & (1u << i)) y |= 1u << perm[i];
        return y;
      };
      SetFunction m(frame, ValueKind::mass), m2(shuffled, ValueKind::mass);
      for (SubsetMask x = 0; x < frame.subset_count(); ++x) {
        m[x] = num(rng) / 64.0;
        m2[move_mask(x)] = m[x];
      }
      for (auto kind : {TransformKind::mass_to_bel, TransformKind::mass_to_q}) {
        const auto a = fast_transform(kind, m);
        const auto b = fast_transform(kind, m2);
        for (SubsetMask x = 0; x < frame.subset_count(); ++x) {
          auto moved = decode_subset(shuffled, move_mask(x)), original = decode_subset(frame, x);
          std::sort(moved.begin(), moved.end());
          ASSERT_EQ(moved, original);
          EXPECT_EQ(a[x], b[move_mask(x)]);
        }
      }
    }
  }
}

TEST(Plausibility, StaysInUnitIntervalForValidBbas) {
  std::mt19937_64 rng(35);
  for (std::size_t n = 1; n <= 10; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto pl = q_to_pl(fmt_mass_to_q(random_bba(Frame::numbered(n), rng, 0.5)));
      for (double v : pl.values()) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0 + 1e-12);
      }
      EXPECT_NEAR(pl[pl.frame().full_mask()], 1.0, 1e-12);
    }
  }
}

TEST(HasseSequence, StagesAndComposite) {
  const auto h = hasse_sequence(3, Relation::subset, false);
  EXPECT_EQ(h.stage_count(), 3u);
  EXPECT_EQ(composite(h), inclusion_graph(3, Relation::subset, false));
  for (const auto& stage : h.stages()) EXPECT_EQ(stage.arrow_count(), 8u + 4u);
  EXPECT_EQ(composite(hasse_sequence(3, Relation::subset, true)), inclusion_graph(3, Relation::subset, true));
  EXPECT_EQ(composite(hasse_sequence(3, Relation::superset, false)),
            inclusion_graph(3, Relation::superset, false));
  const Graph expected(powerset(3), powerset(3), oracle::inclusion_pairs(3, false, true));
  EXPECT_EQ(inclusion_graph(3, Relation::subset, true), expected);
}

TEST(HasseSequence, EveryElementOrderWorks) {
  std::mt19937_64 rng(36);
  const auto f = random_function(Frame::numbered(3), rng);
  std::vector<std::size_t> order{0, 1, 2};
  std::set<std::string> distinct;
  const auto reference = mobius_transform(inclusion_graph(3, Relation::subset, true), f.values());
  do {
    const auto h = hasse_sequence(3, Relation::subset, true, std::span<const std::size_t>(order));
    EXPECT_TRUE(verify_decomposition(h).valid);
    EXPECT_EQ(composite(h), inclusion_graph(3, Relation::subset, true));
    EXPECT_LE(oracle::max_abs_diff(apply_malgorithm(h, f.values()), reference), 1e-12);
    std::string signature;
    for (const auto& stage : h.stages())
      for (const auto& a : stage.arrows()) signature += std::to_string(a.source) + ">" + std::to_string(a.target) + ";";
    distinct.insert(signature);
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(distinct.size(), 6u);

  const std::vector<std::size_t> bad{0, 0, 1};
  EXPECT_THROW(hasse_sequence(3, Relation::subset, false, std::span<const std::size_t>(bad)), Error);
}

TEST(HasseSequence, InverseStagesUndoTheTransform) {
  std::mt19937_64 rng(37);
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto f = random_function(Frame::numbered(n), rng);
    for (auto rel : {Relation::subset, Relation::superset}) {
      const auto fwd = apply_malgorithm(hasse_sequence(n, rel, false), f.values());
      const auto back = apply_malgorithm(hasse_inverse_sequence(n, rel), fwd);
      EXPECT_LE(oracle::max_abs_diff(back, f.values()), 1e-12);
    }
  }
}

}  // namespace
}  // namespace mobius
