#include <doctest.h>

#include <cmath>
#include <vector>

#include "olu/adversarial.hpp"
#include "olu/learner.hpp"
#include "olu/regret.hpp"
#include "olu/rng.hpp"

using namespace olu;

namespace {

std::vector<double> random_stream(Rng& rng, long T, double lo = -1.0,
                                  double hi = 1.0) {
  std::vector<double> v;
  v.reserve(std::size_t(T));
  for (long i = 0; i < T; ++i) v.push_back(rng.uniform(lo, hi));
  return v;
}

RegretLedger random_ledger(Rng& rng, long T) {
  RegretLedger ledger;
  ledger.losses = random_stream(rng, T);
  ledger.plays = random_stream(rng, T);
  ledger.plays[0] = 0.0;
  ledger.comparators = random_stream(rng, T);
  return ledger;
}

}  // namespace

TEST_CASE("dynamic_regret basics") {
  RegretLedger ledger;
  ledger.losses = {1.0};
  ledger.plays = {0.0};
  ledger.comparators = {-1.0};
  CHECK(dynamic_regret(ledger) == 1.0);

  // self-comparison has zero regret
  Rng rng(31, "self");
  RegretLedger self = random_ledger(rng, 50);
  self.comparators = self.plays;
  CHECK(dynamic_regret(self) == 0.0);

  RegretLedger bad;
  bad.losses = {1.0, 2.0};
  bad.plays = {0.0};
  bad.comparators = {0.0, 0.0};
  CHECK_THROWS_AS(dynamic_regret(bad), std::invalid_argument);
}

TEST_CASE("discounted_regret basics") {
  RegretLedger ledger;
  ledger.losses = {1.0, 1.0};
  ledger.plays = {0.0, -1.0};
  ledger.comparators = {0.0, 0.0};
  // beta = 0.5: 0.5*1*(0-0) + 1*1*(-1-0) = -1
  CHECK(discounted_regret(ledger, 0.0, 0.5, 2) == -1.0);
  CHECK(discounted_regret(ledger, 0.0, 0.5, 0) == 0.0);
  CHECK_THROWS_AS(discounted_regret(ledger, 0.0, 0.5, 3), std::out_of_range);

  // beta = 1 collapses to the dynamic regret of a constant comparator
  Rng rng(32, "collapse");
  RegretLedger random = random_ledger(rng, 80);
  const double u = 0.3;
  random.comparators.assign(80, u);
  CHECK(rel_close(discounted_regret(random, u, 1.0, 80),
                  dynamic_regret(random), 1e-12, 1e-14));

  RegretLedger zeros;
  zeros.losses.assign(10, 0.0);
  zeros.plays.assign(10, 0.5);
  zeros.comparators.assign(10, -0.5);
  CHECK(discounted_regret(zeros, 7.0, 0.9, 10) == 0.0);
}

TEST_CASE("conversion identity: trivial single-interval collapse") {
  Rng rng(33, "trivial");
  RegretLedger ledger = random_ledger(rng, 40);
  const double u = -0.4;
  ledger.comparators.assign(40, u);
  Partition partition;
  partition.intervals = {{1, 40}};
  partition.reps = {u};
  CHECK(rel_close(conversion_rhs(ledger, partition, 1.0),
                  dynamic_regret(ledger), 1e-12, 1e-14));
}

TEST_CASE("conversion identity holds for random ledgers and partitions") {
  Rng rng(34, "conversion");
  for (int trial = 0; trial < 100; ++trial) {
    const long T = 100;
    const RegretLedger ledger = random_ledger(rng, T);
    const double beta = trial % 4 == 0 ? 1.0 : rng.uniform(0.05, 1.0);
    const auto partition = draw_partition(rng, T, 1.0);
    CHECK(rel_close(conversion_rhs(ledger, partition, beta),
                    dynamic_regret(ledger), 1e-9, 1e-12));
  }
}

TEST_CASE("conversion identity holds with plays from every learner kind") {
  Rng rng(35, "learner-plays");
  const std::vector<LearnerConfig> kinds = {
      make_ogd(0.3, 1.0),        make_sgd(0.5),
      make_adagrad(1.0),         make_scale_free(1.0),
      make_discounted(1.0, 0.9, 0.9), make_clipped(1.0, 0.9, 1.0)};
  for (const auto& config : kinds) {
    const long T = 60;
    const auto v = random_stream(rng, T);
    const auto plays = run_learner(config, v);
    const auto comparators = random_stream(rng, T);
    const auto ledger = make_ledger(v, plays, comparators);
    const double beta = rng.uniform(0.1, 1.0);
    const auto partition = draw_partition(rng, T, 1.0);
    CHECK(rel_close(conversion_rhs(ledger, partition, beta),
                    dynamic_regret(ledger), 1e-9, 1e-12));
  }
}

TEST_CASE("singleton partition with matched reps kills the intra term") {
  Rng rng(36, "singleton");
  const long T = 30;
  const RegretLedger ledger = random_ledger(rng, T);
  Partition partition;
  for (long t = 1; t <= T; ++t) {
    partition.intervals.emplace_back(t, t);
    partition.reps.push_back(ledger.comparators[t - 1]);
  }
  double intra = 0.0;
  for (long t = 1; t <= T; ++t) {
    intra += ledger.losses[t - 1] *
             (partition.reps[t - 1] - ledger.comparators[t - 1]);
  }
  CHECK(intra == 0.0);
  CHECK(rel_close(conversion_rhs(ledger, partition, 0.8),
                  dynamic_regret(ledger), 1e-9, 1e-12));
}

TEST_CASE("partition validation") {
  Partition gap;
  gap.intervals = {{1, 3}, {5, 10}};
  gap.reps = {0.0, 0.0};
  RegretLedger ledger;
  ledger.losses.assign(10, 1.0);
  ledger.plays.assign(10, 0.0);
  ledger.comparators.assign(10, 0.0);
  CHECK_THROWS_AS(conversion_rhs(ledger, gap, 0.9), std::invalid_argument);

  Partition wrong_end;
  wrong_end.intervals = {{1, 9}};
  wrong_end.reps = {0.0};
  CHECK_THROWS_AS(conversion_rhs(ledger, wrong_end, 0.9),
                  std::invalid_argument);

  Partition missing_rep;
  missing_rep.intervals = {{1, 10}};
  CHECK_THROWS_AS(conversion_rhs(ledger, missing_rep, 0.9),
                  std::invalid_argument);
}

TEST_CASE("subinterval telescoping identity (random spot checks)") {
  Rng rng(37, "lemma");
  for (int trial = 0; trial < 100; ++trial) {
    const long T = 60;
    const RegretLedger ledger = random_ledger(rng, T);
    const double beta = rng.uniform(0.05, 1.0);
    const double u = rng.uniform(-1.0, 1.0);
    const long a = 1 + rng.uniform_int(T);
    const long b = a + rng.uniform_int(T - a + 1);
    double direct = 0.0;
    for (long t = a; t <= b; ++t) {
      direct += ledger.losses[t - 1] * (ledger.plays[t - 1] - u);
    }
    double sum_disc = 0.0;
    for (long t = a; t <= b; ++t) {
      sum_disc += discounted_regret(ledger, u, beta, t);
    }
    const double rhs = (1.0 - beta) * sum_disc +
                       beta * (discounted_regret(ledger, u, beta, b) -
                               discounted_regret(ledger, u, beta, a - 1));
    CHECK(rel_close(direct, rhs, 1e-9, 1e-12));
  }
}

TEST_CASE("static scale-free bound: one-step worked example") {
  const std::vector<double> v{1.0};
  const auto plays = run_learner(make_scale_free(1.0), v);
  const std::vector<double> comparators{0.0};
  const auto ledger = make_ledger(v, plays, comparators);
  // Delta_1 = -1, so the bound is sqrt(2) * 1 + 2 * 1 * 1.
  CHECK(bound_static_scale_free(ledger, 1.0, 0.0) ==
        doctest::Approx(std::sqrt(2.0) + 2.0).epsilon(1e-15));
  CHECK(dynamic_regret(ledger) == 0.0);
}

TEST_CASE("static scale-free bound: constant stream is strictly inside") {
  for (double c : {0.5, -2.0}) {
    const long T = 400;
    const double alpha = 1.0;
    const std::vector<double> v(std::size_t(T), c);
    const auto plays = run_learner(make_scale_free(alpha), v);
    const double u = -alpha * std::sqrt(double(T)) * (c > 0 ? 1.0 : -1.0);
    const std::vector<double> comparators(std::size_t(T), u);
    const auto ledger = make_ledger(v, plays, comparators);
    const double regret = dynamic_regret(ledger);
    const double bound = bound_static_scale_free(ledger, alpha, u);
    CHECK(regret < bound);
    CHECK(regret > 0.0);  // the comparator gains alpha sqrt(T) |c| per step
  }
}

TEST_CASE("static scale-free bound: randomized campaign") {
  Rng rng(38, "a1");
  for (int trial = 0; trial < 200; ++trial) {
    const long T = 256;
    const auto v = random_stream(rng, T);
    const double alphas[] = {0.1, 1.0, 10.0};
    const double alpha = alphas[rng.uniform_int(3)];
    const double us[] = {0.0, 1.0, -1.0};
    const double u = us[rng.uniform_int(3)];
    const auto plays = run_learner(make_scale_free(alpha), v);
    const std::vector<double> comparators(std::size_t(T), u);
    const auto ledger = make_ledger(v, plays, comparators);
    CHECK(dynamic_regret(ledger) <=
          bound_static_scale_free(ledger, alpha, u) + 1e-9);
  }
}

TEST_CASE("discounted bound: beta = 1 reduces to the static bound") {
  Rng rng(39, "b1-collapse");
  const long T = 128;
  const auto v = random_stream(rng, T);
  const auto plays = run_learner(make_scale_free(0.7), v);
  const std::vector<double> comparators(std::size_t(T), 0.4);
  const auto ledger = make_ledger(v, plays, comparators);
  CHECK(rel_close(bound_discounted(ledger, 0.7, 0.4, 1.0, T),
                  bound_static_scale_free(ledger, 0.7, 0.4), 1e-14, 1e-15));
}

TEST_CASE("discounted bound: zero losses give zero bound and regret") {
  const std::vector<double> v(16, 0.0);
  const auto plays = run_learner(make_discounted(1.0, 0.9, 0.9), v);
  const std::vector<double> comparators(16, 0.0);
  const auto ledger = make_ledger(v, plays, comparators);
  CHECK(bound_discounted(ledger, 1.0, 0.0, 0.9, 16) == 0.0);
  CHECK(discounted_regret(ledger, 0.0, 0.9, 16) == 0.0);
}

TEST_CASE("discounted bound: anytime campaign over all prefixes") {
  Rng rng(40, "b1");
  for (int trial = 0; trial < 100; ++trial) {
    const long T = 200;
    const auto v = random_stream(rng, T);
    const double betas[] = {0.5, 0.9, 0.99};
    const double beta = betas[rng.uniform_int(3)];
    const double alpha = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
    const double u = rng.uniform(-alpha, alpha);
    const auto plays = run_learner(make_discounted(alpha, beta, beta), v);
    const std::vector<double> comparators(std::size_t(T), u);
    const auto ledger = make_ledger(v, plays, comparators);
    for (long tau = 1; tau <= T; ++tau) {
      CHECK(discounted_regret(ledger, u, beta, tau) <=
            bound_discounted(ledger, alpha, u, beta, tau) + 1e-9);
    }
  }
}

TEST_CASE("dynamic unbounded bound: requirements and campaign") {
  RegretLedger dummy;
  dummy.losses = {1.0};
  dummy.plays = {0.0};
  dummy.comparators = {0.0};
  CHECK_THROWS_AS(bound_dynamic_unbounded(dummy, 1.0, 1.0, 1.0),
                  std::invalid_argument);

  {  // zero stream: everything collapses to zero
    const std::vector<double> v(32, 0.0);
    const auto plays = run_learner(make_discounted(1.0, 0.9, 0.9), v);
    const std::vector<double> comparators(32, 0.0);
    const auto ledger = make_ledger(v, plays, comparators);
    CHECK(bound_dynamic_unbounded(ledger, 1.0, 0.9, m_ratio(v, 0.9, 32)) == 0.0);
    CHECK(dynamic_regret(ledger) == 0.0);
  }

  Rng rng(41, "t31");
  for (int trial = 0; trial < 100; ++trial) {
    const long T = 512;
    const auto v = random_stream(rng, T);
    const double beta = rng.bernoulli(0.5) ? 0.9 : 0.99;
    const double alpha = rng.bernoulli(0.5) ? 0.5 : 1.0;
    const double m = m_ratio(v, beta, T);
    const auto plays = run_learner(make_discounted(alpha, beta, beta), v);
    std::vector<double> comparators(std::size_t(T), 0.0);
    for (double& u : comparators) u = rng.uniform(-alpha * m, alpha * m);
    const auto ledger = make_ledger(v, plays, comparators);
    CHECK(dynamic_regret(ledger) <=
          bound_dynamic_unbounded(ledger, alpha, beta, m) + 1e-9);
  }
}

TEST_CASE("dynamic unbounded bound on the adversarial coordinate stream") {
  const auto inst = make_lower_bound(512);
  const auto v = inst.coordinate_losses(0);
  const double beta = 0.99, alpha = 1.0;
  const double m = m_ratio(v, beta, 512);
  REQUIRE(m >= 1.0);  // the instance comparators (+-1) are admissible
  const auto plays = run_learner(make_discounted(alpha, beta, beta), v);
  std::vector<double> comparators;
  for (const auto& u : inst.comparators) comparators.push_back(u[0]);
  const auto ledger = make_ledger(v, plays, comparators);
  const double regret = dynamic_regret(ledger);
  const double bound = bound_dynamic_unbounded(ledger, alpha, beta, m);
  CHECK(regret <= bound);
}

TEST_CASE("dynamic clipped bound: requirements and campaign") {
  RegretLedger dummy;
  dummy.losses = {1.0};
  dummy.plays = {0.0};
  dummy.comparators = {0.0};
  CHECK_THROWS_AS(bound_dynamic_clipped(dummy, 1.0, 1.0),
                  std::invalid_argument);

  {  // zero stream collapses bound and regret to zero
    const std::vector<double> v(16, 0.0);
    const auto plays = run_learner(make_clipped(1.0, 0.9, 1.0), v);
    const std::vector<double> comparators(16, 0.0);
    const auto ledger = make_ledger(v, plays, comparators);
    CHECK(bound_dynamic_clipped(ledger, 1.0, 0.9) == 0.0);
    CHECK(dynamic_regret(ledger) == 0.0);
  }

  Rng rng(42, "t33");
  for (int trial = 0; trial < 100; ++trial) {
    const long T = 512;
    const auto v = random_stream(rng, T);
    const double beta = rng.bernoulli(0.5) ? 0.9 : 0.99;
    const auto plays = run_learner(make_clipped(1.0, beta, 1.0), v);
    std::vector<double> comparators(std::size_t(T), 0.0);
    for (double& u : comparators) u = rng.uniform(-1.0, 1.0);
    const auto ledger = make_ledger(v, plays, comparators);
    CHECK(dynamic_regret(ledger) <=
          bound_dynamic_clipped(ledger, 1.0, beta) + 1e-9);
  }
}

TEST_CASE("dynamic clipped bound on the tuned adversarial instance") {
  const long T = 1024;
  const auto inst = make_lower_bound(T);
  const double beta = tuned_beta(T, 1.0);
  double regret = 0.0, bound = 0.0;
  for (int i = 0; i < 2; ++i) {
    const auto v = inst.coordinate_losses(i);
    const auto plays = run_learner(make_clipped(1.0, beta, 1.0), v);
    std::vector<double> comparators;
    for (const auto& u : inst.comparators) comparators.push_back(u[i]);
    const auto ledger = make_ledger(v, plays, comparators);
    regret += dynamic_regret(ledger);
    bound += bound_dynamic_clipped(ledger, 1.0, beta);
  }
  CHECK(regret <= bound);
  CHECK(regret < double(T));  // far below the beta = 1 baselines
}

TEST_CASE("ledger max_abs_play needs the final play only at tau = T") {
  RegretLedger ledger;
  ledger.losses = {1.0, 2.0};
  ledger.plays = {0.0, -3.0};
  ledger.comparators = {0.0, 0.0};
  CHECK(ledger.max_abs_play(1) == 3.0);
  CHECK_THROWS_AS(ledger.max_abs_play(2), std::invalid_argument);
  ledger.play_after_last = -5.0;
  CHECK(ledger.max_abs_play(2) == 5.0);
}
