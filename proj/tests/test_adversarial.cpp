#include <doctest.h>

#include <cmath>
#include <vector>

#include "olu/adversarial.hpp"
#include "olu/rng.hpp"

using namespace olu;

TEST_CASE("lower-bound construction at T = 4 matches the hand expansion") {
  const auto inst = make_lower_bound(4);
  CHECK(inst.T_hat == 4);
  const std::vector<std::vector<double>> expected_v{
      {0.0, 1.0}, {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}};
  const std::vector<std::vector<double>> expected_u{
      {-1.0, -1.0}, {-1.0, -1.0}, {1.0, 1.0}, {1.0, 1.0}};
  CHECK(inst.losses == expected_v);
  CHECK(inst.comparators == expected_u);
  CHECK(inst.comparator_inner_product() == -4.0);
}

TEST_CASE("general T pads with zero losses and a frozen comparator") {
  const auto inst = make_lower_bound(6);
  CHECK(inst.T_hat == 4);
  CHECK(inst.losses[4] == std::vector{0.0, 0.0});
  CHECK(inst.losses[5] == std::vector{0.0, 0.0});
  CHECK(inst.comparators[4] == inst.comparators[3]);
  CHECK(inst.comparators[5] == inst.comparators[3]);
  CHECK(inst.comparator_inner_product() == -4.0);

  CHECK_THROWS_AS(make_lower_bound(3), std::invalid_argument);
}

TEST_CASE("construction invariants over random horizons") {
  Rng rng(71, "horizons");
  for (int trial = 0; trial < 25; ++trial) {
    const long T = 4 + rng.uniform_int(100000 - 4);
    const auto inst = make_lower_bound(T);
    CHECK(inst.T_hat % 4 == 0);
    CHECK(inst.T_hat <= T);
    CHECK(T - inst.T_hat < 4);
    for (long t = 1; t <= T; ++t) {
      const auto& v = inst.losses[std::size_t(t - 1)];
      const double norm = std::abs(v[0]) + std::abs(v[1]);
      if (t <= inst.T_hat) {
        CHECK(norm == 1.0);  // signed coordinate vector
        CHECK(v[0] * v[1] == 0.0);
      } else {
        CHECK(norm == 0.0);
      }
    }
    CHECK(inst.argmin_check());
    CHECK(assert_no_momentum_orthogonality(inst));
    CHECK(inst.comparator_inner_product() == -double(inst.T_hat));
    // each coordinate moves once from -1 to +1: measured path length 2
    CHECK(inst.coordinate_path_length(0) == 2.0);
    CHECK(inst.coordinate_path_length(1) == 2.0);
  }
}

TEST_CASE("corrupting the stream breaks orthogonality") {
  auto inst = make_lower_bound(8);
  inst.losses[2] = inst.losses[1];
  CHECK_FALSE(assert_no_momentum_orthogonality(inst));
}

TEST_CASE("no-momentum learners suffer exactly zero total loss") {
  LearnerConfig sqrt_schedule = make_sgd(1.0);
  sqrt_schedule.alpha_schedule = [](long t) {
    return 2.0 / std::sqrt(double(t));
  };
  for (long T : {16L, 64L, 100L}) {  // 100 exercises the padded tail
    const auto inst = make_lower_bound(T);
    for (const auto& config :
         {make_sgd(1.0), make_sgd(0.25), make_adagrad(1.0), sqrt_schedule}) {
      const auto row = run_baseline(inst, config, "nm");
      CHECK(row.total_loss == 0.0);
      CHECK(row.dynamic_regret == double(inst.T_hat));
    }
  }
}

TEST_CASE("clipped beta=1 plays stay in [-1, 0] on the instance") {
  const auto inst = make_lower_bound(64);
  for (int i = 0; i < 2; ++i) {
    const auto losses = inst.coordinate_losses(i);
    // nonnegative prefix sums per coordinate
    double prefix = 0.0;
    for (double v : losses) {
      prefix += v;
      CHECK(prefix >= 0.0);
    }
    const auto plays = run_learner(make_clipped(1.0, 1.0, 1.0), losses);
    for (double play : plays) {
      CHECK(play <= 0.0);
      CHECK(play >= -1.0);
    }
  }
}

TEST_CASE("measured baselines at T = 16") {
  const auto inst = make_lower_bound(16);
  const std::pair<std::string, LearnerConfig> configs[] = {
      {"adagrad", make_adagrad(1.0)},
      {"clipped_beta1", make_clipped(1.0, 1.0, 1.0)},
  };
  const auto rows = measure_baselines(inst, configs);
  CHECK(rows[0].dynamic_regret == 16.0);
  CHECK(rows[0].dynamic_regret >= 13.0);
  CHECK(rows[1].dynamic_regret >= 8.0);
  CHECK(rows[1].dynamic_regret >= 6.5);
}

TEST_CASE("tuned discount reaches sublinear regret by T = 2^12") {
  const long T = 1L << 12;
  const auto inst = make_lower_bound(T);
  const auto fixed_c =
      run_baseline(inst, make_clipped(1.0, tuned_beta(T, 2.0), 1.0), "c2");
  CHECK(fixed_c.dynamic_regret / double(T) <= 0.5);
  const auto best = run_tuned_clipped(inst, default_c_grid());
  CHECK(best.dynamic_regret <= fixed_c.dynamic_regret);
}

TEST_CASE("scaling sweep slopes separate the learner families") {
  std::vector<long> grid;
  for (int p = 8; p <= 14; ++p) grid.push_back(1L << p);
  const auto sweep = scaling_sweep(grid, default_c_grid());
  CHECK(sweep.slopes.at("no_momentum") == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(sweep.slopes.at("clipped_beta1") >= 0.95);
  CHECK(sweep.slopes.at("clipped_tuned") >= 0.55);
  CHECK(sweep.slopes.at("clipped_tuned") <= 0.80);
  CHECK(sweep.rows.size() == grid.size() * 3);
}

TEST_CASE("the T^(-2/3) discount rule beats a 1/T rule on this instance") {
  // A 1/T discount keeps nearly the whole horizon in the look-back window,
  // so the learner straddles the sign flip like the undiscounted baseline.
  std::vector<long> grid{1L << 9, 1L << 11, 1L << 13};
  const auto fast = scaling_sweep(grid, default_c_grid());
  const auto slow = scaling_sweep(
      grid, default_c_grid(), false, [](long T, double c) {
        return std::clamp(1.0 - c / double(T), 1e-6, 1.0 - 1e-12);
      });
  CHECK(fast.slopes.at("clipped_tuned") < slow.slopes.at("clipped_tuned"));
  for (std::size_t i = 0; i < fast.rows.size(); ++i) {
    if (fast.rows[i].learner == "clipped_tuned") {
      CHECK(fast.rows[i].regret < slow.rows[i].regret);
    }
  }
}

TEST_CASE("degenerate sweep grids are rejected") {
  CHECK_THROWS_AS(scaling_sweep(std::vector<long>{64}, default_c_grid()),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      scaling_sweep(std::vector<long>{64, 64}, default_c_grid()),
      std::invalid_argument);
}

TEST_CASE("slope fit recovers a known exponent") {
  std::vector<double> xs, ys;
  for (double x : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    xs.push_back(x);
    ys.push_back(3.0 * std::pow(x, 0.66));
  }
  CHECK(fit_loglog_slope(xs, ys) == doctest::Approx(0.66).epsilon(1e-12));
  CHECK_THROWS_AS(fit_loglog_slope(std::vector{1.0}, std::vector{1.0}),
                  std::invalid_argument);
}
