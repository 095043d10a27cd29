// Copyright 2026 The Coinwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coinwalk/calibration.h"

#include "gtest/gtest.h"

#include "coinwalk/experiment.h"

using namespace coinwalk;

namespace {

WalkSpec small_walk(std::size_t steps) {
    WalkSpec w;
    w.num_position_qubits = 3;
    w.steps = steps;
    return w;
}

FidelitySeries reference_for(const WalkSpec &walk, const NoiseModel &model) {
    return exact_fidelity_series(walk, model, simulate_walk_series(walk, std::nullopt));
}

}  // namespace

TEST(calibration_grid, parse) {
    const auto g = CalibrationGrid::parse("l1=0,0.005;l2=0:0.04:3;lm=0.6;s=1");
    ASSERT_EQ(g.lambda_1q, (std::vector<double>{0.0, 0.005}));
    ASSERT_EQ(g.lambda_2q, (std::vector<double>{0.0, 0.02, 0.04}));
    ASSERT_EQ(g.lambda_3q, (std::vector<double>{0.0}));
    ASSERT_EQ(g.lambda_multi, (std::vector<double>{0.6}));
    ASSERT_EQ(g.size(), 6u);
    ASSERT_THROW(CalibrationGrid::parse("l9=1"), ValidationError);
    ASSERT_THROW(CalibrationGrid::parse("l1"), ValidationError);
    ASSERT_THROW(CalibrationGrid::parse("l1=abc"), ValidationError);
    ASSERT_THROW(CalibrationGrid::parse("l1=0:1:0"), ValidationError);
}

TEST(calibration_grid, candidates_lexicographic) {
    CalibrationGrid g;
    g.lambda_1q = {0.01, 0.0};
    g.lambda_2q = {0.02, 0.0, 0.02};
    const auto c = g.candidates();
    ASSERT_EQ(c.size(), 4u);
    ASSERT_EQ(c[0].lambda_1q, 0.0);
    ASSERT_EQ(c[0].lambda_2q, 0.0);
    ASSERT_EQ(c[1].lambda_2q, 0.02);
    ASSERT_EQ(c[2].lambda_1q, 0.01);
    ASSERT_EQ(c[3].lambda_2q, 0.02);
}

TEST(linspace, endpoints) {
    ASSERT_EQ(linspace(0.0, 1.0, 1), (std::vector<double>{0.0}));
    ASSERT_EQ(linspace(0.0, 1.0, 5), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
}

TEST(fidelity_mse, basic) {
    const FidelitySeries a{{0, 1.0, 0, 1}, {1, 0.5, 0, 1}};
    const FidelitySeries b{{0, 0.8, 0, 1}, {1, 0.5, 0, 1}};
    ASSERT_NEAR(fidelity_mse(a, b), 0.02, 1e-15);
    ASSERT_THROW(fidelity_mse(a, {{0, 1.0, 0, 1}}), ValidationError);
    ASSERT_THROW(fidelity_mse(a, {{0, 1.0, 0, 1}, {2, 1.0, 0, 1}}), ValidationError);
}

TEST(calibrate, recovers_generating_model) {
    const WalkSpec walk = small_walk(4);
    const auto reference = reference_for(walk, default_model());
    const auto grid = CalibrationGrid::parse("l1=0,0.005,0.01;l2=0,0.02;l3=0.04,0.08;lm=0.6");
    const auto result = calibrate(reference, walk, grid);
    ASSERT_EQ(result.evaluated, 12u);
    ASSERT_EQ(result.model.lambda_1q, 0.005);
    ASSERT_EQ(result.model.lambda_2q, 0.02);
    ASSERT_EQ(result.model.lambda_3q, 0.04);
    ASSERT_EQ(result.model.lambda_multi, 0.6);
    ASSERT_LT(result.mse, 1e-20);
}

TEST(calibrate, perfect_reference_gives_zero_model) {
    const WalkSpec walk = small_walk(3);
    FidelitySeries reference;
    for (std::size_t t = 0; t <= 3; ++t) reference.push_back({t, 1.0, 0.0, 1});
    const auto grid = CalibrationGrid::parse("l1=0:0.01:3;l2=0:0.04:3");
    const auto result = calibrate(reference, walk, grid);
    ASSERT_EQ(result.model.lambda_1q, 0.0);
    ASSERT_EQ(result.model.lambda_2q, 0.0);
    ASSERT_LT(result.mse, 1e-24);
}

TEST(calibrate, returns_grid_argmin) {
    const WalkSpec walk = small_walk(4);
    const auto reference = reference_for(walk, scaled(default_model(), 0.5));
    CalibrationGrid grid;
    grid.lambda_1q = {0.005};
    grid.lambda_2q = {0.02};
    grid.lambda_3q = {0.04};
    grid.lambda_multi = {0.6};
    grid.strengths = {0.0, 1.0};
    const auto result = calibrate(reference, walk, grid);
    const auto noiseless = simulate_walk_series(walk, std::nullopt);
    double best = 1e9;
    double best_strength = -1.0;
    for (double s : grid.strengths) {
        NoiseModel m = default_model();
        m.strength = s;
        const double mse = fidelity_mse(reference, exact_fidelity_series(walk, m, noiseless));
        if (mse < best) {
            best = mse;
            best_strength = s;
        }
    }
    ASSERT_EQ(result.model.strength, best_strength);
    ASSERT_NEAR(result.mse, best, 1e-15);
}

TEST(calibrate, rejects_bad_inputs) {
    const WalkSpec walk = small_walk(2);
    const FidelitySeries short_ref{{0, 1.0, 0, 1}, {1, 1.0, 0, 1}};
    ASSERT_THROW(calibrate(short_ref, walk, CalibrationGrid{}), ValidationError);
    const FidelitySeries gap{{0, 1.0, 0, 1}, {1, 1.0, 0, 1}, {3, 1.0, 0, 1}};
    ASSERT_THROW(calibrate(gap, walk, CalibrationGrid{}), ValidationError);
    const FidelitySeries ok{{0, 1.0, 0, 1}, {1, 1.0, 0, 1}, {2, 1.0, 0, 1}};
    ASSERT_THROW(calibrate(ok, walk, CalibrationGrid::parse("l1=2")), ValidationError);
}
