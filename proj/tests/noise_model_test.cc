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

#include "coinwalk/noise_model.h"

#include "gtest/gtest.h"

using namespace coinwalk;

TEST(noise_model, default_values) {
    const NoiseModel m = default_model();
    ASSERT_EQ(m.lambda_1q, 0.005);
    ASSERT_EQ(m.lambda_2q, 0.02);
    ASSERT_EQ(m.lambda_3q, 0.04);
    ASSERT_EQ(m.lambda_multi, 0.6);
    ASSERT_EQ(m.strength, 1.0);
    ASSERT_EQ(m.mode, NoiseMode::Abstract);
}

TEST(noise_model, lambda_for_classes) {
    const NoiseModel m = default_model();
    ASSERT_DOUBLE_EQ(lambda_for(m, make_mcx({0, 1, 2}, 3)), 0.6);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_mcx({0, 1, 2, 3}, 4)), 0.6);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_mcx({0, 1}, 2)), 0.04);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_cnot(0, 1)), 0.02);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_id(0)), 0.005);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_h(0)), 0.005);
    ASSERT_DOUBLE_EQ(lambda_for(m, make_rz(0.1, 0)), 0.005);
}

TEST(noise_model, scaled) {
    ASSERT_NEAR(lambda_for(scaled(default_model(), 0.1), make_cnot(0, 1)), 0.002, 1e-18);
    ASSERT_NEAR(lambda_for(scaled(default_model(), 0.02), make_h(0)), 0.0001, 1e-18);
    const NoiseModel off = scaled(default_model(), 0.0);
    for (const auto &g : {make_h(0), make_cnot(0, 1), make_mcx({0, 1}, 2), make_mcx({0, 1, 2}, 3)}) {
        ASSERT_EQ(lambda_for(off, g), 0.0);
    }
    ASSERT_EQ(scaled(default_model(), 0.5).lambda_multi, 0.6);
    ASSERT_THROW(scaled(default_model(), 1.5), ValidationError);
    ASSERT_THROW(scaled(default_model(), -0.1), ValidationError);
}

TEST(noise_model, monotone_in_strength) {
    const std::vector<GateInstance> gates{make_x(0), make_cnot(0, 1), make_mcx({0, 1}, 2), make_mcx({0, 1, 2}, 3)};
    for (const auto &g : gates) {
        double prev = -1.0;
        for (int i = 0; i <= 20; ++i) {
            const double lambda = lambda_for(scaled(default_model(), i / 20.0), g);
            ASSERT_GE(lambda, prev);
            prev = lambda;
        }
    }
}

TEST(noise_model, validation) {
    NoiseModel m = default_model();
    ASSERT_NO_THROW(m.validate());
    m.lambda_1q = 4.0 / 3.0;
    ASSERT_NO_THROW(m.validate());
    m.lambda_1q = 1.34;
    ASSERT_THROW(m.validate(), ValidationError);
    m = default_model();
    m.lambda_2q = 16.0 / 15.0 + 1e-6;
    ASSERT_THROW(m.validate(), ValidationError);
    m = default_model();
    m.lambda_multi = -1e-3;
    ASSERT_THROW(m.validate(), ValidationError);
    ASSERT_DOUBLE_EQ(depolarizing_bound(1), 4.0 / 3.0);
    ASSERT_DOUBLE_EQ(depolarizing_bound(3), 64.0 / 63.0);
}

TEST(noise_model, file_round_trip) {
    NoiseModel m = scaled(default_model(), 0.06);
    m.mode = NoiseMode::Native;
    const std::string text = serialize(m);
    ASSERT_NE(text.find("\"format\": \"noise/v1\""), std::string::npos);
    ASSERT_NE(text.find("\"mode\": \"native\""), std::string::npos);
    ASSERT_EQ(deserialize_noise_model(text), m);

    ASSERT_THROW(deserialize_noise_model(R"({"format":"noise/v2"})"), ValidationError);
    ASSERT_THROW(deserialize_noise_model(
                     R"({"format":"noise/v1","lambda_1q":0,"lambda_2q":0,"lambda_3q":0,"lambda_multi":0,"strength":1,"mode":"weird"})"),
                 ValidationError);
    ASSERT_THROW(deserialize_noise_model(
                     R"({"format":"noise/v1","lambda_1q":2,"lambda_2q":0,"lambda_3q":0,"lambda_multi":0,"strength":1,"mode":"abstract"})"),
                 ValidationError);
}
