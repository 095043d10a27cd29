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

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "coinwalk/distribution.h"

namespace coinwalk {

Distribution normalize_counts(const Counts &counts);

/// Bhattacharyya coefficient sum_i sqrt(p_i q_i), clamped to [0, 1].
double bhattacharyya_coefficient(const Distribution &p, const Distribution &q);

/// sqrt(1 - BC(p, q)). Lies in [0, 1].
double hellinger_distance(const Distribution &p, const Distribution &q);

/// (1 - H^2)^2.
double hellinger_fidelity(const Distribution &p, const Distribution &q);

struct FidelityPoint {
    std::size_t step = 0;
    double fidelity_mean = 0.0;
    double std_error = 0.0;
    std::size_t repeats = 1;

    bool operator==(const FidelityPoint &other) const = default;
};

/// Ordered by strictly increasing step.
using FidelitySeries = std::vector<FidelityPoint>;

/// Fidelity of every candidate repeat against the reference at the same
/// step. Standard error is the sample standard deviation over repeats divided
/// by sqrt(R), and zero when R = 1.
FidelitySeries fidelity_series(const std::map<std::size_t, Distribution> &reference,
                               const std::map<std::size_t, std::vector<Distribution>> &candidate);

/// `step,fidelity,std_error,repeats` with 6 significant digits.
std::string to_csv(const FidelitySeries &series);
FidelitySeries parse_fidelity_csv(const std::string &text);

/// Formats with 6 significant digits.
std::string format_6g(double value);

}  // namespace coinwalk
