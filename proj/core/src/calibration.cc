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

#include <algorithm>
#include <limits>
#include <sstream>

#include "coinwalk/experiment.h"

namespace coinwalk {

std::size_t CalibrationGrid::size() const {
    return lambda_1q.size() * lambda_2q.size() * lambda_3q.size() * lambda_multi.size() * strengths.size();
}

std::vector<NoiseModel> CalibrationGrid::candidates() const {
    auto sorted = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        return v;
    };
    const auto l1 = sorted(lambda_1q);
    const auto l2 = sorted(lambda_2q);
    const auto l3 = sorted(lambda_3q);
    const auto lm = sorted(lambda_multi);
    const auto st = sorted(strengths);
    std::vector<NoiseModel> out;
    for (double a : l1)
        for (double b : l2)
            for (double c : l3)
                for (double d : lm)
                    for (double s : st) {
                        out.push_back(NoiseModel{a, b, c, d, s, mode});
                    }
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
    if (points == 0) {
        throw ValidationError("linspace needs at least one point");
    }
    if (points == 1) {
        return {lo};
    }
    std::vector<double> v;
    for (std::size_t i = 0; i < points; ++i) {
        v.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
    }
    v.back() = hi;
    return v;
}

namespace {

std::vector<double> parse_axis(const std::string &spec) {
    try {
        if (std::count(spec.begin(), spec.end(), ':') == 2) {
            const auto a = spec.find(':');
            const auto b = spec.find(':', a + 1);
            return linspace(std::stod(spec.substr(0, a)), std::stod(spec.substr(a + 1, b - a - 1)),
                            std::stoul(spec.substr(b + 1)));
        }
        std::vector<double> v;
        std::istringstream in(spec);
        std::string item;
        while (std::getline(in, item, ',')) {
            size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw ValidationError("trailing characters in '" + item + "'");
            }
        }
        if (v.empty()) {
            throw ValidationError("empty grid axis");
        }
        return v;
    } catch (const std::logic_error &e) {
        throw ValidationError("bad grid axis '" + spec + "': " + e.what());
    }
}

}  // namespace

CalibrationGrid CalibrationGrid::parse(const std::string &text) {
    CalibrationGrid grid;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, ';')) {
        if (part.empty()) continue;
        const auto eq = part.find('=');
        if (eq == std::string::npos) {
            throw ValidationError("grid entry '" + part + "' lacks '='");
        }
        const std::string key = part.substr(0, eq);
        auto values = parse_axis(part.substr(eq + 1));
        if (key == "l1") {
            grid.lambda_1q = std::move(values);
        } else if (key == "l2") {
            grid.lambda_2q = std::move(values);
        } else if (key == "l3") {
            grid.lambda_3q = std::move(values);
        } else if (key == "lm") {
            grid.lambda_multi = std::move(values);
        } else if (key == "s") {
            grid.strengths = std::move(values);
        } else {
            throw ValidationError("unknown grid axis '" + key + "'");
        }
    }
    return grid;
}

double fidelity_mse(const FidelitySeries &reference, const FidelitySeries &simulated) {
    if (reference.size() != simulated.size() || reference.empty()) {
        throw ValidationError("fidelity series lengths differ");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        if (reference[i].step != simulated[i].step) {
            throw ValidationError("fidelity series steps differ");
        }
        const double d = reference[i].fidelity_mean - simulated[i].fidelity_mean;
        sum += d * d;
    }
    return sum / static_cast<double>(reference.size());
}

CalibrationResult calibrate(const FidelitySeries &reference, const WalkSpec &walk, const CalibrationGrid &grid,
                            std::size_t jobs) {
    walk.validate();
    if (grid.size() == 0) {
        throw ValidationError("calibration grid is empty");
    }
    if (reference.size() != walk.steps + 1) {
        throw ValidationError("reference series must cover steps 0.." + std::to_string(walk.steps));
    }
    for (std::size_t t = 0; t < reference.size(); ++t) {
        if (reference[t].step != t) {
            throw ValidationError("reference series must cover steps 0.." + std::to_string(walk.steps));
        }
    }
    const auto candidates = grid.candidates();
    for (const auto &m : candidates) {
        m.validate();
    }
    const auto noiseless = simulate_walk_series(walk, std::nullopt);
    std::vector<double> mse(candidates.size());
    parallel_for(candidates.size(), jobs, [&](std::size_t i) {
        mse[i] = fidelity_mse(reference, exact_fidelity_series(walk, candidates[i], noiseless));
    });

    // Candidates are already in lexicographic order; keep the first of any
    // numerically tied minimum.
    constexpr double kTieTolerance = 1e-15;
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        if (mse[i] < mse[best] - kTieTolerance) {
            best = i;
        }
    }
    return CalibrationResult{candidates[best], mse[best], candidates.size()};
}

}  // namespace coinwalk
