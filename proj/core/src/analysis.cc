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

#include "coinwalk/analysis.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "coinwalk/errors.h"

namespace coinwalk {

Distribution normalize_counts(const Counts &counts) {
    if (counts.shots == 0) {
        throw ValidationError("cannot normalize zero shots");
    }
    validate_counts(counts);
    Distribution dist;
    const auto shots = static_cast<double>(counts.shots);
    for (const auto &[k, n] : counts.counts) {
        dist[k] = static_cast<double>(n) / shots;
    }
    return dist;
}

namespace {

std::size_t key_width(const Distribution &d) {
    if (d.empty()) {
        throw ValidationError("empty distribution");
    }
    const std::size_t width = d.begin()->first.size();
    for (const auto &[k, _] : d) {
        if (k.size() != width) {
            throw ValidationError("outcome bitstrings have differing lengths");
        }
    }
    return width;
}

}  // namespace

double bhattacharyya_coefficient(const Distribution &p, const Distribution &q) {
    if (key_width(p) != key_width(q)) {
        throw ValidationError("distributions are over bitstrings of different lengths");
    }
    double sum = 0.0;
    for (const auto &[k, pk] : p) {
        auto it = q.find(k);
        if (it != q.end()) {
            sum += std::sqrt(pk * it->second);
        }
    }
    return std::clamp(sum, 0.0, 1.0);
}

double hellinger_distance(const Distribution &p, const Distribution &q) {
    return std::sqrt(1.0 - bhattacharyya_coefficient(p, q));
}

double hellinger_fidelity(const Distribution &p, const Distribution &q) {
    const double h = hellinger_distance(p, q);
    const double one_minus_h2 = 1.0 - h * h;
    return one_minus_h2 * one_minus_h2;
}

FidelitySeries fidelity_series(const std::map<std::size_t, Distribution> &reference,
                               const std::map<std::size_t, std::vector<Distribution>> &candidate) {
    if (reference.size() != candidate.size()) {
        throw ValidationError("reference and candidate cover different step ranges");
    }
    FidelitySeries series;
    for (const auto &[step, ref] : reference) {
        auto it = candidate.find(step);
        if (it == candidate.end()) {
            throw ValidationError("candidate has no data for step " + std::to_string(step));
        }
        const auto &repeats = it->second;
        if (repeats.empty()) {
            throw ValidationError("candidate has zero repeats at step " + std::to_string(step));
        }
        std::vector<double> f;
        for (const auto &d : repeats) {
            f.push_back(hellinger_fidelity(ref, d));
        }
        const auto r = static_cast<double>(f.size());
        double mean = 0.0;
        for (double v : f) mean += v;
        mean /= r;
        double stderr_ = 0.0;
        if (f.size() > 1) {
            double ss = 0.0;
            for (double v : f) ss += (v - mean) * (v - mean);
            stderr_ = std::sqrt(ss / (r - 1.0)) / std::sqrt(r);
        }
        series.push_back({step, mean, stderr_, f.size()});
    }
    return series;
}

std::string format_6g(double value) {
    std::ostringstream ss;
    ss << std::setprecision(6) << value;
    return ss.str();
}

std::string to_csv(const FidelitySeries &series) {
    std::string out = "step,fidelity,std_error,repeats\n";
    for (const auto &p : series) {
        out += std::to_string(p.step) + "," + format_6g(p.fidelity_mean) + "," + format_6g(p.std_error) + "," +
               std::to_string(p.repeats) + "\n";
    }
    return out;
}

FidelitySeries parse_fidelity_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "step,fidelity,std_error,repeats") {
        throw ValidationError("expected header 'step,fidelity,std_error,repeats'");
    }
    FidelitySeries series;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell[4];
        for (auto &c : cell) {
            if (!std::getline(row, c, ',')) {
                throw ValidationError("short CSV row: " + line);
            }
        }
        try {
            series.push_back({std::stoul(cell[0]), std::stod(cell[1]), std::stod(cell[2]), std::stoul(cell[3])});
        } catch (const std::exception &) {
            throw ValidationError("bad CSV row: " + line);
        }
        if (series.size() > 1 && series[series.size() - 2].step >= series.back().step) {
            throw ValidationError("steps must be strictly increasing");
        }
    }
    return series;
}

}  // namespace coinwalk
