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

#include "coinwalk/records.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coinwalk/analysis.h"

namespace coinwalk {

using nlohmann::json;

std::string to_bitstring(std::uint64_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t i = 0; i < width; ++i) {
        if ((value >> i) & 1) {
            s[width - 1 - i] = '1';
        }
    }
    return s;
}

namespace {

void validate_keys(const std::vector<std::string> &keys) {
    if (keys.empty()) {
        throw ValidationError("distribution has no outcomes");
    }
    const std::size_t width = keys.front().size();
    for (const auto &k : keys) {
        if (k.size() != width) {
            throw ValidationError("outcome bitstrings have differing lengths");
        }
        if (k.find_first_not_of("01") != std::string::npos) {
            throw ValidationError("outcome '" + k + "' is not a bitstring");
        }
    }
}

}  // namespace

void validate_distribution(const Distribution &dist, double tolerance) {
    std::vector<std::string> keys;
    double total = 0.0;
    for (const auto &[k, p] : dist) {
        if (!(p >= 0.0)) {
            throw ValidationError("negative probability for '" + k + "'");
        }
        keys.push_back(k);
        total += p;
    }
    validate_keys(keys);
    if (std::abs(total - 1.0) > tolerance) {
        throw ValidationError("probabilities sum to " + std::to_string(total));
    }
}

void validate_counts(const Counts &counts) {
    std::vector<std::string> keys;
    std::uint64_t total = 0;
    for (const auto &[k, n] : counts.counts) {
        keys.push_back(k);
        total += n;
    }
    validate_keys(keys);
    if (total != counts.shots) {
        throw ValidationError("counts sum to " + std::to_string(total) + " but shots is " +
                              std::to_string(counts.shots));
    }
}

StepRecord make_counts_record(std::string backend, std::size_t nodes, std::size_t steps, Counts counts) {
    StepRecord r{std::move(backend), nodes, steps, std::move(counts), {}};
    r.distribution = normalize_counts(*r.counts);
    return r;
}

StepRecord make_distribution_record(std::string backend, std::size_t nodes, std::size_t steps,
                                    Distribution dist) {
    validate_distribution(dist);
    return StepRecord{std::move(backend), nodes, steps, std::nullopt, std::move(dist)};
}

std::string serialize(const StepRecord &record) {
    json doc;
    doc["format"] = record.counts ? kCountsFormat : kDistributionFormat;
    doc["backend"] = record.backend;
    doc["nodes"] = record.nodes;
    doc["steps"] = record.steps;
    if (record.counts) {
        doc["shots"] = record.counts->shots;
        doc["counts"] = record.counts->counts;
    } else {
        doc["probabilities"] = record.distribution;
    }
    return doc.dump(2) + "\n";
}

StepRecord deserialize_step_record(const std::string &text) {
    try {
        const json doc = json::parse(text);
        const auto format = doc.at("format").get<std::string>();
        auto backend = doc.at("backend").get<std::string>();
        const auto nodes = doc.at("nodes").get<std::size_t>();
        const auto steps = doc.at("steps").get<std::size_t>();
        if (format == kCountsFormat) {
            Counts counts;
            counts.shots = doc.at("shots").get<std::uint64_t>();
            counts.counts = doc.at("counts").get<std::map<std::string, std::uint64_t>>();
            return make_counts_record(std::move(backend), nodes, steps, std::move(counts));
        }
        if (format == kDistributionFormat) {
            return make_distribution_record(std::move(backend), nodes, steps,
                                            doc.at("probabilities").get<Distribution>());
        }
        throw ValidationError("unknown record format '" + format + "'");
    } catch (const json::exception &e) {
        throw ValidationError(std::string("malformed record: ") + e.what());
    }
}

std::string census_report(const Circuit &source, const Circuit &native, std::size_t steps) {
    const Census before = gate_census(source);
    const Census after = gate_census(native);
    json doc;
    doc["before"] = before;
    doc["total_before"] = census_total(before);
    doc["after"] = after;
    doc["total_after"] = census_total(after);
    json lowerings = json::array();
    for (const auto &[name, count] : before) {
        if (name == "H") {
            lowerings.push_back({{"kind", name}, {"count", count}, {"rz_per_gate", 2}, {"sx_per_gate", 1}});
        } else if (name.starts_with("MCX")) {
            const std::size_t k = std::stoul(name.substr(3));
            const std::size_t span = std::size_t{1} << (k + 1);
            lowerings.push_back({{"kind", name},
                                 {"count", count},
                                 {"cnot_per_gate", span - 2},
                                 {"rz_per_gate_pre_merge", span + 3},
                                 {"sx_per_gate", 2}});
        }
    }
    doc["lowerings"] = std::move(lowerings);
    if (steps > 0) {
        doc["steps"] = steps;
        doc["per_step_before"] = static_cast<double>(census_total(before)) / static_cast<double>(steps);
        doc["per_step_after"] = static_cast<double>(census_total(after)) / static_cast<double>(steps);
    }
    return doc.dump(2) + "\n";
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading " + path.string());
    }
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &contents) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
        }
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    out << contents;
    if (!out) {
        throw IoError("error writing " + path.string());
    }
}

}  // namespace coinwalk
