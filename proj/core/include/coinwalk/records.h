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
#include <filesystem>
#include <optional>
#include <string>

#include "coinwalk/circuit.h"
#include "coinwalk/distribution.h"

namespace coinwalk {

inline constexpr const char *kCountsFormat = "counts/v1";
inline constexpr const char *kDistributionFormat = "distribution/v1";

/// One walk length's worth of results, either sampled counts (counts/v1) or
/// an exact distribution (distribution/v1).
struct StepRecord {
    std::string backend;
    std::size_t nodes = 0;
    std::size_t steps = 0;
    std::optional<Counts> counts;
    Distribution distribution;  // normalized counts when `counts` is set
};

StepRecord make_counts_record(std::string backend, std::size_t nodes, std::size_t steps, Counts counts);
StepRecord make_distribution_record(std::string backend, std::size_t nodes, std::size_t steps,
                                    Distribution dist);

/// Writes counts/v1 when the record holds counts, distribution/v1 otherwise.
std::string serialize(const StepRecord &record);
StepRecord deserialize_step_record(const std::string &text);

/// Census before and after lowering, MCX lowering costs, and per-step totals
/// when `steps` is non-zero.
std::string census_report(const Circuit &source, const Circuit &native, std::size_t steps = 0);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &contents);

}  // namespace coinwalk
