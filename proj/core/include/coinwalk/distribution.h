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

#include <cstdint>
#include <map>
#include <string>

namespace coinwalk {

/// Outcome bitstring (MSB first) to probability. Absent keys have probability 0.
using Distribution = std::map<std::string, double>;

/// Outcome bitstring to number of observations.
struct Counts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;

    bool operator==(const Counts &other) const = default;
};

/// Throws ValidationError unless every key has the same length and only 0/1
/// characters, every probability is non-negative, and they sum to 1 within
/// `tolerance`.
void validate_distribution(const Distribution &dist, double tolerance = 1e-9);

/// Throws ValidationError unless the tallies sum to `shots` and keys are
/// equal-length bitstrings.
void validate_counts(const Counts &counts);

std::string to_bitstring(std::uint64_t value, std::size_t width);

}  // namespace coinwalk
