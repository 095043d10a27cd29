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

#include <string>
#include <vector>

#include "coinwalk/distribution.h"

namespace coinwalk::cli {

struct PlotPoint {
    double x = 0.0;
    double y = 0.0;
    double err = 0.0;
};

struct PlotSeries {
    std::string label;
    std::vector<PlotPoint> points;
};

/// Fidelity-vs-step curves with error bars; y axis fixed to [0, 1].
std::string fidelity_plot_svg(const std::string &title, const std::vector<PlotSeries> &series);

/// Bar chart over every bitstring of the distribution's width.
std::string distribution_bar_svg(const std::string &title, const Distribution &dist);

}  // namespace coinwalk::cli
