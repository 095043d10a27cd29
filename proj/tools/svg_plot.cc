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

#include "svg_plot.h"

#include <algorithm>
#include <cstdio>

namespace coinwalk::cli {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 400;
constexpr double kLeft = 60;
constexpr double kRight = 20;
constexpr double kTop = 40;
constexpr double kBottom = 50;

const char *const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2",
                                "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939", "#8c6d31"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string &s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string header(const std::string &title) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" font-family=\"sans-serif\" font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
           "<text x=\"" + num(kWidth / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) +
           "</text>\n";
}

std::string axes(const std::string &xlabel, const std::string &ylabel) {
    const double x0 = kLeft, y0 = kHeight - kBottom;
    std::string s;
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(y0) + "\" x2=\"" + num(kWidth - kRight) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + num(x0) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x0) + "\" y2=\"" + num(y0) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 10) + "\" text-anchor=\"middle\">" + xlabel +
         "</text>\n";
    s += "<text x=\"15\" y=\"" + num(kHeight / 2) + "\" transform=\"rotate(-90 15 " + num(kHeight / 2) +
         ")\" text-anchor=\"middle\">" + ylabel + "</text>\n";
    for (int i = 0; i <= 4; ++i) {
        const double v = i / 4.0;
        const double y = y0 - v * (y0 - kTop);
        s += "<text x=\"" + num(x0 - 6) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" + num(v) + "</text>\n";
    }
    return s;
}

}  // namespace

std::string fidelity_plot_svg(const std::string &title, const std::vector<PlotSeries> &series) {
    double xmax = 1.0;
    for (const auto &s : series)
        for (const auto &p : s.points) xmax = std::max(xmax, p.x);
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + x / xmax * plot_w; };
    auto py = [&](double y) { return kHeight - kBottom - std::clamp(y, 0.0, 1.0) * plot_h; };

    std::string svg = header(title) + axes("step", "Hellinger fidelity");
    for (std::size_t i = 0; i < series.size(); ++i) {
        const char *color = kPalette[i % std::size(kPalette)];
        std::string path;
        for (const auto &p : series[i].points) {
            path += (path.empty() ? "M" : " L") + num(px(p.x)) + " " + num(py(p.y));
            if (p.err > 0) {
                svg += "<line x1=\"" + num(px(p.x)) + "\" y1=\"" + num(py(p.y - p.err)) + "\" x2=\"" + num(px(p.x)) +
                       "\" y2=\"" + num(py(p.y + p.err)) + "\" stroke=\"" + color + "\"/>\n";
            }
        }
        svg += "<path d=\"" + path + "\" fill=\"none\" stroke=\"" + color + "\"/>\n";
        svg += "<text x=\"" + num(kWidth - kRight - 4) + "\" y=\"" + num(kTop + 14.0 * static_cast<double>(i)) +
               "\" text-anchor=\"end\" fill=\"" + color + "\">" + escape(series[i].label) + "</text>\n";
    }
    return svg + "</svg>\n";
}

std::string distribution_bar_svg(const std::string &title, const Distribution &dist) {
    const std::size_t width = dist.empty() ? 1 : dist.begin()->first.size();
    const std::size_t bars = std::size_t{1} << width;
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    const double bar_w = plot_w / static_cast<double>(bars);
    std::string svg = header(title) + axes("position", "probability");
    for (std::size_t b = 0; b < bars; ++b) {
        const std::string key = to_bitstring(b, width);
        auto it = dist.find(key);
        const double p = it == dist.end() ? 0.0 : it->second;
        const double x = kLeft + bar_w * static_cast<double>(b);
        svg += "<rect x=\"" + num(x + 1) + "\" y=\"" + num(kHeight - kBottom - p * plot_h) + "\" width=\"" +
               num(bar_w - 2) + "\" height=\"" + num(p * plot_h) + "\" fill=\"#1f77b4\"/>\n";
        svg += "<text x=\"" + num(x + bar_w / 2) + "\" y=\"" + num(kHeight - kBottom + 14) +
               "\" text-anchor=\"middle\" font-size=\"9\">" + key + "</text>\n";
    }
    return svg + "</svg>\n";
}

}  // namespace coinwalk::cli
