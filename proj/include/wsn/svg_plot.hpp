#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wsn/protocols.hpp"

namespace wsn {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Renders a static SVG line chart (axes, ticks, legend). Long series are
/// stride-downsampled for rendering only.
void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series);

/// Which round-CSV column a plot draws.
enum class RoundMetric { Alive, Dead, PacketsCumulative };

/// Builds a chart purely from previously written round CSVs, one labelled
/// series per file, so the plots carry no information absent from the CSVs.
void plot_rounds_csvs(const std::vector<std::pair<std::string, std::string>>& labelled_csvs,
                      RoundMetric metric, const std::string& title,
                      const std::string& out_path);

}  // namespace wsn
