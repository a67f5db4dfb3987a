#include "wsn/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "wsn/csv_io.hpp"

namespace wsn {

namespace {

constexpr double kWidth = 880.0;
constexpr double kHeight = 540.0;
constexpr double kMarginLeft = 90.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 50.0;
constexpr double kMarginBottom = 60.0;
constexpr std::size_t kMaxRenderPoints = 2000;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf"};

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

/// Round a tick step to 1/2/5 times a power of ten.
double nice_step(double span, int target_ticks) {
    if (span <= 0.0) return 1.0;
    const double raw = span / target_ticks;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double norm = raw / mag;
    double step = 10.0;
    if (norm <= 1.0) step = 1.0;
    else if (norm <= 2.0) step = 2.0;
    else if (norm <= 5.0) step = 5.0;
    return step * mag;
}

}  // namespace

void write_line_chart_svg(const std::string& path, const std::string& title,
                          const std::string& x_label, const std::string& y_label,
                          const std::vector<PlotSeries>& series) {
    double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
    bool have_data = false;
    for (const PlotSeries& s : series)
        for (const auto& [x, y] : s.points) {
            if (!have_data) {
                x_min = x_max = x;
                y_min = y_max = y;
                have_data = true;
            }
            x_min = std::min(x_min, x);
            x_max = std::max(x_max, x);
            y_min = std::min(y_min, y);
            y_max = std::max(y_max, y);
        }
    if (x_max == x_min) x_max = x_min + 1.0;
    if (y_max == y_min) y_max = y_min + 1.0;
    y_min = std::min(y_min, 0.0);  // anchor counts at zero

    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double x) { return kMarginLeft + (x - x_min) / (x_max - x_min) * plot_w; };
    auto sy = [&](double y) {
        return kHeight - kMarginBottom - (y - y_min) / (y_max - y_min) * plot_h;
    };

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"17\">" << title << "</text>\n";

    // Gridlines and tick labels.
    const double x_step = nice_step(x_max - x_min, 8);
    const double y_step = nice_step(y_max - y_min, 6);
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    for (double x = std::ceil(x_min / x_step) * x_step; x <= x_max + 1e-9; x += x_step) {
        out << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(sy(y_min)) << "\" x2=\""
            << num(sx(x)) << "\" y2=\"" << num(sy(y_max))
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(kHeight - kMarginBottom + 18)
            << "\" text-anchor=\"middle\">" << num(x) << "</text>\n";
    }
    for (double y = std::ceil(y_min / y_step) * y_step; y <= y_max + 1e-9; y += y_step) {
        out << "<line x1=\"" << num(sx(x_min)) << "\" y1=\"" << num(sy(y)) << "\" x2=\""
            << num(sx(x_max)) << "\" y2=\"" << num(sy(y))
            << "\" stroke=\"#ddd\" stroke-width=\"1\"/>\n";
        out << "<text x=\"" << num(kMarginLeft - 8) << "\" y=\"" << num(sy(y) + 4)
            << "\" text-anchor=\"end\">" << num(y) << "</text>\n";
    }
    out << "</g>\n";

    // Axes.
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom
        << "\" x2=\"" << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\""
        << kMarginLeft << "\" y2=\"" << kHeight - kMarginBottom
        << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << x_label << "</text>\n";
    out << "<text x=\"20\" y=\"" << kHeight / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "transform=\"rotate(-90 20 " << kHeight / 2 << ")\">" << y_label
        << "</text>\n";

    // Series.
    for (std::size_t i = 0; i < series.size(); ++i) {
        const PlotSeries& s = series[i];
        if (s.points.empty()) continue;
        const std::size_t stride =
            std::max<std::size_t>(1, s.points.size() / kMaxRenderPoints);
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[i % std::size(kPalette)] << "\" stroke-width=\"1.8\" points=\"";
        for (std::size_t k = 0; k < s.points.size(); k += stride)
            out << num(sx(s.points[k].first)) << ',' << num(sy(s.points[k].second)) << ' ';
        // Always include the final point.
        out << num(sx(s.points.back().first)) << ',' << num(sy(s.points.back().second));
        out << "\"/>\n";
    }

    // Legend.
    const double legend_x = kWidth - kMarginRight - 130.0;
    double legend_y = kMarginTop + 10.0;
    for (std::size_t i = 0; i < series.size(); ++i) {
        out << "<line x1=\"" << legend_x << "\" y1=\"" << legend_y << "\" x2=\""
            << legend_x + 26 << "\" y2=\"" << legend_y << "\" stroke=\""
            << kPalette[i % std::size(kPalette)] << "\" stroke-width=\"2.5\"/>\n";
        out << "<text x=\"" << legend_x + 32 << "\" y=\"" << legend_y + 4
            << "\" font-family=\"sans-serif\" font-size=\"13\">" << series[i].label
            << "</text>\n";
        legend_y += 20.0;
    }

    out << "</svg>\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

void plot_rounds_csvs(const std::vector<std::pair<std::string, std::string>>& labelled_csvs,
                      RoundMetric metric, const std::string& title,
                      const std::string& out_path) {
    std::vector<PlotSeries> series;
    for (const auto& [label, csv_path] : labelled_csvs) {
        PlotSeries s;
        s.label = label;
        for (const RoundRecord& r : read_rounds_csv(csv_path)) {
            double y = 0.0;
            switch (metric) {
                case RoundMetric::Alive: y = r.alive; break;
                case RoundMetric::Dead: y = r.dead; break;
                case RoundMetric::PacketsCumulative:
                    y = static_cast<double>(r.packets_cum);
                    break;
            }
            s.points.emplace_back(r.round, y);
        }
        series.push_back(std::move(s));
    }

    const char* y_label = metric == RoundMetric::Alive ? "alive nodes"
                          : metric == RoundMetric::Dead ? "dead nodes"
                                                        : "packets to BS (cumulative)";
    write_line_chart_svg(out_path, title, "round", y_label, series);
}

}  // namespace wsn
