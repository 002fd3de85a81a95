#include "fuzzmat/chart.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "fuzzmat/errors.hpp"

namespace fuzzmat {

namespace {

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fixed2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

}  // namespace

std::string text_bar_chart(const std::vector<double>& values,
                           const std::vector<std::string>& labels) {
    if (values.size() != labels.size())
        throw engine_error("chart: " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(values.size()) + " values");
    constexpr int kHalf = 24;
    double maxabs = 0.0;
    std::size_t width = 0;
    for (double v : values) maxabs = std::max(maxabs, std::abs(v));
    for (const auto& l : labels) width = std::max(width, l.size());

    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const int len =
            maxabs == 0.0
                ? 0
                : static_cast<int>(std::lround(std::abs(values[i]) / maxabs * kHalf));
        std::string neg(kHalf, ' '), pos(kHalf, ' ');
        if (values[i] < 0)
            for (int k = 0; k < len; ++k) neg[kHalf - 1 - k] = '#';
        else
            for (int k = 0; k < len; ++k) pos[k] = '#';
        out << "  " << labels[i] << std::string(width - labels[i].size(), ' ') << "  " << neg
            << '|' << pos << "  " << num(values[i]) << '\n';
    }
    return out.str();
}

std::string svg_bar_chart(const std::vector<double>& values,
                          const std::vector<std::string>& labels, const std::string& title) {
    if (values.size() != labels.size())
        throw engine_error("chart: " + std::to_string(labels.size()) + " labels for " +
                           std::to_string(values.size()) + " values");
    const double lo = std::min(0.0, *std::min_element(values.begin(), values.end()));
    const double hi = std::max(0.0, *std::max_element(values.begin(), values.end()));
    const double span = hi - lo == 0.0 ? 1.0 : hi - lo;

    constexpr double kBarW = 44.0, kGap = 14.0, kPlotH = 240.0;
    constexpr double kLeft = 54.0, kTop = 34.0, kBottom = 46.0;
    const double plot_w = values.size() * (kBarW + kGap) + kGap;
    const double width = kLeft + plot_w + 16.0;
    const double height = kTop + kPlotH + kBottom;

    auto ypos = [&](double v) { return kTop + (hi - v) / span * kPlotH; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(width)
        << "\" height=\"" << fixed2(height) << "\" viewBox=\"0 0 " << fixed2(width) << " "
        << fixed2(height) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << fixed2(width / 2) << "\" y=\"20\" text-anchor=\"middle\" "
           "font-family=\"monospace\" font-size=\"13\">"
        << title << "</text>\n";

    const double y0 = ypos(0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = kLeft + kGap + i * (kBarW + kGap);
        const double yv = ypos(values[i]);
        const double top = std::min(y0, yv);
        const double h = std::abs(y0 - yv);
        out << "<rect x=\"" << fixed2(x) << "\" y=\"" << fixed2(top) << "\" width=\""
            << fixed2(kBarW) << "\" height=\"" << fixed2(h) << "\" fill=\""
            << (values[i] < 0 ? "#b5543b" : "#4878a8") << "\"/>\n";
        out << "<text x=\"" << fixed2(x + kBarW / 2) << "\" y=\""
            << fixed2(values[i] < 0 ? yv + 14.0 : yv - 5.0)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">"
            << num(values[i]) << "</text>\n";
        out << "<text x=\"" << fixed2(x + kBarW / 2) << "\" y=\"" << fixed2(kTop + kPlotH + 18.0)
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" << labels[i]
            << "</text>\n";
    }
    // zero baseline over the bars
    out << "<line x1=\"" << fixed2(kLeft) << "\" y1=\"" << fixed2(y0) << "\" x2=\""
        << fixed2(kLeft + plot_w) << "\" y2=\"" << fixed2(y0)
        << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    out << "<text x=\"" << fixed2(kLeft - 6) << "\" y=\"" << fixed2(y0 + 4)
        << "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">0</text>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace fuzzmat
