#include "lgm/plot.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "lgm/errors.hpp"

namespace lgm {

namespace {

constexpr double kPanelSize = 260.0;
constexpr double kMarginLeft = 48.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 34.0;
constexpr double kPanelGap = 30.0;

const char* const kPalette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#e377c2",
};
constexpr int kPaletteSize = (int)(sizeof(kPalette) / sizeof(kPalette[0]));

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.2f", x);
    return buf;
}

std::string tick(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

struct Range {
    double lo = -1.0;
    double hi = 1.0;

    double map(double v, double span) const {
        return (v - lo) / (hi - lo) * span;
    }
};

// Covers the values and the origin, padded so points stay clear of the
// panel border.
Range span_of(const std::vector<double>& values) {
    Range r{0.0, 0.0};
    for (double v : values) {
        r.lo = std::min(r.lo, v);
        r.hi = std::max(r.hi, v);
    }
    double pad = 0.12 * (r.hi - r.lo);
    if (pad == 0.0) pad = 1.0;
    return {r.lo - pad, r.hi + pad};
}

}  // namespace

std::string critset_svg(const CritSet& cs,
                        const std::vector<std::string>& labels) {
    size_t count = cs.points.size();
    if (!labels.empty() && labels.size() != count)
        throw Error("label count does not match point count");

    int dim = count == 0 ? 0 : (int)cs.points[0].coords.size();
    double width = kMarginLeft +
                   std::max(1, dim) * (kPanelSize + kPanelGap) - kPanelGap +
                   kMarginLeft;
    double height = kMarginTop + kPanelSize + kMarginBottom;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width)
        << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width)
        << " " << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    if (count == 0) {
        svg << "<text x=\"" << num(width / 2) << "\" y=\"" << num(height / 2)
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
               "font-size=\"13\" fill=\"#444444\">no critical points</text>\n";
        svg << "</svg>\n";
        return svg.str();
    }

    for (int c = 0; c < dim; ++c) {
        double x0 = kMarginLeft + c * (kPanelSize + kPanelGap);
        double y0 = kMarginTop;

        std::vector<double> res, ims;
        for (const auto& p : cs.points) {
            res.push_back(p.coords[c].real());
            ims.push_back(p.coords[c].imag());
        }
        Range rx = span_of(res);
        Range ry = span_of(ims);

        auto px = [&](double re) { return x0 + rx.map(re, kPanelSize); };
        auto py = [&](double im) {
            return y0 + kPanelSize - ry.map(im, kPanelSize);
        };

        svg << "<g font-family=\"sans-serif\">\n";
        svg << "<rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\""
            << num(kPanelSize) << "\" height=\"" << num(kPanelSize)
            << "\" fill=\"none\" stroke=\"#888888\"/>\n";
        svg << "<text x=\"" << num(x0 + kPanelSize / 2) << "\" y=\""
            << num(y0 - 12) << "\" text-anchor=\"middle\" font-size=\"14\" "
               "fill=\"#111111\">z" << (c + 1) << "</text>\n";

        // Axes through the origin; span_of always brackets 0.
        svg << "<line x1=\"" << num(px(0)) << "\" y1=\"" << num(y0)
            << "\" x2=\"" << num(px(0)) << "\" y2=\"" << num(y0 + kPanelSize)
            << "\" stroke=\"#cccccc\"/>\n";
        svg << "<line x1=\"" << num(x0) << "\" y1=\"" << num(py(0))
            << "\" x2=\"" << num(x0 + kPanelSize) << "\" y2=\""
            << num(py(0)) << "\" stroke=\"#cccccc\"/>\n";
        svg << "<text x=\"" << num(x0 + kPanelSize - 4) << "\" y=\""
            << num(py(0) - 5) << "\" text-anchor=\"end\" font-size=\"11\" "
               "fill=\"#555555\">Re</text>\n";
        svg << "<text x=\"" << num(px(0) + 5) << "\" y=\"" << num(y0 + 12)
            << "\" font-size=\"11\" fill=\"#555555\">Im</text>\n";

        svg << "<text x=\"" << num(x0) << "\" y=\""
            << num(y0 + kPanelSize + 16)
            << "\" font-size=\"10\" fill=\"#555555\">" << tick(rx.lo)
            << "</text>\n";
        svg << "<text x=\"" << num(x0 + kPanelSize) << "\" y=\""
            << num(y0 + kPanelSize + 16)
            << "\" text-anchor=\"end\" font-size=\"10\" fill=\"#555555\">"
            << tick(rx.hi) << "</text>\n";
        svg << "<text x=\"" << num(x0 - 4) << "\" y=\""
            << num(y0 + kPanelSize)
            << "\" text-anchor=\"end\" font-size=\"10\" fill=\"#555555\">"
            << tick(ry.lo) << "</text>\n";
        svg << "<text x=\"" << num(x0 - 4) << "\" y=\"" << num(y0 + 10)
            << "\" text-anchor=\"end\" font-size=\"10\" fill=\"#555555\">"
            << tick(ry.hi) << "</text>\n";

        for (size_t i = 0; i < count; ++i) {
            const char* color = kPalette[i % kPaletteSize];
            double x = px(cs.points[i].coords[c].real());
            double y = py(cs.points[i].coords[c].imag());
            svg << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
                << "\" r=\"4\" fill=\"" << color
                << "\" stroke=\"#333333\"/>\n";
            std::string label =
                labels.empty() ? std::to_string(i) : xml_escape(labels[i]);
            svg << "<text x=\"" << num(x + 6) << "\" y=\"" << num(y - 6)
                << "\" font-size=\"11\" fill=\"#111111\">" << label
                << "</text>\n";
        }
        svg << "</g>\n";
    }

    svg << "</svg>\n";
    return svg.str();
}

}  // namespace lgm
