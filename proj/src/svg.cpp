#include "palettefis/svg.hpp"

#include <algorithm>

#include "palettefis/color.hpp"
#include "palettefis/errors.hpp"
#include "palettefis/report.hpp"

namespace palettefis {

namespace {

constexpr int kWidth = 680;
constexpr double kPlotX0 = 50.0, kPlotX1 = 650.0;
constexpr int kPanelHeight = 170;

const char* term_color(std::size_t i) {
    static const char* colors[] = {"#4363d8", "#e6194b", "#3cb44b",
                                   "#f58231", "#911eb4", "#0b8388"};
    return colors[i % (sizeof colors / sizeof colors[0])];
}

std::string num(double v) { return format_fixed(v, 2); }

// Map a variable value / membership degree into panel pixels.
struct PanelMap {
    double lo, hi, top;
    double x(double v) const {
        return kPlotX0 + (v - lo) / (hi - lo) * (kPlotX1 - kPlotX0);
    }
    double y(double mu) const { return top + 140.0 - mu * 110.0; }
};

void draw_panel(std::string& svg, const LinguisticVariable& var, double top,
                const std::vector<double>* aggregate, double marker,
                bool marker_is_centroid) {
    const PanelMap m{var.lo, var.hi, top};

    svg += "<text x=\"" + num(kPlotX0) + "\" y=\"" + num(top + 18) +
           "\" class=\"title\">" + var.name + "</text>\n";
    // axis
    svg += "<line x1=\"" + num(kPlotX0) + "\" y1=\"" + num(m.y(0)) +
           "\" x2=\"" + num(kPlotX1) + "\" y2=\"" + num(m.y(0)) +
           "\" class=\"axis\"/>\n";
    svg += "<text x=\"" + num(kPlotX0) + "\" y=\"" + num(m.y(0) + 14) +
           "\" class=\"tick\">" + num(var.lo) + "</text>\n";
    svg += "<text x=\"" + num(kPlotX1) + "\" y=\"" + num(m.y(0) + 14) +
           "\" class=\"tick\" text-anchor=\"end\">" + num(var.hi) + "</text>\n";

    for (std::size_t t = 0; t < var.terms.size(); ++t) {
        const FuzzyTerm& term = var.terms[t];
        std::string points;
        constexpr int kSamples = 120;
        for (int i = 0; i <= kSamples; ++i) {
            const double v = var.lo + (var.hi - var.lo) * i / kSamples;
            points += num(m.x(v)) + "," + num(m.y(mf_eval(term.mf, v))) + " ";
        }
        svg += "<polyline points=\"" + points + "\" fill=\"none\" stroke=\"" +
               term_color(t) + "\"/>\n";
        // label near the peak of the term
        const MembershipFunction& mf = term.mf;
        const double peak =
            mf.kind == MfKind::Triangular ? mf.b : (mf.b + mf.c) / 2.0;
        svg += "<text x=\"" + num(m.x(peak)) + "\" y=\"" + num(m.y(1.0) - 6) +
               "\" class=\"term\" text-anchor=\"middle\" fill=\"" +
               term_color(t) + "\">" + term.name + "</text>\n";
    }

    if (aggregate && !aggregate->empty()) {
        std::string points = num(m.x(var.lo)) + "," + num(m.y(0)) + " ";
        const std::size_t n = aggregate->size();
        for (std::size_t i = 0; i < n; ++i) {
            const double v = var.lo + (var.hi - var.lo) *
                                          static_cast<double>(i) /
                                          static_cast<double>(n - 1);
            points += num(m.x(v)) + "," + num(m.y((*aggregate)[i])) + " ";
        }
        points += num(m.x(var.hi)) + "," + num(m.y(0));
        svg += "<polygon points=\"" + points +
               "\" fill=\"#4363d8\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
    }

    const double mx = m.x(std::clamp(marker, var.lo, var.hi));
    svg += "<line x1=\"" + num(mx) + "\" y1=\"" + num(m.y(1.0)) + "\" x2=\"" +
           num(mx) + "\" y2=\"" + num(m.y(0)) + "\" class=\"marker\"/>\n";
    svg += "<text x=\"" + num(mx + 4) + "\" y=\"" + num(m.y(1.0) + 12) +
           "\" class=\"tick\">" +
           std::string(marker_is_centroid ? "crisp " : "") + num(marker) +
           "</text>\n";
}

std::string svg_open(int width, int height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + " " +
           std::to_string(height) + "\">\n" +
           "<style>text{font-family:monospace;font-size:12px}"
           ".title{font-size:14px;font-weight:bold}"
           ".tick{fill:#555}.term{font-size:11px}"
           ".axis{stroke:#333}.marker{stroke:#d62728;stroke-dasharray:4 3}"
           "</style>\n"
           "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

} // namespace

std::string palette_svg(const Palette& palette) {
    if (palette.entries.empty())
        throw InvalidInput("palette_svg: empty palette");
    std::string svg = svg_open(kWidth, 170);
    const double x0 = 40.0, x1 = 640.0, y0 = 30.0, y1 = 110.0;
    double x = x0;
    for (const PaletteEntry& e : palette.entries) {
        const double w = (x1 - x0) * e.weight;
        svg += "<rect x=\"" + num(x) + "\" y=\"" + num(y0) + "\" width=\"" +
               num(w) + "\" height=\"" + num(y1 - y0) + "\" fill=\"" +
               to_hex(e.color) + "\" stroke=\"#333\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(y1 + 16) +
               "\" class=\"tick\">" + to_hex(e.color) + "</text>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(y1 + 32) +
               "\" class=\"tick\">" + num(100.0 * e.weight) + "%</text>\n";
        x += w;
    }
    svg += "</svg>\n";
    return svg;
}

std::string inference_svg(const RuleBase& rulebase,
                          const std::map<std::string, double>& inputs,
                          const InferenceResult& result) {
    const int panels = static_cast<int>(rulebase.inputs.size()) + 1;
    std::string svg = svg_open(kWidth, panels * kPanelHeight + 10);

    double top = 5.0;
    for (const LinguisticVariable& var : rulebase.inputs) {
        const auto it = inputs.find(var.name);
        if (it == inputs.end())
            throw InvalidInput("inference_svg: missing input for '" + var.name +
                               "'");
        draw_panel(svg, var, top, nullptr, it->second, false);
        top += kPanelHeight;
    }
    draw_panel(svg, rulebase.output, top, &result.curve, result.crisp, true);
    svg += "</svg>\n";
    return svg;
}

} // namespace palettefis
