#include "kindex/plot.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <vector>

#include <fmt/format.h>

namespace kindex {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b"};

std::string escape_xml(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(ch);
    }
  }
  return out;
}

// "--" may not appear inside an XML comment.
std::string comment_safe(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '-' && !out.empty() && out.back() == '-') out.push_back(' ');
    out.push_back(ch);
  }
  return out;
}

/// Rounds up to 1, 2 or 5 times a power of ten.
double nice_ceiling(double value) {
  if (value <= 0.0) return 1.0;
  const double magnitude = std::pow(10.0, std::floor(std::log10(value)));
  for (double step : {1.0, 2.0, 5.0, 10.0}) {
    if (step * magnitude >= value) return step * magnitude;
  }
  return 10.0 * magnitude;
}

struct Axis {
  double max;
  double pixels_from;
  double pixels_to;

  double operator()(double v) const { return pixels_from + (pixels_to - pixels_from) * (v / max); }
};

class Svg {
 public:
  Svg() {
    body_ += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0:.0f}\" height=\"{1:.0f}\" viewBox=\"0 0 {0:.0f} {1:.0f}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        kWidth, kHeight);
    body_ += fmt::format("<rect x=\"0\" y=\"0\" width=\"{:.0f}\" height=\"{:.0f}\" fill=\"white\"/>\n", kWidth, kHeight);
  }

  void comment(std::string_view text) { body_ += "<!--\n" + comment_safe(text) + "-->\n"; }
  void raw(std::string_view text) { body_ += text; }

  void line(double x1, double y1, double x2, double y2, std::string_view stroke, std::string_view extra = {}) {
    body_ += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"{}\"{}{}/>\n", x1, y1,
                         x2, y2, stroke, extra.empty() ? "" : " ", extra);
  }

  void text(double x, double y, std::string_view content, std::string_view anchor = "start",
            std::string_view extra = {}) {
    body_ += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"{}\"{}{}>{}</text>\n", x, y, anchor,
                         extra.empty() ? "" : " ", extra, escape_xml(content));
  }

  void axes(const Axis& x, const Axis& y, std::string_view x_label, std::string_view y_label) {
    line(kLeft, kHeight - kBottom, kWidth - kRight, kHeight - kBottom, "black");
    line(kLeft, kTop, kLeft, kHeight - kBottom, "black");
    for (int i = 0; i <= 5; ++i) {
      const double xv = x.max * i / 5.0;
      const double yv = y.max * i / 5.0;
      line(x(xv), kHeight - kBottom, x(xv), kHeight - kBottom + 5, "black");
      text(x(xv), kHeight - kBottom + 18, fmt::format("{:g}", xv), "middle");
      line(kLeft - 5, y(yv), kLeft, y(yv), "black");
      text(kLeft - 8, y(yv) + 4, fmt::format("{:g}", yv), "end");
    }
    text((kLeft + kWidth - kRight) / 2, kHeight - 15, x_label, "middle");
    text(18, (kTop + kHeight - kBottom) / 2, y_label, "middle",
         fmt::format("transform=\"rotate(-90 18 {:.2f})\"", (kTop + kHeight - kBottom) / 2));
  }

  std::string finish() && { return std::move(body_) + "</svg>\n"; }

 private:
  std::string body_;
};

}  // namespace

std::string plot_k_h_plane(std::span<const PanelRow> rows, Thresholds thresholds) {
  std::vector<const PanelRow*> plotted;
  for (const auto& r : rows) {
    if (r.h && r.k) plotted.push_back(&r);
  }

  double h_max = thresholds.h, k_max = thresholds.k;
  for (const auto* r : plotted) {
    h_max = std::max(h_max, static_cast<double>(*r->h));
    k_max = std::max(k_max, static_cast<double>(*r->k));
  }
  const Axis x{nice_ceiling(h_max * 1.05), kLeft, kWidth - kRight};
  const Axis y{nice_ceiling(k_max * 1.05), kHeight - kBottom, kTop};

  Svg svg;
  std::string data = "name,h,k,laureate,quadrant\n";
  for (const auto* r : plotted) {
    auto label = classify_quadrant(*r, thresholds.h, thresholds.k);
    data += fmt::format("{},{},{},{},{}\n", r->name, *r->h, *r->k, r->laureate, to_string(label.quadrant));
  }
  svg.comment(data);
  svg.text(kWidth / 2, 22, "K versus h", "middle", "font-size=\"15\"");
  svg.axes(x, y, "h-index", "K-index");

  svg.line(x(thresholds.h), y(0), x(thresholds.h), y(y.max), "#888888", "stroke-dasharray=\"4 4\" class=\"threshold\"");
  svg.line(x(0), y(thresholds.k), x(x.max), y(thresholds.k), "#888888", "stroke-dasharray=\"4 4\" class=\"threshold\"");

  for (bool laureate : {true, false}) {
    std::vector<double> hs, ks;
    for (const auto* r : plotted) {
      if (r->laureate == laureate) {
        hs.push_back(static_cast<double>(*r->h));
        ks.push_back(static_cast<double>(*r->k));
      }
    }
    if (hs.size() < 2 || std::all_of(hs.begin(), hs.end(), [&](double v) { return v == hs.front(); })) continue;
    auto fit = linear_fit(hs, ks);
    auto [lo, hi] = std::minmax_element(hs.begin(), hs.end());
    const char* colour = laureate ? "#d62728" : "#1f77b4";
    svg.comment(fmt::format("fit {}: slope={:.6f} intercept={:.6f}\n", laureate ? "laureate" : "non_laureate",
                            fit.slope, fit.intercept));
    svg.line(x(*lo), y(fit(*lo)), x(*hi), y(fit(*hi)), colour, "stroke-width=\"1.5\" class=\"fit\"");
  }

  for (const auto* r : plotted) {
    const double px = x(static_cast<double>(*r->h));
    const double py = y(static_cast<double>(*r->k));
    const auto title = escape_xml(fmt::format("{} (h={}, K={})", r->name, *r->h, *r->k));
    if (r->laureate) {
      svg.raw(fmt::format(
          "<circle class=\"marker laureate\" cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"5\" fill=\"#d62728\"><title>{}</title></circle>\n",
          px, py, title));
    } else {
      svg.raw(fmt::format(
          "<rect class=\"marker\" x=\"{:.2f}\" y=\"{:.2f}\" width=\"9\" height=\"9\" fill=\"#1f77b4\"><title>{}</title></rect>\n",
          px - 4.5, py - 4.5, title));
    }
    svg.text(px + 7, py - 6, r->name, "start", "font-size=\"9\"");
  }

  svg.text(kWidth - kRight - 150, kTop + 14, "circle: laureate", "start");
  svg.text(kWidth - kRight - 150, kTop + 30, "square: non-laureate", "start");
  return std::move(svg).finish();
}

std::string plot_prize_curves(std::span<const std::pair<PanelIndex, PrizeCurve>> curves) {
  std::size_t ranks = 0;
  std::int64_t laureates = 0;
  for (const auto& [index, curve] : curves) {
    ranks = std::max(ranks, curve.cumulative.size());
    laureates = std::max(laureates, curve.laureates);
  }
  const Axis x{nice_ceiling(static_cast<double>(std::max<std::size_t>(ranks, 1))), kLeft, kWidth - kRight};
  const Axis y{nice_ceiling(static_cast<double>(std::max<std::int64_t>(laureates, 1))), kHeight - kBottom, kTop};

  Svg svg;
  std::string data = "index,auc,n_r\n";
  for (const auto& [index, curve] : curves) {
    data += fmt::format("{},{:.6f},{}\n", to_string(index), curve.auc, fmt::join(curve.cumulative, ";"));
  }
  svg.comment(data);
  svg.text(kWidth / 2, 22, "Cumulative laureates n(r)", "middle", "font-size=\"15\"");
  svg.axes(x, y, "rank r", "n(r)");

  std::size_t colour = 0;
  for (const auto& [index, curve] : curves) {
    std::string points = fmt::format("{:.2f},{:.2f}", x(0), y(0));
    double previous = 0.0;
    for (std::size_t r = 1; r <= curve.cumulative.size(); ++r) {
      const double value = static_cast<double>(curve.cumulative[r - 1]);
      points += fmt::format(" {:.2f},{:.2f} {:.2f},{:.2f}", x(static_cast<double>(r)), y(previous),
                            x(static_cast<double>(r)), y(value));
      previous = value;
    }
    const char* stroke = kPalette[colour % std::size(kPalette)];
    svg.raw(fmt::format("<polyline class=\"curve\" fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"{}\"/>\n",
                        stroke, points));
    const double ly = kTop + 14 + 16.0 * static_cast<double>(colour);
    svg.line(kLeft + 12, ly - 4, kLeft + 32, ly - 4, stroke, "stroke-width=\"2\"");
    svg.text(kLeft + 38, ly, fmt::format("{} (AUC {:.2f})", to_string(index), curve.auc));
    ++colour;
  }
  return std::move(svg).finish();
}

}  // namespace kindex
