#include "kindex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace kindex {

std::string_view to_string(PanelIndex index) {
  switch (index) {
    case PanelIndex::N: return "N";
    case PanelIndex::C: return "C";
    case PanelIndex::CPerN: return "C/N";
    case PanelIndex::CA: return "CA";
    case PanelIndex::H: return "h";
    case PanelIndex::K: return "K";
  }
  return "?";
}

std::optional<PanelIndex> parse_panel_index(std::string_view name) {
  for (auto index : kPanelIndexes) {
    if (name == to_string(index)) return index;
  }
  if (name == "C_per_N") return PanelIndex::CPerN;
  return std::nullopt;
}

std::optional<double> index_value(const PanelRow& row, PanelIndex index) {
  auto as_double = [](const std::optional<std::int64_t>& v) -> std::optional<double> {
    if (v) return static_cast<double>(*v);
    return std::nullopt;
  };
  switch (index) {
    case PanelIndex::N: return as_double(row.n);
    case PanelIndex::C: return as_double(row.c);
    case PanelIndex::CPerN: return row.c_per_n();
    case PanelIndex::CA: return as_double(row.ca);
    case PanelIndex::H: return as_double(row.h);
    case PanelIndex::K: return as_double(row.k);
  }
  return std::nullopt;
}

RankedPanel rank_panel(std::span<const PanelRow> rows, PanelIndex index) {
  if (rows.empty()) throw std::invalid_argument("cannot rank an empty panel");
  RankedPanel ranked{index, {rows.begin(), rows.end()}};
  std::stable_sort(ranked.rows.begin(), ranked.rows.end(), [index](const PanelRow& a, const PanelRow& b) {
    auto va = index_value(a, index);
    auto vb = index_value(b, index);
    if (va.has_value() != vb.has_value()) return va.has_value();
    if (va && *va != *vb) return *va > *vb;
    return a.name < b.name;
  });
  return ranked;
}

PrizeCurve prize_curve(const RankedPanel& panel) {
  PrizeCurve curve;
  curve.cumulative.reserve(panel.rows.size());
  for (const auto& row : panel.rows) {
    if (row.laureate) ++curve.laureates;
    curve.cumulative.push_back(curve.laureates);
    curve.area += curve.laureates;
  }
  const auto total = static_cast<std::int64_t>(panel.rows.size());
  const std::int64_t laureates = curve.laureates;
  // Perfect ranking: n(r) = min(r, L).
  const std::int64_t best = laureates * (laureates + 1) / 2 + laureates * (total - laureates);
  curve.auc = best == 0 ? 0.0 : static_cast<double>(curve.area) / static_cast<double>(best);
  return curve;
}

namespace {

void check_pairs(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("series lengths differ");
  if (xs.size() < 2) throw std::invalid_argument("need at least two points");
}

double mean_of(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

}  // namespace

double pearson(std::span<const double> xs, std::span<const double> ys) {
  check_pairs(xs, ys);
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("zero variance");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys) {
  check_pairs(xs, ys);
  const double mx = mean_of(xs);
  const double my = mean_of(ys);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("degenerate fit: all x values equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

Dispersion coefficient_of_variation(std::span<const double> values) {
  if (values.size() < 2) throw std::invalid_argument("need at least two values");
  Dispersion d;
  d.mean = mean_of(values);
  if (d.mean == 0.0) throw std::invalid_argument("coefficient of variation undefined for zero mean");
  double ss = 0.0;
  for (double v : values) ss += (v - d.mean) * (v - d.mean);
  d.sd = std::sqrt(ss / static_cast<double>(values.size() - 1));
  d.cv = d.sd / d.mean;
  return d;
}

double cv_from_summary(double mean, double sd) {
  if (mean == 0.0) throw std::invalid_argument("coefficient of variation undefined for zero mean");
  return sd / mean;
}

FraudIndicators fraud_indicators(std::int64_t k, std::optional<std::int64_t> k_no_self, std::optional<std::int64_t> h,
                                 std::optional<std::int64_t> n) {
  FraudIndicators f;
  const auto kd = static_cast<double>(k);
  if (h && *h > 0) f.k_over_h = kd / static_cast<double>(*h);
  if (n && *n > 0) f.k_over_n = kd / static_cast<double>(*n);
  if (k_no_self && *k_no_self > 0) f.delta = (kd - static_cast<double>(*k_no_self)) / static_cast<double>(*k_no_self);
  return f;
}

FraudIndicators fraud_indicators(const PanelRow& row) {
  if (!row.k) return {};
  return fraud_indicators(*row.k, row.k_no_self, row.h, row.n);
}

FraudIndicators fraud_indicators(const IndexReport& r) { return fraud_indicators(r.k, r.k_no_self, r.h, r.n_papers); }

std::string_view to_string(Quadrant q) {
  switch (q) {
    case Quadrant::TruePositive: return "true_positive";
    case Quadrant::TrueNegative: return "true_negative";
    case Quadrant::FalseNegative: return "false_negative";
    case Quadrant::FalsePositive: return "false_positive";
  }
  return "?";
}

QuadrantLabel classify_quadrant(std::int64_t h, std::int64_t k, double h_threshold, double k_threshold) {
  if (!(h_threshold > 0.0) || !(k_threshold > 0.0)) throw std::invalid_argument("thresholds must be positive");
  const bool high_h = static_cast<double>(h) >= h_threshold;
  const bool high_k = static_cast<double>(k) >= k_threshold;
  Quadrant q;
  if (high_h) {
    q = high_k ? Quadrant::TruePositive : Quadrant::FalsePositive;
  } else {
    q = high_k ? Quadrant::FalseNegative : Quadrant::TrueNegative;
  }
  return {q, h_threshold, k_threshold};
}

QuadrantLabel classify_quadrant(const PanelRow& row, double h_threshold, double k_threshold) {
  if (!row.h || !row.k) throw std::invalid_argument("row '" + row.name + "' lacks h or K");
  return classify_quadrant(*row.h, *row.k, h_threshold, k_threshold);
}

namespace {

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  return v.size() % 2 ? v[mid] : 0.5 * (v[mid - 1] + v[mid]);
}

}  // namespace

Thresholds median_thresholds(std::span<const PanelRow> rows) {
  std::vector<double> hs, ks;
  for (const auto& r : rows) {
    if (r.h) hs.push_back(static_cast<double>(*r.h));
    if (r.k) ks.push_back(static_cast<double>(*r.k));
  }
  if (hs.empty() || ks.empty()) throw std::invalid_argument("panel has no h or K values");
  return {median(std::move(hs)), median(std::move(ks))};
}

double round_to(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  return std::round(value * scale) / scale;
}

}  // namespace kindex
