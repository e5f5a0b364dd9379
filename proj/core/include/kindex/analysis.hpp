#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kindex/corpus.hpp"
#include "kindex/indexes.hpp"

namespace kindex {

enum class PanelIndex { N, C, CPerN, CA, H, K };

inline constexpr std::array<PanelIndex, 6> kPanelIndexes{PanelIndex::N,  PanelIndex::C, PanelIndex::CPerN,
                                                         PanelIndex::CA, PanelIndex::H, PanelIndex::K};

/// "N", "C", "C/N", "CA", "h", "K".
std::string_view to_string(PanelIndex index);
/// Accepts the names above plus "C_per_N", case-sensitive.
std::optional<PanelIndex> parse_panel_index(std::string_view name);

/// The row's value for `index`, empty when unknown.
std::optional<double> index_value(const PanelRow& row, PanelIndex index);

struct RankedPanel {
  PanelIndex index = PanelIndex::K;
  std::vector<PanelRow> rows;
};

/// Orders rows by `index` descending, ties by name ascending. Rows whose value
/// is unknown go last (by name). Throws std::invalid_argument on an empty panel.
RankedPanel rank_panel(std::span<const PanelRow> rows, PanelIndex index);

/// Cumulative laureate count n(r) down a ranking.
struct PrizeCurve {
  std::vector<std::int64_t> cumulative;  ///< cumulative[r - 1] = n(r)
  std::int64_t laureates = 0;
  /// Discrete area sum_r n(r).
  std::int64_t area = 0;
  /// Area divided by the area of a perfect ranking (every laureate first):
  /// 1 exactly for a perfect ranking, 0 when there are no laureates.
  double auc = 0.0;
};

PrizeCurve prize_curve(const RankedPanel& panel);

/// Pearson product-moment correlation. Throws std::invalid_argument on a length
/// mismatch, fewer than two points, or zero variance in either series.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;

  double operator()(double x) const { return slope * x + intercept; }
};

/// Ordinary least squares y = slope * x + intercept. Throws std::invalid_argument
/// for fewer than two points, mismatched lengths, or constant xs.
LinearFit linear_fit(std::span<const double> xs, std::span<const double> ys);

struct Dispersion {
  double mean = 0.0;
  double sd = 0.0;  ///< sample standard deviation (n - 1)
  double cv = 0.0;  ///< sd / mean
};

/// Throws std::invalid_argument for fewer than two values or a zero mean.
Dispersion coefficient_of_variation(std::span<const double> values);
/// CV from already summarized statistics. Throws std::invalid_argument on a zero mean.
double cv_from_summary(double mean, double sd);

/// Screening ratios; a ratio is empty when its denominator is unknown or zero.
struct FraudIndicators {
  std::optional<double> k_over_h;
  std::optional<double> k_over_n;
  std::optional<double> delta;  ///< (K - K') / K'
};

FraudIndicators fraud_indicators(std::int64_t k, std::optional<std::int64_t> k_no_self, std::optional<std::int64_t> h,
                                 std::optional<std::int64_t> n);
/// Empty indicators when the row has no K.
FraudIndicators fraud_indicators(const PanelRow& row);
FraudIndicators fraud_indicators(const IndexReport& report);

enum class Quadrant { TruePositive, TrueNegative, FalseNegative, FalsePositive };

std::string_view to_string(Quadrant q);

struct QuadrantLabel {
  Quadrant quadrant = Quadrant::TrueNegative;
  double h_threshold = 0.0;
  double k_threshold = 0.0;
};

/// High means >= threshold. Throws std::invalid_argument for a non-positive threshold.
QuadrantLabel classify_quadrant(std::int64_t h, std::int64_t k, double h_threshold, double k_threshold);
/// Throws std::invalid_argument when the row lacks h or K.
QuadrantLabel classify_quadrant(const PanelRow& row, double h_threshold, double k_threshold);

struct Thresholds {
  double h = 0.0;
  double k = 0.0;
};

/// Medians of the known h and K values. Throws std::invalid_argument when either is absent.
Thresholds median_thresholds(std::span<const PanelRow> rows);

/// Round half away from zero to `decimals` places.
double round_to(double value, int decimals);

}  // namespace kindex
