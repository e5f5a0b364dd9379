#pragma once

#include <span>
#include <string>
#include <utility>

#include "kindex/analysis.hpp"

namespace kindex {

/// K versus h scatter: circles for laureates, squares otherwise, one element
/// with class "marker" per row that has both h and K. Draws the least-squares
/// line of each group (when it has two or more distinct h values) and the
/// quadrant thresholds. The plotted rows are embedded as a CSV comment.
std::string plot_k_h_plane(std::span<const PanelRow> rows, Thresholds thresholds);

/// Step plot of n(r) for several rankings, with the normalized AUC of each in
/// the legend. Curve data is embedded as a CSV comment.
std::string plot_prize_curves(std::span<const std::pair<PanelIndex, PrizeCurve>> curves);

}  // namespace kindex
