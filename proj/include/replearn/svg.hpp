#pragma once

#include <span>
#include <string>
#include <vector>

#include "replearn/evaluation.hpp"
#include "replearn/experiments.hpp"

namespace replearn {

/// Heatmap of mean generalisation error over the (n, m) grid, m along x
/// and n along y. The color scale is fixed to [0, 0.25] so surfaces from
/// different runs are comparable; cells with no usable records are drawn
/// gray. Self-contained, deterministic output.
std::string svg_heatmap(std::span<const SummaryCell> summary);

/// Scatter of 2-D representation outputs over the unit square, one
/// marker shape per ones-count category.
std::string svg_scatter(std::span<const ScatterPoint> scatter);

}  // namespace replearn
