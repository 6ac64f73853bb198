#pragma once

#include <string>
#include <vector>

namespace lpq {

/// A single plotted curve. Rendering is fully deterministic: fixed viewport,
/// fixed palette, value-derived coordinates only.
struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  std::string color = "#1f4e9c";
  bool dashed = false;
};

/// Two panels: the original function against x, and the decreasing
/// rearrangement profile (f* and f**) against t.
std::string render_rearrangement_figure(const std::vector<Series>& original_panel,
                                        const std::vector<Series>& profile_panel);

/// Unit square of inverse exponents with the two endpoint markers and the
/// interpolation segment; the convex-combination point is highlighted.
std::string render_riesz_square_figure(double inv_p0, double inv_q0, double inv_p1, double inv_q1,
                                       double theta);

/// Amplitude profiles at two times, diffusive flattening on the top panel and
/// dispersive oscillation under a decaying envelope on the bottom panel.
std::string render_evolution_figure(const std::vector<Series>& heat_panel,
                                    const std::vector<Series>& dispersive_panel);

}  // namespace lpq
