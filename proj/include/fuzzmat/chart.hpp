#pragma once

#include <string>
#include <vector>

namespace fuzzmat {

/// Monospace bar chart of the row sums around a zero axis. Deterministic
/// byte output for fixed input.
std::string text_bar_chart(const std::vector<double>& values,
                           const std::vector<std::string>& labels);

/// Standalone SVG bar chart with labeled categories and a zero baseline.
std::string svg_bar_chart(const std::vector<double>& values,
                          const std::vector<std::string>& labels, const std::string& title);

}  // namespace fuzzmat
