#pragma once

#include <string>
#include <vector>

#include "magicsq/magic.hpp"

namespace magicsq {

/// Layout and colors for the structure figure: one subsquare per matrix
/// entry, a colored cell per term (color = left-factor index, position =
/// right-factor index, white = negated term), grey filler cells at the end.
struct RenderSpec {
  int dim = 8;
  int grid = 3;  // subsquare side; grid^2 >= dim
  std::vector<std::string> palette;
  int cell_px = 12;
  std::string grey = "#c8c8c8";
  std::string white = "#ffffff";
  std::string convention_tag = "standard";

  static RenderSpec defaults(int dim, Convention conv = Convention::standard);
  void validate() const;
};

/// Byte-deterministic standalone SVG. Cells are laid out row-major inside
/// each subsquare by right-factor index; the unused grid positions at the
/// end are grey.
std::string render_pattern(const std::vector<std::vector<TermPattern>>& patterns,
                           const RenderSpec& spec);

}  // namespace magicsq
