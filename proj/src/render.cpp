#include "magicsq/render.hpp"

#include <stdexcept>

namespace magicsq {

RenderSpec RenderSpec::defaults(int dim, Convention conv) {
  if (dim != 4 && dim != 8) throw std::invalid_argument("unsupported dimension");
  RenderSpec spec;
  spec.dim = dim;
  spec.grid = dim == 4 ? 2 : 3;
  spec.palette = {"#e6194b", "#3cb44b", "#ffe119", "#4363d8",
                  "#f58231", "#911eb4", "#46f0f0", "#f032e6"};
  spec.palette.resize(static_cast<std::size_t>(dim));
  spec.convention_tag = magicsq::convention_tag(conv);
  return spec;
}

void RenderSpec::validate() const {
  if (dim != 4 && dim != 8) throw std::invalid_argument("unsupported dimension");
  if (grid * grid < dim) throw std::invalid_argument("subsquare grid too small");
  if (static_cast<int>(palette.size()) < dim)
    throw std::invalid_argument("palette needs one color per coordinate");
  if (cell_px <= 0) throw std::invalid_argument("cell size must be positive");
}

std::string render_pattern(const std::vector<std::vector<TermPattern>>& patterns,
                           const RenderSpec& spec) {
  spec.validate();
  int n = spec.dim;
  if (static_cast<int>(patterns.size()) != n) throw std::invalid_argument("pattern size mismatch");
  for (const auto& row : patterns) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("pattern size mismatch");
    for (const auto& pat : row)
      if (static_cast<int>(pat.size()) != n) throw std::invalid_argument("pattern size mismatch");
  }

  int g = spec.grid;
  int cell = spec.cell_px;
  int sub = g * cell;
  int gap = cell / 2 + 1;
  int margin = gap;
  int total = 2 * margin + n * sub + (n - 1) * gap;

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(total) + "\" height=\"" + std::to_string(total) + "\" viewBox=\"0 0 " +
         std::to_string(total) + " " + std::to_string(total) + "\">\n";
  svg += "<!-- dim=" + std::to_string(n) + " convention=" + spec.convention_tag +
         " layout=right-factor-row-major grey=trailing-cells palette=";
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    if (i) svg += ",";
    svg += spec.palette[i];
  }
  svg += " -->\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(total) + "\" height=\"" +
         std::to_string(total) + "\" fill=\"#f4f4f4\"/>\n";

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int x0 = margin + j * (sub + gap);
      int y0 = margin + i * (sub + gap);
      svg += "<g class=\"subsquare\" data-row=\"" + std::to_string(i) + "\" data-col=\"" +
             std::to_string(j) + "\">\n";
      const TermPattern& pat = patterns[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      for (int t = 0; t < g * g; ++t) {
        int cx = x0 + (t % g) * cell;
        int cy = y0 + (t / g) * cell;
        std::string fill;
        if (t < n) {
          const TermRef& term = pat[static_cast<std::size_t>(t)];
          fill = term.sign > 0 ? spec.palette[term.a_index] : spec.white;
        } else {
          fill = spec.grey;
        }
        svg += "<rect class=\"cell\" x=\"" + std::to_string(cx) + "\" y=\"" + std::to_string(cy) +
               "\" width=\"" + std::to_string(cell) + "\" height=\"" + std::to_string(cell) +
               "\" fill=\"" + fill + "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
      }
      svg += "</g>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace magicsq
