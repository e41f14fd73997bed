#include "flagtop/figure.hpp"

#include "flagtop/isotropy.hpp"
#include "flagtop/pi2.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace flagtop {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr const char* kZeroColour = "#7f7f7f";

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(x) < 0.005 ? 0.0 : x);
  return buf;
}

}  // namespace

std::string render_figure(const RootSystem& base, const ThetaSubset& theta, bool dual) {
  if (base.rank() != 2) throw std::invalid_argument("figures are only drawn for rank 2 systems");
  const RootSystem s = dual ? dual_system(base) : base;
  theta.validate(s.rank());

  // Euclidean frame from the Gram matrix: alpha_1 on the x axis.
  const Root a1 = s.simple_root(0), a2 = s.simple_root(1);
  const double g11 = s.norm2(a1).get_d();
  const double g12 = s.inner_product(a1, a2).get_d();
  const double g22 = s.norm2(a2).get_d();
  const double e1x = std::sqrt(g11);
  const double e2x = g12 / e1x;
  const double e2y = std::sqrt(g22 - e2x * e2x);

  const IsotropyDecomposition dec = residue_classes(s, theta);
  const auto reports = rigidity_report(s, theta);

  double extent = 0;
  for (const auto& r : s.positive_roots())
    extent = std::max(extent, std::sqrt(s.norm2(r).get_d()));
  const double scale = 170.0 / extent;
  const double cx = 250, cy = 260;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"860\" height=\"340\" viewBox=\"0 0 860 340\">\n"
      << "<defs>\n";
  for (std::size_t c = 0; c < dec.classes.size(); ++c) {
    const char* colour = c == 0 ? kZeroColour : kPalette[(c - 1) % kPalette.size()];
    svg << "<marker id=\"head" << c << "\" markerWidth=\"8\" markerHeight=\"8\" refX=\"7\" refY=\"4\" orient=\"auto\">"
        << "<path d=\"M0,0 L8,4 L0,8 z\" fill=\"" << colour << "\"/></marker>\n";
  }
  svg << "</defs>\n"
      << "<rect width=\"860\" height=\"340\" fill=\"white\"/>\n"
      << "<text x=\"20\" y=\"28\" font-family=\"sans-serif\" font-size=\"16\">" << s.kind().name()
      << (dual ? " (dual)" : "") << ", Theta = " << theta.str() << "</text>\n"
      << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(cy) << "\" r=\"3\" fill=\"black\"/>\n";

  for (std::size_t c = 0; c < dec.classes.size(); ++c) {
    const char* colour = c == 0 ? kZeroColour : kPalette[(c - 1) % kPalette.size()];
    for (const auto& r : dec.classes[c].members) {
      const double x = cx + scale * (r.coords[0] * e1x + r.coords[1] * e2x);
      const double y = cy - scale * (r.coords[1] * e2y);
      svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(x) << "\" y2=\"" << num(y)
          << "\" stroke=\"" << colour << "\" stroke-width=\"2\"" << (c == 0 ? " stroke-dasharray=\"5,3\"" : "")
          << " marker-end=\"url(#head" << c << ")\"/>\n";
      const double lx = cx + (scale + 14) / scale * (x - cx);
      const double ly = cy + (scale + 14) / scale * (y - cy);
      svg << "<text x=\"" << num(lx) << "\" y=\"" << num(ly)
          << "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" << r.str() << "</text>\n";
    }
  }

  double ly = 70;
  svg << "<text x=\"480\" y=\"" << num(ly - 20) << "\" font-family=\"sans-serif\" font-size=\"13\">classes mod R_Theta"
      << (dual ? " (dual)" : "") << ": " << reports.size() << "</text>\n";
  for (std::size_t c = 0; c < dec.classes.size(); ++c) {
    const char* colour = c == 0 ? kZeroColour : kPalette[(c - 1) % kPalette.size()];
    std::string label;
    if (c == 0) {
      label = "Pi_Theta: " + std::to_string(dec.classes[c].members.size()) + " roots";
    } else {
      const auto& rep = reports[c - 1];
      label = "class " + rep.class_ref.representative.str() + ": size " +
              std::to_string(rep.class_ref.members.size()) + ", " + (rep.theta_rigid ? "rigid" : "not rigid") +
              ", " + (rep.w_theta_transitive ? "transitive" : "not transitive");
    }
    svg << "<rect x=\"480\" y=\"" << num(ly - 10) << "\" width=\"12\" height=\"12\" fill=\"" << colour << "\"/>\n"
        << "<text x=\"498\" y=\"" << num(ly) << "\" font-family=\"sans-serif\" font-size=\"12\">" << label
        << "</text>\n";
    ly += 22;
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace flagtop
