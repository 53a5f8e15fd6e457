#include "sympack/render.hpp"

#include <cmath>
#include <sstream>

namespace sympack {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << std::fixed << v;
  return os.str();
}

int gray_level(size_t index, size_t count) {
  // From 10% to 65% black, like the published figures.
  double frac = count > 1 ? static_cast<double>(index) / (count - 1) : 0.0;
  return static_cast<int>(10 + frac * 55);
}

struct Proj {
  double x, y;
};

// TikZ-like axonometric projection for 3D previews.
Proj project3(double x, double y, double z) {
  return {x - 0.353 * z, y - 0.353 * z};
}

std::vector<std::vector<Proj>> shape_outlines(
    const std::vector<SimplexShape>& shapes, const Placement& pl) {
  std::vector<std::vector<Proj>> out;
  for (size_t i = 0; i < shapes.size(); ++i) {
    std::vector<Proj> poly;
    for (const auto& v : shapes[i].vertices()) {
      double x = pl.translations[i][0].to_double() + v[0];
      double y = pl.translations[i][1].to_double() + v[1];
      if (shapes[i].dim() == 2) {
        poly.push_back({x, y});
      } else {
        double z = pl.translations[i][2].to_double() + v[2];
        poly.push_back(project3(x, y, z));
      }
    }
    out.push_back(std::move(poly));
  }
  return out;
}

}  // namespace

std::string render_svg(const std::vector<SimplexShape>& shapes,
                       const Placement& placement, bool* warned) {
  bool ok = verify_packing(shapes, placement);
  if (warned) *warned = !ok;
  const int n = shapes.empty() ? 2 : shapes[0].dim();
  const double s = placement.s.to_double();
  const double unit = 120.0;
  const double pad = 30.0;

  std::ostringstream os;
  auto sx = [&](double x) { return pad + x * unit; };
  auto sy = [&](double y) { return pad + (s - y) * unit; };

  double w = 2 * pad + s * unit;
  // The 3D projection can spill left of x=0; shift by the worst offset.
  double shift = n == 3 ? 0.353 * s * unit : 0.0;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w + shift)
     << "\" height=\"" << fmt(w + shift) << "\" viewBox=\"" << fmt(-shift)
     << " 0 " << fmt(w + shift) << " " << fmt(w + shift) << "\">\n";
  if (!ok) os << "<!-- overlap warning: verify_packing failed -->\n";

  if (n == 2) {
    os << "<g stroke=\"#d8d8d8\" stroke-width=\"1\">\n";
    for (int g = 0; g <= static_cast<int>(std::floor(s + 1e-9)); ++g) {
      os << "<line x1=\"" << fmt(sx(g)) << "\" y1=\"" << fmt(sy(0)) << "\" x2=\""
         << fmt(sx(g)) << "\" y2=\"" << fmt(sy(s)) << "\"/>\n";
      os << "<line x1=\"" << fmt(sx(0)) << "\" y1=\"" << fmt(sy(g)) << "\" x2=\""
         << fmt(sx(s)) << "\" y2=\"" << fmt(sy(g)) << "\"/>\n";
    }
    os << "</g>\n";
    for (size_t i = 0; i < shapes.size(); ++i) {
      int lvl = gray_level(i, shapes.size());
      int rgb = static_cast<int>(255 * (100 - lvl) / 100.0);
      os << "<polygon points=\"";
      double cx = 0, cy = 0;
      for (const auto& v : shapes[i].vertices()) {
        double x = placement.translations[i][0].to_double() + v[0];
        double y = placement.translations[i][1].to_double() + v[1];
        cx += x / 3.0;
        cy += y / 3.0;
        os << fmt(sx(x)) << "," << fmt(sy(y)) << " ";
      }
      os << "\" fill=\"rgb(" << rgb << "," << rgb << "," << rgb << ")\"/>\n";
      os << "<text x=\"" << fmt(sx(cx)) << "\" y=\"" << fmt(sy(cy) + 6)
         << "\" font-size=\"24\" text-anchor=\"middle\">" << i + 1
         << "</text>\n";
    }
    os << "<polygon points=\"" << fmt(sx(0)) << "," << fmt(sy(0)) << " "
       << fmt(sx(s)) << "," << fmt(sy(0)) << " " << fmt(sx(0)) << ","
       << fmt(sy(s)) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  } else {
    // Container edges.
    std::vector<Proj> corner = {project3(0, 0, 0), project3(s, 0, 0),
                                project3(0, s, 0), project3(0, 0, s)};
    os << "<g stroke=\"#999999\" stroke-width=\"1.5\" fill=\"none\">\n";
    for (size_t a = 0; a < corner.size(); ++a)
      for (size_t b = a + 1; b < corner.size(); ++b)
        os << "<line x1=\"" << fmt(sx(corner[a].x)) << "\" y1=\""
           << fmt(sy(corner[a].y)) << "\" x2=\"" << fmt(sx(corner[b].x))
           << "\" y2=\"" << fmt(sy(corner[b].y)) << "\"/>\n";
    os << "</g>\n";
    auto outlines = shape_outlines(shapes, placement);
    for (size_t i = 0; i < outlines.size(); ++i) {
      const auto& poly = outlines[i];
      os << "<g stroke=\"#222222\" stroke-width=\"1\" fill=\"none\">\n";
      for (size_t a = 0; a < poly.size(); ++a)
        for (size_t b = a + 1; b < poly.size(); ++b)
          os << "<line x1=\"" << fmt(sx(poly[a].x)) << "\" y1=\""
             << fmt(sy(poly[a].y)) << "\" x2=\"" << fmt(sx(poly[b].x))
             << "\" y2=\"" << fmt(sy(poly[b].y)) << "\"/>\n";
      os << "</g>\n";
      double cx = 0, cy = 0;
      for (const auto& p : poly) {
        cx += p.x / poly.size();
        cy += p.y / poly.size();
      }
      os << "<text x=\"" << fmt(sx(cx)) << "\" y=\"" << fmt(sy(cy) + 5)
         << "\" font-size=\"20\" text-anchor=\"middle\">" << i + 1
         << "</text>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

std::string render_tikz(const std::vector<SimplexShape>& shapes,
                        const Placement& placement, bool* warned) {
  bool ok = verify_packing(shapes, placement);
  if (warned) *warned = !ok;
  const int n = shapes.empty() ? 2 : shapes[0].dim();
  const double s = placement.s.to_double();
  std::ostringstream os;
  os << "\\documentclass[tikz,border=2mm]{standalone}\n\\begin{document}\n";
  os << "\\begin{tikzpicture}[scale=" << fmt(3.0 / std::max(1.0, s)) << "]\n";
  if (!ok) os << "% overlap warning: verify_packing failed\n";
  if (n == 2) {
    os << "\\draw [help lines] (0,0) grid (" << fmt(s) << "," << fmt(s)
       << ");\n";
    for (size_t i = 0; i < shapes.size(); ++i) {
      os << "\\fill[black!" << gray_level(i, shapes.size()) << "] ";
      double cx = 0, cy = 0;
      bool first = true;
      for (const auto& v : shapes[i].vertices()) {
        double x = placement.translations[i][0].to_double() + v[0];
        double y = placement.translations[i][1].to_double() + v[1];
        cx += x / 3.0;
        cy += y / 3.0;
        if (!first) os << "--";
        os << "(" << fmt(x) << "," << fmt(y) << ")";
        first = false;
      }
      os << "--cycle;\n";
      os << "\\node at (" << fmt(cx) << "," << fmt(cy) << ") {" << i + 1
         << "};\n";
    }
    os << "\\draw (0,0)--(" << fmt(s) << ",0)--(0," << fmt(s) << ")--cycle;\n";
  } else {
    os << "\\draw[->] (0,0,0) -- (" << fmt(s) << ",0,0) node[right] {$x$};\n";
    os << "\\draw[->] (0,0,0) -- (0," << fmt(s) << ",0) node[above] {$y$};\n";
    os << "\\draw[->] (0,0,0) -- (0,0," << fmt(s)
       << ") node[below left] {$z$};\n";
    for (size_t i = 0; i < shapes.size(); ++i) {
      std::vector<std::array<double, 3>> vs;
      double c[3] = {0, 0, 0};
      for (const auto& v : shapes[i].vertices()) {
        std::array<double, 3> p;
        for (int d = 0; d < 3; ++d) {
          p[static_cast<size_t>(d)] =
              placement.translations[i][d].to_double() + v[d];
          c[d] += p[static_cast<size_t>(d)] / 4.0;
        }
        vs.push_back(p);
      }
      os << "\\draw[black!" << 30 + gray_level(i, shapes.size()) << "] ";
      bool first = true;
      for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) {
          if (!first) os << " ";
          os << "(" << fmt(vs[a][0]) << "," << fmt(vs[a][1]) << ","
             << fmt(vs[a][2]) << ") -- (" << fmt(vs[b][0]) << "," << fmt(vs[b][1])
             << "," << fmt(vs[b][2]) << ")";
          first = false;
        }
      os << ";\n";
      os << "\\node at (" << fmt(c[0]) << "," << fmt(c[1]) << "," << fmt(c[2])
         << ") {" << i + 1 << "};\n";
    }
  }
  os << "\\end{tikzpicture}\n\\end{document}\n";
  return os.str();
}

}  // namespace sympack
