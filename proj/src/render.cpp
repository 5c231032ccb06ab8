#include "liecomb/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "liecomb/multiplicity.hpp"
#include "liecomb/polygon.hpp"

namespace liecomb {

namespace {

// Fixed-size character canvas for the ASCII diagrams.
struct TextCanvas {
  std::vector<std::string> rows;

  TextCanvas(int r, int c) : rows(static_cast<size_t>(r), std::string(static_cast<size_t>(c), ' ')) {}

  void put(int r, int c, const std::string& s) {
    if (r < 0 || r >= static_cast<int>(rows.size())) return;
    for (size_t i = 0; i < s.size(); ++i) {
      const int cc = c + static_cast<int>(i);
      if (cc >= 0 && cc < static_cast<int>(rows[static_cast<size_t>(r)].size()))
        rows[static_cast<size_t>(r)][static_cast<size_t>(cc)] = s[i];
    }
  }

  // centered string at column c
  void put_center(int r, int c, const std::string& s) {
    put(r, c - static_cast<int>(s.size()) / 2, s);
  }

  void vline(int r0, int r1, int c) {
    for (int r = r0; r <= r1; ++r) put(r, c, "|");
  }

  // diagonal from (r0,c0) to (r1,c1), rows strictly increasing
  void diag(int r0, int c0, int r1, int c1) {
    const int n = r1 - r0;
    if (n <= 0) return;
    const bool down_right = c1 > c0;
    for (int k = 1; k < n; ++k)
      put(r0 + k, c0 + (c1 - c0) * k / n, down_right ? "\\" : "/");
    if (n == 1) put(r0 + 1, (c0 + c1) / 2, down_right ? "\\" : "/");
  }

  std::string str() const {
    std::ostringstream os;
    for (const auto& row : rows) {
      size_t end = row.find_last_not_of(' ');
      os << (end == std::string::npos ? "" : row.substr(0, end + 1)) << '\n';
    }
    return os.str();
  }
};

std::string num(int v) { return std::to_string(v); }

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v + 0.0);  // avoid -0.00
  if (std::string(buf) == "-0.00") return "0.00";
  return buf;
}

// Minimal deterministic SVG builder.
struct Svg {
  std::ostringstream body;
  double min_x = 1e18, min_y = 1e18, max_x = -1e18, max_y = -1e18;

  void bump(double x, double y) {
    min_x = std::min(min_x, x);
    max_x = std::max(max_x, x);
    min_y = std::min(min_y, y);
    max_y = std::max(max_y, y);
  }
  void line(double x1, double y1, double x2, double y2, const std::string& stroke, double width,
            bool dashed = false) {
    bump(x1, y1);
    bump(x2, y2);
    body << "<line x1=\"" << fmt2(x1) << "\" y1=\"" << fmt2(y1) << "\" x2=\"" << fmt2(x2)
         << "\" y2=\"" << fmt2(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
         << fmt2(width) << "\"" << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  void circle(double x, double y, double r, const std::string& fill) {
    bump(x - r, y - r);
    bump(x + r, y + r);
    body << "<circle cx=\"" << fmt2(x) << "\" cy=\"" << fmt2(y) << "\" r=\"" << fmt2(r)
         << "\" fill=\"" << fill << "\"/>\n";
  }
  void text(double x, double y, const std::string& s, int size = 10,
            const std::string& fill = "#000") {
    bump(x, y);
    body << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" font-size=\"" << size
         << "\" font-family=\"monospace\" fill=\"" << fill << "\">" << s << "</text>\n";
  }
  void poly(const std::vector<std::pair<double, double>>& pts, const std::string& stroke,
            double width, bool dashed = false) {
    if (pts.empty()) return;
    body << "<polygon points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
      bump(pts[i].first, pts[i].second);
      body << (i ? " " : "") << fmt2(pts[i].first) << "," << fmt2(pts[i].second);
    }
    body << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << fmt2(width) << "\""
         << (dashed ? " stroke-dasharray=\"4 3\"" : "") << "/>\n";
  }
  std::string str() const {
    const double pad = 16;
    const double w = (max_x > min_x) ? max_x - min_x + 2 * pad : 64;
    const double h = (max_y > min_y) ? max_y - min_y + 2 * pad : 64;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w) << "\" height=\""
       << fmt2(h) << "\" viewBox=\"" << fmt2(min_x - pad) << " " << fmt2(min_y - pad) << " "
       << fmt2(w) << " " << fmt2(h) << "\">\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

const char* mult_color(int m) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return palette[(m - 1) % 10];
}

}  // namespace

namespace render {

std::string honeycomb_text(const honeycomb::Honeycomb& h) {
  // Y at the top, central hexagon, three Y's along the bottom; boundary
  // rays carry the clockwise labels, inner edges the alpha expressions.
  const int U = 8;
  TextCanvas cv(19, 14 * U);
  const auto C = [U](int u) { return u * U; };
  // vertices: A top-Y, B hexagon top, C/D upper, E/F lower, G/H/I bottom Y's
  const int Ar = 1, Ac = C(6), Br = 4, Bc = C(6);
  const int Cr = 7, Cc = C(4), Dr = 7, Dc = C(8);
  const int Er = 11, Ec = C(4), Fr = 11, Fc = C(8);
  const int Gr = 14, Gc = C(2), Hr = 14, Hc = C(6), Ir = 14, Ic = C(10);

  cv.diag(0, Ac - 2, Ar, Ac);               // boundary "0" arm
  cv.diag(0, Ac + 2, Ar, Ac);               // boundary mu1+mu2 arm (drawn as mirrored diag)
  cv.put(0, Ac - 2, "\\");
  cv.put(0, Ac + 2, "/");
  cv.vline(Ar + 1, Br - 1, Ac);             // inner[0]
  cv.diag(Br, Bc, Cr, Cc);                  // inner[1]
  cv.diag(Br, Bc, Dr, Dc);                  // inner[2]
  cv.diag(4, Cc - U, Cr, Cc);               // lambda2 arm
  cv.diag(4, Dc + U, Dr, Dc);               // mu2 arm
  cv.vline(Cr + 1, Er - 1, Cc);             // inner[3]
  cv.vline(Dr + 1, Fr - 1, Dc);             // inner[4]
  cv.diag(Er, Ec, Gr, Gc);                  // inner[5]
  cv.diag(Er, Ec, Hr, Hc);                  // inner[6]
  cv.diag(Fr, Fc, Hr, Hc);                  // inner[7]
  cv.diag(Fr, Fc, Ir, Ic);                  // inner[8]
  cv.diag(11, Gc - U, Gr, Gc);              // lambda1+lambda2 arm
  cv.diag(11, Ic + U, Ir, Ic);              // boundary "0" arm
  cv.vline(Gr + 1, 16, Gc);
  cv.vline(Hr + 1, 16, Hc);
  cv.vline(Ir + 1, 16, Ic);

  const auto& in = h.inner;
  const auto& bd = h.boundary;
  cv.put(0, Ac - 6, num(bd[2]));                       // 0
  cv.put(0, Ac + 4, num(bd[3]));                       // mu1+mu2
  cv.put(2, Ac + 2, num(in[0]));
  cv.put(4, Cc - U - 4, num(bd[1]));                   // lambda2
  cv.put(4, Dc + U + 2, num(bd[4]));                   // mu2
  cv.put_center(5, (Bc + Cc) / 2 - 2, num(in[1]));
  cv.put_center(5, (Bc + Dc) / 2 + 2, num(in[2]));
  cv.put(9, Cc - static_cast<int>(num(in[3]).size()) - 1, num(in[3]));
  cv.put(9, Dc + 2, num(in[4]));
  cv.put(10, 0, num(bd[0]));                           // lambda1+lambda2
  cv.put(10, Ic + U + 2, num(bd[5]));                  // 0
  cv.put_center(12, (Ec + Gc) / 2 - 1, num(in[5]));
  cv.put_center(12, (Ec + Hc) / 2 + 1, num(in[6]));
  cv.put_center(12, (Fc + Hc) / 2 - 1, num(in[7]));
  cv.put_center(12, (Fc + Ic) / 2 + 1, num(in[8]));
  cv.put_center(17, Gc, num(bd[8]));
  cv.put_center(17, Hc, num(bd[7]));
  cv.put_center(17, Ic, num(bd[6]));

  std::ostringstream os;
  os << "KT-honeycomb  lambda=" << h.lambda.str() << "  mu=" << h.mu.str() << "  nu=" << h.nu.str()
     << "  alpha=" << h.alpha << "  (nu3=" << h.nu3 << ")\n\n"
     << cv.str();
  return os.str();
}

std::string hive_text(const honeycomb::Hive& h) {
  // triangular array, apex on top, lower-left corner pinned to 0
  std::ostringstream os;
  os << "hive (interior = alpha = " << h.value(1, 1) << ")\n\n";
  const int width = 10;
  for (int r = 3; r >= 0; --r) {
    os << std::string(static_cast<size_t>(r * width / 2), ' ');
    for (int i = 0; i < 4 - r; ++i) {
      std::string v = num(h.value(r, i));
      os << v << std::string(static_cast<size_t>(std::max(1, width - static_cast<int>(v.size()))), ' ');
    }
    os << '\n';
    if (r) os << '\n';
  }
  return os.str();
}

namespace {

// Shared geometry for the pictograph drawings: six rays at 60-degree steps
// with the top bridge n13, matching the clockwise weight placement.
struct BladeGeom {
  // ray angle (degrees) and label, in hexagon cyclic order
  struct Ray {
    int deg;
    const char* name;
    int value;
  };
  std::array<Ray, 6> rays;
  // bridge label between the two rays it connects
  struct Bridge {
    int deg;
    const char* name;
    int value;
    int ray_a, ray_b;  // indices into rays
  };
  std::array<Bridge, 3> bridges;
};

BladeGeom blade_geom(const pictograph::NineLabels& q) {
  BladeGeom g;
  g.rays = {{{0, "l23", q.l23},
             {60, "n12", q.n12},
             {120, "m23", q.m23},
             {180, "l12", q.l12},
             {240, "n23", q.n23},
             {300, "m12", q.m12}}};
  g.bridges = {{{90, "n13", q.n13, 1, 2}, {210, "l13", q.l13, 3, 4}, {330, "m13", q.m13, 5, 0}}};
  return g;
}

}  // namespace

std::string pictograph_text(const pictograph::Pictograph& p) {
  const auto ext = external_weights(p);
  const auto& q = p.labels;
  std::ostringstream head;
  head << "lambda=" << ext[0].str() << "  mu=" << ext[1].str() << "  nu=" << ext[2].str() << "\n\n";

  if (p.kind == pictograph::Kind::bz_triangle) {
    TextCanvas cv(9, 64);
    cv.put_center(0, 32, num(q.n13));
    cv.put_center(2, 20, num(q.m23));
    cv.put_center(2, 44, num(q.n12));
    cv.put_center(4, 12, num(q.l12));
    cv.put_center(4, 52, num(q.l23));
    cv.put_center(6, 20, num(q.n23));
    cv.put_center(6, 44, num(q.m12));
    cv.put_center(8, 6, num(q.l13));
    cv.put_center(8, 58, num(q.m13));
    return "BZ-triangle  " + head.str() + cv.str();
  }
  if (p.kind == pictograph::Kind::oblade) {
    TextCanvas cv(9, 64);
    cv.put_center(0, 32, num(q.n13));          // top bridge
    cv.put_center(1, 32, ".---+---.");
    cv.put_center(2, 22, num(q.m23));
    cv.put_center(2, 42, num(q.n12));
    cv.put(3, 26, "\\");
    cv.put(3, 37, "/");
    cv.put_center(4, 32, "*");
    cv.put(4, 12, num(q.l12) + " ----");
    cv.put(4, 38, "---- " + num(q.l23));
    cv.put(5, 26, "/");
    cv.put(5, 37, "\\");
    cv.put_center(6, 22, num(q.n23));
    cv.put_center(6, 42, num(q.m12));
    cv.put_center(7, 14, "'--+--'");
    cv.put_center(7, 50, "'--+--'");
    cv.put_center(8, 14, num(q.l13));
    cv.put_center(8, 50, num(q.m13));
    return "O-blade  " + head.str() + cv.str();
  }
  std::ostringstream os;
  os << "SU(3)-honeycomb  " << head.str();
  os << "hexagon sides (cyclic): l12=" << q.l12 << " n23=" << q.n23 << " m12=" << q.m12
     << " l23=" << q.l23 << " n12=" << q.n12 << " m23=" << q.m23 << "\n";
  os << "legs: m13=" << q.m13 << " n13=" << q.n13 << " l13=" << q.l13 << "\n";
  return os.str();
}

std::string pictograph_svg(const pictograph::Pictograph& p) {
  const auto& q = p.labels;
  Svg svg;
  const double pi = 3.14159265358979323846;
  const auto dir = [&](double deg) {
    return std::pair<double, double>(std::cos(deg * pi / 180.0), -std::sin(deg * pi / 180.0));
  };

  if (p.kind == pictograph::Kind::su3_honeycomb) {
    // metric drawing: hexagon sides are the six 12/23 labels, legs the 13s
    const double unit = 18.0;
    const int sides[6] = {q.l12, q.n23, q.m12, q.l23, q.n12, q.m23};
    const char* side_names[6] = {"l12", "n23", "m12", "l23", "n12", "m23"};
    std::array<std::pair<double, double>, 7> v;
    v[0] = {0, 0};
    for (int i = 0; i < 6; ++i) {
      const auto d = dir(60.0 * i);
      v[static_cast<size_t>(i + 1)] = {v[static_cast<size_t>(i)].first + sides[i] * unit * d.first,
                                       v[static_cast<size_t>(i)].second + sides[i] * unit * d.second};
    }
    for (int i = 0; i < 6; ++i) {
      const auto a = v[static_cast<size_t>(i)], b = v[static_cast<size_t>(i + 1)];
      if (sides[i] > 0) {
        svg.line(a.first, a.second, b.first, b.second, "#333", sides[i] == 1 ? 3.0 : 1.5);
        svg.text((a.first + b.first) / 2 + 3, (a.second + b.second) / 2 - 3,
                 std::string(side_names[i]) + "=" + num(sides[i]));
      }
    }
    // legs at the vertices between sides (0,1), (2,3) and (4,5)
    const struct {
      int vertex, s0, s1, len;
      const char* name;
    } legs[3] = {{1, 0, 1, q.l13, "l13"}, {3, 2, 3, q.m13, "m13"}, {5, 4, 5, q.n13, "n13"}};
    for (const auto& leg : legs) {
      const auto d0 = dir(60.0 * leg.s0), d1 = dir(60.0 * leg.s1);
      const std::pair<double, double> d{d0.first - d1.first, d0.second - d1.second};
      const auto a = v[static_cast<size_t>(leg.vertex)];
      if (leg.len > 0) {
        const std::pair<double, double> b{a.first + leg.len * unit * d.first,
                                          a.second + leg.len * unit * d.second};
        svg.line(a.first, a.second, b.first, b.second, "#333", leg.len == 1 ? 3.0 : 1.5);
        svg.text(b.first + 3, b.second - 3, std::string(leg.name) + "=" + num(leg.len));
      }
    }
    return svg.str();
  }

  const BladeGeom g = blade_geom(q);
  const double R = 60.0;
  std::array<std::pair<double, double>, 6> tip;
  for (size_t i = 0; i < 6; ++i) {
    const auto d = dir(g.rays[i].deg);
    tip[i] = {R * d.first, R * d.second};
  }
  if (p.kind == pictograph::Kind::oblade) {
    for (size_t i = 0; i < 6; ++i) {
      svg.line(0, 0, tip[i].first, tip[i].second, "#333", g.rays[i].value == 1 ? 3.0 : 1.5);
      svg.text(tip[i].first * 0.55 + 4, tip[i].second * 0.55,
               std::string(g.rays[i].name) + "=" + num(g.rays[i].value));
    }
    for (const auto& b : g.bridges) {
      const auto& pa = tip[static_cast<size_t>(b.ray_a)];
      const auto& pb = tip[static_cast<size_t>(b.ray_b)];
      svg.line(pa.first, pa.second, pb.first, pb.second, "#333", b.value == 1 ? 3.0 : 1.5);
      const auto d = dir(b.deg);
      svg.text(1.15 * R * d.first, 1.15 * R * d.second, std::string(b.name) + "=" + num(b.value));
    }
    svg.circle(0, 0, 2, "#000");
    return svg.str();
  }
  // BZ triangle: vertices at the ray midpoints plus three corners
  for (size_t i = 0; i < 6; ++i) {
    const auto d = dir(g.rays[i].deg);
    svg.circle(0.6 * R * d.first, 0.6 * R * d.second, 2, "#000");
    svg.text(0.6 * R * d.first + 4, 0.6 * R * d.second - 2,
             std::string(g.rays[i].name) + "=" + num(g.rays[i].value));
  }
  std::vector<std::pair<double, double>> corners;
  for (const auto& b : g.bridges) {
    const auto d = dir(b.deg);
    corners.emplace_back(1.3 * R * d.first, 1.3 * R * d.second);
    svg.circle(corners.back().first, corners.back().second, 2, "#000");
    svg.text(corners.back().first + 4, corners.back().second - 2,
             std::string(b.name) + "=" + num(b.value));
  }
  svg.poly(corners, "#bbb", 1.0);
  return svg.str();
}

}  // namespace render

namespace polygon {

std::string render_svg(const LayerDiagram& d, const SvgOptions& options) {
  Svg svg;
  const double cell = options.cell;
  const double s60 = 0.86602540378443865;
  const auto at = [&](double n1, double n2) {
    if (options.oblique_axes)
      return std::pair<double, double>((n1 + 0.5 * n2) * cell, -n2 * s60 * cell);
    return std::pair<double, double>(n1 * cell, -n2 * cell);
  };

  const auto draw_product = [&](const Weight& lambda, const Weight& mu, bool dashed) {
    const DecompositionTable table = decompose(lambda, mu);
    const LayerDiagram diag = dashed ? layers(lambda, mu) : d;
    for (const auto& layer : diag.layers) {
      std::vector<std::pair<double, double>> pts;
      for (const auto& v : layer.vertices) pts.push_back(at(v[0], v[1]));
      if (pts.size() == 1)
        svg.circle(pts[0].first, pts[0].second, 3, "#888");
      else
        svg.poly(pts, "#888", 1.0, dashed);
    }
    for (const auto& e : table.entries) {
      const auto [x, y] = at(e.nu[0], e.nu[1]);
      svg.circle(x, y, dashed ? 2.2 : 3.0, mult_color(e.mult));
    }
  };

  draw_product(d.lambda, d.mu, false);
  if (options.overlay_conjugate) draw_product(d.lambda, d.mu.conjugate(), true);

  // axes through the origin
  const auto o = at(0, 0);
  const auto x1 = at(std::max(4.0, svg.max_x / cell + 1), 0);
  const auto y1 = at(0, std::max(4.0, -svg.min_y / cell + 1));
  svg.line(o.first, o.second, x1.first, x1.second, "#ccc", 0.8);
  svg.line(o.first, o.second, y1.first, y1.second, "#ccc", 0.8);
  svg.text(x1.first - 10, x1.second + 12, "nu1", 9, "#888");
  svg.text(y1.first + 4, y1.second + 10, "nu2", 9, "#888");

  // legend: one swatch per multiplicity present
  const MultiplicityCensus c = census(d.lambda, d.mu);
  double ly = svg.min_y;
  double lx = svg.max_x + 24;
  for (const auto& [s, n] : c.by_mult) {
    svg.circle(lx, ly, 3, mult_color(s));
    svg.text(lx + 6, ly + 3, "mult " + num(s) + " (" + std::to_string(n) + ")", 9);
    ly += 14;
  }
  return svg.str();
}

}  // namespace polygon
}  // namespace liecomb
