#include "fairfan/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace fairfan {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

std::string color_for(int index) {
  static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                  "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080",
                                  "#9a6324", "#800000", "#808000", "#000075", "#2f4f4f"};
  return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

struct Frame {
  double minx, miny, maxx, maxy;

  double width() const { return maxx - minx; }
  double height() const { return maxy - miny; }
};

// Clip an infinite line <n,x> = b to the frame; returns up to one segment.
bool clip_line(const Frame& f, double nx, double ny, double b, double seg[4]) {
  std::vector<std::pair<double, double>> pts;
  auto push = [&](double x, double y) {
    for (auto& p : pts)
      if (std::abs(p.first - x) + std::abs(p.second - y) < 1e-9) return;
    pts.push_back({x, y});
  };
  if (std::abs(ny) > 1e-12) {
    for (double x : {f.minx, f.maxx}) {
      double y = (b - nx * x) / ny;
      if (y >= f.miny - 1e-9 && y <= f.maxy + 1e-9) push(x, y);
    }
  }
  if (std::abs(nx) > 1e-12) {
    for (double y : {f.miny, f.maxy}) {
      double x = (b - ny * y) / nx;
      if (x >= f.minx - 1e-9 && x <= f.maxx + 1e-9) push(x, y);
    }
  }
  if (pts.size() < 2) return false;
  seg[0] = pts[0].first;
  seg[1] = pts[0].second;
  seg[2] = pts[1].first;
  seg[3] = pts[1].second;
  return true;
}

void collect_cut_lines(const CutNode& node, std::vector<const Hyperplane*>& lines) {
  if (node.is_leaf) return;
  lines.push_back(&node.cut.line);
  collect_cut_lines(*node.left, lines);
  collect_cut_lines(*node.right, lines);
}

}  // namespace

std::string render_svg(const MeasureFamily& family, const ConvexPartition* part) {
  if (family.dim != 2) throw ParamError("SVG rendering is planar only");
  Frame f{1e18, 1e18, -1e18, -1e18};
  double r = family.measures.empty() ? 1.0 : family.measures[0].bump_radius.get_d();
  for (const auto& m : family.measures)
    for (const auto& a : m.atoms) {
      double x = a.pos[0].get_d(), y = a.pos[1].get_d();
      f.minx = std::min(f.minx, x - 3 * r);
      f.maxx = std::max(f.maxx, x + 3 * r);
      f.miny = std::min(f.miny, y - 3 * r);
      f.maxy = std::max(f.maxy, y + 3 * r);
    }
  double pad = 0.05 * std::max(f.width(), f.height()) + 1e-6;
  f.minx -= pad, f.miny -= pad, f.maxx += pad, f.maxy += pad;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(f.minx) + " " +
         num(-f.maxy) + " " + num(f.width()) + " " + num(f.height()) + "\">\n";
  out += "<g transform=\"scale(1,-1)\" stroke-width=\"" + num(f.width() / 400) + "\">\n";

  if (part) {
    if (part->fan && part->dim == 2) {
      const auto& fan = *part->fan;
      double ox = fan.apex.base[0].get_d(), oy = fan.apex.base[1].get_d();
      double reach = 2.0 * std::max(f.width(), f.height());
      double a = fan.plane.u_norm2.get_d(), b = fan.plane.v_norm2.get_d();
      for (const auto& ray : fan.rays) {
        double dx = ray.x.get_d() / a * fan.plane.axis_u[0].get_d() +
                    ray.y.get_d() / b * fan.plane.axis_v[0].get_d();
        double dy = ray.x.get_d() / a * fan.plane.axis_u[1].get_d() +
                    ray.y.get_d() / b * fan.plane.axis_v[1].get_d();
        double len = std::hypot(dx, dy);
        if (len < 1e-15) continue;
        out += "<line x1=\"" + num(ox) + "\" y1=\"" + num(oy) + "\" x2=\"" +
               num(ox + dx / len * reach) + "\" y2=\"" + num(oy + dy / len * reach) +
               "\" stroke=\"#333333\"/>\n";
      }
      out += "<circle cx=\"" + num(ox) + "\" cy=\"" + num(oy) +
             "\" r=\"" + num(f.width() / 200) + "\" fill=\"#333333\"/>\n";
    }
    if (part->cut_tree) {
      std::vector<const Hyperplane*> lines;
      collect_cut_lines(*part->cut_tree, lines);
      for (const Hyperplane* line : lines) {
        double seg[4];
        if (clip_line(f, line->normal[0].get_d(), line->normal[1].get_d(), line->offset.get_d(),
                      seg))
          out += "<line x1=\"" + num(seg[0]) + "\" y1=\"" + num(seg[1]) + "\" x2=\"" +
                 num(seg[2]) + "\" y2=\"" + num(seg[3]) + "\" stroke=\"#333333\"/>\n";
      }
    }
  }

  for (size_t j = 0; j < family.measures.size(); ++j) {
    const auto& m = family.measures[j];
    double radius = m.bump_radius.get_d();
    for (const auto& a : m.atoms)
      out += "<circle cx=\"" + num(a.pos[0].get_d()) + "\" cy=\"" + num(a.pos[1].get_d()) +
             "\" r=\"" + num(radius) + "\" fill=\"" + color_for(static_cast<int>(j)) +
             "\" fill-opacity=\"0.65\" stroke=\"none\"/>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace fairfan
