#include "flopcalc/plot.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace flopcalc {

namespace {

const char* kPalette[8] = {"#d4447e", "#e69f00", "#0072b2", "#009e73",
                           "#8a8a8a", "#56b4e9", "#a05195", "#bc6c25"};

struct Point {
  Rat x, y;
  bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

struct Canvas {
  PlotSpec spec;
  Rat width, height;
  std::ostringstream body;

  explicit Canvas(const PlotSpec& s) : spec(s) {
    if (s.xmax <= s.xmin || s.ymax <= s.ymin)
      throw DomainError("plot window is degenerate");
    width = (s.xmax - s.xmin) * s.pixels_per_unit;
    height = (s.ymax - s.ymin) * s.pixels_per_unit;
  }

  std::string px(const Rat& v) const { return rat_to_decimal(v, 6); }
  Rat sx(const Rat& x) const { return (x - spec.xmin) * spec.pixels_per_unit; }
  Rat sy(const Rat& y) const { return (spec.ymax - y) * spec.pixels_per_unit; }

  void line(const Point& a, const Point& b, const std::string& color, const Rat& stroke) {
    body << "<line x1=\"" << px(sx(a.x)) << "\" y1=\"" << px(sy(a.y)) << "\" x2=\"" << px(sx(b.x))
         << "\" y2=\"" << px(sy(b.y)) << "\" stroke=\"" << color << "\" stroke-width=\""
         << px(stroke) << "\"/>\n";
  }

  void circle(const Point& c, const Rat& radius, const std::string& color) {
    body << "<circle cx=\"" << px(sx(c.x)) << "\" cy=\"" << px(sy(c.y)) << "\" r=\"" << px(radius)
         << "\" fill=\"white\" stroke=\"" << color << "\" stroke-width=\"" << px(spec.stroke_scale * 2)
         << "\"/>\n";
  }

  void text(const Point& at, const std::string& content, const std::string& color) {
    body << "<text x=\"" << px(sx(at.x)) << "\" y=\"" << px(sy(at.y)) << "\" fill=\"" << color
         << "\" font-family=\"sans-serif\" font-size=\"14\">" << content << "</text>\n";
  }

  void polygon(const std::vector<Point>& corners, const std::string& color, const Rat& stroke) {
    body << "<polygon points=\"";
    for (std::size_t i = 0; i < corners.size(); ++i)
      body << (i ? " " : "") << px(sx(corners[i].x)) << "," << px(sy(corners[i].y));
    body << "\" fill=\"" << color << "\" fill-opacity=\"0.18\" stroke=\"" << color
         << "\" stroke-width=\"" << px(stroke) << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
        << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << body.str() << "</svg>\n";
    return out.str();
  }
};

// Clips a x + b y = c to the window; empty when the line misses it. Both
// endpoints are checked against the defining equation before rasterisation.
std::vector<Point> clip_line(const PlotSpec& s, long long a, long long b, const Rat& c) {
  std::set<Point> hits;
  auto inside_x = [&](const Rat& x) { return x >= s.xmin && x <= s.xmax; };
  auto inside_y = [&](const Rat& y) { return y >= s.ymin && y <= s.ymax; };
  if (b != 0) {
    for (const Rat& x : {s.xmin, s.xmax}) {
      const Rat y = (c - Rat(a) * x) / Rat(b);
      if (inside_y(y)) hits.insert(Point{x, y});
    }
  }
  if (a != 0) {
    for (const Rat& y : {s.ymin, s.ymax}) {
      const Rat x = (c - Rat(b) * y) / Rat(a);
      if (inside_x(x)) hits.insert(Point{x, y});
    }
  }
  std::vector<Point> out(hits.begin(), hits.end());
  if (out.size() > 2) out.erase(out.begin() + 1, out.end() - 1);
  for (const auto& p : out)
    if (Rat(a) * p.x + Rat(b) * p.y != c)
      throw InconsistencyError("clipped endpoint violates the line equation");
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

void check_rank(const EnhancedArrangement& arrangement, int wanted) {
  if (static_cast<int>(arrangement.curves.size()) != wanted)
    throw DomainError("unsupported rank: plot needs |I^c| = " + std::to_string(wanted) + ", got " +
                      std::to_string(arrangement.curves.size()));
}

Rat range_min(long long a, long long b, const PlotSpec& s) {
  Rat lo = Rat(a) * (a >= 0 ? s.xmin : s.xmax);
  lo += Rat(b) * (b >= 0 ? s.ymin : s.ymax);
  return lo;
}

Rat range_max(long long a, long long b, const PlotSpec& s) {
  Rat hi = Rat(a) * (a >= 0 ? s.xmax : s.xmin);
  hi += Rat(b) * (b >= 0 ? s.ymax : s.ymin);
  return hi;
}

long long floor_rat(const Rat& r) {
  Int q = rat_num(r) / rat_den(r);
  if (rat_num(r) < 0 && q * rat_den(r) != rat_num(r)) --q;
  return static_cast<long long>(q);
}

long long ceil_rat(const Rat& r) { return -floor_rat(-r); }

} // namespace

std::string render_finite(const RootSystem& rs, const NodeSet& subset, const PlotSpec& spec) {
  const auto arrangement = enhanced_arrangement(rs, subset);
  check_rank(arrangement, 2);
  Canvas canvas(spec);
  for (std::size_t r = 0; r < arrangement.rays.size(); ++r) {
    const auto& ray = arrangement.rays[r];
    const std::string color = kPalette[r % 8];
    const auto segment = clip_line(spec, ray.primitive[0], ray.primitive[1], Rat(0));
    if (segment.size() < 2) continue;
    canvas.line(segment[0], segment[1], color, spec.stroke_scale * 2);
    if (spec.labels) {
      const Point at{segment[0].x + (segment[1].x - segment[0].x) / 16 + Rat(1, 20),
                     segment[0].y + (segment[1].y - segment[0].y) / 16 + Rat(1, 20)};
      canvas.text(at, std::to_string(ray.multiplicities.back()), color);
    }
  }
  return canvas.finish();
}

std::string render_infinite(const RootSystem& rs, const NodeSet& subset, const PlotSpec& spec) {
  const auto arrangement = enhanced_arrangement(rs, subset);
  if (arrangement.curves.size() == 1) {
    // Number line: circles at every level m/k for listed multiplicities k.
    Canvas canvas(spec);
    const Rat mid = (spec.ymin + spec.ymax) / 2;
    canvas.line(Point{spec.xmin, mid}, Point{spec.xmax, mid}, "#333333", spec.stroke_scale);
    std::set<Rat> levels;
    for (const auto& ray : arrangement.rays)
      for (long long k : ray.multiplicities) {
        const long long a = ray.primitive[0] * k;
        for (long long m = ceil_rat(Rat(a) * spec.xmin); m <= floor_rat(Rat(a) * spec.xmax); ++m)
          levels.insert(Rat(m, a));
      }
    for (const auto& level : levels) {
      canvas.circle(Point{level, mid}, Rat(4), "#333333");
      if (spec.labels) canvas.text(Point{level - Rat(1, 25), mid - Rat(1, 4)}, rat_to_string(level), "#333333");
    }
    return canvas.finish();
  }
  check_rank(arrangement, 2);
  Canvas canvas(spec);
  for (std::size_t r = 0; r < arrangement.rays.size(); ++r) {
    const auto& ray = arrangement.rays[r];
    const std::string color = kPalette[r % 8];
    const long long a = ray.primitive[0], b = ray.primitive[1];
    std::set<Rat> levels; // dedup overlapping (1/k)Z families on the same ray
    for (long long k : ray.multiplicities) {
      const Rat lo = Rat(k) * range_min(a, b, spec);
      const Rat hi = Rat(k) * range_max(a, b, spec);
      for (long long m = ceil_rat(lo); m <= floor_rat(hi); ++m) levels.insert(Rat(m, k));
    }
    for (const auto& level : levels) {
      const auto segment = clip_line(spec, a, b, level);
      if (segment.size() == 2)
        canvas.line(segment[0], segment[1], color, spec.stroke_scale);
    }
  }
  return canvas.finish();
}

std::string render_fundamental_regions(const RootSystem& rs, const NodeSet& subset,
                                       const PlotSpec& spec, std::size_t chamber_limit) {
  const auto arrangement = enhanced_arrangement(rs, subset);
  check_rank(arrangement, 2);
  const auto graph = enumerate_chambers(rs, subset, chamber_limit);

  // Unit-box corners, in drawing order.
  const std::vector<std::vector<long long>> box = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  std::vector<std::vector<Point>> regions;
  for (const auto& chamber : graph.vertices) {
    std::vector<Point> corners;
    for (const auto& corner : box) {
      const auto image = chamber.comparison.apply(corner);
      corners.push_back(Point{Rat(image[0]), Rat(image[1])});
    }
    regions.push_back(std::move(corners));
  }

  // Grow the window so every region is visible, with a small margin.
  PlotSpec window = spec;
  Rat xmin = regions[0][0].x, xmax = xmin, ymin = regions[0][0].y, ymax = ymin;
  for (const auto& corners : regions)
    for (const auto& p : corners) {
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
  const Rat margin(1, 2);
  window.xmin = std::min(spec.xmin, Rat(xmin - margin));
  window.xmax = std::max(spec.xmax, Rat(xmax + margin));
  window.ymin = std::min(spec.ymin, Rat(ymin - margin));
  window.ymax = std::max(spec.ymax, Rat(ymax + margin));

  Canvas canvas(window);
  // Arrangement backdrop first, regions on top.
  for (std::size_t r = 0; r < arrangement.rays.size(); ++r) {
    const auto& ray = arrangement.rays[r];
    const long long a = ray.primitive[0], b = ray.primitive[1];
    std::set<Rat> levels;
    for (long long k : ray.multiplicities) {
      const Rat lo = Rat(k) * range_min(a, b, window);
      const Rat hi = Rat(k) * range_max(a, b, window);
      for (long long m = ceil_rat(lo); m <= floor_rat(hi); ++m) levels.insert(Rat(m, k));
    }
    for (const auto& level : levels) {
      const auto segment = clip_line(window, a, b, level);
      if (segment.size() == 2)
        canvas.line(segment[0], segment[1], "#cccccc", window.stroke_scale);
    }
  }
  for (std::size_t c = 0; c < regions.size(); ++c) {
    const std::string color = kPalette[c % 8];
    canvas.polygon(regions[c], color, window.stroke_scale * 2);
    if (window.labels) {
      // Label at the image of the box centre.
      Rat cx(0), cy(0);
      for (const auto& p : regions[c]) {
        cx += p.x / 4;
        cy += p.y / 4;
      }
      canvas.text(Point{cx, cy}, std::to_string(c), "#222222");
    }
  }
  return canvas.finish();
}

} // namespace flopcalc
