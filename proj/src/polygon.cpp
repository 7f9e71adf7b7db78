#include "lattice/polygon.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>
#include <string>

namespace lattice {

BoundingBox BoundingBox::of(const Triangle& t) {
  return {min(min(t.v1.x, t.v2.x), t.v3.x), max(max(t.v1.x, t.v2.x), t.v3.x),
          min(min(t.v1.y, t.v2.y), t.v3.y), max(max(t.v1.y, t.v2.y), t.v3.y)};
}

std::string_view to_string(BoxCase c) {
  switch (c) {
    case BoxCase::degenerate:
      return "degenerate";
    case BoxCase::three_corners:
      return "three_corners";
    case BoxCase::two_adjacent:
      return "two_adjacent";
    case BoxCase::one_corner:
      return "one_corner";
    case BoxCase::two_opposite:
      return "two_opposite";
  }
  return "unknown";
}

namespace {

std::array<Point, 3> vertices_of(const Triangle& t) { return {t.v1, t.v2, t.v3}; }

bool is_corner(const Point& p, const BoundingBox& box) {
  return (p.x == box.x0 || p.x == box.x1) && (p.y == box.y0 || p.y == box.y1);
}

bool axis_parallel(const Point& p, const Point& q) { return p.x == q.x || p.y == q.y; }

Int count_degenerate(const Triangle& t) {
  auto v = vertices_of(t);
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return segment_count({*lo, *hi});
}

/// The lattice points of the bounding box that lie outside the closed
/// triangle beyond edge (p, q), as a stable right triangle with its
/// hypotenuse on the edge.
StableRightTriangle cutoff_region(const Point& p, const Point& q, const Point& opposite) {
  const Point k1{q.x, p.y};
  const Point k2{p.x, q.y};
  const int side = cross(p, q, opposite).sign();
  const Point& k = (cross(p, q, k1).sign() == -side) ? k1 : k2;
  // Exactly one of p, q shares k's y coordinate.
  const Point& along_x = (p.y == k.y) ? p : q;
  const Point& along_y = (p.y == k.y) ? q : p;
  return StableRightTriangle{k, along_x, along_y};
}

/// #box minus the corner regions cut off by every oblique edge. Valid when
/// those regions tile box \ triangle, i.e. for every non-degenerate
/// triangle except opposite-corner triangles without an axis-parallel edge.
void box_minus_cutoffs(const Triangle& t, TriangleCountTrace& trace) {
  const auto box = BoundingBox::of(t);
  trace.box_count = rect_count({box.x0, box.y0}, {box.x1, box.y1});
  trace.count = trace.box_count;
  auto v = vertices_of(t);
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % 3];
    if (axis_parallel(p, q)) continue;
    const Int removed =
        stable_right_count_variant(cutoff_region(p, q, v[(i + 2) % 3]), BoundaryPart::hypotenuse);
    trace.cutoffs.push_back(removed);
    trace.count -= removed;
  }
}

}  // namespace

BoxCase classify(const Triangle& t) {
  if (cross(t.v1, t.v2, t.v3).sign() == 0) return BoxCase::degenerate;
  const auto box = BoundingBox::of(t);
  std::vector<Point> corners;
  for (const auto& p : vertices_of(t)) {
    if (is_corner(p, box)) corners.push_back(p);
  }
  switch (corners.size()) {
    case 3:
      return BoxCase::three_corners;
    case 2:
      return axis_parallel(corners[0], corners[1]) ? BoxCase::two_adjacent : BoxCase::two_opposite;
    case 1:
      return BoxCase::one_corner;
    default:
      // Three vertices touching four box sides force a corner.
      throw std::logic_error("triangle with no vertex on a bounding-box corner");
  }
}

TriangleCountTrace triangle_count_traced(const Triangle& t) {
  TriangleCountTrace trace;
  trace.box_case = classify(t);
  switch (trace.box_case) {
    case BoxCase::degenerate:
      trace.count = count_degenerate(t);
      return trace;
    case BoxCase::three_corners: {
      auto v = vertices_of(t);
      for (std::size_t i = 0; i < 3; ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % 3];
        const Point& c = v[(i + 2) % 3];
        if (a.x == b.x && a.y == c.y) {
          trace.count = stable_right_count({a, c, b});
          return trace;
        }
        if (a.x == c.x && a.y == b.y) {
          trace.count = stable_right_count({a, b, c});
          return trace;
        }
      }
      throw std::logic_error("three-corner triangle without a right angle");
    }
    case BoxCase::two_adjacent:
    case BoxCase::one_corner:
      box_minus_cutoffs(t, trace);
      return trace;
    case BoxCase::two_opposite:
      break;
  }

  auto v = vertices_of(t);
  if (axis_parallel(v[0], v[1]) || axis_parallel(v[1], v[2]) || axis_parallel(v[2], v[0])) {
    box_minus_cutoffs(t, trace);
    return trace;
  }
  // All abscissas differ. Cut at the middle one: both halves get a vertical
  // edge, and the cut itself is counted by both.
  std::sort(v.begin(), v.end());
  const Point& left = v[0];
  const Point& mid = v[1];
  const Point& right = v[2];
  const Rational cut_y = left.y + (right.y - left.y) * (mid.x - left.x) / (right.x - left.x);
  const Point foot{mid.x, cut_y};
  trace.cut = Segment{mid, foot};
  trace.cut_points = segment_count(*trace.cut);
  trace.count = -trace.cut_points;
  for (const Triangle& half : {Triangle{left, mid, foot}, Triangle{mid, right, foot}}) {
    TriangleCountTrace sub;
    box_minus_cutoffs(half, sub);
    trace.halves.push_back(sub.count);
    trace.count += sub.count;
  }
  return trace;
}

Int triangle_count(const Triangle& t) { return triangle_count_traced(t).count; }

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
  return cross(a, b, p).sign() == 0 && min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) &&
         min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

/// Closed segments [a, b] and [c, d] share at least one point.
bool segments_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int d1 = cross(a, b, c).sign();
  const int d2 = cross(a, b, d).sign();
  const int d3 = cross(c, d, a).sign();
  const int d4 = cross(c, d, b).sign();
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(c, a, b) || on_segment(d, a, b) || on_segment(a, c, d) || on_segment(b, c, d);
}

std::string edge_name(const std::vector<Point>& v, std::size_t i) {
  return "edge " + std::to_string(i) + " " + to_string(v[i]) + "-" + to_string(v[(i + 1) % v.size()]);
}

void check_simple(const std::vector<Point>& v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[(i + 1) % n]) {
      throw NonSimplePolygon("polygon is not simple: repeated vertex " + to_string(v[i]) + " at index " +
                             std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& a = v[i];
      const Point& b = v[(i + 1) % n];
      const Point& c = v[j];
      const Point& d = v[(j + 1) % n];
      bool bad = false;
      if (j == i + 1 || (i == 0 && j == n - 1)) {
        // Adjacent edges share one vertex; they may not fold back over it.
        const Point& shared = (j == i + 1) ? b : a;
        const Point& e1 = (j == i + 1) ? a : b;
        const Point& e2 = (j == i + 1) ? d : c;
        if (cross(shared, e1, e2).sign() == 0) {
          const Rational dot = (e1.x - shared.x) * (e2.x - shared.x) + (e1.y - shared.y) * (e2.y - shared.y);
          bad = dot.sign() > 0;
        }
        if (n == 3 && !bad) bad = cross(v[0], v[1], v[2]).sign() == 0;
      } else {
        bad = segments_meet(a, b, c, d);
      }
      if (bad) {
        throw NonSimplePolygon("polygon is not simple: " + edge_name(v, i) + " intersects " + edge_name(v, j));
      }
    }
  }
}

Rational twice_signed_area(const std::vector<Point>& v) {
  Rational s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& p = v[i];
    const Point& q = v[(i + 1) % v.size()];
    s += p.x * q.y - q.x * p.y;
  }
  return s;
}

bool in_closed_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  return cross(a, b, p).sign() >= 0 && cross(b, c, p).sign() >= 0 && cross(c, a, p).sign() >= 0;
}

}  // namespace

Polygon::Polygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) {
    throw InputError("polygon needs at least 3 vertices, got " + std::to_string(vertices_.size()));
  }
  check_simple(vertices_);
  if (twice_signed_area(vertices_).sign() < 0) std::reverse(vertices_.begin(), vertices_.end());
}

Rational Polygon::area() const { return twice_signed_area(vertices_) / Rational(2); }

Triangulation triangulate_indices(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<std::size_t> ring(v.size());
  for (std::size_t i = 0; i < ring.size(); ++i) ring[i] = i;

  Triangulation out;
  while (ring.size() > 3) {
    const std::size_t m = ring.size();
    bool clipped = false;
    for (std::size_t k = 0; k < m && !clipped; ++k) {
      const std::size_t ip = ring[(k + m - 1) % m];
      const std::size_t ic = ring[k];
      const std::size_t in = ring[(k + 1) % m];
      if (cross(v[ip], v[ic], v[in]).sign() <= 0) continue;
      bool blocked = false;
      for (std::size_t other : ring) {
        if (other == ip || other == ic || other == in) continue;
        if (in_closed_triangle(v[other], v[ip], v[ic], v[in])) {
          blocked = true;
          break;
        }
      }
      if (blocked) continue;
      out.triangles.push_back({ip, ic, in});
      out.diagonals.emplace_back(ip, in);
      ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(k));
      clipped = true;
    }
    if (!clipped) throw std::logic_error("ear clipping found no ear");
  }
  out.triangles.push_back({ring[0], ring[1], ring[2]});
  return out;
}

std::vector<Triangle> triangulate(const Polygon& p) {
  const auto& v = p.vertices();
  std::vector<Triangle> out;
  for (const auto& [a, b, c] : triangulate_indices(p).triangles) out.push_back({v[a], v[b], v[c]});
  return out;
}

Int polygon_count(const Polygon& p) {
  const auto& v = p.vertices();
  const auto tri = triangulate_indices(p);

  Int total = 0;
  std::vector<std::size_t> incidence(v.size(), 0);
  for (const auto& [a, b, c] : tri.triangles) {
    total += triangle_count({v[a], v[b], v[c]});
    ++incidence[a];
    ++incidence[b];
    ++incidence[c];
  }
  // Relative interior of a diagonal lies in exactly two triangles.
  for (const auto& [a, b] : tri.diagonals) {
    Int relint = segment_count({v[a], v[b]});
    if (is_lattice_point(v[a])) --relint;
    if (is_lattice_point(v[b])) --relint;
    total -= relint;
  }
  // A vertex lies in every triangle incident to it.
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_lattice_point(v[i])) total -= Int(incidence[i] - 1);
  }
  return total;
}

PickAudit pick_audit(const Polygon& p) {
  const auto& v = p.vertices();
  for (const auto& q : v) {
    if (!is_lattice_point(q)) throw InputError("Pick audit needs integral vertices, got " + to_string(q));
  }
  PickAudit audit;
  audit.area = p.area();
  audit.boundary = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point& a = v[i];
    const Point& b = v[(i + 1) % v.size()];
    audit.boundary += gcd((b.x - a.x).num(), (b.y - a.y).num());
  }
  audit.interior = polygon_count(p) - audit.boundary;
  audit.holds = audit.area == Rational(audit.interior) + Rational(audit.boundary, 2) - Rational(1);
  return audit;
}

Polygon read_polygon(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string xs, ys, extra;
    if (!(fields >> xs >> ys) || (fields >> extra)) {
      throw InputError("line " + std::to_string(lineno) + ": expected 'x y', got '" + line + "'");
    }
    pts.push_back({parse_rational(xs), parse_rational(ys)});
  }
  return Polygon(std::move(pts));
}

}  // namespace lattice
