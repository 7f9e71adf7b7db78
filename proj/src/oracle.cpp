#include "lattice/oracle.hpp"

#include <limits>
#include <string>

namespace lattice::oracle {

namespace {

constexpr std::int64_t kMaxLoopValue = std::numeric_limits<std::int64_t>::max() / 8;

std::int64_t narrow(const Int& v, const char* what) {
  if (v > kMaxLoopValue || v < -kMaxLoopValue) {
    throw BudgetExceeded(std::string("oracle input out of range: ") + what + " = " + to_string(v));
  }
  return static_cast<std::int64_t>(v);
}

void charge(const Int& cells, std::uint64_t budget) {
  if (cells > budget) {
    throw BudgetExceeded("oracle would scan " + to_string(cells) + " cells, budget is " +
                         std::to_string(budget));
  }
}

void require_positive(const Int& a) {
  if (a < 1) throw InputError("oracle needs positive coefficients, got " + to_string(a));
}

struct IntBox {
  std::int64_t x0, x1, y0, y1;
};

IntBox lattice_box(const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                   std::uint64_t budget) {
  const Int lx = ceil(x0), hx = floor(x1), ly = ceil(y0), hy = floor(y1);
  const Int w = hx < lx ? Int(0) : Int(hx - lx + 1);
  const Int h = hy < ly ? Int(0) : Int(hy - ly + 1);
  charge(w * h, budget);
  return {narrow(lx, "x"), narrow(hx, "x"), narrow(ly, "y"), narrow(hy, "y")};
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  if (cross(a, b, p).sign() != 0) return false;
  return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

bool in_triangle(const Point& p, const Triangle& t, bool closed) {
  const int orient = cross(t.v1, t.v2, t.v3).sign();
  if (orient == 0) {
    if (!closed) return false;
    return on_closed_segment(p, t.v1, t.v2) || on_closed_segment(p, t.v2, t.v3) ||
           on_closed_segment(p, t.v3, t.v1);
  }
  const int s1 = cross(t.v1, t.v2, p).sign() * orient;
  const int s2 = cross(t.v2, t.v3, p).sign() * orient;
  const int s3 = cross(t.v3, t.v1, p).sign() * orient;
  if (closed) return s1 >= 0 && s2 >= 0 && s3 >= 0;
  return s1 > 0 && s2 > 0 && s3 > 0;
}

Int scan_triangle(const Triangle& t, std::uint64_t budget, bool closed) {
  const auto box = BoundingBox::of(t);
  const auto ib = lattice_box(box.x0, box.x1, box.y0, box.y1, budget);
  std::int64_t n = 0;
  for (std::int64_t x = ib.x0; x <= ib.x1; ++x) {
    for (std::int64_t y = ib.y0; y <= ib.y1; ++y) {
      if (in_triangle({Rational(x), Rational(y)}, t, closed)) ++n;
    }
  }
  return n;
}

}  // namespace

Int brute_halfplane_quadrant(const Int& a, const Int& b, const Int& c, std::uint64_t budget) {
  require_positive(a);
  require_positive(b);
  if (c < 0) return 0;
  charge((c / a + 1) * (c / b + 1), budget);
  const std::int64_t A = narrow(a, "a"), B = narrow(b, "b"), C = narrow(c, "c");
  std::int64_t n = 0;
  for (std::int64_t x = 0; A * x <= C; ++x) {
    for (std::int64_t y = 0; A * x + B * y <= C; ++y) ++n;
  }
  return n;
}

Int brute_triangle(const Triangle& t, std::uint64_t budget) { return scan_triangle(t, budget, true); }

Int brute_triangle_interior(const Triangle& t, std::uint64_t budget) { return scan_triangle(t, budget, false); }

Int brute_polygon(const Polygon& p, std::uint64_t budget) {
  const auto& v = p.vertices();
  Rational x0 = v[0].x, x1 = v[0].x, y0 = v[0].y, y1 = v[0].y;
  for (const auto& q : v) {
    x0 = min(x0, q.x);
    x1 = max(x1, q.x);
    y0 = min(y0, q.y);
    y1 = max(y1, q.y);
  }
  const auto ib = lattice_box(x0, x1, y0, y1, budget);
  std::int64_t n = 0;
  for (std::int64_t x = ib.x0; x <= ib.x1; ++x) {
    for (std::int64_t y = ib.y0; y <= ib.y1; ++y) {
      const Point pt{Rational(x), Rational(y)};
      bool boundary = false;
      bool inside = false;
      for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
        if (on_closed_segment(pt, v[j], v[i])) {
          boundary = true;
          break;
        }
        // Half-open crossing rule on a rightward ray.
        if ((v[i].y > pt.y) != (v[j].y > pt.y)) {
          const Rational xi = v[j].x + (pt.y - v[j].y) * (v[i].x - v[j].x) / (v[i].y - v[j].y);
          if (pt.x < xi) inside = !inside;
        }
      }
      if (boundary || inside) ++n;
    }
  }
  return n;
}

Int brute_rectangle(const Point& lo, const Point& hi, std::uint64_t budget) {
  const auto ib = lattice_box(lo.x, hi.x, lo.y, hi.y, budget);
  std::int64_t n = 0;
  for (std::int64_t x = ib.x0; x <= ib.x1; ++x) {
    for (std::int64_t y = ib.y0; y <= ib.y1; ++y) {
      const Rational rx(x), ry(y);
      if (lo.x <= rx && rx <= hi.x && lo.y <= ry && ry <= hi.y) ++n;
    }
  }
  return n;
}

Int brute_stable_right(const StableRightTriangle& t, BoundaryPart exclude, std::uint64_t budget) {
  const Triangle tri{t.right_angle, t.leg_x, t.leg_y};
  const auto box = BoundingBox::of(tri);
  const auto ib = lattice_box(box.x0, box.x1, box.y0, box.y1, budget);
  std::int64_t n = 0;
  for (std::int64_t x = ib.x0; x <= ib.x1; ++x) {
    for (std::int64_t y = ib.y0; y <= ib.y1; ++y) {
      const Point pt{Rational(x), Rational(y)};
      if (!in_triangle(pt, tri, true)) continue;
      if (has(exclude, BoundaryPart::hypotenuse) && on_closed_segment(pt, t.leg_x, t.leg_y)) continue;
      if (has(exclude, BoundaryPart::leg_x) && on_closed_segment(pt, t.right_angle, t.leg_x)) continue;
      if (has(exclude, BoundaryPart::leg_y) && on_closed_segment(pt, t.right_angle, t.leg_y)) continue;
      ++n;
    }
  }
  return n;
}

Int brute_segment(const Segment& s, std::uint64_t budget) {
  const auto ib = lattice_box(min(s.p.x, s.q.x), max(s.p.x, s.q.x), min(s.p.y, s.q.y), max(s.p.y, s.q.y), budget);
  std::int64_t n = 0;
  for (std::int64_t x = ib.x0; x <= ib.x1; ++x) {
    for (std::int64_t y = ib.y0; y <= ib.y1; ++y) {
      if (on_closed_segment({Rational(x), Rational(y)}, s.p, s.q)) ++n;
    }
  }
  return n;
}

Int brute_tetra(const TetraParams& t, std::uint64_t budget) {
  require_positive(t.a1);
  require_positive(t.a2);
  require_positive(t.a3);
  if (t.b < 0) return 0;
  charge((t.b / t.a1 + 1) * (t.b / t.a2 + 1) * (t.b / t.a3 + 1), budget);
  const std::int64_t a1 = narrow(t.a1, "a1"), a2 = narrow(t.a2, "a2"), a3 = narrow(t.a3, "a3");
  const std::int64_t b = narrow(t.b, "b");
  std::int64_t n = 0;
  for (std::int64_t x1 = 0; x1 <= b / a1; ++x1) {
    for (std::int64_t x2 = 0; x2 <= b / a2; ++x2) {
      for (std::int64_t x3 = 0; x3 <= b / a3; ++x3) {
        if (a1 * x1 + a2 * x2 + a3 * x3 <= b) ++n;
      }
    }
  }
  return n;
}

Int brute_representations(const Int& a, const Int& b, const Int& c, std::uint64_t budget) {
  require_positive(a);
  require_positive(b);
  if (c < 0) return 0;
  charge((c / a + 1) * (c / b + 1), budget);
  const std::int64_t A = narrow(a, "a"), B = narrow(b, "b"), C = narrow(c, "c");
  std::int64_t n = 0;
  for (std::int64_t x = 0; x <= C / A; ++x) {
    for (std::int64_t y = 0; y <= C / B; ++y) {
      if (A * x + B * y == C) ++n;
    }
  }
  return n;
}

Int brute_representations3(const Int& a1, const Int& a2, const Int& a3, const Int& n, std::uint64_t budget) {
  require_positive(a1);
  require_positive(a2);
  require_positive(a3);
  if (n < 0) return 0;
  charge((n / a1 + 1) * (n / a2 + 1) * (n / a3 + 1), budget);
  const std::int64_t A1 = narrow(a1, "a1"), A2 = narrow(a2, "a2"), A3 = narrow(a3, "a3"), N = narrow(n, "n");
  std::int64_t count = 0;
  for (std::int64_t x1 = 0; x1 <= N / A1; ++x1) {
    for (std::int64_t x2 = 0; x2 <= N / A2; ++x2) {
      for (std::int64_t x3 = 0; x3 <= N / A3; ++x3) {
        if (A1 * x1 + A2 * x2 + A3 * x3 == N) ++count;
      }
    }
  }
  return count;
}

std::vector<std::int64_t> brute_gaps(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw InputError("oracle needs positive generators");
  const std::int64_t limit = a * b;
  std::vector<bool> representable(static_cast<std::size_t>(limit + 1), false);
  for (std::int64_t x = 0; x * a <= limit; ++x) {
    for (std::int64_t y = 0; x * a + y * b <= limit; ++y) {
      representable[static_cast<std::size_t>(x * a + y * b)] = true;
    }
  }
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= limit; ++n) {
    if (!representable[static_cast<std::size_t>(n)]) out.push_back(n);
  }
  return out;
}

std::vector<std::int64_t> plane_value_histogram(std::int64_t a, std::int64_t b, std::int64_t cmax,
                                                std::uint64_t budget) {
  if (a < 1 || b < 1) throw InputError("oracle needs positive generators");
  if (cmax < 0) return {};
  charge(Int(cmax / a + 1) * (cmax / b + 1), budget);
  std::vector<std::int64_t> hist(static_cast<std::size_t>(cmax + 1), 0);
  for (std::int64_t x = 0; a * x <= cmax; ++x) {
    for (std::int64_t y = 0; a * x + b * y <= cmax; ++y) ++hist[static_cast<std::size_t>(a * x + b * y)];
  }
  return hist;
}

std::vector<std::int64_t> tetra_value_histogram(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                                std::int64_t bmax, std::uint64_t budget) {
  if (a1 < 1 || a2 < 1 || a3 < 1) throw InputError("oracle needs positive generators");
  if (bmax < 0) return {};
  charge(Int(bmax / a1 + 1) * (bmax / a2 + 1) * (bmax / a3 + 1), budget);
  std::vector<std::int64_t> hist(static_cast<std::size_t>(bmax + 1), 0);
  for (std::int64_t x1 = 0; a1 * x1 <= bmax; ++x1) {
    for (std::int64_t x2 = 0; a1 * x1 + a2 * x2 <= bmax; ++x2) {
      for (std::int64_t x3 = 0; a1 * x1 + a2 * x2 + a3 * x3 <= bmax; ++x3) {
        ++hist[static_cast<std::size_t>(a1 * x1 + a2 * x2 + a3 * x3)];
      }
    }
  }
  return hist;
}

}  // namespace lattice::oracle
