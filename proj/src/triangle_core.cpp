#include "lattice/triangle_core.hpp"

#include "quadrant_kernel.hpp"

#include <utility>

namespace lattice {

using detail::fits_fast;
using detail::quadrant_qr;

namespace {

struct Ordered {
  Int a;
  Int b;
};

Ordered check_generators(const QuadrantTriangle& t) {
  if (t.a < 1 || t.b < 1) {
    throw InputError("quadrant triangle needs positive coefficients, got " + to_string(t.a) + "x + " +
                     to_string(t.b) + "y <= " + to_string(t.c));
  }
  if (gcd(t.a, t.b) != 1) {
    throw InputError("quadrant triangle needs gcd(a, b) = 1, got a = " + to_string(t.a) +
                     ", b = " + to_string(t.b));
  }
  if (t.a <= t.b) return {t.a, t.b};
  return {t.b, t.a};
}

}  // namespace

LineEq::LineEq(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0 && b_ == 0) throw InputError("line with a = b = 0");
  Int g = gcd(gcd(a_, b_), c_);
  if (a_ < 0 || (a_ == 0 && b_ < 0)) g = -g;
  a_ /= g;
  b_ /= g;
  c_ /= g;
}

LineEq LineEq::through(const Point& p, const Point& q) {
  if (p == q) throw InputError("line through coincident points " + to_string(p));
  const Rational dx = q.x - p.x;
  const Rational dy = q.y - p.y;
  // dy*x - dx*y = dy*p.x - dx*p.y, scaled to integers.
  const Rational rhs = dy * p.x - dx * p.y;
  const Int scale = lcm(lcm(dx.den(), dy.den()), rhs.den());
  auto as_int = [&](const Rational& r) { return r.num() * (scale / r.den()); };
  return LineEq(as_int(dy), as_int(-dx), as_int(rhs));
}

Int count_thr(const QuadrantTriangle& t) {
  auto [a, b] = check_generators(t);
  if (t.c < 0) return 0;
  if (fits_fast(a) && fits_fast(b) && fits_fast(t.c)) {
    return Int(quadrant_qr<std::int64_t>(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                                         static_cast<std::int64_t>(t.c)));
  }
  return quadrant_qr<Int>(a, b, t.c);
}

Int count_thr_kform(const QuadrantTriangle& t) {
  auto [a, b] = check_generators(t);
  const Int& c = t.c;
  if (c < 0) return 0;
  const Int ab = a * b;
  const Int k = floor_div(c, ab);
  Int tail = 0;
  const Int last = floor_div(c - k * ab, b);
  for (Int i = 0; i <= last; ++i) tail += floor_div(c - k * ab - i * b, a) + 1;
  // -(ab/2) k^2 + ((a+b+1+2c)/2) k, kept over a common denominator of 2.
  const Rational poly = Rational(-ab, 2) * Rational(k * k) + Rational(a + b + 1 + 2 * c, 2) * Rational(k);
  if (!poly.is_integer()) throw std::logic_error("non-integral strip total");
  return poly.num() + tail;
}

BlockTrace count_thr_blocks(const QuadrantTriangle& t) {
  auto [a, b] = check_generators(t);
  const Int& c = t.c;
  if (c < 0) throw InputError("block decomposition needs c >= 0, got " + to_string(c));
  BlockTrace trace{a, b, floor_div(c, a * b), {}, {}};
  const Int ab = a * b;
  for (Int i = 0; i < trace.k; ++i) {
    // ((a+b) - (1+2i)ab + 1)/2 + c; the numerator is even since a, b are
    // not both even.
    trace.block_counts.push_back(((a + b) - (1 + 2 * i) * ab + 1) / 2 + c);
  }
  const Int ck = c - trace.k * ab;
  Int last = 0;
  for (Int i = 0; i * b <= ck; ++i) {
    trace.tail_terms.push_back(floor_div(ck - i * b, a) + 1);
    last += trace.tail_terms.back();
  }
  trace.block_counts.push_back(last);
  return trace;
}

Int rect_count(const Point& lo, const Point& hi) {
  if (hi.x < lo.x || hi.y < lo.y) {
    throw InputError("rectangle corners reversed: " + to_string(lo) + " to " + to_string(hi));
  }
  Int nx = floor(hi.x) - ceil(lo.x) + 1;
  Int ny = floor(hi.y) - ceil(lo.y) + 1;
  if (nx < 0) nx = 0;
  if (ny < 0) ny = 0;
  return nx * ny;
}

void StableRightTriangle::validate() const {
  if (leg_y.x != right_angle.x || leg_x.y != right_angle.y) {
    throw InputError("not a stable right triangle: right angle " + to_string(right_angle) +
                     ", leg vertices " + to_string(leg_x) + " and " + to_string(leg_y));
  }
}

namespace {

bool is_degenerate(const StableRightTriangle& t) {
  return t.leg_x == t.right_angle || t.leg_y == t.right_angle;
}

Int point_indicator(const Point& p) { return is_lattice_point(p) ? 1 : 0; }

}  // namespace

std::optional<RightTriangleReduction> reduce_stable_right(const StableRightTriangle& t) {
  t.validate();
  if (is_degenerate(t)) return std::nullopt;

  RightTriangleReduction red{LineEq::through(t.leg_x, t.leg_y)};
  red.flip_x = t.leg_x.x < t.right_angle.x;
  red.flip_y = t.leg_y.y < t.right_angle.y;
  auto reflect = [&](const Point& p) {
    return Point{red.flip_x ? -p.x : p.x, red.flip_y ? -p.y : p.y};
  };
  const Point corner = reflect(t.right_angle);
  const Rational width = reflect(t.leg_x).x - corner.x;   // > 0
  const Rational height = reflect(t.leg_y).y - corner.y;  // > 0

  red.lattice_corner = Point{Rational(ceil(corner.x)), Rational(ceil(corner.y))};
  // height*(x - cx) + width*(y - cy) <= width*height, rewritten around the
  // lattice corner: height*X + width*Y <= rhs.
  const Rational rhs = width * height - height * (red.lattice_corner.x - corner.x) -
                       width * (red.lattice_corner.y - corner.y);
  if (rhs.sign() < 0) {
    red.empty = true;
    return red;
  }
  const Int scale = lcm(lcm(height.den(), width.den()), rhs.den());
  auto as_int = [&](const Rational& r) { return r.num() * (scale / r.den()); };
  red.cleared = LineEq(as_int(height), as_int(width), as_int(rhs));
  red.gcd_ab = gcd(red.cleared->a(), red.cleared->b());
  // No lattice point has a*X + b*Y strictly between d*floor(c/d) and c.
  red.reduced = QuadrantTriangle{red.cleared->a() / red.gcd_ab, red.cleared->b() / red.gcd_ab,
                                 floor_div(red.cleared->c(), red.gcd_ab)};
  return red;
}

Int stable_right_count(const StableRightTriangle& t) {
  auto red = reduce_stable_right(t);
  if (!red) {
    // Zero area: the triangle is one of its legs (or a point).
    const Point& far = (t.leg_x == t.right_angle) ? t.leg_y : t.leg_x;
    return segment_count({t.right_angle, far});
  }
  if (red->empty) return 0;
  return count_thr(*red->reduced);
}

Int segment_count(const Segment& s) {
  const Point& p = s.p;
  const Point& q = s.q;
  if (p == q) return point_indicator(p);
  if (p.x == q.x) {
    if (!p.x.is_integer()) return 0;
    Int n = floor(max(p.y, q.y)) - ceil(min(p.y, q.y)) + 1;
    return n < 0 ? Int(0) : n;
  }
  if (p.y == q.y) {
    if (!p.y.is_integer()) return 0;
    Int n = floor(max(p.x, q.x)) - ceil(min(p.x, q.x)) + 1;
    return n < 0 ? Int(0) : n;
  }
  const LineEq line = LineEq::through(p, q);
  auto [g, u, v] = egcd(line.a(), line.b());
  if (floor_mod(line.c(), g) != 0) return 0;
  // Integer solutions are x = x0 + t*(b/g); b != 0 on a non-vertical line.
  const Int x0 = u * (line.c() / g);
  Int step = line.b() / g;
  if (step < 0) step = -step;
  const Rational& lo = min(p.x, q.x);
  const Rational& hi = max(p.x, q.x);
  const Int t_lo = ceil((lo - Rational(x0)) / Rational(step));
  const Int t_hi = floor((hi - Rational(x0)) / Rational(step));
  Int n = t_hi - t_lo + 1;
  return n < 0 ? Int(0) : n;
}

Int stable_right_count_variant(const StableRightTriangle& t, BoundaryPart exclude) {
  t.validate();
  const Int closed = stable_right_count(t);
  if (exclude == BoundaryPart::none) return closed;

  const bool hyp = has(exclude, BoundaryPart::hypotenuse);
  const bool lx = has(exclude, BoundaryPart::leg_x);
  const bool ly = has(exclude, BoundaryPart::leg_y);

  if (is_degenerate(t)) {
    // Every boundary part lies inside the closed triangle, which is itself a
    // segment (or a point); remove the union of the excluded parts.
    const Point& A = t.right_angle;
    Int removed = 0;
    if (t.leg_x == A && t.leg_y == A) {
      removed = point_indicator(A);
    } else {
      const bool x_degenerate = t.leg_x == A;
      // The nondegenerate leg coincides with the hypotenuse.
      const bool long_part = hyp || (x_degenerate ? ly : lx);
      const bool point_part = x_degenerate ? lx : ly;
      if (long_part) {
        removed = closed;
      } else if (point_part) {
        removed = point_indicator(A);
      }
    }
    return closed - removed;
  }

  // Inclusion-exclusion: sides meet pairwise only at the vertices.
  Int removed = 0;
  if (hyp) removed += segment_count({t.leg_x, t.leg_y});
  if (lx) removed += segment_count({t.right_angle, t.leg_x});
  if (ly) removed += segment_count({t.right_angle, t.leg_y});
  if (hyp && lx) removed -= point_indicator(t.leg_x);
  if (hyp && ly) removed -= point_indicator(t.leg_y);
  if (lx && ly) removed -= point_indicator(t.right_angle);
  return closed - removed;
}

}  // namespace lattice
