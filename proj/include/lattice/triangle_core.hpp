// Lattice-point counts for quadrant triangles {x, y >= 0, a*x + b*y <= c},
// axis-parallel rectangles and right triangles, and segments.

#ifndef LATTICE_TRIANGLE_CORE_HPP
#define LATTICE_TRIANGLE_CORE_HPP

#include "lattice/exact.hpp"

#include <optional>
#include <vector>

namespace lattice {

/// a*x + b*y = c with integer coefficients, gcd(a, b, c) == 1 and the first
/// nonzero of (a, b) positive.
class LineEq {
 public:
  /// Normalizes; throws InputError when a == b == 0.
  LineEq(Int a, Int b, Int c);

  /// Line through two distinct rational points.
  static LineEq through(const Point& p, const Point& q);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  friend bool operator==(const LineEq&, const LineEq&) = default;

 private:
  Int a_;
  Int b_;
  Int c_;
};

/// {(x, y) in Z^2, x, y >= 0 : a*x + b*y <= c} with a, b >= 1 coprime.
struct QuadrantTriangle {
  Int a;
  Int b;
  Int c;
};

/// Decomposition of a quadrant triangle into the vertical strips
/// i*b <= x < (i+1)*b (generators ordered so that a <= b).
struct BlockTrace {
  Int a;
  Int b;
  Int k;
  std::vector<Int> block_counts;  // sizes of B_0 .. B_k
  std::vector<Int> tail_terms;    // summands of the last block
};

/// Closed count of the quadrant triangle via the Euclidean form
/// c = q*ab + r. Returns 0 for c < 0. Throws InputError if a or b is not
/// positive, or if gcd(a, b) != 1.
Int count_thr(const QuadrantTriangle& t);

/// Same count through the k = floor(c / ab) form.
Int count_thr_kform(const QuadrantTriangle& t);

/// Strip-by-strip decomposition. Requires c >= 0 in addition to the
/// preconditions of count_thr.
BlockTrace count_thr_blocks(const QuadrantTriangle& t);

/// Closed axis-parallel rectangle [lo.x, hi.x] x [lo.y, hi.y].
/// Throws InputError when lo > hi in either coordinate.
Int rect_count(const Point& lo, const Point& hi);

/// Right triangle whose legs are parallel to the axes. The right angle is at
/// `right_angle`; `leg_y` shares its x coordinate and `leg_x` its y coordinate.
struct StableRightTriangle {
  Point right_angle;
  Point leg_x;
  Point leg_y;

  /// Throws InputError when the legs are not axis-parallel.
  void validate() const;
};

/// How a non-degenerate stable right triangle was reduced to a quadrant
/// triangle.
struct RightTriangleReduction {
  LineEq hypotenuse;          // hypotenuse of the input, in input coordinates
  bool flip_x = false;        // reflected x -> -x
  bool flip_y = false;        // reflected y -> -y
  Point lattice_corner{};     // rounded-up right-angle corner (after reflection)
  bool empty = false;         // rounded corner lies beyond the hypotenuse
  std::optional<LineEq> cleared{};            // a*X + b*Y <= c relative to the corner
  Int gcd_ab = 1;                             // gcd of the cleared a, b
  std::optional<QuadrantTriangle> reduced{};  // after dividing out gcd_ab
};

/// Empty optional for zero-area input.
std::optional<RightTriangleReduction> reduce_stable_right(const StableRightTriangle& t);

/// Closed count of a stable right triangle (degenerate input allowed).
Int stable_right_count(const StableRightTriangle& t);

struct Segment {
  Point p;
  Point q;
};

/// Lattice points on the closed segment; a degenerate segment counts its
/// single point when it is integral.
Int segment_count(const Segment& s);

/// Boundary parts of a stable right triangle, as a bit set.
enum class BoundaryPart : unsigned {
  none = 0,
  hypotenuse = 1u << 0,
  leg_x = 1u << 1,  // right angle to leg_x vertex
  leg_y = 1u << 2,  // right angle to leg_y vertex
  all = 7,
};

constexpr BoundaryPart operator|(BoundaryPart l, BoundaryPart r) {
  return static_cast<BoundaryPart>(static_cast<unsigned>(l) | static_cast<unsigned>(r));
}
constexpr bool has(BoundaryPart set, BoundaryPart part) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(part)) != 0;
}

/// Closed count minus the lattice points lying on any excluded boundary part.
Int stable_right_count_variant(const StableRightTriangle& t, BoundaryPart exclude);

}  // namespace lattice

#endif  // LATTICE_TRIANGLE_CORE_HPP
