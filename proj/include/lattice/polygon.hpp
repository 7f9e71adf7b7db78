// Lattice-point counts for arbitrary rational triangles and simple polygons.

#ifndef LATTICE_POLYGON_HPP
#define LATTICE_POLYGON_HPP

#include "lattice/exact.hpp"
#include "lattice/triangle_core.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace lattice {

struct Triangle {
  Point v1;
  Point v2;
  Point v3;
};

struct BoundingBox {
  Rational x0;
  Rational x1;
  Rational y0;
  Rational y1;

  static BoundingBox of(const Triangle& t);
};

/// How many triangle vertices sit on corners of the tight bounding box.
enum class BoxCase {
  degenerate,     // zero area
  three_corners,  // the triangle is a stable right triangle
  two_adjacent,   // one triangle edge is a side of the box
  one_corner,
  two_opposite,   // two vertices on a diagonal of the box
};

std::string_view to_string(BoxCase c);

BoxCase classify(const Triangle& t);

struct TriangleCountTrace {
  BoxCase box_case = BoxCase::degenerate;
  Int count;
  Int box_count;              // lattice points of the bounding box
  std::vector<Int> cutoffs;   // hypotenuse-exclusive corner regions removed
  // Set when an opposite-corner triangle is cut along a vertical segment.
  std::optional<Segment> cut;
  Int cut_points;
  std::vector<Int> halves;
};

/// Closed count of any triangle, including degenerate ones.
Int triangle_count(const Triangle& t);
TriangleCountTrace triangle_count_traced(const Triangle& t);

/// Raised for self-intersecting polygon input.
class NonSimplePolygon : public InputError {
 public:
  using InputError::InputError;
};

/// Simple polygon with at least three vertices, stored counterclockwise.
class Polygon {
 public:
  /// Throws NonSimplePolygon naming the first offending pair of edges, or
  /// InputError for fewer than three vertices.
  explicit Polygon(std::vector<Point> vertices);

  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Positive area (shoelace).
  Rational area() const;

 private:
  std::vector<Point> vertices_;
};

struct Triangulation {
  std::vector<std::array<std::size_t, 3>> triangles;  // vertex indices, counterclockwise
  std::vector<std::pair<std::size_t, std::size_t>> diagonals;
};

/// Ear clipping with exact orientation tests; n - 2 triangles.
Triangulation triangulate_indices(const Polygon& p);
std::vector<Triangle> triangulate(const Polygon& p);

/// Closed count of a simple polygon.
Int polygon_count(const Polygon& p);

struct PickAudit {
  Rational area;
  Int interior;
  Int boundary;
  bool holds = false;
};

/// Requires integral vertices; throws InputError otherwise.
PickAudit pick_audit(const Polygon& p);

/// One vertex per line as "x y" in the rational text format. Blank lines and
/// lines starting with '#' are skipped.
Polygon read_polygon(std::istream& in);

}  // namespace lattice

#endif  // LATTICE_POLYGON_HPP
