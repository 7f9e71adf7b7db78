// Brute-force enumerators. They scan boxes of candidate lattice points and
// test membership with comparisons and exact sign tests only, so they share
// no formula with the counters they check.

#ifndef LATTICE_ORACLE_HPP
#define LATTICE_ORACLE_HPP

#include "lattice/exact.hpp"
#include "lattice/polygon.hpp"
#include "lattice/tetra.hpp"
#include "lattice/triangle_core.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lattice::oracle {

/// Largest number of candidate lattice points an enumerator will scan.
inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// #{(x, y) >= 0 : a*x + b*y <= c} by a double loop; a, b >= 1.
Int brute_halfplane_quadrant(const Int& a, const Int& b, const Int& c,
                             std::uint64_t budget = kDefaultCellBudget);

/// Closed triangle (boundary included); degenerate triangles allowed.
Int brute_triangle(const Triangle& t, std::uint64_t budget = kDefaultCellBudget);
/// Open triangle: boundary excluded.
Int brute_triangle_interior(const Triangle& t, std::uint64_t budget = kDefaultCellBudget);

/// Closed polygon: crossing parity plus an exact on-boundary test.
Int brute_polygon(const Polygon& p, std::uint64_t budget = kDefaultCellBudget);

/// Closed axis-parallel rectangle.
Int brute_rectangle(const Point& lo, const Point& hi, std::uint64_t budget = kDefaultCellBudget);

/// Stable right triangle minus the lattice points on the excluded sides.
Int brute_stable_right(const StableRightTriangle& t, BoundaryPart exclude,
                       std::uint64_t budget = kDefaultCellBudget);

Int brute_segment(const Segment& s, std::uint64_t budget = kDefaultCellBudget);

/// a_i >= 1; triple loop over x_i <= b / a_i.
Int brute_tetra(const TetraParams& t, std::uint64_t budget = kDefaultCellBudget);

/// #{(x, y) >= 0 : a*x + b*y == c}.
Int brute_representations(const Int& a, const Int& b, const Int& c,
                          std::uint64_t budget = kDefaultCellBudget);
/// #{(x1, x2, x3) >= 0 : a1*x1 + a2*x2 + a3*x3 == n}.
Int brute_representations3(const Int& a1, const Int& a2, const Int& a3, const Int& n,
                           std::uint64_t budget = kDefaultCellBudget);

/// Non-negative integers up to a*b that are not x*a + y*b, by sieving.
std::vector<std::int64_t> brute_gaps(std::int64_t a, std::int64_t b);

/// histogram[v] = #{(x, y) >= 0 : a*x + b*y == v} for 0 <= v <= cmax.
std::vector<std::int64_t> plane_value_histogram(std::int64_t a, std::int64_t b, std::int64_t cmax,
                                                std::uint64_t budget = kDefaultCellBudget);

/// histogram[v] = #{x >= 0 : a1*x1 + a2*x2 + a3*x3 == v} for 0 <= v <= bmax,
/// from a single enumeration of the tetrahedron with right-hand side bmax.
std::vector<std::int64_t> tetra_value_histogram(std::int64_t a1, std::int64_t a2, std::int64_t a3,
                                                std::int64_t bmax,
                                                std::uint64_t budget = kDefaultCellBudget);

}  // namespace lattice::oracle

#endif  // LATTICE_ORACLE_HPP
