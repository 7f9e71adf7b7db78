// Lattice points of the tetrahedron {x >= 0, a1*x1 + a2*x2 + a3*x3 <= b},
// counted slice by slice, and the three-generator denumerant.

#ifndef LATTICE_TETRA_HPP
#define LATTICE_TETRA_HPP

#include "lattice/exact.hpp"

#include <cstddef>

namespace lattice {

struct TetraParams {
  Int a1;
  Int a2;
  Int a3;
  Int b;
};

struct TetraTrace {
  Int count;
  std::size_t slice_axis = 2;  // 0-based index of the generator sliced along
  Int slices;                  // number of non-empty slices
};

/// Any positive generators in any order; b < 0 gives 0.
/// Throws InputError if a generator is not positive.
Int tetra_count(const TetraParams& t);
TetraTrace tetra_count_traced(const TetraParams& t);

/// Summed closed form over slices x3 = i for the case gcd(a1, a2) == 1,
/// written out in terms of q_i and r_i from b - a3*i = q_i*a1*a2 + r_i.
/// Throws InputError when a generator is not positive or gcd(a1, a2) != 1.
Int tetra_count_closed_form(const TetraParams& t);

/// Number of non-negative (x1, x2, x3) with a1*x1 + a2*x2 + a3*x3 == n.
Int denumerant3(const Int& a1, const Int& a2, const Int& a3, const Int& n);

}  // namespace lattice

#endif  // LATTICE_TETRA_HPP
