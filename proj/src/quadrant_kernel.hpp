// Shared integer kernel for the quadrant-triangle count. Internal header.

#ifndef LATTICE_QUADRANT_KERNEL_HPP
#define LATTICE_QUADRANT_KERNEL_HPP

#include "lattice/exact.hpp"

#include <cstdint>

namespace lattice::detail {

// Inputs below this bound keep every intermediate of the quadrant formula
// inside int64_t; anything larger goes through Int.
constexpr std::int64_t kFastBound = std::int64_t{1} << 24;

inline bool fits_fast(const Int& v) { return v > -kFastBound && v < kFastBound; }

/// Quadrant count for coprime a, b >= 1 and c >= 0 through the Euclidean
/// division c = q*ab + r. The tail has floor(r/b) + 1 <= a terms, so callers
/// pass the smaller generator as a.
template <class I>
I quadrant_qr(const I& a, const I& b, const I& c) {
  const I ab = a * b;
  const I q = c / ab;
  const I r = c - q * ab;
  I tail = 0;
  const I last = r / b;
  for (I i = 0; i <= last; ++i) tail += (r - i * b) / a + 1;
  // Full strips contribute -(ab/2)q^2 + ((a+b+1+2c)/2)q; the doubled value is even.
  I twice_full = -ab * q * q + (a + b + 1 + 2 * c) * q;
  return twice_full / 2 + tail;
}

}  // namespace lattice::detail

#endif  // LATTICE_QUADRANT_KERNEL_HPP
