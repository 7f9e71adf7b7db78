#include "lattice/tetra.hpp"

#include "lattice/triangle_core.hpp"
#include "quadrant_kernel.hpp"

#include <array>
#include <cstdint>
#include <utility>

namespace lattice {

namespace {

void check_generators(const TetraParams& t) {
  for (const Int* a : {&t.a1, &t.a2, &t.a3}) {
    if (*a < 1) throw InputError("tetrahedron generators must be positive, got " + to_string(*a));
  }
}

}  // namespace

TetraTrace tetra_count_traced(const TetraParams& t) {
  check_generators(t);
  TetraTrace trace{0, 2, 0};
  if (t.b < 0) return trace;

  std::array<const Int*, 3> gens{&t.a1, &t.a2, &t.a3};
  // Slice along the largest generator: fewest slices.
  std::size_t axis = 2;
  for (std::size_t i = 0; i < 3; ++i) {
    if (*gens[i] > *gens[axis]) axis = i;
  }
  trace.slice_axis = axis;
  const Int& step = *gens[axis];
  const Int& p = *gens[(axis + 1) % 3];
  const Int& q = *gens[(axis + 2) % 3];
  const Int d = gcd(p, q);
  const Int pr = p / d;
  const Int qr = q / d;

  // The running total is at most (b+1)^3, which fits in int64_t below 2^20.
  if (t.b < (std::int64_t{1} << 20) && detail::fits_fast(step) && detail::fits_fast(pr) && detail::fits_fast(qr)) {
    auto lo = static_cast<std::int64_t>(pr);
    auto hi = static_cast<std::int64_t>(qr);
    if (lo > hi) std::swap(lo, hi);
    const auto s = static_cast<std::int64_t>(step);
    const auto g = static_cast<std::int64_t>(d);
    std::int64_t total = 0;
    std::int64_t slices = 0;
    for (auto rest = static_cast<std::int64_t>(t.b); rest >= 0; rest -= s) {
      total += detail::quadrant_qr<std::int64_t>(lo, hi, rest / g);
      ++slices;
    }
    trace.count = total;
    trace.slices = slices;
    return trace;
  }
  for (Int rest = t.b; rest >= 0; rest -= step) {
    trace.count += count_thr({pr, qr, floor_div(rest, d)});
    ++trace.slices;
  }
  return trace;
}

Int tetra_count(const TetraParams& t) { return tetra_count_traced(t).count; }

Int tetra_count_closed_form(const TetraParams& t) {
  check_generators(t);
  if (gcd(t.a1, t.a2) != 1) {
    throw InputError("closed form needs gcd(a1, a2) = 1, got a1 = " + to_string(t.a1) + ", a2 = " +
                     to_string(t.a2));
  }
  if (t.b < 0) return 0;
  const Int ab = t.a1 * t.a2;
  Int total = 0;
  for (Int i = 0; i <= floor_div(t.b, t.a3); ++i) {
    const Int ci = t.b - t.a3 * i;
    const Int qi = floor_div(ci, ab);
    const Int ri = ci - qi * ab;
    const Rational poly = Rational(-ab, 2) * Rational(qi * qi) + Rational(t.a1 + t.a2 + 1 + 2 * ci, 2) * Rational(qi);
    total += poly.num();
    for (Int j = 0; j <= floor_div(ri, t.a2); ++j) total += floor_div(ri - j * t.a2, t.a1) + 1;
  }
  return total;
}

Int denumerant3(const Int& a1, const Int& a2, const Int& a3, const Int& n) {
  if (n < 0) {
    check_generators({a1, a2, a3, n});
    return 0;
  }
  return tetra_count({a1, a2, a3, n}) - tetra_count({a1, a2, a3, n - 1});
}

}  // namespace lattice
