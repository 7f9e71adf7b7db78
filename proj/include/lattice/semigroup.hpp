// Two-generator numerical semigroups <a, b>.

#ifndef LATTICE_SEMIGROUP_HPP
#define LATTICE_SEMIGROUP_HPP

#include "lattice/exact.hpp"

#include <vector>

namespace lattice {

/// The set { x*a + y*b : x, y >= 0 } for coprime a, b >= 1.
///
/// Invariants are fixed at construction: the Frobenius number is
/// a*b - a - b and the genus (number of gaps) is (a-1)(b-1)/2.
class TwoGenSemigroup {
 public:
  /// Throws InputError unless a, b >= 1 and gcd(a, b) == 1.
  TwoGenSemigroup(Int a, Int b);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  /// Largest gap; -1 when one generator is 1 (no gaps at all).
  const Int& frobenius() const { return frobenius_; }
  const Int& genus() const { return genus_; }

  /// Apery set with respect to a generator s: entry i is the least element
  /// congruent to i modulo s. Throws InputError if s is not a or b.
  std::vector<Int> apery(const Int& s) const;

  /// Every non-negative integer outside the semigroup, ascending.
  std::vector<Int> gaps() const;

  bool contains(const Int& n) const;

  /// #{ n in S : 0 <= n <= c }.
  Int count_upto(const Int& c) const;

  /// Number of (x, y) >= 0 with a*x + b*y == c.
  Int denumerant(const Int& c) const;

  /// The pair (a', b') used by the closed-form denumerant, taken in
  /// [1, b] and [1, a]: a*a' == -c (mod b) and b*b' == -c (mod a).
  struct PopoviciuResidues {
    Int a_prime;
    Int b_prime;
  };
  PopoviciuResidues popoviciu_residues(const Int& c) const;

 private:
  Int a_;
  Int b_;
  Int frobenius_;
  Int genus_;
};

/// Number of non-negative solutions of a*x + b*y == c for coprime a, b >= 1.
Int denumerant2(const Int& a, const Int& b, const Int& c);

}  // namespace lattice

#endif  // LATTICE_SEMIGROUP_HPP
