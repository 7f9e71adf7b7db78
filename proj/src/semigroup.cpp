#include "lattice/semigroup.hpp"

#include <algorithm>

namespace lattice {

namespace {

/// Inverse of x modulo m (m >= 1, gcd(x, m) == 1), in [0, m).
Int mod_inverse(const Int& x, const Int& m) {
  auto [g, u, v] = egcd(x, m);
  (void)v;
  if (g != 1) throw InputError("no inverse of " + to_string(x) + " modulo " + to_string(m));
  return floor_mod(u, m);
}

}  // namespace

TwoGenSemigroup::TwoGenSemigroup(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ < 1 || b_ < 1) {
    throw InputError("semigroup generators must be positive, got <" + to_string(a_) + ", " +
                     to_string(b_) + ">");
  }
  if (gcd(a_, b_) != 1) {
    throw InputError("semigroup generators must be coprime, got <" + to_string(a_) + ", " +
                     to_string(b_) + ">");
  }
  frobenius_ = a_ * b_ - a_ - b_;
  genus_ = (a_ - 1) * (b_ - 1) / 2;
}

std::vector<Int> TwoGenSemigroup::apery(const Int& s) const {
  if (s != a_ && s != b_) {
    throw InputError("Apery set requested for " + to_string(s) + ", which is not a generator of <" +
                     to_string(a_) + ", " + to_string(b_) + ">");
  }
  const Int& other = (s == a_) ? b_ : a_;
  // {0, other, 2*other, ..., (s-1)*other} hits every residue mod s exactly once.
  auto n = static_cast<std::size_t>(s);
  std::vector<Int> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    Int value = other * j;
    w[static_cast<std::size_t>(floor_mod(value, s))] = value;
  }
  return w;
}

std::vector<Int> TwoGenSemigroup::gaps() const {
  // Use the smaller generator as modulus: fewer residue classes to scan.
  const Int& m = std::min(a_, b_);
  std::vector<Int> out;
  auto w = apery(m);
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Int g = i; g < w[i]; g += m) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool TwoGenSemigroup::contains(const Int& n) const {
  if (n < 0) return false;
  if (n > frobenius_) return true;
  // Least element in the class of n mod a is b * (n * b^{-1} mod a).
  Int j = floor_mod(n * mod_inverse(b_ % a_, a_), a_);
  return n >= j * b_;
}

Int TwoGenSemigroup::count_upto(const Int& c) const {
  if (c < 0) return 0;
  if (c >= frobenius_) return c + 1 - genus_;
  Int total = 0;
  // Residue class of j*b contributes j*b, j*b + a, ... up to c.
  for (Int j = 0; j < a_; ++j) {
    Int w = j * b_;
    if (w > c) break;
    total += (c - w) / a_ + 1;
  }
  return total;
}

TwoGenSemigroup::PopoviciuResidues TwoGenSemigroup::popoviciu_residues(const Int& c) const {
  auto lift = [](Int r, const Int& m) { return r == 0 ? m : r; };
  Int a_prime = lift(floor_mod(-c * mod_inverse(a_ % b_, b_), b_), b_);
  Int b_prime = lift(floor_mod(-c * mod_inverse(b_ % a_, a_), a_), a_);
  return {a_prime, b_prime};
}

Int TwoGenSemigroup::denumerant(const Int& c) const {
  if (c < 0) return 0;
  if (a_ == 1 && b_ == 1) return c + 1;
  if (a_ == 1) return c / b_ + 1;
  if (b_ == 1) return c / a_ + 1;
  auto [a_prime, b_prime] = popoviciu_residues(c);
  Int value = (c + a_ * a_prime + b_ * b_prime) / (a_ * b_) - 1;
  return value;
}

Int denumerant2(const Int& a, const Int& b, const Int& c) { return TwoGenSemigroup(a, b).denumerant(c); }

}  // namespace lattice
