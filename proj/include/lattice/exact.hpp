// Exact integer and rational arithmetic used by every counter in the library.
// Nothing in lattice/ touches floating point.

#ifndef LATTICE_EXACT_HPP
#define LATTICE_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lattice {

using Int = boost::multiprecision::cpp_int;

/// Raised for malformed or out-of-domain user input. The message names the
/// offending value so the CLI can print it verbatim.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// floor(n / d); rounds toward negative infinity. Throws InputError on d == 0.
Int floor_div(const Int& n, const Int& d);

/// n - d * floor_div(n, d); lies in [0, d) for d > 0 and (d, 0] for d < 0.
Int floor_mod(const Int& n, const Int& d);

/// ceil(n / d).
Int ceil_div(const Int& n, const Int& d);

/// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

struct Egcd {
  Int g;
  Int u;
  Int v;
};

/// Extended Euclid: g = gcd(a, b) > 0 and a*u + b*v == g.
/// Throws InputError when both arguments are zero.
Egcd egcd(const Int& a, const Int& b);

/// Fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(const Int& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n) : num_(n), den_(1) {}   // NOLINT(google-explicit-constructor)
  Rational(const Int& n, const Int& d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int num_;
  Int den_;
};

Int floor(const Rational& x);
Int ceil(const Rational& x);
Rational abs(const Rational& x);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// Accepts "p/q", "p" or a decimal "d.ddd", each with an optional sign.
/// Throws InputError naming the token otherwise.
Rational parse_rational(std::string_view text);

/// Integer with optional sign; throws InputError naming the token otherwise.
Int parse_int(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Int& x);

std::ostream& operator<<(std::ostream& os, const Rational& x);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic (x, then y).
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    return a.y <=> b.y;
  }
};

inline bool is_lattice_point(const Point& p) { return p.x.is_integer() && p.y.is_integer(); }

/// Twice the signed area of (a, b, c): positive when counterclockwise.
Rational cross(const Point& a, const Point& b, const Point& c);

std::string to_string(const Point& p);

}  // namespace lattice

#endif  // LATTICE_EXACT_HPP
