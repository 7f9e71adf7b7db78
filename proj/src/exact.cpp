#include "lattice/exact.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace lattice {

Int floor_div(const Int& n, const Int& d) {
  if (d == 0) throw InputError("division by zero");
  Int q = n / d;  // truncates toward zero
  Int r = n - q * d;
  if (r != 0 && ((r < 0) != (d < 0))) --q;
  return q;
}

Int floor_mod(const Int& n, const Int& d) { return n - d * floor_div(n, d); }

Int ceil_div(const Int& n, const Int& d) { return -floor_div(-n, d); }

Int gcd(const Int& a, const Int& b) {
  Int x = boost::multiprecision::abs(a);
  Int y = boost::multiprecision::abs(b);
  while (y != 0) {
    Int t = x % y;
    x = std::move(y);
    y = std::move(t);
  }
  return x;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / gcd(a, b) * b);
}

Egcd egcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw InputError("egcd(0, 0) is undefined");
  Int old_r = a, r = b;
  Int old_u = 1, u = 0;
  Int old_v = 0, v = 1;
  while (r != 0) {
    Int q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
    old_v -= q * v;
    std::swap(old_v, v);
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

Rational::Rational(const Int& n, const Int& d) {
  if (d == 0) throw InputError("rational with zero denominator");
  Int g = gcd(n, d);
  num_ = n / g;
  den_ = d / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  *this = Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  *this = Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  *this = Rational(num_ * o.num_, den_ * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw InputError("division by zero");
  *this = Rational(num_ * o.den_, den_ * o.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Int floor(const Rational& x) { return floor_div(x.num(), x.den()); }
Int ceil(const Rational& x) { return ceil_div(x.num(), x.den()); }
Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad_token(std::string_view kind, std::string_view text) {
  throw InputError("malformed " + std::string(kind) + " '" + std::string(text) + "'");
}

}  // namespace

Int parse_int(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) bad_token("integer", text);
  Int v{std::string(body)};
  return negative ? Int(-v) : v;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto n = body.substr(0, slash);
    auto d = body.substr(slash + 1);
    if (!all_digits(n) || !all_digits(d)) bad_token("rational", text);
    Int den(std::string{d});
    if (den == 0) bad_token("rational (zero denominator)", text);
    value = Rational(Int(std::string{n}), den);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad_token("rational", text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) {
      bad_token("rational", text);
    }
    Int scale = boost::multiprecision::pow(Int(10), static_cast<unsigned>(frac.size()));
    Int w = whole.empty() ? Int(0) : Int(std::string{whole});
    Int f = frac.empty() ? Int(0) : Int(std::string{frac});
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(body)) bad_token("rational", text);
    value = Rational(Int(std::string{body}));
  }
  return negative ? -value : value;
}

std::string to_string(const Int& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (x.is_integer()) return x.num().str();
  return x.num().str() + "/" + x.den().str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << to_string(x); }

Rational cross(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace lattice
