#pragma once

// Exact arithmetic substrate: residues of rationals modulo 1 and residues of
// integers modulo a (possibly zero, possibly negative) integer. No floating
// point is used anywhere in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seven {

// Expression templates are disabled so that arithmetic results are plain
// values (safe with auto and with implicit conversions).
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

/// Domain rejection raised by library operations. The message is the
/// user-facing error text and is echoed verbatim by the CLI.
class DomainError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Floor modulo: result in [0, |m|) for m != 0.
inline Integer floor_mod(const Integer& a, const Integer& m) {
  Integer n = abs(m);
  Integer r = a % n;
  if (r < 0) r += n;
  return r;
}

/// Exact division; throws std::logic_error if b does not divide a.
inline Integer exact_div(const Integer& a, const Integer& b, std::string_view what) {
  if (b == 0 || a % b != 0)
    throw std::logic_error("integrality violated: " + std::string(what));
  return a / b;
}

inline bool is_even(const Integer& a) { return (a % 2) == 0; }

/// A rational number modulo 1 in canonical form n/d with 0 <= n < d and
/// gcd(n, d) = 1.
class RatModZ {
public:
  RatModZ() : num_(0), den_(1) {}

  /// Canonical residue of num/den mod 1.
  static RatModZ normalize(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("undefined rational");
    Integer n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    n = floor_mod(n, d);
    Integer g = gcd(n, d);  // gcd(0, d) = d
    RatModZ r;
    r.num_ = n / g;
    r.den_ = d / g;
    return r;
  }

  const Integer& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  RatModZ operator-() const { return normalize(-num_, den_); }

  friend RatModZ operator+(const RatModZ& a, const RatModZ& b) {
    return normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatModZ operator-(const RatModZ& a, const RatModZ& b) { return a + (-b); }
  RatModZ& operator+=(const RatModZ& o) { return *this = *this + o; }

  /// Integer multiple n * x mod 1.
  friend RatModZ operator*(const Integer& n, const RatModZ& x) {
    return normalize(n * x.num_, x.den_);
  }

  friend bool operator==(const RatModZ& a, const RatModZ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RatModZ& a, const RatModZ& b) {
    // Order by value in [0, 1).
    Integer lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// "n/d" with canonical n and d.
  std::string str() const { return num_.str() + "/" + den_.str(); }

  /// Parses "n/d" (or a bare integer) and canonicalizes.
  static RatModZ parse(std::string_view s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string_view::npos) return normalize(Integer(std::string(s)), 1);
      return normalize(Integer(std::string(s.substr(0, slash))),
                       Integer(std::string(s.substr(slash + 1))));
    } catch (const std::runtime_error& e) {
      if (dynamic_cast<const DomainError*>(&e)) throw;
      throw DomainError("malformed rational '" + std::string(s) + "'");
    }
  }

private:
  Integer num_;
  Integer den_;
};

inline RatModZ ratmodz_normalize(const Integer& num, const Integer& den) {
  return RatModZ::normalize(num, den);
}

inline RatModZ ratmodz_add(const RatModZ& a, const RatModZ& b) { return a + b; }

/// An element of Z_k: Z/|k|Z for k != 0 and Z itself for k = 0. The sign of
/// the modulus is kept; the group only depends on |k|.
class ResidueModK {
public:
  ResidueModK() = default;

  static ResidueModK reduce(const Integer& modulus, const Integer& value) {
    ResidueModK r;
    r.mod_ = modulus;
    r.val_ = modulus == 0 ? value : floor_mod(value, modulus);
    return r;
  }

  const Integer& modulus() const { return mod_; }
  const Integer& value() const { return val_; }
  Integer order() const { return abs(mod_); }

  friend bool operator==(const ResidueModK&, const ResidueModK&) = default;

private:
  Integer mod_{0};
  Integer val_{0};
};

inline ResidueModK residue_reduce(const Integer& modulus, const Integer& value) {
  return ResidueModK::reduce(modulus, value);
}

}  // namespace seven
