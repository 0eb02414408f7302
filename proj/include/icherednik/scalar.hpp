#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace icherednik {

/// Thrown when two values of different characteristic (or rank) meet.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Scalar;

/// The coefficient field: Q when `p == 0`, otherwise F_p.
struct Field {
  std::uint32_t p = 0;

  Field() = default;
  /// Throws std::invalid_argument unless p == 0 or p is prime.
  explicit Field(std::uint32_t characteristic);

  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p) { return Field(p); }

  bool is_rational() const { return p == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar make(long value) const;
  /// num/den; den must be invertible in the field.
  Scalar make(long num, long den) const;
  Scalar make(const mpq_class& q) const;
  /// Accepts "a" or "a/b" in decimal.
  Scalar parse(std::string_view text) const;

  friend bool operator==(Field a, Field b) { return a.p == b.p; }
};

/// Exact element of Q (always reduced) or F_p (canonical residue in [0, p)).
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(const mpq_class& q);
  Scalar(std::uint64_t residue, std::uint32_t p);

  Field field() const;
  std::uint32_t characteristic() const;

  bool is_zero() const;
  bool is_one() const;

  /// Throws std::logic_error in characteristic p.
  const mpq_class& rational() const;
  /// Throws std::logic_error in characteristic 0.
  std::uint64_t residue() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Throws std::domain_error on zero.
  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  /// "p/q", "p", or the residue in characteristic p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t r;
    std::uint32_t p;
  };

  void require_same(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace icherednik
