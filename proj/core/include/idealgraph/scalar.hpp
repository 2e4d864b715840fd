#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idealgraph {

/// The rationals (modulus 0) or GF(p).
class Field {
 public:
  static Field rational() { return Field(0); }
  /// Throws Errc::not_prime.
  static Field gf(std::uint64_t p);
  /// "rational" or "gf:P".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return modulus_ == 0; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_ = 0;
};

/// Exact field element. Rationals are kept reduced with positive denominator;
/// residues are kept in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// Accepts "n" or "n/d"; throws Errc::parse_error or Errc::division_by_zero.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const;
  const mpq_class& value() const noexcept { return value_; }
  bool is_zero() const noexcept { return sgn(value_) == 0; }
  bool is_one() const noexcept { return value_ == 1; }
  /// For GF(p), the residue p-1 counts as minus one.
  bool is_minus_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws Errc::division_by_zero.
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }

  std::string to_string() const;

 private:
  void check(const Scalar& o) const;
  void canonicalize();

  mpq_class value_;
  std::uint64_t modulus_ = 0;
};

}  // namespace idealgraph
