#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mfstab {

class Scalar;

/// Coefficient field of the engine: the rationals, or a prime field F_p
/// with p an odd prime. Characteristic 2 is rejected at construction.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(unsigned long p);

  unsigned long characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long n) const;
  Scalar from_fraction(long num, long den) const;
  /// Accepts "n" or "n/d"; fractions are reduced (or inverted mod p).
  Scalar from_string(const std::string& text) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(unsigned long p) : p_(p) {}
  unsigned long p_ = 0;
};

/// An exact field element. All arithmetic is exact; mixing values from
/// different fields throws.
class Scalar {
 public:
  Scalar() = default;  // 0 in Q

  bool is_zero() const { return v_ == 0; }
  FieldSpec field() const;
  const mpq_class& value() const { return v_; }

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

  Scalar inverse() const;
  std::string str() const;

 private:
  friend class FieldSpec;
  Scalar(unsigned long p, mpq_class v) : p_(p), v_(std::move(v)) {}
  void check_same_field(const Scalar& o) const;
  void reduce_mod_p();

  unsigned long p_ = 0;  // 0: rationals; otherwise odd prime
  mpq_class v_ = 0;      // residue in [0, p) when p_ > 0
};

}  // namespace mfstab
