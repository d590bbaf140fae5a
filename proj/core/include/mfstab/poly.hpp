#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfstab/scalar.hpp"

namespace mfstab {

/// Monomial x^a y^b of the Z-graded ring k[x,y] with |x| = 1, |y| = -1.
struct Monomial {
  int a = 0;  // exponent of x
  int b = 0;  // exponent of y

  int degree() const { return a - b; }
  bool divisible_by(const Monomial& m) const { return a >= m.a && b >= m.b; }
  Monomial operator*(const Monomial& m) const { return {a + m.a, b + m.b}; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

  std::string str() const;
};

/// Ambient ring of a polynomial: S = k[x,y], the D-infinity quotient
/// R = S/<x^2 y>, or the A-infinity quotient R' = S/<x^2>.
class RingSpec {
 public:
  enum class Id { S, Dinf, Ainf };

  static RingSpec polynomial() { return RingSpec(Id::S); }
  static RingSpec dinf() { return RingSpec(Id::Dinf); }
  static RingSpec ainf() { return RingSpec(Id::Ainf); }
  static RingSpec parse(const std::string& name);

  Id id() const { return id_; }
  bool is_quotient() const { return id_ != Id::S; }
  std::string name() const;

  /// Generator of the defining principal ideal; only quotients have one.
  Monomial defining_monomial() const;
  /// Degree of the defining polynomial: 1 for x^2 y, 2 for x^2.
  int deg_f() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  explicit RingSpec(Id id) : id_(id) {}
  Id id_;
};

/// Sparse graded polynomial over an ambient ring, kept in normal form:
/// no stored monomial is divisible by the ambient's defining monomial,
/// and no coefficient is zero.
class GradedPoly {
 public:
  GradedPoly() = default;
  GradedPoly(RingSpec ring, FieldSpec field) : ring_(ring), field_(field) {}

  static GradedPoly zero(RingSpec ring, FieldSpec field) { return GradedPoly(ring, field); }
  static GradedPoly term(RingSpec ring, Monomial m, Scalar c);
  static GradedPoly constant(RingSpec ring, Scalar c) { return term(ring, Monomial{}, c); }

  RingSpec ring() const { return ring_; }
  FieldSpec field() const { return field_; }
  const std::map<Monomial, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Defined exactly when all monomials share one degree (0 included).
  std::optional<int> homogeneous_degree() const;
  bool is_homogeneous() const { return homogeneous_degree().has_value(); }

  Scalar coeff(const Monomial& m) const;
  /// Coefficient of the largest stored monomial in (a,b)-lexicographic order.
  Scalar leading_coeff() const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
  friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
  GradedPoly scaled(const Scalar& c) const;
  friend bool operator==(const GradedPoly& a, const GradedPoly& b);

  /// Reinterprets the polynomial in another ambient ring and reduces.
  GradedPoly in_ring(RingSpec ring) const;

  std::string str() const;
  static GradedPoly parse(const std::string& text, RingSpec ring, FieldSpec field);

 private:
  void insert_term(const Monomial& m, const Scalar& c);
  void reduce();

  RingSpec ring_ = RingSpec::polynomial();
  FieldSpec field_;
  std::map<Monomial, Scalar> terms_;
};

/// Normal form of p modulo the ambient's defining monomial ideal.
/// Idempotent; the identity on polynomials already in normal form.
GradedPoly normal_form(const GradedPoly& p, RingSpec ring);

/// k-basis of the degree-d homogeneous component of a quotient ring,
/// as reduced monomials in (a,b)-lexicographic order.
std::vector<Monomial> ring_piece_basis(RingSpec ring, int d);

int ring_piece_dim(RingSpec ring, int d);

}  // namespace mfstab
