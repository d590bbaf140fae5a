#include "mfstab/scalar.hpp"

namespace mfstab {

namespace {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(unsigned long p) {
  if (p == 2)
    throw std::invalid_argument(
        "characteristic 2 is not supported: the matrix factorization "
        "catalogue for x^2 and x^2*y requires characteristic != 2; "
        "use the rationals or an odd prime");
  if (!is_prime(p))
    throw std::invalid_argument("field characteristic must be 0 or an odd prime, got " +
                                std::to_string(p));
  return FieldSpec(p);
}

std::string FieldSpec::name() const {
  return p_ == 0 ? "Q" : "F" + std::to_string(p_);
}

Scalar FieldSpec::zero() const { return Scalar(p_, 0); }
Scalar FieldSpec::one() const { return Scalar(p_, 1); }

Scalar FieldSpec::from_int(long n) const {
  Scalar s(p_, mpq_class(n));
  s.reduce_mod_p();
  return s;
}

Scalar FieldSpec::from_fraction(long num, long den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (p_ == 0) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(0, q);
  }
  return from_int(num) / from_int(den);
}

Scalar FieldSpec::from_string(const std::string& text) const {
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    mpq_class q(text);
    q.canonicalize();
    Scalar s(p_, q);
    s.reduce_mod_p();
    return s;
  }
  Scalar num = from_string(text.substr(0, slash));
  Scalar den = from_string(text.substr(slash + 1));
  return num / den;
}

FieldSpec Scalar::field() const { return p_ == 0 ? FieldSpec::rationals() : FieldSpec::prime(p_); }

void Scalar::check_same_field(const Scalar& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("field mismatch: " + field().name() + " vs " + o.field().name());
}

void Scalar::reduce_mod_p() {
  if (p_ == 0) return;
  if (v_.get_den() != 1) {
    // clear the denominator with a modular inverse
    mpz_class num = v_.get_num(), den = v_.get_den(), inv, p(p_);
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::domain_error("division by zero in F" + std::to_string(p_));
    v_ = mpq_class(num * inv);
  }
  mpz_class r;
  mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), mpz_class(p_).get_mpz_t());
  v_ = mpq_class(r);
}

Scalar Scalar::operator-() const {
  Scalar r(p_, -v_);
  r.reduce_mod_p();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  v_ += o.v_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  v_ -= o.v_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  v_ *= o.v_;
  reduce_mod_p();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.v_ == b.v_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (p_ == 0) return Scalar(0, 1 / v_);
  mpz_class inv, p(p_);
  mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());
  return Scalar(p_, mpq_class(inv));
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace mfstab
