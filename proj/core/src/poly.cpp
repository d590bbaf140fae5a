#include "mfstab/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mfstab {

std::string Monomial::str() const {
  if (a == 0 && b == 0) return "1";
  std::string s;
  if (a > 0) {
    s += "x";
    if (a > 1) s += "^" + std::to_string(a);
  }
  if (b > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (b > 1) s += "^" + std::to_string(b);
  }
  return s;
}

RingSpec RingSpec::parse(const std::string& name) {
  if (name == "S" || name == "s") return polynomial();
  if (name == "dinf" || name == "Dinf") return dinf();
  if (name == "ainf" || name == "Ainf") return ainf();
  throw std::invalid_argument("unknown ring '" + name + "' (expected S, dinf or ainf)");
}

std::string RingSpec::name() const {
  switch (id_) {
    case Id::S: return "S";
    case Id::Dinf: return "dinf";
    case Id::Ainf: return "ainf";
  }
  return {};
}

Monomial RingSpec::defining_monomial() const {
  switch (id_) {
    case Id::Dinf: return {2, 1};  // x^2 y
    case Id::Ainf: return {2, 0};  // x^2
    case Id::S: break;
  }
  throw std::logic_error("the polynomial ring S has no defining monomial");
}

int RingSpec::deg_f() const { return defining_monomial().degree(); }

GradedPoly GradedPoly::term(RingSpec ring, Monomial m, Scalar c) {
  GradedPoly p(ring, c.field());
  p.insert_term(m, c);
  p.reduce();
  return p;
}

std::optional<int> GradedPoly::homogeneous_degree() const {
  if (terms_.empty()) return 0;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return std::nullopt;
  return d;
}

Scalar GradedPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? field_.zero() : it->second;
}

Scalar GradedPoly::leading_coeff() const {
  if (terms_.empty()) return field_.zero();
  return terms_.rbegin()->second;
}

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(ring_, field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  if (!(ring_ == o.ring_))
    throw std::invalid_argument("ambient ring mismatch: " + ring_.name() + " vs " + o.ring_.name());
  for (const auto& [m, c] : o.terms_) insert_term(m, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) { return *this += -o; }

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
  if (!(a.ring_ == b.ring_))
    throw std::invalid_argument("ambient ring mismatch: " + a.ring_.name() + " vs " +
                                b.ring_.name());
  GradedPoly r(a.ring_, a.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.insert_term(ma * mb, ca * cb);
  r.reduce();
  return r;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
  GradedPoly r(ring_, field_);
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

bool operator==(const GradedPoly& a, const GradedPoly& b) {
  return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

GradedPoly GradedPoly::in_ring(RingSpec ring) const {
  GradedPoly r(ring, field_);
  r.terms_ = terms_;
  r.reduce();
  return r;
}

void GradedPoly::insert_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GradedPoly::reduce() {
  if (!ring_.is_quotient()) return;
  const Monomial f = ring_.defining_monomial();
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->first.divisible_by(f) ? terms_.erase(it) : std::next(it);
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = c.str();
    bool neg = cs.size() && cs[0] == '-';
    if (neg) cs.erase(0, 1);
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit_coeff = (cs == "1");
    if (m.a == 0 && m.b == 0)
      out += cs;
    else if (unit_coeff)
      out += m.str();
    else
      out += cs + "*" + m.str();
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("unexpected end of polynomial '" + s + "'");
    return s[i++];
  }

  std::string number() {
    skip_ws();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw std::invalid_argument("expected number in '" + s + "' at " + std::to_string(i));
    return s.substr(start, i - start);
  }

  int exponent() {
    if (peek() == '^') {
      get();
      return std::stoi(number());
    }
    return 1;
  }

  // one term: [coefficient] {* x^a} {* y^b}
  void term(GradedPoly& acc, RingSpec ring, FieldSpec field, bool negative) {
    Scalar c = field.one();
    Monomial m;
    bool saw_factor = false;
    bool expect_factor = true;
    while (expect_factor) {
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        std::string num = number();
        if (peek() == '/') {
          get();
          num += "/" + number();
        }
        c *= field.from_string(num);
        saw_factor = true;
      } else if (ch == 'x') {
        get();
        m.a += exponent();
        saw_factor = true;
      } else if (ch == 'y') {
        get();
        m.b += exponent();
        saw_factor = true;
      } else {
        throw std::invalid_argument("unexpected character '" + std::string(1, ch) +
                                    "' in polynomial '" + s + "'");
      }
      expect_factor = peek() == '*';
      if (expect_factor) get();
    }
    if (!saw_factor) throw std::invalid_argument("empty term in polynomial '" + s + "'");
    if (negative) c = -c;
    acc += GradedPoly::term(ring, m, c);
  }
};

}  // namespace

GradedPoly GradedPoly::parse(const std::string& text, RingSpec ring, FieldSpec field) {
  Parser p{text};
  GradedPoly acc(ring, field);
  if (p.eof()) throw std::invalid_argument("empty polynomial text");
  bool negative = false;
  if (p.peek() == '+' || p.peek() == '-') negative = p.get() == '-';
  p.term(acc, ring, field, negative);
  while (!p.eof()) {
    char op = p.get();
    if (op != '+' && op != '-')
      throw std::invalid_argument("expected + or - in polynomial '" + text + "'");
    p.term(acc, ring, field, op == '-');
  }
  return acc;
}

GradedPoly normal_form(const GradedPoly& p, RingSpec ring) { return p.in_ring(ring); }

std::vector<Monomial> ring_piece_basis(RingSpec ring, int d) {
  if (!ring.is_quotient())
    throw std::invalid_argument("ring_piece_basis needs a quotient ring; S has infinite pieces");
  std::vector<Monomial> basis;
  // Monomials x^a y^b of degree a - b = d surviving reduction. Only a = 0
  // and a = 1 admit positive y-exponents; higher x-powers survive only in
  // the D-infinity ring with b = 0.
  if (d <= 0) basis.push_back({0, -d});
  if (d <= 1) basis.push_back({1, 1 - d});
  if (d >= 2 && ring.id() == RingSpec::Id::Dinf) basis.push_back({d, 0});
  std::sort(basis.begin(), basis.end());
  return basis;
}

int ring_piece_dim(RingSpec ring, int d) {
  return static_cast<int>(ring_piece_basis(ring, d).size());
}

}  // namespace mfstab
