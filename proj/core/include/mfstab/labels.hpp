#pragma once

#include <compare>
#include <string>
#include <vector>

#include "mfstab/poly.hpp"

namespace mfstab {

/// Families of indecomposable graded MCM modules. The D-infinity ring has
/// A(i), B(i), C(i), D(i) and the two-index E(i,j), F(i,j), G(i,j), H(i,j);
/// the A-infinity ring has Ky(s) = k[y](s) and Ideal(m,s) = <x, y^m>(s).
/// Free(t) = R(t) is stably zero in either ring.
enum class Family { A, B, C, D, E, F, G, H, Ky, Ideal, Free };

std::string family_name(Family f);

/// Symbolic name of an indecomposable object (or a free module), closed
/// under twist and syzygy.
struct ObjectLabel {
  RingSpec ring = RingSpec::dinf();
  Family family = Family::C;
  int i = 0;  // first index; m for Ideal; t for Free
  int j = 0;  // second index; s for Ideal; unused for one-index families

  static ObjectLabel one_index(RingSpec ring, Family f, int i);
  static ObjectLabel two_index(RingSpec ring, Family f, int i, int j);

  int index_count() const;
  bool is_free() const { return family == Family::Free; }
  bool is_valid() const;
  void require_valid() const;

  /// Twist: every family shifts its indices by t (only s for Ideal).
  ObjectLabel twisted(int t) const;

  std::string str() const;

  friend auto operator<=>(const ObjectLabel&, const ObjectLabel&) = default;
};

/// Formal finite direct sum of labels.
struct LabelSum {
  std::vector<ObjectLabel> parts;

  LabelSum() = default;
  LabelSum(ObjectLabel l) : parts{l} {}  // NOLINT: implicit by design

  bool is_zero() const { return parts.empty(); }
  bool is_indecomposable() const { return parts.size() == 1; }
  LabelSum twisted(int t) const;
  LabelSum without_free() const;
  std::string str() const;

  friend bool operator==(const LabelSum&, const LabelSum&) = default;
};

/// Parses the exact label grammar: `C(2)`, `E(0,2)`, `H(1,1)`, `Ky(-3)`,
/// `I(2,5)`, `R(4)`, and sums joined with `+`. Case-sensitive; whitespace
/// ignored.
LabelSum parse_label(const std::string& text, RingSpec ring);
ObjectLabel parse_single_label(const std::string& text, RingSpec ring);

/// Syzygy at the label level, following the relations
/// ΩA(i)=B(i+1), ΩB(i)=A(i-2), ΩC(i)=D(i), ΩD(i)=C(i-1), ΩE(i,j)=F(i,j),
/// ΩF(i,j)=E(i-1,j-1), ΩG(i,j)=H(i,j-1), ΩH(i,j)=G(i-1,j) on D-infinity and
/// ΩKy(s)=Ky(s-1), ΩIdeal(m,s)=Ideal(m,s-1) on A-infinity.
ObjectLabel syzygy_label(const ObjectLabel& l);
/// Suspension, the inverse of syzygy_label.
ObjectLabel suspend_label(const ObjectLabel& l);
ObjectLabel syzygy_label_power(ObjectLabel l, int n);  // Ω^n, negative n = suspension

ObjectLabel twist_label(const ObjectLabel& l, int t);

/// Rewrites boundary-index labels by the degenerate identities
/// E(i,i+1) = A(i) ⊕ R(i+1), F(i,i+1) = B(i+1), G(i,i+1) = R(i+1),
/// H(i,i) = R(i); all other labels are fixed. Idempotent.
LabelSum normalize_label(const ObjectLabel& l);
LabelSum normalize_label(const LabelSum& l);

}  // namespace mfstab
