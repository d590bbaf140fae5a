#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "mfstab/klinalg.hpp"
#include "mfstab/poly.hpp"

namespace mfstab {

/// Graded free module ⊕_c R(a_c) over a quotient ring, with the twist
/// convention M(a)_d = M_{a+d}.
struct GradedFreeModule {
  RingSpec ring = RingSpec::dinf();
  std::vector<int> twists;

  int rank() const { return static_cast<int>(twists.size()); }
  GradedFreeModule twisted(int t) const;

  /// Basis of the degree-d component: (summand, monomial) pairs, summand-major.
  std::vector<std::pair<int, Monomial>> piece_basis(int d) const;
  int piece_dim(int d) const;

  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Matrix of polynomials representing a degree-0 map src -> tgt; entry (r,c)
/// must be homogeneous of degree tgt.twists[r] - src.twists[c] for the
/// degreewise piece maps to make sense.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  GradedMatrix(GradedFreeModule src, GradedFreeModule tgt, FieldSpec field);

  /// Entries as polynomial strings, row-major; matching the text format
  /// "e11, e12; e21, e22".
  static GradedMatrix from_strings(RingSpec ring, FieldSpec field, std::vector<int> src_twists,
                                   std::vector<int> tgt_twists,
                                   const std::vector<std::vector<std::string>>& entries);

  RingSpec ring() const { return src_.ring; }
  FieldSpec field() const { return field_; }
  const GradedFreeModule& src() const { return src_; }
  const GradedFreeModule& tgt() const { return tgt_; }
  int rows() const { return tgt_.rank(); }
  int cols() const { return src_.rank(); }

  const GradedPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols() + c]; }
  void set(int r, int c, GradedPoly p);

  bool is_homogeneous() const;

  /// Composition (*this) ∘ g, i.e. the matrix product for g: A -> src.
  GradedMatrix compose(const GradedMatrix& g) const;
  GradedMatrix twisted(int t) const;
  GradedMatrix in_ring(RingSpec ring) const;
  static GradedMatrix identity(const GradedFreeModule& m, FieldSpec field);
  /// Diagonal matrix p * id as a map src -> src.twisted(deg p).
  static GradedMatrix scalar_poly(const GradedFreeModule& src, const GradedPoly& p);
  static GradedMatrix block_diag(const GradedMatrix& a, const GradedMatrix& b);

  /// Matrix applied to a column vector of polynomial coordinates.
  std::vector<GradedPoly> apply(const std::vector<GradedPoly>& v) const;

  /// Induced k-linear map between degree-d pieces (requires homogeneity).
  KMatrix piece_map(int d) const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&);

  std::string to_text() const;
  static GradedMatrix from_text(RingSpec ring, FieldSpec field, std::vector<int> src_twists,
                                std::vector<int> tgt_twists, const std::string& text);
  std::string to_json_text() const;
  static GradedMatrix from_json_text(RingSpec ring, FieldSpec field, const std::string& json_text);

 private:
  FieldSpec field_;
  GradedFreeModule src_, tgt_;
  std::vector<GradedPoly> e_;
};

/// Element of a finitely presented module in a fixed degree, as polynomial
/// coordinates over the presentation's target summands.
struct GradedVector {
  int degree = 0;
  std::vector<GradedPoly> coords;
};

/// Finitely presented graded module coker(pres), with per-degree bases
/// cached behind a shared mutex (fills are idempotent).
class ModulePresentation {
 public:
  explicit ModulePresentation(GradedMatrix pres);
  ModulePresentation(const ModulePresentation&) = delete;
  ModulePresentation& operator=(const ModulePresentation&) = delete;

  const GradedMatrix& presentation() const { return pres_; }
  RingSpec ring() const { return pres_.ring(); }
  FieldSpec field() const { return pres_.field(); }

  struct Piece {
    std::vector<std::pair<int, Monomial>> ambient;  // basis of tgt piece
    Subspace image;                                 // column space of pres in this degree
    std::vector<int> quotient_cols;                 // ambient indices of the quotient basis
    int dim = 0;
  };

  const Piece& piece(int d) const;
  int piece_dim(int d) const;

  /// Canonical representative of an ambient coordinate vector mod the image.
  std::vector<Scalar> reduce_ambient(int d, std::vector<Scalar> coords) const;
  std::vector<Scalar> ambient_to_quotient(int d, const std::vector<Scalar>& coords) const;
  std::vector<Scalar> quotient_to_ambient(int d, const std::vector<Scalar>& q) const;

  /// Multiplication by a homogeneous g as a map of quotient pieces
  /// piece(d) -> piece(d + deg g).
  KMatrix mult_map(const GradedPoly& g, int d) const;

  std::vector<Scalar> vector_to_ambient(const GradedVector& v) const;
  GradedVector vector_from_quotient(int d, const std::vector<Scalar>& q) const;
  /// Basis of the degree-d component as module elements.
  std::vector<GradedVector> piece_vectors(int d) const;

  bool equal_in_module(const GradedVector& a, const GradedVector& b) const;

 private:
  GradedMatrix pres_;
  mutable std::map<int, Piece> cache_;
  mutable std::shared_mutex mutex_;
};

/// Basis element of the space of degree-0 maps P -> N for a graded free P:
/// the map sending the generator of one summand to a module element.
struct FreeHomBasisElement {
  int summand = 0;
  GradedVector value;
};

/// Basis of Hom_deg0(P, N) ≅ ⊕_c N_{-a_c}.
std::vector<FreeHomBasisElement> hom_space_basis(const GradedFreeModule& P,
                                                 const ModulePresentation& N);

/// Kernel of the induced map in degree d, columns = basis in src-piece coords.
KMatrix kernel_pieces(const GradedMatrix& m, int d);
/// Image of the induced map in degree d as a subspace of the tgt piece.
Subspace image_pieces(const GradedMatrix& m, int d);

}  // namespace mfstab
