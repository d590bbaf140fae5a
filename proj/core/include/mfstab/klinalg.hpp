#pragma once

#include <optional>
#include <vector>

#include "mfstab/scalar.hpp"

namespace mfstab {

/// Dense matrix over the coefficient field, row-major.
struct KMatrix {
  int rows = 0;
  int cols = 0;
  FieldSpec field;
  std::vector<Scalar> a;

  KMatrix() = default;
  KMatrix(int r, int c, FieldSpec f)
      : rows(r), cols(c), field(f), a(static_cast<size_t>(r) * c, f.zero()) {}

  Scalar& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Scalar& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  KMatrix transposed() const;
  KMatrix operator*(const KMatrix& o) const;
  friend bool operator==(const KMatrix&, const KMatrix&);

  static KMatrix identity(int n, FieldSpec f);
};

/// Reduced row echelon form with its pivot columns. Elimination uses the
/// first nonzero entry in row-major order as pivot, so results are
/// reproducible across runs and fields.
struct Rref {
  KMatrix mat;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Rref rref(KMatrix m);

int rank(const KMatrix& m);

/// Columns form the canonical kernel basis (one per free column of the RREF,
/// with that free coordinate set to 1).
KMatrix kernel_basis(const KMatrix& m);

/// Particular solution of A x = b with all free variables set to zero,
/// or nullopt when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const KMatrix& A, const std::vector<Scalar>& b);

/// A linear subspace of k^n held as an RREF row basis; supports canonical
/// reduction of vectors modulo the subspace.
class Subspace {
 public:
  Subspace(int ambient_dim, FieldSpec f) : ambient_(ambient_dim), field_(f) {}
  static Subspace from_rows(const KMatrix& rows);
  static Subspace from_columns(const KMatrix& cols) { return from_rows(cols.transposed()); }

  int dim() const { return basis_.rows; }
  int ambient_dim() const { return ambient_; }
  const KMatrix& basis_rows() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  std::vector<Scalar> reduce(std::vector<Scalar> v) const;
  bool contains(const std::vector<Scalar>& v) const;
  /// True if every column of m lies in the subspace.
  bool contains_columns(const KMatrix& m) const;

 private:
  int ambient_;
  FieldSpec field_;
  KMatrix basis_;            // RREF rows
  std::vector<int> pivots_;  // pivot column of each basis row
};

}  // namespace mfstab
