#include "mfstab/klinalg.hpp"

#include <algorithm>

namespace mfstab {

KMatrix KMatrix::transposed() const {
  KMatrix t(cols, rows, field);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

KMatrix KMatrix::operator*(const KMatrix& o) const {
  if (cols != o.rows) throw std::invalid_argument("KMatrix dimension mismatch");
  KMatrix r(rows, o.cols, field);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      if (at(i, k).is_zero()) continue;
      for (int j = 0; j < o.cols; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
    }
  return r;
}

bool operator==(const KMatrix& x, const KMatrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) return false;
  for (size_t i = 0; i < x.a.size(); ++i)
    if (!(x.a[i] == y.a[i])) return false;
  return true;
}

KMatrix KMatrix::identity(int n, FieldSpec f) {
  KMatrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Rref rref(KMatrix m) {
  std::vector<int> pivots;
  int lead = 0;
  for (int col = 0; col < m.cols && lead < m.rows; ++col) {
    int piv = -1;
    for (int r = lead; r < m.rows; ++r)
      if (!m.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(lead, c));
    Scalar inv = m.at(lead, col).inverse();
    for (int c = col; c < m.cols; ++c) m.at(lead, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == lead || m.at(r, col).is_zero()) continue;
      Scalar factor = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= factor * m.at(lead, c);
    }
    pivots.push_back(col);
    ++lead;
  }
  return Rref{std::move(m), std::move(pivots)};
}

int rank(const KMatrix& m) { return rref(m).rank(); }

KMatrix kernel_basis(const KMatrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int p : r.pivot_cols) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < m.cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  KMatrix ker(m.cols, static_cast<int>(free_cols.size()), m.field);
  for (size_t j = 0; j < free_cols.size(); ++j) {
    int fc = free_cols[j];
    ker.at(fc, static_cast<int>(j)) = m.field.one();
    for (int i = 0; i < r.rank(); ++i) ker.at(r.pivot_cols[i], static_cast<int>(j)) = -r.mat.at(i, fc);
  }
  return ker;
}

std::optional<std::vector<Scalar>> solve(const KMatrix& A, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw std::invalid_argument("solve: size mismatch");
  KMatrix aug(A.rows, A.cols + 1, A.field);
  for (int r = 0; r < A.rows; ++r) {
    for (int c = 0; c < A.cols; ++c) aug.at(r, c) = A.at(r, c);
    aug.at(r, A.cols) = b[r];
  }
  Rref rr = rref(std::move(aug));
  std::vector<Scalar> x(A.cols, A.field.zero());
  for (int i = 0; i < rr.rank(); ++i) {
    if (rr.pivot_cols[i] == A.cols) return std::nullopt;  // 0 = 1 row
    x[rr.pivot_cols[i]] = rr.mat.at(i, A.cols);
  }
  return x;
}

Subspace Subspace::from_rows(const KMatrix& rows) {
  Rref r = rref(rows);
  Subspace s(rows.cols, rows.field);
  s.basis_ = KMatrix(r.rank(), rows.cols, rows.field);
  for (int i = 0; i < r.rank(); ++i)
    for (int c = 0; c < rows.cols; ++c) s.basis_.at(i, c) = r.mat.at(i, c);
  s.pivots_ = r.pivot_cols;
  return s;
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("reduce: size mismatch");
  for (int i = 0; i < dim(); ++i) {
    const Scalar& lead = v[pivots_[i]];
    if (lead.is_zero()) continue;
    Scalar factor = lead;  // basis rows are RREF: pivot entry is 1
    for (int c = 0; c < ambient_; ++c) v[c] -= factor * basis_.at(i, c);
  }
  return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Subspace::contains_columns(const KMatrix& m) const {
  for (int c = 0; c < m.cols; ++c) {
    std::vector<Scalar> v(m.rows, field_.zero());
    for (int r = 0; r < m.rows; ++r) v[r] = m.at(r, c);
    if (!contains(v)) return false;
  }
  return true;
}

}  // namespace mfstab
