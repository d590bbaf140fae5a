#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mfstab/graded_linalg.hpp"
#include "mfstab/labels.hpp"

namespace mfstab {

/// Two-periodic complete resolution datum (d1: P1 -> P0, d0: P0 -> P-1).
/// The module is coker(d1); the doubly infinite complex repeats with a
/// twist by deg f every two steps, growing toward the cokernel side:
/// d_{n-2} = d_n(deg f).
class CompleteResolution {
 public:
  CompleteResolution(GradedMatrix d1, GradedMatrix d0);

  RingSpec ring() const { return d1_.ring(); }
  FieldSpec field() const { return d1_.field(); }
  const GradedMatrix& d1() const { return d1_; }
  const GradedMatrix& d0() const { return d0_; }
  const GradedFreeModule& p1() const { return d1_.src(); }
  const GradedFreeModule& p0() const { return d1_.tgt(); }
  const GradedFreeModule& pm1() const { return d0_.tgt(); }

  /// coker(d1); shared so per-degree caches are reused.
  std::shared_ptr<const ModulePresentation> module() const { return module_; }

  /// Syzygy: shift the resolution one step, d1' = d0(-deg f), d0' = d1.
  /// Applying it twice returns the original twisted by -deg f.
  CompleteResolution syzygy() const;
  CompleteResolution twisted(int t) const;

  bool homogeneous() const { return d1_.is_homogeneous() && d0_.is_homogeneous(); }

  /// Lifted factorization identities over S: d0∘d1 = f·id and
  /// d1(deg f)∘d0 = f·id, exactly as polynomial matrices.
  bool factorization_ok() const;

  /// Degreewise exactness of the induced two-periodic complex at P0 and
  /// P-1 for every degree in [lo, hi]; returns a failing degree if any.
  std::optional<int> exactness_witness(int lo, int hi) const;

  /// Degree window wide enough to see every distinct degreewise behaviour:
  /// all dimension sequences are constant beyond max |twist| + 2.
  int stable_window() const;

 private:
  GradedMatrix d1_, d0_;
  std::shared_ptr<const ModulePresentation> module_;
};

/// Catalogue resolution of an indecomposable label. Free labels and sums
/// are rejected; callers split sums and drop free summands (stably zero).
CompleteResolution build_resolution(const ObjectLabel& label, FieldSpec field);

/// One short exact sequence 0 -> sub -> mid -> quo -> 0 of the generation
/// lemma, with the inclusion/projection given on presentation generators
/// by (1 0)^t and (0 1).
struct SesSpec {
  ObjectLabel sub, mid, quo;
};

/// The four families pair a two-index middle with one-index ends:
/// E(i,j) with C_i, C_j; F(i,j) with D_i, D_j; G(i,j) with C_i, D_j;
/// H(i,j) with D_i, C_j.
SesSpec generation_ses(const ObjectLabel& mid);

struct SesCheck {
  SesSpec ses;
  bool ok = true;
  std::optional<int> witness_degree;
  std::string detail;
};

/// Degreewise exactness of the sequence at all three spots over a window
/// ([-W, W] with W from the middle's stable_window when not given).
SesCheck check_ses(const SesSpec& ses, FieldSpec field, std::optional<int> window = {});
/// Same check with explicit inclusion/projection matrices (mutation tests).
SesCheck check_ses_with_maps(const SesSpec& ses, const GradedMatrix& inj, const GradedMatrix& proj,
                             std::optional<int> window = {});

}  // namespace mfstab
