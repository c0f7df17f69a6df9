#pragma once

#include <cstddef>
#include <string>

#include "cobord2/algebra.hpp"

namespace cobord2 {

/// An algebra together with a counit lambda whose pairing lambda(e_i e_j)
/// is nondegenerate.
///
/// The dual basis follows e_i^v = sum_j gram_inverse[j][i] e_j, which gives
/// lambda(e_j e_i^v) = delta_ij for every valid form, and also
/// lambda(e_i^v e_j) = delta_ij when the form is symmetric. With this
/// convention the handle element omega = sum_i e_i e_i^v always satisfies
/// lambda(omega) = dim.
class FrobeniusAlgebra {
 public:
  const Algebra& algebra() const noexcept { return algebra_; }
  std::size_t dim() const noexcept { return algebra_.dim(); }
  const Vector& counit() const noexcept { return counit_; }
  const Matrix& gram() const noexcept { return gram_; }
  const Matrix& gram_inverse() const noexcept { return gram_inverse_; }
  /// Row i holds the coordinates of e_i^v.
  const Matrix& dual_basis() const noexcept { return dual_basis_; }
  AlgebraElement dual(std::size_t i) const { return AlgebraElement{dual_basis_.row_vector(i)}; }
  const AlgebraElement& handle() const noexcept { return handle_; }

  /// lambda(x)
  Rational apply_counit(const AlgebraElement& x) const;

 private:
  friend FrobeniusAlgebra frobenius_from_counit(const Algebra&, const Vector&);
  Algebra algebra_;
  Vector counit_;
  Matrix gram_;
  Matrix gram_inverse_;
  Matrix dual_basis_;
  AlgebraElement handle_;
};

/// Throws DegenerateForm (message carries a kernel vector of the pairing).
FrobeniusAlgebra frobenius_from_counit(const Algebra& a, const Vector& counit);

/// Recomputes sum_i e_i e_i^v from the stored dual basis.
AlgebraElement handle_element(const FrobeniusAlgebra& f);

/// lambda(omega^g), omega^0 = 1. Throws NotCommutative.
Rational genus_invariant(const FrobeniusAlgebra& f, std::size_t genus);

/// True iff L_omega is invertible.
bool is_handle_unit(const FrobeniusAlgebra& f);

FrobeniusAlgebra frobenius_direct_sum(const FrobeniusAlgebra& f, const FrobeniusAlgebra& g);

struct TraceVerdict {
  bool nondegenerate = false;
  bool symmetric = false;
  std::string diagnostic;

  bool valid() const noexcept { return nondegenerate && symmetric; }
  explicit operator bool() const noexcept { return valid(); }
};

/// Whether lambda(ab) is a nondegenerate symmetric form on `a`.
TraceVerdict validate_trace(const Algebra& a, const Vector& counit);

}  // namespace cobord2
