#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cobord2/matrix.hpp"
#include "cobord2/rational.hpp"

namespace cobord2 {

/// Coordinates of an algebra element in the canonical basis e_0..e_{dim-1}.
struct AlgebraElement {
  Vector coords;

  std::size_t dim() const noexcept { return coords.size(); }
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement operator*(const Rational& s, const AlgebraElement& x);

/// Dense structure-constant tensor: e_i e_j = sum_k c(i, j, k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), data_(dim * dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  Rational& operator()(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * dim_ + j) * dim_ + k];
  }
  const Rational& operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * dim_ + j) * dim_ + k];
  }

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> data_;
};

/// Finite-dimensional associative unital algebra over Q. Associativity and
/// the unit law are verified on construction.
class Algebra {
 public:
  std::size_t dim() const noexcept { return structure_.dim(); }
  const StructureConstants& structure() const noexcept { return structure_; }
  const AlgebraElement& unit() const noexcept { return unit_; }
  bool is_commutative() const;

  AlgebraElement basis(std::size_t i) const;
  AlgebraElement zero() const { return AlgebraElement{Vector(dim())}; }

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.structure_ == b.structure_ && a.unit_ == b.unit_;
  }

 private:
  friend Algebra algebra_from_structure(StructureConstants, Vector);
  StructureConstants structure_;
  AlgebraElement unit_;
};

/// Throws NotAssociative(i,j,k) or UnitFails(i).
Algebra algebra_from_structure(StructureConstants structure, Vector unit);

AlgebraElement multiply(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y);

/// Matrix of L_x with column convention: column j is x * e_j.
Matrix left_regular_matrix(const Algebra& a, const AlgebraElement& x);
Matrix right_regular_matrix(const Algebra& a, const AlgebraElement& x);

/// G[i][j] = trace(L_{e_i} L_{e_j}).
Matrix regular_trace_form(const Algebra& a);

/// Basis of the center in reduced row-echelon form.
std::vector<AlgebraElement> center(const Algebra& a);

/// dim A/[A,A].
std::size_t cocenter_dim(const Algebra& a);

Algebra opposite(const Algebra& a);
Algebra direct_sum(const Algebra& a, const Algebra& b);

/// Common test algebras.
Algebra ground_field();
Algebra dual_numbers();                   ///< Q[x]/(x^2), basis 1, x
Algebra diagonal_algebra(std::size_t n);  ///< Q^n with idempotent basis
Algebra matrix_algebra(std::size_t n);    ///< M_n(Q), basis E_ij at index i*n+j

/// Algebra text format: `dim n`, `unit r1 .. rn`, then `c i j k p/q` lines.
/// A Frobenius file adds `counit r1 .. rn`; `counit` receives it if present.
Algebra parse_algebra(std::string_view text, Vector* counit = nullptr);
Algebra load_algebra_file(const std::string& path, Vector* counit = nullptr);
std::string format_algebra(const Algebra& a);

}  // namespace cobord2
