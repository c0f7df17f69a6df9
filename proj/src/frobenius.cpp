#include "cobord2/frobenius.hpp"

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

Matrix pairing(const Algebra& a, const Vector& counit) {
  const std::size_t n = a.dim();
  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational v;
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(counit[k]) != 0) v += a.structure()(i, j, k) * counit[k];
      gram(i, j) = v;
    }
  }
  return gram;
}

std::string format_vector(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

void require_counit(const Algebra& a, const Vector& counit) {
  if (counit.size() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "counit has " + std::to_string(counit.size()) +
                                                  " entries, algebra has dim " + std::to_string(a.dim()));
  }
}

}  // namespace

Rational FrobeniusAlgebra::apply_counit(const AlgebraElement& x) const {
  if (x.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "counit applied to foreign element");
  Rational v;
  for (std::size_t i = 0; i < dim(); ++i) v += counit_[i] * x.coords[i];
  return v;
}

FrobeniusAlgebra frobenius_from_counit(const Algebra& a, const Vector& counit) {
  require_counit(a, counit);
  Matrix gram = pairing(a, counit);
  auto inv = inverse(gram);
  if (!inv) {
    const auto null = kernel(gram);
    throw Error(ErrorKind::DegenerateForm,
                "pairing is singular; kernel vector " + format_vector(null.front()));
  }

  FrobeniusAlgebra f;
  f.algebra_ = a;
  f.counit_ = counit;
  f.gram_ = std::move(gram);
  f.gram_inverse_ = std::move(*inv);
  f.dual_basis_ = f.gram_inverse_.transpose();
  f.handle_ = handle_element(f);
  return f;
}

AlgebraElement handle_element(const FrobeniusAlgebra& f) {
  const Algebra& a = f.algebra();
  AlgebraElement omega = a.zero();
  for (std::size_t i = 0; i < a.dim(); ++i) omega = omega + multiply(a, a.basis(i), f.dual(i));
  return omega;
}

Rational genus_invariant(const FrobeniusAlgebra& f, std::size_t genus) {
  const Algebra& a = f.algebra();
  if (!a.is_commutative()) {
    throw Error(ErrorKind::NotCommutative, "closed-surface invariant needs a commutative algebra");
  }
  AlgebraElement power = a.unit();
  for (std::size_t g = 0; g < genus; ++g) power = multiply(a, f.handle(), power);
  return f.apply_counit(power);
}

bool is_handle_unit(const FrobeniusAlgebra& f) {
  return rank(left_regular_matrix(f.algebra(), f.handle())) == f.dim();
}

FrobeniusAlgebra frobenius_direct_sum(const FrobeniusAlgebra& f, const FrobeniusAlgebra& g) {
  Vector counit = f.counit();
  counit.insert(counit.end(), g.counit().begin(), g.counit().end());
  FrobeniusAlgebra sum = frobenius_from_counit(direct_sum(f.algebra(), g.algebra()), counit);

  Vector expected = f.handle().coords;
  expected.insert(expected.end(), g.handle().coords.begin(), g.handle().coords.end());
  if (sum.handle().coords != expected) {
    throw Error(ErrorKind::InternalInconsistency, "handle of direct sum is not the sum of handles");
  }
  return sum;
}

TraceVerdict validate_trace(const Algebra& a, const Vector& counit) {
  require_counit(a, counit);
  const Matrix gram = pairing(a, counit);
  TraceVerdict verdict;
  verdict.symmetric = true;
  for (std::size_t i = 0; i < a.dim() && verdict.symmetric; ++i) {
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      if (gram(i, j) != gram(j, i)) {
        verdict.symmetric = false;
        verdict.diagnostic = "asymmetric on pair (" + std::to_string(i) + ", " + std::to_string(j) +
                             "): " + to_string(gram(i, j)) + " != " + to_string(gram(j, i));
        break;
      }
    }
  }
  const auto null = kernel(gram);
  verdict.nondegenerate = null.empty();
  if (!verdict.nondegenerate) {
    if (!verdict.diagnostic.empty()) verdict.diagnostic += "; ";
    verdict.diagnostic += "degenerate, kernel vector " + format_vector(null.front());
  }
  return verdict;
}

}  // namespace cobord2
