#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cobord2/algebra.hpp"
#include "cobord2/frobenius.hpp"
#include "cobord2/groups.hpp"

namespace cobord2 {

inline constexpr std::uint64_t kDefaultWorkCap = 1'000'000'000ull;

/// Q[G] with basis the group elements and the normalized counit
/// lambda(g) = delta_{g,e} / |G|.
struct GroupAlgebra {
  FiniteGroup group;
  Algebra algebra;
  Vector dw_counit;
};

/// The center of Q[G] in the class-sum basis H_0..H_{c-1}, with the
/// restricted counit. H_0 is the identity class.
struct ClassFunctionSpace {
  GroupAlgebra group_algebra;
  ConjugacyClasses classes;
  std::vector<AlgebraElement> class_sums;
  FrobeniusAlgebra center_frobenius;

  std::size_t class_count() const noexcept { return class_sums.size(); }
};

GroupAlgebra group_algebra(const FiniteGroup& group);
ClassFunctionSpace class_function_space(const GroupAlgebra& ga);
ClassFunctionSpace class_function_space(const FiniteGroup& group);

/// Coefficients of H_i H_j in the class-sum basis, read off from the
/// product in Q[G]. Throws IndexOutOfRange.
std::vector<std::uint64_t> class_multiply(const ClassFunctionSpace& c, std::size_t i, std::size_t j);

/// Same coefficients obtained by counting ordered pairs (x, y) in C_i x C_j
/// by the class of xy, normalized by |C_k|. Throws IndexOutOfRange, or
/// InternalInconsistency if the per-element count varies within a class.
std::vector<std::uint64_t> pants_oracle(const ClassFunctionSpace& c, std::size_t i, std::size_t j);

/// Z(M_g) computed algebraically as lambda(omega^g) on the center.
Rational dw_closed_invariant(const ClassFunctionSpace& c, std::size_t genus);
Rational dw_closed_invariant(const FiniteGroup& group, std::size_t genus);

struct BruteForceResult {
  Rational value;       ///< count / |G|
  std::uint64_t count;  ///< #{tuples with prod [a_i, b_i] = e}
  std::size_t order;
};

/// Exhaustive count of (a_1, b_1, ..., a_g, b_g) in G^{2g} with
/// prod_i [a_i, b_i] = e. The outer loop is split across `workers`
/// threads; the result does not depend on the worker count.
/// Throws WorkLimitExceeded when |G|^{2g} > cap.
BruteForceResult dw_brute_force(const FiniteGroup& group, std::size_t genus,
                                std::uint64_t cap = kDefaultWorkCap, std::size_t workers = 1);

/// lambda(omega^g H_{i_1} ... H_{i_m}); every boundary circle is incoming.
Rational dw_genus_with_boundary(const ClassFunctionSpace& c, std::size_t genus,
                                const std::vector<std::size_t>& boundary);

}  // namespace cobord2
