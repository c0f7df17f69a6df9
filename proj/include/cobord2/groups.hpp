#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cobord2 {

using Element = std::uint32_t;
using Permutation = std::vector<std::uint32_t>;

inline constexpr std::size_t kDefaultGroupCap = 5040;

/// A finite group stored as its full multiplication table.
/// table(i, j) is the index of g_i * g_j. Immutable once built.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return identity_; }
  Element multiply(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  const std::vector<Element>& inverses() const noexcept { return inverse_; }
  std::vector<std::vector<Element>> table() const;
  const std::string& name() const noexcept { return name_; }
  bool is_abelian() const;

 private:
  friend FiniteGroup group_from_table(const std::vector<std::vector<Element>>&, std::string);

  std::size_t order_ = 0;
  Element identity_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::string name_;
};

struct ConjugacyClasses {
  std::vector<std::vector<Element>> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::size_t> sizes;

  std::size_t count() const noexcept { return classes.size(); }
};

/// Validates and wraps a Cayley table. Throws NotLatinSquare, NoIdentity,
/// NoInverse or NotAssociative naming the first violation found.
FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table,
                             std::string name = {});

/// Breadth-first closure of the generators under composition. Elements are
/// numbered in discovery order starting from the identity. Composition
/// convention: (p*q)(x) = p(q(x)).
FiniteGroup group_from_permutations(std::size_t degree,
                                    const std::vector<Permutation>& generators,
                                    std::size_t cap = kDefaultGroupCap,
                                    std::string name = {});

FiniteGroup cyclic_group(std::size_t n);
FiniteGroup symmetric_group(std::size_t n);
FiniteGroup dihedral_group(std::size_t n);
FiniteGroup quaternion_group();

/// Builtin tags: `Zn`, `Sn` (n <= 7), `Dn` (order 2n), `Q8`, `trivial`.
/// Throws UnknownName or ParameterTooLarge.
FiniteGroup builtin_group(std::string_view tag);

ConjugacyClasses conjugacy_classes(const FiniteGroup& group);

/// Group text format: `order n` + n table rows, or `perm degree d` + one
/// generator per line; an optional `name <string>` line in either.
FiniteGroup parse_group(std::string_view text);
FiniteGroup load_group_file(const std::string& path);

}  // namespace cobord2
