#include "cobord2/gauge.hpp"

#include <algorithm>
#include <thread>

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

void check_class(const ClassFunctionSpace& c, std::size_t i) {
  if (i >= c.class_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "class index " + std::to_string(i) + " out of range (" +
                                                std::to_string(c.class_count()) + " classes)");
  }
}

// Coefficient vector in the class-sum basis of a central element of Q[G].
std::vector<Rational> class_coordinates(const ConjugacyClasses& classes, const AlgebraElement& x) {
  std::vector<Rational> out(classes.count());
  for (std::size_t k = 0; k < classes.count(); ++k) {
    const auto& members = classes.classes[k];
    out[k] = x.coords[members.front()];
    for (auto m : members) {
      if (x.coords[m] != out[k]) {
        throw Error(ErrorKind::InternalInconsistency,
                    "element is not constant on class " + std::to_string(k));
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> class_product(const GroupAlgebra& ga, const ConjugacyClasses& classes,
                                         const std::vector<AlgebraElement>& sums, std::size_t i,
                                         std::size_t j) {
  const auto product = multiply(ga.algebra, sums[i], sums[j]);
  std::vector<std::uint64_t> out;
  for (const auto& coeff : class_coordinates(classes, product)) {
    if (!is_integer(coeff) || sgn(coeff) < 0) {
      throw Error(ErrorKind::InternalInconsistency, "class constant is not a non-negative integer");
    }
    out.push_back(coeff.get_num().get_ui());
  }
  return out;
}

// Saturating |G|^{2g}.
std::uint64_t tuple_count(std::size_t order, std::size_t genus) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < 2 * genus; ++i) {
    if (total > UINT64_MAX / order) return UINT64_MAX;
    total *= order;
  }
  return total;
}

}  // namespace

GroupAlgebra group_algebra(const FiniteGroup& group) {
  const std::size_t n = group.order();
  StructureConstants s(n);
  Vector unit(n);
  unit[group.identity()] = 1;
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) s(i, j, group.multiply(i, j)) = 1;

  Vector counit(n);
  counit[group.identity()] = Rational(1, n);
  counit[group.identity()].canonicalize();
  return GroupAlgebra{group, algebra_from_structure(std::move(s), std::move(unit)), std::move(counit)};
}

ClassFunctionSpace class_function_space(const FiniteGroup& group) {
  return class_function_space(group_algebra(group));
}

ClassFunctionSpace class_function_space(const GroupAlgebra& ga) {
  const ConjugacyClasses classes = conjugacy_classes(ga.group);
  const std::size_t c = classes.count();
  std::vector<AlgebraElement> sums;
  for (const auto& members : classes.classes) {
    AlgebraElement h = ga.algebra.zero();
    for (auto m : members) h.coords[m] = 1;
    sums.push_back(std::move(h));
  }

  StructureConstants s(c);
  for (std::size_t i = 0; i < c; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      const auto coeffs = class_product(ga, classes, sums, i, j);
      for (std::size_t k = 0; k < c; ++k) s(i, j, k) = coeffs[k];
    }
  }
  Vector unit(c), counit(c);
  unit[0] = 1;
  counit[0] = Rational(1, ga.group.order());
  counit[0].canonicalize();

  try {
    auto center = frobenius_from_counit(algebra_from_structure(std::move(s), unit), counit);
    return ClassFunctionSpace{ga, classes, std::move(sums), std::move(center)};
  } catch (const Error& e) {
    throw Error(ErrorKind::InternalInconsistency,
                std::string("class algebra failed to form a Frobenius algebra: ") + e.name() + ": " +
                    e.what());
  }
}

std::vector<std::uint64_t> class_multiply(const ClassFunctionSpace& c, std::size_t i, std::size_t j) {
  check_class(c, i);
  check_class(c, j);
  return class_product(c.group_algebra, c.classes, c.class_sums, i, j);
}

std::vector<std::uint64_t> pants_oracle(const ClassFunctionSpace& c, std::size_t i, std::size_t j) {
  check_class(c, i);
  check_class(c, j);
  const FiniteGroup& g = c.group_algebra.group;
  std::vector<std::uint64_t> hits(g.order(), 0);
  for (auto x : c.classes.classes[i])
    for (auto y : c.classes.classes[j]) ++hits[g.multiply(x, y)];

  std::vector<std::uint64_t> landed(c.class_count(), 0);
  for (Element z = 0; z < g.order(); ++z) landed[c.classes.class_of[z]] += hits[z];

  std::vector<std::uint64_t> out(c.class_count());
  for (std::size_t k = 0; k < c.class_count(); ++k) {
    const auto& members = c.classes.classes[k];
    for (auto m : members) {
      if (hits[m] != hits[members.front()]) {
        throw Error(ErrorKind::InternalInconsistency,
                    "pair count varies within class " + std::to_string(k));
      }
    }
    out[k] = landed[k] / members.size();
  }
  return out;
}

Rational dw_closed_invariant(const ClassFunctionSpace& c, std::size_t genus) {
  return genus_invariant(c.center_frobenius, genus);
}

Rational dw_closed_invariant(const FiniteGroup& group, std::size_t genus) {
  return dw_closed_invariant(class_function_space(group), genus);
}

BruteForceResult dw_brute_force(const FiniteGroup& group, std::size_t genus, std::uint64_t cap,
                                std::size_t workers) {
  if (genus == 0) throw Error(ErrorKind::InvalidArgument, "brute-force count needs genus >= 1");
  const std::size_t n = group.order();
  const std::uint64_t work = tuple_count(n, genus);
  if (work > cap) {
    throw Error(ErrorKind::WorkLimitExceeded,
                "enumeration needs " + (work == UINT64_MAX ? std::string(">2^64") : std::to_string(work)) +
                    " tuples, cap is " + std::to_string(cap));
  }

  // comm[a * n + b] = a b a^-1 b^-1
  std::vector<Element> comm(n * n);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      comm[a * n + b] = group.multiply(group.multiply(a, b), group.multiply(group.inverse(a), group.inverse(b)));

  const Element e = group.identity();
  // Walks the remaining pairs carrying the partial product of commutators.
  auto count_from = [&](auto&& self, Element prefix, std::size_t pairs_left) -> std::uint64_t {
    if (pairs_left == 0) return prefix == e ? 1 : 0;
    std::uint64_t total = 0;
    for (std::size_t ab = 0; ab < n * n; ++ab) total += self(self, group.multiply(prefix, comm[ab]), pairs_left - 1);
    return total;
  };
  auto count_first = [&](Element a) {
    std::uint64_t total = 0;
    for (Element b = 0; b < n; ++b) total += count_from(count_from, comm[a * n + b], genus - 1);
    return total;
  };

  workers = std::max<std::size_t>(1, std::min(workers, n));
  std::vector<std::uint64_t> partial(workers, 0);
  if (workers == 1) {
    for (Element a = 0; a < n; ++a) partial[0] += count_first(a);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (Element a = static_cast<Element>(w); a < n; a += static_cast<Element>(workers)) {
          partial[w] += count_first(a);
        }
      });
    }
  }
  std::uint64_t count = 0;
  for (auto p : partial) count += p;

  Rational value(count, n);
  value.canonicalize();
  return BruteForceResult{value, count, n};
}

Rational dw_genus_with_boundary(const ClassFunctionSpace& c, std::size_t genus,
                                const std::vector<std::size_t>& boundary) {
  const FrobeniusAlgebra& f = c.center_frobenius;
  const Algebra& z = f.algebra();
  AlgebraElement x = z.unit();
  for (auto i : boundary) {
    check_class(c, i);
    x = multiply(z, x, z.basis(i));
  }
  for (std::size_t g = 0; g < genus; ++g) x = multiply(z, f.handle(), x);
  return f.apply_counit(x);
}

}  // namespace cobord2
