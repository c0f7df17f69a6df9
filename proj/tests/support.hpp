// Test-only helpers: corpus builders, random generators and independent
// oracles. Nothing here calls into the code path it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cobord2/algebra.hpp"
#include "cobord2/error.hpp"
#include "cobord2/frobenius.hpp"
#include "cobord2/gauge.hpp"
#include "cobord2/groups.hpp"

namespace cobord2::testing {

inline const std::vector<std::string>& corpus_group_tags() {
  static const std::vector<std::string> tags{"Z2", "Z3", "Z4", "S3", "D4", "Q8", "S4"};
  return tags;
}

/// Q[x]/(p) for monic p = x^n + c[n-1] x^{n-1} + ... + c[0], basis 1, x, .., x^{n-1}.
inline Algebra quotient_algebra(const std::vector<Rational>& c) {
  const std::size_t n = c.size();
  // powers[m] = coordinates of x^m reduced mod p, m < 2n-1
  std::vector<Vector> powers;
  for (std::size_t m = 0; m < n; ++m) {
    Vector v(n);
    v[m] = 1;
    powers.push_back(v);
  }
  for (std::size_t m = n; m + 1 < 2 * n; ++m) {
    // x^m = x * x^{m-1}
    const Vector& prev = powers[m - 1];
    Vector v(n);
    for (std::size_t k = 0; k + 1 < n; ++k) v[k + 1] = prev[k];
    const Rational top = prev[n - 1];
    for (std::size_t k = 0; k < n; ++k) v[k] -= top * c[k];
    powers.push_back(v);
  }
  StructureConstants s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s(i, j, k) = powers[i + j][k];
  Vector unit(n);
  unit[0] = 1;
  return algebra_from_structure(std::move(s), std::move(unit));
}

inline Rational random_rational(std::mt19937& rng, int span = 3) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 3);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

/// Random commutative Frobenius algebra: a truncated-polynomial quotient of
/// degree 1..3 with a random counit, retried until nondegenerate.
inline FrobeniusAlgebra random_commutative_frobenius(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(1, 3);
  for (;;) {
    const std::size_t n = static_cast<std::size_t>(deg(rng));
    Vector coeffs(n);
    for (auto& c : coeffs) c = random_rational(rng, 2);
    const Algebra a = quotient_algebra(coeffs);
    Vector counit(n);
    for (auto& c : counit) c = random_rational(rng);
    try {
      return frobenius_from_counit(a, counit);
    } catch (const Error&) {
    }
  }
}

struct NamedFrobenius {
  std::string name;
  FrobeniusAlgebra frobenius;
};

/// DW centers of the corpus groups, Q x Q with counit (2, 3), and
/// Q[x]/(x^2) with lambda(x) = 1.
inline std::vector<NamedFrobenius> corpus_frobenius() {
  std::vector<NamedFrobenius> out;
  for (const auto& tag : corpus_group_tags()) {
    out.push_back({"DW(" + tag + ")", class_function_space(builtin_group(tag)).center_frobenius});
  }
  out.push_back({"QxQ(2,3)", frobenius_from_counit(diagonal_algebra(2), {Rational(2), Rational(3)})});
  out.push_back({"Q[x]/(x^2)", frobenius_from_counit(dual_numbers(), {Rational(0), Rational(1)})});
  return out;
}

namespace oracle {

/// Closure size by repeated set products over raw permutation vectors.
inline std::size_t closure_order(std::size_t degree, const std::vector<Permutation>& gens) {
  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);
  std::set<Permutation> seen{id};
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Permutation> current(seen.begin(), seen.end());
    for (const auto& p : current) {
      for (const auto& q : gens) {
        Permutation r(degree);
        for (std::size_t x = 0; x < degree; ++x) r[x] = q[p[x]];
        grew |= seen.insert(r).second;
      }
    }
  }
  return seen.size();
}

/// Sorted multiset of conjugacy class sizes, from orbit sets of a raw table.
inline std::vector<std::size_t> class_sizes(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  std::size_t e = 0;
  for (;; ++e) {
    bool identity = true;
    for (std::size_t x = 0; x < n && identity; ++x) identity = table[e][x] == x;
    if (identity) break;
  }
  auto inv = [&](std::size_t h) {
    for (std::size_t x = 0; x < n; ++x)
      if (table[h][x] == e) return x;
    return n;
  };
  std::set<std::set<std::size_t>> orbits;
  for (std::size_t g = 0; g < n; ++g) {
    std::set<std::size_t> orbit;
    for (std::size_t h = 0; h < n; ++h) orbit.insert(table[table[h][g]][inv(h)]);
    orbits.insert(orbit);
  }
  std::vector<std::size_t> sizes;
  for (const auto& o : orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// #Hom(pi_1(genus-g surface), G) by dynamic programming over the
/// distribution of partial commutator products (no tuple enumeration).
inline std::uint64_t hom_count(const FiniteGroup& g, std::size_t genus) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> comm_dist(n, 0);
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      ++comm_dist[g.multiply(g.multiply(a, b), g.inverse(g.multiply(b, a)))];
  std::vector<std::uint64_t> dist(n, 0);
  dist[g.identity()] = 1;
  for (std::size_t step = 0; step < genus; ++step) {
    std::vector<std::uint64_t> next(n, 0);
    for (Element x = 0; x < n; ++x)
      for (Element c = 0; c < n; ++c) next[g.multiply(x, c)] += dist[x] * comm_dist[c];
    dist = std::move(next);
  }
  return dist[g.identity()];
}

}  // namespace oracle
}  // namespace cobord2::testing
