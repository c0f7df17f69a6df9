#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobord2/algebra.hpp"
#include "cobord2/error.hpp"
#include "cobord2/gauge.hpp"
#include "support.hpp"

using namespace cobord2;

namespace {

AlgebraElement elem(std::initializer_list<Rational> v) { return AlgebraElement{Vector(v)}; }

Matrix ints(std::size_t r, std::size_t c, std::initializer_list<int> values) {
  std::vector<Rational> v;
  for (int x : values) v.emplace_back(x);
  return Matrix(r, c, std::move(v));
}

AlgebraElement random_element(std::mt19937& rng, std::size_t dim) {
  AlgebraElement x{Vector(dim)};
  for (auto& c : x.coords) c = testing::random_rational(rng);
  return x;
}

Algebra s3_algebra() { return group_algebra(builtin_group("S3")).algebra; }

}  // namespace

TEST_CASE("algebra_from_structure") {
  const Algebra k = ground_field();
  CHECK(k.dim() == 1);
  const Algebra d = dual_numbers();
  CHECK(d.dim() == 2);
  CHECK(d.is_commutative());

  SUBCASE("non-associative constants") {
    StructureConstants s(2);
    s(0, 0, 0) = 1;
    s(1, 1, 1) = 1;
    s(0, 1, 0) = 1;
    try {
      algebra_from_structure(s, {1, 0});
      FAIL("expected NotAssociative");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotAssociative);
    }
  }
  SUBCASE("unit that is not a unit") {
    StructureConstants s(2);
    s(0, 0, 0) = 1;
    s(1, 1, 1) = 1;
    try {
      algebra_from_structure(s, {1, 0});
      FAIL("expected UnitFails");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnitFails);
    }
  }
  SUBCASE("shape mismatch") { CHECK_THROWS_AS(algebra_from_structure(StructureConstants(2), {1}), Error); }
}

TEST_CASE("multiply") {
  const Algebra d = dual_numbers();
  CHECK(multiply(d, d.basis(1), d.basis(1)) == d.zero());
  const Algebra z2 = group_algebra(builtin_group("Z2")).algebra;
  CHECK(multiply(z2, elem({1, 1}), elem({1, -1})) == z2.zero());
  CHECK_THROWS_AS(multiply(d, elem({1}), d.basis(0)), Error);

  std::mt19937 rng(3);
  const Algebra s3 = s3_algebra();
  for (int i = 0; i < 5; ++i) {
    const auto y = random_element(rng, 6);
    CHECK(multiply(s3, s3.unit(), y) == y);
    CHECK(multiply(s3, y, s3.unit()) == y);
  }
}

TEST_CASE("left_regular_matrix") {
  const Algebra d = dual_numbers();
  CHECK(left_regular_matrix(d, d.unit()) == Matrix::identity(2));
  CHECK(left_regular_matrix(d, d.basis(1)) == ints(2, 2, {0, 0, 1, 0}));
  std::mt19937 rng(5);
  const Algebra s3 = s3_algebra();
  const auto x = random_element(rng, 6), y = random_element(rng, 6);
  CHECK(left_regular_matrix(s3, x + y) == left_regular_matrix(s3, x) + left_regular_matrix(s3, y));
}

TEST_CASE("regular_trace_form") {
  CHECK(regular_trace_form(ground_field()) == ints(1, 1, {1}));
  CHECK(regular_trace_form(dual_numbers()) == ints(2, 2, {2, 0, 0, 0}));
  CHECK(regular_trace_form(diagonal_algebra(2)) == ints(2, 2, {1, 0, 0, 1}));
}

TEST_CASE("center") {
  CHECK(center(dual_numbers()).size() == 2);
  const auto z = center(s3_algebra());
  CHECK(z.size() == 3);
  CHECK(z.size() == conjugacy_classes(builtin_group("S3")).count());
  const auto m2 = center(matrix_algebra(2));
  REQUIRE(m2.size() == 1);
  CHECK(m2[0] == elem({1, 0, 0, 1}));
}

TEST_CASE("cocenter_dim") {
  CHECK(cocenter_dim(dual_numbers()) == 2);
  CHECK(cocenter_dim(s3_algebra()) == 3);
  CHECK(cocenter_dim(matrix_algebra(2)) == 1);
}

TEST_CASE("opposite") {
  const Algebra d = dual_numbers();
  CHECK(opposite(d).structure() == d.structure());
  const Algebra m2 = matrix_algebra(2);
  CHECK(opposite(opposite(m2)) == m2);
  CHECK_FALSE(opposite(m2) == m2);
  CHECK(regular_trace_form(opposite(m2)) == regular_trace_form(m2));
}

TEST_CASE("direct_sum") {
  const Algebra kk = direct_sum(ground_field(), ground_field());
  CHECK(kk == diagonal_algebra(2));
  const Algebra big = direct_sum(s3_algebra(), matrix_algebra(2));
  CHECK(big.dim() == 10);
  CHECK(center(big).size() == 4);
}

TEST_CASE("property: invariants over a mixed corpus") {
  std::vector<Algebra> corpus{ground_field(), dual_numbers(), diagonal_algebra(3), matrix_algebra(2),
                              s3_algebra(), group_algebra(builtin_group("Q8")).algebra,
                              testing::quotient_algebra({0, 0, 0}), testing::quotient_algebra({-1, 0})};
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CAPTURE(i);
    const Algebra& a = corpus[i];
    CHECK(regular_trace_form(a).is_symmetric());
    CHECK(center(a).size() == center(opposite(a)).size());
    for (const auto& z : center(a)) {
      for (std::size_t j = 0; j < a.dim(); ++j) CHECK(multiply(a, z, a.basis(j)) == multiply(a, a.basis(j), z));
    }
    for (std::size_t j = 0; j < corpus.size(); j += 3) {
      const Algebra sum = direct_sum(a, corpus[j]);
      CHECK(rank(regular_trace_form(sum)) == rank(regular_trace_form(a)) + rank(regular_trace_form(corpus[j])));
    }
  }
}

TEST_CASE("property: group algebras have center = cocenter = #classes") {
  for (const auto& tag : testing::corpus_group_tags()) {
    CAPTURE(tag);
    const auto g = builtin_group(tag);
    const Algebra a = group_algebra(g).algebra;
    const auto classes = conjugacy_classes(g).count();
    CHECK(center(a).size() == classes);
    CHECK(cocenter_dim(a) == classes);
  }
}

TEST_CASE("algebra file format") {
  Vector counit;
  const Algebra a = parse_algebra("dim 2\nunit 1 0\nc 0 0 0 1\nc 0 1 1 1\nc 1 0 1 1\ncounit 0 1\n", &counit);
  CHECK(a == dual_numbers());
  CHECK(counit == Vector{0, 1});
  CHECK(parse_algebra(format_algebra(matrix_algebra(2))) == matrix_algebra(2));
  CHECK_THROWS_AS(parse_algebra("unit 1\n"), Error);
  CHECK_THROWS_AS(parse_algebra("dim 1\nc 0 0 0 1\n"), Error);
  CHECK_THROWS_AS(parse_algebra("dim 1\nunit 1\nc 0 0 1 1\n"), Error);
  CHECK_THROWS_AS(parse_algebra("dim 1\nunit 1 2\n"), Error);
}
