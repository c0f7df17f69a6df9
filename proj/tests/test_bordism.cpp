#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cobord2/bordism.hpp"
#include "cobord2/error.hpp"
#include "cobord2/gauge.hpp"
#include "support.hpp"

using namespace cobord2;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::InvalidArgument;
}

Matrix scalar(const Rational& r) { return Matrix(1, 1, {r}); }

FrobeniusAlgebra s3_center() { return class_function_space(builtin_group("S3")).center_frobenius; }

std::size_t pow_dim(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= d;
  return r;
}

// Independent interpreter: acts on tensors directly through the algebra
// operations, never building generator matrices or Kronecker products.
Vector apply(const Expr& e, const FrobeniusAlgebra& f, const Vector& v) {
  const Algebra& a = f.algebra();
  const std::size_t d = a.dim();
  switch (e->kind()) {
    case BordismExpr::Kind::Seq:
      return apply(e->right(), f, apply(e->left(), f, v));
    case BordismExpr::Kind::Par: {
      const auto& l = e->left();
      const auto& r = e->right();
      const std::size_t lin = pow_dim(d, l->inputs()), rin = pow_dim(d, r->inputs());
      const std::size_t lout = pow_dim(d, l->outputs()), rout = pow_dim(d, r->outputs());
      // Apply left factor slice by slice, then the right factor.
      Vector mid(lout * rin);
      for (std::size_t y = 0; y < rin; ++y) {
        Vector slice(lin);
        for (std::size_t x = 0; x < lin; ++x) slice[x] = v[x * rin + y];
        const Vector out = apply(l, f, slice);
        for (std::size_t x = 0; x < lout; ++x) mid[x * rin + y] = out[x];
      }
      Vector result(lout * rout);
      for (std::size_t x = 0; x < lout; ++x) {
        const Vector slice(mid.begin() + static_cast<long>(x * rin), mid.begin() + static_cast<long>((x + 1) * rin));
        const Vector out = apply(r, f, slice);
        for (std::size_t y = 0; y < rout; ++y) result[x * rout + y] = out[y];
      }
      return result;
    }
    case BordismExpr::Kind::Gen:
      break;
  }
  switch (e->generator()) {
    case Generator::Id:
      return v;
    case Generator::Cap:
      return (v[0] * a.unit()).coords;
    case Generator::Cup:
      return {f.apply_counit(AlgebraElement{v})};
    case Generator::Swap: {
      Vector out(d * d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) out[j * d + i] = v[i * d + j];
      return out;
    }
    case Generator::Pants: {
      AlgebraElement acc = a.zero();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
          if (v[i * d + j] != 0) acc = acc + v[i * d + j] * multiply(a, a.basis(i), a.basis(j));
      return acc.coords;
    }
    case Generator::Copants: {
      Vector out(d * d);
      const AlgebraElement x{v};
      for (std::size_t i = 0; i < d; ++i) {
        const auto left = multiply(a, x, a.basis(i));
        const auto right = f.dual(i);
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l) out[k * d + l] += left.coords[k] * right.coords[l];
      }
      return out;
    }
  }
  return v;
}

Matrix interpret(const Expr& e, const FrobeniusAlgebra& f) {
  const std::size_t d = f.dim();
  const std::size_t cols = pow_dim(d, e->inputs()), rows = pow_dim(d, e->outputs());
  Matrix m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c) {
    Vector basis(cols);
    basis[c] = 1;
    const Vector out = apply(e, f, basis);
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = out[r];
  }
  return m;
}

// Random layer consuming exactly `inputs` circles, or nullptr if it would
// produce more than `max_out` circles.
Expr random_layer(std::mt19937& rng, std::size_t inputs, std::size_t max_out) {
  static const Generator one[] = {Generator::Cup, Generator::Copants, Generator::Id};
  static const Generator two[] = {Generator::Pants, Generator::Swap};
  Expr layer = nullptr;
  auto push = [&](Expr g) { layer = layer ? BordismExpr::par(layer, g) : g; };
  std::size_t remaining = inputs;
  while (remaining > 0) {
    if (rng() % 5 == 0) push(BordismExpr::gen(Generator::Cap));
    if (remaining >= 2 && rng() % 2 == 0) {
      push(BordismExpr::gen(two[rng() % 2]));
      remaining -= 2;
    } else {
      push(BordismExpr::gen(one[rng() % 3]));
      remaining -= 1;
    }
  }
  if (!layer) push(BordismExpr::gen(Generator::Cap));
  return layer->outputs() <= max_out ? layer : nullptr;
}

Expr random_expr(std::mt19937& rng) {
  Expr e = nullptr;
  std::size_t arity = rng() % 3;
  const std::size_t steps = 1 + rng() % 4;
  for (std::size_t s = 0; s < steps; ++s) {
    Expr layer = nullptr;
    while (!layer) layer = random_layer(rng, arity, 3);
    e = e ? BordismExpr::seq(e, layer) : layer;
    arity = layer->outputs();
  }
  return e;
}

}  // namespace

TEST_CASE("parse") {
  const auto a = parse("cap ; copants");
  CHECK(a->inputs() == 0);
  CHECK(a->outputs() == 2);
  const auto b = parse("pants ; cup");
  CHECK(b->inputs() == 2);
  CHECK(b->outputs() == 0);
  CHECK(kind_of([] { parse("cap ; pants"); }) == ErrorKind::ArityMismatch);

  const auto c = parse("  (id|cap)\t;pants ");
  CHECK(c->inputs() == 1);
  CHECK(c->outputs() == 1);
  CHECK(to_string(c) == "id | cap ; pants");
  CHECK(to_string(parse("id | (cap ; id)")) == "id | (cap ; id)");
  CHECK(to_string(parse("id | (id | id)")) == "id | (id | id)");
}

TEST_CASE("parse errors carry positions") {
  for (const char* bad : {"", "cap ;", "(cap", "cap)", "handle", "cap ; ; cup", "cap | | cup", "cap 1"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { parse(bad); }) == ErrorKind::SyntaxError);
  }
  try {
    parse("cap ; bogus");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("position 6") != std::string::npos);
  }
}

TEST_CASE("property: printing and reparsing preserves the tree") {
  std::mt19937 rng(17);
  for (int i = 0; i < 50; ++i) {
    const Expr e = random_expr(rng);
    const std::string text = to_string(e);
    CAPTURE(text);
    CHECK(to_string(parse(text)) == text);
  }
}

TEST_CASE("evaluate") {
  const auto s3 = s3_center();
  CHECK(evaluate("cap ; cup", s3).matrix == scalar(Rational(1, 6)));
  CHECK(evaluate("cap ; copants ; pants ; cup", s3).matrix == scalar(3));

  const auto d = frobenius_from_counit(dual_numbers(), {0, 1});
  CHECK(evaluate("cap ; cup", d).matrix == scalar(0));
  for (const auto& [name, f] : testing::corpus_frobenius()) {
    CAPTURE(name);
    CHECK(evaluate("(id | cap) ; pants", f).matrix == Matrix::identity(f.dim()));
    // The counit applied after multiplication recovers the pairing.
    CHECK(evaluate("pants ; cup", f).matrix == Matrix::row(f.gram().entries()));
  }
  const auto m2 = frobenius_from_counit(matrix_algebra(2), {1, 0, 0, 1});
  CHECK(kind_of([&] { evaluate("id", m2); }) == ErrorKind::NotCommutative);
}

TEST_CASE("closed_surface_expr") {
  CHECK(to_string(closed_surface_expr(0)) == "cap ; cup");
  CHECK(to_string(closed_surface_expr(1)) == "cap ; copants ; pants ; cup");
  CHECK(evaluate(closed_surface_expr(2), s3_center()).matrix == scalar(81));
}

TEST_CASE("check_relation") {
  const auto s3 = s3_center();
  CHECK(check_relation(parse("(id | (cap ; copants)) ; ((pants ; cup) | id)"), parse("id"), s3));
  CHECK(check_relation(parse("swap ; pants"), parse("pants"), s3));
  CHECK(check_relation(parse("(pants | id) ; pants"), parse("(id | pants) ; pants"), s3));
  CHECK_FALSE(check_relation(parse("copants ; pants"), parse("id"), s3));
  CHECK(kind_of([&] { check_relation(parse("pants"), parse("id"), s3); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("property: relation suite holds on corpus and random commutative algebras") {
  std::vector<FrobeniusAlgebra> all;
  for (auto& [name, f] : testing::corpus_frobenius()) all.push_back(f);
  std::mt19937 rng(1234);
  for (int i = 0; i < 15; ++i) all.push_back(testing::random_commutative_frobenius(rng));
  for (std::size_t n = 0; n < all.size(); ++n) {
    CAPTURE(n);
    for (const auto& r : run_relation_suite(all[n])) {
      CAPTURE(r.name);
      CHECK(r.passed);
    }
  }
}

TEST_CASE("property: evaluator matches handle formula and is invariant under sewing") {
  std::mt19937 rng(77);
  std::vector<FrobeniusAlgebra> all;
  for (auto& [name, f] : testing::corpus_frobenius()) all.push_back(f);
  for (int i = 0; i < 10; ++i) all.push_back(testing::random_commutative_frobenius(rng));

  const char* handle_placements[] = {
      "cap ; copants ; pants ; copants ; pants ; cup",
      "cap ; copants ; (id | (copants ; pants)) ; pants ; cup",
      "cap ; copants ; ((copants ; pants) | id) ; pants ; cup",
      "cap ; copants ; (copants | id) ; (id | pants) ; pants ; cup",
      "cap ; copants ; (id | copants) ; (pants | id) ; pants ; cup",
  };
  for (std::size_t n = 0; n < all.size(); ++n) {
    CAPTURE(n);
    const auto& f = all[n];
    for (std::size_t g = 0; g <= 5; ++g) {
      CHECK(evaluate(closed_surface_expr(g), f).matrix == scalar(genus_invariant(f, g)));
    }
    for (const char* p : handle_placements) {
      CAPTURE(p);
      CHECK(evaluate(p, f).matrix == scalar(genus_invariant(f, 2)));
    }
    // A handle inserted at every position of a genus-2 chain gives genus 3.
    for (std::size_t pos = 1; pos <= 5; ++pos) {
      Expr e = BordismExpr::gen(Generator::Cap);
      for (std::size_t step = 1; step <= 5; ++step) {
        if (step == pos) {
          const Expr handle = parse("copants ; pants");
          const Expr id = BordismExpr::gen(Generator::Id);
          // On a two-circle slice the handle goes on either leg.
          e = BordismExpr::seq(e, e->outputs() == 1 ? handle
                                  : rng() % 2     ? BordismExpr::par(id, handle)
                                                  : BordismExpr::par(handle, id));
        }
        if (step <= 4) e = BordismExpr::seq(e, BordismExpr::gen(step % 2 ? Generator::Copants : Generator::Pants));
      }
      e = BordismExpr::seq(e, BordismExpr::gen(Generator::Cup));
      CHECK(evaluate(e, f).matrix == scalar(genus_invariant(f, 3)));
    }
  }
}

TEST_CASE("property: matrix evaluator agrees with the tensor interpreter") {
  std::mt19937 rng(4242);
  std::vector<FrobeniusAlgebra> all;
  for (auto& [name, f] : testing::corpus_frobenius()) all.push_back(f);
  for (int i = 0; i < 5; ++i) all.push_back(testing::random_commutative_frobenius(rng));
  for (int trial = 0; trial < 120; ++trial) {
    const auto& f = all[rng() % all.size()];
    const Expr e = random_expr(rng);
    CAPTURE(to_string(e));
    const LinearMap m = evaluate(e, f);
    CHECK(m.inputs == e->inputs());
    CHECK(m.outputs == e->outputs());
    CHECK(m.matrix == interpret(e, f));
    if (e->kind() == BordismExpr::Kind::Seq) {
      CHECK(m.matrix == evaluate(e->right(), f).matrix * evaluate(e->left(), f).matrix);
    }
    if (e->kind() == BordismExpr::Kind::Par) {
      CHECK(m.matrix == kronecker(evaluate(e->left(), f).matrix, evaluate(e->right(), f).matrix));
    }
  }
}
