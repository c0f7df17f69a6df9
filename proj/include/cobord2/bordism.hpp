#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cobord2/frobenius.hpp"
#include "cobord2/matrix.hpp"

namespace cobord2 {

enum class Generator { Cap, Cup, Pants, Copants, Id, Swap };

const char* generator_name(Generator g) noexcept;

/// Immutable bordism expression tree. Every node knows how many circles it
/// consumes (`inputs`) and produces (`outputs`).
///
/// `seq(a, b)` runs a first, then b (diagrammatic order). `par(a, b)` places
/// a to the left of b; in tensor-power bases the leftmost factor is the most
/// significant digit.
class BordismExpr {
 public:
  enum class Kind { Gen, Seq, Par };
  using Ptr = std::shared_ptr<const BordismExpr>;

  static Ptr gen(Generator g);
  /// Throws ArityMismatch when a.outputs != b.inputs.
  static Ptr seq(Ptr a, Ptr b);
  static Ptr par(Ptr a, Ptr b);

  Kind kind() const noexcept { return kind_; }
  Generator generator() const noexcept { return generator_; }
  const Ptr& left() const noexcept { return left_; }
  const Ptr& right() const noexcept { return right_; }
  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t outputs() const noexcept { return outputs_; }

 private:
  BordismExpr(Kind kind, Generator g, Ptr l, Ptr r, std::size_t in, std::size_t out)
      : kind_(kind), generator_(g), left_(std::move(l)), right_(std::move(r)), inputs_(in), outputs_(out) {}

  Kind kind_;
  Generator generator_;
  Ptr left_;
  Ptr right_;
  std::size_t inputs_;
  std::size_t outputs_;
};

using Expr = BordismExpr::Ptr;

/// Grammar:
///   expr := term (';' term)*
///   term := atom ('|' atom)*
///   atom := cap | cup | pants | copants | id | swap | '(' expr ')'
/// Throws SyntaxError (with byte offset) or ArityMismatch.
Expr parse(std::string_view source);

/// Canonical text form; parse(to_string(e)) rebuilds the same tree.
std::string to_string(const Expr& e);

/// A matrix from (base_dim)^inputs to (base_dim)^outputs.
struct LinearMap {
  Matrix matrix;
  std::size_t inputs = 0;
  std::size_t outputs = 0;
  std::size_t base_dim = 0;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

/// Evaluates with cap -> unit, cup -> counit, pants -> multiplication,
/// copants -> a |-> sum_i (a e_i) (x) e_i^v. Throws NotCommutative.
LinearMap evaluate(const Expr& e, const FrobeniusAlgebra& f);
LinearMap evaluate(std::string_view source, const FrobeniusAlgebra& f);

/// cap ; (copants ; pants)^g ; cup
Expr closed_surface_expr(std::size_t genus);

/// Exact equality of evaluations. Throws ArityMismatch when the two sides
/// have different arities.
bool check_relation(const Expr& lhs, const Expr& rhs, const FrobeniusAlgebra& f);

struct RelationResult {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool passed = false;
};

/// Unit, counit, (co)associativity, (co)commutativity, Frobenius and
/// zig-zag relations.
std::vector<RelationResult> run_relation_suite(const FrobeniusAlgebra& f);

}  // namespace cobord2
