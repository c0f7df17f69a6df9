#include "cobord2/bordism.hpp"

#include <cctype>

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

struct GeneratorInfo {
  Generator gen;
  const char* name;
  std::size_t inputs;
  std::size_t outputs;
};

constexpr GeneratorInfo kGenerators[] = {
    {Generator::Cap, "cap", 0, 1},         {Generator::Cup, "cup", 1, 0},
    {Generator::Pants, "pants", 2, 1},     {Generator::Copants, "copants", 1, 2},
    {Generator::Id, "id", 1, 1},           {Generator::Swap, "swap", 2, 2},
};

const GeneratorInfo& info(Generator g) { return kGenerators[static_cast<int>(g)]; }

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Expr parse_all() {
    Expr e = expr();
    skip_space();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, "at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr e = term();
    while (accept(';')) e = BordismExpr::seq(e, term());
    return e;
  }

  Expr term() {
    Expr e = atom();
    while (accept('|')) e = BordismExpr::par(e, atom());
    return e;
  }

  Expr atom() {
    skip_space();
    if (pos_ == src_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Expr e = expr();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const auto word = src_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a generator or '('");
    for (const auto& g : kGenerators) {
      if (word == g.name) return BordismExpr::gen(g.gen);
    }
    pos_ = start;
    fail("unknown generator '" + std::string(word) + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

void print(const Expr& e, std::string& out) {
  auto wrapped = [&](const Expr& child, bool parens) {
    if (parens) out += '(';
    print(child, out);
    if (parens) out += ')';
  };
  switch (e->kind()) {
    case BordismExpr::Kind::Gen:
      out += generator_name(e->generator());
      break;
    case BordismExpr::Kind::Seq:
      wrapped(e->left(), false);
      out += " ; ";
      wrapped(e->right(), e->right()->kind() == BordismExpr::Kind::Seq);
      break;
    case BordismExpr::Kind::Par:
      wrapped(e->left(), e->left()->kind() == BordismExpr::Kind::Seq);
      out += " | ";
      wrapped(e->right(), e->right()->kind() != BordismExpr::Kind::Gen);
      break;
  }
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

struct GeneratorMatrices {
  Matrix cap, cup, pants, copants, id, swap;

  explicit GeneratorMatrices(const FrobeniusAlgebra& f) {
    const Algebra& a = f.algebra();
    const auto& s = a.structure();
    const std::size_t d = a.dim();
    cap = Matrix::column(a.unit().coords);
    cup = Matrix::row(f.counit());
    id = Matrix::identity(d);

    pants = Matrix(d, d * d);
    swap = Matrix(d * d, d * d);
    copants = Matrix(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        swap(j * d + i, i * d + j) = 1;
        for (std::size_t k = 0; k < d; ++k) pants(k, i * d + j) = s(i, j, k);
      }
    }
    // copants(e_j) = sum_i (e_j e_i) (x) e_i^v
    const Matrix& dual = f.dual_basis();
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn(s(j, i, k)) == 0) continue;
          for (std::size_t l = 0; l < d; ++l)
            if (sgn(dual(i, l)) != 0) copants(k * d + l, j) += s(j, i, k) * dual(i, l);
        }
  }

  const Matrix& of(Generator g) const {
    switch (g) {
      case Generator::Cap: return cap;
      case Generator::Cup: return cup;
      case Generator::Pants: return pants;
      case Generator::Copants: return copants;
      case Generator::Id: return id;
      case Generator::Swap: return swap;
    }
    return id;
  }
};

Matrix eval_node(const Expr& e, const GeneratorMatrices& gens) {
  switch (e->kind()) {
    case BordismExpr::Kind::Gen:
      return gens.of(e->generator());
    case BordismExpr::Kind::Seq:
      return eval_node(e->right(), gens) * eval_node(e->left(), gens);
    case BordismExpr::Kind::Par:
      return kronecker(eval_node(e->left(), gens), eval_node(e->right(), gens));
  }
  throw Error(ErrorKind::InternalInconsistency, "unknown expression node");
}

struct NamedRelation {
  const char* name;
  const char* lhs;
  const char* rhs;
};

constexpr NamedRelation kRelations[] = {
    {"unit-left", "(cap | id) ; pants", "id"},
    {"unit-right", "(id | cap) ; pants", "id"},
    {"counit-left", "copants ; (cup | id)", "id"},
    {"counit-right", "copants ; (id | cup)", "id"},
    {"associativity", "(pants | id) ; pants", "(id | pants) ; pants"},
    {"coassociativity", "copants ; (copants | id)", "copants ; (id | copants)"},
    {"commutativity", "swap ; pants", "pants"},
    {"cocommutativity", "copants ; swap", "copants"},
    {"frobenius-left", "(id | copants) ; (pants | id)", "pants ; copants"},
    {"frobenius-right", "(copants | id) ; (id | pants)", "pants ; copants"},
    {"zig-zag-left", "(id | (cap ; copants)) ; ((pants ; cup) | id)", "id"},
    {"zig-zag-right", "((cap ; copants) | id) ; (id | (pants ; cup))", "id"},
    {"swap-involution", "swap ; swap", "id | id"},
};

}  // namespace

const char* generator_name(Generator g) noexcept { return info(g).name; }

Expr BordismExpr::gen(Generator g) {
  const auto& i = info(g);
  return Ptr(new BordismExpr(Kind::Gen, g, nullptr, nullptr, i.inputs, i.outputs));
}

Expr BordismExpr::seq(Ptr a, Ptr b) {
  if (a->outputs() != b->inputs()) {
    throw Error(ErrorKind::ArityMismatch,
                "'" + to_string(a) + " ; " + to_string(b) + "': expected " + std::to_string(b->inputs()) +
                    " circles into the right side, found " + std::to_string(a->outputs()));
  }
  const auto in = a->inputs(), out = b->outputs();
  return Ptr(new BordismExpr(Kind::Seq, Generator::Id, std::move(a), std::move(b), in, out));
}

Expr BordismExpr::par(Ptr a, Ptr b) {
  const auto in = a->inputs() + b->inputs(), out = a->outputs() + b->outputs();
  return Ptr(new BordismExpr(Kind::Par, Generator::Id, std::move(a), std::move(b), in, out));
}

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

std::string to_string(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

LinearMap evaluate(const Expr& e, const FrobeniusAlgebra& f) {
  if (!f.algebra().is_commutative()) {
    throw Error(ErrorKind::NotCommutative, "bordism evaluation needs a commutative Frobenius algebra");
  }
  const GeneratorMatrices gens(f);
  LinearMap out{eval_node(e, gens), e->inputs(), e->outputs(), f.dim()};
  if (out.matrix.rows() != power(f.dim(), e->outputs()) || out.matrix.cols() != power(f.dim(), e->inputs())) {
    throw Error(ErrorKind::DimensionMismatch, "evaluated matrix shape disagrees with arity");
  }
  return out;
}

LinearMap evaluate(std::string_view source, const FrobeniusAlgebra& f) { return evaluate(parse(source), f); }

Expr closed_surface_expr(std::size_t genus) {
  Expr e = BordismExpr::gen(Generator::Cap);
  for (std::size_t g = 0; g < genus; ++g) {
    e = BordismExpr::seq(e, BordismExpr::gen(Generator::Copants));
    e = BordismExpr::seq(e, BordismExpr::gen(Generator::Pants));
  }
  return BordismExpr::seq(e, BordismExpr::gen(Generator::Cup));
}

bool check_relation(const Expr& lhs, const Expr& rhs, const FrobeniusAlgebra& f) {
  if (lhs->inputs() != rhs->inputs() || lhs->outputs() != rhs->outputs()) {
    throw Error(ErrorKind::ArityMismatch,
                "relation sides differ: " + std::to_string(lhs->inputs()) + "->" +
                    std::to_string(lhs->outputs()) + " vs " + std::to_string(rhs->inputs()) + "->" +
                    std::to_string(rhs->outputs()));
  }
  return evaluate(lhs, f) == evaluate(rhs, f);
}

std::vector<RelationResult> run_relation_suite(const FrobeniusAlgebra& f) {
  std::vector<RelationResult> results;
  for (const auto& r : kRelations) {
    results.push_back({r.name, r.lhs, r.rhs, check_relation(parse(r.lhs), parse(r.rhs), f)});
  }
  return results;
}

}  // namespace cobord2
