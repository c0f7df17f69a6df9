#include "cobord2/algebra.hpp"

#include <fstream>
#include <sstream>

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

void require_dim(const Algebra& a, const AlgebraElement& x) {
  if (x.dim() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "element has " + std::to_string(x.dim()) +
                                                  " coordinates, algebra has dim " +
                                                  std::to_string(a.dim()));
  }
}

AlgebraElement product(const StructureConstants& s, const Vector& x, const Vector& y) {
  const std::size_t n = s.dim();
  AlgebraElement out{Vector(n)};
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(y[j]) == 0) continue;
      const Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (sgn(s(i, j, k)) != 0) out.coords[k] += xy * s(i, j, k);
      }
    }
  }
  return out;
}

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

}  // namespace

AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "element sum dimension mismatch");
  AlgebraElement out = x;
  for (std::size_t i = 0; i < x.dim(); ++i) out.coords[i] += y.coords[i];
  return out;
}

AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "element difference dimension mismatch");
  AlgebraElement out = x;
  for (std::size_t i = 0; i < x.dim(); ++i) out.coords[i] -= y.coords[i];
  return out;
}

AlgebraElement operator*(const Rational& s, const AlgebraElement& x) {
  AlgebraElement out = x;
  for (auto& c : out.coords) c *= s;
  return out;
}

Algebra algebra_from_structure(StructureConstants structure, Vector unit) {
  const std::size_t n = structure.dim();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "algebra dimension must be positive");
  if (unit.size() != n) {
    throw Error(ErrorKind::DimensionMismatch, "unit has " + std::to_string(unit.size()) +
                                                  " coordinates, expected " + std::to_string(n));
  }

  // e_j e_k for all j, k, reused on both sides of the associativity check.
  std::vector<Vector> pair_products(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      pair_products[j * n + k] = product(structure, unit_vector(n, j), unit_vector(n, k)).coords;

  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& eij = pair_products[i * n + j];
      for (std::size_t k = 0; k < n; ++k) {
        const Vector ek = unit_vector(n, k);
        if (product(structure, eij, ek).coords != product(structure, ei, pair_products[j * n + k]).coords) {
          throw Error(ErrorKind::NotAssociative,
                      "(e" + std::to_string(i) + " e" + std::to_string(j) + ") e" + std::to_string(k) +
                          " != e" + std::to_string(i) + " (e" + std::to_string(j) + " e" +
                          std::to_string(k) + ")");
        }
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i);
    if (product(structure, unit, ei).coords != ei || product(structure, ei, unit).coords != ei) {
      throw Error(ErrorKind::UnitFails, "unit law fails on basis element " + std::to_string(i));
    }
  }

  Algebra a;
  a.structure_ = std::move(structure);
  a.unit_ = AlgebraElement{std::move(unit)};
  return a;
}

bool Algebra::is_commutative() const {
  const std::size_t n = dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (structure_(i, j, k) != structure_(j, i, k)) return false;
  return true;
}

AlgebraElement Algebra::basis(std::size_t i) const {
  if (i >= dim()) throw Error(ErrorKind::IndexOutOfRange, "basis index " + std::to_string(i));
  return AlgebraElement{unit_vector(dim(), i)};
}

AlgebraElement multiply(const Algebra& a, const AlgebraElement& x, const AlgebraElement& y) {
  require_dim(a, x);
  require_dim(a, y);
  return product(a.structure(), x.coords, y.coords);
}

Matrix left_regular_matrix(const Algebra& a, const AlgebraElement& x) {
  require_dim(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = product(a.structure(), x.coords, unit_vector(n, j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col.coords[k];
  }
  return m;
}

Matrix right_regular_matrix(const Algebra& a, const AlgebraElement& x) {
  require_dim(a, x);
  const std::size_t n = a.dim();
  Matrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = product(a.structure(), unit_vector(n, j), x.coords);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col.coords[k];
  }
  return m;
}

Matrix regular_trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Matrix> left;
  left.reserve(n);
  for (std::size_t i = 0; i < n; ++i) left.push_back(left_regular_matrix(a, a.basis(i)));

  Matrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational t;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (sgn(left[i](r, c)) != 0 && sgn(left[j](c, r)) != 0) t += left[i](r, c) * left[j](c, r);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  }
  return gram;
}

std::vector<AlgebraElement> center(const Algebra& a) {
  const std::size_t n = a.dim();
  // Row block i holds the map z -> z e_i - e_i z.
  Matrix stacked(n * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto ei = a.basis(i);
    const Matrix block = right_regular_matrix(a, ei) - left_regular_matrix(a, ei);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(i * n + r, c) = block(r, c);
  }
  std::vector<AlgebraElement> basis;
  for (auto& v : kernel(stacked)) basis.push_back(AlgebraElement{std::move(v)});
  return basis;
}

std::size_t cocenter_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> commutators;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto c = multiply(a, a.basis(i), a.basis(j)) - multiply(a, a.basis(j), a.basis(i));
      commutators.push_back(c.coords);
    }
  }
  return n - row_basis(commutators, n).size();
}

Algebra opposite(const Algebra& a) {
  const std::size_t n = a.dim();
  StructureConstants s(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s(i, j, k) = a.structure()(j, i, k);
  return algebra_from_structure(std::move(s), a.unit().coords);
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  StructureConstants s(n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) s(i, j, k) = a.structure()(i, j, k);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s(n + i, n + j, n + k) = b.structure()(i, j, k);
  Vector unit = a.unit().coords;
  unit.insert(unit.end(), b.unit().coords.begin(), b.unit().coords.end());
  return algebra_from_structure(std::move(s), std::move(unit));
}

Algebra ground_field() {
  StructureConstants s(1);
  s(0, 0, 0) = 1;
  return algebra_from_structure(std::move(s), {1});
}

Algebra dual_numbers() {
  StructureConstants s(2);
  s(0, 0, 0) = 1;
  s(0, 1, 1) = 1;
  s(1, 0, 1) = 1;
  return algebra_from_structure(std::move(s), {1, 0});
}

Algebra diagonal_algebra(std::size_t n) {
  StructureConstants s(n);
  for (std::size_t i = 0; i < n; ++i) s(i, i, i) = 1;
  return algebra_from_structure(std::move(s), Vector(n, Rational(1)));
}

Algebra matrix_algebra(std::size_t n) {
  const std::size_t d = n * n;
  StructureConstants s(d);
  Vector unit(d);
  // E_ij E_jl = E_il
  for (std::size_t i = 0; i < n; ++i) {
    unit[i * n + i] = 1;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) s(i * n + j, j * n + l, i * n + l) = 1;
  }
  return algebra_from_structure(std::move(s), std::move(unit));
}

Algebra parse_algebra(std::string_view text, Vector* counit) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0, dim = 0;
  bool have_dim = false, have_unit = false, have_counit = false;
  Vector unit, form;
  StructureConstants s;

  auto fail = [&](const std::string& what) -> void {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  auto read_vector = [&](std::istringstream& ls) {
    Vector v;
    std::string tok;
    while (ls >> tok) v.push_back(parse_rational(tok));
    if (v.size() != dim) fail("expected " + std::to_string(dim) + " values, found " + std::to_string(v.size()));
    return v;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "dim") {
      if (have_dim) fail("duplicate `dim`");
      if (!(ls >> dim) || dim == 0) fail("`dim` needs a positive integer");
      s = StructureConstants(dim);
      have_dim = true;
      continue;
    }
    if (!have_dim) fail("`dim` must come first");
    if (head == "unit") {
      unit = read_vector(ls);
      have_unit = true;
    } else if (head == "counit") {
      form = read_vector(ls);
      have_counit = true;
    } else if (head == "c") {
      std::size_t i = 0, j = 0, k = 0;
      std::string value;
      if (!(ls >> i >> j >> k >> value)) fail("expected `c i j k value`");
      if (i >= dim || j >= dim || k >= dim) fail("structure index out of range");
      s(i, j, k) = parse_rational(value);
    } else {
      fail("unknown directive '" + head + "'");
    }
  }
  if (!have_dim) throw Error(ErrorKind::ParseError, "missing `dim` line");
  if (!have_unit) throw Error(ErrorKind::ParseError, "missing `unit` line");
  if (counit != nullptr) *counit = have_counit ? form : Vector{};
  return algebra_from_structure(std::move(s), std::move(unit));
}

Algebra load_algebra_file(const std::string& path, Vector* counit) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open algebra file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra(ss.str(), counit);
}

std::string format_algebra(const Algebra& a) {
  std::ostringstream os;
  const std::size_t n = a.dim();
  os << "dim " << n << "\nunit";
  for (const auto& u : a.unit().coords) os << ' ' << to_string(u);
  os << '\n';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(a.structure()(i, j, k)) != 0)
          os << "c " << i << ' ' << j << ' ' << k << ' ' << to_string(a.structure()(i, j, k)) << '\n';
  return os.str();
}

}  // namespace cobord2
