#include "cobord2/groups.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

// Greedy generating set: each new generator is the smallest element outside
// the magma closure of the previous ones.
std::vector<Element> magma_generators(const std::vector<std::vector<Element>>& table) {
  const std::size_t n = table.size();
  std::vector<bool> in(n, false);
  std::vector<Element> members;
  std::vector<Element> gens;
  std::size_t covered = 0;
  for (Element candidate = 0; candidate < n; ++candidate) {
    if (in[candidate]) continue;
    gens.push_back(candidate);
    std::deque<Element> pending{candidate};
    in[candidate] = true;
    while (!pending.empty()) {
      const Element z = pending.front();
      pending.pop_front();
      members.push_back(z);
      ++covered;
      for (std::size_t m = 0; m < members.size(); ++m) {
        const Element y = members[m];
        for (Element p : {table[z][y], table[y][z]}) {
          if (!in[p]) {
            in[p] = true;
            pending.push_back(p);
          }
        }
      }
    }
    if (covered == n) break;
  }
  return gens;
}

}  // namespace

std::vector<std::vector<Element>> FiniteGroup::table() const {
  std::vector<std::vector<Element>> out(order_, std::vector<Element>(order_));
  for (std::size_t i = 0; i < order_; ++i)
    for (std::size_t j = 0; j < order_; ++j) out[i][j] = table_[i * order_ + j];
  return out;
}

bool FiniteGroup::is_abelian() const {
  for (Element i = 0; i < order_; ++i)
    for (Element j = i + 1; j < order_; ++j)
      if (multiply(i, j) != multiply(j, i)) return false;
  return true;
}

FiniteGroup group_from_table(const std::vector<std::vector<Element>>& table, std::string name) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty multiplication table");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorKind::InvalidArgument,
                  "table row " + std::to_string(i) + " has " + std::to_string(table[i].size()) +
                      " entries, expected " + std::to_string(n));
    }
    for (auto v : table[i]) {
      if (v >= n) {
        throw Error(ErrorKind::InvalidArgument,
                    "table row " + std::to_string(i) + " has out-of-range entry " + std::to_string(v));
      }
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen_row[table[i][j]]) {
        throw Error(ErrorKind::NotLatinSquare, "row " + std::to_string(i) + " repeats entry " +
                                                   std::to_string(table[i][j]));
      }
      if (seen_col[table[j][i]]) {
        throw Error(ErrorKind::NotLatinSquare, "column " + std::to_string(i) + " repeats entry " +
                                                   std::to_string(table[j][i]));
      }
      seen_row[table[i][j]] = true;
      seen_col[table[j][i]] = true;
    }
  }

  std::size_t identity = n;
  for (std::size_t e = 0; e < n && identity == n; ++e) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[e][j] == j && table[j][e] == j;
    if (ok) identity = e;
  }
  if (identity == n) throw Error(ErrorKind::NoIdentity, "no two-sided identity row/column");

  std::vector<Element> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto it = std::find(table[i].begin(), table[i].end(), static_cast<Element>(identity));
    const auto j = static_cast<std::size_t>(it - table[i].begin());
    if (table[j][i] != identity) {
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(i) + " has no two-sided inverse");
    }
    inverse[i] = static_cast<Element>(j);
  }

  // (x a) y = x (a y) for a in a magma generating set implies associativity.
  for (Element a : magma_generators(table)) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (table[table[x][a]][y] != table[x][table[a][y]]) {
          throw Error(ErrorKind::NotAssociative, "triple " + triple(x, a, y) + " is not associative");
        }
      }
    }
  }

  FiniteGroup g;
  g.order_ = n;
  g.identity_ = static_cast<Element>(identity);
  g.inverse_ = std::move(inverse);
  g.table_.reserve(n * n);
  for (const auto& row : table) g.table_.insert(g.table_.end(), row.begin(), row.end());
  g.name_ = std::move(name);
  return g;
}

FiniteGroup group_from_permutations(std::size_t degree, const std::vector<Permutation>& generators,
                                    std::size_t cap, std::string name) {
  if (degree == 0) throw Error(ErrorKind::InvalidArgument, "permutation degree must be positive");
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& p = generators[g];
    std::vector<bool> hit(degree, false);
    bool ok = p.size() == degree;
    for (std::size_t i = 0; ok && i < degree; ++i) {
      ok = p[i] < degree && !hit[p[i]];
      if (ok) hit[p[i]] = true;
    }
    if (!ok) {
      throw Error(ErrorKind::InvalidArgument,
                  "generator " + std::to_string(g) + " is not a permutation of 0.." +
                      std::to_string(degree - 1));
    }
  }

  Permutation id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elements{id};
  std::unordered_map<Permutation, Element, PermutationHash> index{{id, 0}};
  std::vector<std::size_t> parent{0};
  std::vector<std::size_t> via{0};
  // right[s][x] = index of elements[x] * generators[s]
  std::vector<std::vector<Element>> right(generators.size());

  for (std::size_t x = 0; x < elements.size(); ++x) {
    for (std::size_t s = 0; s < generators.size(); ++s) {
      Permutation next = compose(elements[x], generators[s]);
      auto [it, inserted] = index.try_emplace(next, static_cast<Element>(elements.size()));
      if (inserted) {
        if (elements.size() >= cap) {
          throw Error(ErrorKind::ClosureTooLarge,
                      "generated group exceeds cap of " + std::to_string(cap) + " elements");
        }
        elements.push_back(std::move(next));
        parent.push_back(x);
        via.push_back(s);
      }
      right[s].push_back(it->second);
    }
  }

  const std::size_t n = elements.size();
  // g_i * g_j = (g_i * g_parent(j)) * s_j, filled in discovery order.
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    table[i][0] = static_cast<Element>(i);
    for (std::size_t j = 1; j < n; ++j) table[i][j] = right[via[j]][table[i][parent[j]]];
  }
  return group_from_table(table, std::move(name));
}

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "cyclic group order must be positive");
  if (n > kDefaultGroupCap) {
    throw Error(ErrorKind::ParameterTooLarge, "cyclic(" + std::to_string(n) + ") exceeds cap");
  }
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = static_cast<Element>((i + j) % n);
  return group_from_table(table, "Z" + std::to_string(n));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "symmetric group degree must be positive");
  if (n > 7) throw Error(ErrorKind::ParameterTooLarge, "symmetric(" + std::to_string(n) + ") exceeds n <= 7");
  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation transposition(n), cycle(n);
    for (std::size_t i = 0; i < n; ++i) {
      transposition[i] = static_cast<std::uint32_t>(i);
      cycle[i] = static_cast<std::uint32_t>((i + 1) % n);
    }
    std::swap(transposition[0], transposition[1]);
    gens = {transposition, cycle};
  }
  return group_from_permutations(n, gens, kDefaultGroupCap, "S" + std::to_string(n));
}

FiniteGroup dihedral_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dihedral parameter must be positive");
  if (2 * n > kDefaultGroupCap) {
    throw Error(ErrorKind::ParameterTooLarge, "dihedral(" + std::to_string(n) + ") exceeds cap");
  }
  // Element k + n*e is r^k s^e, with s r s = r^-1.
  const std::size_t order = 2 * n;
  std::vector<std::vector<Element>> table(order, std::vector<Element>(order));
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t a = x % n, e = x / n;
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t b = y % n, f = y / n;
      const std::size_t k = e == 0 ? (a + b) % n : (a + n - b) % n;
      table[x][y] = static_cast<Element>(k + n * ((e + f) % 2));
    }
  }
  return group_from_table(table, "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // Element 2u + s is (-1)^s * unit[u], units ordered 1, i, j, k.
  // unit[u] * unit[v] = sign * unit[w]
  static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<std::vector<Element>> table(8, std::vector<Element>(8));
  for (int x = 0; x < 8; ++x) {
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int sign = (x % 2 + y % 2 + kSign[u][v]) % 2;
      table[x][y] = static_cast<Element>(2 * kUnit[u][v] + sign);
    }
  }
  return group_from_table(table, "Q8");
}

FiniteGroup builtin_group(std::string_view tag) {
  auto parse_param = [&](std::string_view digits) -> std::size_t {
    std::size_t value = 0;
    const auto* end = digits.data() + digits.size();
    auto [ptr, ec] = std::from_chars(digits.data(), end, value);
    if (digits.empty() || ec != std::errc{} || ptr != end) {
      if (ec == std::errc::result_out_of_range) {
        throw Error(ErrorKind::ParameterTooLarge, "parameter too large in '" + std::string(tag) + "'");
      }
      throw Error(ErrorKind::UnknownName, "unknown group '" + std::string(tag) + "'");
    }
    return value;
  };
  auto functional = [&](std::string_view prefix, std::string_view& inner) {
    if (tag.size() > prefix.size() + 2 && tag.substr(0, prefix.size()) == prefix &&
        tag[prefix.size()] == '(' && tag.back() == ')') {
      inner = tag.substr(prefix.size() + 1, tag.size() - prefix.size() - 2);
      return true;
    }
    return false;
  };

  if (tag == "Q8" || tag == "quaternion8") return quaternion_group();
  if (tag == "trivial") return cyclic_group(1);
  std::string_view inner;
  if (functional("cyclic", inner)) return cyclic_group(parse_param(inner));
  if (functional("symmetric", inner)) return symmetric_group(parse_param(inner));
  if (functional("dihedral", inner)) return dihedral_group(parse_param(inner));
  if (tag.size() >= 2) {
    const auto rest = tag.substr(1);
    switch (tag[0]) {
      case 'Z': return cyclic_group(parse_param(rest));
      case 'S': return symmetric_group(parse_param(rest));
      case 'D': return dihedral_group(parse_param(rest));
      default: break;
    }
  }
  throw Error(ErrorKind::UnknownName, "unknown group '" + std::string(tag) + "'");
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& group) {
  const std::size_t n = group.order();
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  ConjugacyClasses out;
  out.class_of.assign(n, kUnassigned);

  auto orbit_of = [&](Element g) {
    std::vector<Element> members;
    for (Element h = 0; h < n; ++h) {
      const Element c = group.multiply(group.multiply(h, g), group.inverse(h));
      if (out.class_of[c] == kUnassigned) {
        out.class_of[c] = out.classes.size();
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    out.sizes.push_back(members.size());
    out.classes.push_back(std::move(members));
  };

  orbit_of(group.identity());
  for (Element g = 0; g < n; ++g) {
    if (out.class_of[g] == kUnassigned) orbit_of(g);
  }
  return out;
}

FiniteGroup parse_group(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line, name;
  std::vector<std::vector<std::uint32_t>> rows;
  enum class Mode { None, Table, Perm } mode = Mode::None;
  std::size_t size = 0;
  std::size_t line_no = 0;

  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "name") {
      std::getline(ls >> std::ws, name);
      while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
      continue;
    }
    if (mode == Mode::None) {
      std::string word;
      if (head == "order" && (ls >> size)) {
        mode = Mode::Table;
      } else if (head == "perm" && (ls >> word) && word == "degree" && (ls >> size)) {
        mode = Mode::Perm;
      } else {
        fail("expected `order n` or `perm degree d`");
      }
      continue;
    }
    std::vector<std::uint32_t> row;
    std::istringstream rs(line);
    std::string tok;
    while (rs >> tok) {
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) fail("bad index '" + tok + "'");
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }

  if (mode == Mode::None) fail("missing `order` or `perm degree` header");
  if (mode == Mode::Table) {
    if (rows.size() != size) {
      throw Error(ErrorKind::ParseError, "expected " + std::to_string(size) + " table rows, found " +
                                             std::to_string(rows.size()));
    }
    return group_from_table(rows, name);
  }
  return group_from_permutations(size, rows, kDefaultGroupCap, name);
}

FiniteGroup load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open group file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group(ss.str());
}

}  // namespace cobord2
