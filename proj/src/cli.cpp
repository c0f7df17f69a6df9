#include "cobord2/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "cobord2/bordism.hpp"
#include "cobord2/classify.hpp"
#include "cobord2/error.hpp"
#include "cobord2/gauge.hpp"

namespace cobord2::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_file(const std::string& spec) { return std::filesystem::is_regular_file(spec); }

std::string first_word(const std::string& text) {
  std::istringstream in(text);
  std::string line, word;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if ((ls >> word) && word != "name") return word;
  }
  return {};
}

FiniteGroup load_group(const std::string& spec) {
  return is_file(spec) ? load_group_file(spec) : builtin_group(spec);
}

std::string group_label(const FiniteGroup& g, const std::string& spec) {
  return g.name().empty() ? spec : g.name();
}

// An algebra input is an algebra file (optionally with a counit), a group
// file or tag (its group algebra), or one of the algebra tags k, dual, Mn.
struct AlgebraInput {
  Algebra algebra;
  std::optional<Vector> counit;
};

AlgebraInput load_algebra(const std::string& spec) {
  if (is_file(spec)) {
    const std::string text = read_file(spec);
    if (first_word(text) == "dim") {
      Vector counit;
      Algebra a = parse_algebra(text, &counit);
      if (counit.empty()) return {std::move(a), std::nullopt};
      return {std::move(a), std::move(counit)};
    }
    return {group_algebra(parse_group(text)).algebra, std::nullopt};
  }
  if (spec == "k") return {ground_field(), std::nullopt};
  if (spec == "dual") return {dual_numbers(), std::nullopt};
  if (spec.size() >= 2 && spec[0] == 'M') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), n);
    if (ec == std::errc{} && ptr == spec.data() + spec.size() && n >= 1) {
      if (n > 8) throw Error(ErrorKind::ParameterTooLarge, "matrix algebra " + spec + " exceeds M8");
      return {matrix_algebra(n), std::nullopt};
    }
  }
  return {group_algebra(builtin_group(spec)).algebra, std::nullopt};
}

// A Frobenius input is a Frobenius file (algebra file with a counit line) or
// a group spec, which stands for the Dijkgraaf-Witten center of that group.
FrobeniusAlgebra load_frobenius(const std::string& spec) {
  if (is_file(spec)) {
    const std::string text = read_file(spec);
    if (first_word(text) == "dim") {
      Vector counit;
      Algebra a = parse_algebra(text, &counit);
      if (counit.empty()) throw Error(ErrorKind::ParseError, "Frobenius file '" + spec + "' has no counit line");
      return frobenius_from_counit(a, counit);
    }
    return class_function_space(parse_group(text)).center_frobenius;
  }
  return class_function_space(builtin_group(spec)).center_frobenius;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("bad class index '" + tok + "' in --boundary");
    }
    out.push_back(v);
  }
  return out;
}

std::uint64_t work_cap() {
  const char* env = std::getenv("COBORD2_WORK_CAP");
  if (env == nullptr || *env == '\0') return kDefaultWorkCap;
  std::uint64_t cap = 0;
  const std::string_view s(env);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw UsageError("COBORD2_WORK_CAP must be a non-negative integer, got '" + std::string(s) + "'");
  }
  return cap;
}

void print_report(std::ostream& out, const std::string& label, std::size_t dim,
                  const ClassificationReport& r, const std::string& format) {
  if (format == "kv") {
    out << format_report(r);
    return;
  }
  out << "algebra " << label << " (dim " << dim << ")\n";
  out << "  semisimple:   " << (r.semisimple ? "yes" : "no") << '\n';
  out << "  center dim:   " << r.center_dim << '\n';
  out << "  cocenter dim: " << r.cocenter_dim << '\n';
  if (r.morita_model) out << "  Morita equivalent to Q[Z/" << r.center_dim << "] (" << *r.morita_model << ")\n";
  for (const auto& [criterion, verdict] : r.evidence) out << "  evidence " << criterion << " = " << verdict << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluator for 2D TQFTs, finite gauge theory and algebra classification", "cobord2"};
  app.require_subcommand(1);

  std::string frob_spec, dsl;
  auto* eval = app.add_subcommand("eval", "Evaluate a bordism expression over a Frobenius algebra");
  eval->add_option("frobenius", frob_spec, "Frobenius file or group spec (DW center)")->required();
  eval->add_option("expr", dsl, "Bordism expression, e.g. \"cap ; copants ; pants ; cup\"")->required();

  std::string group_spec, boundary;
  std::size_t genus = 0;
  std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  bool brute = false;
  auto* dw = app.add_subcommand("dw", "Dijkgraaf-Witten invariant of a closed or bounded surface");
  dw->add_option("group", group_spec, "Group file or builtin tag (Z4, S3, D4, Q8, ...)")->required();
  dw->add_option("--genus,-g", genus, "Surface genus")->required();
  dw->add_flag("--brute-force", brute, "Count homomorphisms from the surface group exhaustively");
  dw->add_option("--boundary", boundary, "Comma-separated class indices labeling incoming circles");
  dw->add_option("--workers", workers, "Threads for --brute-force")->check(CLI::PositiveNumber);

  std::string classify_spec, format = "text";
  auto* cls = app.add_subcommand("classify", "Semisimplicity, center/cocenter and Morita model");
  cls->add_option("algebra", classify_spec, "Algebra/Frobenius file, group spec, or k|dual|Mn")->required();
  cls->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "kv"}));

  std::string spec_a, spec_b;
  auto* morita = app.add_subcommand("morita", "Decide Morita equivalence of two semisimple algebras");
  morita->add_option("A", spec_a, "First algebra")->required();
  morita->add_option("B", spec_b, "Second algebra")->required();

  std::string classes_spec;
  auto* classes = app.add_subcommand("classes", "Conjugacy classes of a group");
  classes->add_option("group", classes_spec, "Group file or builtin tag")->required();

  std::string rel_spec;
  auto* relations = app.add_subcommand("relations", "Check the 2D TQFT relation suite");
  relations->add_option("frobenius", rel_spec, "Frobenius file or group spec (DW center)")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (eval->parsed()) {
      const FrobeniusAlgebra f = load_frobenius(frob_spec);
      out << format_matrix(evaluate(dsl, f).matrix);
    } else if (dw->parsed()) {
      const FiniteGroup g = load_group(group_spec);
      if (brute) {
        if (!boundary.empty()) throw UsageError("--brute-force does not support --boundary");
        const auto r = dw_brute_force(g, genus, work_cap(), workers);
        out << "Z = " << to_string(r.value) << " (count=" << r.count << ", |G|=" << r.order << ")\n";
      } else if (!boundary.empty()) {
        const auto space = class_function_space(g);
        out << "Z = " << to_string(dw_genus_with_boundary(space, genus, parse_index_list(boundary))) << '\n';
      } else {
        out << "Z = " << to_string(dw_closed_invariant(g, genus)) << '\n';
      }
    } else if (cls->parsed()) {
      const AlgebraInput in = load_algebra(classify_spec);
      const auto report = in.counit ? classify_frobenius(frobenius_from_counit(in.algebra, *in.counit))
                                    : classify(in.algebra);
      print_report(out, classify_spec, in.algebra.dim(), report, format);
    } else if (morita->parsed()) {
      const Algebra a = load_algebra(spec_a).algebra;
      const Algebra b = load_algebra(spec_b).algebra;
      const bool equivalent = morita_equivalent(a, b);
      const auto da = center(a).size(), db = center(b).size();
      out << "morita-equivalent: " << (equivalent ? "true" : "false") << " (center dims " << da
          << (da == db ? " = " : " != ") << db << ")\n";
    } else if (classes->parsed()) {
      const FiniteGroup g = load_group(classes_spec);
      const auto cc = conjugacy_classes(g);
      out << "group " << group_label(g, classes_spec) << " order " << g.order() << '\n';
      out << "classes " << cc.count() << '\n';
      for (std::size_t c = 0; c < cc.count(); ++c) {
        out << "class " << c << " size " << cc.sizes[c] << ":";
        for (auto m : cc.classes[c]) out << ' ' << m;
        out << '\n';
      }
    } else if (relations->parsed()) {
      const auto results = run_relation_suite(load_frobenius(rel_spec));
      std::size_t passed = 0;
      for (const auto& r : results) {
        out << r.name << ": " << (r.passed ? "pass" : "FAIL") << "  [" << r.lhs << "  ==  " << r.rhs << "]\n";
        passed += r.passed ? 1 : 0;
      }
      out << "relations " << passed << "/" << results.size() << " passed\n";
      return passed == results.size() ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace cobord2::cli
