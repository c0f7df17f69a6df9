#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobord2/classify.hpp"
#include "cobord2/error.hpp"
#include "cobord2/gauge.hpp"
#include "support.hpp"

using namespace cobord2;

namespace {

Algebra ga(const char* tag) { return group_algebra(builtin_group(tag)).algebra; }

}  // namespace

TEST_CASE("is_semisimple") {
  for (const auto& tag : testing::corpus_group_tags()) CHECK(is_semisimple(ga(tag.c_str())));
  CHECK_FALSE(is_semisimple(dual_numbers()));
  CHECK(is_semisimple(matrix_algebra(2)));
  CHECK(rank(regular_trace_form(matrix_algebra(2))) == 4);
}

TEST_CASE("morita_equivalent") {
  CHECK(morita_equivalent(ga("S3"), ga("Z3")));
  CHECK_FALSE(morita_equivalent(ga("Z2"), ga("Z3")));
  CHECK(morita_equivalent(matrix_algebra(2), ground_field()));
  try {
    morita_equivalent(ga("S3"), dual_numbers());
    FAIL("expected NotSemisimple");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSemisimple);
    CHECK(std::string(e.what()).find("B") != std::string::npos);
  }
}

TEST_CASE("Wedderburn shape of Q[S3] is Morita equivalent to it") {
  const Algebra shape = direct_sum(direct_sum(ground_field(), ground_field()), matrix_algebra(2));
  CHECK(shape.dim() == 6);
  CHECK(morita_equivalent(ga("S3"), shape));
}

TEST_CASE("property: Morita equivalence is an equivalence relation on the corpus") {
  std::vector<Algebra> corpus{ground_field(), matrix_algebra(2), diagonal_algebra(3), ga("Z2"), ga("Z3"),
                              ga("S3"),       ga("Q8"),          ga("D4"),            ga("Z5")};
  const std::size_t n = corpus.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = morita_equivalent(corpus[i], corpus[j]);
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(rel[i][i]);
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(rel[i][j] == rel[j][i]);
      for (std::size_t k = 0; k < n; ++k)
        if (rel[i][j] && rel[j][k]) CHECK(rel[i][k]);
    }
  }
}

TEST_CASE("classify") {
  const auto s3 = classify(ga("S3"));
  CHECK(s3.semisimple);
  CHECK(s3.center_dim == 3);
  CHECK(s3.cocenter_dim == 3);
  CHECK(s3.morita_model == "cyclic(3)");

  const auto d = classify(dual_numbers());
  CHECK_FALSE(d.semisimple);
  CHECK(d.center_dim == 2);
  CHECK(d.cocenter_dim == 2);
  CHECK_FALSE(d.morita_model);

  CHECK(classify(ga("Q8")).morita_model == "cyclic(5)");
}

TEST_CASE("property: every corpus group algebra is Morita-modelled by Z/#classes") {
  for (const auto& tag : testing::corpus_group_tags()) {
    CAPTURE(tag);
    const auto g = builtin_group(tag);
    const auto r = classify(group_algebra(g).algebra);
    const auto n = conjugacy_classes(g).count();
    CHECK(r.morita_model == "cyclic(" + std::to_string(n) + ")");
    CHECK(morita_equivalent(group_algebra(g).algebra, group_algebra(cyclic_group(n)).algebra));
  }
}

TEST_CASE("classify_frobenius") {
  const auto d = classify_frobenius(frobenius_from_counit(dual_numbers(), {0, 1}));
  CHECK_FALSE(d.semisimple);
  const auto qq = classify_frobenius(frobenius_from_counit(diagonal_algebra(2), {1, 1}));
  CHECK(qq.semisimple);
  const auto s3 = classify_frobenius(class_function_space(builtin_group("S3")).center_frobenius);
  CHECK(s3.semisimple);
  CHECK(s3.morita_model == "cyclic(3)");
  bool saw_handle = false;
  for (const auto& [k, v] : s3.evidence) saw_handle |= k == "handle-unit" && v == "true";
  CHECK(saw_handle);

  for (const auto& [name, f] : testing::corpus_frobenius()) {
    CAPTURE(name);
    const auto a = classify(f.algebra());
    const auto b = classify_frobenius(f);
    CHECK(a.semisimple == b.semisimple);
    CHECK(a.center_dim == b.center_dim);
    CHECK(a.cocenter_dim == b.cocenter_dim);
    CHECK(a.morita_model == b.morita_model);
    if (a.semisimple) CHECK(a.center_dim == a.cocenter_dim);
  }
}

TEST_CASE("format_report key order is stable") {
  const auto text = format_report(classify(ga("S3")));
  CHECK(text ==
        "semisimple: true\n"
        "center_dim: 3\n"
        "cocenter_dim: 3\n"
        "morita_model: cyclic(3)\n"
        "evidence.trace-form-rank: 6/6 nondegenerate\n"
        "evidence.center-dim: 3\n"
        "evidence.cocenter-dim: 3\n");
}
