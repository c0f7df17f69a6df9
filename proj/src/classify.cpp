#include "cobord2/classify.hpp"

#include <sstream>

#include "cobord2/error.hpp"

namespace cobord2 {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

bool is_semisimple(const Algebra& a) { return rank(regular_trace_form(a)) == a.dim(); }

bool morita_equivalent(const Algebra& a, const Algebra& b) {
  if (!is_semisimple(a)) throw Error(ErrorKind::NotSemisimple, "input A is not semisimple");
  if (!is_semisimple(b)) throw Error(ErrorKind::NotSemisimple, "input B is not semisimple");
  return center(a).size() == center(b).size();
}

ClassificationReport classify(const Algebra& a) {
  ClassificationReport r;
  const std::size_t trace_rank = rank(regular_trace_form(a));
  r.semisimple = trace_rank == a.dim();
  r.center_dim = center(a).size();
  r.cocenter_dim = cocenter_dim(a);
  if (r.semisimple) {
    r.morita_model = "cyclic(" + std::to_string(r.center_dim) + ")";
    if (r.center_dim != r.cocenter_dim) {
      throw Error(ErrorKind::InternalInconsistency, "semisimple algebra with center_dim != cocenter_dim");
    }
  }
  r.evidence.emplace_back("trace-form-rank",
                          std::to_string(trace_rank) + "/" + std::to_string(a.dim()) + " " +
                              (r.semisimple ? "nondegenerate" : "degenerate"));
  r.evidence.emplace_back("center-dim", std::to_string(r.center_dim));
  r.evidence.emplace_back("cocenter-dim", std::to_string(r.cocenter_dim));
  return r;
}

ClassificationReport classify_frobenius(const FrobeniusAlgebra& f) {
  ClassificationReport r = classify(f.algebra());
  const bool handle_unit = is_handle_unit(f);
  r.evidence.emplace_back("handle-unit", yes_no(handle_unit));
  if (handle_unit != r.semisimple) {
    throw Error(ErrorKind::CriterionDisagreement,
                std::string("trace form says semisimple=") + yes_no(r.semisimple) +
                    " but handle-unit says " + yes_no(handle_unit));
  }
  return r;
}

std::string format_report(const ClassificationReport& r) {
  std::ostringstream os;
  os << "semisimple: " << yes_no(r.semisimple) << '\n';
  os << "center_dim: " << r.center_dim << '\n';
  os << "cocenter_dim: " << r.cocenter_dim << '\n';
  os << "morita_model: " << r.morita_model.value_or("none") << '\n';
  for (const auto& [criterion, verdict] : r.evidence) os << "evidence." << criterion << ": " << verdict << '\n';
  return os.str();
}

}  // namespace cobord2
