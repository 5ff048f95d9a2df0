#include "lambday/analysis.hpp"

#include <nlohmann/json.hpp>

#include "lambday/reduction.hpp"
#include "lambday/syntax.hpp"

namespace lambday {

namespace {

using Clock = std::chrono::steady_clock;

void require_closed(const Term& term, const char* what) {
  if (!term.is_closed()) {
    throw PreconditionError(std::string(what) + " needs a closed term");
  }
}

AnalysisReport run_test(AnalysisKind kind, const Element& tester,
                        const Term& term, Model& model, Clock::time_point start) {
  AnalysisReport report;
  report.kind = kind;
  report.test_value = model.apply(tester, model.eval(term));
  report.verdict = report.test_value.is_top();
  report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return report;
}

}  // namespace

std::string to_string(AnalysisKind kind) {
  switch (kind) {
    case AnalysisKind::kNormalForm: return "nf";
    case AnalysisKind::kHeadNormalForm: return "hnf";
    case AnalysisKind::kProperness: return "properness";
  }
  return "?";
}

std::string AnalysisReport::to_record() const {
  nlohmann::json depths_json = nlohmann::json::object();
  for (const auto& [type, depth] : depths) depths_json[type.to_string()] = depth;
  nlohmann::json out = {
      {"analysis", to_string(kind)},
      {"verdict", verdict},
      {"test_value", test_value.valid() && test_value.is_top() ? "top" : "bot"},
      {"depths", depths_json},
      {"elapsed_us", elapsed.count()},
  };
  return out.dump();
}

Term tilde_y(const Term& term, Model& model) {
  DepthMap depths;
  for (const Type& s : y_subscripts(term)) depths[s] = model.height(s);
  return y_truncate(term, depths);
}

AnalysisReport has_normal_form(const Term& term, Model& model) {
  auto start = Clock::now();
  require_closed(term, "has_normal_form");
  return run_test(AnalysisKind::kNormalForm, model.test(term.type()), term,
                  model, start);
}

AnalysisReport has_head_normal_form(const Term& term, Model& model) {
  auto start = Clock::now();
  require_closed(term, "has_head_normal_form");
  return run_test(AnalysisKind::kHeadNormalForm, model.head_test(term.type()),
                  term, model, start);
}

AnalysisReport has_proper_normal_form(const Term& term, Model& model) {
  auto start = Clock::now();
  require_closed(term, "has_proper_normal_form");
  if (term.has_y()) {
    throw PreconditionError("properness analysis expects a term without Y");
  }
  return run_test(AnalysisKind::kProperness, model.test(term.type()), term,
                  model, start);
}

CertifiedNormalForm certified_normalize(const Term& term, Model& model) {
  auto start = Clock::now();
  CertifiedNormalForm out;
  out.report = has_normal_form(term, model);
  if (!out.report.verdict) return out;

  for (const Type& s : y_subscripts(term)) out.report.depths[s] = model.height(s);
  Term truncated = y_truncate(term, out.report.depths);
  Term normal = long_normal_form(truncated);
  Properness p = classify_properness(normal);
  if (!p.proper) {
    throw InvariantViolation(
        "positive normal-form verdict but the truncated term normalizes to an "
        "improper form\n  term:      " +
        to_string(term) + "\n  truncated: " + to_string(truncated) +
        "\n  normal:    " + to_string(normal) +
        "\n  test value: " + model.describe(out.report.test_value));
  }
  out.truncated = std::move(truncated);
  out.normal_form = std::move(normal);
  out.report.elapsed =
      std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return out;
}

bool proper_nf_equal(const Term& a, const Term& b, Model& model) {
  if (!(a.type() == b.type())) {
    throw PreconditionError("proper_nf_equal needs terms of the same type");
  }
  auto left = certified_normalize(a, model);
  if (!left.normal_form) return false;
  auto right = certified_normalize(b, model);
  return right.normal_form && *left.normal_form == *right.normal_form;
}

}  // namespace lambday
