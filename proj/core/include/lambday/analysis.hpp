#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "lambday/semantics.hpp"
#include "lambday/term.hpp"
#include "lambday/translate.hpp"

namespace lambday {

enum class AnalysisKind {
  kNormalForm,      // has a constant-free normal form
  kHeadNormalForm,  // has a head normal form
  kProperness,      // a Y-free term whose normal form is proper
};

std::string to_string(AnalysisKind kind);

struct AnalysisReport {
  AnalysisKind kind = AnalysisKind::kNormalForm;
  /// Always equal to test_value.is_top().
  bool verdict = false;
  /// The ground element t_s([[M]]).
  Element test_value;
  /// Recursion depths used to build the truncated term, when one was built.
  DepthMap depths;
  std::chrono::microseconds elapsed{0};

  /// One JSON object: analysis, verdict, test_value, depths, elapsed_us.
  std::string to_record() const;
};

/// y_truncate(M, h) where h assigns every Y subscript s its height h(s).
/// The result is Y-free and has the same denotation as M.
Term tilde_y(const Term& term, Model& model);

/// Decides whether a closed lambda-Y term has a constant-free normal form
/// by testing its denotation; no reduction is involved.
AnalysisReport has_normal_form(const Term& term, Model& model);

/// Same, with the head-normal-form test.
AnalysisReport has_head_normal_form(const Term& term, Model& model);

/// For a closed Y-free term: does its normal form contain no Omega?
AnalysisReport has_proper_normal_form(const Term& term, Model& model);

struct CertifiedNormalForm {
  /// The long normal form; empty when the term has none.
  std::optional<Term> normal_form;
  AnalysisReport report;
  /// tilde_y of the input (only built when the verdict is positive).
  std::optional<Term> truncated;
};

/// Decides normalizability, then extracts the normal form from the Y-free
/// truncation, which always terminates. Throws InvariantViolation if that
/// normal form is improper despite a positive verdict.
CertifiedNormalForm certified_normalize(const Term& term, Model& model);

/// True iff both closed terms have proper normal forms and they coincide.
bool proper_nf_equal(const Term& a, const Term& b, Model& model);

}  // namespace lambday
