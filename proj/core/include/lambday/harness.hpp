#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lambday/semantics.hpp"
#include "lambday/term.hpp"

namespace lambday {

using Inputs = std::vector<std::size_t>;
/// A partial numerical function; nullopt means undefined.
using Reference = std::function<std::optional<std::size_t>(const Inputs&)>;

/// A numerical function together with the numeral types it is to be
/// defined at and a finite set of sample inputs.
struct FunctionSpec {
  std::string name;
  std::vector<Type> argument_types;
  Type result_type;
  Reference reference;
  std::vector<Inputs> samples;
  /// A candidate definer, when the spec file names one.
  std::optional<Term> term;

  /// w(a1) -> ... -> w(ak) -> w(a)
  Type definer_type() const;
};

/// All tuples over {0..max}^arity in lexicographic order.
std::vector<Inputs> sample_grid(std::size_t arity, std::size_t max);

/// Built-in reference functions: add, mul, succ, zero, id, sub (partial),
/// ifzero, const(k), proj(i,k).
Reference builtin_reference(std::string_view name);

/// Spec file, one `key: value` per line, `--` comments:
///
///   function:  add
///   arguments: o, o            (comma separated numeral parameters)
///   result:    o
///   term:      \m:... .        (optional; may repeat to continue a line)
///   reference: add             (optional built-in reference function)
///   grid:      4               (samples {0..4}^k, needs a reference)
///   sample:    1 2 = 3         (explicit row; `_` marks undefined)
///
/// Explicit samples define the reference on those inputs and take
/// precedence over `reference`.
FunctionSpec parse_function_spec(std::string_view text);

struct Observation {
  enum class Kind { kDecoded, kNoNormalForm, kNotANumeral, kUndecided };
  Kind kind = Kind::kUndecided;
  std::size_t value = 0;
  /// Printed normal form or error message.
  std::string detail;

  std::string to_string() const;
};

struct DefinabilityRow {
  Inputs inputs;
  std::optional<std::size_t> expected;
  Observation observed;

  bool matches() const;
};

struct DefinabilityVerdict {
  enum class Overall { kConsistent, kRefuted, kUndecided };

  std::vector<DefinabilityRow> rows;
  Overall overall = Overall::kConsistent;
  /// First row that does not match, when refuted.
  std::optional<Inputs> witness;

  bool consistent() const { return overall == Overall::kConsistent; }
  /// Aligned text table.
  std::string table() const;
  /// One JSON object.
  std::string to_record() const;
};

std::string to_string(DefinabilityVerdict::Overall overall);

/// Checks on every sample input whether F m1 .. mk has the normal form
/// m_expected, or none when the reference is undefined there. Sample based:
/// consistency is evidence, not proof.
DefinabilityVerdict check_defines(const Term& definer, const FunctionSpec& spec,
                                  Model& model);

/// Standard lambda-beta-eta definers at numeral type w(alpha): zero, succ,
/// add, mul, ifzero, const(k), proj(i,k). ifzero n a b is a when n = 0
/// and b otherwise.
Term extended_poly(std::string_view name, const Type& alpha);

class PipelineError : public Error {
 public:
  PipelineError(std::string stage, const std::string& message)
      : Error(stage + ": " + message), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct PipelineResult {
  Term truncated;   // Y replaced by bounded unfoldings
  Term mapped;      // higher Omega replaced by \x... Omega{o}
  Term eliminated;  // Omega replaced by the argument-threading term
  DefinabilityVerdict verdict;
};

/// Turns a lambda-Y definer of a total function into a constant-free one
/// and checks it against the spec. Stage failures raise PipelineError.
PipelineResult conservativity_pipeline(const Term& definer,
                                       const FunctionSpec& spec, Model& model);

struct ProbeReport {
  enum class Outcome { kZero, kOmega, kOther };
  Outcome outcome = Outcome::kOther;
  /// Long normal form of the truncated search applied to 0.
  Term normal_form;
  /// The search step.
  Term step;
  std::size_t depth = 0;
  std::size_t m = 0;

  std::string to_record() const;
};

std::string to_string(ProbeReport::Outcome outcome);

/// Runs the search \f x. if E x then 0 else f (x + 1) from 0 with
/// recursion depth `depth`. The candidate `tester` E : w(a) -> w(a) signals
/// a hit by returning the numeral 0.
ProbeReport fact1_probe(const Term& tester, std::size_t m, const Type& alpha,
                        std::size_t depth);

}  // namespace lambday
