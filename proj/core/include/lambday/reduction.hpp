#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lambday/term.hpp"

namespace lambday {

inline constexpr std::size_t kDefaultFuel = 100000;

enum class Strategy {
  /// Leftmost-outermost; Y{s} f -> f (Y{s} f) counts as an outermost redex.
  kNormalOrder,
  /// Leftmost-innermost. Only sensible on Y-free terms.
  kInnermost,
};

struct NormalizeOptions {
  Strategy strategy = Strategy::kNormalOrder;
  /// Contract eta-redexes as well as beta- and Y-redexes.
  bool eta = true;
  /// Called with the term after every step.
  std::function<void(const Term&)> trace;
};

struct NormalizationOutcome {
  enum class Status { kNormal, kFuelExhausted };

  Status status;
  /// The normal form, or the last term reached when fuel ran out.
  Term term;
  std::size_t steps = 0;
  std::size_t fuel = 0;

  bool normal() const { return status == Status::kNormal; }
};

/// One reduction step, or nullopt when `term` is normal.
std::optional<Term> step(const Term& term, const NormalizeOptions& options = {});

/// Reduces for at most `fuel` steps.
NormalizationOutcome normalize(const Term& term, std::size_t fuel = kDefaultFuel,
                               const NormalizeOptions& options = {});

/// Keeps doubling the fuel until a normal form is reached. Requires a
/// Y-free term, for which this always terminates.
NormalizationOutcome normalize_assured(const Term& term,
                                       std::size_t initial_fuel = kDefaultFuel,
                                       const NormalizeOptions& options = {});

bool is_beta_normal(const Term& term);
/// No beta-, eta- or Y-redex.
bool is_normal(const Term& term);
/// Beta-normal and every variable or constant head is applied to as many
/// arguments as its arity.
bool is_long_normal(const Term& term);

/// Eta-expands a beta-normal term into its long form.
Term eta_expand(const Term& term);
/// Contracts every eta-redex.
Term eta_reduce(const Term& term);

/// The long beta-eta normal form of a Y-free term. Unless `assured`,
/// throws FuelExhaustedError when `fuel` steps do not suffice.
Term long_normal_form(const Term& term, std::size_t fuel = kDefaultFuel,
                      bool assured = true);

struct Properness {
  bool proper = true;
  /// Path to the first Omega occurrence (0 = lambda body or function
  /// part, 1 = argument); empty when proper.
  std::vector<unsigned> witness;

  std::string witness_text() const;
};

/// Proper iff no Omega occurs. Throws PreconditionError unless `normal_form`
/// is a long normal form.
Properness classify_properness(const Term& normal_form);

/// Removes Omega from a closed lambda-Omega definer
/// F : w(a1) -> ... -> w(ak) -> w(a): in the long normal form
/// \n1..nk. \f. \a. \b1..bl. M every Omega{o} becomes a b1 .. bl. When
/// `arity` is absent the largest k that fits the type is used.
Term eliminate_omega(const Term& definer,
                     std::optional<std::size_t> arity = std::nullopt);

/// Splits w(a1) -> ... -> w(ak) -> w(a) into its numeral parameters a1..ak
/// followed by a. Throws PreconditionError if the type has no such shape.
std::vector<Type> numeral_signature(const Type& type,
                                    std::optional<std::size_t> arity = std::nullopt);

/// m when `term` is a normal form eta-equivalent to the numeral m at
/// `alpha` (so both the plain and the long form of a numeral decode).
std::optional<std::size_t> decode_numeral(const Term& term, const Type& alpha);

}  // namespace lambday
