#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lambday/term.hpp"

namespace lambday::testing {

struct CorpusOptions {
  /// Y constants may appear at these types (empty: no Y).
  std::vector<Type> y_types;
  bool omega = false;
  /// Omega at arrow types too.
  bool higher_omega = false;
  std::size_t max_depth = 4;
};

/// A random closed term of the given type. Deterministic for a given rng state.
Term random_term(std::mt19937_64& rng, const Type& type, const CorpusOptions& options);

/// `count` closed terms cycling through `types`, from a fixed seed.
std::vector<Term> random_corpus(std::uint64_t seed, std::size_t count,
                                const std::vector<Type>& types,
                                const CorpusOptions& options);

/// Closed lambda-Y terms with Y at o and o -> o over a handful of small types.
std::vector<Term> y_corpus(std::size_t count, std::uint64_t seed = 20240601);

/// Closed Y-free terms with Omega at any type.
std::vector<Term> omega_plus_corpus(std::size_t count, std::uint64_t seed = 20240602);

/// Every closed long beta-eta normal form of `type` with at most `max_size`
/// nodes, over the constants Omega_t for t in `omega_types`.
std::vector<Term> enumerate_long_normal_forms(const Type& type, std::size_t max_size,
                                              const std::vector<Type>& omega_types);

/// Omega heads used for the exhaustive enumeration: t1 -> .. -> tn -> o with
/// n <= 2 and each ti in {o, o -> o}.
std::vector<Type> small_omega_types();

}  // namespace lambday::testing
