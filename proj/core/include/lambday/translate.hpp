#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lambday/term.hpp"

namespace lambday {

/// Recursion depth assigned to each Y subscript.
using DepthMap = std::map<Type, std::size_t>;

/// \x1:s1 ... \xn:sn. Omega{o} for s = (s1, ..., sn).
Term omega_tilde(const Type& sigma);

/// Replaces every Omega{s} by omega_tilde(s). Rejects terms containing Y.
Term tilde_omega_map(const Term& term);

/// \f:s->s. f^n Omega{s}, a Y-free stand-in for Y{s} with recursion
/// depth n.
Term y_tilde(std::size_t n, const Type& sigma);

/// Replaces every Y{s} by y_tilde(depth[s], s). Throws PreconditionError
/// if some occurring s has no depth.
Term y_truncate(const Term& term, const DepthMap& depth);

/// Distinct Y subscripts occurring in `term`, in order of occurrence.
std::vector<Type> y_subscripts(const Term& term);

}  // namespace lambday
