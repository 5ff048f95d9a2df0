#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lambday/errors.hpp"
#include "lambday/type.hpp"

namespace lambday {

enum class TermKind : std::uint8_t {
  kVar,    // free variable, identified by name and type
  kBound,  // bound variable, de Bruijn index
  kLam,
  kApp,
  kOmega,  // Omega_s : s
  kY,      // Y_s : (s -> s) -> s
};

/// A Church-style typed term of the lambda-Y calculus (which contains the
/// lambda-beta-eta, lambda-Omega and lambda-Omega+ calculi).
///
/// Bound variables are de Bruijn indices, so `==` is alpha-equivalence.
/// Binder names are kept only as printing hints. Every constructed term
/// is well typed; the constructors throw TypeError otherwise. Terms are
/// immutable and share structure.
class Term {
 public:
  Term() = default;

  static Term var(std::string name, Type type);
  /// \name:type. body, binding the free variable name:type of `body`.
  static Term lam(const std::string& name, const Type& type, const Term& body);
  static Term app(const Term& fun, const Term& arg);
  static Term apps(Term head, const std::vector<Term>& args);
  static Term omega(Type type);
  /// Y at type s, itself of type (s -> s) -> s.
  static Term fix(Type type);

  /// Low-level: a de Bruijn variable. Only meaningful under binders.
  static Term bound(std::uint32_t index, Type type);
  /// Low-level: a lambda whose body already refers to its binder as index 0.
  static Term lam_raw(std::string hint, Type binder, Term body);

  bool valid() const { return node_ != nullptr; }
  TermKind kind() const;
  const Type& type() const;

  /// Free variable name, or binder hint for a lambda.
  const std::string& name() const;
  std::uint32_t index() const;
  /// Lambda binder type.
  const Type& binder_type() const;
  /// Subscript s of Omega_s or Y_s.
  const Type& constant_type() const;
  /// Lambda body (refers to the binder as index 0).
  const Term& body() const;
  const Term& fun() const;
  const Term& arg() const;

  bool is(TermKind k) const { return kind() == k; }

  /// Number of nodes.
  std::size_t size() const;
  /// One more than the largest loose de Bruijn index; 0 for locally closed.
  std::uint32_t loose_bound() const;
  bool has_omega() const;
  bool has_higher_omega() const;
  bool has_y() const;
  bool has_free_vars() const;
  bool is_closed() const { return !has_free_vars() && loose_bound() == 0; }

  std::size_t hash() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Term make(Node node);

  std::shared_ptr<const Node> node_;
};

class TypeError : public Error {
 public:
  TypeError(const std::string& message, Term subterm = {})
      : Error(message), subterm_(std::move(subterm)) {}

  /// The offending subterm, when one exists.
  const Term& subterm() const { return subterm_; }

 private:
  Term subterm_;
};

using Context = std::map<std::string, Type>;

struct FreeVar {
  std::string name;
  Type type;
  friend bool operator==(const FreeVar&, const FreeVar&) = default;
};

/// Checks `term` against `context` and returns its type. Every free
/// variable must be declared in the context with its own type.
Type type_of(const Term& term, const Context& context = {});

/// Free variables in order of first occurrence.
std::vector<FreeVar> free_variables(const Term& term);

/// Capture-avoiding M[x := N]. Throws TypeError if N's type is not x's.
Term substitute(const Term& term, const FreeVar& x, const Term& value);

/// Shifts loose indices >= cutoff by `delta`.
Term shift(const Term& term, std::int64_t delta, std::uint32_t cutoff = 0);
/// Replaces loose index 0 of `body` by `value` and lowers the others;
/// the beta-contraction of (\. body) value.
Term instantiate(const Term& body, const Term& value);
/// The body of a lambda with its binder replaced by the free variable
/// name:binder_type.
Term open(const Term& lambda, const std::string& name);

/// Sub-calculus membership.
bool is_lambda_beta_eta(const Term& term);
bool is_lambda_omega(const Term& term);
bool is_lambda_omega_plus(const Term& term);

/// m-fold application f (f (... (f x))).
Term iterate(const Term& f, const Term& x, std::size_t m);

/// The Church numeral \f:a->a. \x:a. f^m x.
Term church_numeral(std::size_t m, const Type& alpha);

/// A name based on `base` that is not in `taken`.
std::string fresh_name(const std::string& base,
                       const std::vector<std::string>& taken);

}  // namespace lambday

template <>
struct std::hash<lambday::Term> {
  std::size_t operator()(const lambday::Term& t) const noexcept {
    return t.hash();
  }
};
