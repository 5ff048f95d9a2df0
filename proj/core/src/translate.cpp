#include "lambday/translate.hpp"

#include <algorithm>
#include <functional>

namespace lambday {

namespace {

// Rebuilds `t` with every constant replaced by `replace(constant)`.
// Replacements must be closed.
Term map_constants(const Term& t, const std::function<Term(const Term&)>& replace,
                   bool (Term::*relevant)() const) {
  if (!(t.*relevant)()) return t;
  switch (t.kind()) {
    case TermKind::kOmega:
    case TermKind::kY:
      return replace(t);
    case TermKind::kLam:
      return Term::lam_raw(t.name(), t.binder_type(),
                           map_constants(t.body(), replace, relevant));
    case TermKind::kApp:
      return Term::app(map_constants(t.fun(), replace, relevant),
                       map_constants(t.arg(), replace, relevant));
    default:
      return t;
  }
}

}  // namespace

Term omega_tilde(const Type& sigma) {
  if (sigma.is_ground()) return Term::omega(Type::ground());
  std::vector<Type> args = sigma.arguments();
  Term body = Term::omega(Type::ground());
  for (auto it = args.rbegin(); it != args.rend(); ++it) {
    std::size_t position = static_cast<std::size_t>(it - args.rbegin());
    body = Term::lam_raw("x" + std::to_string(args.size() - position), *it,
                         body);
  }
  return body;
}

Term tilde_omega_map(const Term& term) {
  if (term.has_y()) {
    throw PreconditionError("tilde_omega_map expects a term without Y");
  }
  return map_constants(
      term,
      [](const Term& c) {
        return c.constant_type().is_ground() ? c : omega_tilde(c.constant_type());
      },
      &Term::has_higher_omega);
}

Term y_tilde(std::size_t n, const Type& sigma) {
  Type endo = Type::arrow(sigma, sigma);
  return Term::lam_raw("f", endo,
                       iterate(Term::bound(0, endo), Term::omega(sigma), n));
}

Term y_truncate(const Term& term, const DepthMap& depth) {
  return map_constants(
      term,
      [&](const Term& c) {
        if (c.is(TermKind::kOmega)) return c;
        auto it = depth.find(c.constant_type());
        if (it == depth.end()) {
          throw PreconditionError("no recursion depth given for Y{" +
                                  c.constant_type().to_string() + "}");
        }
        return y_tilde(it->second, c.constant_type());
      },
      &Term::has_y);
}

std::vector<Type> y_subscripts(const Term& term) {
  std::vector<Type> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (!t.has_y()) return;
    switch (t.kind()) {
      case TermKind::kY:
        if (std::find(out.begin(), out.end(), t.constant_type()) == out.end()) {
          out.push_back(t.constant_type());
        }
        break;
      case TermKind::kLam:
        walk(t.body());
        break;
      case TermKind::kApp:
        walk(t.fun());
        walk(t.arg());
        break;
      default:
        break;
    }
  };
  walk(term);
  return out;
}

}  // namespace lambday
