#include "lambday/reduction.hpp"

#include <algorithm>

#include "lambday/syntax.hpp"

namespace lambday {

namespace {

bool occurs_loose(const Term& t, std::uint32_t index) {
  if (t.loose_bound() <= index) return false;
  switch (t.kind()) {
    case TermKind::kBound:
      return t.index() == index;
    case TermKind::kLam:
      return occurs_loose(t.body(), index + 1);
    case TermKind::kApp:
      return occurs_loose(t.fun(), index) || occurs_loose(t.arg(), index);
    default:
      return false;
  }
}

bool is_eta_redex(const Term& t) {
  if (!t.is(TermKind::kLam)) return false;
  const Term& body = t.body();
  return body.is(TermKind::kApp) && body.arg().is(TermKind::kBound) &&
         body.arg().index() == 0 && !occurs_loose(body.fun(), 0);
}

// Contracts `t` itself if it is a redex.
std::optional<Term> contract(const Term& t, bool eta) {
  if (t.is(TermKind::kApp)) {
    const Term& f = t.fun();
    if (f.is(TermKind::kLam)) return instantiate(f.body(), t.arg());
    if (f.is(TermKind::kY)) return Term::app(t.arg(), t);
  } else if (eta && is_eta_redex(t)) {
    return shift(t.body().fun(), -1);
  }
  return std::nullopt;
}

std::optional<Term> step_outermost(const Term& t, bool eta) {
  if (auto r = contract(t, eta)) return r;
  switch (t.kind()) {
    case TermKind::kLam:
      if (auto b = step_outermost(t.body(), eta)) {
        return Term::lam_raw(t.name(), t.binder_type(), *b);
      }
      return std::nullopt;
    case TermKind::kApp:
      if (auto f = step_outermost(t.fun(), eta)) return Term::app(*f, t.arg());
      if (auto a = step_outermost(t.arg(), eta)) return Term::app(t.fun(), *a);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<Term> step_innermost(const Term& t, bool eta) {
  switch (t.kind()) {
    case TermKind::kLam:
      if (auto b = step_innermost(t.body(), eta)) {
        return Term::lam_raw(t.name(), t.binder_type(), *b);
      }
      break;
    case TermKind::kApp:
      if (auto f = step_innermost(t.fun(), eta)) return Term::app(*f, t.arg());
      if (auto a = step_innermost(t.arg(), eta)) return Term::app(t.fun(), *a);
      break;
    default:
      break;
  }
  return contract(t, eta);
}

// Head and arguments of an application spine.
const Term& spine(const Term& t, std::vector<Term>& args) {
  const Term* h = &t;
  while (h->is(TermKind::kApp)) {
    args.push_back(h->arg());
    h = &h->fun();
  }
  std::reverse(args.begin(), args.end());
  return *h;
}

void find_omega(const Term& t, std::vector<unsigned>& path, bool& found) {
  if (found || !t.has_omega()) return;
  switch (t.kind()) {
    case TermKind::kOmega:
      found = true;
      return;
    case TermKind::kLam:
      path.push_back(0);
      find_omega(t.body(), path, found);
      if (!found) path.pop_back();
      return;
    case TermKind::kApp:
      path.push_back(0);
      find_omega(t.fun(), path, found);
      if (found) return;
      path.back() = 1;
      find_omega(t.arg(), path, found);
      if (!found) path.pop_back();
      return;
    default:
      return;
  }
}

// Replaces every Omega{o} by `a b1 .. bl`, where at the top of `t` the
// variable a has index l and b_i has index l - i.
Term plug_omega(const Term& t, const Type& alpha,
                const std::vector<Type>& betas, std::uint32_t depth) {
  if (!t.has_omega()) return t;
  switch (t.kind()) {
    case TermKind::kOmega: {
      const auto l = static_cast<std::uint32_t>(betas.size());
      Term out = Term::bound(l + depth, alpha);
      for (std::uint32_t i = 1; i <= l; ++i) {
        out = Term::app(out, Term::bound(l - i + depth, betas[i - 1]));
      }
      return out;
    }
    case TermKind::kLam:
      return Term::lam_raw(t.name(), t.binder_type(),
                           plug_omega(t.body(), alpha, betas, depth + 1));
    case TermKind::kApp:
      return Term::app(plug_omega(t.fun(), alpha, betas, depth),
                       plug_omega(t.arg(), alpha, betas, depth));
    default:
      return t;
  }
}

}  // namespace

std::optional<Term> step(const Term& term, const NormalizeOptions& options) {
  return options.strategy == Strategy::kNormalOrder
             ? step_outermost(term, options.eta)
             : step_innermost(term, options.eta);
}

NormalizationOutcome normalize(const Term& term, std::size_t fuel,
                               const NormalizeOptions& options) {
  Term current = term;
  std::size_t steps = 0;
  while (true) {
    auto next = step(current, options);
    if (!next) {
      return {NormalizationOutcome::Status::kNormal, current, steps, fuel};
    }
    if (steps == fuel) {
      return {NormalizationOutcome::Status::kFuelExhausted, current, steps, fuel};
    }
    current = std::move(*next);
    ++steps;
    if (options.trace) options.trace(current);
  }
}

NormalizationOutcome normalize_assured(const Term& term, std::size_t initial_fuel,
                                       const NormalizeOptions& options) {
  if (term.has_y()) {
    throw PreconditionError("assured normalization needs a term without Y");
  }
  std::size_t fuel = std::max<std::size_t>(initial_fuel, 1);
  std::size_t total = 0;
  Term current = term;
  while (true) {
    NormalizationOutcome out = normalize(current, fuel, options);
    total += out.steps;
    if (out.normal()) {
      out.steps = total;
      out.fuel = total;
      return out;
    }
    // The strategy is deterministic, so resuming from the last term is
    // the same as restarting with more fuel.
    current = out.term;
    fuel *= 2;
  }
}

bool is_beta_normal(const Term& term) {
  switch (term.kind()) {
    case TermKind::kLam:
      return is_beta_normal(term.body());
    case TermKind::kApp:
      if (term.fun().is(TermKind::kLam) || term.fun().is(TermKind::kY)) {
        return false;
      }
      return is_beta_normal(term.fun()) && is_beta_normal(term.arg());
    default:
      return true;
  }
}

bool is_normal(const Term& term) {
  NormalizeOptions opts;
  return !step(term, opts).has_value();
}

bool is_long_normal(const Term& term) {
  if (term.is(TermKind::kLam)) return is_long_normal(term.body());
  if (!term.type().is_ground()) return false;
  std::vector<Term> args;
  const Term& head = spine(term, args);
  if (head.is(TermKind::kLam)) return false;
  if (head.is(TermKind::kY) && !args.empty()) return false;
  return std::all_of(args.begin(), args.end(),
                     [](const Term& a) { return is_long_normal(a); });
}

Term eta_expand(const Term& term) {
  if (term.is(TermKind::kLam)) {
    return Term::lam_raw(term.name(), term.binder_type(),
                         eta_expand(term.body()));
  }
  if (term.type().is_arrow()) {
    const Type& dom = term.type().domain();
    Term applied = Term::app(shift(term, 1), Term::bound(0, dom));
    return Term::lam_raw(dom.is_ground() ? "z" : "g", dom, eta_expand(applied));
  }
  std::vector<Term> args;
  Term out = spine(term, args);
  for (const Term& a : args) out = Term::app(out, eta_expand(a));
  return out;
}

Term eta_reduce(const Term& term) {
  switch (term.kind()) {
    case TermKind::kLam: {
      Term reduced = Term::lam_raw(term.name(), term.binder_type(),
                                   eta_reduce(term.body()));
      if (is_eta_redex(reduced)) return shift(reduced.body().fun(), -1);
      return reduced;
    }
    case TermKind::kApp:
      return Term::app(eta_reduce(term.fun()), eta_reduce(term.arg()));
    default:
      return term;
  }
}

Term long_normal_form(const Term& term, std::size_t fuel, bool assured) {
  if (term.has_y()) {
    throw PreconditionError("long normal forms are only taken of Y-free terms");
  }
  NormalizationOutcome out =
      assured ? normalize_assured(term, fuel) : normalize(term, fuel);
  if (!out.normal()) throw FuelExhaustedError(fuel);
  return eta_expand(out.term);
}

std::string Properness::witness_text() const {
  std::string out;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(witness[i]);
  }
  return out;
}

Properness classify_properness(const Term& normal_form) {
  if (!is_long_normal(normal_form)) {
    throw PreconditionError("properness is defined on long normal forms only");
  }
  Properness out;
  bool found = false;
  find_omega(normal_form, out.witness, found);
  out.proper = !found;
  return out;
}

std::vector<Type> numeral_signature(const Type& type,
                                    std::optional<std::size_t> arity) {
  std::vector<Type> args = type.arguments();
  auto fits = [&](std::size_t k) -> std::optional<std::vector<Type>> {
    std::vector<Type> out;
    Type rest = type;
    for (std::size_t i = 0; i < k; ++i) {
      Type alpha;
      if (!rest.is_arrow() || !is_numeral_type(rest.domain(), &alpha)) {
        return std::nullopt;
      }
      out.push_back(alpha);
      rest = rest.codomain();
    }
    Type alpha;
    if (!is_numeral_type(rest, &alpha)) return std::nullopt;
    out.push_back(alpha);
    return out;
  };
  if (arity) {
    if (auto sig = fits(*arity)) return *sig;
  } else {
    for (std::size_t k = args.size() + 1; k-- > 0;) {
      if (auto sig = fits(k)) return *sig;
    }
  }
  throw PreconditionError("type " + type.to_string() +
                          " is not of the form w(a1) -> ... -> w(ak) -> w(a)");
}

Term eliminate_omega(const Term& definer, std::optional<std::size_t> arity) {
  if (definer.has_y()) {
    throw PreconditionError("eliminate_omega: input contains Y");
  }
  if (definer.has_higher_omega()) {
    throw PreconditionError(
        "eliminate_omega: only ground Omega is allowed (map it first)");
  }
  if (!definer.is_closed()) {
    throw PreconditionError("eliminate_omega: input must be closed");
  }
  std::vector<Type> sig = numeral_signature(definer.type(), arity);
  const Type alpha = sig.back();
  const std::vector<Type> betas = alpha.arguments();
  const std::size_t binders = (sig.size() - 1) + 2 + betas.size();

  Term normal = long_normal_form(definer);
  std::vector<Term> lambdas;
  Term body = normal;
  for (std::size_t i = 0; i < binders; ++i) {
    if (!body.is(TermKind::kLam)) {
      throw InvariantViolation("long normal form has too few binders");
    }
    lambdas.push_back(body);
    body = body.body();
  }
  body = plug_omega(body, alpha, betas, 0);
  for (auto it = lambdas.rbegin(); it != lambdas.rend(); ++it) {
    body = Term::lam_raw(it->name(), it->binder_type(), body);
  }
  return eta_expand(body);
}

std::optional<std::size_t> decode_numeral(const Term& term, const Type& alpha) {
  if (!(term.type() == Type::numeral(alpha)) || !is_normal(eta_reduce(term))) {
    return std::nullopt;
  }
  Term reduced = eta_reduce(term);
  Type found;
  if (auto m = match_numeral(reduced, &found)) {
    if (found == alpha && *m != 1) return m;
    return std::nullopt;
  }
  // The numeral 1 eta-reduces to \f. f.
  if (reduced.is(TermKind::kLam) && reduced.body().is(TermKind::kBound) &&
      reduced.body().index() == 0) {
    return 1;
  }
  return std::nullopt;
}

}  // namespace lambday
