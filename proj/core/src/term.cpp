#include "lambday/term.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_set>

namespace lambday {

namespace {
constexpr std::uint8_t kHasOmega = 1;
constexpr std::uint8_t kHasHigherOmega = 2;
constexpr std::uint8_t kHasY = 4;
constexpr std::uint8_t kHasFree = 8;

std::size_t combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}
}  // namespace

struct Term::Node {
  Node(TermKind k, Type t) : kind(k), type(std::move(t)) {}
  TermKind kind;
  Type type;
  std::string name;
  std::uint32_t index = 0;
  Type aux;
  Term a;
  Term b;
  std::size_t size = 1;
  std::size_t hash = 0;
  std::uint32_t loose = 0;
  std::uint8_t flags = 0;
};

Term Term::make(Node n) {
  std::size_t h = combine(static_cast<std::size_t>(n.kind) + 1, n.type.hash());
  switch (n.kind) {
    case TermKind::kVar:
      h = combine(h, std::hash<std::string>{}(n.name));
      n.flags = kHasFree;
      break;
    case TermKind::kBound:
      h = combine(h, n.index);
      n.loose = n.index + 1;
      break;
    case TermKind::kLam:
      h = combine(combine(h, n.aux.hash()), n.a.hash());
      n.size = 1 + n.a.size();
      n.loose = n.a.loose_bound() > 0 ? n.a.loose_bound() - 1 : 0;
      n.flags = n.a.node_->flags;
      break;
    case TermKind::kApp:
      h = combine(combine(h, n.a.hash()), n.b.hash());
      n.size = 1 + n.a.size() + n.b.size();
      n.loose = std::max(n.a.loose_bound(), n.b.loose_bound());
      n.flags = n.a.node_->flags | n.b.node_->flags;
      break;
    case TermKind::kOmega:
      h = combine(h, n.aux.hash());
      n.flags = kHasOmega | (n.aux.is_arrow() ? kHasHigherOmega : 0);
      break;
    case TermKind::kY:
      h = combine(h, n.aux.hash());
      n.flags = kHasY;
      break;
  }
  n.hash = h;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::var(std::string name, Type type) {
  Node n(TermKind::kVar, std::move(type));
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::bound(std::uint32_t index, Type type) {
  Node n(TermKind::kBound, std::move(type));
  n.index = index;
  return make(std::move(n));
}

namespace {
// Replaces the free variable name:type by index `depth` and shifts other
// loose indices up by one.
Term abstract_var(const Term& t, const std::string& name, const Type& type,
                  std::uint32_t depth) {
  switch (t.kind()) {
    case TermKind::kVar:
      if (t.name() == name && t.type() == type) return Term::bound(depth, type);
      return t;
    case TermKind::kBound:
      return t.index() >= depth ? Term::bound(t.index() + 1, t.type()) : t;
    case TermKind::kLam:
      if (!t.has_free_vars() && t.loose_bound() <= depth) return t;
      return Term::lam_raw(t.name(), t.binder_type(),
                           abstract_var(t.body(), name, type, depth + 1));
    case TermKind::kApp:
      if (!t.has_free_vars() && t.loose_bound() <= depth) return t;
      return Term::app(abstract_var(t.fun(), name, type, depth),
                       abstract_var(t.arg(), name, type, depth));
    case TermKind::kOmega:
    case TermKind::kY:
      return t;
  }
  return t;
}
}  // namespace

Term Term::lam(const std::string& name, const Type& type, const Term& body) {
  return lam_raw(name, type, abstract_var(body, name, type, 0));
}

Term Term::lam_raw(std::string hint, Type binder, Term body) {
  Node n(TermKind::kLam, Type::arrow(binder, body.type()));
  n.name = std::move(hint);
  n.aux = std::move(binder);
  n.a = std::move(body);
  return make(std::move(n));
}

Term Term::app(const Term& fun, const Term& arg) {
  if (!fun.type().is_arrow()) {
    throw TypeError("cannot apply a term of ground type", fun);
  }
  if (!(fun.type().domain() == arg.type())) {
    throw TypeError("argument of type " + arg.type().to_string() +
                        " where " + fun.type().domain().to_string() +
                        " is expected",
                    arg);
  }
  Node n(TermKind::kApp, fun.type().codomain());
  n.a = fun;
  n.b = arg;
  return make(std::move(n));
}

Term Term::apps(Term head, const std::vector<Term>& args) {
  for (const Term& a : args) head = app(head, a);
  return head;
}

Term Term::omega(Type type) {
  Node n(TermKind::kOmega, type);
  n.aux = std::move(type);
  return make(std::move(n));
}

Term Term::fix(Type type) {
  Type endo = Type::arrow(type, type);
  Node n(TermKind::kY, Type::arrow(endo, type));
  n.aux = std::move(type);
  return make(std::move(n));
}

TermKind Term::kind() const { return node_->kind; }
const Type& Term::type() const { return node_->type; }
const std::string& Term::name() const { return node_->name; }
std::uint32_t Term::index() const { return node_->index; }
const Type& Term::binder_type() const { return node_->aux; }
const Type& Term::constant_type() const { return node_->aux; }
const Term& Term::body() const { return node_->a; }
const Term& Term::fun() const { return node_->a; }
const Term& Term::arg() const { return node_->b; }
std::size_t Term::size() const { return node_->size; }
std::uint32_t Term::loose_bound() const { return node_->loose; }
bool Term::has_omega() const { return node_->flags & kHasOmega; }
bool Term::has_higher_omega() const { return node_->flags & kHasHigherOmega; }
bool Term::has_y() const { return node_->flags & kHasY; }
bool Term::has_free_vars() const { return node_->flags & kHasFree; }
std::size_t Term::hash() const { return node_ ? node_->hash : 0; }

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.size != y.size ||
      !(x.type == y.type)) {
    return false;
  }
  switch (x.kind) {
    case TermKind::kVar:
      return x.name == y.name;
    case TermKind::kBound:
      return x.index == y.index;
    case TermKind::kLam:
      return x.aux == y.aux && x.a == y.a;
    case TermKind::kApp:
      return x.a == y.a && x.b == y.b;
    case TermKind::kOmega:
    case TermKind::kY:
      return x.aux == y.aux;
  }
  return false;
}

Type type_of(const Term& term, const Context& context) {
  if (term.loose_bound() != 0) {
    throw TypeError("term has dangling bound variables", term);
  }
  for (const FreeVar& v : free_variables(term)) {
    auto it = context.find(v.name);
    if (it == context.end()) {
      throw TypeError("unbound variable " + v.name, Term::var(v.name, v.type));
    }
    if (!(it->second == v.type)) {
      throw TypeError("variable " + v.name + " used at type " +
                          v.type.to_string() + " but declared " +
                          it->second.to_string(),
                      Term::var(v.name, v.type));
    }
  }
  return term.type();
}

std::vector<FreeVar> free_variables(const Term& term) {
  std::vector<FreeVar> out;
  std::function<void(const Term&)> walk = [&](const Term& t) {
    if (!t.has_free_vars()) return;
    switch (t.kind()) {
      case TermKind::kVar: {
        FreeVar v{t.name(), t.type()};
        if (std::find(out.begin(), out.end(), v) == out.end()) {
          out.push_back(std::move(v));
        }
        break;
      }
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

Term shift(const Term& term, std::int64_t delta, std::uint32_t cutoff) {
  if (delta == 0 || term.loose_bound() <= cutoff) return term;
  switch (term.kind()) {
    case TermKind::kBound:
      return Term::bound(static_cast<std::uint32_t>(term.index() + delta),
                         term.type());
    case TermKind::kLam:
      return Term::lam_raw(term.name(), term.binder_type(),
                           shift(term.body(), delta, cutoff + 1));
    case TermKind::kApp:
      return Term::app(shift(term.fun(), delta, cutoff),
                       shift(term.arg(), delta, cutoff));
    default:
      return term;
  }
}

namespace {
Term instantiate_at(const Term& body, const Term& value, std::uint32_t depth) {
  if (body.loose_bound() <= depth) return body;
  switch (body.kind()) {
    case TermKind::kBound:
      if (body.index() == depth) return shift(value, depth);
      return Term::bound(body.index() - 1, body.type());
    case TermKind::kLam:
      return Term::lam_raw(body.name(), body.binder_type(),
                           instantiate_at(body.body(), value, depth + 1));
    case TermKind::kApp:
      return Term::app(instantiate_at(body.fun(), value, depth),
                       instantiate_at(body.arg(), value, depth));
    default:
      return body;
  }
}

Term substitute_at(const Term& t, const FreeVar& x, const Term& value,
                   const std::vector<std::string>& value_names,
                   std::uint32_t depth) {
  if (!t.has_free_vars()) return t;
  switch (t.kind()) {
    case TermKind::kVar:
      if (t.name() == x.name && t.type() == x.type) return shift(value, depth);
      return t;
    case TermKind::kLam: {
      std::string hint = t.name();
      if (std::find(value_names.begin(), value_names.end(), hint) !=
          value_names.end()) {
        hint = fresh_name(hint, value_names);
      }
      return Term::lam_raw(
          hint, t.binder_type(),
          substitute_at(t.body(), x, value, value_names, depth + 1));
    }
    case TermKind::kApp:
      return Term::app(substitute_at(t.fun(), x, value, value_names, depth),
                       substitute_at(t.arg(), x, value, value_names, depth));
    default:
      return t;
  }
}
}  // namespace

Term instantiate(const Term& body, const Term& value) {
  return instantiate_at(body, value, 0);
}

Term open(const Term& lambda, const std::string& name) {
  assert(lambda.is(TermKind::kLam));
  return instantiate(lambda.body(), Term::var(name, lambda.binder_type()));
}

Term substitute(const Term& term, const FreeVar& x, const Term& value) {
  if (!(value.type() == x.type)) {
    throw TypeError("cannot substitute a term of type " +
                        value.type().to_string() + " for " + x.name + ":" +
                        x.type.to_string(),
                    value);
  }
  std::vector<std::string> names;
  for (const FreeVar& v : free_variables(value)) names.push_back(v.name);
  return substitute_at(term, x, value, names, 0);
}

bool is_lambda_beta_eta(const Term& term) {
  return !term.has_omega() && !term.has_y();
}

bool is_lambda_omega(const Term& term) {
  return !term.has_higher_omega() && !term.has_y();
}

bool is_lambda_omega_plus(const Term& term) { return !term.has_y(); }

Term iterate(const Term& f, const Term& x, std::size_t m) {
  Term out = x;
  for (std::size_t i = 0; i < m; ++i) out = Term::app(f, out);
  return out;
}

Term church_numeral(std::size_t m, const Type& alpha) {
  Type endo = Type::arrow(alpha, alpha);
  Term body = iterate(Term::bound(1, endo), Term::bound(0, alpha), m);
  return Term::lam_raw("f", endo, Term::lam_raw("x", alpha, body));
}

std::string fresh_name(const std::string& base,
                       const std::vector<std::string>& taken) {
  std::string candidate = base;
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end()) {
    candidate += "'";
  }
  return candidate;
}

}  // namespace lambday
