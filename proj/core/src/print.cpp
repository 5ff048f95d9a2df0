#include <algorithm>
#include <vector>

#include "lambday/syntax.hpp"

namespace lambday {

std::optional<std::size_t> match_numeral(const Term& term, Type* alpha) {
  if (!term.is(TermKind::kLam)) return std::nullopt;
  const Type& endo = term.binder_type();
  if (!endo.is_arrow() || !(endo.domain() == endo.codomain())) {
    return std::nullopt;
  }
  const Term& inner = term.body();
  if (!inner.is(TermKind::kLam) || !(inner.binder_type() == endo.domain())) {
    return std::nullopt;
  }
  std::size_t m = 0;
  const Term* t = &inner.body();
  while (t->is(TermKind::kApp)) {
    const Term& f = t->fun();
    if (!f.is(TermKind::kBound) || f.index() != 1) return std::nullopt;
    t = &t->arg();
    ++m;
  }
  if (!t->is(TermKind::kBound) || t->index() != 0) return std::nullopt;
  if (alpha) *alpha = endo.domain();
  return m;
}

namespace {

enum class Position { kTop, kFunction, kArgument };

class Printer {
 public:
  Printer(const Term& root, const PrintOptions& options) : options_(options) {
    for (const FreeVar& v : free_variables(root)) taken_.push_back(v.name);
  }

  std::string print(const Term& t, Position pos) {
    if (options_.numeral_sugar) {
      Type alpha;
      if (auto m = match_numeral(t, &alpha)) {
        return "#" + std::to_string(*m) + "{" + alpha.to_string() + "}";
      }
    }
    switch (t.kind()) {
      case TermKind::kVar:
        return t.name();
      case TermKind::kBound:
        return scope_[scope_.size() - 1 - t.index()];
      case TermKind::kOmega:
        return "Omega{" + t.constant_type().to_string() + "}";
      case TermKind::kY:
        return "Y{" + t.constant_type().to_string() + "}";
      case TermKind::kLam: {
        std::string hint = t.name().empty() ? "x" : t.name();
        std::vector<std::string> avoid = taken_;
        avoid.insert(avoid.end(), scope_.begin(), scope_.end());
        avoid.push_back("Y");
        avoid.push_back("Omega");
        std::string name = fresh_name(hint, avoid);
        scope_.push_back(name);
        std::string text = "\\" + name + ":" + t.binder_type().to_string() +
                           ". " + print(t.body(), Position::kTop);
        scope_.pop_back();
        return pos == Position::kTop ? text : "(" + text + ")";
      }
      case TermKind::kApp: {
        std::string text = print(t.fun(), Position::kFunction) + " " +
                           print(t.arg(), Position::kArgument);
        return pos == Position::kArgument ? "(" + text + ")" : text;
      }
    }
    return {};
  }

 private:
  const PrintOptions& options_;
  std::vector<std::string> taken_;
  std::vector<std::string> scope_;
};

}  // namespace

std::string to_string(const Term& term, const PrintOptions& options) {
  std::string prefix;
  if (options.context_prefix) {
    auto vars = free_variables(term);
    if (!vars.empty()) {
      prefix = "[";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) prefix += ", ";
        prefix += vars[i].name + ":" + vars[i].type.to_string();
      }
      prefix += "] ";
    }
  }
  return prefix + Printer(term, options).print(term, Position::kTop);
}

}  // namespace lambday
