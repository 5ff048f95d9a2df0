#include "lambday/semantics.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lambday {

struct Element::Rep {
  Type type;
  bool value = false;
  std::function<Element(const Element&)> closure;
  std::optional<std::string> table;
  std::optional<std::size_t> index;
};

const Type& Element::type() const { return rep_->type; }

bool Element::is_top() const { return rep_->value; }

bool Element::has_table() const { return is_ground() || rep_->table.has_value(); }

namespace {

constexpr std::size_t kLeqMatrixLimit = 4096;

bool bits_leq(std::string_view a, std::string_view b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == '1' && b[i] == '0') return false;
  }
  return true;
}

std::size_t checked_mul(std::size_t a, std::size_t b, const Type& type,
                        std::size_t limit) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    throw DomainTooLarge(type.to_string(), limit);
  }
  return a * b;
}

}  // namespace

// ---------------------------------------------------------------- Domain

Domain::Domain(Type type, std::vector<std::string> tables)
    : type_(std::move(type)), tables_(std::move(tables)) {
  index_.reserve(tables_.size());
  for (std::size_t i = 0; i < tables_.size(); ++i) index_.emplace(tables_[i], i);
  const std::size_t n = tables_.size();
  if (n <= kLeqMatrixLimit) {
    leq_matrix_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      // Lexicographic order extends the pointwise one: only j >= i can be above.
      for (std::size_t j = i; j < n; ++j) {
        leq_matrix_[i * n + j] = bits_leq(tables_[i], tables_[j]);
      }
    }
  }
  elements_.resize(n);
}

std::optional<std::size_t> Domain::index_of(const std::string& table) const {
  auto it = index_.find(table);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Domain::leq(std::size_t i, std::size_t j) const {
  if (i > j) return false;
  if (!leq_matrix_.empty()) return leq_matrix_[i * tables_.size() + j];
  return bits_leq(tables_[i], tables_[j]);
}

// Elements are up-sets of the flattened argument product, so a cover adds
// exactly one point: it flips a single 0 to 1.
std::size_t Domain::longest_chain() const {
  std::vector<std::size_t> longest(size(), 0);
  std::size_t best = 0;
  std::string scratch;
  for (std::size_t j = 0; j < size(); ++j) {
    scratch = tables_[j];
    for (char& bit : scratch) {
      if (bit != '1') continue;
      bit = '0';
      if (auto i = index_of(scratch)) longest[j] = std::max(longest[j], longest[*i] + 1);
      bit = '1';
    }
    best = std::max(best, longest[j]);
  }
  return best;
}

std::vector<std::pair<std::size_t, std::size_t>> Domain::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::string scratch;
  for (std::size_t i = 0; i < size(); ++i) {
    scratch = tables_[i];
    std::vector<std::size_t> above;
    for (char& bit : scratch) {
      if (bit != '0') continue;
      bit = '1';
      if (auto j = index_of(scratch)) above.push_back(*j);
      bit = '0';
    }
    std::sort(above.begin(), above.end());
    for (std::size_t j : above) out.emplace_back(i, j);
  }
  return out;
}

std::string Domain::dump() const {
  std::ostringstream out;
  out << "domain " << type_.to_string() << "\n";
  out << "size " << size() << "\n";
  out << "height " << longest_chain() << "\n";
  for (std::size_t i = 0; i < size(); ++i) {
    out << "element " << i << " " << tables_[i] << "\n";
  }
  for (auto [i, j] : covers()) out << "cover " << i << " " << j << "\n";
  return out.str();
}

// ----------------------------------------------------------------- Model

struct Model::Frame {
  Element value;
  Frames next;
};

Model::Model(std::size_t size_limit) : size_limit_(size_limit) {}

const Domain& Model::domain(const Type& type) {
  auto it = domains_.find(type);
  if (it != domains_.end()) return *it->second;
  auto built = enumerate(type);
  return *domains_.emplace(type, std::move(built)).first->second;
}

std::unique_ptr<Domain> Model::enumerate(const Type& type) {
  if (type.is_ground()) {
    return std::unique_ptr<Domain>(new Domain(type, {"0", "1"}));
  }
  const Domain& args = domain(type.domain());
  const Domain& results = domain(type.codomain());
  const std::size_t p = args.size();
  const std::size_t q = results.size();

  // below[i]: indices strictly below i; the canonical order is a linear
  // extension, so they all precede i.
  std::vector<std::vector<std::size_t>> below(p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (args.leq(j, i)) below[i].push_back(j);
    }
  }

  std::vector<std::string> tables;
  std::vector<std::size_t> choice(p, 0);
  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == p) {
      if (tables.size() >= size_limit_) {
        throw DomainTooLarge(type.to_string(), size_limit_);
      }
      std::string table;
      table.reserve(p * results.table(0).size());
      for (std::size_t k = 0; k < p; ++k) table += results.table(choice[k]);
      tables.push_back(std::move(table));
      return;
    }
    for (std::size_t v = 0; v < q; ++v) {
      bool ok = std::all_of(below[i].begin(), below[i].end(), [&](std::size_t j) {
        return results.leq(choice[j], v);
      });
      if (!ok) continue;
      choice[i] = v;
      assign(i + 1);
    }
  };
  assign(0);
  return std::unique_ptr<Domain>(new Domain(type, std::move(tables)));
}

std::size_t Model::cardinality(const Type& type) { return domain(type).size(); }

std::size_t Model::height(const Type& type) {
  if (type.is_ground()) return 1;
  auto it = heights_.find(type);
  if (it != heights_.end()) return it->second;
  std::size_t h = checked_mul(cardinality(type.domain()), height(type.codomain()),
                              type, size_limit_);
  heights_.emplace(type, h);
  return h;
}

std::size_t Model::table_length(const Type& type) {
  std::size_t n = 1;
  for (const Type& a : type.arguments()) {
    n = checked_mul(n, cardinality(a), type, size_limit_);
  }
  if (n > size_limit_) throw DomainTooLarge(type.to_string(), size_limit_);
  return n;
}

Element Model::ground(bool top) const {
  auto rep = std::make_shared<Element::Rep>();
  rep->value = top;
  rep->index = top ? 1 : 0;
  return Element(std::move(rep));
}

Element Model::bottom(const Type& type) {
  if (type.is_ground()) return ground(false);
  Type result = type.codomain();
  return function(type, [this, result](const Element&) { return bottom(result); });
}

Element Model::top(const Type& type) {
  if (type.is_ground()) return ground(true);
  Type result = type.codomain();
  return function(type, [this, result](const Element&) { return top(result); });
}

Element Model::function(const Type& type,
                        std::function<Element(const Element&)> fn) {
  auto rep = std::make_shared<Element::Rep>();
  rep->type = type;
  rep->closure = std::move(fn);
  return Element(std::move(rep));
}

Element Model::from_table(const Type& type, std::string table) {
  if (type.is_ground()) {
    if (table != "0" && table != "1") {
      throw InvariantViolation("ground table must be 0 or 1");
    }
    return ground(table == "1");
  }
  auto rep = std::make_shared<Element::Rep>();
  rep->type = type;
  rep->table = std::move(table);
  return Element(std::move(rep));
}

Element Model::element(const Type& type, std::size_t index) {
  const Domain& d = domain(type);
  Element& slot = d.elements_.at(index);
  if (!slot.valid()) {
    slot = from_table(type, d.table(index));
    slot.rep_->index = index;
  }
  return slot;
}

Element Model::apply(const Element& f, const Element& x) {
  const Type& type = f.type();
  if (!type.is_arrow() || !(type.domain() == x.type())) {
    throw InvariantViolation("ill-typed semantic application");
  }
  const Element::Rep& rep = *f.rep_;
  const bool use_table =
      rep.table && (!rep.closure || x.has_table() || x.rep_->index);
  if (use_table) {
    const Type& result = type.codomain();
    const std::size_t width = table_length(result);
    const std::size_t i = index_of(x);
    return from_table(result, rep.table->substr(i * width, width));
  }
  return rep.closure(x);
}

Element Model::apply(const Element& f, const std::vector<Element>& args) {
  Element out = f;
  for (const Element& a : args) out = apply(out, a);
  return out;
}

const std::string& Model::table(const Element& e) {
  static const std::string kBits[2] = {"0", "1"};
  if (e.is_ground()) return kBits[e.is_top() ? 1 : 0];
  Element::Rep& rep = *e.rep_;
  if (!rep.table) {
    const Type& arg = e.type().domain();
    const std::size_t n = cardinality(arg);
    const std::size_t total = table_length(e.type());
    std::string out;
    out.reserve(total);
    for (std::size_t i = 0; i < n; ++i) {
      out += table(rep.closure(element(arg, i)));
    }
    rep.table = std::move(out);
  }
  return *rep.table;
}

std::size_t Model::index_of(const Element& e) {
  if (e.rep_->index) return *e.rep_->index;
  auto found = domain(e.type()).index_of(table(e));
  if (!found) {
    throw InvariantViolation("element of " + e.type().to_string() +
                             " is not monotone");
  }
  e.rep_->index = found;
  return *found;
}

bool Model::equal(const Element& a, const Element& b) {
  if (!(a.type() == b.type())) return false;
  if (a.rep_ == b.rep_) return true;
  return table(a) == table(b);
}

bool Model::leq(const Element& a, const Element& b) {
  return bits_leq(table(a), table(b));
}

bool Model::is_monotone(const Element& e) {
  if (e.is_ground()) return true;
  const Type& arg = e.type().domain();
  const Type& result = e.type().codomain();
  const Domain& args = domain(arg);
  const std::string& tab = table(e);
  const std::size_t width = table_length(result);
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string_view lower(tab.data() + i * width, width);
    if (!is_monotone(from_table(result, std::string(lower)))) return false;
    for (std::size_t j = i + 1; j < args.size(); ++j) {
      if (!args.leq(i, j)) continue;
      if (!bits_leq(lower, std::string_view(tab.data() + j * width, width))) {
        return false;
      }
    }
  }
  return true;
}

Element Model::lfp(const Element& f) {
  const Type& type = f.type().codomain();
  Element current = bottom(type);
  while (true) {
    Element next = apply(f, current);
    if (equal(current, next)) return next;
    current = std::move(next);
  }
}

Element Model::eval(const Term& term, const Environment& env) {
  if (term.loose_bound() != 0) {
    throw PreconditionError("cannot evaluate a term with dangling indices");
  }
  return eval_in(term, nullptr, std::make_shared<const Environment>(env));
}

Element Model::eval_in(const Term& term, const Frames& frames,
                       const std::shared_ptr<const Environment>& env) {
  switch (term.kind()) {
    case TermKind::kVar: {
      auto it = env->find({term.name(), term.type()});
      if (it == env->end()) {
        throw PreconditionError("no value for free variable " + term.name() +
                                ":" + term.type().to_string());
      }
      return it->second;
    }
    case TermKind::kBound: {
      const Frame* f = frames.get();
      for (std::uint32_t i = 0; i < term.index(); ++i) f = f->next.get();
      return f->value;
    }
    case TermKind::kLam: {
      Term body = term.body();
      return function(term.type(), [this, body, frames, env](const Element& x) {
        auto frame = std::make_shared<const Frame>(Frame{x, frames});
        return eval_in(body, frame, env);
      });
    }
    case TermKind::kApp:
      return apply(eval_in(term.fun(), frames, env),
                   eval_in(term.arg(), frames, env));
    case TermKind::kOmega:
      return bottom(term.type());
    case TermKind::kY:
      return function(term.type(), [this](const Element& f) { return lfp(f); });
  }
  throw InvariantViolation("unknown term kind");
}

Element Model::curry(
    const Type& remaining, std::vector<Element> collected,
    std::shared_ptr<const std::function<Element(const std::vector<Element>&)>>
        finish) {
  if (remaining.is_ground()) return (*finish)(collected);
  Type rest = remaining.codomain();
  return function(remaining, [this, rest, collected, finish](const Element& x) {
    std::vector<Element> more = collected;
    more.push_back(x);
    return curry(rest, std::move(more), finish);
  });
}

Element Model::test(const Type& type) {
  auto it = tests_.find(type);
  if (it != tests_.end()) return it->second;
  std::vector<Type> args = type.arguments();
  Element t = function(Type::arrow(type, Type::ground()),
                       [this, args](const Element& f) {
                         Element out = f;
                         for (const Type& a : args) out = apply(out, probe(a));
                         return out;
                       });
  tests_.emplace(type, t);
  return t;
}

Element Model::probe(const Type& type) {
  if (type.is_ground()) return ground(true);
  auto it = probes_.find(type);
  if (it != probes_.end()) return it->second;
  std::vector<Type> args = type.arguments();
  auto finish = std::make_shared<const std::function<Element(const std::vector<Element>&)>>(
      [this, args](const std::vector<Element>& fs) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
          if (!apply(test(args[i]), fs[i]).is_top()) return ground(false);
        }
        return ground(true);
      });
  Element p = curry(type, {}, finish);
  probes_.emplace(type, p);
  return p;
}

Element Model::head_test(const Type& type) {
  auto it = head_tests_.find(type);
  if (it != head_tests_.end()) return it->second;
  std::vector<Type> args = type.arguments();
  Element t = function(Type::arrow(type, Type::ground()),
                       [this, args](const Element& f) {
                         Element out = f;
                         for (const Type& a : args) out = apply(out, head_probe(a));
                         return out;
                       });
  head_tests_.emplace(type, t);
  return t;
}

Element Model::head_probe(const Type& type) { return top(type); }

std::string Model::describe(const Element& e) {
  if (e.is_ground()) return e.is_top() ? "top" : "bot";
  const std::string& tab = table(e);
  std::string prefix;
  try {
    prefix = std::to_string(index_of(e)) + ":";
  } catch (const DomainTooLarge&) {
    prefix = "?:";
  }
  return prefix + tab;
}

}  // namespace lambday
