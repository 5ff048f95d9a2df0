#include "corpus.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "lambday/syntax.hpp"

namespace lambday::testing {

namespace {

const Type kO = Type::ground();
const Type kOO = Type::arrow(kO, kO);

using Ctx = std::vector<Type>;  // innermost binder last

Term var_at(const Ctx& ctx, std::size_t pos) {
  return Term::bound(static_cast<std::uint32_t>(ctx.size() - 1 - pos), ctx[pos]);
}

// Does `t` reach `target` after k arguments? Returns k or -1.
int reaches(Type t, const Type& target) {
  int k = 0;
  while (true) {
    if (t == target) return k;
    if (!t.is_arrow()) return -1;
    t = t.codomain();
    ++k;
  }
}

class Generator {
 public:
  Generator(std::mt19937_64& rng, const CorpusOptions& o) : rng_(rng), opt_(o) {}

  Term gen(const Type& type, const Ctx& ctx, std::size_t depth) {
    if (depth == 0) return fallback(type, ctx);
    std::vector<std::function<Term()>> choices;
    std::vector<int> weights;
    auto add = [&](int w, std::function<Term()> f) {
      weights.push_back(w);
      choices.push_back(std::move(f));
    };
    if (type.is_arrow()) {
      add(6, [&] {
        Ctx inner = ctx;
        inner.push_back(type.domain());
        return Term::lam_raw("x" + std::to_string(ctx.size()), type.domain(),
                             gen(type.codomain(), inner, depth - 1));
      });
    }
    for (std::size_t pos = 0; pos < ctx.size(); ++pos) {
      int k = reaches(ctx[pos], type);
      if (k < 0) continue;
      add(4, [&, pos] { return apply_args(var_at(ctx, pos), k_args(ctx[pos], type), ctx, depth); });
    }
    for (const Type& y : opt_.y_types) {
      if (reaches(y, type) < 0) continue;
      add(3, [&, y] {
        Term fix = Term::app(Term::fix(y), gen(Type::arrow(y, y), ctx, depth - 1));
        return apply_args(fix, k_args(y, type), ctx, depth);
      });
    }
    if (opt_.omega && (type.is_ground() || opt_.higher_omega)) {
      add(1, [&] { return Term::omega(type); });
    }
    if (opt_.omega && opt_.higher_omega) {
      add(1, [&] { return Term::app(Term::omega(Type::arrow(kO, type)), gen(kO, ctx, depth - 1)); });
    }
    add(2, [&] {
      Type t = coin(2) ? kO : kOO;
      Ctx inner = ctx;
      inner.push_back(t);
      Term body = gen(type, inner, depth - 1);
      return Term::app(Term::lam_raw("r" + std::to_string(ctx.size()), t, body),
                       gen(t, ctx, depth - 1));
    });
    Type alpha;
    if (is_numeral_type(type, &alpha) && alpha.is_ground()) {
      add(2, [&] { return church_numeral(pick(4), kO); });
    }
    std::discrete_distribution<int> dist(weights.begin(), weights.end());
    return choices[dist(rng_)]();
  }

 private:
  std::vector<Type> k_args(Type t, const Type& target) {
    std::vector<Type> out;
    while (!(t == target)) {
      out.push_back(t.domain());
      t = t.codomain();
    }
    return out;
  }

  Term apply_args(Term head, const std::vector<Type>& args, const Ctx& ctx,
                  std::size_t depth) {
    for (const Type& a : args) head = Term::app(head, gen(a, ctx, depth - 1));
    return head;
  }

  Term fallback(const Type& type, const Ctx& ctx) {
    if (type.is_arrow()) {
      Ctx inner = ctx;
      inner.push_back(type.domain());
      return Term::lam_raw("x" + std::to_string(ctx.size()), type.domain(),
                           fallback(type.codomain(), inner));
    }
    std::vector<std::size_t> ground;
    for (std::size_t pos = 0; pos < ctx.size(); ++pos) {
      if (ctx[pos].is_ground()) ground.push_back(pos);
    }
    if (!ground.empty() && coin(3) != 0) return var_at(ctx, ground[pick(ground.size() - 1)]);
    for (const Type& y : opt_.y_types) {
      if (y.is_ground()) {
        Term loop = Term::lam_raw("u", kO, Term::bound(0, kO));
        return Term::app(Term::fix(kO), loop);
      }
    }
    if (opt_.omega) return Term::omega(kO);
    if (!ground.empty()) return var_at(ctx, ground.front());
    throw std::logic_error("no closed inhabitant available");
  }

  std::size_t pick(std::size_t max) {
    return std::uniform_int_distribution<std::size_t>(0, max)(rng_);
  }
  std::size_t coin(std::size_t n) { return pick(n - 1); }

  std::mt19937_64& rng_;
  const CorpusOptions& opt_;
};

// ---------------------------------------------------------- enumeration

class Enumerator {
 public:
  explicit Enumerator(const std::vector<Type>& omegas) : omegas_(omegas) {}

  const std::vector<Term>& exact(const Type& type, const Ctx& ctx, std::size_t size) {
    auto key = std::make_tuple(type, ctx, size);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Term> out;
    if (type.is_arrow()) {
      if (size >= 2) {
        Ctx inner = ctx;
        inner.push_back(type.domain());
        for (const Term& b : exact(type.codomain(), inner, size - 1)) {
          out.push_back(Term::lam_raw("x" + std::to_string(ctx.size()), type.domain(), b));
        }
      }
    } else {
      std::vector<Term> heads;
      for (std::size_t pos = 0; pos < ctx.size(); ++pos) heads.push_back(var_at(ctx, pos));
      for (const Type& o : omegas_) heads.push_back(Term::omega(o));
      for (const Term& h : heads) {
        std::vector<Type> args = h.type().arguments();
        if (size < 1 + 2 * args.size()) continue;
        spread(h, args, 0, size - 1 - args.size(), ctx, out);
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  // Distributes `budget` nodes over the remaining arguments.
  void spread(const Term& partial, const std::vector<Type>& args, std::size_t i,
              std::size_t budget, const Ctx& ctx, std::vector<Term>& out) {
    if (i == args.size()) {
      if (budget == 0) out.push_back(partial);
      return;
    }
    for (std::size_t s = 1; s <= budget; ++s) {
      for (const Term& a : exact(args[i], ctx, s)) {
        spread(Term::app(partial, a), args, i + 1, budget - s, ctx, out);
      }
    }
  }

  std::vector<Type> omegas_;
  std::map<std::tuple<Type, Ctx, std::size_t>, std::vector<Term>> memo_;
};

}  // namespace

Term random_term(std::mt19937_64& rng, const Type& type, const CorpusOptions& options) {
  Generator g(rng, options);
  return g.gen(type, {}, options.max_depth);
}

std::vector<Term> random_corpus(std::uint64_t seed, std::size_t count,
                                const std::vector<Type>& types,
                                const CorpusOptions& options) {
  std::mt19937_64 rng(seed);
  std::vector<Term> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_term(rng, types[i % types.size()], options));
  }
  return out;
}

std::vector<Term> y_corpus(std::size_t count, std::uint64_t seed) {
  CorpusOptions o;
  o.y_types = {kO, kOO};
  o.max_depth = 4;
  return random_corpus(seed, count,
                       {kO, kOO, Type::arrow(kOO, kO), Type::numeral(kO),
                        Type::curried({kO, kO}, kO)},
                       o);
}

std::vector<Term> omega_plus_corpus(std::size_t count, std::uint64_t seed) {
  CorpusOptions o;
  o.omega = true;
  o.higher_omega = true;
  o.max_depth = 4;
  return random_corpus(seed, count,
                       {kO, kOO, Type::arrow(kOO, kO), Type::numeral(kO),
                        Type::curried({kO, kO}, kO)},
                       o);
}

std::vector<Term> enumerate_long_normal_forms(const Type& type, std::size_t max_size,
                                              const std::vector<Type>& omega_types) {
  Enumerator e(omega_types);
  std::vector<Term> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    const auto& batch = e.exact(type, {}, s);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

std::vector<Type> small_omega_types() {
  std::vector<Type> out{kO};
  for (const Type& a : {kO, kOO}) {
    out.push_back(Type::arrow(a, kO));
    for (const Type& b : {kO, kOO}) out.push_back(Type::curried({a, b}, kO));
  }
  return out;
}

}  // namespace lambday::testing
