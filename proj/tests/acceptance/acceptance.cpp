// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "corpus.hpp"
#include "poset_oracle.hpp"
#include "lambday/analysis.hpp"
#include "lambday/harness.hpp"
#include "lambday/reduction.hpp"
#include "lambday/semantics.hpp"
#include "lambday/syntax.hpp"
#include "lambday/translate.hpp"

using namespace lambday;
using namespace lambday::testing;

namespace {

using Clock = std::chrono::steady_clock;

const Type kO = Type::ground();
const Type kOO = Type::arrow(kO, kO);
const Type kNat = Type::numeral(kO);

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && seconds > budget_seconds) {
    o.fail("took " + std::to_string(seconds) + " s, budget " + std::to_string(budget_seconds) + " s");
  }
  failures += !o.pass;
  std::cout << "criterion " << number << ": " << (o.pass ? "PASS" : "FAIL") << "  " << title
            << "  [" << o.detail.str() << std::fixed;
  std::cout.precision(3);
  std::cout << seconds << " s]" << std::endl;
}

Term parse(const std::string& text) { return parse_term(text); }

FunctionSpec grid_spec(std::size_t arity, Reference reference) {
  FunctionSpec s;
  s.argument_types.assign(arity, kO);
  s.result_type = kO;
  s.reference = std::move(reference);
  s.samples = sample_grid(arity, 4);
  return s;
}

Term y_wrapped(const Term& f) {
  return Term::app(Term::fix(f.type()), Term::lam_raw("g", f.type(), f));
}

}  // namespace

int main() {
  criterion(1, "domain cardinalities and heights against the brute-force oracle", 1.0,
            [](Outcome& o) {
    Model m;
    struct Row { Type type; std::size_t size; std::size_t height; };
    for (const Row& r : {Row{kO, 2, 1}, Row{kOO, 3, 2}, Row{kNat, 10, 6}}) {
      OraclePoset p = oracle_poset(r.type);
      std::size_t oh = oracle_height(p);
      if (p.size != r.size || oh != r.height) o.fail("oracle disagrees at " + r.type.to_string());
      if (m.cardinality(r.type) != p.size) o.fail("cardinality of " + r.type.to_string());
      if (m.height(r.type) != oh) o.fail("height of " + r.type.to_string());
      if (m.domain(r.type).longest_chain() != oh) o.fail("chain of " + r.type.to_string());
      o.detail << "|" << r.type.to_string() << "|=" << m.cardinality(r.type)
               << " h=" << m.height(r.type) << "; ";
    }
  });

  criterion(2, "exhaustive check: t(eval M) = top iff M proper, long forms up to size 12", 60.0,
            [](Outcome& o) {
    Model m;
    std::size_t total = 0;
    std::size_t proper = 0;
    for (const Type& t : {kO, kOO, Type::arrow(kOO, kO), kNat}) {
      Element test = m.test(t);
      for (const Term& nf : enumerate_long_normal_forms(t, 12, small_omega_types())) {
        ++total;
        bool p = classify_properness(nf).proper;
        proper += p;
        if (m.apply(test, m.eval(nf)).is_top() != p) o.fail(to_string(nf));
      }
    }
    o.detail << total << " forms, " << proper << " proper; ";
  });

  const std::vector<Term> corpus = y_corpus(240);

  criterion(3, "truncation identity on 240 lambda-Y terms at depths h, h+1, h+2", 0,
            [&](Outcome& o) {
    Model m;
    std::size_t with_y = 0;
    for (const Term& t : corpus) {
      with_y += t.has_y();
      Element e = m.eval(t);
      if (!m.equal(e, m.eval(tilde_y(t, m)))) o.fail(to_string(t));
      for (std::size_t extra = 0; extra <= 2; ++extra) {
        DepthMap d;
        for (const Type& s : y_subscripts(t)) d[s] = m.height(s) + extra;
        if (!m.equal(e, m.eval(y_truncate(t, d)))) o.fail(to_string(t));
      }
    }
    o.detail << with_y << " terms contain Y; ";
  });

  criterion(4, "normal-form verdicts agree with reduction on the same corpus", 0,
            [&](Outcome& o) {
    Model m;
    std::size_t positive = 0;
    std::size_t negative = 0;
    for (const Term& t : corpus) {
      CertifiedNormalForm c = certified_normalize(t, m);
      if (c.normal_form) {
        ++positive;
        NormalizationOutcome r = normalize(t, kDefaultFuel * 10);
        if (!r.normal() || r.term.has_y() || r.term.has_omega() ||
            !(long_normal_form(r.term) == *c.normal_form)) {
          o.fail(to_string(t));
        }
      } else {
        ++negative;
        if (classify_properness(long_normal_form(tilde_y(t, m))).proper) o.fail(to_string(t));
      }
    }
    o.detail << positive << " with normal form, " << negative << " without; ";
  });

  criterion(5, "decision spot checks", 0, [](Outcome& o) {
    Model m;
    if (has_normal_form(parse("Y{o} (\\x:o. x)"), m).verdict) o.fail("Y{o} (\\x. x)");
    for (std::size_t k = 0; k <= 10; ++k) {
      if (!has_normal_form(church_numeral(k, kO), m).verdict) o.fail("numeral " + std::to_string(k));
    }
    Term w = parse("\\x:o->o. Y{o->o} (\\f:o->o. \\y:o. x (f y))");
    bool hnf = has_head_normal_form(w, m).verdict;
    bool nf = has_normal_form(w, m).verdict;
    if (!hnf || nf) o.fail("head-normal-form witness");
    o.detail << "witness hnf=" << hnf << " nf=" << nf << "; ";
  });

  criterion(6, "conservativity pipeline on {0..4} grids", 30.0, [](Outcome& o) {
    Model m;
    const std::string nat = "((o->o)->o->o)";
    auto poly = [](const std::string& n) { return extended_poly(n, kO); };
    Term add = poly("add");
    Term mul = poly("mul");
    Term ifz = poly("ifzero");
    Term one = church_numeral(1, kO);
    Term n = Term::var("n", kNat);
    Term m_ = Term::var("m", kNat);
    // f(n) = if n = 0 then 1 else n + n
    Term ifz_double = Term::lam("n", kNat, Term::apps(ifz, {n, one, Term::apps(add, {n, n})}));
    // f(m, n) = if m = 0 then n else m * n
    Term ifz_mul = Term::lam("m", kNat, Term::lam("n", kNat,
                     Term::apps(ifz, {m_, n, Term::apps(mul, {m_, n})})));
    // recursion buried inside: \m n. Y (\r. add m n)
    Term inner_y = Term::lam("m", kNat, Term::lam("n", kNat,
                     Term::app(Term::fix(kNat), Term::lam_raw("r", kNat, Term::apps(add, {m_, n})))));

    using R = std::optional<std::size_t>;
    struct Case { std::string name; Term term; std::size_t arity; Reference ref; };
    Reference r_add = [](const Inputs& i) -> R { return i[0] + i[1]; };
    Reference r_mul = [](const Inputs& i) -> R { return i[0] * i[1]; };
    Reference r_ifz = [](const Inputs& i) -> R { return i[0] == 0 ? i[1] : i[2]; };
    Reference r_dbl = [](const Inputs& i) -> R { return i[0] == 0 ? 1 : 2 * i[0]; };
    Reference r_im = [](const Inputs& i) -> R { return i[0] == 0 ? i[1] : i[0] * i[1]; };
    std::vector<Case> cases = {
        {"add", add, 2, r_add},
        {"mul", mul, 2, r_mul},
        {"ifzero", ifz, 3, r_ifz},
        {"ifzero-double", ifz_double, 1, r_dbl},
        {"ifzero-mul", ifz_mul, 2, r_im},
        {"Y add", y_wrapped(add), 2, r_add},
        {"Y mul", y_wrapped(mul), 2, r_mul},
        {"Y ifzero-double", y_wrapped(ifz_double), 1, r_dbl},
        {"Y ifzero-mul", y_wrapped(ifz_mul), 2, r_im},
        {"add with inner Y", inner_y, 2, r_add},
    };
    std::size_t rows = 0;
    for (const Case& c : cases) {
      PipelineResult r = conservativity_pipeline(c.term, grid_spec(c.arity, c.ref), m);
      rows += r.verdict.rows.size();
      if (!is_lambda_beta_eta(r.eliminated)) o.fail(c.name + ": constants remain");
      if (!r.verdict.consistent()) o.fail(c.name + ": " + to_string(r.verdict.overall));
    }
    o.detail << cases.size() << " definers, " << rows << " rows; ";
  });

  criterion(7, "Omega-tilde map keeps constant-free normal forms (200+ terms)", 0,
            [](Outcome& o) {
    std::size_t checked = 0;
    std::uint64_t seed = 777;
    while (checked < 220) {
      for (const Term& t : omega_plus_corpus(200, seed++)) {
        Term k = long_normal_form(t);
        if (!is_lambda_beta_eta(k)) continue;
        ++checked;
        NormalizationOutcome r = normalize(tilde_omega_map(t));
        if (!r.normal() || !(long_normal_form(r.term) == k)) o.fail(to_string(t));
      }
    }
    o.detail << checked << " terms; ";
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
