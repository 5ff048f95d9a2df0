#include "lambday/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif
#include <nlohmann/json.hpp>

#include "lambday/analysis.hpp"
#include "lambday/errors.hpp"
#include "lambday/harness.hpp"
#include "lambday/reduction.hpp"
#include "lambday/semantics.hpp"
#include "lambday/syntax.hpp"
#include "lambday/translate.hpp"

namespace lambday::cli {

namespace {

using json = nlohmann::json;

struct Options {
  bool json = false;
  bool no_sugar = false;
  std::size_t size_limit = kDefaultSizeLimit;
  std::string file;
  std::string input;

  std::size_t fuel = kDefaultFuel;
  std::string strategy = "normal";
  bool trace = false;
  bool no_eta = false;
  std::optional<std::size_t> arity;
  std::string term;
  std::string poly;
  std::size_t m = 1;
  std::string alpha = "o";
  std::size_t depth = 0;
};

class Session {
 public:
  Session(const Options& options, std::ostream& out)
      : opt(options), out(out), model_(options.size_limit) {}

  const Options& opt;
  std::ostream& out;

  Model& model() { return model_; }

  std::string text() const {
    if (!opt.file.empty()) return read_file(opt.file);
    if (opt.input.empty()) throw PreconditionError("no input given");
    return opt.input;
  }

  Term term() const { return parse_term(text()); }

  Term closed_term() const {
    Term t = term();
    if (!t.is_closed()) throw PreconditionError("this command needs a closed term");
    return t;
  }

  std::string show(const Term& t) const {
    PrintOptions p;
    p.numeral_sugar = !opt.no_sugar;
    return to_string(t, p);
  }

  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  void emit(const json& j) { out << j.dump() << "\n"; }

 private:
  Model model_;
};

json depths_json(const DepthMap& depths) {
  json out = json::object();
  for (const auto& [type, d] : depths) out[type.to_string()] = d;
  return out;
}

// ---------------------------------------------------------------- commands

int cmd_parse(Session& s) {
  Term t = s.term();
  if (s.opt.json) {
    s.emit({{"term", s.show(t)}, {"type", t.type().to_string()},
            {"tree", json::parse(to_tree(t))}});
  } else {
    s.out << s.show(t) << "\n";
  }
  return kSuccess;
}

int cmd_typecheck(Session& s) {
  Term t = s.term();
  json free = json::array();
  for (const FreeVar& v : free_variables(t)) {
    free.push_back({{"name", v.name}, {"type", v.type.to_string()}});
  }
  if (s.opt.json) {
    s.emit({{"type", t.type().to_string()}, {"free", free}});
  } else {
    s.out << t.type().to_string() << "\n";
  }
  return kSuccess;
}

int cmd_normalize(Session& s) {
  Term t = s.term();
  NormalizeOptions n;
  if (s.opt.strategy == "innermost") {
    n.strategy = Strategy::kInnermost;
  } else if (s.opt.strategy != "normal") {
    throw PreconditionError("unknown strategy '" + s.opt.strategy + "'");
  }
  n.eta = !s.opt.no_eta;
  json trace = json::array();
  if (s.opt.trace) {
    n.trace = [&](const Term& step) {
      if (s.opt.json) {
        trace.push_back(s.show(step));
      } else {
        s.out << s.show(step) << "\n";
      }
    };
  }
  NormalizationOutcome r = normalize(t, s.opt.fuel, n);
  if (s.opt.json) {
    json j = {{"status", r.normal() ? "normal" : "fuel-exhausted"},
              {"term", s.show(r.term)},
              {"steps", r.steps}};
    if (s.opt.trace) j["trace"] = trace;
    s.emit(j);
  } else if (r.normal()) {
    s.out << s.show(r.term) << "\n";
  } else {
    s.out << "fuel exhausted after " << r.steps << " steps\n" << s.show(r.term) << "\n";
  }
  return r.normal() ? kSuccess : kNegative;
}

int cmd_long_nf(Session& s) {
  Term t = s.term();
  if (t.has_y()) {
    NormalizationOutcome r = normalize(t, s.opt.fuel);
    if (!r.normal()) {
      throw FuelExhaustedError(s.opt.fuel);
    }
    t = r.term;
  }
  Term nf = long_normal_form(t, s.opt.fuel);
  if (s.opt.json) {
    s.emit({{"term", s.show(nf)}, {"type", nf.type().to_string()}});
  } else {
    s.out << s.show(nf) << "\n";
  }
  return kSuccess;
}

int cmd_proper(Session& s) {
  Term t = s.term();
  if (t.has_y()) throw PreconditionError("proper expects a term without Y");
  Term nf = long_normal_form(t, s.opt.fuel);
  Properness p = classify_properness(nf);
  if (s.opt.json) {
    json j = {{"proper", p.proper}, {"normal_form", s.show(nf)}};
    j["witness"] = p.proper ? json(nullptr) : json(p.witness_text());
    s.emit(j);
  } else {
    if (p.proper) {
      s.out << "proper\n";
    } else {
      s.out << "improper (Omega at " << (p.witness.empty() ? "root" : p.witness_text())
            << ")\n";
    }
    s.out << s.show(nf) << "\n";
  }
  return p.proper ? kSuccess : kNegative;
}

int cmd_eval(Session& s) {
  Term t = s.closed_term();
  Element e = s.model().eval(t);
  std::string d = s.model().describe(e);
  if (s.opt.json) {
    s.emit({{"type", t.type().to_string()}, {"element", d}});
  } else {
    s.out << d << "\n";
  }
  return kSuccess;
}

int cmd_height(Session& s) {
  Type type = parse_type(s.text());
  std::size_t h = s.model().height(type);
  if (s.opt.json) {
    s.emit({{"type", type.to_string()}, {"height", h}});
  } else {
    s.out << h << "\n";
  }
  return kSuccess;
}

int cmd_domain(Session& s) {
  Type type = parse_type(s.text());
  const Domain& d = s.model().domain(type);
  if (s.opt.json) {
    json elements = json::array();
    for (std::size_t i = 0; i < d.size(); ++i) elements.push_back(d.table(i));
    json covers = json::array();
    for (auto [i, j] : d.covers()) covers.push_back({i, j});
    s.emit({{"type", type.to_string()},
            {"size", d.size()},
            {"height", d.longest_chain()},
            {"elements", elements},
            {"covers", covers}});
  } else {
    s.out << d.dump();
  }
  return kSuccess;
}

int decide(Session& s, AnalysisReport (*analysis)(const Term&, Model&),
           const char* yes, const char* no) {
  Term t = s.closed_term();
  AnalysisReport r = analysis(t, s.model());
  if (s.opt.json) {
    s.out << r.to_record() << "\n";
  } else {
    s.out << (r.verdict ? yes : no) << "\n";
  }
  return r.verdict ? kSuccess : kNegative;
}

int cmd_decide_nf(Session& s) {
  return decide(s, has_normal_form, "normal form", "no normal form");
}

int cmd_decide_hnf(Session& s) {
  return decide(s, has_head_normal_form, "head normal form", "no head normal form");
}

int cmd_certify_nf(Session& s) {
  Term t = s.closed_term();
  CertifiedNormalForm c = certified_normalize(t, s.model());
  if (s.opt.json) {
    json j = json::parse(c.report.to_record());
    j["normal_form"] = c.normal_form ? json(s.show(*c.normal_form)) : json(nullptr);
    s.emit(j);
  } else if (c.normal_form) {
    s.out << s.show(*c.normal_form) << "\n";
  } else {
    s.out << "no normal form\n";
  }
  return c.normal_form ? kSuccess : kNegative;
}

int cmd_tilde_y(Session& s) {
  Term t = s.term();
  DepthMap depths;
  for (const Type& y : y_subscripts(t)) depths[y] = s.model().height(y);
  Term out = y_truncate(t, depths);
  if (s.opt.json) {
    s.emit({{"term", s.show(out)}, {"depths", depths_json(depths)}});
  } else {
    s.out << s.show(out) << "\n";
  }
  return kSuccess;
}

int print_term(Session& s, const Term& t) {
  if (s.opt.json) {
    s.emit({{"term", s.show(t)}, {"type", t.type().to_string()}});
  } else {
    s.out << s.show(t) << "\n";
  }
  return kSuccess;
}

int cmd_tilde_omega(Session& s) { return print_term(s, tilde_omega_map(s.term())); }

int cmd_eliminate_omega(Session& s) {
  return print_term(s, eliminate_omega(s.closed_term(), s.opt.arity));
}

// The definer comes from --term, --poly, or the spec file, in that order.
Term spec_definer(Session& s, const FunctionSpec& spec) {
  if (!s.opt.term.empty()) return parse_term(s.opt.term);
  if (!s.opt.poly.empty()) return extended_poly(s.opt.poly, spec.result_type);
  if (spec.term) return *spec.term;
  throw PreconditionError("no definer: pass --term, --poly or add 'term:' to the spec");
}

int verdict_status(const DefinabilityVerdict& v) {
  return v.consistent() ? kSuccess : kNegative;
}

void print_verdict(Session& s, const DefinabilityVerdict& v) {
  s.out << v.table();
  if (v.overall == DefinabilityVerdict::Overall::kUndecided) {
    s.out << "undecided at configured limits\n";
  }
}

int cmd_check_defines(Session& s) {
  FunctionSpec spec = parse_function_spec(Session::read_file(s.opt.input));
  Term definer = spec_definer(s, spec);
  DefinabilityVerdict v = check_defines(definer, spec, s.model());
  if (s.opt.json) {
    s.out << v.to_record() << "\n";
  } else {
    print_verdict(s, v);
  }
  return verdict_status(v);
}

int cmd_pipeline(Session& s) {
  FunctionSpec spec = parse_function_spec(Session::read_file(s.opt.input));
  Term definer = spec_definer(s, spec);
  PipelineResult r = conservativity_pipeline(definer, spec, s.model());
  if (s.opt.json) {
    s.emit({{"truncated", s.show(r.truncated)},
            {"mapped", s.show(r.mapped)},
            {"eliminated", s.show(r.eliminated)},
            {"verdict", json::parse(r.verdict.to_record())}});
  } else {
    s.out << "truncated:  " << s.show(r.truncated) << "\n";
    s.out << "mapped:     " << s.show(r.mapped) << "\n";
    s.out << "eliminated: " << s.show(r.eliminated) << "\n";
    print_verdict(s, r.verdict);
  }
  return verdict_status(r.verdict);
}

int cmd_fact1_probe(Session& s) {
  Type alpha = parse_type(s.opt.alpha);
  Term tester;
  if (!s.opt.term.empty()) {
    tester = parse_term(s.opt.term);
  } else if (!s.opt.poly.empty()) {
    tester = extended_poly(s.opt.poly, alpha);
  } else {
    throw PreconditionError("fact1-probe needs --tester or --poly");
  }
  ProbeReport r = fact1_probe(tester, s.opt.m, alpha, s.opt.depth);
  if (s.opt.json) {
    s.out << r.to_record() << "\n";
  } else {
    s.out << "outcome: " << to_string(r.outcome) << "\n";
    s.out << "normal form: " << s.show(r.normal_form) << "\n";
  }
  return kSuccess;
}

// ---------------------------------------------------------------- driver

struct Command {
  const char* name;
  const char* help;
  const char* positional;  // nullptr when the command reads --file or a TERM
  int (*handler)(Session&);
};

const std::vector<Command>& commands() {
  static const std::vector<Command> table = {
      {"parse", "Parse a term and print it in canonical form", nullptr, cmd_parse},
      {"typecheck", "Print the type of a term", nullptr, cmd_typecheck},
      {"normalize", "Reduce to normal form within a fuel budget", nullptr, cmd_normalize},
      {"long-nf", "Print the long beta-eta normal form", nullptr, cmd_long_nf},
      {"proper", "Classify the long normal form of a Y-free term", nullptr, cmd_proper},
      {"eval", "Evaluate a closed term in the finite model", nullptr, cmd_eval},
      {"height", "Height of the domain at TYPE", "TYPE", cmd_height},
      {"domain", "Dump the domain at TYPE", "TYPE", cmd_domain},
      {"decide-nf", "Decide whether a closed term has a normal form", nullptr,
       cmd_decide_nf},
      {"decide-hnf", "Decide whether a closed term has a head normal form", nullptr,
       cmd_decide_hnf},
      {"certify-nf", "Decide, then extract the normal form", nullptr, cmd_certify_nf},
      {"tilde-y", "Replace Y by bounded unfoldings", nullptr, cmd_tilde_y},
      {"tilde-omega", "Replace higher Omega by lambdas over Omega{o}", nullptr,
       cmd_tilde_omega},
      {"eliminate-omega", "Replace Omega{o} in a numeral definer", nullptr,
       cmd_eliminate_omega},
      {"check-defines", "Check a definer against a spec file", "SPECFILE",
       cmd_check_defines},
      {"pipeline", "Run the Y and Omega elimination pipeline on a spec file",
       "SPECFILE", cmd_pipeline},
      {"fact1-probe", "Bounded-depth search probe", "", cmd_fact1_probe},
  };
  return table;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "Structured output, one JSON object per line");
  sub->add_flag("--no-sugar", o.no_sugar, "Print numerals as lambda terms");
  sub->add_option("--size-limit", o.size_limit, "Largest domain to enumerate")
      ->envname("LAMBDAY_SIZE_LIMIT")
      ->capture_default_str();
}

void add_specific(CLI::App* sub, const std::string& name, Options& o) {
  if (name == "normalize" || name == "long-nf" || name == "proper") {
    sub->add_option("--fuel", o.fuel, "Reduction step budget")->capture_default_str();
  }
  if (name == "normalize") {
    sub->add_option("--strategy", o.strategy, "normal or innermost")
        ->check(CLI::IsMember({"normal", "innermost"}))
        ->capture_default_str();
    sub->add_flag("--trace", o.trace, "Print every intermediate term");
    sub->add_flag("--no-eta", o.no_eta, "Do not contract eta redexes");
  }
  if (name == "eliminate-omega") {
    sub->add_option("--arity", o.arity, "Number of numeral arguments");
  }
  if (name == "check-defines" || name == "pipeline") {
    sub->add_option("--term", o.term, "Definer term (overrides the spec file)");
    sub->add_option("--poly", o.poly, "Use a built-in extended polynomial as definer");
  }
  if (name == "fact1-probe") {
    sub->add_option("--tester", o.term, "Candidate tester term");
    sub->add_option("--poly", o.poly, "Use a built-in extended polynomial as tester");
    sub->add_option("--m", o.m, "Number the tester is meant to recognise")
        ->capture_default_str();
    sub->add_option("--alpha", o.alpha, "Numeral parameter type")->capture_default_str();
    sub->add_option("--depth", o.depth, "Recursion depth")->capture_default_str();
  }
}

std::string category(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const TypeError*>(&e)) return "type";
  if (auto* p = dynamic_cast<const PipelineError*>(&e)) return "pipeline/" + p->stage();
  if (dynamic_cast<const FuelExhaustedError*>(&e)) return "fuel";
  if (dynamic_cast<const PreconditionError*>(&e)) return "precondition";
  if (dynamic_cast<const InvariantViolation*>(&e)) return "invariant";
  if (dynamic_cast<const Error*>(&e)) return "error";
  return "internal";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Typed lambda calculus workbench with finite-model analyses", "lambday"};
  app.require_subcommand(1);
  app.fallthrough(false);

  Options opt;
  std::map<CLI::App*, const Command*> dispatch;
  for (const Command& c : commands()) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, opt);
    add_specific(sub, c.name, opt);
    if (c.positional == nullptr) {
      sub->add_option("--file", opt.file, "Read the term from a file");
      sub->add_option("TERM", opt.input, "Term in the surface grammar");
    } else if (*c.positional != '\0') {
      sub->add_option(c.positional, opt.input)->required();
    }
    dispatch[sub] = &c;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kFailure;
  }

  const Command* command = nullptr;
  for (CLI::App* sub : app.get_subcommands()) command = dispatch.at(sub);

  Session session(opt, out);
  try {
    return command->handler(session);
  } catch (const DomainTooLarge& e) {
    if (opt.json) {
      session.emit({{"verdict", "undecided"}, {"reason", e.what()}});
    } else {
      out << "undecided at configured limits (" << e.what() << ")\n";
    }
    return kFailure;
  } catch (const TypeError& e) {
    err << "lambday " << command->name << ": type: " << e.what();
    if (e.subterm().valid()) err << "\n  in: " << to_string(e.subterm());
    err << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "lambday " << command->name << ": " << category(e) << ": " << e.what()
        << "\n";
    return kFailure;
  }
}

int repl(std::istream& in, std::ostream& out, std::ostream& err, bool prompt) {
  int status = kSuccess;
  std::string line;
  while (true) {
    if (prompt) out << "> " << std::flush;
    if (!std::getline(in, line)) break;
    auto start = line.find_first_not_of(" \t");
    if (start == std::string::npos || line.compare(start, 2, "--") == 0) continue;
    line = line.substr(start);
    if (line == "quit" || line == "exit") break;
    std::vector<std::string> args;
    auto space = line.find_first_of(" \t");
    args.push_back(line.substr(0, space));
    if (space != std::string::npos) {
      std::string rest = line.substr(space + 1);
      rest.erase(0, rest.find_first_not_of(" \t"));
      if (!rest.empty()) args.push_back(rest);
    }
    status = run(args, out, err);
  }
  return status;
}

}  // namespace lambday::cli
