#include "lambday/harness.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lambday/analysis.hpp"
#include "lambday/reduction.hpp"
#include "lambday/syntax.hpp"
#include "lambday/translate.hpp"

namespace lambday {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::size_t parse_natural(std::string_view text, const std::string& what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw PreconditionError("expected a natural number for " + what + ", got '" +
                            std::string(text) + "'");
  }
  return value;
}

// "name(a,b)" -> {"name", {a, b}}
std::pair<std::string, std::vector<std::size_t>> parse_call(std::string_view text) {
  std::string s = trim(text);
  auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') throw PreconditionError("malformed name '" + s + "'");
  std::vector<std::size_t> params;
  for (const std::string& p : split(std::string_view(s).substr(open + 1, s.size() - open - 2), ',')) {
    params.push_back(parse_natural(p, s));
  }
  return {s.substr(0, open), params};
}

std::string inputs_text(const Inputs& in) {
  std::string out = "(";
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(in[i]);
  }
  return out + ")";
}

}  // namespace

Type FunctionSpec::definer_type() const {
  std::vector<Type> args;
  for (const Type& a : argument_types) args.push_back(Type::numeral(a));
  return Type::curried(args, Type::numeral(result_type));
}

std::vector<Inputs> sample_grid(std::size_t arity, std::size_t max) {
  std::vector<Inputs> out{Inputs{}};
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Inputs> next;
    for (const Inputs& prefix : out) {
      for (std::size_t v = 0; v <= max; ++v) {
        Inputs row = prefix;
        row.push_back(v);
        next.push_back(std::move(row));
      }
    }
    out = std::move(next);
  }
  return out;
}

Reference builtin_reference(std::string_view name) {
  auto [base, params] = parse_call(name);
  auto need = [&, b = base](std::size_t n) {
    if (params.size() != n) {
      throw PreconditionError("reference " + b + " takes " + std::to_string(n) +
                              " parameters");
    }
  };
  using R = std::optional<std::size_t>;
  if (base == "add") return [](const Inputs& in) -> R { return in.at(0) + in.at(1); };
  if (base == "mul") return [](const Inputs& in) -> R { return in.at(0) * in.at(1); };
  if (base == "succ") return [](const Inputs& in) -> R { return in.at(0) + 1; };
  if (base == "zero") return [](const Inputs&) -> R { return 0; };
  if (base == "id") return [](const Inputs& in) -> R { return in.at(0); };
  if (base == "sub") {
    return [](const Inputs& in) -> R {
      if (in.at(0) < in.at(1)) return std::nullopt;
      return in.at(0) - in.at(1);
    };
  }
  if (base == "ifzero") {
    return [](const Inputs& in) -> R { return in.at(0) == 0 ? in.at(1) : in.at(2); };
  }
  if (base == "const") {
    need(1);
    std::size_t k = params[0];
    return [k](const Inputs&) -> R { return k; };
  }
  if (base == "proj") {
    need(2);
    std::size_t i = params[0];
    if (i == 0 || i > params[1]) throw PreconditionError("proj index out of range");
    return [i](const Inputs& in) -> R { return in.at(i - 1); };
  }
  throw PreconditionError("unknown reference function '" + std::string(name) + "'");
}

FunctionSpec parse_function_spec(std::string_view text) {
  FunctionSpec spec;
  std::string term_text;
  std::optional<std::size_t> grid;
  std::optional<Reference> reference;
  std::vector<std::pair<Inputs, std::optional<std::size_t>>> rows;
  bool have_result = false;

  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto c = line.find("--"); c != std::string::npos) {
      // `->` inside terms is not a comment; only a literal `--` is.
      line.erase(c);
    }
    std::string content = trim(line);
    if (content.empty()) continue;
    auto colon = content.find(':');
    if (colon == std::string::npos) {
      throw ParseError("expected 'key: value'", {0, line_no, 1});
    }
    std::string key = trim(std::string_view(content).substr(0, colon));
    std::string value = trim(std::string_view(content).substr(colon + 1));
    try {
      if (key == "function") {
        spec.name = value;
      } else if (key == "arguments") {
        if (!value.empty()) {
          for (const std::string& t : split(value, ',')) {
            spec.argument_types.push_back(parse_type(t));
          }
        }
      } else if (key == "result") {
        spec.result_type = parse_type(value);
        have_result = true;
      } else if (key == "term") {
        term_text += value + "\n";
      } else if (key == "reference") {
        reference = builtin_reference(value);
      } else if (key == "grid") {
        grid = parse_natural(value, "grid");
      } else if (key == "sample") {
        auto eq = value.find('=');
        if (eq == std::string::npos) {
          throw PreconditionError("sample needs '= result'");
        }
        Inputs inputs;
        std::istringstream words(value.substr(0, eq));
        std::string w;
        while (words >> w) inputs.push_back(parse_natural(w, "sample input"));
        std::string result = trim(std::string_view(value).substr(eq + 1));
        std::optional<std::size_t> expected;
        if (result != "_") expected = parse_natural(result, "sample result");
        rows.emplace_back(std::move(inputs), expected);
      } else {
        throw PreconditionError("unknown key '" + key + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), {0, line_no, 1});
    }
  }
  if (!have_result) throw ParseError("spec file lacks 'result:'", {0, line_no, 1});
  if (!term_text.empty()) spec.term = parse_term(term_text);

  const std::size_t arity = spec.argument_types.size();
  for (const auto& [inputs, expected] : rows) {
    if (inputs.size() != arity) {
      throw ParseError("sample " + inputs_text(inputs) + " has the wrong arity",
                       {0, line_no, 1});
    }
  }
  if (!rows.empty()) {
    auto table = std::make_shared<std::map<Inputs, std::optional<std::size_t>>>();
    for (const auto& [inputs, expected] : rows) {
      (*table)[inputs] = expected;
      spec.samples.push_back(inputs);
    }
    spec.reference = [table](const Inputs& in) { return table->at(in); };
  } else if (reference) {
    spec.reference = *reference;
    spec.samples = sample_grid(arity, grid.value_or(4));
  } else {
    throw ParseError("spec file needs samples or a reference", {0, line_no, 1});
  }
  return spec;
}

std::string Observation::to_string() const {
  switch (kind) {
    case Kind::kDecoded: return std::to_string(value);
    case Kind::kNoNormalForm: return "no-normal-form";
    case Kind::kNotANumeral: return "not-a-numeral";
    case Kind::kUndecided: return "undecided";
  }
  return "?";
}

bool DefinabilityRow::matches() const {
  if (expected) {
    return observed.kind == Observation::Kind::kDecoded &&
           observed.value == *expected;
  }
  return observed.kind == Observation::Kind::kNoNormalForm;
}

std::string to_string(DefinabilityVerdict::Overall overall) {
  switch (overall) {
    case DefinabilityVerdict::Overall::kConsistent: return "consistent";
    case DefinabilityVerdict::Overall::kRefuted: return "refuted";
    case DefinabilityVerdict::Overall::kUndecided: return "undecided";
  }
  return "?";
}

std::string DefinabilityVerdict::table() const {
  std::vector<std::array<std::string, 4>> cells;
  cells.push_back({"inputs", "expected", "observed", "ok"});
  for (const DefinabilityRow& r : rows) {
    cells.push_back({inputs_text(r.inputs),
                     r.expected ? std::to_string(*r.expected) : "_",
                     r.observed.to_string(), r.matches() ? "yes" : "NO"});
  }
  std::array<std::size_t, 4> width{};
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) {
      out << row[c];
      if (c + 1 < 4) out << std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << "\n";
  }
  out << "verdict: " << lambday::to_string(overall);
  if (witness) out << " at " << inputs_text(*witness);
  out << "\n";
  return out.str();
}

std::string DefinabilityVerdict::to_record() const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const DefinabilityRow& r : rows) {
    rows_json.push_back({
        {"inputs", r.inputs},
        {"expected", r.expected ? nlohmann::json(*r.expected) : nlohmann::json("_")},
        {"observed", r.observed.to_string()},
        {"matches", r.matches()},
    });
  }
  nlohmann::json out = {
      {"verdict", lambday::to_string(overall)},
      {"rows", rows_json},
      {"witness", witness ? nlohmann::json(*witness) : nlohmann::json(nullptr)},
  };
  return out.dump();
}

DefinabilityVerdict check_defines(const Term& definer, const FunctionSpec& spec,
                                  Model& model) {
  if (!(definer.type() == spec.definer_type())) {
    throw PreconditionError("definer has type " + definer.type().to_string() +
                            " but the spec needs " +
                            spec.definer_type().to_string());
  }
  if (!definer.is_closed()) throw PreconditionError("definer must be closed");
  DefinabilityVerdict verdict;
  bool undecided = false;
  for (const Inputs& inputs : spec.samples) {
    DefinabilityRow row;
    row.inputs = inputs;
    row.expected = spec.reference(inputs);
    Term applied = definer;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      applied = Term::app(applied, church_numeral(inputs[i], spec.argument_types[i]));
    }
    try {
      CertifiedNormalForm nf = certified_normalize(applied, model);
      if (!nf.normal_form) {
        row.observed.kind = Observation::Kind::kNoNormalForm;
      } else if (auto m = decode_numeral(*nf.normal_form, spec.result_type)) {
        row.observed.kind = Observation::Kind::kDecoded;
        row.observed.value = *m;
      } else {
        row.observed.kind = Observation::Kind::kNotANumeral;
        row.observed.detail = to_string(*nf.normal_form);
      }
    } catch (const DomainTooLarge& e) {
      row.observed.kind = Observation::Kind::kUndecided;
      row.observed.detail = e.what();
      undecided = true;
    }
    if (!verdict.witness && row.observed.kind != Observation::Kind::kUndecided &&
        !row.matches()) {
      verdict.witness = inputs;
    }
    verdict.rows.push_back(std::move(row));
  }
  if (verdict.witness) {
    verdict.overall = DefinabilityVerdict::Overall::kRefuted;
  } else if (undecided) {
    verdict.overall = DefinabilityVerdict::Overall::kUndecided;
  }
  return verdict;
}

Term extended_poly(std::string_view name, const Type& alpha) {
  const std::string a = "(" + alpha.to_string() + ")";
  const std::string n = "((" + a + " -> " + a + ") -> " + a + " -> " + a + ")";
  auto build = [&](const std::string& text) { return parse_term(text); };
  auto [base, params] = parse_call(name);
  if (base == "zero" && params.empty()) return church_numeral(0, alpha);
  if (base == "succ" && params.empty()) {
    return build("\\n:" + n + ". \\f:" + a + " -> " + a + ". \\x:" + a +
                 ". f (n f x)");
  }
  if (base == "add" && params.empty()) {
    return build("\\m:" + n + ". \\n:" + n + ". \\f:" + a + " -> " + a +
                 ". \\x:" + a + ". m f (n f x)");
  }
  if (base == "mul" && params.empty()) {
    return build("\\m:" + n + ". \\n:" + n + ". \\f:" + a + " -> " + a +
                 ". m (n f)");
  }
  if (base == "ifzero" && params.empty()) {
    // n is used at the numeral type itself: zero iterations leave a f x,
    // any positive number of iterations of the constant step yields b f x.
    return build("\\n:" + n + ". \\a:" + n + ". \\b:" + n + ". \\f:" + a +
                 " -> " + a + ". \\x:" + a + ". n (\\y:" + a + ". b f x) (a f x)");
  }
  if (base == "const" && params.size() == 1) {
    return Term::lam_raw("n", Type::numeral(alpha), church_numeral(params[0], alpha));
  }
  if (base == "proj" && params.size() == 2) {
    const std::size_t i = params[0];
    const std::size_t k = params[1];
    if (i == 0 || i > k) throw PreconditionError("proj index out of range");
    Type numeral = Type::numeral(alpha);
    Term body = Term::bound(static_cast<std::uint32_t>(k - i), numeral);
    for (std::size_t j = k; j >= 1; --j) {
      body = Term::lam_raw("n" + std::to_string(j), numeral, body);
    }
    return body;
  }
  throw PreconditionError("unknown extended polynomial '" + std::string(name) + "'");
}

PipelineResult conservativity_pipeline(const Term& definer,
                                       const FunctionSpec& spec, Model& model) {
  const Type type = definer.type();
  auto stage = [&](const std::string& name, auto&& fn) -> Term {
    Term out;
    try {
      out = fn();
    } catch (const Error& e) {
      throw PipelineError(name, e.what());
    }
    if (!(out.type() == type)) {
      throw PipelineError(name, "stage changed the type to " + out.type().to_string());
    }
    return out;
  };
  PipelineResult result;
  result.truncated = stage("tilde-y", [&] { return tilde_y(definer, model); });
  result.mapped = stage("tilde-omega", [&] { return tilde_omega_map(result.truncated); });
  result.eliminated = stage("eliminate-omega", [&] {
    return eliminate_omega(result.mapped, spec.argument_types.size());
  });
  if (!is_lambda_beta_eta(result.eliminated)) {
    throw InvariantViolation("eliminate-omega left a constant behind");
  }
  try {
    result.verdict = check_defines(result.eliminated, spec, model);
  } catch (const Error& e) {
    throw PipelineError("check-defines", e.what());
  }
  return result;
}

std::string to_string(ProbeReport::Outcome outcome) {
  switch (outcome) {
    case ProbeReport::Outcome::kZero: return "zero";
    case ProbeReport::Outcome::kOmega: return "omega";
    case ProbeReport::Outcome::kOther: return "other";
  }
  return "?";
}

std::string ProbeReport::to_record() const {
  nlohmann::json out = {
      {"outcome", lambday::to_string(outcome)},
      {"normal_form", lambday::to_string(normal_form)},
      {"depth", depth},
      {"m", m},
      {"below_bound", depth < m},
  };
  return out.dump();
}

ProbeReport fact1_probe(const Term& tester, std::size_t m, const Type& alpha,
                        std::size_t depth) {
  const Type numeral = Type::numeral(alpha);
  const Type endo = Type::arrow(numeral, numeral);
  if (!(tester.type() == endo)) {
    throw PreconditionError("tester must have type " + endo.to_string());
  }
  if (!tester.is_closed()) throw PreconditionError("tester must be closed");

  // \f x. ifzero (E x) 0 (f (succ x)): the answer is 0 as soon as E x is 0.
  const Term f = Term::var("f", endo);
  const Term x = Term::var("x", numeral);
  const Term body = Term::apps(
      extended_poly("ifzero", alpha),
      {Term::app(tester, x), church_numeral(0, alpha),
       Term::app(f, Term::app(extended_poly("succ", alpha), x))});
  ProbeReport report;
  report.step = Term::lam("f", endo, Term::lam("x", numeral, body));
  report.depth = depth;
  report.m = m;

  Term search = Term::apps(y_tilde(depth, endo), {report.step, church_numeral(0, alpha)});
  report.normal_form = long_normal_form(search);
  if (decode_numeral(report.normal_form, alpha) == std::optional<std::size_t>(0)) {
    report.outcome = ProbeReport::Outcome::kZero;
  } else if (report.normal_form.has_omega()) {
    report.outcome = ProbeReport::Outcome::kOmega;
  } else {
    report.outcome = ProbeReport::Outcome::kOther;
  }
  return report;
}

}  // namespace lambday
