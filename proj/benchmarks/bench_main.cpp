#include <benchmark/benchmark.h>

#include "lambday/analysis.hpp"
#include "lambday/reduction.hpp"
#include "lambday/semantics.hpp"
#include "lambday/syntax.hpp"

using namespace lambday;

namespace {

const char* const kTypes[] = {"o->o", "(o->o)->o->o", "(o->o)->o->o->o", "((o->o)->o->o)->(o->o)->o->o"};

void domain_enumeration(benchmark::State& state) {
  Type t = parse_type(kTypes[state.range(0)]);
  for (auto _ : state) {
    Model m;
    benchmark::DoNotOptimize(m.domain(t).size());
  }
  state.SetLabel(kTypes[state.range(0)]);
}
BENCHMARK(domain_enumeration)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void decide_normal_form(benchmark::State& state) {
  Term t = parse_term("\\x:o->o. Y{o->o} (\\f:o->o. \\y:o. x (f y))");
  Model m;
  for (auto _ : state) benchmark::DoNotOptimize(has_normal_form(t, m).verdict);
}
BENCHMARK(decide_normal_form)->Unit(benchmark::kMicrosecond);

void decide_numeral(benchmark::State& state) {
  Term t = church_numeral(static_cast<std::size_t>(state.range(0)), Type::ground());
  Model m;
  for (auto _ : state) benchmark::DoNotOptimize(has_normal_form(t, m).verdict);
}
BENCHMARK(decide_numeral)->Arg(4)->Arg(32)->Unit(benchmark::kMicrosecond);

void normalize_mul(benchmark::State& state) {
  std::string k = std::to_string(state.range(0));
  Term t = parse_term("(\\m:((o->o)->o->o). \\n:((o->o)->o->o). \\f:o->o. m (n f)) #" + k + "{o} #" + k + "{o}");
  for (auto _ : state) benchmark::DoNotOptimize(normalize(t).term);
}
BENCHMARK(normalize_mul)->Arg(4)->Arg(16)->Unit(benchmark::kMicrosecond);

void long_form_truncated(benchmark::State& state) {
  Term t = parse_term("Y{o->o} (\\f:o->o. \\y:o. y)");
  Model m;
  Term truncated = tilde_y(t, m);
  for (auto _ : state) benchmark::DoNotOptimize(long_normal_form(truncated));
}
BENCHMARK(long_form_truncated)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
