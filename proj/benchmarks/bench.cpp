#include <benchmark/benchmark.h>

#include "qhd/decide.hpp"
#include "qhd/presentation.hpp"

using namespace qhd;

namespace {

Presentation binomial_fixture() {
  return parse_presentation(R"(vertices v1 v2 v3 v4
arrow a: v1 -> v2
arrow b: v2 -> v4
arrow c: v1 -> v3
arrow d: v3 -> v4
arrow e: v4 -> v1
rel a*b - c*d
rel b*e
rel e*a
order lenlex a > b > c > d > e
)");
}

Presentation monomial_fixture() {
  return parse_presentation(R"(vertices v1 v2 v3 v4 v5 v6
arrow a: v1 -> v2
arrow b: v2 -> v4
arrow c: v1 -> v3
arrow d: v3 -> v4
arrow e: v4 -> v6
arrow f: v3 -> v5
arrow g: v5 -> v6
arrow h: v6 -> v1
rel ab
rel be
rel de
rel eh
rel hc
)");
}

void BM_complete_declared(benchmark::State& state) {
  Presentation p = binomial_fixture();
  for (auto _ : state)
    benchmark::DoNotOptimize(complete(p.quiver, p.relations, *p.order, 12));
}
BENCHMARK(BM_complete_declared);

void BM_complete_reversed(benchmark::State& state) {
  Presentation p = binomial_fixture();
  AdmissibleOrder rev = p.order->reversed();
  for (auto _ : state)
    benchmark::DoNotOptimize(complete(p.quiver, p.relations, rev, 12));
}
BENCHMARK(BM_complete_reversed);

void BM_reduce(benchmark::State& state) {
  Presentation p = binomial_fixture();
  auto data = complete(p.quiver, p.relations, *p.order, 12);
  Element<Rational> x;
  for (const Path& n : data.normal)
    if (n.length() >= 1) x.add_term(n, Rational(3, 2));
  Element<Rational> sq;
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : x.terms())
      if (auto w = compose(p.quiver, u, v)) {
        Rational c = cu;
        c *= cv;
        sq.add_term(*w, c);
      }
  for (auto _ : state)
    benchmark::DoNotOptimize(reduce(p.quiver, sq, data.basis, data.order));
}
BENCHMARK(BM_reduce);

void BM_decide_qh(benchmark::State& state) {
  Presentation p = binomial_fixture();
  std::vector<AdmissibleOrder> orders{*p.order, p.order->reversed()};
  for (auto _ : state)
    benchmark::DoNotOptimize(decide_qh(p.quiver, p.relations, orders, 12));
}
BENCHMARK(BM_decide_qh);

void BM_verify_chain(benchmark::State& state) {
  Presentation p = binomial_fixture();
  auto data = complete(p.quiver, p.relations, p.order->reversed(), 12);
  auto A = build_fd_algebra(p.quiver, data);
  std::vector<vertex_id> ids;
  for (const char* nm : {"v2", "v1", "v3", "v4"})
    ids.push_back(*p.quiver.find_vertex(nm));
  for (auto _ : state) benchmark::DoNotOptimize(verify_chain(A, ids));
}
BENCHMARK(BM_verify_chain);

void BM_monomial_decision(benchmark::State& state) {
  Presentation p = monomial_fixture();
  std::vector<Path> rels;
  for (const auto& r : p.relations) rels.push_back(r.terms().front().first);
  TipSet t = minimal_tipset(p.quiver, rels);
  AdmissibleOrder ord = AdmissibleOrder::declaration(p.quiver);
  for (auto _ : state)
    benchmark::DoNotOptimize(decide_monomial_qh<Rational>(p.quiver, t, ord));
}
BENCHMARK(BM_monomial_decision);

}  // namespace

BENCHMARK_MAIN();
