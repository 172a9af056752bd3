// Parallel against serial surface quadrature of beta over Sigma_n.
// Thread count follows OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "weylgerbe/gerbe_data.hpp"
#include "weylgerbe/holonomy.hpp"

namespace {

using namespace weylgerbe;

template <Complex (*Integrate)(const FormValue&, const QuadratureMesh&, const TorusPoint&)>
void BM_beta_integral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto order = static_cast<int>(state.range(1));
  const QuadratureMesh mesh = make_sphere_mesh(n, order);
  const TorusPoint t0 = sigma_torus_point(n);
  const FormValue beta = beta_form_value();
  for (auto _ : state) benchmark::DoNotOptimize(Integrate(beta, mesh, t0));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * mesh.nodes.size()));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_beta_integral, integrate_2form)->ArgsProduct({{2, 4, 8}, {16, 32, 64}})->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_beta_integral, integrate_2form_serial)->ArgsProduct({{2, 4, 8}, {16, 32, 64}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
