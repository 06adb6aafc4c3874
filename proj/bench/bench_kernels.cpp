// Serial reference paths against their OpenMP counterparts. Run with
// OMP_NUM_THREADS (or --jobs in the CLI) set to the core count of interest.
#include <benchmark/benchmark.h>

#include "signhom/campaign.hpp"
#include "signhom/props.hpp"
#include "signhom/targets.hpp"
#include "signhom/witnesses.hpp"

namespace {

using signhom::Exec;

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_CheckProperty(benchmark::State& state) {
  const auto h = signhom::build_at(signhom::build_sp(25)).graph;
  for (auto _ : state) benchmark::DoNotOptimize(signhom::check_property(h, 3, 4, exec_of(state)));
  label(state);
}
BENCHMARK(BM_CheckProperty)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CampaignChunk(benchmark::State& state) {
  const auto graphs = signhom::read_planar_code_file(std::string(SIGNHOM_FIXTURES_DIR) + "/icosahedron.pc");
  const auto target = signhom::build_tromp(9);
  signhom::CampaignConfig cfg;
  cfg.stop_after = 8192;
  cfg.consistency_samples = 0;
  cfg.search.order = signhom::VariableOrder::max_constrained;
  cfg.search.symmetry = true;
  cfg.exec = exec_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(signhom::run_campaign(graphs, target, cfg));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(*cfg.stop_after));
  label(state);
}
BENCHMARK(BM_CampaignChunk)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Enumerate4Regular(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(signhom::enumerate_4regular_9(exec_of(state)));
  label(state);
}
BENCHMARK(BM_Enumerate4Regular)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
