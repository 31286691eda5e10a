// Times the serial (online-deposit) engine against the OpenMP snapshot engine
// on the continental traversal and a batch of intra-cluster routes.
#include <chrono>
#include <cstdio>
#include <vector>

#include "africa3/aco.hpp"
#include "africa3/pipeline.hpp"

using namespace africa3;
using clock_type = std::chrono::steady_clock;

namespace {

double run_traverse(const CountryDataset& ds, const AdjacencyGraph& graph, int threads,
                    double* trc) {
    std::vector<std::string> all;
    for (const auto& c : ds.countries()) all.push_back(c.id);
    AdjacencyGraph complete = graph.induced(all, true);
    NormalizedFeatures nf(ds, all, NormScope::Global);
    ClusterRoutingSpec spec;
    AcoParams params;
    params.ants = 500;
    params.iterations = 60;
    params.seed = 7;
    params.threads = threads;
    auto t0 = clock_type::now();
    auto res = traverse_all(complete, all, spec, params, nf);
    auto t1 = clock_type::now();
    *trc = res.total_cost;
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
    auto ds = load_countries_file("data/countries.csv");
    auto cables = load_cables_file("data/cables.csv");
    ds.apply_landings(landings_per_country(cables));
    auto graph = build_adjacency(ds, AdjacencyMode::Borders, load_edge_list_file("data/borders.csv"),
                                 load_edge_list_file("data/maritime.csv"));

    std::printf("%-28s %10s %12s\n", "configuration", "time (s)", "TRC");
    for (int threads : {1, 2, 4, 8}) {
        double trc = 0.0;
        double secs = run_traverse(ds, graph, threads, &trc);
        std::printf("%-28s %10.3f %12.6f\n",
                    threads == 1 ? "serial (online deposits)"
                                 : ("omp snapshot x" + std::to_string(threads)).c_str(),
                    secs, trc);
    }
    return 0;
}
