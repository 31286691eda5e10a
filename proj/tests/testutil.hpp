#pragma once

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "africa3/aco.hpp"
#include "africa3/dataset.hpp"
#include "africa3/graph.hpp"
#include "africa3/rng.hpp"

namespace testutil {

inline africa3::CountryDataset reference_dataset() {
    auto ds = africa3::load_countries_file("data/countries.csv");
    auto cables = africa3::load_cables_file("data/cables.csv");
    ds.apply_landings(africa3::landings_per_country(cables));
    return ds;
}

inline africa3::AdjacencyGraph reference_graph(const africa3::CountryDataset& ds,
                                               africa3::AdjacencyMode mode =
                                                   africa3::AdjacencyMode::Borders) {
    return africa3::build_adjacency(ds, mode, africa3::load_edge_list_file("data/borders.csv"),
                                    africa3::load_edge_list_file("data/maritime.csv"));
}

inline std::map<std::string, std::vector<std::string>> au_clusters(
    const africa3::CountryDataset& ds) {
    std::map<std::string, std::vector<std::string>> out;
    for (const auto& c : ds.countries()) out[africa3::to_string(c.sub_region)].push_back(c.id);
    return out;
}

// Small directed-cost graph fixture for oracle comparisons.
struct TestGraph {
    std::size_t n = 0;
    std::vector<std::vector<std::size_t>> adj;
    std::vector<double> delta;  // dense n*n, directed

    double d(std::size_t i, std::size_t j) const { return delta[i * n + j]; }
};

// Multi-target Dijkstra; returns the cheapest cost from src to any target.
inline double dijkstra_cost(const TestGraph& g, std::size_t src,
                            const std::set<std::size_t>& targets) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(g.n, kInf);
    dist[src] = 0.0;
    using Item = std::pair<double, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        if (targets.count(u)) return d;
        for (auto v : g.adj[u]) {
            double nd = d + g.d(u, v);
            if (nd < dist[v]) {
                dist[v] = nd;
                pq.push({nd, v});
            }
        }
    }
    return kInf;
}

// Exhaustive best open path visiting all nodes exactly once; inf if none.
inline double brute_traverse_cost(const TestGraph& g) {
    constexpr double kInf = std::numeric_limits<double>::infinity();
    double best = kInf;
    std::vector<char> vis(g.n, 0);
    std::vector<std::size_t> path;
    auto rec = [&](auto&& self, std::size_t cur, std::size_t count, double cost) -> void {
        if (cost >= best) return;
        if (count == g.n) {
            best = cost;
            return;
        }
        for (auto v : g.adj[cur]) {
            if (vis[v]) continue;
            vis[v] = 1;
            self(self, v, count + 1, cost + g.d(cur, v));
            vis[v] = 0;
        }
    };
    for (std::size_t s = 0; s < g.n; ++s) {
        vis[s] = 1;
        rec(rec, s, 1, 0.0);
        vis[s] = 0;
    }
    return best;
}

// Random connected undirected graph with directed uniform costs in [0.05, 1).
inline TestGraph random_connected_graph(africa3::Rng& rng, std::size_t n, double p) {
    TestGraph g;
    g.n = n;
    while (true) {
        g.adj.assign(n, {});
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (rng.uniform() < p) edges.push_back({i, j});
        for (auto [i, j] : edges) {
            g.adj[i].push_back(j);
            g.adj[j].push_back(i);
        }
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{0};
        seen[0] = 1;
        std::size_t count = 1;
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : g.adj[u])
                if (!seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
        }
        if (count == n) break;
    }
    g.delta.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (auto j : g.adj[i]) g.delta[i * n + j] = 0.05 + rng.uniform() * 0.95;
    return g;
}

// Node ids for index-addressed fixtures: "n00", "n01", ... (sorted order
// matches index order, so the engine's id tie-breaking equals index order).
inline std::vector<std::string> fixture_ids(std::size_t n) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), "n%02zu", i);
        ids.emplace_back(buf);
    }
    return ids;
}

inline africa3::AcoEngine make_engine(const TestGraph& g, const africa3::ClusterRoutingSpec& spec,
                                      const africa3::AcoParams& params) {
    return africa3::AcoEngine(fixture_ids(g.n), g.adj, g.delta, spec, params);
}

}  // namespace testutil
