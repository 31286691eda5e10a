#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "africa3/gateways.hpp"
#include "africa3/graph.hpp"
#include "africa3/metrics.hpp"
#include "africa3/rng.hpp"

namespace africa3 {

struct AcoParams {
    double threshold = 0.8;          // T: greedy move when f <= T, else probabilistic
    int ants = 1000;                 // ants per iteration
    int iterations = 100;
    double initial_pheromone = 0.2;  // phi_0
    double rho = 0.2;                // base evaporation rate
    FeatureWeights weights{};
    double boost_factor = 0.25;      // applied to rho for edges into G
    double stench_factor = 0.75;     // applied to rho for edges into U
    std::uint64_t seed = 0;
    int threads = 1;                 // 1: online deposits; >1: snapshot + ordered deposits

    void validate() const;
};

enum class RouteMode { ToGateway, TraverseAll };

struct RouteResult {
    std::vector<std::string> path;
    std::vector<double> hop_costs;
    double total_cost = 0.0;  // TRC
    RouteMode mode = RouteMode::ToGateway;
    int iterations_run = 0;
    int best_iteration = -1;
    bool complete = true;     // traverse_all flags best-effort partial results
    bool parallel = false;
};

class PheromoneMatrix {
  public:
    PheromoneMatrix() = default;
    PheromoneMatrix(std::size_t n, double phi0) : n_(n), v_(n * n, phi0) {}
    double at(std::size_t s, std::size_t d) const { return v_[s * n_ + d]; }
    void set(std::size_t s, std::size_t d, double v) { v_[s * n_ + d] = v; }
    std::size_t size() const { return n_; }

  private:
    std::size_t n_ = 0;
    std::vector<double> v_;
};

// Variable evaporation: rho scaled down for encouraged destinations (G),
// scaled by the stench factor for discouraged ones (U), unchanged otherwise.
double evaporation_rate(const std::string& s, const std::string& d,
                        const ClusterRoutingSpec& spec, double rho, double boost_factor = 0.25,
                        double stench_factor = 0.75);

// One pheromone update: (1 - rho_sd) * phi + rho_sd / delta, with delta
// clamped to a small epsilon before dividing.
double deposit_update(double phi, double rho_sd, double delta);

// The engine works over one active node set (a cluster, the gateway set, or
// the whole continent) with per-hop costs fixed up front. Node ids are kept
// in lexicographic order so index ties equal id ties.
class AcoEngine {
  public:
    AcoEngine(const AdjacencyGraph& graph, const std::vector<std::string>& node_set,
              const ClusterRoutingSpec& spec, const AcoParams& params,
              const NormalizedFeatures& nf);

    // Direct cost injection: ids must be sorted and unique, adjacency holds
    // index lists, delta is a dense n*n directed cost matrix.
    AcoEngine(std::vector<std::string> ids, std::vector<std::vector<std::size_t>> adjacency,
              std::vector<double> delta, const ClusterRoutingSpec& spec, const AcoParams& params);

    RouteResult run_to_gateway(const std::string& source);
    RouteResult run_traverse_all();

    const PheromoneMatrix& pheromones() const { return phero_; }
    const std::vector<std::string>& node_ids() const { return ids_; }
    double delta(const std::string& s, const std::string& d) const;

    // Move selection, exposed for direct testing. Candidates are node indices.
    std::size_t next_node_greedy(std::size_t s, const std::vector<std::size_t>& candidates) const;
    std::size_t next_node_probabilistic(std::size_t s, const std::vector<std::size_t>& candidates,
                                        Rng& rng) const;

  private:
    struct Walk {
        std::vector<std::size_t> path;
        double cost = 0.0;
        bool complete = false;
    };

    Walk walk(std::size_t start, const std::vector<char>& target_mask, bool traverse, Rng& rng,
              const PheromoneMatrix& phero) const;
    void deposit(const Walk& w);
    double delta_at(std::size_t s, std::size_t d) const { return delta_[s * ids_.size() + d]; }

    std::vector<std::string> ids_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<std::size_t>> adj_;
    std::vector<double> delta_;
    std::vector<double> rho_into_;   // per destination node, from Eq. (8)
    std::vector<char> gateway_mask_;  // termination targets for to-gateway runs
    PheromoneMatrix phero_;
    AcoParams params_;
};

// Lowest-cost simple path from `source` to any gateway in `spec`, searched by
// the ant colony over the graph restricted to `nf`'s active set.
RouteResult find_route(const AdjacencyGraph& graph, const std::string& source,
                       const ClusterRoutingSpec& spec, const AcoParams& params,
                       const NormalizedFeatures& nf);

// Best found open path visiting every node of `node_set` exactly once.
RouteResult traverse_all(const AdjacencyGraph& graph, const std::vector<std::string>& node_set,
                         const ClusterRoutingSpec& spec, const AcoParams& params,
                         const NormalizedFeatures& nf);

// Gateway-level traversal; the smaller node count takes fewer ants/iterations.
RouteResult run_inter_cluster(const AdjacencyGraph& pcg_graph, const ClusterRoutingSpec& spec,
                              AcoParams params, const NormalizedFeatures& nf, int ants = 100,
                              int iterations = 50);

}  // namespace africa3
