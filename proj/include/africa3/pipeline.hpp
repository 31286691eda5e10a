#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "africa3/aco.hpp"
#include "africa3/clustering.hpp"
#include "africa3/gateways.hpp"
#include "africa3/graph.hpp"

namespace africa3 {

enum class ClusterMethod { Au, KMeans, KMedoids, Hac, Optics, Unclustered };

struct RunConfig {
    std::string countries_path = "data/countries.csv";
    std::string cables_path = "data/cables.csv";
    std::string borders_path = "data/borders.csv";
    std::string maritime_path = "data/maritime.csv";
    std::string out_dir = "out/run";

    ClusterMethod method = ClusterMethod::Au;
    bool multi_feature = false;          // geo-only vs weighted multi-feature metric
    ClusterMetric metric = ClusterMetric::Haversine;
    int k = 5;
    double hac_cut = 35.0;
    int optics_min_pts = 3;
    double optics_xi = 0.05;

    AdjacencyMode adjacency = AdjacencyMode::Borders;
    NormScope norm_scope = NormScope::Cluster;
    int dc_sign = +1;
    FeatureWeights weights{};

    GatewayConfig gateway_config{};
    // Per-cluster overrides keyed by cluster name ("Northern", "c0", ...).
    std::map<std::string, std::set<std::string>> gateway_overrides;
    std::map<std::string, std::set<std::string>> ldt_overrides;

    AcoParams aco{};
    int inter_ants = 100;
    int inter_iterations = 50;

    std::uint64_t seed = 42;
    int threads = 1;

    bool run_intra = true;
    bool run_traversals = true;
    bool run_inter = true;
    bool run_unclustered = false;

    static RunConfig from_file(const std::string& path);
    void apply_kv(const std::string& key, const std::string& value);
};

struct ClusterPlan {
    std::string name;            // region name for AU, "c<label>" otherwise
    int label = 0;
    std::vector<std::string> members;
    ClusterRoutingSpec spec;
    std::map<std::string, RouteResult> routes;  // per-source to-gateway routes
    std::optional<RouteResult> traversal;
};

struct CostSummary {
    std::map<std::string, std::pair<int, double>> per_cluster;  // name -> (count, traversal TRC)
    double intra_total = 0.0;
    double inter_total = 0.0;
    double continental_total = 0.0;  // intra + inter
    std::optional<double> unclustered_total;
};

struct ContinentalPlan {
    CountryDataset dataset;
    ClusterAssignment assignment;
    std::set<std::string> pcgs;
    std::vector<ClusterPlan> clusters;
    std::optional<RouteResult> inter_route;
    std::vector<std::string> inter_nodes;
    std::optional<RouteResult> unclustered_route;
    CostSummary costs;
    RunConfig config;
};

ContinentalPlan run_plan(const RunConfig& config);

CostSummary report_costs(const ContinentalPlan& plan);

void export_routes_csv(const ContinentalPlan& plan, std::ostream& out);
void export_costs_csv(const CostSummary& costs, std::ostream& out);
void export_geojson(const ContinentalPlan& plan, std::ostream& out);
void export_dot(const ContinentalPlan& plan, std::ostream& out);
void export_manifest(const ContinentalPlan& plan, std::ostream& out);

// Writes manifest + CSV/GeoJSON/DOT exports under config.out_dir.
void write_outputs(const ContinentalPlan& plan);

const char* to_string(ClusterMethod m);

}  // namespace africa3
