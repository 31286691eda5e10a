#include "africa3/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "africa3/errors.hpp"

namespace africa3 {

using nlohmann::json;

const char* to_string(ClusterMethod m) {
    switch (m) {
        case ClusterMethod::Au: return "au";
        case ClusterMethod::KMeans: return "kmeans";
        case ClusterMethod::KMedoids: return "kmedoids";
        case ClusterMethod::Hac: return "hac";
        case ClusterMethod::Optics: return "optics";
        case ClusterMethod::Unclustered: return "unclustered";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::set<std::string> parse_id_set(const std::string& v) {
    std::set<std::string> out;
    std::istringstream is(v);
    std::string tok;
    while (std::getline(is, tok, ';')) {
        tok = trim(tok);
        if (!tok.empty()) out.insert(tok);
    }
    return out;
}

std::string fmt_cost(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

}  // namespace

void RunConfig::apply_kv(const std::string& key, const std::string& value) {
    auto bad = [&]() -> ValidationError {
        return ValidationError("config: bad value '" + value + "' for key '" + key + "'");
    };
    if (key == "countries") countries_path = value;
    else if (key == "cables") cables_path = value;
    else if (key == "borders") borders_path = value;
    else if (key == "maritime") maritime_path = value;
    else if (key == "out") out_dir = value;
    else if (key == "method") {
        if (value == "au") method = ClusterMethod::Au;
        else if (value == "kmeans") method = ClusterMethod::KMeans;
        else if (value == "kmedoids") method = ClusterMethod::KMedoids;
        else if (value == "hac") method = ClusterMethod::Hac;
        else if (value == "optics") method = ClusterMethod::Optics;
        else if (value == "unclustered") method = ClusterMethod::Unclustered;
        else throw bad();
    } else if (key == "features") {
        if (value == "geo") multi_feature = false;
        else if (value == "multi") multi_feature = true;
        else throw bad();
    } else if (key == "metric") {
        if (value == "euclidean") metric = ClusterMetric::Euclidean;
        else if (value == "haversine") metric = ClusterMetric::Haversine;
        else if (value == "weighted") metric = ClusterMetric::Weighted;
        else throw bad();
    } else if (key == "k") k = std::stoi(value);
    else if (key == "hac_cut") hac_cut = std::stod(value);
    else if (key == "min_pts") optics_min_pts = std::stoi(value);
    else if (key == "xi") optics_xi = std::stod(value);
    else if (key == "adjacency") {
        if (value == "borders") adjacency = AdjacencyMode::Borders;
        else if (value == "complete") adjacency = AdjacencyMode::Complete;
        else throw bad();
    } else if (key == "norm_scope") {
        if (value == "cluster") norm_scope = NormScope::Cluster;
        else if (value == "global") norm_scope = NormScope::Global;
        else throw bad();
    } else if (key == "dc_sign") {
        dc_sign = std::stoi(value);
        if (dc_sign != 1 && dc_sign != -1) throw bad();
    } else if (key == "alpha") weights.alpha = std::stod(value);
    else if (key == "beta") weights.beta = std::stod(value);
    else if (key == "gamma") weights.gamma = std::stod(value);
    else if (key == "threshold") aco.threshold = std::stod(value);
    else if (key == "ants") aco.ants = std::stoi(value);
    else if (key == "iterations") aco.iterations = std::stoi(value);
    else if (key == "phi0") aco.initial_pheromone = std::stod(value);
    else if (key == "rho") aco.rho = std::stod(value);
    else if (key == "boost_factor") aco.boost_factor = std::stod(value);
    else if (key == "stench_factor") aco.stench_factor = std::stod(value);
    else if (key == "inter_ants") inter_ants = std::stoi(value);
    else if (key == "inter_iterations") inter_iterations = std::stoi(value);
    else if (key == "seed") seed = std::stoull(value);
    else if (key == "threads") threads = std::stoi(value);
    else if (key == "pcg_threshold") gateway_config.pcg_threshold = std::stoi(value);
    else if (key == "desert") gateway_config.desert_set = parse_id_set(value);
    else if (key == "neutral") gateway_config.neutral_set = parse_id_set(value);
    else if (key == "run_intra") run_intra = value == "1" || value == "true";
    else if (key == "run_traversals") run_traversals = value == "1" || value == "true";
    else if (key == "run_inter") run_inter = value == "1" || value == "true";
    else if (key == "run_unclustered") run_unclustered = value == "1" || value == "true";
    else if (key.rfind("gateways.", 0) == 0) gateway_overrides[key.substr(9)] = parse_id_set(value);
    else if (key.rfind("ldts.", 0) == 0) ldt_overrides[key.substr(5)] = parse_id_set(value);
    else throw ValidationError("config: unknown key '" + key + "'");
}

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config " + path);
    RunConfig cfg;
    std::string line;
    int row = 0;
    while (std::getline(in, line)) {
        ++row;
        auto t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw ValidationError("config row " + std::to_string(row) + ": expected key = value");
        cfg.apply_kv(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return cfg;
}

namespace {

ClusterAssignment cluster_stage(const RunConfig& cfg, const CountryDataset& ds) {
    switch (cfg.method) {
        case ClusterMethod::Au:
            return au_reference(ds);
        case ClusterMethod::KMeans:
            return kmeans(ds, geo_features(ds), cfg.k, derive_seed(cfg.seed, tag_of("cluster")))
                .assignment;
        case ClusterMethod::KMedoids: {
            auto metric = cfg.multi_feature ? ClusterMetric::Weighted : cfg.metric;
            return kmedoids(ds, cfg.k, metric, cfg.weights).assignment;
        }
        case ClusterMethod::Hac:
            return hac_complete(ds, cfg.hac_cut,
                                cfg.multi_feature ? ClusterMetric::Weighted : ClusterMetric::Euclidean,
                                cfg.weights)
                .assignment;
        case ClusterMethod::Optics:
            return optics_xi(ds, cfg.optics_min_pts, cfg.optics_xi,
                             cfg.multi_feature ? ClusterMetric::Weighted : cfg.metric, cfg.weights)
                .assignment;
        case ClusterMethod::Unclustered: {
            ClusterAssignment a;
            a.method = "unclustered";
            a.k = 1;
            for (const auto& c : ds.countries()) a.labels[c.id] = 0;
            return a;
        }
    }
    throw ValidationError("unknown clustering method");
}

std::string cluster_name(const RunConfig& cfg, int label) {
    if (cfg.method == ClusterMethod::Au) return to_string(static_cast<SubRegion>(label));
    if (cfg.method == ClusterMethod::Unclustered) return "continent";
    return "c" + std::to_string(label);
}

AcoParams routing_params(const RunConfig& cfg, std::uint64_t stage_seed) {
    AcoParams p = cfg.aco;
    p.weights = cfg.weights;
    p.seed = stage_seed;
    p.threads = cfg.threads;
    return p;
}

}  // namespace

ContinentalPlan run_plan(const RunConfig& config) {
    ContinentalPlan plan;
    plan.config = config;
    plan.dataset = load_countries_file(config.countries_path);
    if (plan.dataset.empty()) throw ValidationError("dataset: no countries loaded");
    auto cables = load_cables_file(config.cables_path);
    auto landings = landings_per_country(cables);
    plan.dataset.apply_landings(landings);
    plan.pcgs = select_pcgs(landings, config.gateway_config.pcg_threshold);

    auto borders = load_edge_list_file(config.borders_path);
    auto maritime = load_edge_list_file(config.maritime_path);
    AdjacencyGraph graph = build_adjacency(plan.dataset, config.adjacency, borders, maritime);

    plan.assignment = cluster_stage(config, plan.dataset);

    // group members by label (noise from density clustering stays unrouted)
    std::map<int, std::vector<std::string>> by_label;
    for (const auto& [id, l] : plan.assignment.labels)
        if (l != kNoiseLabel) by_label[l].push_back(id);

    for (const auto& [label, members] : by_label) {
        ClusterPlan cp;
        cp.label = label;
        cp.name = cluster_name(config, label);
        cp.members = members;
        std::sort(cp.members.begin(), cp.members.end());

        auto gw_it = config.gateway_overrides.find(cp.name);
        cp.spec.cluster_label = label;
        cp.spec.gateways = gw_it != config.gateway_overrides.end()
                               ? gw_it->second
                               : cluster_gateways(cp.members, plan.pcgs, plan.dataset);
        auto ldt_it = config.ldt_overrides.find(cp.name);
        cp.spec.ldts = ldt_it != config.ldt_overrides.end()
                           ? ldt_it->second
                           : cluster_ldts(cp.members, cp.spec.gateways, config.gateway_config);

        if (config.run_intra && config.method != ClusterMethod::Unclustered) {
            AdjacencyGraph sub =
                graph.induced(cp.members, config.adjacency == AdjacencyMode::Complete);
            NormalizedFeatures nf(plan.dataset, cp.members, config.norm_scope, config.dc_sign);
            for (const auto& m : cp.members) {
                if (cp.spec.gateways.count(m)) continue;
                auto params = routing_params(
                    config, derive_seed(config.seed, tag_of("intra"), tag_of(m)));
                cp.routes.emplace(m, find_route(sub, m, cp.spec, params, nf));
            }
        }
        if (config.run_traversals && config.method != ClusterMethod::Unclustered &&
            cp.members.size() > 1) {
            // published cluster traversals hop between non-adjacent countries,
            // so the traversal stage always works over the complete subgraph
            AdjacencyGraph sub = graph.induced(cp.members, true);
            NormalizedFeatures nf(plan.dataset, cp.members, config.norm_scope, config.dc_sign);
            auto params = routing_params(
                config, derive_seed(config.seed, tag_of("traverse"), tag_of(cp.name)));
            cp.traversal = traverse_all(sub, cp.members, cp.spec, params, nf);
        }
        plan.clusters.push_back(std::move(cp));
    }

    if (config.run_inter && config.method != ClusterMethod::Unclustered) {
        std::set<std::string> nodes = plan.pcgs;
        for (const auto& cp : plan.clusters)
            for (const auto& g : cp.spec.gateways) nodes.insert(g);
        plan.inter_nodes.assign(nodes.begin(), nodes.end());
        if (!plan.inter_nodes.empty()) {
            ClusterRoutingSpec spec;
            spec.cluster_label = -1;
            for (const auto& id : plan.inter_nodes)
                if (!config.gateway_config.neutral_set.count(id)) spec.gateways.insert(id);
            for (const auto& id : plan.inter_nodes)
                if (config.gateway_config.desert_set.count(id) && !spec.gateways.count(id) &&
                    !config.gateway_config.neutral_set.count(id))
                    spec.ldts.insert(id);
            AdjacencyGraph pcg_graph = graph.induced(plan.inter_nodes, true);
            NormalizedFeatures nf(plan.dataset, plan.inter_nodes, config.norm_scope,
                                  config.dc_sign);
            auto params = routing_params(config, derive_seed(config.seed, tag_of("inter")));
            plan.inter_route = run_inter_cluster(pcg_graph, spec, params, nf, config.inter_ants,
                                                 config.inter_iterations);
        }
    }

    if (config.run_unclustered || config.method == ClusterMethod::Unclustered) {
        std::vector<std::string> all;
        for (const auto& c : plan.dataset.countries()) all.push_back(c.id);
        std::sort(all.begin(), all.end());
        ClusterRoutingSpec spec;
        spec.cluster_label = -2;
        for (const auto& id : plan.pcgs)
            if (!config.gateway_config.neutral_set.count(id)) spec.gateways.insert(id);
        for (const auto& id : config.gateway_config.desert_set)
            if (!spec.gateways.count(id) && !config.gateway_config.neutral_set.count(id))
                spec.ldts.insert(id);
        AdjacencyGraph complete = graph.induced(all, true);
        NormalizedFeatures nf(plan.dataset, all, NormScope::Global, config.dc_sign);
        auto params = routing_params(config, derive_seed(config.seed, tag_of("unclustered")));
        plan.unclustered_route = traverse_all(complete, all, spec, params, nf);
    }

    plan.costs = report_costs(plan);
    return plan;
}

CostSummary report_costs(const ContinentalPlan& plan) {
    CostSummary cs;
    for (const auto& cp : plan.clusters) {
        double trc = cp.traversal ? cp.traversal->total_cost : 0.0;
        cs.per_cluster[cp.name] = {static_cast<int>(cp.members.size()), trc};
        cs.intra_total += trc;
    }
    cs.inter_total = plan.inter_route ? plan.inter_route->total_cost : 0.0;
    cs.continental_total = cs.intra_total + cs.inter_total;
    if (plan.unclustered_route) cs.unclustered_total = plan.unclustered_route->total_cost;
    return cs;
}

void export_routes_csv(const ContinentalPlan& plan, std::ostream& out) {
    out << "source,destination_set,path,cost\n";
    for (const auto& cp : plan.clusters) {
        std::vector<std::string> gws(cp.spec.gateways.begin(), cp.spec.gateways.end());
        for (const auto& [src, route] : cp.routes)
            out << src << ',' << join(gws, ";") << ',' << join(route.path, ";") << ','
                << fmt_cost(route.total_cost) << '\n';
        if (cp.traversal)
            out << cp.traversal->path.front() << ",traverse-all:" << cp.name << ','
                << join(cp.traversal->path, ";") << ',' << fmt_cost(cp.traversal->total_cost)
                << '\n';
    }
    if (plan.inter_route)
        out << plan.inter_route->path.front() << ",traverse-all:inter,"
            << join(plan.inter_route->path, ";") << ',' << fmt_cost(plan.inter_route->total_cost)
            << '\n';
    if (plan.unclustered_route)
        out << plan.unclustered_route->path.front() << ",traverse-all:continent,"
            << join(plan.unclustered_route->path, ";") << ','
            << fmt_cost(plan.unclustered_route->total_cost) << '\n';
}

void export_costs_csv(const CostSummary& costs, std::ostream& out) {
    out << "cluster,country_count,route_cost\n";
    for (const auto& [name, cc] : costs.per_cluster)
        out << name << ',' << cc.first << ',' << fmt_cost(cc.second) << '\n';
    out << "intra_total,," << fmt_cost(costs.intra_total) << '\n';
    out << "inter_total,," << fmt_cost(costs.inter_total) << '\n';
    out << "continental_total,," << fmt_cost(costs.continental_total) << '\n';
    if (costs.unclustered_total)
        out << "unclustered_total,," << fmt_cost(*costs.unclustered_total) << '\n';
}

namespace {

json route_feature(const CountryDataset& ds, const std::string& a, const std::string& b,
                   const std::string& kind) {
    const auto& ca = ds.at(a).centroid;
    const auto& cb = ds.at(b).centroid;
    json f;
    f["type"] = "Feature";
    f["geometry"]["type"] = "LineString";
    // RFC 7946 coordinate order: lon, lat
    f["geometry"]["coordinates"] = json::array({json::array({ca.lon, ca.lat}),
                                                json::array({cb.lon, cb.lat})});
    f["properties"]["kind"] = kind;
    f["properties"]["from"] = a;
    f["properties"]["to"] = b;
    return f;
}

}  // namespace

void export_geojson(const ContinentalPlan& plan, std::ostream& out) {
    json fc;
    fc["type"] = "FeatureCollection";
    fc["features"] = json::array();
    for (const auto& c : plan.dataset.countries()) {
        json f;
        f["type"] = "Feature";
        f["geometry"]["type"] = "Point";
        f["geometry"]["coordinates"] = json::array({c.centroid.lon, c.centroid.lat});
        f["properties"]["id"] = c.id;
        f["properties"]["name"] = c.name;
        auto it = plan.assignment.labels.find(c.id);
        f["properties"]["cluster"] = it == plan.assignment.labels.end() ? kNoiseLabel : it->second;
        fc["features"].push_back(std::move(f));
    }
    for (const auto& cp : plan.clusters) {
        for (const auto& [src, route] : cp.routes)
            for (std::size_t i = 0; i + 1 < route.path.size(); ++i)
                fc["features"].push_back(
                    route_feature(plan.dataset, route.path[i], route.path[i + 1], "intra"));
        if (cp.traversal)
            for (std::size_t i = 0; i + 1 < cp.traversal->path.size(); ++i)
                fc["features"].push_back(route_feature(plan.dataset, cp.traversal->path[i],
                                                       cp.traversal->path[i + 1], "traversal"));
    }
    if (plan.inter_route)
        for (std::size_t i = 0; i + 1 < plan.inter_route->path.size(); ++i)
            fc["features"].push_back(route_feature(plan.dataset, plan.inter_route->path[i],
                                                   plan.inter_route->path[i + 1], "inter"));
    if (plan.unclustered_route)
        for (std::size_t i = 0; i + 1 < plan.unclustered_route->path.size(); ++i)
            fc["features"].push_back(route_feature(plan.dataset, plan.unclustered_route->path[i],
                                                   plan.unclustered_route->path[i + 1],
                                                   "unclustered"));
    out << fc.dump(2) << '\n';
}

void export_dot(const ContinentalPlan& plan, std::ostream& out) {
    out << "digraph africa3 {\n";
    for (const auto& cp : plan.clusters) {
        for (const auto& [src, route] : cp.routes)
            for (std::size_t i = 0; i + 1 < route.path.size(); ++i)
                out << "  \"" << route.path[i] << "\" -> \"" << route.path[i + 1]
                    << "\" [label=\"intra\"];\n";
        if (cp.traversal)
            for (std::size_t i = 0; i + 1 < cp.traversal->path.size(); ++i)
                out << "  \"" << cp.traversal->path[i] << "\" -> \"" << cp.traversal->path[i + 1]
                    << "\" [label=\"traverse\"];\n";
    }
    if (plan.inter_route)
        for (std::size_t i = 0; i + 1 < plan.inter_route->path.size(); ++i)
            out << "  \"" << plan.inter_route->path[i] << "\" -> \"" << plan.inter_route->path[i + 1]
                << "\" [label=\"inter\"];\n";
    if (plan.unclustered_route)
        for (std::size_t i = 0; i + 1 < plan.unclustered_route->path.size(); ++i)
            out << "  \"" << plan.unclustered_route->path[i] << "\" -> \""
                << plan.unclustered_route->path[i + 1] << "\" [label=\"unclustered\"];\n";
    out << "}\n";
}

namespace {

json route_json(const RouteResult& r) {
    json j;
    j["path"] = r.path;
    j["cost"] = r.total_cost;
    j["mode"] = r.mode == RouteMode::ToGateway ? "to_gateway" : "traverse_all";
    j["complete"] = r.complete;
    j["best_iteration"] = r.best_iteration;
    j["iterations_run"] = r.iterations_run;
    j["parallel"] = r.parallel;
    return j;
}

}  // namespace

void export_manifest(const ContinentalPlan& plan, std::ostream& out) {
    const auto& cfg = plan.config;
    json m;
    m["config"]["method"] = to_string(cfg.method);
    m["config"]["features"] = cfg.multi_feature ? "multi" : "geo";
    m["config"]["k"] = cfg.k;
    m["config"]["adjacency"] = cfg.adjacency == AdjacencyMode::Borders ? "borders" : "complete";
    m["config"]["norm_scope"] = cfg.norm_scope == NormScope::Cluster ? "cluster" : "global";
    m["config"]["dc_sign"] = cfg.dc_sign;
    m["config"]["weights"] = {cfg.weights.alpha, cfg.weights.beta, cfg.weights.gamma};
    m["config"]["seed"] = cfg.seed;
    m["config"]["threads"] = cfg.threads;
    m["config"]["aco"] = {{"threshold", cfg.aco.threshold},
                          {"ants", cfg.aco.ants},
                          {"iterations", cfg.aco.iterations},
                          {"phi0", cfg.aco.initial_pheromone},
                          {"rho", cfg.aco.rho},
                          {"boost_factor", cfg.aco.boost_factor},
                          {"stench_factor", cfg.aco.stench_factor}};
    m["config"]["inter"] = {{"ants", cfg.inter_ants}, {"iterations", cfg.inter_iterations}};
    m["config"]["deposit_delta"] = "full_route_cost";
    m["pcg_threshold"] = cfg.gateway_config.pcg_threshold;
    m["pcgs"] = plan.pcgs;
    m["clustering"] = {{"method", plan.assignment.method},
                       {"params", plan.assignment.params},
                       {"k", plan.assignment.k}};

    for (const auto& cp : plan.clusters) {
        json jc;
        jc["label"] = cp.label;
        jc["members"] = cp.members;
        jc["gateways"] = cp.spec.gateways;
        jc["ldts"] = cp.spec.ldts;
        {
            NormalizedFeatures nf(plan.dataset, cp.members, cfg.norm_scope, cfg.dc_sign);
            jc["h_bounds"] = {nf.h_bounds().min, nf.h_bounds().max};
        }
        for (const auto& [src, route] : cp.routes) {
            json jr = route_json(route);
            jr["seed"] = derive_seed(cfg.seed, tag_of("intra"), tag_of(src));
            jc["routes"][src] = std::move(jr);
        }
        if (cp.traversal) {
            json jt = route_json(*cp.traversal);
            jt["seed"] = derive_seed(cfg.seed, tag_of("traverse"), tag_of(cp.name));
            jc["traversal"] = std::move(jt);
        }
        m["clusters"][cp.name] = std::move(jc);
    }
    if (plan.inter_route) {
        json ji = route_json(*plan.inter_route);
        ji["seed"] = derive_seed(cfg.seed, tag_of("inter"));
        ji["nodes"] = plan.inter_nodes;
        m["inter"] = std::move(ji);
    }
    if (plan.unclustered_route) {
        json ju = route_json(*plan.unclustered_route);
        ju["seed"] = derive_seed(cfg.seed, tag_of("unclustered"));
        m["unclustered"] = std::move(ju);
    }
    m["costs"] = {{"intra_total", plan.costs.intra_total},
                  {"inter_total", plan.costs.inter_total},
                  {"continental_total", plan.costs.continental_total}};
    if (plan.costs.unclustered_total) m["costs"]["unclustered_total"] = *plan.costs.unclustered_total;
    out << m.dump(2) << '\n';
}

void write_outputs(const ContinentalPlan& plan) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(plan.config.out_dir, ec);
    if (ec) throw IoError("cannot create output dir " + plan.config.out_dir);
    auto write = [&](const std::string& name, auto&& fn) {
        std::ofstream out(plan.config.out_dir + "/" + name);
        if (!out) throw IoError("cannot write " + plan.config.out_dir + "/" + name);
        fn(out);
    };
    write("routes.csv", [&](std::ostream& o) { export_routes_csv(plan, o); });
    write("costs.csv", [&](std::ostream& o) { export_costs_csv(plan.costs, o); });
    write("assignment.csv", [&](std::ostream& o) { export_assignment(plan.assignment, o); });
    write("plan.geojson", [&](std::ostream& o) { export_geojson(plan, o); });
    write("plan.dot", [&](std::ostream& o) { export_dot(plan, o); });
    write("manifest.json", [&](std::ostream& o) { export_manifest(plan, o); });
}

}  // namespace africa3
