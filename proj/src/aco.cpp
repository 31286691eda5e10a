#include "africa3/aco.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "africa3/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace africa3 {

namespace {
constexpr double kEps = 1e-9;
constexpr double kInf = std::numeric_limits<double>::infinity();
}

void AcoParams::validate() const {
    if (threshold < 0.0 || threshold > 1.0) throw ValidationError("aco: threshold out of [0,1]");
    if (ants < 1) throw ValidationError("aco: ants must be positive");
    if (iterations < 1) throw ValidationError("aco: iterations must be positive");
    if (initial_pheromone <= 0.0) throw ValidationError("aco: initial pheromone must be positive");
    if (rho <= 0.0 || rho >= 1.0) throw ValidationError("aco: rho out of (0,1)");
    if (boost_factor >= stench_factor)
        throw ValidationError("aco: boost factor must be below stench factor");
    if (threads < 1) throw ValidationError("aco: threads must be positive");
    weights.validate();
}

double evaporation_rate(const std::string& s, const std::string& d,
                        const ClusterRoutingSpec& spec, double rho, double boost_factor,
                        double stench_factor) {
    (void)s;  // Eq. (8) keys on the destination only
    if (spec.gateways.count(d)) return rho * boost_factor;
    if (spec.ldts.count(d)) return rho * stench_factor;
    return rho;
}

double deposit_update(double phi, double rho_sd, double delta) {
    return (1.0 - rho_sd) * phi + rho_sd / std::max(delta, kEps);
}

AcoEngine::AcoEngine(const AdjacencyGraph& graph, const std::vector<std::string>& node_set,
                     const ClusterRoutingSpec& spec, const AcoParams& params,
                     const NormalizedFeatures& nf)
    : params_(params) {
    params_.validate();
    ids_ = node_set;
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
    const std::size_t n = ids_.size();
    if (n == 0) throw ValidationError("aco: empty node set");
    for (std::size_t i = 0; i < n; ++i) index_[ids_[i]] = i;

    adj_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& nb : graph.neighbors(ids_[i])) {
            auto it = index_.find(nb);
            if (it != index_.end()) adj_[i].push_back(it->second);
        }
        std::sort(adj_[i].begin(), adj_[i].end());
    }

    delta_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j)
                delta_[i * n + j] =
                    std::max(weighted_distance(ids_[i], ids_[j], params_.weights, nf), 0.0);

    rho_into_.assign(n, params_.rho);
    gateway_mask_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        rho_into_[j] = evaporation_rate("", ids_[j], spec, params_.rho, params_.boost_factor,
                                        params_.stench_factor);
        gateway_mask_[j] = spec.gateways.count(ids_[j]) ? 1 : 0;
    }

    phero_ = PheromoneMatrix(n, params_.initial_pheromone);
}

AcoEngine::AcoEngine(std::vector<std::string> ids, std::vector<std::vector<std::size_t>> adjacency,
                     std::vector<double> delta, const ClusterRoutingSpec& spec,
                     const AcoParams& params)
    : ids_(std::move(ids)), adj_(std::move(adjacency)), delta_(std::move(delta)), params_(params) {
    params_.validate();
    const std::size_t n = ids_.size();
    if (n == 0) throw ValidationError("aco: empty node set");
    if (!std::is_sorted(ids_.begin(), ids_.end()) ||
        std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
        throw ValidationError("aco: ids must be sorted and unique");
    if (adj_.size() != n || delta_.size() != n * n)
        throw ValidationError("aco: adjacency/delta size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        index_[ids_[i]] = i;
        std::sort(adj_[i].begin(), adj_[i].end());
    }
    rho_into_.assign(n, params_.rho);
    gateway_mask_.assign(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        rho_into_[j] = evaporation_rate("", ids_[j], spec, params_.rho, params_.boost_factor,
                                        params_.stench_factor);
        gateway_mask_[j] = spec.gateways.count(ids_[j]) ? 1 : 0;
    }
    phero_ = PheromoneMatrix(n, params_.initial_pheromone);
}

double AcoEngine::delta(const std::string& s, const std::string& d) const {
    auto si = index_.find(s), di = index_.find(d);
    if (si == index_.end() || di == index_.end())
        throw ValidationError("aco: id not in active node set");
    return delta_at(si->second, di->second);
}

std::size_t AcoEngine::next_node_greedy(std::size_t s,
                                        const std::vector<std::size_t>& candidates) const {
    if (candidates.empty()) throw RoutingError("aco: no candidates");
    std::size_t best = candidates[0];
    double bv = -kInf;
    for (auto d : candidates) {
        double v = phero_.at(s, d) / std::max(delta_at(s, d), kEps);
        if (v > bv) {  // candidates are index-sorted, so ties keep the lowest id
            bv = v;
            best = d;
        }
    }
    return best;
}

std::size_t AcoEngine::next_node_probabilistic(std::size_t s,
                                               const std::vector<std::size_t>& candidates,
                                               Rng& rng) const {
    if (candidates.empty()) throw RoutingError("aco: no candidates");
    double total = 0.0;
    for (auto d : candidates) total += phero_.at(s, d) / std::max(delta_at(s, d), kEps);
    double r = rng.uniform() * total, acc = 0.0;
    for (auto d : candidates) {
        acc += phero_.at(s, d) / std::max(delta_at(s, d), kEps);
        if (acc >= r) return d;
    }
    return candidates.back();
}

AcoEngine::Walk AcoEngine::walk(std::size_t start, const std::vector<char>& target_mask,
                                bool traverse, Rng& rng, const PheromoneMatrix& phero) const {
    const std::size_t n = ids_.size();
    Walk w;
    w.path.push_back(start);
    if (!traverse && target_mask[start]) {
        w.complete = true;  // source already a gateway: single-node path, zero cost
        return w;
    }
    std::vector<char> visited(n, 0);
    visited[start] = 1;
    std::size_t cur = start;
    std::vector<std::size_t> cands;
    while (true) {
        cands.clear();
        for (auto v : adj_[cur])
            if (!visited[v]) cands.push_back(v);
        if (cands.empty()) return w;  // dead end, ant abandoned

        std::size_t next;
        if (rng.uniform() <= params_.threshold) {
            std::size_t best = cands[0];
            double bv = -kInf;
            for (auto d : cands) {
                double v = phero.at(cur, d) / std::max(delta_at(cur, d), kEps);
                if (v > bv) {
                    bv = v;
                    best = d;
                }
            }
            next = best;
        } else {
            double total = 0.0;
            for (auto d : cands) total += phero.at(cur, d) / std::max(delta_at(cur, d), kEps);
            double r = rng.uniform() * total, acc = 0.0;
            next = cands.back();
            for (auto d : cands) {
                acc += phero.at(cur, d) / std::max(delta_at(cur, d), kEps);
                if (acc >= r) {
                    next = d;
                    break;
                }
            }
        }
        w.cost += delta_at(cur, next);
        w.path.push_back(next);
        visited[next] = 1;
        cur = next;
        if (traverse) {
            if (w.path.size() == n) {
                w.complete = true;
                return w;
            }
        } else if (target_mask[cur]) {
            w.complete = true;
            return w;
        }
    }
}

void AcoEngine::deposit(const Walk& w) {
    const double rc = std::max(w.cost, kEps);
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
        const std::size_t s = w.path[i], d = w.path[i + 1];
        phero_.set(s, d, (1.0 - rho_into_[d]) * phero_.at(s, d) + rho_into_[d] / rc);
    }
}

namespace {

struct BestTracker {
    std::vector<std::size_t> path;
    double cost = kInf;
    int iteration = -1;
    bool has = false;

    void offer(const std::vector<std::size_t>& p, double c, int it) {
        if (!has || c < cost - 1e-15) {
            has = true;
            path = p;
            cost = c;
            iteration = it;
        }
    }
};

}  // namespace

RouteResult AcoEngine::run_to_gateway(const std::string& source) {
    const std::size_t n = ids_.size();
    auto sit = index_.find(source);
    if (sit == index_.end()) throw ValidationError("find_route: source not in node set");
    const std::size_t src = sit->second;

    const std::vector<char>& target_mask = gateway_mask_;
    if (std::none_of(target_mask.begin(), target_mask.end(), [](char c) { return c != 0; }))
        throw RoutingError("find_route: no gateways in node set");

    // reachability pre-check
    {
        std::vector<char> seen(n, 0);
        std::vector<std::size_t> stack{src};
        seen[src] = 1;
        bool ok = target_mask[src];
        while (!stack.empty() && !ok) {
            auto u = stack.back();
            stack.pop_back();
            for (auto v : adj_[u]) {
                if (!seen[v]) {
                    seen[v] = 1;
                    if (target_mask[v]) ok = true;
                    stack.push_back(v);
                }
            }
        }
        if (!ok) throw RoutingError("find_route: no gateway reachable from " + source);
    }

    RouteResult res;
    res.mode = RouteMode::ToGateway;
    res.parallel = params_.threads > 1;
    BestTracker best;

    if (target_mask[src]) {
        res.path = {source};
        res.total_cost = 0.0;
        res.iterations_run = 0;
        res.best_iteration = 0;
        return res;
    }

    const bool parallel = params_.threads > 1;
    std::vector<Walk> walks(params_.ants);
    for (int it = 0; it < params_.iterations; ++it) {
        if (parallel) {
            const PheromoneMatrix snapshot = phero_;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(params_.threads)
#endif
            for (int a = 0; a < params_.ants; ++a) {
                Rng rng(derive_seed(params_.seed, static_cast<std::uint64_t>(it),
                                    static_cast<std::uint64_t>(a)));
                walks[a] = walk(src, target_mask, false, rng, snapshot);
            }
            for (int a = 0; a < params_.ants; ++a) {
                if (!walks[a].complete) continue;
                best.offer(walks[a].path, walks[a].cost, it);
                deposit(walks[a]);
            }
        } else {
            for (int a = 0; a < params_.ants; ++a) {
                Rng rng(derive_seed(params_.seed, static_cast<std::uint64_t>(it),
                                    static_cast<std::uint64_t>(a)));
                Walk w = walk(src, target_mask, false, rng, phero_);
                if (!w.complete) continue;
                best.offer(w.path, w.cost, it);
                deposit(w);
            }
        }
    }
    res.iterations_run = params_.iterations;
    if (!best.has) throw RoutingError("find_route: no gateway-terminating walk found");
    res.best_iteration = best.iteration;
    res.total_cost = best.cost;
    for (auto i : best.path) res.path.push_back(ids_[i]);
    for (std::size_t i = 0; i + 1 < best.path.size(); ++i)
        res.hop_costs.push_back(delta_at(best.path[i], best.path[i + 1]));
    return res;
}

RouteResult AcoEngine::run_traverse_all() {
    const std::size_t n = ids_.size();
    RouteResult res;
    res.mode = RouteMode::TraverseAll;
    res.parallel = params_.threads > 1;

    if (n == 1) {
        res.path = {ids_[0]};
        res.total_cost = 0.0;
        res.best_iteration = 0;
        return res;
    }

    BestTracker best;
    // best-effort fallback when no complete traversal is found
    std::vector<std::size_t> partial_path;
    double partial_cost = kInf;

    std::vector<char> no_targets(n, 0);
    const bool parallel = params_.threads > 1;
    std::vector<Walk> walks(params_.ants);
    std::vector<std::size_t> starts(params_.ants);

    auto reverse_cost = [&](const std::vector<std::size_t>& p) {
        double c = 0.0;
        for (std::size_t i = p.size(); i-- > 1;) c += delta_at(p[i], p[i - 1]);
        return c;
    };

    auto consider = [&](const Walk& w, int it) {
        if (w.complete) {
            best.offer(w.path, w.cost, it);
            // a simple path read backwards is also a valid traversal; with
            // destination-weighted costs the orientations differ
            std::vector<std::size_t> rev(w.path.rbegin(), w.path.rend());
            best.offer(rev, reverse_cost(w.path), it);
        } else if (!best.has) {
            if (w.path.size() > partial_path.size() ||
                (w.path.size() == partial_path.size() && w.cost < partial_cost)) {
                partial_path = w.path;
                partial_cost = w.cost;
            }
        }
    };

    for (int it = 0; it < params_.iterations; ++it) {
        if (parallel) {
            const PheromoneMatrix snapshot = phero_;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(params_.threads)
#endif
            for (int a = 0; a < params_.ants; ++a) {
                Rng rng(derive_seed(params_.seed, static_cast<std::uint64_t>(it),
                                    static_cast<std::uint64_t>(a)));
                std::size_t start = rng.below(n);
                walks[a] = walk(start, no_targets, true, rng, snapshot);
            }
            for (int a = 0; a < params_.ants; ++a) {
                consider(walks[a], it);
                if (walks[a].complete) deposit(walks[a]);
            }
        } else {
            for (int a = 0; a < params_.ants; ++a) {
                Rng rng(derive_seed(params_.seed, static_cast<std::uint64_t>(it),
                                    static_cast<std::uint64_t>(a)));
                std::size_t start = rng.below(n);
                Walk w = walk(start, no_targets, true, rng, phero_);
                consider(w, it);
                if (w.complete) deposit(w);
            }
        }
    }

    res.iterations_run = params_.iterations;
    const auto& chosen = best.has ? best.path : partial_path;
    res.complete = best.has;
    res.best_iteration = best.iteration;
    if (chosen.empty()) throw RoutingError("traverse_all: no walk completed a single hop");
    for (auto i : chosen) res.path.push_back(ids_[i]);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < chosen.size(); ++i) {
        double c = delta_at(chosen[i], chosen[i + 1]);
        res.hop_costs.push_back(c);
        total += c;
    }
    res.total_cost = total;
    return res;
}

RouteResult find_route(const AdjacencyGraph& graph, const std::string& source,
                       const ClusterRoutingSpec& spec, const AcoParams& params,
                       const NormalizedFeatures& nf) {
    std::vector<std::string> nodes(graph.nodes().begin(), graph.nodes().end());
    AcoEngine engine(graph, nodes, spec, params, nf);
    return engine.run_to_gateway(source);
}

RouteResult traverse_all(const AdjacencyGraph& graph, const std::vector<std::string>& node_set,
                         const ClusterRoutingSpec& spec, const AcoParams& params,
                         const NormalizedFeatures& nf) {
    for (const auto& id : node_set)
        if (!graph.nodes().count(id))
            throw ValidationError("traverse_all: node '" + id + "' not in graph");
    AcoEngine engine(graph, node_set, spec, params, nf);
    return engine.run_traverse_all();
}

RouteResult run_inter_cluster(const AdjacencyGraph& pcg_graph, const ClusterRoutingSpec& spec,
                              AcoParams params, const NormalizedFeatures& nf, int ants,
                              int iterations) {
    if (pcg_graph.nodes().empty()) throw ValidationError("run_inter_cluster: empty gateway set");
    params.ants = ants;
    params.iterations = iterations;
    std::vector<std::string> nodes(pcg_graph.nodes().begin(), pcg_graph.nodes().end());
    return traverse_all(pcg_graph, nodes, spec, params, nf);
}

}  // namespace africa3
