#include "africa3/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <ostream>
#include <set>

#include "africa3/errors.hpp"
#include "africa3/rng.hpp"

namespace africa3 {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<std::vector<std::string>> ClusterAssignment::groups() const {
    std::map<int, std::vector<std::string>> by_label;
    for (const auto& [id, l] : labels)
        if (l != kNoiseLabel) by_label[l].push_back(id);
    std::vector<std::vector<std::string>> out;
    for (auto& [_, g] : by_label) out.push_back(std::move(g));
    return out;
}

std::vector<std::string> ClusterAssignment::members_of(int label) const {
    std::vector<std::string> out;
    for (const auto& [id, l] : labels)
        if (l == label) out.push_back(id);
    return out;
}

std::vector<double> distance_matrix(const CountryDataset& ds, ClusterMetric metric,
                                    const FeatureWeights& w) {
    const std::size_t n = ds.size();
    std::vector<double> d(n * n, 0.0);
    std::vector<std::string> all;
    for (const auto& c : ds.countries()) all.push_back(c.id);
    NormalizedFeatures nf(ds, all, NormScope::Global);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double v = 0.0;
            switch (metric) {
                case ClusterMetric::Euclidean:
                    v = euclidean_deg(ds.at(i).centroid, ds.at(j).centroid);
                    break;
                case ClusterMetric::Haversine:
                    v = haversine(ds.at(i).centroid, ds.at(j).centroid);
                    break;
                case ClusterMetric::Weighted:
                    v = weighted_metric(all[i], all[j], w, nf);
                    break;
            }
            d[i * n + j] = d[j * n + i] = v;
        }
    }
    return d;
}

std::vector<std::vector<double>> geo_features(const CountryDataset& ds) {
    std::vector<std::vector<double>> f;
    f.reserve(ds.size());
    for (const auto& c : ds.countries()) f.push_back({c.centroid.lat, c.centroid.lon});
    return f;
}

// ---------------------------------------------------------------- k-means --

namespace {

double sq_dist(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

std::vector<std::vector<double>> kmeanspp_init(const std::vector<std::vector<double>>& x, int k,
                                               Rng& rng) {
    std::vector<std::vector<double>> centers;
    centers.push_back(x[rng.below(x.size())]);
    std::vector<double> d2(x.size());
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            double best = kInf;
            for (const auto& c : centers) best = std::min(best, sq_dist(x[i], c));
            d2[i] = best;
            total += best;
        }
        if (total <= 0.0) {
            centers.push_back(x[rng.below(x.size())]);
            continue;
        }
        double r = rng.uniform() * total, acc = 0.0;
        std::size_t pick = x.size() - 1;
        for (std::size_t i = 0; i < x.size(); ++i) {
            acc += d2[i];
            if (acc >= r) {
                pick = i;
                break;
            }
        }
        centers.push_back(x[pick]);
    }
    return centers;
}

// Nearest centroid; ties go to the lower centroid index.
std::size_t nearest(const std::vector<double>& p, const std::vector<std::vector<double>>& centers) {
    std::size_t best = 0;
    double bd = kInf;
    for (std::size_t j = 0; j < centers.size(); ++j) {
        double d = sq_dist(p, centers[j]);
        if (d < bd) {
            bd = d;
            best = j;
        }
    }
    return best;
}

}  // namespace

KMeansResult kmeans(const CountryDataset& ds, const std::vector<std::vector<double>>& features,
                    int k, std::uint64_t seed, int max_iter, int restarts) {
    const std::size_t n = features.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ValidationError("kmeans: k out of range");
    Rng rng(derive_seed(seed, tag_of("kmeans")));

    std::vector<std::size_t> best_labels(n, 0);
    std::vector<std::vector<double>> best_centers;
    double best_dist = kInf;

    for (int r = 0; r < restarts; ++r) {
        auto centers = kmeanspp_init(features, k, rng);
        std::vector<std::size_t> labels(n, 0);
        for (int it = 0; it < max_iter; ++it) {
            bool changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                std::size_t l = nearest(features[i], centers);
                if (l != labels[i]) {
                    labels[i] = l;
                    changed = true;
                }
            }
            std::vector<std::vector<double>> next(k, std::vector<double>(features[0].size(), 0.0));
            std::vector<int> count(k, 0);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t d = 0; d < features[i].size(); ++d)
                    next[labels[i]][d] += features[i][d];
                count[labels[i]]++;
            }
            for (int j = 0; j < k; ++j) {
                if (count[j] == 0) {
                    // re-seed an emptied cluster at the point farthest from its centroid
                    std::size_t far = 0;
                    double fd = -1.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        double d = sq_dist(features[i], centers[labels[i]]);
                        if (d > fd) {
                            fd = d;
                            far = i;
                        }
                    }
                    next[j] = features[far];
                } else {
                    for (auto& v : next[j]) v /= count[j];
                }
            }
            if (!changed && next == centers) break;
            centers = std::move(next);
        }
        double dist = 0.0;
        for (std::size_t i = 0; i < n; ++i) dist += sq_dist(features[i], centers[labels[i]]);
        if (dist < best_dist) {
            best_dist = dist;
            best_labels = labels;
            best_centers = centers;
        }
    }

    KMeansResult res;
    res.distortion = n ? best_dist / static_cast<double>(n) : 0.0;
    res.centroids = std::move(best_centers);
    res.assignment.method = "kmeans";
    res.assignment.params = "k=" + std::to_string(k);
    std::set<int> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        res.assignment.labels[ds.at(i).id] = static_cast<int>(best_labels[i]);
        distinct.insert(static_cast<int>(best_labels[i]));
    }
    res.assignment.k = static_cast<int>(distinct.size());
    return res;
}

// -------------------------------------------------------------- k-medoids --

KMedoidsResult kmedoids_matrix(const CountryDataset& ds, const std::vector<double>& dist, int k,
                               const std::string& metric_name) {
    const std::size_t n = ds.size();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw ValidationError("kmedoids: k out of range");
    auto d = [&](std::size_t i, std::size_t j) { return dist[i * n + j]; };

    // BUILD: first medoid minimizes total distance, then greedy gain.
    std::vector<std::size_t> medoids;
    {
        std::size_t best = 0;
        double bs = kInf;
        for (std::size_t i = 0; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = 0; j < n; ++j) s += d(i, j);
            if (s < bs) {
                bs = s;
                best = i;
            }
        }
        medoids.push_back(best);
    }
    std::vector<double> nearest_d(n);
    auto refresh_nearest = [&] {
        for (std::size_t i = 0; i < n; ++i) {
            double b = kInf;
            for (auto m : medoids) b = std::min(b, d(i, m));
            nearest_d[i] = b;
        }
    };
    refresh_nearest();
    while (static_cast<int>(medoids.size()) < k) {
        std::size_t best = n;
        double best_gain = -kInf;
        for (std::size_t c = 0; c < n; ++c) {
            if (std::find(medoids.begin(), medoids.end(), c) != medoids.end()) continue;
            double gain = 0.0;
            for (std::size_t i = 0; i < n; ++i) gain += std::max(nearest_d[i] - d(i, c), 0.0);
            if (gain > best_gain) {
                best_gain = gain;
                best = c;
            }
        }
        medoids.push_back(best);
        refresh_nearest();
    }

    auto total_cost = [&](const std::vector<std::size_t>& ms) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double b = kInf;
            for (auto m : ms) b = std::min(b, d(i, m));
            s += b;
        }
        return s;
    };

    // SWAP: steepest improvement until fixpoint.
    double cost = total_cost(medoids);
    bool improved = true;
    while (improved) {
        improved = false;
        double best_delta = 0.0;
        std::size_t best_m = 0, best_h = 0;
        for (std::size_t mi = 0; mi < medoids.size(); ++mi) {
            for (std::size_t h = 0; h < n; ++h) {
                if (std::find(medoids.begin(), medoids.end(), h) != medoids.end()) continue;
                auto trial = medoids;
                trial[mi] = h;
                double c = total_cost(trial);
                if (cost - c > best_delta + 1e-12) {
                    best_delta = cost - c;
                    best_m = mi;
                    best_h = h;
                }
            }
        }
        if (best_delta > 0.0) {
            medoids[best_m] = best_h;
            cost = total_cost(medoids);
            improved = true;
        }
    }

    std::sort(medoids.begin(), medoids.end());
    KMedoidsResult res;
    res.total_cost = cost;
    res.assignment.method = "kmedoids";
    res.assignment.params = "k=" + std::to_string(k) + ",metric=" + metric_name;
    res.assignment.k = k;
    for (auto m : medoids) res.medoids.push_back(ds.at(m).id);
    for (std::size_t i = 0; i < n; ++i) {
        int best = 0;
        double bd = kInf;
        for (std::size_t mi = 0; mi < medoids.size(); ++mi) {
            if (d(i, medoids[mi]) < bd) {
                bd = d(i, medoids[mi]);
                best = static_cast<int>(mi);
            }
        }
        res.assignment.labels[ds.at(i).id] = best;
    }
    return res;
}

KMedoidsResult kmedoids(const CountryDataset& ds, int k, ClusterMetric metric,
                        const FeatureWeights& w) {
    const char* name = metric == ClusterMetric::Euclidean   ? "euclidean"
                       : metric == ClusterMetric::Haversine ? "haversine"
                                                            : "weighted";
    return kmedoids_matrix(ds, distance_matrix(ds, metric, w), k, name);
}

// --------------------------------------------------------------------- HAC --

HacResult hac_complete(const CountryDataset& ds, double cut_distance, ClusterMetric metric,
                       const FeatureWeights& w) {
    if (cut_distance <= 0.0) throw ValidationError("hac: cut_distance must be positive");
    const std::size_t n = ds.size();
    HacResult res;
    res.assignment.method = "hac";
    res.assignment.params = "cut=" + std::to_string(cut_distance);
    if (n == 0) return res;

    // Dense complete-linkage agglomeration; n is small enough for O(n^3).
    std::vector<double> cd = distance_matrix(ds, metric, w);
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t remaining = n; remaining > 1; --remaining) {
        double best = kInf;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::size_t j = i + 1; j < n; ++j) {
                if (!alive[j]) continue;
                if (cd[i * n + j] < best) {
                    best = cd[i * n + j];
                    bi = i;
                    bj = j;
                }
            }
        }
        res.merge_heights.push_back(best);
        // A cut at h keeps all merges with height < h.
        if (best < cut_distance) parent[find(bj)] = find(bi);
        for (std::size_t t = 0; t < n; ++t) {
            if (!alive[t] || t == bi || t == bj) continue;
            double m = std::max(cd[bi * n + t], cd[bj * n + t]);
            cd[bi * n + t] = cd[t * n + bi] = m;
        }
        alive[bj] = false;
    }

    std::map<std::size_t, int> root_label;
    for (std::size_t i = 0; i < n; ++i) {
        auto r = find(i);
        auto it = root_label.find(r);
        if (it == root_label.end())
            it = root_label.emplace(r, static_cast<int>(root_label.size())).first;
        res.assignment.labels[ds.at(i).id] = it->second;
    }
    res.assignment.k = static_cast<int>(root_label.size());
    return res;
}

// ------------------------------------------------------------------ OPTICS --

namespace {

struct SteepDownArea {
    std::size_t start, end;
    double mib;
};

}  // namespace

OpticsResult optics_xi_matrix(const std::vector<std::string>& ids, const std::vector<double>& dist,
                              int min_pts, double xi) {
    if (min_pts < 2) throw ValidationError("optics: min_pts must be >= 2");
    if (!(xi > 0.0 && xi < 1.0)) throw ValidationError("optics: xi must be in (0,1)");
    const std::size_t n = ids.size();
    OpticsResult res;
    res.assignment.method = "optics_xi";
    res.assignment.params = "min_pts=" + std::to_string(min_pts) + ",xi=" + std::to_string(xi);
    if (n == 0) return res;
    auto d = [&](std::size_t i, std::size_t j) { return dist[i * n + j]; };

    // core distance: min_pts-th nearest including the point itself
    std::vector<double> core(n, kInf);
    {
        std::vector<double> row(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) row[j] = d(i, j);
            std::nth_element(row.begin(), row.begin() + (min_pts - 1), row.end());
            core[i] = row[min_pts - 1];
        }
    }

    // ordering: next point = unprocessed with smallest reachability, ties by index
    std::vector<double> reach(n, kInf);
    std::vector<long> pred(n, -1);
    std::vector<bool> processed(n, false);
    res.ordering.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t point = n;
        double best = kInf;
        for (std::size_t i = 0; i < n; ++i) {
            if (processed[i]) continue;
            if (point == n || reach[i] < best) {
                point = i;
                best = reach[i];
            }
        }
        processed[point] = true;
        res.ordering.push_back(point);
        if (std::isfinite(core[point])) {
            for (std::size_t v = 0; v < n; ++v) {
                if (processed[v]) continue;
                double rd = std::max(d(point, v), core[point]);
                if (rd < reach[v]) {
                    reach[v] = rd;
                    pred[v] = static_cast<long>(point);
                }
            }
        }
    }
    res.reachability = reach;

    // Xi extraction over the reachability plot (with an appended infinity).
    std::vector<double> rp(n + 1);
    std::vector<long> pp(n);
    for (std::size_t i = 0; i < n; ++i) {
        rp[i] = reach[res.ordering[i]];
        pp[i] = pred[res.ordering[i]];
    }
    rp[n] = kInf;

    const double xic = 1.0 - xi;
    auto ratio = [&](std::size_t i) { return rp[i] / rp[i + 1]; };  // may be nan for inf/inf
    auto steep_up = [&](std::size_t i) {
        double r = ratio(i);
        return r <= xic;  // nan compares false
    };
    auto steep_down = [&](std::size_t i) {
        double r = ratio(i);
        return r >= 1.0 / xic;
    };
    auto upward = [&](std::size_t i) { return ratio(i) < 1.0; };
    auto downward = [&](std::size_t i) { return ratio(i) > 1.0; };

    auto extend_region = [&](auto&& steep_pred, auto&& xward_pred, std::size_t start) {
        int non_xward = 0;
        std::size_t index = start, end = start;
        while (index < n) {
            if (steep_pred(index)) {
                non_xward = 0;
                end = index;
            } else if (!xward_pred(index)) {
                ++non_xward;
                if (non_xward > min_pts) break;
            } else {
                return end;
            }
            ++index;
        }
        return end;
    };

    const std::size_t min_cluster_size = static_cast<std::size_t>(min_pts);
    std::vector<SteepDownArea> sdas;
    std::vector<std::pair<std::size_t, std::size_t>> clusters;
    std::size_t index = 0;
    double mib = 0.0;

    auto update_filter_sdas = [&](double new_mib) {
        if (std::isinf(new_mib)) {
            sdas.clear();
            return;
        }
        std::vector<SteepDownArea> kept;
        for (const auto& sda : sdas)
            if (new_mib <= rp[sda.start] * xic) kept.push_back(sda);
        for (auto& sda : kept) sda.mib = std::max(sda.mib, new_mib);
        sdas = std::move(kept);
    };

    auto correct_predecessor = [&](std::size_t s, std::size_t e, bool& ok) {
        while (s < e) {
            if (rp[s] > rp[e]) {
                ok = true;
                return std::make_pair(s, e);
            }
            long p_e = pp[e];
            bool found = false;
            for (std::size_t i = s; i < e; ++i) {
                if (p_e == static_cast<long>(res.ordering[i])) {
                    found = true;
                    break;
                }
            }
            if (found) {
                ok = true;
                return std::make_pair(s, e);
            }
            --e;
        }
        ok = false;
        return std::make_pair(std::size_t{0}, std::size_t{0});
    };

    for (std::size_t si = 0; si < n; ++si) {
        if (!(steep_up(si) || steep_down(si))) continue;
        if (si < index) continue;
        for (std::size_t t = index; t <= si; ++t) mib = std::max(mib, rp[t]);

        if (steep_down(si)) {
            update_filter_sdas(mib);
            std::size_t d_start = si;
            std::size_t d_end = extend_region(steep_down, upward, d_start);
            sdas.push_back({d_start, d_end, 0.0});
            index = d_end + 1;
            mib = rp[index];
        } else {
            update_filter_sdas(mib);
            std::size_t u_start = si;
            std::size_t u_end = extend_region(steep_up, downward, u_start);
            index = u_end + 1;
            mib = rp[index];

            std::vector<std::pair<std::size_t, std::size_t>> u_clusters;
            for (const auto& D : sdas) {
                std::size_t c_start = D.start;
                std::size_t c_end = u_end;
                if (rp[c_end + 1] * xic < D.mib) continue;
                double d_max = rp[D.start];
                if (d_max * xic >= rp[c_end + 1]) {
                    while (rp[c_start + 1] > rp[c_end + 1] && c_start < D.end) ++c_start;
                } else if (rp[c_end + 1] * xic >= d_max) {
                    while (c_end > u_start && rp[c_end - 1] > d_max) --c_end;
                }
                bool ok = true;
                std::tie(c_start, c_end) = correct_predecessor(c_start, c_end, ok);
                if (!ok) continue;
                if (c_end - c_start + 1 < min_cluster_size) continue;
                if (c_start > D.end) continue;
                if (c_end < u_start) continue;
                u_clusters.emplace_back(c_start, c_end);
            }
            std::reverse(u_clusters.begin(), u_clusters.end());
            for (auto& c : u_clusters) clusters.push_back(c);
        }
    }
    res.extracted = clusters;

    // first-fit labels: smaller clusters precede the ones that contain them
    std::vector<int> plot_labels(n, kNoiseLabel);
    int next_label = 0;
    for (const auto& [s, e] : clusters) {
        bool fresh = true;
        for (std::size_t i = s; i <= e; ++i)
            if (plot_labels[i] != kNoiseLabel) {
                fresh = false;
                break;
            }
        if (!fresh) continue;
        for (std::size_t i = s; i <= e; ++i) plot_labels[i] = next_label;
        ++next_label;
    }
    std::set<int> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        int l = plot_labels[i];
        res.assignment.labels[ids[res.ordering[i]]] = l;
        if (l != kNoiseLabel) distinct.insert(l);
    }
    res.assignment.k = static_cast<int>(distinct.size());
    return res;
}

OpticsResult optics_xi(const CountryDataset& ds, int min_pts, double xi, ClusterMetric metric,
                       const FeatureWeights& w) {
    std::vector<std::string> ids;
    for (const auto& c : ds.countries()) ids.push_back(c.id);
    return optics_xi_matrix(ids, distance_matrix(ds, metric, w), min_pts, xi);
}

// ------------------------------------------------------------------- elbow --

int knee_point(const std::vector<int>& ks, const std::vector<double>& ys, bool decreasing) {
    if (ks.size() != ys.size() || ks.empty()) throw ValidationError("knee_point: bad input");
    if (ks.size() == 1) return ks[0];
    const std::size_t m = ks.size();
    double xlo = ks.front(), xspan = ks.back() - ks.front();
    double ylo = *std::min_element(ys.begin(), ys.end());
    double yhi = *std::max_element(ys.begin(), ys.end());
    double yspan = yhi > ylo ? yhi - ylo : 1.0;
    std::vector<double> diff(m);
    for (std::size_t i = 0; i < m; ++i) {
        double xn = (ks[i] - xlo) / (xspan > 0 ? xspan : 1.0);
        double yn = (ys[i] - ylo) / yspan;
        if (decreasing) yn = 1.0 - yn;  // orient to an increasing curve
        diff[i] = yn - xn;
    }
    for (std::size_t i = 1; i + 1 < m; ++i)
        if (diff[i] >= diff[i - 1] && diff[i] >= diff[i + 1]) return ks[i];
    return ks[std::max_element(diff.begin(), diff.end()) - diff.begin()];
}

namespace {

ElbowReport elbow_scan(const CountryDataset& ds, const std::vector<std::vector<double>>& features,
                       int k_lo, int k_hi, std::uint64_t seed, bool distortion) {
    if (k_lo < 2 || k_hi < k_lo || static_cast<std::size_t>(k_hi) >= features.size())
        throw ValidationError("elbow: k range must lie within [2, n-1]");
    ElbowReport rep;
    std::vector<int> ks;
    std::vector<double> ys;
    const std::size_t n = features.size();
    for (int k = k_lo; k <= k_hi; ++k) {
        auto km = kmeans(ds, features, k, derive_seed(seed, tag_of("elbow"), k));
        double score = 0.0;
        if (distortion) {
            score = km.distortion;
        } else {
            // Calinski-Harabasz: between/within variance ratio
            std::vector<double> mean(features[0].size(), 0.0);
            for (const auto& f : features)
                for (std::size_t d = 0; d < f.size(); ++d) mean[d] += f[d];
            for (auto& v : mean) v /= static_cast<double>(n);
            double b = 0.0, wss = 0.0;
            for (int j = 0; j < k; ++j) {
                std::vector<std::size_t> members;
                for (std::size_t i = 0; i < n; ++i)
                    if (km.assignment.labels.at(ds.at(i).id) == j) members.push_back(i);
                if (members.empty()) continue;
                std::vector<double> cj(features[0].size(), 0.0);
                for (auto i : members)
                    for (std::size_t d = 0; d < features[i].size(); ++d) cj[d] += features[i][d];
                for (auto& v : cj) v /= static_cast<double>(members.size());
                b += static_cast<double>(members.size()) * sq_dist(cj, mean);
                for (auto i : members) wss += sq_dist(features[i], cj);
            }
            score = wss > 0.0 ? (b / (k - 1)) / (wss / (static_cast<double>(n) - k)) : kInf;
        }
        ks.push_back(k);
        ys.push_back(score);
        rep.scores[k] = score;
    }
    rep.chosen_k = ks.size() == 1 ? ks[0] : knee_point(ks, ys, distortion);
    return rep;
}

}  // namespace

ElbowReport elbow_distortion(const CountryDataset& ds,
                             const std::vector<std::vector<double>>& features, int k_lo, int k_hi,
                             std::uint64_t seed) {
    return elbow_scan(ds, features, k_lo, k_hi, seed, true);
}

ElbowReport elbow_calinski(const CountryDataset& ds,
                           const std::vector<std::vector<double>>& features, int k_lo, int k_hi,
                           std::uint64_t seed) {
    return elbow_scan(ds, features, k_lo, k_hi, seed, false);
}

// -------------------------------------------------------------- reference --

ClusterAssignment au_reference(const CountryDataset& ds) {
    ClusterAssignment a;
    a.method = "au";
    for (const auto& c : ds.countries()) a.labels[c.id] = static_cast<int>(c.sub_region);
    std::set<int> distinct;
    for (const auto& [_, l] : a.labels) distinct.insert(l);
    a.k = static_cast<int>(distinct.size());
    return a;
}

ComparisonReport compare_assignments(const ClusterAssignment& a, const ClusterAssignment& b) {
    if (a.labels.size() != b.labels.size())
        throw ValidationError("compare_assignments: mismatched universes");
    for (const auto& [id, _] : a.labels)
        if (!b.labels.count(id))
            throw ValidationError("compare_assignments: id '" + id + "' missing from b");
    ComparisonReport rep;
    for (const auto& [id, l] : a.labels) rep.counts_a[l]++;
    for (const auto& [id, l] : b.labels) rep.counts_b[l]++;
    std::vector<std::string> ids;
    for (const auto& [id, _] : a.labels) ids.push_back(id);
    std::size_t agree = 0, total = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        for (std::size_t j = i + 1; j < ids.size(); ++j) {
            bool same_a = a.labels.at(ids[i]) == a.labels.at(ids[j]);
            bool same_b = b.labels.at(ids[i]) == b.labels.at(ids[j]);
            agree += (same_a == same_b);
            ++total;
        }
    }
    rep.agreement = total ? static_cast<double>(agree) / static_cast<double>(total) : 1.0;
    return rep;
}

void export_assignment(const ClusterAssignment& a, std::ostream& out) {
    out << "country_id,method,label\n";
    for (const auto& [id, l] : a.labels) out << id << ',' << a.method << ',' << l << '\n';
}

void export_elbow(const ElbowReport& r, std::ostream& out) {
    out << "k,score,chosen\n";
    char buf[64];
    for (const auto& [k, s] : r.scores) {
        std::snprintf(buf, sizeof(buf), "%.9f", s);
        out << k << ',' << buf << ',' << (k == r.chosen_k ? 1 : 0) << '\n';
    }
}

}  // namespace africa3
