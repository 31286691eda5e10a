#include "africa3/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "africa3/errors.hpp"

namespace africa3 {

void FeatureWeights::validate() const {
    if (alpha < 0 || beta < 0 || gamma < 0)
        throw ValidationError("feature weights must be non-negative");
    // The published defaults are 0.33/0.33/0.33, which sum to 0.99; accept
    // anything within 0.011 of one so those defaults remain valid.
    if (std::abs(alpha + beta + gamma - 1.0) > 0.011)
        throw ValidationError("feature weights must sum to 1");
}

std::vector<double> min_max_normalize(const std::vector<double>& values) {
    if (values.empty()) throw ValidationError("min_max_normalize: empty input");
    double lo = values[0], hi = values[0];
    for (double v : values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::vector<double> out;
    out.reserve(values.size());
    if (hi <= lo) {
        out.assign(values.size(), 0.0);
        return out;
    }
    for (double v : values) out.push_back((v - lo) / (hi - lo));
    return out;
}

NormalizedFeatures::NormalizedFeatures(const CountryDataset& ds,
                                       const std::vector<std::string>& active_ids,
                                       NormScope scope, int dc_sign)
    : active_(active_ids), scope_(scope), dc_sign_(dc_sign) {
    if (active_.empty()) throw ValidationError("NormalizedFeatures: empty active set");
    for (std::size_t i = 0; i < active_.size(); ++i) {
        if (!ds.contains(active_[i])) throw ValidationError("unknown id '" + active_[i] + "'");
        index_[active_[i]] = i;
    }

    // Population / DC bounds always come from the full dataset.
    q_bounds_ = {static_cast<double>(ds.at(std::size_t{0}).population),
                 static_cast<double>(ds.at(std::size_t{0}).population)};
    c_bounds_ = {static_cast<double>(ds.at(std::size_t{0}).dc_count),
                 static_cast<double>(ds.at(std::size_t{0}).dc_count)};
    for (const auto& c : ds.countries()) {
        q_bounds_.min = std::min(q_bounds_.min, static_cast<double>(c.population));
        q_bounds_.max = std::max(q_bounds_.max, static_cast<double>(c.population));
        c_bounds_.min = std::min(c_bounds_.min, static_cast<double>(c.dc_count));
        c_bounds_.max = std::max(c_bounds_.max, static_cast<double>(c.dc_count));
    }

    const std::size_t n = active_.size();
    q_.resize(n);
    c_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& c = ds.at(active_[i]);
        q_[i] = q_bounds_.max > q_bounds_.min
                    ? (static_cast<double>(c.population) - q_bounds_.min) / q_bounds_.span()
                    : 0.0;
        c_[i] = c_bounds_.max > c_bounds_.min
                    ? (static_cast<double>(c.dc_count) - c_bounds_.min) / c_bounds_.span()
                    : 0.0;
    }

    // Haversine bounds over the active set (Cluster) or the whole dataset (Global).
    auto pair_bounds = [](const std::vector<const Country*>& cs) {
        Bounds b{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
        for (std::size_t i = 0; i < cs.size(); ++i)
            for (std::size_t j = i + 1; j < cs.size(); ++j) {
                double d = haversine(cs[i]->centroid, cs[j]->centroid);
                b.min = std::min(b.min, d);
                b.max = std::max(b.max, d);
            }
        return b;
    };
    std::vector<const Country*> scope_set;
    if (scope == NormScope::Global) {
        for (const auto& c : ds.countries()) scope_set.push_back(&c);
    } else {
        for (const auto& id : active_) scope_set.push_back(&ds.at(id));
    }
    if (scope_set.size() < 2) {
        h_bounds_ = {0.0, 0.0};
    } else {
        h_bounds_ = pair_bounds(scope_set);
    }

    h_.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& a = ds.at(active_[i]).centroid;
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double d = haversine(a, ds.at(active_[j]).centroid);
            double v = h_bounds_.max > h_bounds_.min ? (d - h_bounds_.min) / h_bounds_.span() : 0.0;
            h_[i * n + j] = std::clamp(v, 0.0, 1.0);
        }
    }
}

std::size_t NormalizedFeatures::local_index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ValidationError("id '" + id + "' not in active set");
    return it->second;
}

double NormalizedFeatures::q(const std::string& id) const { return q_[local_index(id)]; }
double NormalizedFeatures::c(const std::string& id) const { return c_[local_index(id)]; }

double NormalizedFeatures::h(const std::string& s, const std::string& d) const {
    return h_at(local_index(s), local_index(d));
}

double weighted_distance(const std::string& s, const std::string& d, const FeatureWeights& w,
                         const NormalizedFeatures& nf) {
    if (s == d) throw ValidationError("weighted_distance: source equals destination");
    const std::size_t si = nf.local_index(s), di = nf.local_index(d);
    return w.alpha * nf.h_at(si, di) + w.beta * nf.q_at(di) +
           nf.dc_sign() * w.gamma * nf.c_at(di);
}

double weighted_metric(const std::string& s, const std::string& d, const FeatureWeights& w,
                       const NormalizedFeatures& nf) {
    const std::size_t si = nf.local_index(s), di = nf.local_index(d);
    if (si == di) return 0.0;
    return w.alpha * nf.h_at(si, di) + w.beta * std::abs(nf.q_at(si) - nf.q_at(di)) +
           w.gamma * std::abs(nf.c_at(si) - nf.c_at(di));
}

}  // namespace africa3
