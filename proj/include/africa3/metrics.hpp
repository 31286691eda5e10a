#pragma once

#include <string>
#include <vector>

#include "africa3/dataset.hpp"

namespace africa3 {

struct FeatureWeights {
    double alpha = 0.33;  // distance
    double beta = 0.33;   // population
    double gamma = 0.33;  // data-centre count

    void validate() const;  // non-negative, sum within 1e-9 of... see notes
};

enum class NormScope { Cluster, Global };

struct Bounds {
    double min = 0.0;
    double max = 0.0;
    double span() const { return max > min ? max - min : 1.0; }
};

// min-max to [0,1]; a constant list maps to all zeros.
std::vector<double> min_max_normalize(const std::vector<double>& values);

// Normalized features over an active node set. Population and DC counts are
// normalized over the full dataset (so "max population" means Nigeria in any
// context); the pairwise haversine bounds come from the active set when the
// scope is Cluster, or from the full dataset when Global.
class NormalizedFeatures {
  public:
    NormalizedFeatures(const CountryDataset& ds, const std::vector<std::string>& active_ids,
                       NormScope scope, int dc_sign = +1);

    double q(const std::string& id) const;     // normalized population of id
    double c(const std::string& id) const;     // normalized dc_count of id
    double h(const std::string& s, const std::string& d) const;  // normalized haversine

    const Bounds& h_bounds() const { return h_bounds_; }
    const Bounds& q_bounds() const { return q_bounds_; }
    const Bounds& c_bounds() const { return c_bounds_; }
    NormScope scope() const { return scope_; }
    int dc_sign() const { return dc_sign_; }
    const std::vector<std::string>& active_ids() const { return active_; }

    std::size_t local_index(const std::string& id) const;
    double h_at(std::size_t i, std::size_t j) const { return h_[i * active_.size() + j]; }
    double q_at(std::size_t i) const { return q_[i]; }
    double c_at(std::size_t i) const { return c_[i]; }

  private:
    std::vector<std::string> active_;
    std::map<std::string, std::size_t> index_;
    std::vector<double> h_;  // dense pairwise over active set
    std::vector<double> q_;
    std::vector<double> c_;
    Bounds h_bounds_, q_bounds_, c_bounds_;
    NormScope scope_ = NormScope::Cluster;
    int dc_sign_ = +1;
};

// Per-hop route cost: alpha * H_sd + beta * Q_d + sign * gamma * C_d.
// Not symmetric; the destination's population and DC terms drive the cost.
double weighted_distance(const std::string& s, const std::string& d, const FeatureWeights& w,
                         const NormalizedFeatures& nf);

// Symmetric form used as a clustering metric:
// alpha * H_sd + beta * |Q_s - Q_d| + gamma * |C_s - C_d|.
double weighted_metric(const std::string& s, const std::string& d, const FeatureWeights& w,
                       const NormalizedFeatures& nf);

}  // namespace africa3
