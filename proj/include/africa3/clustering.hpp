#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "africa3/dataset.hpp"
#include "africa3/metrics.hpp"

namespace africa3 {

inline constexpr int kNoiseLabel = -1;

struct ClusterAssignment {
    std::map<std::string, int> labels;  // country id -> label (kNoiseLabel for noise)
    int k = 0;                          // number of distinct non-noise labels
    std::string method;
    std::string params;

    std::vector<std::vector<std::string>> groups() const;  // non-noise clusters, by label
    std::vector<std::string> members_of(int label) const;
};

enum class ClusterMetric { Euclidean, Haversine, Weighted };

// Pairwise distance matrix over the dataset rows for the chosen metric.
// Weighted uses the symmetric form of the route cost with global bounds.
std::vector<double> distance_matrix(const CountryDataset& ds, ClusterMetric metric,
                                    const FeatureWeights& w);

// -------- K-Means (Lloyd, k-means++ seeding, restarts keep best distortion) --------

struct KMeansResult {
    ClusterAssignment assignment;
    double distortion = 0.0;  // mean within-cluster squared distance
    std::vector<std::vector<double>> centroids;
};

KMeansResult kmeans(const CountryDataset& ds, const std::vector<std::vector<double>>& features,
                    int k, std::uint64_t seed, int max_iter = 300, int restarts = 20);

std::vector<std::vector<double>> geo_features(const CountryDataset& ds);

// -------- K-Medoids (PAM: deterministic BUILD, then best-improvement SWAP) --------

struct KMedoidsResult {
    ClusterAssignment assignment;
    std::vector<std::string> medoids;
    double total_cost = 0.0;  // sum of distances to assigned medoids
};

KMedoidsResult kmedoids(const CountryDataset& ds, int k, ClusterMetric metric,
                        const FeatureWeights& w = {});
KMedoidsResult kmedoids_matrix(const CountryDataset& ds, const std::vector<double>& dist, int k,
                               const std::string& metric_name);

// -------- Hierarchical agglomerative clustering, complete linkage --------

struct HacResult {
    ClusterAssignment assignment;
    std::vector<double> merge_heights;  // non-decreasing for complete linkage
};

// A cut at `cut_distance` keeps every merge with height < cut_distance.
HacResult hac_complete(const CountryDataset& ds, double cut_distance, ClusterMetric metric,
                       const FeatureWeights& w = {});

// -------- OPTICS with Xi cluster extraction --------

struct OpticsResult {
    ClusterAssignment assignment;              // leaf clusters; noise = kNoiseLabel
    std::vector<std::size_t> ordering;         // reachability ordering (dataset indices)
    std::vector<double> reachability;          // by dataset index
    std::vector<std::pair<std::size_t, std::size_t>> extracted;  // xi clusters [start,end] in ordering
};

OpticsResult optics_xi(const CountryDataset& ds, int min_pts, double xi, ClusterMetric metric,
                       const FeatureWeights& w = {});

// Generic entry used by tests: any symmetric distance matrix.
OpticsResult optics_xi_matrix(const std::vector<std::string>& ids, const std::vector<double>& dist,
                              int min_pts, double xi);

// -------- Elbow methods --------

struct ElbowReport {
    std::map<int, double> scores;
    int chosen_k = 0;
};

ElbowReport elbow_distortion(const CountryDataset& ds,
                             const std::vector<std::vector<double>>& features, int k_lo, int k_hi,
                             std::uint64_t seed);
ElbowReport elbow_calinski(const CountryDataset& ds,
                           const std::vector<std::vector<double>>& features, int k_lo, int k_hi,
                           std::uint64_t seed);

// Kneedle-style knee pick on a score curve (normalized difference curve,
// first interior local maximum).
int knee_point(const std::vector<int>& ks, const std::vector<double>& ys, bool decreasing);

// -------- Reference partition and comparisons --------

ClusterAssignment au_reference(const CountryDataset& ds);

struct ComparisonReport {
    std::map<int, int> counts_a;  // label -> member count
    std::map<int, int> counts_b;
    double agreement = 0.0;  // fraction of pairs on which both partitions agree
};

ComparisonReport compare_assignments(const ClusterAssignment& a, const ClusterAssignment& b);

void export_assignment(const ClusterAssignment& a, std::ostream& out);
void export_elbow(const ElbowReport& r, std::ostream& out);

}  // namespace africa3
