#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "africa3/dataset.hpp"

namespace africa3 {

// Prime-gateway selection and per-cluster routing sets. The desert set lists
// the Sahara countries whose trails are discouraged; the neutral set holds
// gateway-grade Sahara countries where boost and stench cancel out, so they
// belong to neither the encouraged nor the discouraged set for a run.
struct GatewayConfig {
    int pcg_threshold = 5;
    std::set<std::string> desert_set = {"chad",    "mali",   "mauritania", "niger",
                                        "sudan",   "tunisia", "western_sahara"};
    std::set<std::string> neutral_set = {"algeria", "egypt", "libya"};
};

// G and U of one routing run: ants terminate at (and are boosted toward) the
// gateways; the ldts ("less desirable trails") carry the stench.
struct ClusterRoutingSpec {
    int cluster_label = 0;
    std::set<std::string> gateways;  // set G
    std::set<std::string> ldts;      // set U
};

std::set<std::string> select_pcgs(const std::map<std::string, int>& landings, int threshold);

// Gateways of one cluster: members that are PCGs; if none, the member with the
// most landings (then most data centres, then lowest id).
std::set<std::string> cluster_gateways(const std::vector<std::string>& members,
                                       const std::set<std::string>& pcgs,
                                       const CountryDataset& ds);

// Desert members not serving as gateways and not declared neutral.
std::set<std::string> cluster_ldts(const std::vector<std::string>& members,
                                   const std::set<std::string>& gateways,
                                   const GatewayConfig& config);

}  // namespace africa3
