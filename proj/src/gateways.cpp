#include "africa3/gateways.hpp"

#include "africa3/errors.hpp"

namespace africa3 {

std::set<std::string> select_pcgs(const std::map<std::string, int>& landings, int threshold) {
    std::set<std::string> out;
    for (const auto& [id, count] : landings)
        if (count >= threshold) out.insert(id);
    return out;
}

std::set<std::string> cluster_gateways(const std::vector<std::string>& members,
                                       const std::set<std::string>& pcgs,
                                       const CountryDataset& ds) {
    if (members.empty()) throw ValidationError("cluster_gateways: empty cluster");
    std::set<std::string> found;
    for (const auto& m : members)
        if (pcgs.count(m)) found.insert(m);
    if (!found.empty()) return found;

    // fallback: most landings, then most data centres, then lowest id
    const std::string* best = nullptr;
    for (const auto& m : members) {
        const auto& c = ds.at(m);
        if (!best) {
            best = &m;
            continue;
        }
        const auto& b = ds.at(*best);
        if (c.landings > b.landings ||
            (c.landings == b.landings && c.dc_count > b.dc_count) ||
            (c.landings == b.landings && c.dc_count == b.dc_count && m < *best)) {
            best = &m;
        }
    }
    return {*best};
}

std::set<std::string> cluster_ldts(const std::vector<std::string>& members,
                                   const std::set<std::string>& gateways,
                                   const GatewayConfig& config) {
    std::set<std::string> out;
    for (const auto& m : members) {
        if (!config.desert_set.count(m)) continue;
        if (gateways.count(m)) continue;
        if (config.neutral_set.count(m)) continue;
        out.insert(m);
    }
    return out;
}

}  // namespace africa3
