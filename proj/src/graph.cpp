#include "africa3/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "africa3/errors.hpp"

namespace africa3 {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::pair<std::string, std::string> sorted_pair(std::string a, std::string b) {
    if (b < a) std::swap(a, b);
    return {std::move(a), std::move(b)};
}

}  // namespace

AdjacencyGraph::AdjacencyGraph(std::set<std::string> nodes,
                               std::set<std::pair<std::string, std::string>> edges,
                               AdjacencyMode mode)
    : nodes_(std::move(nodes)), edges_(std::move(edges)), mode_(mode) {
    for (const auto& n : nodes_) adj_[n];
    for (const auto& [a, b] : edges_) {
        if (a == b) throw ValidationError("self-loop on '" + a + "'");
        if (!nodes_.count(a) || !nodes_.count(b))
            throw ValidationError("edge endpoint not in node set: " + a + "," + b);
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& [_, nb] : adj_) std::sort(nb.begin(), nb.end());
}

bool AdjacencyGraph::has_edge(const std::string& a, const std::string& b) const {
    return edges_.count(sorted_pair(a, b)) != 0;
}

const std::vector<std::string>& AdjacencyGraph::neighbors(const std::string& id) const {
    auto it = adj_.find(id);
    if (it == adj_.end()) throw ValidationError("node '" + id + "' not in graph");
    return it->second;
}

bool AdjacencyGraph::connected() const {
    if (nodes_.empty()) return true;
    std::set<std::string> seen{*nodes_.begin()};
    std::vector<std::string> stack{*nodes_.begin()};
    while (!stack.empty()) {
        auto u = stack.back();
        stack.pop_back();
        for (const auto& v : neighbors(u))
            if (seen.insert(v).second) stack.push_back(v);
    }
    return seen.size() == nodes_.size();
}

AdjacencyGraph AdjacencyGraph::induced(const std::vector<std::string>& members,
                                       bool complete) const {
    std::set<std::string> mset(members.begin(), members.end());
    for (const auto& m : mset)
        if (!nodes_.count(m)) throw ValidationError("member '" + m + "' not in graph");
    std::set<std::pair<std::string, std::string>> sub;
    if (complete) {
        for (auto it = mset.begin(); it != mset.end(); ++it)
            for (auto jt = std::next(it); jt != mset.end(); ++jt) sub.insert({*it, *jt});
    } else {
        for (const auto& e : edges_)
            if (mset.count(e.first) && mset.count(e.second)) sub.insert(e);
    }
    return AdjacencyGraph(std::move(mset), std::move(sub),
                          complete ? AdjacencyMode::Complete : mode_);
}

EdgeList load_edge_list(std::istream& in) {
    EdgeList out;
    std::string line;
    int row = 0;
    bool header = true;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ValidationError("row " + std::to_string(row) + ": expected a,b");
        out.emplace_back(trim(line.substr(0, comma)), trim(line.substr(comma + 1)));
    }
    return out;
}

EdgeList load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return load_edge_list(in);
}

AdjacencyGraph build_adjacency(const CountryDataset& ds, AdjacencyMode mode,
                               const EdgeList& borders, const EdgeList& maritime_links) {
    std::set<std::string> nodes;
    for (const auto& c : ds.countries()) nodes.insert(c.id);
    std::set<std::pair<std::string, std::string>> edges;
    if (mode == AdjacencyMode::Complete) {
        for (auto it = nodes.begin(); it != nodes.end(); ++it)
            for (auto jt = std::next(it); jt != nodes.end(); ++jt) edges.insert({*it, *jt});
    } else {
        for (const auto* list : {&borders, &maritime_links}) {
            for (const auto& [a, b] : *list) {
                if (!ds.contains(a) || !ds.contains(b))
                    throw ValidationError("edge endpoint does not resolve: " + a + "," + b);
                edges.insert(sorted_pair(a, b));
            }
        }
    }
    return AdjacencyGraph(std::move(nodes), std::move(edges), mode);
}

}  // namespace africa3
